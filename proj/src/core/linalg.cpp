#include "core/linalg.hpp"

#include <stdexcept>

namespace cuthex {

Rat mat_det(Mat a) {
    size_t n = a.size();
    Rat det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (size_t row = col + 1; row < n; ++row) {
            if (a[row][col] == 0) continue;
            Rat f = a[row][col] / a[col][col];
            for (size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
        }
    }
    return det;
}

Mat mat_inverse(const Mat& a) {
    size_t n = a.size();
    Mat m = a;
    Mat inv = mat_identity(n);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw std::domain_error("singular matrix");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rat p = m[col][col];
        for (size_t k = 0; k < n; ++k) {
            m[col][k] /= p;
            inv[col][k] /= p;
        }
        for (size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            Rat f = m[row][col];
            for (size_t k = 0; k < n; ++k) {
                m[row][k] -= f * m[col][k];
                inv[row][k] -= f * inv[col][k];
            }
        }
    }
    return inv;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Mat r(n, std::vector<Rat>(m, Rat(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
        }
    return r;
}

Mat mat_identity(size_t n) {
    Mat r(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) r[i][i] = 1;
    return r;
}

Mat mat_transpose(const Mat& a) {
    if (a.empty()) return {};
    Mat r(a[0].size(), std::vector<Rat>(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
    return r;
}

}  // namespace cuthex
