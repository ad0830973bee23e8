#pragma once

#include <vector>

#include "core/rational.hpp"

namespace cuthex {

using Mat = std::vector<std::vector<Rat>>;

Rat mat_det(Mat a);
Mat mat_inverse(const Mat& a);  // throws std::domain_error when singular
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_identity(size_t n);
Mat mat_transpose(const Mat& a);

}  // namespace cuthex
