#include "core/rational.hpp"

namespace cuthex {

Rat parse_rat(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = t.find('/');
    try {
        if (slash == std::string::npos) {
            Rat r(t);
            r.canonicalize();
            return r;
        }
        Int num(t.substr(0, slash));
        Int den(t.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return rat(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
}

std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double rat_to_double(const Rat& r) { return r.get_d(); }

Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    Int f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

Rat inv_factorial(long n) {
    if (n < 0) return Rat(0);
    return rat(Int(1), factorial(n));
}

Int binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return Int(0);
    k = std::min(k, n - k);
    Int num = 1, den = 1;
    for (long i = 1; i <= k; ++i) {
        num *= (n - k + i);
        den *= i;
    }
    return num / den;
}

Rat pochhammer(const Rat& a, long n) {
    if (n < 0) throw std::invalid_argument("pochhammer with negative length");
    Rat p(1);
    Rat term = a;
    for (long i = 0; i < n; ++i) {
        p *= term;
        term += 1;
    }
    return p;
}

Int pochhammer_int(long a, long n) {
    if (n < 0) throw std::invalid_argument("pochhammer with negative length");
    Int p = 1;
    for (long i = 0; i < n; ++i) p *= (a + i);
    return p;
}

Rat rat_pow(const Rat& q, long e) {
    if (e == 0) return Rat(1);
    bool inv = e < 0;
    unsigned long k = static_cast<unsigned long>(inv ? -e : e);
    Rat base = q, acc(1);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    if (inv) {
        if (acc == 0) throw std::domain_error("zero to a negative power");
        acc = 1 / acc;
    }
    return acc;
}

}  // namespace cuthex
