#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cuthex {

// All exact arithmetic in the library runs on GMP rationals in canonical form.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "a", "a/b", or "-a/b". Throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& s);

// Canonical "num/den" (den > 0, omitted when 1).
std::string rat_to_string(const Rat& r);

double rat_to_double(const Rat& r);

Int factorial(long n);  // n >= 0

// 1/n! with the Gamma-function convention 1/n! = 0 for n < 0. This is the form
// the kernel prefactors use: a negative factorial argument kills the term.
Rat inv_factorial(long n);

Int binomial(long n, long k);  // 0 for k < 0 or k > n (n >= 0)

// Rising factorial a(a+1)...(a+n-1); n >= 0, empty product = 1.
Rat pochhammer(const Rat& a, long n);
Int pochhammer_int(long a, long n);

inline bool is_int(const Rat& r) { return r.get_den() == 1; }

inline long to_long(const Rat& r) {
    if (!is_int(r)) throw std::logic_error("rational is not an integer");
    return static_cast<long>(r.get_num().get_si());
}

// q^e for integral e of either sign (q != 0 when e < 0).
Rat rat_pow(const Rat& q, long e);

}  // namespace cuthex
