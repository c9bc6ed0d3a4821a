#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace waring {

// Exact arbitrary-precision rational, always in lowest terms with positive
// denominator (mpq_class keeps results canonical; constructors must call
// canonicalize, which rat() does for you).
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer binomial(unsigned n, unsigned k);

// n (n-1) ... (n-k+1); zero when k > n.
Integer falling_factorial(unsigned n, unsigned k);

// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);

// Accepts "p" and "p/q"; throws InputError on malformed input or q = 0.
Rational rational_from_string(const std::string& s);

// E_i(values): sum of all products of i-element subsets. E_0 = 1.
Rational elementary_symmetric(const std::vector<Rational>& values, std::size_t i);

}  // namespace waring
