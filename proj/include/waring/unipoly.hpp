#pragma once

#include <initializer_list>
#include <vector>

#include "waring/rational.hpp"

namespace waring {

// Dense univariate polynomial over the rationals. coeffs()[j] is the
// coefficient of x^j; the zero polynomial is the empty list and otherwise
// the leading coefficient is nonzero.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    UniPoly(std::initializer_list<Rational> coeffs);

    static UniPoly constant(const Rational& c);
    // Monic polynomial whose root multiset is exactly `roots`.
    static UniPoly from_roots(const std::vector<Rational>& roots);

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    // Zero beyond the stored range.
    Rational coeff(int j) const;
    const Rational& leading() const;

    Rational operator()(const Rational& t) const;

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& rhs) const;
    UniPoly operator-(const UniPoly& rhs) const;
    UniPoly operator*(const UniPoly& rhs) const;
    UniPoly operator*(const Rational& s) const;
    bool operator==(const UniPoly& rhs) const { return c_ == rhs.c_; }

    UniPoly derivative() const;
    UniPoly monic() const;

    // Euclidean division; returns {quotient, remainder}, rhs nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& rhs) const;

  private:
    void trim();
    std::vector<Rational> c_;
};

// Monic gcd over Q.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

// p / gcd(p, p'), made monic. p must be nonzero.
UniPoly squarefree_part(const UniPoly& p);
bool is_squarefree(const UniPoly& p);

}  // namespace waring
