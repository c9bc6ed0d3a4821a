#pragma once

#include <string>
#include <utility>
#include <vector>

#include "waring/errors.hpp"
#include "waring/rational.hpp"
#include "waring/unipoly.hpp"

namespace waring {

// Homogeneous polynomial in two variables, plain monomial basis (no binomial
// scaling): coeff(j) multiplies v0^{d-j} v1^j. The same representation plays
// two roles -- forms in x0, x1 and differential operators in y0, y1 -- kept
// apart by the tag so they cannot be mixed up in signatures.
template <typename Tag>
class BiPoly {
  public:
    BiPoly() : c_(1) {}
    explicit BiPoly(int degree) : c_(check_degree(degree) + 1) {}
    BiPoly(int degree, std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        if (static_cast<int>(c_.size()) != check_degree(degree) + 1)
            throw InputError("coefficient list length must be degree + 1");
    }

    // v0^a v1^b
    static BiPoly monomial(int a, int b) {
        BiPoly m(a + b);
        m.c_[static_cast<std::size_t>(b)] = 1;
        return m;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& coeff(int j) const { return c_.at(static_cast<std::size_t>(j)); }
    Rational& coeff(int j) { return c_.at(static_cast<std::size_t>(j)); }

    bool is_zero() const {
        for (const Rational& c : c_)
            if (c != 0) return false;
        return true;
    }

    // f(t) = sum_j coeff(j) t^j, i.e. v0 set to 1 with t standing for v1.
    UniPoly dehomogenize() const { return UniPoly(c_); }

    // Swap the two variables: coefficient j moves to d - j.
    BiPoly transpose() const {
        BiPoly r(degree());
        for (int j = 0; j <= degree(); ++j) r.c_[static_cast<std::size_t>(degree() - j)] = c_[static_cast<std::size_t>(j)];
        return r;
    }

    BiPoly operator+(const BiPoly& rhs) const {
        require_same_degree(rhs);
        BiPoly r(*this);
        for (std::size_t j = 0; j < c_.size(); ++j) r.c_[j] += rhs.c_[j];
        return r;
    }
    BiPoly operator-(const BiPoly& rhs) const {
        require_same_degree(rhs);
        BiPoly r(*this);
        for (std::size_t j = 0; j < c_.size(); ++j) r.c_[j] -= rhs.c_[j];
        return r;
    }
    BiPoly operator*(const Rational& s) const {
        BiPoly r(*this);
        for (Rational& c : r.c_) c *= s;
        return r;
    }
    BiPoly operator*(const BiPoly& rhs) const {
        BiPoly r(degree() + rhs.degree());
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < rhs.c_.size(); ++j) r.c_[i + j] += c_[i] * rhs.c_[j];
        return r;
    }
    bool operator==(const BiPoly& rhs) const { return c_ == rhs.c_; }

  private:
    static int check_degree(int d) {
        if (d < 0) throw InputError("negative degree");
        return d;
    }
    void require_same_degree(const BiPoly& rhs) const {
        if (degree() != rhs.degree()) throw InputError("degree mismatch");
    }
    std::vector<Rational> c_;
};

struct FormTag;
struct OpTag;

// F in S_d, variables x0, x1.
using BinaryForm = BiPoly<FormTag>;
// Differential operator in T, y0 = d/dx0, y1 = d/dx1.
using DiffOp = BiPoly<OpTag>;

// c0*x0 + c1*x1, normalized so the first nonzero coordinate is 1 (canonical
// representative of the projective point).
struct LinearForm {
    Rational c0, c1;
    LinearForm(Rational a, Rational b) : c0(std::move(a)), c1(std::move(b)) {
        if (c0 != 0) {
            c1 /= c0;
            c0 = 1;
        } else if (c1 != 0) {
            c1 = 1;
        } else {
            throw InputError("zero linear form");
        }
    }
    bool operator==(const LinearForm& rhs) const = default;
};

// Coefficient vector of (c0*x0 + c1*x1)^d: entry j is C(d,j) c0^{d-j} c1^j.
BinaryForm expand_power(const LinearForm& L, int d);

// F(p*x0 + q*x1, r*x0 + s*x1); the substitution need not be invertible.
BinaryForm substitute(const BinaryForm& F, const Rational& p, const Rational& q, const Rational& r,
                      const Rational& s);

std::string format_bipoly(const std::vector<Rational>& coeffs, const std::string& v0, const std::string& v1);

inline std::string format_form(const BinaryForm& F) { return format_bipoly(F.coeffs(), "x0", "x1"); }
inline std::string format_op(const DiffOp& op) { return format_bipoly(op.coeffs(), "y0", "y1"); }

}  // namespace waring
