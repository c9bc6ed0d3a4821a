#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "waring/rational.hpp"

namespace waring {

inline constexpr mpfr_prec_t kDefaultPrecision = 128;

// Thin RAII wrapper over mpfr_t. Every value carries its working precision;
// binary operations compute at the larger of the two operand precisions.
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t prec = kDefaultPrecision) : prec_(prec) {
        mpfr_init2(v_, prec_);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(const Rational& q, mpfr_prec_t prec) : prec_(prec) {
        mpfr_init2(v_, prec_);
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }
    BigFloat(long n, mpfr_prec_t prec) : prec_(prec) {
        mpfr_init2(v_, prec_);
        mpfr_set_si(v_, n, MPFR_RNDN);
    }
    BigFloat(const BigFloat& o) : prec_(o.prec_) {
        mpfr_init2(v_, prec_);
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept : prec_(o.prec_) {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(BigFloat o) noexcept {
        std::swap(prec_, o.prec_);
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_prec_t precision() const { return prec_; }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    BigFloat operator-() const;
    BigFloat operator+(const BigFloat& rhs) const;
    BigFloat operator-(const BigFloat& rhs) const;
    BigFloat operator*(const BigFloat& rhs) const;
    BigFloat operator/(const BigFloat& rhs) const;
    BigFloat& operator+=(const BigFloat& rhs) { return *this = *this + rhs; }
    BigFloat& operator-=(const BigFloat& rhs) { return *this = *this - rhs; }
    BigFloat& operator*=(const BigFloat& rhs) { return *this = *this * rhs; }

    int compare(const BigFloat& rhs) const { return mpfr_cmp(v_, rhs.v_); }
    bool operator==(const BigFloat& rhs) const { return compare(rhs) == 0; }
    bool operator<(const BigFloat& rhs) const { return compare(rhs) < 0; }
    bool less_than(double x) const { return mpfr_cmp_d(v_, x) < 0; }
    bool at_most(double x) const { return mpfr_cmp_d(v_, x) <= 0; }

    BigFloat abs() const;

    static BigFloat pi(mpfr_prec_t prec);
    // cos/sin of 2*pi*k/n, computed at `prec`.
    static std::pair<BigFloat, BigFloat> cos_sin_2pi(long k, long n, mpfr_prec_t prec);

    // Decimal scientific string with enough digits to round-trip exactly at
    // the recorded precision; "0" for zero.
    std::string str() const;
    static BigFloat from_string(const std::string& s, mpfr_prec_t prec);

  private:
    mpfr_prec_t prec_;
    mpfr_t v_;
};

BigFloat max(const BigFloat& a, const BigFloat& b);

// Complex scalar on two BigFloats of equal recorded precision.
struct Complex {
    BigFloat re, im;

    explicit Complex(mpfr_prec_t prec = kDefaultPrecision) : re(prec), im(prec) {}
    Complex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    Complex(const Rational& q, mpfr_prec_t prec) : re(q, prec), im(prec) {}

    mpfr_prec_t precision() const { return std::max(re.precision(), im.precision()); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    Complex operator-() const { return {-re, -im}; }
    Complex operator+(const Complex& z) const { return {re + z.re, im + z.im}; }
    Complex operator-(const Complex& z) const { return {re - z.re, im - z.im}; }
    Complex operator*(const Complex& z) const { return {re * z.re - im * z.im, re * z.im + im * z.re}; }
    Complex operator/(const Complex& z) const;
    Complex& operator+=(const Complex& z) { return *this = *this + z; }
    Complex& operator-=(const Complex& z) { return *this = *this - z; }
    Complex& operator*=(const Complex& z) { return *this = *this * z; }

    BigFloat abs() const;
};

}  // namespace waring
