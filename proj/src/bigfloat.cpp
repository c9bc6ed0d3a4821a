#include "waring/bigfloat.hpp"

#include <algorithm>
#include <cmath>

#include "waring/errors.hpp"

namespace waring {

namespace {
mpfr_prec_t joint(const BigFloat& a, const BigFloat& b) {
    return std::max(a.precision(), b.precision());
}
}  // namespace

BigFloat BigFloat::operator-() const {
    BigFloat r(prec_);
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator+(const BigFloat& rhs) const {
    BigFloat r(joint(*this, rhs));
    mpfr_add(r.v_, v_, rhs.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator-(const BigFloat& rhs) const {
    BigFloat r(joint(*this, rhs));
    mpfr_sub(r.v_, v_, rhs.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator*(const BigFloat& rhs) const {
    BigFloat r(joint(*this, rhs));
    mpfr_mul(r.v_, v_, rhs.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::operator/(const BigFloat& rhs) const {
    BigFloat r(joint(*this, rhs));
    mpfr_div(r.v_, v_, rhs.v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::abs() const {
    BigFloat r(prec_);
    mpfr_abs(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pi(mpfr_prec_t prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

std::pair<BigFloat, BigFloat> BigFloat::cos_sin_2pi(long k, long n, mpfr_prec_t prec) {
    // guard digits so the division by n does not show up in the result
    BigFloat angle(prec + 32);
    mpfr_const_pi(angle.v_, MPFR_RNDN);
    mpfr_mul_si(angle.v_, angle.v_, 2 * k, MPFR_RNDN);
    mpfr_div_si(angle.v_, angle.v_, n, MPFR_RNDN);
    BigFloat c(prec), s(prec);
    mpfr_sin_cos(s.v_, c.v_, angle.v_, MPFR_RNDN);
    return {std::move(c), std::move(s)};
}

std::string BigFloat::str() const {
    if (is_zero()) return "0";
    long digits = static_cast<long>(std::ceil(static_cast<double>(prec_) * 0.30103)) + 3;
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Re", static_cast<int>(digits), v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

BigFloat BigFloat::from_string(const std::string& s, mpfr_prec_t prec) {
    BigFloat r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw InputError("malformed decimal literal: " + s);
    return r;
}

BigFloat max(const BigFloat& a, const BigFloat& b) { return a < b ? b : a; }

Complex Complex::operator/(const Complex& z) const {
    BigFloat n = z.re * z.re + z.im * z.im;
    return {(re * z.re + im * z.im) / n, (im * z.re - re * z.im) / n};
}

BigFloat Complex::abs() const {
    BigFloat r(precision());
    mpfr_hypot(r.raw(), re.raw(), im.raw(), MPFR_RNDN);
    return r;
}

}  // namespace waring
