#include "waring/numeric.hpp"

#include <algorithm>

#include "waring/errors.hpp"

namespace waring {

namespace {

Complex horner(const std::vector<Complex>& coeffs, const Complex& z) {
    Complex acc(coeffs.back());
    for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

}  // namespace

std::vector<Complex> complex_roots(const UniPoly& f, mpfr_prec_t prec) {
    int n = f.degree();
    if (n < 1) return {};
    mpfr_prec_t wp = prec + 64;

    // monic complex coefficients
    std::vector<Complex> c;
    c.reserve(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) c.emplace_back(f.coeff(j) / f.leading(), wp);

    // Cauchy bound for the root radius
    BigFloat radius(1, wp);
    for (int j = 0; j < n; ++j) radius = max(radius, BigFloat(1, wp) + c[static_cast<std::size_t>(j)].abs());

    // Durand-Kerner from staggered points on a circle
    std::vector<Complex> z;
    z.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        auto [co, si] = BigFloat::cos_sin_2pi(4 * k + 1, 4 * n, wp);
        z.emplace_back(radius * co, radius * si);
    }

    BigFloat tol(1, wp);
    mpfr_mul_2si(tol.raw(), tol.raw(), -(prec + 16), MPFR_RNDN);

    for (int iter = 0; iter < 400; ++iter) {
        BigFloat worst(wp);
        for (int i = 0; i < n; ++i) {
            Complex num = horner(c, z[static_cast<std::size_t>(i)]);
            Complex den(Rational(1), wp);
            for (int j = 0; j < n; ++j)
                if (j != i) den *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
            Complex delta = num / den;
            z[static_cast<std::size_t>(i)] -= delta;
            worst = max(worst, delta.abs());
        }
        if (worst < tol * radius) break;
    }

    std::sort(z.begin(), z.end(), [](const Complex& a, const Complex& b) {
        int c0 = a.re.compare(b.re);
        if (c0 != 0) return c0 < 0;
        return a.im.compare(b.im) < 0;
    });

    // round down to the requested precision
    std::vector<Complex> out;
    out.reserve(z.size());
    for (const Complex& zi : z) {
        Complex w(prec);
        mpfr_set(w.re.raw(), zi.re.raw(), MPFR_RNDN);
        mpfr_set(w.im.raw(), zi.im.raw(), MPFR_RNDN);
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<Complex> expand_numeric_sum(const std::vector<Complex>& alpha,
                                        const std::vector<std::pair<Complex, Complex>>& forms, int d,
                                        mpfr_prec_t prec) {
    if (alpha.size() != forms.size()) throw InvariantError("expand_numeric_sum: size mismatch");
    std::vector<Complex> acc(static_cast<std::size_t>(d) + 1, Complex(prec));
    for (std::size_t k = 0; k < forms.size(); ++k) {
        const auto& [c0, c1] = forms[k];
        std::vector<Complex> p0(static_cast<std::size_t>(d) + 1, Complex(Rational(1), prec));
        std::vector<Complex> p1 = p0;
        for (int j = 1; j <= d; ++j) {
            p0[static_cast<std::size_t>(j)] = p0[static_cast<std::size_t>(j - 1)] * c0;
            p1[static_cast<std::size_t>(j)] = p1[static_cast<std::size_t>(j - 1)] * c1;
        }
        for (int j = 0; j <= d; ++j) {
            Complex term = alpha[k] * p0[static_cast<std::size_t>(d - j)] * p1[static_cast<std::size_t>(j)];
            acc[static_cast<std::size_t>(j)] +=
                term * Complex(Rational(binomial(static_cast<unsigned>(d), static_cast<unsigned>(j))), prec);
        }
    }
    return acc;
}

BigFloat numeric_residual(const std::vector<Complex>& expansion, const BinaryForm& F, mpfr_prec_t prec) {
    if (static_cast<int>(expansion.size()) != F.degree() + 1)
        throw InvariantError("numeric_residual: degree mismatch");
    BigFloat worst(prec);
    for (int j = 0; j <= F.degree(); ++j)
        worst = max(worst, (expansion[static_cast<std::size_t>(j)] - Complex(F.coeff(j), prec)).abs());
    // the expansion may carry guard bits; report at the requested precision
    BigFloat out(prec);
    mpfr_set(out.raw(), worst.raw(), MPFR_RNDN);
    return out;
}

}  // namespace waring
