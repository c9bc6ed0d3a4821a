#include "waring/apolarity.hpp"

#include <algorithm>

#include "waring/errors.hpp"
#include "waring/numeric.hpp"
#include "waring/realroots.hpp"

namespace waring {

BinaryForm apply(const DiffOp& op, const BinaryForm& F) {
    int e = op.degree(), d = F.degree();
    // differentiating past the degree annihilates everything
    if (e > d) return BinaryForm(0);
    BinaryForm out(d - e);
    for (int m = 0; m <= d - e; ++m) {
        Rational acc(0);
        for (int j = 0; j <= e; ++j) {
            if (op.coeff(j) == 0) continue;
            int k = m + j;  // x1-exponent hit by y0^{e-j} y1^j
            if (F.coeff(k) == 0) continue;
            Integer w = falling_factorial(static_cast<unsigned>(d - k), static_cast<unsigned>(e - j)) *
                        falling_factorial(static_cast<unsigned>(k), static_cast<unsigned>(j));
            acc += op.coeff(j) * F.coeff(k) * Rational(w);
        }
        out.coeff(m) = acc;
    }
    return out;
}

QMatrix catalecticant(const BinaryForm& F, int r) {
    int d = F.degree();
    QMatrix m(static_cast<std::size_t>(d - r + 1), std::vector<Rational>(static_cast<std::size_t>(r) + 1));
    for (int j = 0; j <= r; ++j) {
        DiffOp unit(r);
        unit.coeff(j) = 1;
        BinaryForm img = apply(unit, F);
        for (int i = 0; i <= d - r; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = img.coeff(i);
    }
    return m;
}

PerpComponent perp_component(const BinaryForm& F, int r) {
    if (F.is_zero()) throw InputError("perp_component: zero form");
    int d = F.degree();
    if (r < 0 || r > d + 1) throw InputError("perp_component: degree out of range");
    PerpComponent comp;
    comp.degree = r;
    if (r == d + 1) {
        for (int j = 0; j <= r; ++j) {
            DiffOp unit(r);
            unit.coeff(j) = 1;
            comp.basis.push_back(std::move(unit));
        }
        return comp;
    }
    for (const auto& vec : kernel_basis(catalecticant(F, r), static_cast<std::size_t>(r) + 1))
        comp.basis.emplace_back(r, vec);
    return comp;
}

ApolarPair monomial_perp(int a, int b) {
    if (a < 0 || b < 0 || a + b < 1) throw InputError("monomial_perp: need a + b >= 1");
    if (a > b) throw InputError("monomial_perp: need a <= b");
    DiffOp g1(a + 1), g2(b + 1);
    g1.coeff(0) = 1;          // y0^{a+1}
    g2.coeff(b + 1) = 1;      // y1^{b+1}
    return {std::move(g1), std::move(g2)};
}

bool is_squarefree_operator(const DiffOp& op) {
    UniPoly f = op.dehomogenize();
    if (f.is_zero()) return false;
    if (f.degree() < op.degree() - 1) return false;  // y0^2 divides
    return is_squarefree(f);
}

ApolarPair apolar_generators(const BinaryForm& F) {
    if (F.is_zero()) throw InputError("apolar_generators: zero form");
    int d = F.degree();
    int d1 = -1;
    PerpComponent low;
    for (int r = 1; r <= d + 1; ++r) {
        low = perp_component(F, r);
        if (!low.basis.empty()) {
            d1 = r;
            break;
        }
    }
    if (d1 < 0) throw InvariantError("apolar_generators: no annihilator found");
    DiffOp g1 = low.basis.front();

    int d2 = d + 2 - d1;
    PerpComponent high = perp_component(F, d2);

    // span of the degree-d2 multiples of g1
    QMatrix span;
    for (int j = 0; j <= d2 - d1; ++j) {
        DiffOp mono(d2 - d1);
        mono.coeff(j) = 1;
        span.push_back((g1 * mono).coeffs());
    }
    int base_rank = matrix_rank(span);
    for (const DiffOp& cand : high.basis) {
        QMatrix trial = span;
        trial.push_back(cand.coeffs());
        if (matrix_rank(trial) > base_rank) return {std::move(g1), cand};
    }
    throw InvariantError("apolar_generators: no independent second generator");
}

namespace {

WaringDecomposition exact_decomposition(const BinaryForm& F, const std::vector<LinearForm>& forms,
                                        Field field, mpfr_prec_t prec) {
    int d = F.degree();
    QMatrix A(static_cast<std::size_t>(d) + 1, std::vector<Rational>(forms.size()));
    for (std::size_t i = 0; i < forms.size(); ++i) {
        BinaryForm pw = expand_power(forms[i], d);
        for (int j = 0; j <= d; ++j) A[static_cast<std::size_t>(j)][i] = pw.coeff(j);
    }
    std::vector<Rational> alpha = solve_exact(A, F.coeffs());

    WaringDecomposition dec;
    dec.target = F;
    dec.field = field;
    dec.exact = true;
    dec.precision = prec;
    dec.residual = BigFloat(prec);
    for (std::size_t i = 0; i < forms.size(); ++i)
        if (alpha[i] != 0) dec.exact_terms.push_back({alpha[i], forms[i]});
    return dec;
}

WaringDecomposition numeric_decomposition(const BinaryForm& F, const UniPoly& f, bool infinity_root,
                                          Field field, mpfr_prec_t prec) {
    int d = F.degree();
    mpfr_prec_t wp = prec + 64;
    std::vector<Complex> roots = complex_roots(f, wp);
    if (field == Field::real)
        for (Complex& z : roots) z.im = BigFloat(wp);

    std::vector<std::pair<Complex, Complex>> forms;
    forms.reserve(roots.size() + 1);
    for (const Complex& t : roots) forms.emplace_back(Complex(Rational(1), wp), t);
    if (infinity_root) forms.emplace_back(Complex(wp), Complex(Rational(1), wp));

    CMatrix A(static_cast<std::size_t>(d) + 1, std::vector<Complex>(forms.size(), Complex(wp)));
    for (std::size_t i = 0; i < forms.size(); ++i) {
        Complex p(Rational(1), wp);
        for (int j = 0; j <= d; ++j) {
            // forms are (1, t) or (0, 1); (0,1) contributes only at j = d
            if (forms[i].first.is_zero() && j < d) continue;
            A[static_cast<std::size_t>(j)][i] =
                Complex(Rational(binomial(static_cast<unsigned>(d), static_cast<unsigned>(j))), wp) * p;
            p *= forms[i].second;
        }
    }
    std::vector<Complex> b;
    b.reserve(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) b.emplace_back(F.coeff(j), wp);
    std::vector<Complex> alpha = solve_numeric(A, b);

    WaringDecomposition dec;
    dec.target = F;
    dec.field = field;
    dec.exact = false;
    dec.precision = prec;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        NumericTerm t{alpha[i], forms[i].first, forms[i].second};
        // round to the requested precision
        Complex ar(prec), c0r(prec), c1r(prec);
        mpfr_set(ar.re.raw(), t.alpha.re.raw(), MPFR_RNDN);
        mpfr_set(ar.im.raw(), t.alpha.im.raw(), MPFR_RNDN);
        mpfr_set(c0r.re.raw(), t.c0.re.raw(), MPFR_RNDN);
        mpfr_set(c0r.im.raw(), t.c0.im.raw(), MPFR_RNDN);
        mpfr_set(c1r.re.raw(), t.c1.re.raw(), MPFR_RNDN);
        mpfr_set(c1r.im.raw(), t.c1.im.raw(), MPFR_RNDN);
        dec.numeric_terms.push_back({std::move(ar), std::move(c0r), std::move(c1r)});
    }

    std::vector<Complex> al;
    std::vector<std::pair<Complex, Complex>> fm;
    for (const NumericTerm& t : dec.numeric_terms) {
        al.push_back(t.alpha);
        fm.emplace_back(t.c0, t.c1);
    }
    dec.residual = numeric_residual(expand_numeric_sum(al, fm, d, wp), F, prec);
    return dec;
}

}  // namespace

WaringDecomposition decomposition_from_apolar(const BinaryForm& F, const DiffOp& op, Field field,
                                              mpfr_prec_t prec) {
    if (F.is_zero()) throw InputError("decomposition_from_apolar: zero form");
    if (!apply(op, F).is_zero()) throw InputError("decomposition_from_apolar: operator does not annihilate the form");
    int r = op.degree();
    UniPoly f = op.dehomogenize();
    if (f.is_zero()) throw InputError("decomposition_from_apolar: zero operator");
    int e = f.degree();
    if (e < r - 1) throw InputError("decomposition_from_apolar: operator divisible by y0^2, not squarefree");
    if (!is_squarefree(f)) throw InputError("decomposition_from_apolar: operator not squarefree");
    bool infinity_root = (e == r - 1);

    auto rational_roots = extract_rational_roots(f);
    bool all_rational = static_cast<int>(rational_roots.size()) == e;

    if (all_rational) {
        std::vector<LinearForm> forms;
        forms.reserve(static_cast<std::size_t>(r));
        for (const auto& [t, mult] : rational_roots) forms.emplace_back(Rational(1), t);
        if (infinity_root) forms.emplace_back(Rational(0), Rational(1));
        return exact_decomposition(F, forms, field, prec);
    }
    if (field == Field::real && sturm_count_distinct(f) != e)
        throw InputError("decomposition_from_apolar: operator has a non-real root");
    return numeric_decomposition(F, f, infinity_root, field, prec);
}

WaringDecomposition WaringDecomposition::transpose() const {
    WaringDecomposition out;
    out.target = target.transpose();
    out.field = field;
    out.exact = exact;
    out.precision = precision;
    out.residual = residual;
    int d = target.degree();
    for (const ExactTerm& t : exact_terms) {
        // (c0 x0 + c1 x1) -> (c1 x0 + c0 x1), renormalized
        Rational alpha = t.alpha;
        if (t.form.c1 != 0) {
            Rational scale(1);
            for (int k = 0; k < d; ++k) scale *= t.form.c1;
            alpha *= scale;
        }
        out.exact_terms.push_back({std::move(alpha), LinearForm(t.form.c1, t.form.c0)});
    }
    for (const NumericTerm& t : numeric_terms) {
        Complex alpha = t.alpha;
        Complex c0 = t.c1, c1 = t.c0;
        if (!c0.is_zero()) {
            Complex scale(Rational(1), precision);
            for (int k = 0; k < d; ++k) scale *= c0;
            alpha *= scale;
            c1 = c1 / c0;
            c0 = Complex(Rational(1), precision);
        } else {
            c1 = Complex(Rational(1), precision);
        }
        out.numeric_terms.push_back({std::move(alpha), std::move(c0), std::move(c1)});
    }
    return out;
}

}  // namespace waring
