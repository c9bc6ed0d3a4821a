#include "waring/waring.hpp"

#include <algorithm>

#include "waring/errors.hpp"
#include "waring/numeric.hpp"
#include "waring/realroots.hpp"

namespace waring {

namespace {

void require_monomial_exponents(int a, int b) {
    if (a < 1 || b < a) throw InputError("monomial operations need 0 < a <= b");
}

bool enumerate_vectors(std::vector<int>& v, std::size_t pos, int remaining,
                       const std::function<bool(const std::vector<int>&)>& visit, const long& budget) {
    if (pos == v.size() - 1) {
        v[pos] = remaining;
        return visit(v) || budget <= 0;
    }
    for (int c = 0; c <= remaining; ++c) {
        v[pos] = c;
        if (enumerate_vectors(v, pos + 1, remaining - c, visit, budget)) return true;
    }
    return false;
}

}  // namespace

std::optional<DiffOp> sweep_for(const PerpComponent& comp, const std::function<bool(const DiffOp&)>& pred,
                                int max_coeff_sum, long budget) {
    if (comp.basis.empty()) return std::nullopt;
    std::optional<DiffOp> found;
    std::vector<int> v(comp.basis.size());
    // each magnitude vector expands into all sign patterns; the first
    // nonzero entry stays positive since pred is invariant under negation
    auto visit = [&](const std::vector<int>& coeffs) {
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            if (coeffs[i] != 0) support.push_back(i);
        if (support.empty()) return false;
        for (unsigned long mask = 0; mask < (1ul << (support.size() - 1)); ++mask) {
            DiffOp cand(comp.degree);
            for (std::size_t k = 0; k < support.size(); ++k) {
                int c = coeffs[support[k]];
                if (k > 0 && (mask >> (k - 1)) & 1) c = -c;
                cand = cand + comp.basis[support[k]] * Rational(c);
            }
            --budget;
            if (cand.is_zero()) continue;
            if (pred(cand)) {
                found = std::move(cand);
                return true;
            }
            if (budget <= 0) return true;
        }
        return false;
    };
    for (int s = 1; s <= max_coeff_sum && !found && budget > 0; ++s)
        enumerate_vectors(v, 0, s, visit, budget);
    return found;
}

RankResult complex_rank(const BinaryForm& F, mpfr_prec_t prec) {
    if (F.is_zero()) throw InputError("complex_rank: zero form");
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
    if (d1 < 0) throw InvariantError("complex_rank: no annihilator found");

    RankResult res;
    res.field = Field::complex;
    res.min_apolar_degree = d1;

    if (auto op = sweep_for(low, is_squarefree_operator, std::max(6, 2 * d1 + 3))) {
        res.rank = d1;
        res.witness = decomposition_from_apolar(F, *op, Field::complex, prec);
        return res;
    }

    int r2 = d + 2 - d1;
    PerpComponent high = perp_component(F, r2);
    auto op = sweep_for(high, is_squarefree_operator);
    if (!op) throw InvariantError("complex_rank: squarefree annihilator search exhausted its budget");
    res.rank = r2;
    res.witness = decomposition_from_apolar(F, *op, Field::complex, prec);
    return res;
}

WaringDecomposition monomial_complex_decomposition(int a, int b, mpfr_prec_t prec) {
    if (a > b && b >= 1) return monomial_complex_decomposition(b, a, prec).transpose();
    require_monomial_exponents(a, b);
    int d = a + b, n = b + 1;
    mpfr_prec_t wp = prec + 64;

    Rational denom = Rational(n) * Rational(binomial(static_cast<unsigned>(d), static_cast<unsigned>(b)));

    WaringDecomposition dec;
    dec.target = BinaryForm::monomial(a, b);
    dec.field = Field::complex;
    dec.exact = false;
    dec.precision = prec;
    for (int k = 0; k < n; ++k) {
        // form x0 + zeta^k x1, alpha = zeta^{-bk} / ((b+1) C(d, b))
        auto [c, s] = BigFloat::cos_sin_2pi(k, n, prec);
        auto [ca, sa] = BigFloat::cos_sin_2pi(-static_cast<long>(b) * k, n, prec);
        Complex alpha(ca, sa);
        alpha = alpha / Complex(denom, prec);
        dec.numeric_terms.push_back({std::move(alpha), Complex(Rational(1), prec), Complex(std::move(c), std::move(s))});
    }

    std::vector<Complex> al;
    std::vector<std::pair<Complex, Complex>> fm;
    for (const NumericTerm& t : dec.numeric_terms) {
        al.push_back(t.alpha);
        fm.emplace_back(t.c0, t.c1);
    }
    dec.residual = numeric_residual(expand_numeric_sum(al, fm, d, wp), dec.target, prec);
    return dec;
}

RankResult monomial_complex_rank(int a, int b, mpfr_prec_t prec) {
    if (a > b) {
        RankResult res = monomial_complex_rank(b, a, prec);
        res.witness = res.witness.transpose();
        return res;
    }
    RankResult res;
    res.field = Field::complex;
    if (a == 0) {
        if (b == 0) throw InputError("monomial_complex_rank: need a + b >= 1");
        // pure power: rank 1, outside the proposition's hypothesis
        res.rank = 1;
        res.outside_hypothesis = true;
        res.min_apolar_degree = 1;
        WaringDecomposition dec;
        dec.target = BinaryForm::monomial(0, b);
        dec.field = Field::complex;
        dec.exact = true;
        dec.exact_terms.push_back({Rational(1), LinearForm(Rational(0), Rational(1))});
        res.witness = std::move(dec);
        return res;
    }
    res.rank = b + 1;
    res.min_apolar_degree = a + 1;
    res.witness = monomial_complex_decomposition(a, b, prec);
    return res;
}

DiffOp construct_real_apolar(int a, int b, std::optional<std::vector<Rational>> seed_roots) {
    require_monomial_exponents(a, b);
    int d = a + b;
    UniPoly f = real_rooted_with_zero_coeff(d, b, seed_roots.value_or(std::vector<Rational>{}));
    if (f.degree() != d) throw InvariantError("construct_real_apolar: degree drop");
    DiffOp op(d, f.coeffs());
    if (!apply(op, BinaryForm::monomial(a, b)).is_zero())
        throw InvariantError("construct_real_apolar: operator does not annihilate the monomial");
    return op;
}

WaringDecomposition monomial_real_decomposition(int a, int b, std::optional<std::vector<Rational>> seed_roots) {
    if (a > b && b >= 1) return monomial_real_decomposition(b, a, seed_roots).transpose();
    require_monomial_exponents(a, b);
    DiffOp op = construct_real_apolar(a, b, std::move(seed_roots));
    return decomposition_from_apolar(BinaryForm::monomial(a, b), op, Field::real);
}

LowerBoundCertificate real_lower_bound_certificate(int a, int b, int r) {
    require_monomial_exponents(a, b);
    if (r < 1 || r > a + b - 1)
        throw InputError("real_lower_bound_certificate: need 1 <= r <= a+b-1");
    LowerBoundCertificate cert;
    cert.a = a;
    cert.b = b;
    cert.r = r;
    cert.gap_start = std::max(0, r - b);
    cert.gap_end = std::min(r, a);
    return cert;
}

RankResult monomial_real_rank(int a, int b) {
    if (a > b) {
        RankResult res = monomial_real_rank(b, a);
        res.witness = res.witness.transpose();
        return res;
    }
    RankResult res;
    res.field = Field::real;
    if (a == 0) {
        if (b == 0) throw InputError("monomial_real_rank: need a + b >= 1");
        res.rank = 1;
        res.outside_hypothesis = true;
        res.min_apolar_degree = 1;
        WaringDecomposition dec;
        dec.target = BinaryForm::monomial(0, b);
        dec.field = Field::real;
        dec.exact = true;
        dec.exact_terms.push_back({Rational(1), LinearForm(Rational(0), Rational(1))});
        res.witness = std::move(dec);
        return res;
    }
    res.rank = a + b;
    res.min_apolar_degree = a + 1;
    res.witness = monomial_real_decomposition(a, b);
    for (int r = 1; r <= a + b - 1; ++r) res.lower_bound_evidence.push_back(real_lower_bound_certificate(a, b, r));
    return res;
}

VerifyResult verify_decomposition(const WaringDecomposition& dec, double tolerance) {
    VerifyResult out;
    out.exact = dec.exact;
    int d = dec.target.degree();

    if (dec.exact) {
        out.residual = BigFloat(dec.precision);
        for (std::size_t i = 0; i < dec.exact_terms.size(); ++i)
            for (std::size_t j = i + 1; j < dec.exact_terms.size(); ++j)
                if (dec.exact_terms[i].form == dec.exact_terms[j].form) return out;
        BinaryForm sum(d);
        for (const ExactTerm& t : dec.exact_terms) {
            if (t.alpha == 0) return out;
            sum = sum + expand_power(t.form, d) * t.alpha;
        }
        BinaryForm diff = sum - dec.target;
        if (!diff.is_zero()) {
            Rational worst(0);
            for (const Rational& c : diff.coeffs()) {
                Rational a = abs(c);
                if (worst < a) worst = a;
            }
            out.residual = BigFloat(worst, dec.precision);
            return out;
        }
        out.ok = true;
        return out;
    }

    // numeric: pairwise independence first
    mpfr_prec_t wp = dec.precision + 64;
    for (std::size_t i = 0; i < dec.numeric_terms.size(); ++i)
        for (std::size_t j = i + 1; j < dec.numeric_terms.size(); ++j) {
            const NumericTerm& s = dec.numeric_terms[i];
            const NumericTerm& t = dec.numeric_terms[j];
            Complex det = s.c0 * t.c1 - s.c1 * t.c0;
            if (det.abs().at_most(1e-12)) {
                out.residual = BigFloat(Rational(1), dec.precision);
                return out;
            }
        }
    std::vector<Complex> al;
    std::vector<std::pair<Complex, Complex>> fm;
    for (const NumericTerm& t : dec.numeric_terms) {
        al.push_back(t.alpha);
        fm.emplace_back(t.c0, t.c1);
    }
    out.residual = numeric_residual(expand_numeric_sum(al, fm, d, wp), dec.target, dec.precision);
    out.ok = out.residual.at_most(tolerance);
    return out;
}

RealRankInterval real_rank_bounds(const BinaryForm& F, mpfr_prec_t prec) {
    RealRankInterval out;
    out.lower = complex_rank(F, prec).rank;
    int d = F.degree();
    if (d < 1) {
        out.upper = out.lower;
        return out;
    }
    PerpComponent top = perp_component(F, d);
    auto totally_real = [](const DiffOp& op) {
        if (!is_squarefree_operator(op)) return false;
        UniPoly f = op.dehomogenize();
        return sturm_count_distinct(f) == f.degree();
    };
    if (auto op = sweep_for(top, totally_real)) {
        out.upper = d;
        out.witness = decomposition_from_apolar(F, *op, Field::real, prec);
    }
    return out;
}

}  // namespace waring
