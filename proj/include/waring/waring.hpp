#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "waring/apolarity.hpp"
#include "waring/decomposition.hpp"

namespace waring {

// Sylvester's procedure: the rank is the minimal degree d1 with a squarefree
// annihilator, and d + 2 - d1 otherwise; the witness decomposition comes from
// the squarefree apolar element actually found.
RankResult complex_rank(const BinaryForm& F, mpfr_prec_t prec = kDefaultPrecision);

// Complex rank b+1 of x0^a x1^b with an explicit roots-of-unity witness.
RankResult monomial_complex_rank(int a, int b, mpfr_prec_t prec = kDefaultPrecision);

// b+1 terms x0 + zeta^k x1 (zeta a primitive (b+1)-th root of unity) with
// coefficients zeta^{-bk} / ((b+1) C(a+b, b)); the annihilator behind it is
// y1^{b+1} - y0^{b+1}.
WaringDecomposition monomial_complex_decomposition(int a, int b, mpfr_prec_t prec = kDefaultPrecision);

// A degree-(a+b) element of (y0^{a+1}, y1^{b+1}) that is a product of a+b
// distinct rational linear forms: the dehomogenized polynomial has roots at
// the seeds (d-1 distinct positive rationals, default 1..d-1) plus the unique
// last root forcing the y0^a y1^b coefficient to vanish.
DiffOp construct_real_apolar(int a, int b, std::optional<std::vector<Rational>> seed_roots = std::nullopt);

// Exactly a+b exact rational terms.
WaringDecomposition monomial_real_decomposition(int a, int b,
                                                std::optional<std::vector<Rational>> seed_roots = std::nullopt);

// Coefficient-gap certificate that x0^a x1^b has no r-term real expansion,
// 1 <= r <= a+b-1.
LowerBoundCertificate real_lower_bound_certificate(int a, int b, int r);

RankResult monomial_real_rank(int a, int b);

// Exact expansion comparison for rational decompositions, max-norm residual
// against the tolerance for numeric ones; also re-checks that the forms are
// pairwise linearly independent. Failures are returned, never thrown.
VerifyResult verify_decomposition(const WaringDecomposition& dec, double tolerance = 1e-20);

// Real rank of a general binary form, as far as the monomial theory reaches:
// the lower bound is the complex rank; the upper bound is d when a totally
// real squarefree element of (F^perp)_d is found, and open otherwise.
struct RealRankInterval {
    int lower = 0;
    std::optional<int> upper;
    std::optional<WaringDecomposition> witness;
};

RealRankInterval real_rank_bounds(const BinaryForm& F, mpfr_prec_t prec = kDefaultPrecision);

// Deterministic sweep over small non-negative integer combinations of a perp
// component basis; returns the first element accepted by `pred`.
std::optional<DiffOp> sweep_for(const PerpComponent& comp, const std::function<bool(const DiffOp&)>& pred,
                                int max_coeff_sum = 4, long budget = 20000);

}  // namespace waring
