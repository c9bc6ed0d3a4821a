#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "waring/bigfloat.hpp"
#include "waring/binary_form.hpp"

namespace waring {

enum class Field { real, complex };

struct ExactTerm {
    Rational alpha;  // nonzero
    LinearForm form;
};

// Numeric term: alpha * (c0 x0 + c1 x1)^d with precision-tracked scalars.
// Forms are normalized the same way as LinearForm (first nonzero coordinate
// exactly 1).
struct NumericTerm {
    Complex alpha;
    Complex c0, c1;
};

// Either fully exact (rational alpha and forms, residual identically zero) or
// numeric at a recorded precision. Terms are pairwise linearly independent.
struct WaringDecomposition {
    BinaryForm target;
    Field field = Field::real;
    bool exact = true;
    std::vector<ExactTerm> exact_terms;
    std::vector<NumericTerm> numeric_terms;
    mpfr_prec_t precision = kDefaultPrecision;
    BigFloat residual{kDefaultPrecision};  // zero when exact

    std::size_t term_count() const { return exact ? exact_terms.size() : numeric_terms.size(); }

    // x0 <-> x1, term by term, renormalizing the forms.
    WaringDecomposition transpose() const;
};

struct LowerBoundCertificate {
    int a = 0, b = 0;
    int r = 0;  // attempted term count, r <= a+b-1
    // Forced-zero coefficient index range (y0-exponent) of the general
    // element of (M^perp)_r: [max(0, r-b), min(r, a)].
    int gap_start = 0, gap_end = 0;
};

struct RankResult {
    int rank = 0;
    Field field = Field::real;
    WaringDecomposition witness;
    // Real monomial case: one certificate per r < rank.
    std::vector<LowerBoundCertificate> lower_bound_evidence;
    // Complex case: minimal degree with a nonzero perp component.
    int min_apolar_degree = 0;
    // Set for monomial ranks with min(a, b) = 0, outside the propositions'
    // hypotheses (the rank is 1).
    bool outside_hypothesis = false;
};

struct VerifyResult {
    bool ok = false;
    bool exact = false;
    BigFloat residual{kDefaultPrecision};
};

}  // namespace waring
