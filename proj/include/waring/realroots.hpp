#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "waring/unipoly.hpp"

namespace waring {

struct SignVariationReport {
    int variations = 0;
    std::vector<int> zero_coefficient_indices;
};

// Sign changes in the nonzero-coefficient sequence read from degree d down
// to 0, plus where the zero coefficients sit.
SignVariationReport sign_variations(const UniPoly& p);

enum class Parity { even, odd };

struct DescartesBound {
    int bound = 0;
    Parity parity = Parity::even;
};

// Descartes' rule of signs: the positive real roots counted with
// multiplicity number at most `bound` and agree with it mod 2.
DescartesBound descartes_positive_bound(const UniPoly& p);

// Exact count of distinct real roots via a Sturm chain, with signs at
// +/-infinity read off the leading coefficients. Works for non-squarefree
// input as well (the chain ends at the gcd).
int sturm_count_distinct(const UniPoly& p);

// Squarefree with degree(p) distinct real roots.
bool is_totally_real_distinct(const UniPoly& p);

// Two consecutive zero coefficients; rules out deg(p) distinct real roots.
struct GapCertificate {
    int i = 0;  // smallest index in [1, d] with c_i = c_{i-1} = 0
};

std::optional<GapCertificate> gap_certificate(const UniPoly& p);

// All rational roots with multiplicities, by divisor search over the
// integer-cleared leading/trailing coefficients plus exact deflation.
std::vector<std::pair<Rational, int>> extract_rational_roots(const UniPoly& p);

// A degree-d monic polynomial with d distinct rational roots whose
// coefficient of x^i is exactly zero. Seeds are d-1 distinct positive
// rationals (default 1..d-1); the last root is the unique value forced by
// E_{d-i}(roots) = 0.
UniPoly real_rooted_with_zero_coeff(int d, int i, std::vector<Rational> seeds = {});

}  // namespace waring
