#pragma once

#include <vector>

#include "waring/bigfloat.hpp"
#include "waring/binary_form.hpp"
#include "waring/unipoly.hpp"

namespace waring {

// All complex roots of a squarefree polynomial, each at precision `prec`
// (computed with guard bits), sorted by (re, im) for reproducibility.
std::vector<Complex> complex_roots(const UniPoly& f, mpfr_prec_t prec);

// Coefficient vector (monomial basis, length d+1) of
// sum_k alpha_k (c0_k x0 + c1_k x1)^d at the joint working precision.
std::vector<Complex> expand_numeric_sum(const std::vector<Complex>& alpha,
                                        const std::vector<std::pair<Complex, Complex>>& forms, int d,
                                        mpfr_prec_t prec);

// max-norm of (expansion - F).
BigFloat numeric_residual(const std::vector<Complex>& expansion, const BinaryForm& F, mpfr_prec_t prec);

}  // namespace waring
