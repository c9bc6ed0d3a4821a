#pragma once

#include <vector>

#include "waring/binary_form.hpp"
#include "waring/decomposition.hpp"
#include "waring/linalg.hpp"

namespace waring {

// Apply a differential operator to a form. Both sides live in the monomial
// basis, so the pairing of y0^{e-j} y1^j against x0^{d-k} x1^k carries the
// falling-factorial differentiation weights.
BinaryForm apply(const DiffOp& op, const BinaryForm& F);

// Generator pair of the apolar ideal: degrees d1 <= d2 with d1 + d2 = d + 2,
// both annihilating the source form.
struct ApolarPair {
    DiffOp g1, g2;
    int d1() const { return g1.degree(); }
    int d2() const { return g2.degree(); }
};

// Basis of the degree-r graded piece of F^perp.
struct PerpComponent {
    int degree = 0;
    std::vector<DiffOp> basis;
};

// Catalecticant of F in degree r: the (d-r+1) x (r+1) matrix of apply(., F)
// on the operator monomials y0^{r-j} y1^j.
QMatrix catalecticant(const BinaryForm& F, int r);

// Kernel of apply(., F) on operators of degree r; for r = d+1 the full space.
PerpComponent perp_component(const BinaryForm& F, int r);

// (y0^{a+1}, y1^{b+1}) for the monomial x0^a x1^b, a <= b.
ApolarPair monomial_perp(int a, int b);

ApolarPair apolar_generators(const BinaryForm& F);

// A degree-r operator is a product of r distinct linear forms over C exactly
// when its dehomogenization is squarefree and drops degree by at most one
// (a factor y0 counts once as the root at infinity).
bool is_squarefree_operator(const DiffOp& op);

// Constructive direction of the apolarity lemma: factor `op` into distinct
// linear forms (root t -> x0 + t*x1, factor y0 -> x1) and solve for the
// coefficients. Fully exact when every root is rational, numeric otherwise.
WaringDecomposition decomposition_from_apolar(const BinaryForm& F, const DiffOp& op, Field field,
                                              mpfr_prec_t prec = kDefaultPrecision);

}  // namespace waring
