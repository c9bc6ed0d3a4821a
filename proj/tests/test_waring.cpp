#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "waring/realroots.hpp"
#include "waring/rng.hpp"
#include "waring/waring.hpp"

using namespace waring;

namespace {

BinaryForm random_form(SplitMix64& rng, int degree) {
    BinaryForm F(degree);
    do {
        for (int j = 0; j <= degree; ++j) F.coeff(j) = rng.next_rational();
    } while (F.is_zero());
    return F;
}

}  // namespace

TEST_CASE("Sylvester's example: x0 x1^(d-1) has complex rank d") {
    for (int d = 3; d <= 6; ++d) {
        RankResult r = complex_rank(BinaryForm::monomial(1, d - 1));
        CHECK(r.rank == d);
        CHECK(r.min_apolar_degree == 2);
        CHECK(verify_decomposition(r.witness).ok);
    }
}

TEST_CASE("complex rank of split and generic forms") {
    BinaryForm F(3, {rat(1), rat(0), rat(0), rat(1)});  // x0^3 + x1^3
    RankResult r = complex_rank(F);
    CHECK(r.rank == 2);
    CHECK(r.min_apolar_degree == 2);

    SplitMix64 rng(31);
    RankResult g = complex_rank(random_form(rng, 5));
    CHECK(g.rank == 3);

    CHECK(complex_rank(expand_power(LinearForm(rat(1), rat(2)), 6)).rank == 1);
    CHECK_THROWS_AS(complex_rank(BinaryForm(4)), InputError);
}

TEST_CASE("monomial complex rank is b+1") {
    CHECK(monomial_complex_rank(1, 1).rank == 2);
    CHECK(monomial_complex_rank(1, 2).rank == 3);
    CHECK(monomial_complex_rank(2, 3).rank == 4);
    CHECK(monomial_complex_rank(3, 2).rank == 4);  // swapped internally to (2, 3)
    RankResult r = monomial_complex_rank(0, 5);
    CHECK(r.rank == 1);
    CHECK(r.outside_hypothesis);
}

TEST_CASE("roots-of-unity decomposition verifies tightly") {
    for (auto [a, b] : {std::pair{1, 1}, {1, 2}, {2, 2}, {2, 5}, {4, 6}}) {
        WaringDecomposition dec = monomial_complex_decomposition(a, b);
        CHECK(dec.term_count() == static_cast<std::size_t>(b + 1));
        VerifyResult v = verify_decomposition(dec, 1e-20);
        CHECK(v.ok);
    }
}

TEST_CASE("real apolar construction") {
    DiffOp op = construct_real_apolar(1, 2);  // seeds {1, 2}, forced root -3
    CHECK(op == DiffOp(3, {rat(6), rat(-7), rat(0), rat(1)}));
    UniPoly f = op.dehomogenize();
    CHECK(is_totally_real_distinct(f));
    CHECK(f.coeff(2) == 0);

    op = construct_real_apolar(2, 2, std::vector<Rational>{rat(1), rat(2), rat(3)});
    CHECK(op.dehomogenize()(rat(-11, 6)) == 0);
    CHECK(elementary_symmetric({rat(1), rat(2), rat(3), rat(-11, 6)}, 2) == 0);

    op = construct_real_apolar(1, 1, std::vector<Rational>{rat(1)});
    CHECK(op == DiffOp(2, {rat(-1), rat(0), rat(1)}));
}

TEST_CASE("real monomial decomposition: a+b exact terms") {
    WaringDecomposition dec = monomial_real_decomposition(1, 1);
    REQUIRE(dec.exact_terms.size() == 2);
    CHECK(dec.exact_terms[0].alpha == rat(-1, 4));
    CHECK(dec.exact_terms[1].alpha == rat(1, 4));

    // default seeds {1, 2}: -(1/12)(x0+x1)^3 + (1/15)(x0+2x1)^3 + (1/60)(x0-3x1)^3
    dec = monomial_real_decomposition(1, 2);
    REQUIRE(dec.exact_terms.size() == 3);
    CHECK(dec.exact_terms[0].form == LinearForm(rat(1), rat(-3)));
    CHECK(dec.exact_terms[0].alpha == rat(1, 60));
    CHECK(dec.exact_terms[1].form == LinearForm(rat(1), rat(1)));
    CHECK(dec.exact_terms[1].alpha == rat(-1, 12));
    CHECK(dec.exact_terms[2].form == LinearForm(rat(1), rat(2)));
    CHECK(dec.exact_terms[2].alpha == rat(1, 15));
    CHECK(verify_decomposition(dec).ok);

    // alternate seeds {1/2}: still a+b terms, exact
    dec = monomial_real_decomposition(1, 2, std::vector<Rational>{rat(1, 2), rat(3)});
    CHECK(dec.exact_terms.size() == 3);
    CHECK(verify_decomposition(dec).ok);
}

TEST_CASE("real lower bound certificates") {
    LowerBoundCertificate c = real_lower_bound_certificate(2, 2, 3);
    CHECK(c.gap_start == 1);
    CHECK(c.gap_end == 2);
    c = real_lower_bound_certificate(1, 2, 2);
    CHECK(c.gap_start == 0);
    CHECK(c.gap_end == 1);
    c = real_lower_bound_certificate(1, 1, 1);
    CHECK(c.gap_start == 0);
    CHECK(c.gap_end == 1);
    CHECK_THROWS_AS(real_lower_bound_certificate(1, 2, 3), InputError);
}

TEST_CASE("monomial real rank is a+b") {
    CHECK(monomial_real_rank(1, 2).rank == 3);
    CHECK(monomial_real_rank(2, 2).rank == 4);
    CHECK(monomial_real_rank(2, 2).lower_bound_evidence.size() == 3);
    RankResult r = monomial_real_rank(0, 5);
    CHECK(r.rank == 1);
    CHECK(r.outside_hypothesis);
    CHECK_THROWS_AS(monomial_real_rank(0, 0), InputError);
}

TEST_CASE("rank table invariants for a+b <= 12") {
    for (int a = 1; 2 * a <= 12; ++a)
        for (int b = a; a + b <= 12; ++b) {
            int cx = monomial_complex_rank(a, b).rank;
            int re = monomial_real_rank(a, b).rank;
            CHECK(cx == b + 1);
            CHECK(re == a + b);
            CHECK(re >= cx);
            CHECK((re == cx) == (a == 1));
        }
}

TEST_CASE("rank symmetry under swapping the exponents") {
    for (auto [a, b] : {std::pair{1, 3}, {2, 4}}) {
        CHECK(monomial_complex_rank(a, b).rank == monomial_complex_rank(b, a).rank);
        CHECK(monomial_real_rank(a, b).rank == monomial_real_rank(b, a).rank);
        WaringDecomposition dec = monomial_real_decomposition(a, b);
        WaringDecomposition swapped = monomial_real_decomposition(b, a);
        CHECK(swapped.target == dec.target.transpose());
        REQUIRE(swapped.term_count() == dec.term_count());
        WaringDecomposition t = dec.transpose();
        CHECK(verify_decomposition(t).ok);
        // same terms up to reordering
        for (const ExactTerm& term : t.exact_terms) {
            bool found = false;
            for (const ExactTerm& other : swapped.exact_terms)
                found = found || (term.alpha == other.alpha && term.form == other.form);
            CHECK(found);
        }
    }
}

TEST_CASE("scaling the form scales the witness coefficients") {
    SplitMix64 rng(37);
    for (int trial = 0; trial < 8; ++trial) {
        int d = static_cast<int>(rng.next_in(2, 7));
        BinaryForm F = random_form(rng, d);
        Rational lambda = rng.next_nonzero_rational();
        RankResult r1 = complex_rank(F);
        RankResult r2 = complex_rank(F * lambda);
        CHECK(r1.rank == r2.rank);
        REQUIRE(r1.witness.term_count() == r2.witness.term_count());
        if (r1.witness.exact) {
            for (std::size_t i = 0; i < r1.witness.exact_terms.size(); ++i) {
                CHECK(r2.witness.exact_terms[i].form == r1.witness.exact_terms[i].form);
                CHECK(r2.witness.exact_terms[i].alpha == r1.witness.exact_terms[i].alpha * lambda);
            }
        } else {
            for (std::size_t i = 0; i < r1.witness.numeric_terms.size(); ++i) {
                Complex diff = r2.witness.numeric_terms[i].alpha -
                               r1.witness.numeric_terms[i].alpha * Complex(lambda, r1.witness.precision);
                CHECK(diff.abs().at_most(1e-25));
            }
        }
    }
}

TEST_CASE("complex rank is invariant under invertible changes of variables") {
    SplitMix64 rng(41);
    int done = 0;
    while (done < 50) {
        int d = static_cast<int>(rng.next_in(2, 8));
        BinaryForm F = random_form(rng, d);
        Rational p = rng.next_rational(4, 2), q = rng.next_rational(4, 2);
        Rational r = rng.next_rational(4, 2), s = rng.next_rational(4, 2);
        if (p * s - q * r == 0) continue;
        ++done;
        CHECK(complex_rank(F).rank == complex_rank(substitute(F, p, q, r, s)).rank);
    }
}

TEST_CASE("verify_decomposition catches perturbations") {
    WaringDecomposition dec = monomial_real_decomposition(1, 2, std::vector<Rational>{rat(1), rat(2)});
    VerifyResult v = verify_decomposition(dec);
    CHECK(v.ok);
    CHECK(v.exact);

    dec.exact_terms[0].alpha += rat(1, 1000);
    v = verify_decomposition(dec);
    CHECK_FALSE(v.ok);

    WaringDecomposition empty;
    empty.target = BinaryForm(3);
    v = verify_decomposition(empty);
    CHECK(v.ok);
    CHECK(v.residual.is_zero());
}

TEST_CASE("perturbed (1,2) decomposition reports the max-norm residual") {
    // perturbing the (x0-3x1)^3 coefficient by 1/1000 shifts the x1^3
    // coefficient by 27/1000, the largest entry of the difference
    WaringDecomposition dec = monomial_real_decomposition(1, 2);
    for (ExactTerm& t : dec.exact_terms)
        if (t.form == LinearForm(rat(1), rat(-3))) t.alpha += rat(1, 1000);
    VerifyResult v = verify_decomposition(dec);
    CHECK_FALSE(v.ok);
    CHECK(v.residual == BigFloat(rat(27, 1000), dec.precision));
}

TEST_CASE("real rank bounds for general forms") {
    // x0 x1^2 is a monomial: lower 3 via Sylvester, upper 3 via a totally
    // real apolar element of degree 3
    RealRankInterval iv = real_rank_bounds(BinaryForm::monomial(1, 2));
    CHECK(iv.lower == 3);
    REQUIRE(iv.upper.has_value());
    CHECK(*iv.upper == 3);
    REQUIRE(iv.witness.has_value());
    CHECK(verify_decomposition(*iv.witness).ok);
}

TEST_CASE("certificate sampling finds no real factorizations") {
    SplitMix64 rng(43);
    for (auto [a, b] : {std::pair{1, 3}, {2, 3}}) {
        for (int r = a + 1; r <= a + b - 1; ++r) {
            PerpComponent comp = perp_component(BinaryForm::monomial(a, b), r);
            for (int trial = 0; trial < 40; ++trial) {
                DiffOp op(r);
                for (const DiffOp& basis : comp.basis) op = op + basis * rng.next_rational();
                if (op.is_zero()) continue;
                UniPoly f = op.dehomogenize();
                bool product_of_distinct_real = !f.is_zero() && f.degree() >= r - 1 && is_squarefree(f) &&
                                                sturm_count_distinct(f) == f.degree();
                CHECK_FALSE(product_of_distinct_real);
            }
        }
    }
}
