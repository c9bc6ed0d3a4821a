#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "waring/binary_form.hpp"
#include "waring/rational.hpp"
#include "waring/realroots.hpp"
#include "waring/rng.hpp"
#include "waring/unipoly.hpp"

using namespace waring;

TEST_CASE("from_roots basic shapes") {
    CHECK(UniPoly::from_roots({}) == UniPoly{Rational(1)});
    CHECK(UniPoly::from_roots({Rational(0), Rational(0)}) == UniPoly{Rational(0), Rational(0), Rational(1)});
    // (x-1)(x-2)(x+2/3) = x^3 - (7/3)x^2 + 0x + 4/3
    UniPoly p = UniPoly::from_roots({rat(1), rat(2), rat(-2, 3)});
    CHECK(p == UniPoly{rat(4, 3), rat(0), rat(-7, 3), rat(1)});
}

TEST_CASE("from_roots round-trips through rational root extraction") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        int n = static_cast<int>(rng.next_in(1, 6));
        std::vector<Rational> roots;
        for (int i = 0; i < n; ++i) roots.push_back(rng.next_rational(6, 4));
        UniPoly p = UniPoly::from_roots(roots);
        auto found = extract_rational_roots(p);
        std::sort(roots.begin(), roots.end());
        std::vector<Rational> recovered;
        for (const auto& [root, mult] : found)
            for (int k = 0; k < mult; ++k) recovered.push_back(root);
        CHECK(recovered == roots);
    }
}

TEST_CASE("elementary symmetric functions") {
    CHECK(elementary_symmetric({}, 0) == 1);
    CHECK(elementary_symmetric({rat(5), rat(-2)}, 0) == 1);
    CHECK(elementary_symmetric({rat(1), rat(2), rat(3)}, 2) == 11);
    CHECK(elementary_symmetric({rat(1), rat(2), rat(3)}, 3) == 6);
    std::vector<Rational> one{rat(1)};
    CHECK_THROWS_AS(elementary_symmetric(one, 2), InputError);
}

// brute-force subset-sum oracle
static Rational esym_oracle(const std::vector<Rational>& v, std::size_t i) {
    Rational total(0);
    std::size_t n = v.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != i) continue;
        Rational prod(1);
        for (std::size_t k = 0; k < n; ++k)
            if (mask & (std::size_t{1} << k)) prod *= v[k];
        total += prod;
    }
    return total;
}

TEST_CASE("elementary symmetric matches Vieta and the subset oracle") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.next_in(1, 8));
        std::vector<Rational> v;
        for (std::size_t i = 0; i < n; ++i) v.push_back(rng.next_rational(5, 3));
        UniPoly p = UniPoly::from_roots(v);
        for (std::size_t i = 0; i <= n; ++i) {
            Rational e = elementary_symmetric(v, i);
            CHECK(e == esym_oracle(v, i));
            Rational sign = (i % 2 == 0) ? Rational(1) : Rational(-1);
            CHECK(e == sign * p.coeff(static_cast<int>(n - i)));
        }
    }
}

TEST_CASE("expand_power matches the binomial theorem") {
    CHECK(expand_power(LinearForm(rat(1), rat(1)), 2) == BinaryForm(2, {rat(1), rat(2), rat(1)}));
    CHECK(expand_power(LinearForm(rat(1), rat(-1)), 3) == BinaryForm(3, {rat(1), rat(-3), rat(3), rat(-1)}));
    CHECK(expand_power(LinearForm(rat(0), rat(1)), 3) == BinaryForm(3, {rat(0), rat(0), rat(0), rat(1)}));
}

TEST_CASE("expand_power is multiplicative in the degree") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        LinearForm L(Rational(1), rng.next_rational(7, 5));
        for (int d = 1; d <= 12; ++d)
            CHECK(expand_power(L, d) == expand_power(L, d - 1) * expand_power(L, 1));
    }
}

TEST_CASE("linear forms normalize to a canonical projective representative") {
    CHECK(LinearForm(rat(2), rat(6)) == LinearForm(rat(1), rat(3)));
    CHECK(LinearForm(rat(0), rat(-5)) == LinearForm(rat(0), rat(1)));
    CHECK_THROWS_AS(LinearForm(rat(0), rat(0)), InputError);
}

TEST_CASE("squarefree machinery") {
    CHECK(squarefree_part(UniPoly{rat(0), rat(0), rat(1)}) == UniPoly{rat(0), rat(1)});  // x^2 -> x
    UniPoly cube_minus = UniPoly{rat(0), rat(-1), rat(0), rat(1)};                       // x^3 - x
    CHECK(squarefree_part(cube_minus) == cube_minus);
    CHECK(is_squarefree(cube_minus));
    // (x-1)^2 (x+2) -> (x-1)(x+2)
    UniPoly p = UniPoly::from_roots({rat(1), rat(1), rat(-2)});
    CHECK(squarefree_part(p) == UniPoly::from_roots({rat(1), rat(-2)}));
    CHECK_FALSE(is_squarefree(p));
    CHECK_THROWS_AS(squarefree_part(UniPoly()), InputError);
}

TEST_CASE("results stay in lowest terms") {
    Rational q = rat(6, 4) * rat(2, 3);
    CHECK(q.get_num() == 1);
    CHECK(q.get_den() == 1);
    UniPoly p = UniPoly::from_roots({rat(2, 4), rat(-2, 4)});  // x^2 - 1/4
    CHECK(p.coeff(0).get_den() == 4);
    CHECK(p.coeff(0).get_num() == -1);
}

TEST_CASE("binary form plumbing") {
    BinaryForm M = BinaryForm::monomial(1, 2);
    CHECK(M.degree() == 3);
    CHECK(M.coeff(2) == 1);
    CHECK(M.transpose() == BinaryForm::monomial(2, 1));
    CHECK(BinaryForm(4).is_zero());
    CHECK(format_form(M) == "x0*x1^2");
}

TEST_CASE("substitution composes with expansion") {
    // (x0 + 2 x1)^3 under x0 -> x0 - x1, x1 -> x1 is (x0 + x1)^3
    BinaryForm F = expand_power(LinearForm(rat(1), rat(2)), 3);
    BinaryForm G = substitute(F, rat(1), rat(-1), rat(0), rat(1));
    CHECK(G == expand_power(LinearForm(rat(1), rat(1)), 3));
}
