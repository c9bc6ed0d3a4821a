#include "waring/realroots.hpp"

#include <algorithm>

#include "waring/errors.hpp"

namespace waring {

namespace {

void require_nonzero(const UniPoly& p, const char* who) {
    if (p.is_zero()) throw InputError(std::string(who) + ": zero polynomial");
}

// Sign variations in a sign sequence ignoring zeros.
int variations(const std::vector<int>& signs) {
    int count = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

}  // namespace

SignVariationReport sign_variations(const UniPoly& p) {
    require_nonzero(p, "sign_variations");
    SignVariationReport rep;
    int prev = 0;
    for (int j = p.degree(); j >= 0; --j) {
        int s = sgn(p.coeff(j));
        if (s == 0) {
            rep.zero_coefficient_indices.push_back(j);
            continue;
        }
        if (prev != 0 && s != prev) ++rep.variations;
        prev = s;
    }
    std::sort(rep.zero_coefficient_indices.begin(), rep.zero_coefficient_indices.end());
    return rep;
}

DescartesBound descartes_positive_bound(const UniPoly& p) {
    int v = sign_variations(p).variations;
    return {v, v % 2 == 0 ? Parity::even : Parity::odd};
}

int sturm_count_distinct(const UniPoly& p) {
    require_nonzero(p, "sturm_count_distinct");
    if (p.degree() == 0) return 0;
    std::vector<int> at_minus, at_plus;
    UniPoly a = p, b = p.derivative();
    while (true) {
        int d = a.degree();
        int lead = sgn(a.leading());
        at_plus.push_back(lead);
        at_minus.push_back(d % 2 == 0 ? lead : -lead);
        if (b.is_zero()) break;
        UniPoly r = a.divmod(b).second;
        a = std::move(b);
        b = -std::move(r);
    }
    return variations(at_minus) - variations(at_plus);
}

bool is_totally_real_distinct(const UniPoly& p) {
    require_nonzero(p, "is_totally_real_distinct");
    if (!is_squarefree(p)) return false;
    return sturm_count_distinct(p) == p.degree();
}

std::optional<GapCertificate> gap_certificate(const UniPoly& p) {
    require_nonzero(p, "gap_certificate");
    for (int i = 1; i <= p.degree(); ++i)
        if (p.coeff(i) == 0 && p.coeff(i - 1) == 0) return GapCertificate{i};
    return std::nullopt;
}

std::vector<std::pair<Rational, int>> extract_rational_roots(const UniPoly& p) {
    require_nonzero(p, "extract_rational_roots");
    std::vector<std::pair<Rational, int>> roots;
    UniPoly cur = p;

    // factor out x^k
    int zero_mult = 0;
    while (cur.degree() > 0 && cur.coeff(0) == 0) {
        std::vector<Rational> shifted(cur.coeffs().begin() + 1, cur.coeffs().end());
        cur = UniPoly(std::move(shifted));
        ++zero_mult;
    }
    if (zero_mult > 0) roots.emplace_back(Rational(0), zero_mult);
    if (cur.degree() == 0) return roots;

    // clear denominators: integer polynomial with the same roots
    Integer den(1);
    for (const Rational& c : cur.coeffs())
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    Integer lead = cur.leading().get_num() * (den / cur.leading().get_den());
    Integer trail = cur.coeff(0).get_num() * (den / cur.coeff(0).get_den());

    // Divisors via trial division up to a fixed cap; whatever cofactor is
    // left over enters as one atomic factor. Divisors mixing two distinct
    // large primes are therefore missed, and callers fall back to numeric
    // roots in that case — the candidate set stays a bound, never a lie.
    auto divisors = [](Integer n) {
        n = abs(n);
        constexpr unsigned long kTrialCap = 1 << 16;
        constexpr std::size_t kDivisorCap = 1 << 13;
        std::vector<std::pair<Integer, int>> factors;
        for (unsigned long p = 2; p <= kTrialCap && n > 1; p += (p == 2 ? 1 : 2)) {
            if (n % p != 0) continue;
            int mult = 0;
            while (n % p == 0) {
                n /= p;
                ++mult;
            }
            factors.emplace_back(Integer(p), mult);
        }
        if (n > 1) factors.emplace_back(n, 1);  // large prime or opaque composite
        std::vector<Integer> divs{Integer(1)};
        for (const auto& [p, mult] : factors) {
            std::size_t base = divs.size();
            Integer power(1);
            for (int e = 1; e <= mult && divs.size() < kDivisorCap; ++e) {
                power *= p;
                for (std::size_t i = 0; i < base && divs.size() < kDivisorCap; ++i)
                    divs.push_back(divs[i] * power);
            }
        }
        return divs;
    };

    // Every divisor pair is screened by evaluating the integer polynomial
    // at p/q modulo a Mersenne prime: sum A_j p^j q^(n-j) mod M. A nonzero
    // value rules the candidate out exactly; the rare survivors (actual
    // roots plus ~1/M chance collisions) get the exact deflation test.
    const int n = cur.degree();
    std::vector<Integer> A;
    A.reserve(static_cast<std::size_t>(n) + 1);
    for (const Rational& c : cur.coeffs()) A.push_back(c.get_num() * (den / c.get_den()));
    constexpr unsigned long kM = (1ul << 61) - 1;
    std::vector<unsigned long> Amod;
    // mpz_fdiv_ui floors, so negative coefficients already reduce correctly
    for (const Integer& a : A) Amod.push_back(mpz_fdiv_ui(a.get_mpz_t(), kM));
    auto vanishes_mod = [&](unsigned long pm, unsigned long qm) {
        unsigned __int128 acc = 0, qk = 1;
        for (int j = n; j >= 0; --j) {
            acc = (acc * pm + static_cast<unsigned __int128>(Amod[static_cast<std::size_t>(j)]) * qk) % kM;
            qk = qk * qm % kM;
        }
        return acc == 0;
    };

    std::vector<Rational> candidates;
    const std::vector<Integer> dens = divisors(lead);
    for (const Integer& num : divisors(trail)) {
        unsigned long pm = mpz_fdiv_ui(num.get_mpz_t(), kM);
        for (const Integer& d : dens) {
            unsigned long qm = mpz_fdiv_ui(d.get_mpz_t(), kM);
            // positive candidate num/d, negative candidate -num/d
            if (vanishes_mod(pm, qm)) candidates.emplace_back(num, d);
            if (vanishes_mod(pm == 0 ? 0 : kM - pm, qm)) candidates.emplace_back(-num, d);
        }
    }
    for (Rational& c : candidates) c.canonicalize();
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const Rational& c : candidates) {
        int mult = 0;
        while (cur.degree() > 0 && cur(c) == 0) {
            // deflate by (x - c), exact synthetic division
            cur = cur.divmod(UniPoly{-c, Rational(1)}).first;
            ++mult;
        }
        if (mult > 0) roots.emplace_back(c, mult);
    }

    // endgame: once deflation leaves degree <= 2, solve directly — this is
    // immune to the divisor caps above
    if (cur.degree() == 1) {
        roots.emplace_back(-cur.coeff(0) / cur.coeff(1), 1);
    } else if (cur.degree() == 2) {
        Rational disc = cur.coeff(1) * cur.coeff(1) - rat(4) * cur.coeff(2) * cur.coeff(0);
        if (disc >= 0 && mpz_perfect_square_p(disc.get_num().get_mpz_t()) &&
            mpz_perfect_square_p(disc.get_den().get_mpz_t())) {
            Rational s(sqrt(disc.get_num()), sqrt(disc.get_den()));
            Rational two_a = rat(2) * cur.coeff(2);
            if (s == 0) {
                roots.emplace_back(-cur.coeff(1) / two_a, 2);
            } else {
                roots.emplace_back((-cur.coeff(1) + s) / two_a, 1);
                roots.emplace_back((-cur.coeff(1) - s) / two_a, 1);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

UniPoly real_rooted_with_zero_coeff(int d, int i, std::vector<Rational> seeds) {
    if (d < 1 || i < 0 || i >= d) throw InputError("real_rooted_with_zero_coeff: need 0 <= i < d >= 1");
    if (seeds.empty())
        for (int k = 1; k < d; ++k) seeds.push_back(Rational(k));
    if (static_cast<int>(seeds.size()) != d - 1)
        throw InputError("real_rooted_with_zero_coeff: need d-1 seed roots");
    {
        std::vector<Rational> sorted = seeds;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t k = 0; k < sorted.size(); ++k) {
            if (sorted[k] <= 0) throw InputError("seed roots must be positive");
            if (k > 0 && sorted[k] == sorted[k - 1]) throw InputError("seed roots must be distinct");
        }
    }
    // coefficient of x^i in prod (x - a_j) is (-1)^{d-i} E_{d-i}; solve
    // E_{d-i}(seeds) + a_d E_{d-i-1}(seeds) = 0 for the last root
    std::size_t e = static_cast<std::size_t>(d - i);
    Rational lower = elementary_symmetric(seeds, e - 1);
    if (lower == 0) throw InvariantError("real_rooted_with_zero_coeff: vanishing symmetric function");
    // E_e of d-1 values is zero when e = d (the i = 0 case: last root is 0)
    Rational upper = e <= seeds.size() ? elementary_symmetric(seeds, e) : Rational(0);
    Rational last = -upper / lower;
    std::vector<Rational> roots = seeds;
    roots.push_back(last);
    UniPoly f = UniPoly::from_roots(roots);
    if (f.coeff(i) != 0) throw InvariantError("real_rooted_with_zero_coeff: coefficient did not vanish");
    return f;
}

}  // namespace waring
