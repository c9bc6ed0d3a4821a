#include "waring/selftest.hpp"

#include <sstream>

#include "waring/apolarity.hpp"
#include "waring/errors.hpp"
#include "waring/form_parser.hpp"
#include "waring/json_io.hpp"
#include "waring/realroots.hpp"
#include "waring/rng.hpp"
#include "waring/waring.hpp"

namespace waring {

namespace {

BinaryForm random_form(SplitMix64& rng, int degree) {
    BinaryForm F(degree);
    do {
        for (int j = 0; j <= degree; ++j) F.coeff(j) = rng.next_rational();
    } while (F.is_zero());
    return F;
}

// Random element of (M^perp)_r for M = x0^a x1^b: free coefficients exactly
// on the monomials y0^i y1^{r-i} with i >= a+1 or i <= r-b-1.
DiffOp random_perp_element(SplitMix64& rng, int a, int b, int r) {
    DiffOp op(r);
    bool nonzero = false;
    for (int i = 0; i <= r; ++i) {
        if (i < a + 1 && i > r - b - 1) continue;
        Rational c = rng.next_rational();
        if (c != 0) nonzero = true;
        op.coeff(r - i) = c;  // coeff index is the y1-exponent
    }
    if (!nonzero && r > a) op.coeff(r - (a + 1)) = 1;
    return op;
}

// Product of r distinct real linear forms: dehomogenization squarefree with
// all roots real and degree drop at most one.
bool distinct_real_factors(const DiffOp& op) {
    UniPoly f = op.dehomogenize();
    if (f.is_zero()) return false;
    if (f.degree() < op.degree() - 1) return false;
    if (!is_squarefree(f)) return false;
    return sturm_count_distinct(f) == f.degree();
}

std::string describe(int a, int b, int r = -1) {
    std::ostringstream os;
    os << "(a=" << a << ", b=" << b;
    if (r >= 0) os << ", r=" << r;
    os << ")";
    return os.str();
}

SuiteResult complex_monomial_suite(const SelftestConfig& cfg) {
    SuiteResult res{"complex monomial rank b+1 with roots-of-unity witness", true, ""};
    int cases = 0;
    for (int a = 1; 2 * a <= cfg.max_monomial_degree; ++a)
        for (int b = a; a + b <= cfg.max_monomial_degree; ++b) {
            ++cases;
            RankResult mono = monomial_complex_rank(a, b, cfg.precision);
            VerifyResult v = verify_decomposition(mono.witness, cfg.tolerance);
            RankResult sylv = complex_rank(BinaryForm::monomial(a, b), cfg.precision);
            if (mono.rank != b + 1 || static_cast<int>(mono.witness.term_count()) != b + 1 || !v.ok ||
                sylv.rank != b + 1) {
                res.pass = false;
                res.detail = "failed at " + describe(a, b);
                return res;
            }
        }
    res.detail = std::to_string(cases) + " monomials, residuals within tolerance";
    return res;
}

SuiteResult real_monomial_suite(const SelftestConfig& cfg) {
    SuiteResult res{"real monomial decomposition with a+b exact terms", true, ""};
    int cases = 0;
    for (int a = 1; 2 * a <= cfg.max_monomial_degree; ++a)
        for (int b = a; a + b <= cfg.max_monomial_degree; ++b) {
            ++cases;
            WaringDecomposition dec = monomial_real_decomposition(a, b);
            VerifyResult v = verify_decomposition(dec, cfg.tolerance);
            if (!dec.exact || static_cast<int>(dec.term_count()) != a + b || !v.ok) {
                res.pass = false;
                res.detail = "failed at " + describe(a, b);
                return res;
            }
        }
    res.detail = std::to_string(cases) + " monomials, all residuals identically zero";
    return res;
}

SuiteResult lower_bound_suite(const SelftestConfig& cfg) {
    SuiteResult res{"real lower bound certificates and perp sampling", true, ""};
    long samples = 0;
    for (int a = 1; 2 * a <= cfg.max_monomial_degree; ++a)
        for (int b = a; a + b <= cfg.max_monomial_degree; ++b)
            for (int r = 1; r <= a + b - 1; ++r) {
                LowerBoundCertificate cert = real_lower_bound_certificate(a, b, r);
                if (cert.gap_start != std::max(0, r - b) || cert.gap_end != std::min(r, a) ||
                    cert.gap_end < cert.gap_start) {
                    res.pass = false;
                    res.detail = "bad certificate at " + describe(a, b, r);
                    return res;
                }
                if (r <= a) continue;  // (M^perp)_r = 0, nothing to sample
                SplitMix64 rng(cfg.seed, 0x300 + static_cast<std::uint64_t>((a * 16 + b) * 16 + r));
                for (int s = 0; s < cfg.cert_samples; ++s) {
                    ++samples;
                    DiffOp op = random_perp_element(rng, a, b, r);
                    for (int i = cert.gap_start; i <= cert.gap_end; ++i)
                        if (op.coeff(r - i) != 0) {
                            res.pass = false;
                            res.detail = "sample escapes the forced gap at " + describe(a, b, r);
                            return res;
                        }
                    if (distinct_real_factors(op)) {
                        res.pass = false;
                        res.detail = "counterexample sample at " + describe(a, b, r);
                        return res;
                    }
                }
            }
    res.detail = std::to_string(samples) + " sampled perp elements, zero counterexamples";
    return res;
}

SuiteResult allrealroots_suite(const SelftestConfig&) {
    SuiteResult res{"totally real polynomials with a forced zero coefficient", true, ""};
    int cases = 0;
    for (int d = 1; d <= 15; ++d)
        for (int i = 0; i < d; ++i) {
            ++cases;
            UniPoly f = real_rooted_with_zero_coeff(d, i);
            if (f.coeff(i) != 0 || f.degree() != d || sturm_count_distinct(f) != d) {
                res.pass = false;
                res.detail = "failed at d=" + std::to_string(d) + ", i=" + std::to_string(i);
                return res;
            }
        }
    res.detail = std::to_string(cases) + " (degree, index) pairs";
    return res;
}

SuiteResult zerocoeff_suite(const SelftestConfig& cfg) {
    SuiteResult res{"consecutive zero coefficients forbid d distinct real roots", true, ""};
    long cases = 0;
    for (int d = 3; d <= 10; ++d) {
        SplitMix64 rng(cfg.seed, 0x500 + static_cast<std::uint64_t>(d));
        for (int t = 0; t < cfg.zerocoeff_per_degree; ++t) {
            ++cases;
            std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
            for (int j = 0; j < d; ++j) c[static_cast<std::size_t>(j)] = rng.next_rational();
            c[static_cast<std::size_t>(d)] = rng.next_nonzero_rational();
            int i = static_cast<int>(rng.next_in(2, d - 1));  // interior pair
            c[static_cast<std::size_t>(i)] = 0;
            c[static_cast<std::size_t>(i - 1)] = 0;
            UniPoly p(std::move(c));
            if (!gap_certificate(p)) {
                res.pass = false;
                res.detail = "generator lost the forced gap";
                return res;
            }
            if (sturm_count_distinct(p) >= d) {
                res.pass = false;
                res.detail = "counterexample at degree " + std::to_string(d);
                return res;
            }
        }
    }
    res.detail = std::to_string(cases) + " forced-gap polynomials";
    return res;
}

SuiteResult sylvester_suite(const SelftestConfig& cfg) {
    SuiteResult res{"Sylvester fixtures: x0*x1^(d-1) and generic ranks", true, ""};
    for (int d = 2; d <= 12; ++d) {
        RankResult r = complex_rank(BinaryForm::monomial(1, d - 1), cfg.precision);
        if (r.rank != d) {
            res.pass = false;
            res.detail = "x0*x1^" + std::to_string(d - 1) + " gave rank " + std::to_string(r.rank);
            return res;
        }
    }
    long misses = 0, total = 0;
    for (int d = 2; d <= 9; ++d) {
        SplitMix64 rng(cfg.seed, 0x600 + static_cast<std::uint64_t>(d));
        int expected = (d + 2) / 2;  // ceil((d+1)/2)
        int allowed = cfg.generic_per_degree / 100;
        int bad = 0;
        for (int t = 0; t < cfg.generic_per_degree; ++t) {
            ++total;
            if (complex_rank(random_form(rng, d), cfg.precision).rank != expected) {
                ++bad;
                ++misses;
            }
        }
        if (bad > allowed) {
            res.pass = false;
            res.detail = "degree " + std::to_string(d) + ": " + std::to_string(bad) + " non-generic ranks";
            return res;
        }
    }
    res.detail = std::to_string(total) + " random forms, " + std::to_string(misses) + " non-generic";
    return res;
}

SuiteResult structure_suite(const SelftestConfig& cfg) {
    SuiteResult res{"apolar pair degrees, witness verification, JSON round trips", true, ""};
    for (int d = 1; d <= 10; ++d) {
        SplitMix64 rng(cfg.seed, 0x700 + static_cast<std::uint64_t>(d));
        for (int t = 0; t < 100; ++t) {
            BinaryForm F = random_form(rng, d);
            ApolarPair pair = apolar_generators(F);
            if (pair.d1() + pair.d2() != d + 2 || !apply(pair.g1, F).is_zero() || !apply(pair.g2, F).is_zero()) {
                res.pass = false;
                res.detail = "apolar pair structure failed at degree " + std::to_string(d);
                return res;
            }
        }
    }
    auto roundtrip = [](const nlohmann::json& j, bool exact_dec, bool cert) {
        std::string s1 = j.dump();
        nlohmann::json parsed = cert ? certificate_to_json(certificate_from_json(nlohmann::json::parse(s1)))
                                     : decomposition_to_json(decomposition_from_json(nlohmann::json::parse(s1)));
        (void)exact_dec;
        return parsed.dump() == s1;
    };
    WaringDecomposition real_dec = monomial_real_decomposition(2, 3);
    WaringDecomposition cx_dec = monomial_complex_decomposition(2, 3, cfg.precision);
    LowerBoundCertificate cert = real_lower_bound_certificate(2, 3, 4);
    if (!verify_decomposition(real_dec, cfg.tolerance).ok || !verify_decomposition(cx_dec, cfg.tolerance).ok) {
        res.pass = false;
        res.detail = "witness verification failed";
        return res;
    }
    if (!roundtrip(decomposition_to_json(real_dec), true, false) ||
        !roundtrip(decomposition_to_json(cx_dec), false, false) ||
        !roundtrip(certificate_to_json(cert), false, true)) {
        res.pass = false;
        res.detail = "JSON round trip not byte-identical";
        return res;
    }
    res.detail = "1000 random forms plus serialization round trips";
    return res;
}

}  // namespace

std::vector<SuiteResult> run_selftest(const SelftestConfig& cfg) {
    return {
        complex_monomial_suite(cfg), real_monomial_suite(cfg), lower_bound_suite(cfg),
        allrealroots_suite(cfg),     zerocoeff_suite(cfg),     sylvester_suite(cfg),
        structure_suite(cfg),
    };
}

}  // namespace waring
