#include "waring/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "waring/errors.hpp"
#include "waring/form_parser.hpp"
#include "waring/json_io.hpp"
#include "waring/realroots.hpp"
#include "waring/selftest.hpp"
#include "waring/waring.hpp"

namespace waring {

namespace {

struct RunConfig {
    long precision_bits = 128;
    double tolerance = 1e-20;
    int trials = 200;
    std::uint64_t seed = 0;
    bool json = false;
};

constexpr const char* kPrecisionEnvVar = "WARING_PRECISION_BITS";

std::vector<Rational> parse_seed_roots(const std::string& csv) {
    std::vector<Rational> roots;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) roots.push_back(rational_from_string(item));
    return roots;
}

std::string format_exact_term(const ExactTerm& t, int d) {
    std::ostringstream os;
    os << to_string(t.alpha) << " * (";
    BinaryForm lin(1, {t.form.c0, t.form.c1});
    os << format_form(lin) << ")^" << d;
    return os.str();
}

std::string format_complex(const Complex& z) {
    return "(" + z.re.str() + (z.im.sign() < 0 ? " - " : " + ") + z.im.abs().str() + "i)";
}

void print_decomposition(const WaringDecomposition& dec, const RunConfig& cfg, std::ostream& out) {
    if (cfg.json) {
        out << decomposition_to_json(dec).dump() << "\n";
        return;
    }
    int d = dec.target.degree();
    out << format_form(dec.target) << " =\n";
    if (dec.exact) {
        for (const ExactTerm& t : dec.exact_terms) out << "  " << format_exact_term(t, d) << "\n";
        out << "exact, residual 0\n";
    } else {
        for (const NumericTerm& t : dec.numeric_terms)
            out << "  " << format_complex(t.alpha) << " * (" << format_complex(t.c0) << "*x0 + "
                << format_complex(t.c1) << "*x1)^" << d << "\n";
        out << "numeric at " << dec.precision << " bits, residual " << dec.residual.str() << "\n";
    }
}

int cmd_rank(bool monomial, int a, int b, const std::string& expr, Field field, const RunConfig& cfg,
             std::ostream& out) {
    RankResult res;
    if (monomial) {
        res = field == Field::real ? monomial_real_rank(a, b)
                                   : monomial_complex_rank(a, b, cfg.precision_bits);
    } else {
        BinaryForm F = parse_form(expr).form;
        if (field == Field::real) {
            RealRankInterval iv = real_rank_bounds(F, cfg.precision_bits);
            if (cfg.json) {
                nlohmann::json j{{"lower", iv.lower}};
                if (iv.upper) j["upper"] = *iv.upper;
                out << j.dump() << "\n";
            } else {
                out << "[" << iv.lower << ", " << (iv.upper ? std::to_string(*iv.upper) : "?") << "]\n";
            }
            return 0;
        }
        res = complex_rank(F, cfg.precision_bits);
    }
    if (cfg.json)
        out << rank_to_json(res).dump() << "\n";
    else
        out << res.rank << "\n";
    return 0;
}

int cmd_decompose(int a, int b, Field field, const std::string& seed_roots, const RunConfig& cfg,
                  std::ostream& out, std::ostream& err) {
    WaringDecomposition dec;
    if (field == Field::real) {
        std::optional<std::vector<Rational>> seeds;
        if (!seed_roots.empty()) seeds = parse_seed_roots(seed_roots);
        dec = monomial_real_decomposition(a, b, std::move(seeds));
    } else {
        if (!seed_roots.empty()) throw InputError("--seed-roots applies to real decompositions only");
        dec = monomial_complex_decomposition(a, b, cfg.precision_bits);
    }
    VerifyResult v = verify_decomposition(dec, cfg.tolerance);
    if (!v.ok) {
        err << "decomposition failed verification, residual " << v.residual.str() << "\n";
        return 2;
    }
    print_decomposition(dec, cfg, out);
    return 0;
}

int cmd_apolar(const std::string& expr, const RunConfig& cfg, std::ostream& out) {
    BinaryForm F = parse_form(expr).form;
    ApolarPair pair = apolar_generators(F);
    if (cfg.json) {
        nlohmann::json j{{"d1", pair.d1()}, {"d2", pair.d2()}, {"g1", format_op(pair.g1)}, {"g2", format_op(pair.g2)}};
        out << j.dump() << "\n";
    } else {
        out << "degrees (" << pair.d1() << ", " << pair.d2() << ")\n"
            << "g1 = " << format_op(pair.g1) << "\n"
            << "g2 = " << format_op(pair.g2) << "\n";
    }
    return 0;
}

int cmd_certify(int a, int b, int r, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    int lo = std::min(a, b), hi = std::max(a, b);
    if (lo < 1) throw InputError("certify needs a monomial that is not a pure power");
    if (r >= lo + hi) {
        // the expansion itself is the witness that r terms suffice
        return cmd_decompose(a, b, Field::real, "", cfg, out, err);
    }
    LowerBoundCertificate cert = real_lower_bound_certificate(lo, hi, r);
    if (cfg.json) {
        out << certificate_to_json(cert).dump() << "\n";
    } else {
        out << "x0^" << a << "*x1^" << b << " has no " << r << "-term real expansion: every element of "
            << "(M^perp)_" << r << " has zero coefficients on y0-exponents [" << cert.gap_start << ", "
            << cert.gap_end << "]\n";
    }
    return 0;
}

int cmd_table(int max_degree, const RunConfig& cfg, std::ostream& out) {
    if (max_degree < 2) throw InputError("table needs --max-degree >= 2");
    nlohmann::json rows = nlohmann::json::array();
    if (!cfg.json) out << "  a   b   complex   real\n";
    for (int a = 1; 2 * a <= max_degree; ++a)
        for (int b = a; a + b <= max_degree; ++b) {
            int cx = monomial_complex_rank(a, b, cfg.precision_bits).rank;
            int re = monomial_real_rank(a, b).rank;
            if (cfg.json)
                rows.push_back(nlohmann::json{{"a", a}, {"b", b}, {"complex", cx}, {"real", re}});
            else
                out << std::setw(3) << a << std::setw(4) << b << std::setw(10) << cx << std::setw(7) << re
                    << "\n";
        }
    if (cfg.json) out << rows.dump() << "\n";
    return 0;
}

int cmd_selftest(const RunConfig& cfg, std::ostream& out) {
    SelftestConfig sc;
    sc.seed = cfg.seed;
    sc.precision = cfg.precision_bits;
    sc.tolerance = cfg.tolerance;
    sc.cert_samples = cfg.trials;
    sc.zerocoeff_per_degree = cfg.trials;
    sc.generic_per_degree = std::max(100, cfg.trials);
    bool all_pass = true;
    for (const SuiteResult& r : run_selftest(sc)) {
        out << (r.pass ? "PASS" : "FAIL") << "  " << r.name << " (" << r.detail << ")\n";
        all_pass = all_pass && r.pass;
    }
    return all_pass ? 0 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Waring ranks and decompositions of binary forms"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env = std::getenv(kPrecisionEnvVar)) cfg.precision_bits = std::atol(env);
    app.add_option("--precision", cfg.precision_bits, "working precision in bits (>= 64)");
    app.add_option("--tolerance", cfg.tolerance, "residual tolerance for numeric verification");
    app.add_flag("--json", cfg.json, "machine-readable JSON output");

    std::vector<int> monomial;
    std::string expr, field_name = "complex", seed_roots;
    int terms = 0, max_degree = 12;

    CLI::App* rank = app.add_subcommand("rank", "Waring rank of a monomial or a form");
    rank->add_option("--monomial", monomial, "exponents A B of x0^A*x1^B")->expected(2);
    rank->add_option("--form", expr, "form expression, e.g. \"x0*x1^2\"");
    rank->add_option("--field", field_name, "real or complex")->check(CLI::IsMember({"real", "complex"}));

    CLI::App* decompose = app.add_subcommand("decompose", "explicit Waring decomposition of a monomial");
    decompose->add_option("--monomial", monomial, "exponents A B")->expected(2)->required();
    decompose->add_option("--field", field_name, "real or complex")->check(CLI::IsMember({"real", "complex"}));
    decompose->add_option("--seed-roots", seed_roots, "comma-separated distinct positive rationals");

    CLI::App* apolar = app.add_subcommand("apolar", "apolar ideal generator pair of a form");
    apolar->add_option("--form", expr, "form expression")->required();

    CLI::App* certify = app.add_subcommand("certify", "real lower-bound certificate or witness");
    certify->add_option("--monomial", monomial, "exponents A B")->expected(2)->required();
    certify->add_option("--terms", terms, "attempted real term count R")->required();

    CLI::App* table = app.add_subcommand("table", "complex/real rank table for all monomials");
    table->add_option("--max-degree", max_degree, "largest total degree a+b");

    CLI::App* selftest = app.add_subcommand("selftest", "run the acceptance property suites");
    selftest->add_option("--trials", cfg.trials, "samples per property case");
    selftest->add_option("--seed", cfg.seed, "deterministic 64-bit seed");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (cfg.precision_bits < 64) throw InputError("precision must be at least 64 bits");
        if (cfg.tolerance <= 0) throw InputError("tolerance must be positive");
        Field field = field_name == "real" ? Field::real : Field::complex;

        if (rank->parsed()) {
            bool monomial_mode = !monomial.empty();
            if (monomial_mode == !expr.empty())
                throw InputError("rank needs exactly one of --monomial or --form");
            return cmd_rank(monomial_mode, monomial_mode ? monomial[0] : 0,
                            monomial_mode ? monomial[1] : 0, expr, field, cfg, out);
        }
        if (decompose->parsed()) {
            int a = monomial[0], b = monomial[1];
            if (std::min(a, b) < 1) throw InputError("decompose needs 0 < min(a, b)");
            return cmd_decompose(a, b, field, seed_roots, cfg, out, err);
        }
        if (apolar->parsed()) return cmd_apolar(expr, cfg, out);
        if (certify->parsed()) return cmd_certify(monomial[0], monomial[1], terms, cfg, out, err);
        if (table->parsed()) return cmd_table(max_degree, cfg, out);
        if (selftest->parsed()) return cmd_selftest(cfg, out);
        throw InputError("no command given");
    } catch (const InvariantError& e) {
        err << "internal invariant violation: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace waring
