// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Sampling sizes and tolerances are fixed here, not configurable.
#include <chrono>
#include <iostream>

#include "waring/selftest.hpp"

int main() {
    waring::SelftestConfig cfg;
    cfg.seed = 0;
    cfg.precision = 128;
    cfg.tolerance = 1e-20;
    cfg.max_monomial_degree = 12;
    cfg.cert_samples = 200;
    cfg.zerocoeff_per_degree = 1000;
    cfg.generic_per_degree = 100;

    auto start = std::chrono::steady_clock::now();
    bool all_pass = true;
    int n = 0;
    for (const waring::SuiteResult& r : waring::run_selftest(cfg)) {
        ++n;
        std::cout << (r.pass ? "PASS" : "FAIL") << "  criterion " << n << ": " << r.name << " ("
                  << r.detail << ")\n";
        all_pass = all_pass && r.pass;
    }
    auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::cout << (all_pass ? "acceptance: all criteria passed" : "acceptance: FAILURES above") << " in "
              << elapsed.count() << " ms\n";
    return all_pass ? 0 : 1;
}
