#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "waring/bigfloat.hpp"

namespace waring {

struct SelftestConfig {
    std::uint64_t seed = 0;
    mpfr_prec_t precision = kDefaultPrecision;
    double tolerance = 1e-20;
    int max_monomial_degree = 12;  // a+b bound for the monomial suites
    int cert_samples = 200;        // random perp elements per (a, b, r)
    int zerocoeff_per_degree = 1000;
    int generic_per_degree = 100;
};

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// The acceptance suites, one result per criterion, in order.
std::vector<SuiteResult> run_selftest(const SelftestConfig& cfg);

}  // namespace waring
