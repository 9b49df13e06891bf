#pragma once

// Cross-module verification suites: closed formulas against linear algebra
// on explicit Dieudonne modules, exhaustive stratum scans, and seeded
// randomized identities for the Hilbert-modular calculus.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "shimfol/eo.hpp"
#include "shimfol/signature.hpp"

namespace shimfol::verify {

using RVFormula = std::function<int(const CMTypeDatum&, const eo::EOLabel&, PairRef)>;

struct Options {
    int max_d = 5;        // strata suites: rank bound
    int orbit_max = 3;    // strata suites: orbit size bound (inert sizes are even)
    int slope_max_d = 6;
    int slope_orbit_max = 4;
    int cascade_max_d = 5;
    int cascade_orbit_max = 4;
    std::uint64_t seed = 20240601;
    std::uint64_t cap = eo::kDefaultLabelCap;
    int random_weights = 1000;
    int random_expansions = 100;
    int max_terms = 50;
    /// Replaces eo::r_V_at in the formula-vs-kernel suite (negative controls).
    RVFormula r_V_formula;
};

struct SuiteResult {
    std::string name;
    bool pass = true;
    std::uint64_t cases = 0;
    std::string counterexample;  // first failure
    double seconds = 0.0;
};

/// Single-orbit unitary data: every d in [1, max_d], split orbits of size
/// 1..orbit_max, inert orbits of even size <= orbit_max, every signature.
std::vector<CMTypeDatum> unitary_cases(int max_d, int orbit_max);

/// Every subset of the pairs of `datum`.
std::vector<eo::PairSet> all_sigmas(const CMTypeDatum& datum);

std::string describe(const CMTypeDatum& datum);

SuiteResult suite_u21(const Options& opt);
SuiteResult suite_formula_vs_kernel(const Options& opt);
SuiteResult suite_minimal_stratum(const Options& opt);
SuiteResult suite_slope_duality(const Options& opt);
SuiteResult suite_cascade(const Options& opt);
SuiteResult suite_hilbert_dichotomies(const Options& opt);
SuiteResult suite_cone_chain(const Options& opt);
SuiteResult suite_operator_identities(const Options& opt);

/// All suites in a fixed order.
std::vector<SuiteResult> run_all(const Options& opt);

}  // namespace shimfol::verify
