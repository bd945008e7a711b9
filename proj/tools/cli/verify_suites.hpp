#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cyclicsum/numeric.hpp"

namespace csf::cli {

/// Outcome of one symbolic invariant suite.
struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::vector<std::string> failures; // first few counterexamples only
    bool pass() const noexcept { return failures.empty(); }
};

nlohmann::json to_json(const SuiteResult& r);

// Symbolic suites. `bound` is the verify-sym weight cap (n + k for span suites, word
// length for pointwise suites); each suite also respects its own documented ceiling.
SuiteResult suite_definition_equivalence(int bound);
SuiteResult suite_rho0_equals_rho(int bound);
SuiteResult suite_shift_law(int bound);
SuiteResult suite_rotation_invariance(int bound);
SuiteResult suite_disjoint_supports(int bound);
SuiteResult suite_diagram_commutes(int bound);
SuiteResult suite_prop31_identity(int bound);
SuiteResult suite_rank_grid(int bound);
SuiteResult suite_stratification(int bound);
SuiteResult suite_star_side_dims(int bound);

std::vector<SuiteResult> run_symbolic_suites(int bound);

/// Ker Z membership of every rho_n span element with n + k + 1 <= max_relation_weight.
SuiteResult suite_kernel_membership(int max_relation_weight, std::size_t cutoff, double tol, Series series);

/// |mzsv - mzsv_nested| within their combined error for admissible indices up to max_weight.
SuiteResult suite_star_plain_consistency(int max_weight, std::size_t cutoff);

} // namespace csf::cli
