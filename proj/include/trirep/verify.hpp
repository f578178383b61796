#pragma once

// Verification suites shared by the command line and the tests.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trirep/grid.hpp"
#include "trirep/models.hpp"

namespace trirep {

struct Check {
    std::string name;
    double measured = 0;
    double threshold = 0;
    bool at_least = false;  // pass when measured >= threshold instead of <=
    bool pass = false;
};

Check make_check(std::string name, double measured, double threshold, bool at_least = false);

enum class Suite { tridiagonality, orthogonality, recursion_closed_form, spectrum_oracle, all };

Suite parse_suite(const std::string& name);
std::string suite_name(Suite suite);

struct VerifyOptions {
    double perturb_alpha = 0;  // added to every basis alpha in the tridiagonality suite
    std::uint64_t seed = 20240611;
    int draws = 50;
};

/// Checks sorted by name.
std::vector<Check> run_suite(Suite suite, const VerifyOptions& options = {});

struct LevelCheck {
    Level level;
    int oracle_index = 0;
    double oracle_epsilon = 0;
    double relative_deviation = 0;
    int oracle_nodes = 0;
    int series_nodes = 0;
};

struct OracleReport {
    GridSettings grid{};
    std::vector<LevelCheck> levels;
    std::optional<int> oracle_bound_count;   // grid levels below the continuum edge
    std::optional<double> cutoff_change;     // half-line models
};

/// Grid oracle run for the levels of `spectrum(model, options)`.
OracleReport compare_with_oracle(const PotentialModel& model, const SpectrumResult& result,
                                 const SpectrumOptions& options = {});

/// Grid index of level n: oscillator parities interleave on the full line.
int oracle_index(const PotentialModel& model, const SpectrumOptions& options, int n);

}  // namespace trirep
