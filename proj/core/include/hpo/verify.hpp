#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hpo/errors.hpp"

namespace hpo {

enum class Scale { Quick, Full };
enum class Direction { Below, Above };

/// One measured check: pass means measured < threshold (Below) or
/// measured > threshold (Above). Expected-fail probes are encoded as Above
/// cases, so a passing suite proves both directions of each biconditional.
struct SuiteCase {
    std::string label;
    double measured = 0.0;
    double threshold = 0.0;
    Direction direction = Direction::Below;
    bool pass = false;
};

struct SuiteResult {
    std::string suite_name;
    std::vector<SuiteCase> cases;
    std::uint64_t seed = 0;
    double elapsed_seconds = 0.0;

    bool all_pass() const;
};

/// The known suites, in execution order: conjugation_axioms, thm9, thm26,
/// thm100, prop3, eq29, thm101, thm2_matrix, transfer_consistency.
const std::vector<std::string>& suite_names();

/// Runs one named suite deterministically for (name, seed, scale).
/// Throws UnknownSuite for an unrecognized name.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, Scale scale);

std::vector<SuiteResult> run_all(std::uint64_t seed, Scale scale);

Scale parse_scale(const std::string& text);  ///< "quick" or "full"
std::string to_string(Scale scale);

} // namespace hpo
