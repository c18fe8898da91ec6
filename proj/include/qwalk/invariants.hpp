#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/layout.hpp"

namespace qwalk {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// The reference runs: the all-Hadamard line (empty spec) and the six cases
/// at IA/IB/IIA/IIB N=14, IIIA q=19, IIIB q=7.
std::vector<std::pair<std::string, std::optional<CaseSpec>>> reference_runs();

/// Engine-vs-dense-oracle agreement for `spec` over `steps` steps: largest
/// elementwise amplitude difference. Requires 0 <= steps <= 11.
double oracle_max_difference(const CaseSpec& spec, int steps);

/// Model invariants: coin unitarity, layout periodicity / duality /
/// centering, probability conservation, parity, reflection symmetry,
/// zero mean, the support bound on sigma, and oracle equivalence.
std::vector<CheckResult> run_invariant_suite(int steps = 400);

} // namespace qwalk
