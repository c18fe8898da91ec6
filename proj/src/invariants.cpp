#include "qwalk/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include <fmt/format.h>

#include "qwalk/detail/parallel.hpp"
#include "qwalk/engine.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/observables.hpp"

namespace qwalk {

std::vector<std::pair<std::string, std::optional<CaseSpec>>> reference_runs() {
    using F = CaseFamily;
    return {{"hadamard", std::nullopt},
            {"IA N=14", CaseSpec{F::IA, 14}},
            {"IB N=14", CaseSpec{F::IB, 14}},
            {"IIA N=14", CaseSpec{F::IIA, 14}},
            {"IIB N=14", CaseSpec{F::IIB, 14}},
            {"IIIA q=19", CaseSpec{F::IIIA, 19}},
            {"IIIB q=7", CaseSpec{F::IIIB, 7}}};
}

double oracle_max_difference(const CaseSpec& spec, int steps) {
    if (steps < 0 || steps + 1 > kMaxOracleRadius) {
        throw DomainError("oracle comparison supports at most " + std::to_string(kMaxOracleRadius - 1) + " steps");
    }
    // One site of headroom beyond the reachable support keeps the oracle
    // away from its truncated boundary.
    const int radius = steps + 1;
    const CoinLayout layout = case_layout(spec);
    const CoinTable table;
    const Eigen::MatrixXcd u = dense_step_matrix(layout, table, radius);

    WalkRun run(std::max(steps, 1), SymmetricInit{}, layout, table);
    Eigen::VectorXcd v = to_dense_vector(run.state(), radius);
    double worst = 0.0;
    for (int t = 1; t <= steps; ++t) {
        run.step();
        v = u * v;
        worst = std::max(worst, (to_dense_vector(run.state(), radius) - v).cwiseAbs().maxCoeff());
    }
    return worst;
}

namespace {

struct RunChecks {
    double prob_error = 0.0;    // |total - 1| at the final step
    bool parity = true;         // p(x, t) == 0 exactly when x + t is odd
    double asymmetry = 0.0;     // max |p(x, t) - p(-x, t)|
    double max_abs_mean = 0.0;  // max |<x>(t)|
    bool sigma_bounded = true;  // sigma(t) <= t
};

RunChecks check_run(const std::optional<CaseSpec>& spec, int steps) {
    const CoinLayout layout = spec ? case_layout(*spec) : CoinLayout({kCp}, 0);
    WalkRun run(steps, SymmetricInit{}, layout);
    RunChecks checks;
    run.evolve(steps, [&](const WalkState& s) {
        const PositionDistribution d = position_distribution(s);
        const int t = s.step();
        for (int x = -t; x <= t; ++x) {
            if (((x + t) % 2 != 0) && d.at(x) != 0.0) {
                checks.parity = false;
            }
            checks.asymmetry = std::max(checks.asymmetry, std::abs(d.at(x) - d.at(-x)));
        }
        checks.max_abs_mean = std::max(checks.max_abs_mean, std::abs(mean_position(d)));
        if (sigma(d) > t * (1.0 + 1e-12)) {
            checks.sigma_bounded = false;
        }
    });
    checks.prob_error = std::abs(total_probability(run.state()) - 1.0);
    return checks;
}

std::vector<CaseSpec> small_cases() {
    using F = CaseFamily;
    return {{F::IA, 3}, {F::IB, 3}, {F::IIA, 4}, {F::IIB, 4}, {F::IIIA, 3}, {F::IIIB, 3}};
}

} // namespace

std::vector<CheckResult> run_invariant_suite(int steps) {
    if (steps < 1) {
        throw DomainError("invariant suite needs steps >= 1, got " + std::to_string(steps));
    }
    std::vector<CheckResult> out;
    auto add = [&out](std::string name, bool passed, std::string detail) {
        out.push_back(CheckResult{std::move(name), passed, std::move(detail)});
    };

    {
        bool ok = check_unitary(hadamard()) && check_unitary(identity_coin());
        constexpr int kGrid = 8;
        for (int i = 0; i <= kGrid; ++i) {
            for (int j = 0; j <= kGrid; ++j) {
                for (int k = 0; k <= kGrid; ++k) {
                    const CoinParams p{static_cast<double>(i) / kGrid, std::numbers::pi * j / kGrid,
                                       std::numbers::pi * k / kGrid};
                    ok = ok && check_unitary(make_general_coin(p));
                }
            }
        }
        const double worst = max_entry_difference(make_general_coin({0.5, 0.0, 0.0}), hadamard());
        add("coin unitarity", ok && worst <= 1e-15,
            fmt::format("H, I and a 9^3 parameter grid; |G(1/2,0,0) - H| = {:.3g}", worst));
    }

    {
        bool periodic = true;
        bool dual = true;
        bool centered = true;
        const CoinTable table;
        const CoinTable swapped = table.swapped();
        using F = CaseFamily;
        const std::vector<std::pair<F, F>> duals = {{F::IA, F::IB}, {F::IIA, F::IIB}, {F::IIIA, F::IIIB}};
        for (const auto& [a, b] : duals) {
            for (int n : {2, 3, 4, 5, 6, 7, 14, 19}) {
                const CaseSpec sa{a, n};
                const CaseSpec sb{b, n};
                try {
                    validate(sa);
                } catch (const DomainError&) {
                    continue;
                }
                const CoinLayout la = case_layout(sa);
                const CoinLayout lb = case_layout(sb);
                for (long x = -200; x <= 200; ++x) {
                    periodic = periodic && la.id_at(x) == la.id_at(x + static_cast<long>(la.period()));
                    dual = dual && coin_at(la, swapped, x) == coin_at(lb, table, x);
                    centered = centered && la.id_at(x) == la.id_at(-x) && lb.id_at(x) == lb.id_at(-x);
                }
            }
        }
        add("layout periodicity", periodic, "coin_at(x) == coin_at(x + N), |x| <= 200");
        add("layout duality", dual, "swapping C0 and Cp maps A cases onto B cases");
        add("layout reflection symmetry", centered, "coin_at(x) == coin_at(-x) for all six families");
    }

    const auto refs = reference_runs();
    std::vector<std::optional<CaseSpec>> specs;
    for (const auto& r : refs) {
        specs.push_back(r.second);
    }
    const std::vector<RunChecks> checks =
        detail::parallel_map(specs, [steps](const std::optional<CaseSpec>& s) { return check_run(s, steps); });
    for (std::size_t i = 0; i < refs.size(); ++i) {
        const RunChecks& c = checks[i];
        const std::string& label = refs[i].first;
        add(label + ": probability conservation", c.prob_error <= 1e-10,
            fmt::format("|sum p - 1| = {:.3g} after {} steps", c.prob_error, steps));
        add(label + ": parity", c.parity, "p(x,t) == 0 exactly when x + t is odd");
        add(label + ": reflection symmetry", c.asymmetry <= 1e-12,
            fmt::format("max |p(x,t) - p(-x,t)| = {:.3g}", c.asymmetry));
        add(label + ": zero mean", c.max_abs_mean <= 1e-10, fmt::format("max |<x>| = {:.3g}", c.max_abs_mean));
        add(label + ": sigma <= t", c.sigma_bounded, "support bound");
    }

    for (const CaseSpec& s : small_cases()) {
        const double diff = oracle_max_difference(s, 8);
        add(fmt::format("oracle equivalence {} {}={}", to_string(s.family), is_family_three(s.family) ? "q" : "N",
                        s.period_or_q),
            diff <= 1e-12, fmt::format("max amplitude difference over 8 steps = {:.3g}", diff));
    }
    return out;
}

} // namespace qwalk
