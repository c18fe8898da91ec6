#include "qwalk/engine.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "qwalk/errors.hpp"

namespace qwalk {

WalkRun::WalkRun(WalkState state, CoinLayout layout, CoinTable table)
    : state_(std::move(state)), layout_(std::move(layout)), table_(std::move(table)) {
    const int t_max = state_.t_max();
    site_coins_.reserve(static_cast<std::size_t>(2 * t_max + 1));
    for (int x = -t_max; x <= t_max; ++x) {
        site_coins_.push_back(coin_at(layout_, table_, x));
    }
    scratch_.assign(site_coins_.size(), Spinor{});
}

WalkRun::WalkRun(int t_max, const InitialStateKind& init, CoinLayout layout, CoinTable table)
    : WalkRun(WalkState(t_max, init), std::move(layout), std::move(table)) {}

void WalkRun::step() {
    const int t = state_.step();
    if (t >= state_.t_max()) {
        throw StateError("step budget exhausted: step " + std::to_string(t) + " of t_max " +
                         std::to_string(state_.t_max()));
    }

    // The next support is [-t-1, t+1], which always fits in the window since t < t_max.
    const std::size_t lo = state_.index(-t - 1);
    const std::size_t hi = state_.index(t + 1);
    for (std::size_t i = lo; i <= hi; ++i) {
        scratch_[i] = Spinor{};
    }

    auto amps = state_.amplitudes();
    for (std::size_t i = state_.index(-t); i <= state_.index(t); ++i) {
        const Spinor rotated = apply_coin(site_coins_[i], amps[i]);
        scratch_[i + 1].a += rotated.a;
        scratch_[i - 1].b += rotated.b;
    }

    state_.swap_buffer(scratch_);
    state_.advance_step();
}

void WalkRun::evolve(int steps, const StepRecorder& recorder) {
    if (steps < 0) {
        throw DomainError("evolve: step count must be nonnegative, got " + std::to_string(steps));
    }
    if (steps > remaining_steps()) {
        throw StateError("evolve: " + std::to_string(steps) + " steps requested but only " +
                         std::to_string(remaining_steps()) + " remain in the window");
    }
    for (int k = 0; k < steps; ++k) {
        step();
        if (recorder) {
            recorder(state_);
        }
    }
}

void step(WalkRun& run) { run.step(); }

void evolve(WalkRun& run, int steps, const StepRecorder& recorder) { run.evolve(steps, recorder); }

Eigen::MatrixXcd dense_step_matrix(const CoinLayout& layout, const CoinTable& table, int window_radius) {
    if (window_radius < 0 || window_radius > kMaxOracleRadius) {
        throw DomainError("dense_step_matrix: window radius must lie in [0, " + std::to_string(kMaxOracleRadius) +
                          "], got " + std::to_string(window_radius));
    }
    const int sites = 2 * window_radius + 1;
    const Eigen::Index dim = 2 * sites;
    Eigen::MatrixXcd u = Eigen::MatrixXcd::Zero(dim, dim);

    auto idx = [&](int x, int coin) { return static_cast<Eigen::Index>(2 * (x + window_radius) + coin); };

    // U = sum_x S_x (C_x (x) I), S_x = |0><0| (x) |x+1><x| + |1><1| (x) |x-1><x|.
    for (int x = -window_radius; x <= window_radius; ++x) {
        const CoinOperator& c = coin_at(layout, table, x);
        Eigen::Matrix2cd coin;
        coin << c(0, 0), c(0, 1), c(1, 0), c(1, 1);

        Eigen::MatrixXcd coin_at_x = Eigen::MatrixXcd::Zero(dim, dim);
        coin_at_x.block(idx(x, 0), idx(x, 0), 2, 2) = coin;

        Eigen::MatrixXcd shift_x = Eigen::MatrixXcd::Zero(dim, dim);
        if (x + 1 <= window_radius) {
            shift_x(idx(x + 1, 0), idx(x, 0)) = 1.0;
        }
        if (x - 1 >= -window_radius) {
            shift_x(idx(x - 1, 1), idx(x, 1)) = 1.0;
        }
        u += shift_x * coin_at_x;
    }
    return u;
}

Eigen::VectorXcd to_dense_vector(const WalkState& state, int window_radius) {
    if (window_radius < 0) {
        throw DomainError("to_dense_vector: window radius must be nonnegative");
    }
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(2 * (2 * window_radius + 1));
    const int reach = std::min(window_radius, state.t_max());
    for (int x = -reach; x <= reach; ++x) {
        const Spinor& s = state.at(x);
        v(2 * (x + window_radius)) = s.a;
        v(2 * (x + window_radius) + 1) = s.b;
    }
    return v;
}

} // namespace qwalk
