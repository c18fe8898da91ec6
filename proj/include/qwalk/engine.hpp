#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/layout.hpp"
#include "qwalk/walk_state.hpp"

namespace qwalk {

/// Called after every step with the freshly updated state.
using StepRecorder = std::function<void(const WalkState&)>;

/// One walk: a state evolving under a fixed coin layout.
///
/// Each step applies the site's coin and then the conditional shift, which
/// moves the |0> component to x+1 and the |1> component to x-1. No
/// renormalization is ever applied.
class WalkRun {
public:
    WalkRun(WalkState state, CoinLayout layout, CoinTable table);

    /// Convenience: fresh state with window `t_max`.
    WalkRun(int t_max, const InitialStateKind& init, CoinLayout layout, CoinTable table = CoinTable{});

    const WalkState& state() const { return state_; }
    const CoinLayout& layout() const { return layout_; }
    const CoinTable& table() const { return table_; }

    int remaining_steps() const { return state_.t_max() - state_.step(); }

    /// Throws StateError when the step budget is exhausted.
    void step();

    /// Applies `steps` steps, invoking `recorder` after each. Throws
    /// StateError up front if the budget would be exceeded.
    void evolve(int steps, const StepRecorder& recorder = {});

private:
    WalkState state_;
    CoinLayout layout_;
    CoinTable table_;
    std::vector<CoinOperator> site_coins_; // per window site, index x + t_max
    std::vector<Spinor> scratch_;
};

/// Free-function forms operating on a run in place.
void step(WalkRun& run);
void evolve(WalkRun& run, int steps, const StepRecorder& recorder = {});

inline constexpr int kMaxOracleRadius = 12;

/// Dense matrix of U = sum_x S_x (C_x (x) I) restricted to x in [-R, R],
/// basis ordered position-major, coin-minor: index 2*(x+R) + coin.
/// Amplitude shifted past the window edge is dropped, so the matrix is only
/// an isometry on states that stay clear of the boundary. Throws DomainError
/// for R < 0 or R > 12.
Eigen::MatrixXcd dense_step_matrix(const CoinLayout& layout, const CoinTable& table, int window_radius);

/// Packs a state's amplitudes on [-R, R] in the dense-oracle ordering; sites
/// beyond the state's own window are zero.
Eigen::VectorXcd to_dense_vector(const WalkState& state, int window_radius);

} // namespace qwalk
