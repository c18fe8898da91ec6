#pragma once

#include <span>
#include <variant>
#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk {

/// (|0> + i|1>)/sqrt2 at the origin; symmetric spreading under the Hadamard coin.
struct SymmetricInit {};
/// (|0> + |1>)/sqrt2 at the origin.
struct AsymmetricInit {};
/// Any normalized spinor at the origin.
struct CustomInit {
    Spinor spinor;
};

using InitialStateKind = std::variant<SymmetricInit, AsymmetricInit, CustomInit>;

/// Spinor placed at x = 0 for the given initial-state kind. Throws DomainError
/// if a custom spinor is not normalized within 1e-12.
Spinor initial_spinor(const InitialStateKind& init);

/// p(x, t) over x in [-t, t].
struct PositionDistribution {
    int step = 0;
    std::vector<double> probs; // probs[x + step]

    int min_x() const { return -step; }
    int max_x() const { return step; }
    /// p(x); zero outside [-t, t].
    double at(int x) const;
};

/// Walker-plus-coin wavefunction on the window [-t_max, t_max].
///
/// The window is sized to the run length so the walk never reaches its edge
/// and the infinite line is represented exactly. Amplitudes outside
/// [-step, step] are exact zeros.
class WalkState {
public:
    WalkState(int t_max, const InitialStateKind& init);

    int step() const { return step_; }
    int t_max() const { return t_max_; }

    const Spinor& at(int x) const { return amplitudes_[index(x)]; }
    Spinor& at(int x) { return amplitudes_[index(x)]; }

    /// All window amplitudes, index 0 <-> x = -t_max.
    std::span<const Spinor> amplitudes() const { return amplitudes_; }
    std::span<Spinor> amplitudes() { return amplitudes_; }

    std::size_t index(int x) const { return static_cast<std::size_t>(x + t_max_); }

    // Used by the evolution engine after it has filled a new buffer.
    void swap_buffer(std::vector<Spinor>& next) { amplitudes_.swap(next); }
    void advance_step() { ++step_; }

private:
    int t_max_;
    int step_ = 0;
    std::vector<Spinor> amplitudes_;
};

WalkState new_walk_state(int t_max, const InitialStateKind& init);

PositionDistribution position_distribution(const WalkState& s);

double total_probability(const WalkState& s);

} // namespace qwalk
