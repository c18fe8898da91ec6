#include "qwalk/walk_state.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kInitNormTolerance = 1e-12;

} // namespace

Spinor initial_spinor(const InitialStateKind& init) {
    constexpr double h = 1.0 / std::numbers::sqrt2;
    return std::visit(Overloaded{
                          [](SymmetricInit) { return Spinor{h, Complex(0.0, h)}; },
                          [](AsymmetricInit) { return Spinor{h, h}; },
                          [](const CustomInit& c) {
                              const double n = c.spinor.norm_squared();
                              if (!std::isfinite(n) || std::abs(n - 1.0) > kInitNormTolerance) {
                                  throw DomainError("custom initial spinor must have norm 1, got |a|^2+|b|^2 = " +
                                                    std::to_string(n));
                              }
                              return c.spinor;
                          },
                      },
                      init);
}

double PositionDistribution::at(int x) const {
    if (x < -step || x > step) {
        return 0.0;
    }
    return probs[static_cast<std::size_t>(x + step)];
}

WalkState::WalkState(int t_max, const InitialStateKind& init) : t_max_(t_max) {
    if (t_max < 1) {
        throw DomainError("t_max must be >= 1, got " + std::to_string(t_max));
    }
    amplitudes_.assign(static_cast<std::size_t>(2 * t_max + 1), Spinor{});
    at(0) = initial_spinor(init);
}

WalkState new_walk_state(int t_max, const InitialStateKind& init) { return WalkState(t_max, init); }

PositionDistribution position_distribution(const WalkState& s) {
    PositionDistribution d;
    d.step = s.step();
    d.probs.reserve(static_cast<std::size_t>(2 * s.step() + 1));
    for (int x = -s.step(); x <= s.step(); ++x) {
        d.probs.push_back(s.at(x).norm_squared());
    }
    return d;
}

double total_probability(const WalkState& s) {
    double total = 0.0;
    for (const Spinor& sp : s.amplitudes()) {
        total += sp.norm_squared();
    }
    return total;
}

} // namespace qwalk
