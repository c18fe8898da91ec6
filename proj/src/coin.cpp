#include "qwalk/coin.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

void require_range(double value, double lo, double hi, const char* field) {
    if (!(value >= lo && value <= hi)) {
        throw DomainError(std::string("coin parameter '") + field + "' = " + std::to_string(value) +
                          " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
}

} // namespace

CoinOperator make_general_coin(const CoinParams& params) {
    require_range(params.rho, 0.0, 1.0, "rho");
    require_range(params.theta, 0.0, std::numbers::pi, "theta");
    require_range(params.phi, 0.0, std::numbers::pi, "phi");

    const double diag = std::sqrt(params.rho);
    const double off = std::sqrt(1.0 - params.rho);
    return CoinOperator(diag, std::polar(off, params.theta), std::polar(off, params.phi),
                        -std::polar(diag, params.theta + params.phi));
}

CoinOperator hadamard() {
    constexpr double h = 1.0 / std::numbers::sqrt2;
    return CoinOperator(h, h, h, -h);
}

CoinOperator identity_coin() { return CoinOperator(1.0, 0.0, 0.0, 1.0); }

Spinor apply_coin(const CoinOperator& coin, const Spinor& s) {
    return Spinor{coin(0, 0) * s.a + coin(0, 1) * s.b, coin(1, 0) * s.a + coin(1, 1) * s.b};
}

bool check_unitary(const CoinOperator& coin, double tol) {
    if (!(tol > 0.0)) {
        throw DomainError("check_unitary: tolerance must be positive");
    }
    double worst = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            // (C^dagger C)_ij = sum_k conj(C_ki) C_kj
            Complex g = std::conj(coin(0, i)) * coin(0, j) + std::conj(coin(1, i)) * coin(1, j);
            if (i == j) {
                g -= 1.0;
            }
            worst = std::max(worst, std::abs(g));
        }
    }
    return worst <= tol;
}

double max_entry_difference(const CoinOperator& lhs, const CoinOperator& rhs) {
    double worst = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            worst = std::max(worst, std::abs(lhs(i, j) - rhs(i, j)));
        }
    }
    return worst;
}

} // namespace qwalk
