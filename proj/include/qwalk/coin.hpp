#pragma once

#include <array>
#include <complex>

namespace qwalk {

using Complex = std::complex<double>;

inline constexpr double kUnitaryTolerance = 1e-12;

/// Parameters of the general 2x2 unitary coin
///
///     [ sqrt(rho)                  sqrt(1-rho) e^{i theta}       ]
///     [ sqrt(1-rho) e^{i phi}     -sqrt(rho) e^{i (theta + phi)} ]
///
/// with 0 <= rho <= 1 and 0 <= theta, phi <= pi.
struct CoinParams {
    double rho = 0.5;
    double theta = 0.0;
    double phi = 0.0;
};

/// Coin-space amplitudes at a single lattice site: `a` on |0>, `b` on |1>.
struct Spinor {
    Complex a{};
    Complex b{};

    double norm_squared() const { return std::norm(a) + std::norm(b); }

    friend bool operator==(const Spinor&, const Spinor&) = default;
};

/// A 2x2 matrix on coin space. Row = output basis index, column = input
/// basis index, basis order (|0>, |1>).
class CoinOperator {
public:
    using Entries = std::array<std::array<Complex, 2>, 2>;

    CoinOperator() = default;
    explicit CoinOperator(const Entries& entries) : entries_(entries) {}
    CoinOperator(Complex m00, Complex m01, Complex m10, Complex m11)
        : entries_{{{m00, m01}, {m10, m11}}} {}

    const Complex& operator()(int row, int col) const { return entries_[row][col]; }
    const Entries& entries() const { return entries_; }

    friend bool operator==(const CoinOperator&, const CoinOperator&) = default;

private:
    Entries entries_{};
};

/// Builds the general coin from `params`. Throws DomainError naming the
/// field when a parameter is outside its range.
CoinOperator make_general_coin(const CoinParams& params);

/// (1/sqrt2) [[1, 1], [1, -1]], built from exact constants.
CoinOperator hadamard();

CoinOperator identity_coin();

Spinor apply_coin(const CoinOperator& coin, const Spinor& s);

/// True iff max_ij |(C^dagger C - I)_ij| <= tol. Requires tol > 0.
bool check_unitary(const CoinOperator& coin, double tol = kUnitaryTolerance);

/// Largest entrywise modulus of the difference of two operators.
double max_entry_difference(const CoinOperator& lhs, const CoinOperator& rhs);

} // namespace qwalk
