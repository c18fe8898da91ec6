#include <doctest.h>

#include <cmath>
#include <vector>

#include "qwalk/engine.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/invariants.hpp"

using namespace qwalk;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

WalkRun case_run(CaseSpec spec, int t_max) { return WalkRun(t_max, SymmetricInit{}, case_layout(spec)); }

double spinor_distance(const Spinor& x, const Spinor& y) { return std::max(std::abs(x.a - y.a), std::abs(x.b - y.b)); }

std::vector<CaseSpec> oracle_specs() {
    return {{CaseFamily::IA, 3},  {CaseFamily::IB, 3},   {CaseFamily::IIA, 4}, {CaseFamily::IIB, 4},
            {CaseFamily::IIIA, 3}, {CaseFamily::IIIB, 3}, {CaseFamily::IA, 14}, {CaseFamily::IIIB, 7}};
}

} // namespace

TEST_CASE("hand-derived Hadamard amplitudes") {
    WalkRun run(3, SymmetricInit{}, CoinLayout({kCp}, 0));
    run.step();
    CHECK(spinor_distance(run.state().at(1), Spinor{Complex(0.5, 0.5), 0.0}) <= 1e-15);
    CHECK(spinor_distance(run.state().at(-1), Spinor{0.0, Complex(0.5, -0.5)}) <= 1e-15);
    CHECK(run.state().at(0) == Spinor{});

    // Origin: a from x=-1 via the first row, b from x=+1 via the second row.
    run.step();
    const double k = 0.5 * kInvSqrt2;
    CHECK(spinor_distance(run.state().at(0), Spinor{Complex(k, -k), Complex(k, k)}) <= 1e-15);
    CHECK(spinor_distance(run.state().at(2), Spinor{Complex(k, k), 0.0}) <= 1e-15);
    CHECK(spinor_distance(run.state().at(-2), Spinor{0.0, Complex(-k, k)}) <= 1e-15);
}

TEST_CASE("identity coin splits the walker ballistically") {
    WalkRun run(50, SymmetricInit{}, CoinLayout({kC0}, 0));
    run.evolve(50);
    const PositionDistribution d = position_distribution(run.state());
    CHECK(std::abs(d.at(50) - 0.5) <= 1e-15);
    CHECK(std::abs(d.at(-50) - 0.5) <= 1e-15);
    CHECK(d.at(0) == 0.0);
}

TEST_CASE("step budget") {
    WalkRun run = case_run({CaseFamily::IB, 3}, 4);
    CHECK_THROWS_AS(run.evolve(5), StateError);
    CHECK(run.state().step() == 0); // rejected up front
    CHECK_THROWS_AS(run.evolve(-1), DomainError);
    run.evolve(0);
    CHECK(run.state().step() == 0);
    run.evolve(4);
    CHECK(run.remaining_steps() == 0);
    CHECK_THROWS_AS(run.step(), StateError);
    CHECK_THROWS_AS(step(run), StateError);
}

TEST_CASE("recorder sees every step in order") {
    WalkRun run = case_run({CaseFamily::IIA, 4}, 20);
    std::vector<int> seen;
    evolve(run, 12, [&](const WalkState& s) { seen.push_back(s.step()); });
    REQUIRE(seen.size() == 12);
    for (int i = 0; i < 12; ++i) {
        CHECK(seen[static_cast<std::size_t>(i)] == i + 1);
    }
}

TEST_CASE("copied runs evolve independently") {
    WalkRun a = case_run({CaseFamily::IIIA, 3}, 30);
    a.evolve(5);
    WalkRun b = a;
    b.evolve(10);
    a.evolve(10);
    for (int x = -30; x <= 30; ++x) {
        CHECK(a.state().at(x) == b.state().at(x));
    }
}

TEST_CASE("dense step matrix structure") {
    SUBCASE("all-Hadamard interior columns") {
        const Eigen::MatrixXcd u = dense_step_matrix(CoinLayout({kCp}, 0), CoinTable{}, 3);
        REQUIRE(u.rows() == 14);
        REQUIRE(u.cols() == 14);
        // Interior sites x in [-2, 2] keep both outputs inside the window.
        for (int col = 2; col < 12; ++col) {
            int nonzeros = 0;
            for (int row = 0; row < 14; ++row) {
                const double m = std::abs(u(row, col));
                if (m != 0.0) {
                    ++nonzeros;
                    CHECK(std::abs(m - kInvSqrt2) <= 1e-15);
                }
            }
            CHECK(nonzeros == 2);
        }
    }
    SUBCASE("all-identity is a permutation away from the edges") {
        const Eigen::MatrixXcd u = dense_step_matrix(CoinLayout({kC0}, 0), CoinTable{}, 2);
        for (int row = 0; row < u.rows(); ++row) {
            for (int col = 0; col < u.cols(); ++col) {
                const Complex v = u(row, col);
                CHECK((v == Complex(0.0) || v == Complex(1.0)));
            }
        }
        // |x=0, coin 0> -> |x=1, coin 0>.
        CHECK(u(2 * 3 + 0, 2 * 2 + 0) == Complex(1.0));
        CHECK(u(2 * 1 + 1, 2 * 2 + 1) == Complex(1.0));
    }
    CHECK_THROWS_AS(dense_step_matrix(CoinLayout({kC0}, 0), CoinTable{}, 13), DomainError);
    CHECK_THROWS_AS(dense_step_matrix(CoinLayout({kC0}, 0), CoinTable{}, -1), DomainError);
}

TEST_CASE("engine agrees with the dense oracle") {
    SUBCASE("two Hadamard steps") {
        const CoinLayout layout({kCp}, 0);
        WalkRun run(2, SymmetricInit{}, layout);
        const Eigen::MatrixXcd u = dense_step_matrix(layout, CoinTable{}, 3);
        const Eigen::VectorXcd v0 = to_dense_vector(run.state(), 3);
        run.evolve(2);
        CHECK((u * (u * v0) - to_dense_vector(run.state(), 3)).cwiseAbs().maxCoeff() <= 1e-13);
    }
    SUBCASE("every family up to eight steps") {
        for (const CaseSpec& spec : oracle_specs()) {
            CAPTURE(to_string(spec.family));
            CAPTURE(spec.period_or_q);
            for (int steps = 1; steps <= 8; ++steps) {
                CHECK(oracle_max_difference(spec, steps) <= 1e-12);
            }
        }
    }
    CHECK_THROWS_AS(oracle_max_difference({CaseFamily::IA, 3}, 12), DomainError);
}

TEST_CASE("property: conservation, parity, symmetry and light cone over 400 steps") {
    for (const CaseSpec& spec : {CaseSpec{CaseFamily::IA, 14}, CaseSpec{CaseFamily::IB, 14},
                                 CaseSpec{CaseFamily::IIA, 14}, CaseSpec{CaseFamily::IIB, 14},
                                 CaseSpec{CaseFamily::IIIA, 19}, CaseSpec{CaseFamily::IIIB, 7}}) {
        CAPTURE(to_string(spec.family));
        WalkRun run = case_run(spec, 400);
        bool ok = true;
        run.evolve(400, [&](const WalkState& s) {
            const int t = s.step();
            const PositionDistribution d = position_distribution(s);
            double total = 0.0;
            double second = 0.0;
            for (int x = -t; x <= t; ++x) {
                const double p = d.at(x);
                total += p;
                second += static_cast<double>(x) * x * p;
                if ((x + t) % 2 != 0 && p != 0.0) {
                    ok = false;
                }
                if (std::abs(p - d.at(-x)) > 1e-12) {
                    ok = false;
                }
            }
            if (std::abs(total - 1.0) > 1e-10 || std::sqrt(second) > t + 1e-9) {
                ok = false;
            }
        });
        CHECK(ok);
    }
}

TEST_CASE("IIB N=14 reflects the walker back to the origin at t=14") {
    // The H sites at x = +-7 send amplitude 1/2 and i/2 back; all other sites transmit.
    WalkRun run = case_run({CaseFamily::IIB, 14}, 14);
    run.evolve(14);
    CHECK(std::abs(position_distribution(run.state()).at(0) - 0.5) <= 1e-14);
}

TEST_CASE("IA N=14 leaves no mass at the centre, IIIB q=7 keeps a central peak") {
    WalkRun ia = case_run({CaseFamily::IA, 14}, 400);
    ia.evolve(400);
    WalkRun iiib = case_run({CaseFamily::IIIB, 7}, 400);
    iiib.evolve(400);

    auto central_mass = [](const PositionDistribution& d) {
        double m = 0.0;
        for (int x = -20; x <= 20; ++x) {
            m += d.at(x);
        }
        return m;
    };
    auto argmax_abs = [](const PositionDistribution& d) {
        int best = 0;
        for (int x = d.min_x(); x <= d.max_x(); ++x) {
            if (d.at(x) > d.at(best)) {
                best = x;
            }
        }
        return std::abs(best);
    };

    const PositionDistribution dia = position_distribution(ia.state());
    CHECK(central_mass(dia) < 0.1);
    CHECK(argmax_abs(dia) > 200);

    const PositionDistribution diiib = position_distribution(iiib.state());
    CHECK(central_mass(diiib) > 0.3);
    CHECK(argmax_abs(diiib) <= 20);
}
