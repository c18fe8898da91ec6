#include <doctest.h>

#include <cmath>
#include <vector>

#include "qwalk/errors.hpp"
#include "qwalk/observables.hpp"

using namespace qwalk;

namespace {

SummarySeries synthetic_p0(const std::vector<double>& p0) {
    SummarySeries s;
    for (std::size_t t = 0; t < p0.size(); ++t) {
        s.steps.push_back(static_cast<int>(t));
        s.mean_x.push_back(0.0);
        s.sigma.push_back(0.0);
        s.p0.push_back(p0[t]);
    }
    return s;
}

SummarySeries synthetic_sigma(int steps, double a, double b) {
    SummarySeries s;
    for (int t = 0; t <= steps; ++t) {
        s.steps.push_back(t);
        s.mean_x.push_back(0.0);
        s.sigma.push_back(a * t + b);
        s.p0.push_back(0.0);
    }
    return s;
}

} // namespace

TEST_CASE("point observables on hand-built distributions") {
    PositionDistribution d{2, {0.25, 0.0, 0.5, 0.0, 0.25}};
    CHECK(mean_position(d) == 0.0);
    CHECK(std::abs(sigma(d) - std::sqrt(2.0)) <= 1e-15);
    CHECK(origin_probability(d) == 0.5);

    // Lopsided: sigma is the raw second moment, not the spread about <x>.
    PositionDistribution right{1, {0.0, 0.0, 1.0}};
    CHECK(mean_position(right) == 1.0);
    CHECK(sigma(right) == 1.0);
    CHECK(origin_probability(right) == 0.0);
}

TEST_CASE("summarize_run") {
    const SummarySeries zero = summarize_run(CaseSpec{CaseFamily::IB, 3}, SymmetricInit{}, 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero.steps[0] == 0);
    CHECK(zero.p0[0] == doctest::Approx(1.0));
    CHECK(zero.sigma[0] == 0.0);

    const SummarySeries s = summarize_run(CaseSpec{CaseFamily::IIA, 6}, SymmetricInit{}, 40);
    REQUIRE(s.size() == 41);
    for (std::size_t t = 0; t < s.size(); ++t) {
        CHECK(s.steps[t] == static_cast<int>(t));
        CHECK(s.sigma[t] <= static_cast<double>(t) + 1e-12);
        if (t % 2 == 1) {
            CHECK(s.p0[t] == 0.0);
        }
    }
    CHECK_THROWS_AS(summarize_run(CaseSpec{CaseFamily::IIA, 5}, SymmetricInit{}, 10), DomainError);
}

TEST_CASE("sigma slope fits") {
    SUBCASE("identity coin grows exactly ballistically") {
        const SummarySeries s = summarize_run(CoinLayout({kC0}, 0), CoinTable{}, SymmetricInit{}, 100);
        const SlopeFit fit = fit_sigma_slope(s, default_fit_window(100));
        CHECK(std::abs(fit.slope - 1.0) <= 1e-12);
        CHECK(std::abs(fit.intercept) <= 1e-10);
        CHECK(fit.r_squared == doctest::Approx(1.0));
    }
    SUBCASE("Hadamard slope sits in the ballistic Hadamard range") {
        const SummarySeries s = hadamard_baseline(SymmetricInit{}, 400);
        const SlopeFit fit = fit_sigma_slope(s, default_fit_window(400));
        CHECK(fit.window.lo == 100);
        CHECK(fit.window.hi == 400);
        CHECK(fit.slope > 0.5);
        CHECK(fit.slope < 0.8);
        CHECK(fit.r_squared > 0.999);
    }
    SUBCASE("synthetic lines are recovered") {
        const SlopeFit fit = fit_sigma_slope(synthetic_sigma(60, 0.37, 2.5), StepWindow{10, 60});
        CHECK(std::abs(fit.slope - 0.37) <= 1e-10);
        CHECK(std::abs(fit.intercept - 2.5) <= 1e-10);
        const SlopeFit flat = fit_sigma_slope(synthetic_sigma(60, 0.0, 3.0), StepWindow{0, 60});
        CHECK(flat.slope == doctest::Approx(0.0));
        CHECK(flat.r_squared == 1.0);
    }
    SUBCASE("bad windows") {
        const SummarySeries s = synthetic_sigma(60, 1.0, 0.0);
        CHECK_THROWS_AS(fit_sigma_slope(s, StepWindow{0, 8}), DomainError);   // 9 points
        CHECK_NOTHROW(fit_sigma_slope(s, StepWindow{0, 9}));                  // 10 points
        CHECK_THROWS_AS(fit_sigma_slope(s, StepWindow{10, 61}), DomainError); // past the end
        CHECK_THROWS_AS(fit_sigma_slope(s, StepWindow{30, 20}), DomainError);
    }
}

TEST_CASE("default windows") {
    CHECK(default_fit_window(400).lo == 100);
    CHECK(default_localization_window(400).lo == 200);
    CHECK(default_localization_window(400).hi == 400);
    CHECK(default_localization_window(7).lo == 3);
}

TEST_CASE("localization score") {
    const SummarySeries base = hadamard_baseline(SymmetricInit{}, 400);
    const StepWindow w = default_localization_window(400);

    const LocalizationReport self = localization_score(base, w, base);
    CHECK(self.ratio == doctest::Approx(1.0));
    CHECK_FALSE(self.localized);

    const LocalizationReport ia = localization_score(summarize_run(CaseSpec{CaseFamily::IA, 14}, SymmetricInit{}, 400),
                                                     w, base);
    CHECK_FALSE(ia.localized);
    CHECK(ia.ratio < 2.0);

    const LocalizationReport ib = localization_score(summarize_run(CaseSpec{CaseFamily::IB, 7}, SymmetricInit{}, 400),
                                                     w, base);
    CHECK(ib.localized);
    CHECK(ib.ratio >= 10.0);
    CHECK(ib.mean_return == doctest::Approx(mean_return_probability(
                                summarize_run(CaseSpec{CaseFamily::IB, 7}, SymmetricInit{}, 400), w)));

    // Raising the threshold can only turn a localized verdict off.
    const LocalizationReport strict = localization_score(
        summarize_run(CaseSpec{CaseFamily::IB, 7}, SymmetricInit{}, 400), w, base, ib.ratio * 1.01);
    CHECK_FALSE(strict.localized);

    CHECK_THROWS_AS(localization_score(base, StepWindow{200, 500}, base), DomainError);
}

TEST_CASE("mean return uses even steps only") {
    const SummarySeries s = synthetic_p0({1.0, 9.0, 0.5, 9.0, 0.25});
    CHECK(mean_return_probability(s, StepWindow{0, 4}) == doctest::Approx((1.0 + 0.5 + 0.25) / 3.0));
    CHECK(mean_return_probability(s, StepWindow{1, 3}) == doctest::Approx(0.5));
}

TEST_CASE("recurrence peaks") {
    //                          t: 0    1    2    3    4    5    6    7    8    9    10   11   12
    const SummarySeries s = synthetic_p0({1.0, 0.0, 0.1, 0.0, 0.3, 0.0, 0.1, 0.0, 0.2, 0.0, 0.2, 0.0, 0.04});
    CHECK(detect_recurrence(s, StepWindow{0, 12}, 0.05) == 1); // t=4; t=8/10 tie; t=0 and t=12 lack neighbours
    CHECK(detect_recurrence(s, StepWindow{0, 12}, 0.35) == 0);
    CHECK(detect_recurrence(s, StepWindow{5, 12}, 0.05) == 0);

    const SummarySeries rising = synthetic_p0({0.0, 0.0, 0.1, 0.0, 0.2, 0.0, 0.3});
    CHECK(detect_recurrence(rising, StepWindow{0, 6}, 0.05) == 0);

    CHECK_THROWS_AS(detect_recurrence(s, StepWindow{0, 12}, 0.0), DomainError);
    CHECK_THROWS_AS(detect_recurrence(s, StepWindow{0, 12}, 1.0), DomainError);

    const SummarySeries iia = summarize_run(CaseSpec{CaseFamily::IIA, 14}, SymmetricInit{}, 400);
    CHECK(detect_recurrence(iia, StepWindow{50, 400}) >= 2);
}

TEST_CASE("sigma against period") {
    const std::vector<SigmaRow> ib = sigma_at_step_vs_period(CaseFamily::IB, {2, 3, 4}, 400);
    REQUIRE(ib.size() == 3);
    CHECK(ib[0].param == 2);
    CHECK(ib[2].param == 4);
    CHECK(ib[2].sigma < ib[1].sigma);
    CHECK(ib[1].sigma < ib[0].sigma);

    const double hadamard_sigma = hadamard_baseline(SymmetricInit{}, 400).sigma.back();
    for (const SigmaRow& row : sigma_at_step_vs_period(CaseFamily::IA, {2, 5, 14}, 400)) {
        CHECK(std::abs(row.sigma - hadamard_sigma) <= 0.01 * hadamard_sigma);
    }

    CHECK(sigma_at_step_vs_period(CaseFamily::IIIB, {5}, 50).size() == 1);
    CHECK_THROWS_AS(sigma_at_step_vs_period(CaseFamily::IIA, {4, 5}, 50), DomainError);
}
