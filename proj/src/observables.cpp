#include "qwalk/observables.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qwalk/detail/parallel.hpp"
#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

std::string describe(StepWindow w) { return "[" + std::to_string(w.lo) + ", " + std::to_string(w.hi) + "]"; }

void require_covers(const SummarySeries& series, StepWindow window, const char* who) {
    if (window.lo >= window.hi) {
        throw DomainError(std::string(who) + ": window " + describe(window) + " must satisfy lo < hi");
    }
    if (series.size() == 0 || window.lo < series.steps.front() || window.hi > series.steps.back()) {
        throw DomainError(std::string(who) + ": window " + describe(window) + " is not covered by the series");
    }
}

// Series start at steps.front() with unit stride.
std::size_t offset(const SummarySeries& series, int t) { return static_cast<std::size_t>(t - series.steps.front()); }

int first_even_at_or_after(int t) { return t % 2 == 0 ? t : t + 1; }

} // namespace

void SummarySeries::append(const PositionDistribution& d) {
    steps.push_back(d.step);
    mean_x.push_back(mean_position(d));
    sigma.push_back(qwalk::sigma(d));
    p0.push_back(origin_probability(d));
}

double mean_position(const PositionDistribution& d) {
    double m = 0.0;
    for (int x = d.min_x(); x <= d.max_x(); ++x) {
        m += x * d.at(x);
    }
    return m;
}

double sigma(const PositionDistribution& d) {
    double second = 0.0;
    for (int x = d.min_x(); x <= d.max_x(); ++x) {
        second += static_cast<double>(x) * x * d.at(x);
    }
    return std::sqrt(second);
}

double origin_probability(const PositionDistribution& d) { return d.at(0); }

SummarySeries summarize_run(const CoinLayout& layout, const CoinTable& table, const InitialStateKind& init,
                            int steps) {
    if (steps < 0) {
        throw DomainError("summarize_run: steps must be nonnegative, got " + std::to_string(steps));
    }
    SummarySeries series;
    WalkRun run(std::max(steps, 1), init, layout, table);
    series.append(position_distribution(run.state()));
    run.evolve(steps, SeriesRecorder(series));
    return series;
}

SummarySeries summarize_run(const CaseSpec& spec, const InitialStateKind& init, int steps) {
    return summarize_run(case_layout(spec), CoinTable{}, init, steps);
}

SummarySeries hadamard_baseline(const InitialStateKind& init, int steps) {
    return summarize_run(CoinLayout({kCp}, 0), CoinTable{}, init, steps);
}

SlopeFit fit_sigma_slope(const SummarySeries& series, StepWindow window) {
    require_covers(series, window, "fit_sigma_slope");
    const std::size_t count = static_cast<std::size_t>(window.hi - window.lo + 1);
    if (count < 10) {
        throw DomainError("fit_sigma_slope: window " + describe(window) + " holds fewer than 10 points");
    }

    double mean_t = 0.0;
    double mean_s = 0.0;
    for (int t = window.lo; t <= window.hi; ++t) {
        mean_t += t;
        mean_s += series.sigma[offset(series, t)];
    }
    mean_t /= static_cast<double>(count);
    mean_s /= static_cast<double>(count);

    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (int t = window.lo; t <= window.hi; ++t) {
        const double dt = t - mean_t;
        const double ds = series.sigma[offset(series, t)] - mean_s;
        sxx += dt * dt;
        sxy += dt * ds;
        syy += ds * ds;
    }

    SlopeFit fit;
    fit.window = window;
    fit.slope = sxy / sxx;
    fit.intercept = mean_s - fit.slope * mean_t;
    // A constant series is fitted exactly.
    fit.r_squared = syy == 0.0 ? 1.0 : std::clamp(sxy * sxy / (sxx * syy), 0.0, 1.0);
    return fit;
}

StepWindow default_fit_window(int total_steps) { return StepWindow{total_steps / 4, total_steps}; }

StepWindow default_localization_window(int total_steps) { return StepWindow{total_steps / 2, total_steps}; }

double mean_return_probability(const SummarySeries& series, StepWindow window) {
    require_covers(series, window, "mean_return_probability");
    double sum = 0.0;
    int count = 0;
    for (int t = first_even_at_or_after(window.lo); t <= window.hi; t += 2) {
        sum += series.p0[offset(series, t)];
        ++count;
    }
    return sum / count;
}

LocalizationReport localization_score(const SummarySeries& series, StepWindow window, const SummarySeries& baseline,
                                      double threshold) {
    LocalizationReport report;
    report.window = window;
    report.threshold = threshold;
    report.mean_return = mean_return_probability(series, window);
    report.baseline = mean_return_probability(baseline, window);
    report.ratio = report.mean_return / report.baseline;
    report.localized = report.ratio >= threshold;
    return report;
}

int detect_recurrence(const SummarySeries& series, StepWindow window, double height) {
    if (!(height > 0.0 && height < 1.0)) {
        throw DomainError("detect_recurrence: height must lie in (0, 1), got " + std::to_string(height));
    }
    if (series.size() == 0) {
        return 0;
    }
    const int first = series.steps.front();
    const int last = series.steps.back();
    int peaks = 0;
    for (int t = first_even_at_or_after(std::max(window.lo, first + 2)); t <= std::min(window.hi, last - 2); t += 2) {
        const double p = series.p0[offset(series, t)];
        if (p >= height && p > series.p0[offset(series, t - 2)] && p > series.p0[offset(series, t + 2)]) {
            ++peaks;
        }
    }
    return peaks;
}

std::vector<SigmaRow> sigma_at_step_vs_period(CaseFamily family, const std::vector<int>& params, int t_probe) {
    if (t_probe < 1) {
        throw DomainError("sigma_at_step_vs_period: t_probe must be >= 1");
    }
    for (int p : params) {
        validate(CaseSpec{family, p});
    }

    return detail::parallel_map(params, [&](int p) {
        WalkRun run(t_probe, SymmetricInit{}, case_layout(CaseSpec{family, p}));
        run.evolve(t_probe);
        return SigmaRow{p, sigma(position_distribution(run.state()))};
    });
}

} // namespace qwalk
