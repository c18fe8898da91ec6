#pragma once

#include <vector>

#include "qwalk/engine.hpp"
#include "qwalk/layout.hpp"
#include "qwalk/walk_state.hpp"

namespace qwalk {

inline constexpr double kDefaultLocalizationRatio = 10.0;
inline constexpr double kDefaultPeakHeight = 0.05;

/// Closed step interval [lo, hi].
struct StepWindow {
    int lo = 0;
    int hi = 0;
};

/// Per-step scalars of one run, t = 0 .. T.
struct SummarySeries {
    std::vector<int> steps;
    std::vector<double> mean_x;
    std::vector<double> sigma;
    std::vector<double> p0;

    std::size_t size() const { return steps.size(); }
    void append(const PositionDistribution& d);
};

struct LocalizationReport {
    StepWindow window;
    double mean_return = 0.0;
    double baseline = 0.0;
    double ratio = 0.0;
    double threshold = kDefaultLocalizationRatio;
    bool localized = false;
};

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    StepWindow window;
};

double mean_position(const PositionDistribution& d);

/// sqrt(<x^2>): the raw second moment, not the variance about <x>.
double sigma(const PositionDistribution& d);

double origin_probability(const PositionDistribution& d);

/// Evolve observer that appends one summary row per step.
class SeriesRecorder {
public:
    explicit SeriesRecorder(SummarySeries& out) : out_(&out) {}
    void operator()(const WalkState& s) const { out_->append(position_distribution(s)); }

private:
    SummarySeries* out_;
};

/// Series of length steps + 1 (including t = 0) from a single evolve().
SummarySeries summarize_run(const CoinLayout& layout, const CoinTable& table, const InitialStateKind& init,
                            int steps);
SummarySeries summarize_run(const CaseSpec& spec, const InitialStateKind& init, int steps);

/// Reference run on the all-Hadamard line.
SummarySeries hadamard_baseline(const InitialStateKind& init, int steps);

/// Least squares of sigma(t) on t over the window. Throws DomainError if the
/// window is not inside the series or holds fewer than 10 points.
SlopeFit fit_sigma_slope(const SummarySeries& series, StepWindow window);

/// Default fit window [T/4, T].
StepWindow default_fit_window(int total_steps);

/// Default localization window [T/2, T].
StepWindow default_localization_window(int total_steps);

/// Mean of p0 over the even steps of the window.
double mean_return_probability(const SummarySeries& series, StepWindow window);

/// Compares the mean return probability with the baseline run's. Localized
/// iff ratio >= threshold. Throws DomainError if either series does not
/// cover the window.
LocalizationReport localization_score(const SummarySeries& series, StepWindow window, const SummarySeries& baseline,
                                      double threshold = kDefaultLocalizationRatio);

/// Counts even steps t in the window where p0(t) >= height and p0(t) strictly
/// exceeds both p0(t-2) and p0(t+2). Steps without both neighbours in the
/// series are not counted. Requires 0 < height < 1.
int detect_recurrence(const SummarySeries& series, StepWindow window, double height = kDefaultPeakHeight);

struct SigmaRow {
    int param = 0;
    double sigma = 0.0;
};

/// sigma(t_probe) for each parameter of the family (symmetric initial state),
/// rows in parameter order. All parameters are validated before any run.
/// Runs may execute concurrently.
std::vector<SigmaRow> sigma_at_step_vs_period(CaseFamily family, const std::vector<int>& params, int t_probe);

} // namespace qwalk
