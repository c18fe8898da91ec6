#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/layout.hpp"
#include "qwalk/observables.hpp"
#include "qwalk/walk_state.hpp"

namespace qwalk {

inline constexpr int kDefaultSteps = 400;
inline constexpr std::string_view kReportSchema = "qwalk-report/1";

/// Decimal with 15 significant digits, the format of every CSV field.
std::string format_number(double value);

/// "symmetric", "asymmetric" or "custom:a_re,a_im,b_re,b_im".
InitialStateKind parse_init(std::string_view text);
std::string describe_init(const InitialStateKind& init);

/// "rho,theta,phi"; range-checked.
CoinParams parse_coin_params(std::string_view text);

/// "LO:HI" with LO < HI.
StepWindow parse_window(std::string_view text);

/// "7", "3,5,7", "2..14", "2..14(even)", "3..19(odd)". Result is sorted and
/// duplicate-free.
std::vector<int> parse_param_range(std::string_view text);

struct RunConfig {
    std::optional<CaseSpec> case_spec;
    std::string pattern; // used when case_spec is empty
    InitialStateKind init = SymmetricInit{};
    int steps = kDefaultSteps;
    std::optional<CoinParams> coin_c0;
    std::optional<CoinParams> coin_cp;
    std::optional<StepWindow> localization_window; // default [T/2, T]
    double loc_ratio = kDefaultLocalizationRatio;
    double peak_height = kDefaultPeakHeight;
    std::filesystem::path output_dir = ".";
};

/// Checks steps, windows, thresholds and the layout source. Throws DomainError.
void validate(const RunConfig& config);

/// The coin table (I/H unless overridden) and layout selected by a config.
PatternLayout resolve_layout(const RunConfig& config);

/// Short label such as "IB N=7", "IIIA q=19" or "pattern H1I13".
std::string describe_layout(const RunConfig& config);

/// Default recurrence window [T/8, T].
StepWindow default_recurrence_window(int total_steps);

struct RunResult {
    SummarySeries series;
    PositionDistribution final_distribution;
    double final_total_probability = 0.0;
    std::optional<LocalizationReport> localization;
    StepWindow recurrence_window;
    int recurrence_peaks = 0;
    std::optional<SlopeFit> slope;
};

/// Runs the walk and computes every report; writes nothing.
RunResult simulate(const RunConfig& config);

struct OutputBundle {
    std::filesystem::path summary_csv;
    std::filesystem::path snapshot_csv;
    std::filesystem::path report;
};

/// Runs one walk and writes summary.csv (t,mean_x,sigma,p0), snapshot.csv
/// (x,p) and report.txt into config.output_dir. Throws DomainError for a bad
/// config and IoError when the directory or files cannot be written.
OutputBundle run_case(const RunConfig& config);

std::string summary_csv(const SummarySeries& series);
std::string snapshot_csv(const PositionDistribution& d);
std::string report_text(const RunConfig& config, const RunResult& result);

struct SweepRow {
    int param = 0;
    double sigma = 0.0;
    double mean_p0 = 0.0;
    bool localized = false;
    double ratio = 0.0;
};

struct SweepConfig {
    CaseFamily family = CaseFamily::IA;
    std::vector<int> params;
    int steps = kDefaultSteps;
    InitialStateKind init = SymmetricInit{};
    std::optional<StepWindow> localization_window; // default [T/2, T]
    double loc_ratio = kDefaultLocalizationRatio;
};

/// One run per parameter, rows in parameter order. Every parameter is
/// validated before anything runs.
std::vector<SweepRow> sweep(const SweepConfig& config);

/// Header param,sigma,mean_p0,localized,ratio.
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Runs the figure matrix and writes one CSV and one SVG per figure into
/// output_dir. Returns the written paths in a fixed order.
std::vector<std::filesystem::path> reproduce_figures(const std::filesystem::path& output_dir);

/// Writes `contents` to `path` byte-for-byte. Throws IoError.
void write_file(const std::filesystem::path& path, std::string_view contents);

} // namespace qwalk
