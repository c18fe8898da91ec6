#include "qwalk/experiment.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <utility>
#include <variant>

#include <fmt/format.h>

#include "qwalk/detail/parallel.hpp"
#include "qwalk/detail/parse.hpp"
#include "qwalk/engine.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/svg_plot.hpp"

namespace qwalk {

namespace {

std::string window_text(StepWindow w) { return fmt::format("{}:{}", w.lo, w.hi); }

std::string params_text(const CoinParams& p) {
    return fmt::format("{},{},{}", format_number(p.rho), format_number(p.theta), format_number(p.phi));
}

// A labelled column-oriented table written as CSV.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> columns;

    std::string csv() const {
        std::string out = fmt::format("{}\n", fmt::join(header, ","));
        const std::size_t rows = columns.empty() ? 0 : columns.front().size();
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < columns.size(); ++c) {
                out += c == 0 ? "" : ",";
                out += format_number(columns[c][r]);
            }
            out += '\n';
        }
        return out;
    }
};

} // namespace

std::string format_number(double value) {
    if (value == 0.0) {
        return "0"; // folds -0
    }
    return fmt::format("{:.15g}", value);
}

InitialStateKind parse_init(std::string_view text) {
    const std::string_view t = detail::trim(text);
    if (t == "symmetric") {
        return SymmetricInit{};
    }
    if (t == "asymmetric") {
        return AsymmetricInit{};
    }
    if (t.starts_with("custom:")) {
        const auto parts = detail::split(t.substr(7), ',');
        if (parts.size() != 4) {
            throw DomainError("--init custom expects custom:a_re,a_im,b_re,b_im");
        }
        CustomInit custom{Spinor{Complex(detail::parse_number<double>(parts[0], "a_re"),
                                         detail::parse_number<double>(parts[1], "a_im")),
                                 Complex(detail::parse_number<double>(parts[2], "b_re"),
                                         detail::parse_number<double>(parts[3], "b_im"))}};
        initial_spinor(custom); // normalization check
        return custom;
    }
    throw DomainError("unknown initial state '" + std::string(text) +
                      "' (expected symmetric, asymmetric or custom:a_re,a_im,b_re,b_im)");
}

std::string describe_init(const InitialStateKind& init) {
    if (std::holds_alternative<SymmetricInit>(init)) {
        return "symmetric";
    }
    if (std::holds_alternative<AsymmetricInit>(init)) {
        return "asymmetric";
    }
    const Spinor& s = std::get<CustomInit>(init).spinor;
    return fmt::format("custom:{},{},{},{}", format_number(s.a.real()), format_number(s.a.imag()),
                       format_number(s.b.real()), format_number(s.b.imag()));
}

CoinParams parse_coin_params(std::string_view text) {
    const auto parts = detail::split(text, ',');
    if (parts.size() != 3) {
        throw DomainError("coin parameters must be rho,theta,phi, got '" + std::string(text) + "'");
    }
    CoinParams params{detail::parse_number<double>(parts[0], "rho"), detail::parse_number<double>(parts[1], "theta"),
                      detail::parse_number<double>(parts[2], "phi")};
    make_general_coin(params); // range check
    return params;
}

StepWindow parse_window(std::string_view text) {
    const auto parts = detail::split(text, ':');
    if (parts.size() != 2) {
        throw DomainError("window must be LO:HI, got '" + std::string(text) + "'");
    }
    StepWindow w{detail::parse_number<int>(parts[0], "window start"), detail::parse_number<int>(parts[1], "window end")};
    if (w.lo < 0 || w.lo >= w.hi) {
        throw DomainError("window must satisfy 0 <= LO < HI, got '" + std::string(text) + "'");
    }
    return w;
}

std::vector<int> parse_param_range(std::string_view text) {
    std::set<int> values;
    for (std::string_view item : detail::split(text, ',')) {
        item = detail::trim(item);
        const auto dots = item.find("..");
        if (dots == std::string_view::npos) {
            values.insert(detail::parse_number<int>(item, "parameter"));
            continue;
        }
        std::string_view filter;
        std::string_view hi_text = item.substr(dots + 2);
        if (const auto paren = hi_text.find('('); paren != std::string_view::npos) {
            if (!hi_text.ends_with(')')) {
                throw DomainError("malformed range filter in '" + std::string(item) + "'");
            }
            filter = hi_text.substr(paren + 1, hi_text.size() - paren - 2);
            hi_text = hi_text.substr(0, paren);
        }
        const int lo = detail::parse_number<int>(item.substr(0, dots), "range start");
        const int hi = detail::parse_number<int>(hi_text, "range end");
        if (lo > hi) {
            throw DomainError("empty range '" + std::string(item) + "'");
        }
        if (hi - lo > 100000) {
            throw DomainError("range '" + std::string(item) + "' is too long");
        }
        if (!filter.empty() && filter != "even" && filter != "odd") {
            throw DomainError("range filter must be (even) or (odd), got '" + std::string(filter) + "'");
        }
        for (int v = lo; v <= hi; ++v) {
            const bool even = v % 2 == 0;
            if (filter.empty() || (filter == "even" && even) || (filter == "odd" && !even)) {
                values.insert(v);
            }
        }
    }
    if (values.empty()) {
        throw DomainError("parameter range '" + std::string(text) + "' selects nothing");
    }
    return {values.begin(), values.end()};
}

void validate(const RunConfig& config) {
    if (config.steps < 1) {
        throw DomainError("steps must be >= 1, got " + std::to_string(config.steps));
    }
    if (config.localization_window) {
        const StepWindow w = *config.localization_window;
        if (w.lo < 0 || w.lo >= w.hi || w.hi > config.steps) {
            throw DomainError("localization window " + window_text(w) + " must satisfy 0 <= LO < HI <= steps");
        }
    }
    if (!(config.loc_ratio > 0.0)) {
        throw DomainError("localization ratio must be positive");
    }
    if (!(config.peak_height > 0.0 && config.peak_height < 1.0)) {
        throw DomainError("peak height must lie in (0, 1)");
    }
    if (!config.case_spec && config.pattern.empty()) {
        throw DomainError("either a case or a pattern is required");
    }
    initial_spinor(config.init);
    resolve_layout(config);
}

PatternLayout resolve_layout(const RunConfig& config) {
    const CoinTable table(config.coin_c0 ? make_general_coin(*config.coin_c0) : identity_coin(),
                          config.coin_cp ? make_general_coin(*config.coin_cp) : hadamard());
    if (config.case_spec) {
        return PatternLayout{case_layout(*config.case_spec), table};
    }
    return parse_pattern(config.pattern, table);
}

std::string describe_layout(const RunConfig& config) {
    if (config.case_spec) {
        const CaseSpec& spec = *config.case_spec;
        return fmt::format("{} {}={}", to_string(spec.family), is_family_three(spec.family) ? "q" : "N",
                           spec.period_or_q);
    }
    return "pattern " + config.pattern;
}

StepWindow default_recurrence_window(int total_steps) { return StepWindow{total_steps / 8, total_steps}; }

RunResult simulate(const RunConfig& config) {
    validate(config);
    const PatternLayout resolved = resolve_layout(config);

    RunResult result;
    WalkRun run(config.steps, config.init, resolved.layout, resolved.table);
    result.series.append(position_distribution(run.state()));
    run.evolve(config.steps, SeriesRecorder(result.series));
    result.final_distribution = position_distribution(run.state());
    result.final_total_probability = total_probability(run.state());

    const StepWindow loc_window = config.localization_window.value_or(default_localization_window(config.steps));
    const SummarySeries baseline = hadamard_baseline(config.init, config.steps);
    result.localization = localization_score(result.series, loc_window, baseline, config.loc_ratio);

    result.recurrence_window = default_recurrence_window(config.steps);
    result.recurrence_peaks = detect_recurrence(result.series, result.recurrence_window, config.peak_height);

    const StepWindow fit_window = default_fit_window(config.steps);
    if (fit_window.hi - fit_window.lo + 1 >= 10) {
        result.slope = fit_sigma_slope(result.series, fit_window);
    }
    return result;
}

std::string summary_csv(const SummarySeries& series) {
    std::string out = "t,mean_x,sigma,p0\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        out += fmt::format("{},{},{},{}\n", series.steps[i], format_number(series.mean_x[i]),
                           format_number(series.sigma[i]), format_number(series.p0[i]));
    }
    return out;
}

std::string snapshot_csv(const PositionDistribution& d) {
    std::string out = "x,p\n";
    for (int x = d.min_x(); x <= d.max_x(); ++x) {
        out += fmt::format("{},{}\n", x, format_number(d.at(x)));
    }
    return out;
}

std::string report_text(const RunConfig& config, const RunResult& result) {
    const PatternLayout resolved = resolve_layout(config);
    std::string out;
    auto kv = [&out](std::string_view key, const std::string& value) { out += fmt::format("{} = {}\n", key, value); };

    kv("schema", std::string(kReportSchema));
    kv("layout", describe_layout(config));
    kv("period", std::to_string(resolved.layout.period()));
    kv("init", describe_init(config.init));
    kv("steps", std::to_string(config.steps));
    if (config.coin_c0) {
        kv("coin.c0", params_text(*config.coin_c0));
    }
    if (config.coin_cp) {
        kv("coin.cp", params_text(*config.coin_cp));
    }
    kv("total_probability", format_number(result.final_total_probability));
    kv("final.mean_x", format_number(result.series.mean_x.back()));
    kv("final.sigma", format_number(result.series.sigma.back()));
    kv("final.p0", format_number(result.series.p0.back()));
    if (result.localization) {
        const LocalizationReport& loc = *result.localization;
        kv("localization.window", window_text(loc.window));
        kv("localization.mean_return", format_number(loc.mean_return));
        kv("localization.baseline", format_number(loc.baseline));
        kv("localization.ratio", format_number(loc.ratio));
        kv("localization.threshold", format_number(loc.threshold));
        kv("localization.localized", loc.localized ? "true" : "false");
    }
    kv("recurrence.window", window_text(result.recurrence_window));
    kv("recurrence.height", format_number(config.peak_height));
    kv("recurrence.peaks", std::to_string(result.recurrence_peaks));
    if (result.slope) {
        kv("slope.window", window_text(result.slope->window));
        kv("slope.slope", format_number(result.slope->slope));
        kv("slope.intercept", format_number(result.slope->intercept));
        kv("slope.r_squared", format_number(result.slope->r_squared));
    }
    return out;
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.close();
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

namespace {

void ensure_directory(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) {
        throw IoError("cannot create output directory '" + dir.string() + "'" + (ec ? ": " + ec.message() : ""));
    }
}

} // namespace

OutputBundle run_case(const RunConfig& config) {
    const RunResult result = simulate(config);
    ensure_directory(config.output_dir);

    OutputBundle bundle{config.output_dir / "summary.csv", config.output_dir / "snapshot.csv",
                        config.output_dir / "report.txt"};
    write_file(bundle.summary_csv, summary_csv(result.series));
    write_file(bundle.snapshot_csv, snapshot_csv(result.final_distribution));
    write_file(bundle.report, report_text(config, result));
    return bundle;
}

std::vector<SweepRow> sweep(const SweepConfig& config) {
    if (config.params.empty()) {
        throw DomainError("sweep: parameter list is empty");
    }
    if (config.steps < 1) {
        throw DomainError("sweep: steps must be >= 1");
    }
    for (int p : config.params) {
        validate(CaseSpec{config.family, p});
    }
    const StepWindow window = config.localization_window.value_or(default_localization_window(config.steps));
    if (window.lo < 0 || window.lo >= window.hi || window.hi > config.steps) {
        throw DomainError("sweep: localization window " + window_text(window) + " must satisfy 0 <= LO < HI <= steps");
    }
    if (!(config.loc_ratio > 0.0)) {
        throw DomainError("sweep: localization ratio must be positive");
    }
    initial_spinor(config.init);

    const SummarySeries baseline = hadamard_baseline(config.init, config.steps);
    return detail::parallel_map(config.params, [&](int p) {
        const SummarySeries series = summarize_run(CaseSpec{config.family, p}, config.init, config.steps);
        const LocalizationReport loc = localization_score(series, window, baseline, config.loc_ratio);
        return SweepRow{p, series.sigma.back(), loc.mean_return, loc.localized, loc.ratio};
    });
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = "param,sigma,mean_p0,localized,ratio\n";
    for (const SweepRow& r : rows) {
        out += fmt::format("{},{},{},{},{}\n", r.param, format_number(r.sigma), format_number(r.mean_p0),
                           r.localized ? "true" : "false", format_number(r.ratio));
    }
    return out;
}

namespace {

struct FigureRun {
    std::string label;
    std::optional<CaseSpec> spec; // empty: all-Hadamard line
};

struct FigureData {
    SummarySeries series;
    PositionDistribution final_distribution;
};

std::string run_label(const std::optional<CaseSpec>& spec) {
    if (!spec) {
        return "hadamard";
    }
    return fmt::format("{}_{}{}", to_string(spec->family), is_family_three(spec->family) ? "q" : "N",
                       spec->period_or_q);
}

FigureData run_figure(const FigureRun& r, int steps) {
    const CoinLayout layout = r.spec ? case_layout(*r.spec) : CoinLayout({kCp}, 0);
    FigureData data;
    WalkRun run(steps, SymmetricInit{}, layout);
    data.series.append(position_distribution(run.state()));
    run.evolve(steps, SeriesRecorder(data.series));
    data.final_distribution = position_distribution(run.state());
    return data;
}

std::vector<double> as_doubles(const std::vector<int>& v) { return {v.begin(), v.end()}; }

} // namespace

std::vector<std::filesystem::path> reproduce_figures(const std::filesystem::path& output_dir) {
    constexpr int kSteps = kDefaultSteps;
    ensure_directory(output_dir);

    using F = CaseFamily;
    auto spec = [](F f, int n) { return std::optional<CaseSpec>(CaseSpec{f, n}); };

    const std::vector<std::optional<CaseSpec>> sigma_runs = {
        std::nullopt,    spec(F::IA, 14),  spec(F::IB, 14),  spec(F::IIA, 14),
        spec(F::IIB, 14), spec(F::IIIA, 19), spec(F::IIIB, 7)};

    struct Figure {
        std::string name;
        std::string title;
        bool snapshot; // p(x, 400) vs x, otherwise p0(t) vs t
        std::vector<std::optional<CaseSpec>> runs;
    };
    const std::vector<Figure> distribution_figures = {
        {"fig03_IA_distribution", "P(x,400), case IA N=14", true, {spec(F::IA, 14)}},
        {"fig04_IA_origin", "P0(t), case IA N=14", false, {spec(F::IA, 14)}},
        {"fig05_IB_distribution", "P(x,400), case IB", true,
         {spec(F::IB, 3), spec(F::IB, 7), spec(F::IB, 10), spec(F::IB, 14)}},
        {"fig06_IB_origin", "P0(t), case IB", false,
         {spec(F::IB, 2), spec(F::IB, 4), spec(F::IB, 7), spec(F::IB, 14)}},
        {"fig07_IIA_distribution", "P(x,400), case IIA N=14", true, {spec(F::IIA, 14)}},
        {"fig08_IIA_origin", "P0(t), case IIA", false, {spec(F::IIA, 4), spec(F::IIA, 6), spec(F::IIA, 14)}},
        {"fig09_IIB_distribution", "P(x,400), case IIB N=14", true, {spec(F::IIB, 14)}},
        {"fig10_IIB_origin", "P0(t), case IIB N=14", false, {spec(F::IIB, 14)}},
        {"fig11_IIIA_distribution", "P(x,400), case IIIA q=19", true, {spec(F::IIIA, 19)}},
        {"fig12_IIIA_origin", "P0(t), case IIIA", false,
         {spec(F::IIIA, 13), spec(F::IIIA, 15), spec(F::IIIA, 19)}},
        {"fig13_IIIB_distribution", "P(x,400), case IIIB q=7", true, {spec(F::IIIB, 7)}},
        {"fig14_IIIB_origin", "P0(t), case IIIB", false, {spec(F::IIIB, 3), spec(F::IIIB, 5), spec(F::IIIB, 7)}},
    };

    // Every distinct walk is run once.
    std::map<std::string, FigureRun> unique;
    for (const auto& s : sigma_runs) {
        unique.emplace(run_label(s), FigureRun{run_label(s), s});
    }
    for (const Figure& fig : distribution_figures) {
        for (const auto& s : fig.runs) {
            unique.emplace(run_label(s), FigureRun{run_label(s), s});
        }
    }
    std::vector<FigureRun> jobs;
    for (auto& [label, job] : unique) {
        jobs.push_back(job);
    }
    const std::vector<FigureData> results =
        detail::parallel_map(jobs, [&](const FigureRun& r) { return run_figure(r, kSteps); });
    std::map<std::string, const FigureData*> data;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        data[jobs[i].label] = &results[i];
    }

    std::vector<std::filesystem::path> written;
    auto emit = [&](const std::string& name, const Table& table, const PlotSpec& plot) {
        const auto csv_path = output_dir / (name + ".csv");
        const auto svg_path = output_dir / (name + ".svg");
        write_file(csv_path, table.csv());
        write_file(svg_path, render_svg(plot));
        written.push_back(csv_path);
        written.push_back(svg_path);
    };

    {
        Table table{{"t"}, {as_doubles(data.at("hadamard")->series.steps)}};
        PlotSpec plot{"sigma(t)", "t", "sigma", {}, false};
        for (const auto& s : sigma_runs) {
            const FigureData& d = *data.at(run_label(s));
            table.header.push_back(run_label(s));
            table.columns.push_back(d.series.sigma);
            plot.series.push_back(PlotSeries{run_label(s), table.columns.front(), d.series.sigma});
        }
        emit("fig01_sigma_vs_t", table, plot);
    }

    {
        const std::vector<std::pair<F, std::vector<int>>> sweeps = {
            {F::IA, parse_param_range("2..14")},         {F::IB, parse_param_range("2..14")},
            {F::IIA, parse_param_range("2..14(even)")},  {F::IIB, parse_param_range("2..14(even)")},
            {F::IIIA, parse_param_range("3..19(odd)")}, {F::IIIB, parse_param_range("3..19(odd)")}};
        std::string csv = "family,param,period,sigma\n";
        PlotSpec plot{"sigma(400) vs period N", "N", "sigma(400)", {}, false};
        for (const auto& [family, params] : sweeps) {
            const std::vector<SigmaRow> rows = sigma_at_step_vs_period(family, params, kSteps);
            PlotSeries series{std::string(to_string(family)), {}, {}};
            for (const SigmaRow& row : rows) {
                const int period = is_family_three(family) ? 2 * row.param : row.param;
                csv += fmt::format("{},{},{},{}\n", to_string(family), row.param, period, format_number(row.sigma));
                series.x.push_back(period);
                series.y.push_back(row.sigma);
            }
            plot.series.push_back(std::move(series));
        }
        const auto csv_path = output_dir / "fig02_sigma_vs_period.csv";
        const auto svg_path = output_dir / "fig02_sigma_vs_period.svg";
        write_file(csv_path, csv);
        write_file(svg_path, render_svg(plot));
        written.push_back(csv_path);
        written.push_back(svg_path);
    }

    for (const Figure& fig : distribution_figures) {
        Table table;
        PlotSpec plot{fig.title, fig.snapshot ? "x" : "t", fig.snapshot ? "P(x,400)" : "P0(t)", {}, fig.snapshot};
        if (fig.snapshot) {
            std::vector<double> xs;
            for (int x = -kSteps; x <= kSteps; ++x) {
                xs.push_back(x);
            }
            table.header.push_back("x");
            table.columns.push_back(xs);
        } else {
            table.header.push_back("t");
            table.columns.push_back(as_doubles(data.at(run_label(fig.runs.front()))->series.steps));
        }
        for (const auto& s : fig.runs) {
            const FigureData& d = *data.at(run_label(s));
            std::vector<double> ys = fig.snapshot ? d.final_distribution.probs : d.series.p0;
            table.header.push_back(run_label(s));
            table.columns.push_back(ys);
            plot.series.push_back(PlotSeries{run_label(s), table.columns.front(), std::move(ys)});
        }
        emit(fig.name, table, plot);
    }
    return written;
}

} // namespace qwalk
