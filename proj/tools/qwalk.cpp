// qwalk: run coined quantum walks with periodic coin layouts.
//
//   qwalk run --case IB --period 7 --steps 400 --out out/ib7
//   qwalk run --pattern H1I13 --out out/ia14
//   qwalk sweep --case IIA --period "2..14(even)"
//   qwalk reproduce-figures --out figures
//   qwalk validate
//
// Exit status: 0 success, 2 usage or configuration error, 1 runtime or I/O error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qwalk/detail/parse.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/experiment.hpp"
#include "qwalk/invariants.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct LayoutFlags {
    std::string family;
    std::string period;
    std::string q;
    std::string pattern;
};

void add_layout_flags(CLI::App& cmd, LayoutFlags& flags, bool ranges) {
    cmd.add_option("--case", flags.family, "Case family: IA, IB, IIA, IIB, IIIA or IIIB");
    cmd.add_option("--period", flags.period,
                   ranges ? "Period N: value, list or range such as 2..14 or 2..14(even)" : "Period N");
    cmd.add_option("--q", flags.q, ranges ? "Block length q for family III: value, list or range" : "Block length q");
    if (!ranges) {
        cmd.add_option("--pattern", flags.pattern, "Compact pattern such as H1I13 or I7H7");
    }
}

// Family III accepts --q q or --period 2q; families I and II need --period.
std::string case_parameter_text(qwalk::CaseFamily family, const LayoutFlags& flags) {
    if (qwalk::is_family_three(family)) {
        if (!flags.q.empty() && !flags.period.empty()) {
            throw qwalk::DomainError("give either --q or --period for family III, not both");
        }
        if (!flags.q.empty()) {
            return flags.q;
        }
        if (flags.period.empty()) {
            throw qwalk::DomainError("family III needs --q (or --period N = 2q)");
        }
        return flags.period;
    }
    if (!flags.q.empty()) {
        throw qwalk::DomainError("--q only applies to families IIIA and IIIB");
    }
    if (flags.period.empty()) {
        throw qwalk::DomainError("case " + std::string(qwalk::to_string(family)) + " needs --period");
    }
    return flags.period;
}

int period_to_q(int period) {
    if (period % 2 != 0) {
        throw qwalk::DomainError("family III period must be even (N = 2q), got " + std::to_string(period));
    }
    return period / 2;
}

struct RunFlags {
    LayoutFlags layout;
    int steps = qwalk::kDefaultSteps;
    std::string init = "symmetric";
    std::string coin_c0;
    std::string coin_cp;
    std::string out = ".";
    std::string window;
    double loc_ratio = qwalk::kDefaultLocalizationRatio;
    double peak_height = qwalk::kDefaultPeakHeight;
};

qwalk::RunConfig to_run_config(const RunFlags& flags) {
    qwalk::RunConfig config;
    const bool has_case = !flags.layout.family.empty();
    const bool has_pattern = !flags.layout.pattern.empty();
    if (has_case == has_pattern) {
        throw qwalk::DomainError("give exactly one of --case or --pattern");
    }
    if (has_case) {
        const qwalk::CaseFamily family = qwalk::parse_case_family(flags.layout.family);
        const std::string text = case_parameter_text(family, flags.layout);
        int value = qwalk::detail::parse_number<int>(text, "period");
        if (qwalk::is_family_three(family) && flags.layout.q.empty()) {
            value = period_to_q(value);
        }
        config.case_spec = qwalk::CaseSpec{family, value};
    } else {
        if (!flags.layout.period.empty() || !flags.layout.q.empty()) {
            throw qwalk::DomainError("--period and --q are implied by --pattern");
        }
        config.pattern = flags.layout.pattern;
    }
    config.init = qwalk::parse_init(flags.init);
    config.steps = flags.steps;
    if (!flags.coin_c0.empty()) {
        config.coin_c0 = qwalk::parse_coin_params(flags.coin_c0);
    }
    if (!flags.coin_cp.empty()) {
        config.coin_cp = qwalk::parse_coin_params(flags.coin_cp);
    }
    if (!flags.window.empty()) {
        config.localization_window = qwalk::parse_window(flags.window);
    }
    config.loc_ratio = flags.loc_ratio;
    config.peak_height = flags.peak_height;
    config.output_dir = flags.out;
    qwalk::validate(config);
    return config;
}

int do_run(const RunFlags& flags) {
    const qwalk::RunConfig config = to_run_config(flags);
    const qwalk::OutputBundle bundle = qwalk::run_case(config);
    std::cout << "wrote " << bundle.summary_csv.string() << "\n"
              << "wrote " << bundle.snapshot_csv.string() << "\n"
              << "wrote " << bundle.report.string() << "\n";
    std::ifstream report(bundle.report);
    std::cout << report.rdbuf();
    return kExitOk;
}

struct SweepFlags {
    LayoutFlags layout;
    int steps = qwalk::kDefaultSteps;
    std::string init = "symmetric";
    std::string out;
    std::string window;
    double loc_ratio = qwalk::kDefaultLocalizationRatio;
};

int do_sweep(const SweepFlags& flags) {
    if (flags.layout.family.empty()) {
        throw qwalk::DomainError("sweep needs --case");
    }
    qwalk::SweepConfig config;
    config.family = qwalk::parse_case_family(flags.layout.family);
    config.params = qwalk::parse_param_range(case_parameter_text(config.family, flags.layout));
    if (qwalk::is_family_three(config.family) && flags.layout.q.empty()) {
        for (int& p : config.params) {
            p = period_to_q(p);
        }
    }
    config.steps = flags.steps;
    config.init = qwalk::parse_init(flags.init);
    if (!flags.window.empty()) {
        config.localization_window = qwalk::parse_window(flags.window);
    }
    config.loc_ratio = flags.loc_ratio;

    const std::string csv = qwalk::sweep_csv(qwalk::sweep(config));
    if (!flags.out.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(flags.out, ec);
        if (ec) {
            throw qwalk::IoError("cannot create output directory '" + flags.out + "': " + ec.message());
        }
        const auto path = std::filesystem::path(flags.out) /
                          ("sweep_" + std::string(qwalk::to_string(config.family)) + ".csv");
        qwalk::write_file(path, csv);
        std::cerr << "wrote " << path.string() << "\n";
    }
    std::cout << csv;
    return kExitOk;
}

int do_reproduce(const std::string& out) {
    for (const auto& path : qwalk::reproduce_figures(out)) {
        std::cout << "wrote " << path.string() << "\n";
    }
    return kExitOk;
}

int do_validate(int steps) {
    if (steps < 1) {
        throw qwalk::DomainError("--steps must be >= 1");
    }
    bool all = true;
    for (const qwalk::CheckResult& r : qwalk::run_invariant_suite(steps)) {
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.detail << ")\n";
        all = all && r.passed;
    }
    return all ? kExitOk : kExitRuntime;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coined quantum walks on the line with periodic coin layouts"};
    app.require_subcommand(1);

    RunFlags run_flags;
    CLI::App* run = app.add_subcommand("run", "Run one walk and write summary, snapshot and report");
    add_layout_flags(*run, run_flags.layout, false);
    run->add_option("--steps", run_flags.steps, "Number of steps")->capture_default_str();
    run->add_option("--init", run_flags.init, "symmetric | asymmetric | custom:a_re,a_im,b_re,b_im")
        ->capture_default_str();
    run->add_option("--coin-c0", run_flags.coin_c0, "No-potential coin as rho,theta,phi (default I)");
    run->add_option("--coin-cp", run_flags.coin_cp, "Potential coin as rho,theta,phi (default H)");
    run->add_option("--out", run_flags.out, "Output directory")->capture_default_str();
    run->add_option("--window", run_flags.window, "Localization window LO:HI (default T/2:T)");
    run->add_option("--loc-ratio", run_flags.loc_ratio, "Localization ratio threshold")->capture_default_str();
    run->add_option("--peak-height", run_flags.peak_height, "Recurrence peak height")->capture_default_str();

    SweepFlags sweep_flags;
    CLI::App* sweep = app.add_subcommand("sweep", "Sweep the period of one case family");
    add_layout_flags(*sweep, sweep_flags.layout, true);
    sweep->add_option("--steps", sweep_flags.steps, "Number of steps")->capture_default_str();
    sweep->add_option("--init", sweep_flags.init, "Initial state")->capture_default_str();
    sweep->add_option("--out", sweep_flags.out, "Also write sweep_<case>.csv into this directory");
    sweep->add_option("--window", sweep_flags.window, "Localization window LO:HI (default T/2:T)");
    sweep->add_option("--loc-ratio", sweep_flags.loc_ratio, "Localization ratio threshold")->capture_default_str();

    std::string figures_out = "figures";
    CLI::App* figures = app.add_subcommand("reproduce-figures", "Write the figure data and plots");
    figures->add_option("--out", figures_out, "Output directory")->capture_default_str();

    int validate_steps = qwalk::kDefaultSteps;
    CLI::App* validate = app.add_subcommand("validate", "Run the invariant suite");
    validate->add_option("--steps", validate_steps, "Steps per reference run")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*run) {
            return do_run(run_flags);
        }
        if (*sweep) {
            return do_sweep(sweep_flags);
        }
        if (*figures) {
            return do_reproduce(figures_out);
        }
        if (*validate) {
            return do_validate(validate_steps);
        }
    } catch (const qwalk::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
