#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "qwalk/coin.hpp"
#include "qwalk/engine.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/experiment.hpp"
#include "qwalk/invariants.hpp"
#include "qwalk/layout.hpp"
#include "qwalk/observables.hpp"
#include "qwalk/walk_state.hpp"

namespace py = pybind11;
using namespace qwalk;

namespace {

// "symmetric", "asymmetric", "custom:..." or an (a, b) pair of complex amplitudes.
InitialStateKind to_init(const py::object& init) {
    if (py::isinstance<py::str>(init)) {
        return parse_init(init.cast<std::string>());
    }
    const auto pair = init.cast<std::pair<Complex, Complex>>();
    return CustomInit{Spinor{pair.first, pair.second}};
}

StepWindow to_window(const std::pair<int, int>& w) { return StepWindow{w.first, w.second}; }
std::pair<int, int> from_window(StepWindow w) { return {w.lo, w.hi}; }

Eigen::Matrix2cd to_matrix(const CoinOperator& c) {
    Eigen::Matrix2cd m;
    m << c(0, 0), c(0, 1), c(1, 0), c(1, 1);
    return m;
}

CoinOperator from_matrix(const Eigen::Matrix2cd& m) { return CoinOperator(m(0, 0), m(0, 1), m(1, 0), m(1, 1)); }

py::array_t<double> to_array(const std::vector<double>& v) { return py::array_t<double>(v.size(), v.data()); }

py::array_t<int> to_array(const std::vector<int>& v) { return py::array_t<int>(v.size(), v.data()); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Coined quantum walks on the line with periodic coin layouts";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<StateError>(m, "StateError", PyExc_RuntimeError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    py::class_<CoinParams>(m, "CoinParams")
        .def(py::init([](double rho, double theta, double phi) { return CoinParams{rho, theta, phi}; }), py::arg("rho"),
             py::arg("theta"), py::arg("phi"))
        .def_readwrite("rho", &CoinParams::rho)
        .def_readwrite("theta", &CoinParams::theta)
        .def_readwrite("phi", &CoinParams::phi);

    py::class_<CoinOperator>(m, "CoinOperator")
        .def(py::init(&from_matrix), py::arg("matrix"))
        .def("matrix", &to_matrix, "2x2 complex matrix (row = output coin index)")
        .def("__eq__", [](const CoinOperator& a, const CoinOperator& b) { return a == b; });

    m.def("make_general_coin", [](double rho, double theta, double phi) {
        return make_general_coin(CoinParams{rho, theta, phi});
    }, py::arg("rho"), py::arg("theta"), py::arg("phi"));
    m.def("hadamard", &hadamard);
    m.def("identity_coin", &identity_coin);
    m.def("check_unitary", &check_unitary, py::arg("coin"), py::arg("tol") = kUnitaryTolerance);
    m.def("apply_coin", [](const CoinOperator& c, Complex a, Complex b) {
        const Spinor s = apply_coin(c, Spinor{a, b});
        return std::make_pair(s.a, s.b);
    }, py::arg("coin"), py::arg("a"), py::arg("b"));

    py::enum_<CaseFamily>(m, "CaseFamily")
        .value("IA", CaseFamily::IA)
        .value("IB", CaseFamily::IB)
        .value("IIA", CaseFamily::IIA)
        .value("IIB", CaseFamily::IIB)
        .value("IIIA", CaseFamily::IIIA)
        .value("IIIB", CaseFamily::IIIB);

    py::class_<CaseSpec>(m, "CaseSpec")
        .def(py::init([](CaseFamily f, int n) { return CaseSpec{f, n}; }), py::arg("family"), py::arg("period_or_q"))
        .def(py::init([](const std::string& f, int n) { return CaseSpec{parse_case_family(f), n}; }),
             py::arg("family"), py::arg("period_or_q"))
        .def_readonly("family", &CaseSpec::family)
        .def_readonly("period_or_q", &CaseSpec::period_or_q);

    py::class_<CoinTable>(m, "CoinTable")
        .def(py::init<>())
        .def(py::init<CoinOperator, CoinOperator>(), py::arg("c0"), py::arg("cp"))
        .def_property_readonly("c0", &CoinTable::c0)
        .def_property_readonly("cp", &CoinTable::cp)
        .def("__len__", &CoinTable::size)
        .def("__getitem__", &CoinTable::operator[])
        .def("swapped", &CoinTable::swapped);

    py::class_<CoinLayout>(m, "CoinLayout")
        .def_property_readonly("period", &CoinLayout::period)
        .def_property_readonly("pattern", &CoinLayout::pattern)
        .def_property_readonly("anchor", &CoinLayout::anchor)
        .def("id_at", &CoinLayout::id_at, py::arg("x"));

    m.def("layout_from_pattern", &layout_from_pattern, py::arg("pattern"), py::arg("anchor") = 0);
    m.def("case_layout", [](const std::string& family, int n) { return case_layout(CaseSpec{parse_case_family(family), n}); },
          py::arg("family"), py::arg("period_or_q"));
    m.def("case_layout", py::overload_cast<const CaseSpec&>(&case_layout), py::arg("spec"));
    m.def("coin_at", &coin_at, py::arg("layout"), py::arg("table"), py::arg("x"));
    m.def("parse_pattern", [](const std::string& text, const CoinTable& base) {
        PatternLayout p = parse_pattern(text, base);
        return std::make_pair(p.layout, p.table);
    }, py::arg("text"), py::arg("base") = CoinTable{}, "Returns (layout, table)");

    py::class_<WalkRun>(m, "WalkRun")
        .def(py::init([](int t_max, const py::object& init, const CoinLayout& layout, const CoinTable& table) {
                 return WalkRun(t_max, to_init(init), layout, table);
             }),
             py::arg("t_max"), py::arg("init") = "symmetric", py::arg("layout"), py::arg("table") = CoinTable{})
        .def("step", &WalkRun::step)
        .def("evolve", [](WalkRun& r, int steps) { r.evolve(steps); }, py::arg("steps"))
        .def_property_readonly("t", [](const WalkRun& r) { return r.state().step(); })
        .def_property_readonly("t_max", [](const WalkRun& r) { return r.state().t_max(); })
        .def("total_probability", [](const WalkRun& r) { return total_probability(r.state()); })
        .def("distribution", [](const WalkRun& r) {
            const PositionDistribution d = position_distribution(r.state());
            std::vector<int> xs;
            for (int x = d.min_x(); x <= d.max_x(); ++x) {
                xs.push_back(x);
            }
            return py::make_tuple(to_array(xs), to_array(d.probs));
        }, "(x, p) arrays over [-t, t]")
        .def("amplitudes", [](const WalkRun& r) {
            const auto amps = r.state().amplitudes();
            py::array_t<Complex> out({static_cast<py::ssize_t>(amps.size()), py::ssize_t{2}});
            auto view = out.mutable_unchecked<2>();
            for (std::size_t i = 0; i < amps.size(); ++i) {
                view(i, 0) = amps[i].a;
                view(i, 1) = amps[i].b;
            }
            return out;
        }, "Window amplitudes, shape (2*t_max+1, 2); row 0 is x = -t_max");

    py::class_<SummarySeries>(m, "SummarySeries")
        .def_property_readonly("steps", [](const SummarySeries& s) { return to_array(s.steps); })
        .def_property_readonly("mean_x", [](const SummarySeries& s) { return to_array(s.mean_x); })
        .def_property_readonly("sigma", [](const SummarySeries& s) { return to_array(s.sigma); })
        .def_property_readonly("p0", [](const SummarySeries& s) { return to_array(s.p0); })
        .def("__len__", &SummarySeries::size);

    py::class_<SlopeFit>(m, "SlopeFit")
        .def_readonly("slope", &SlopeFit::slope)
        .def_readonly("intercept", &SlopeFit::intercept)
        .def_readonly("r_squared", &SlopeFit::r_squared)
        .def_property_readonly("window", [](const SlopeFit& f) { return from_window(f.window); });

    py::class_<LocalizationReport>(m, "LocalizationReport")
        .def_readonly("mean_return", &LocalizationReport::mean_return)
        .def_readonly("baseline", &LocalizationReport::baseline)
        .def_readonly("ratio", &LocalizationReport::ratio)
        .def_readonly("threshold", &LocalizationReport::threshold)
        .def_readonly("localized", &LocalizationReport::localized)
        .def_property_readonly("window", [](const LocalizationReport& r) { return from_window(r.window); });

    m.def("summarize_run", [](const CaseSpec& spec, int steps, const py::object& init) {
        return summarize_run(spec, to_init(init), steps);
    }, py::arg("spec"), py::arg("steps") = kDefaultSteps, py::arg("init") = "symmetric");
    m.def("summarize_run", [](const CoinLayout& layout, const CoinTable& table, int steps, const py::object& init) {
        return summarize_run(layout, table, to_init(init), steps);
    }, py::arg("layout"), py::arg("table"), py::arg("steps") = kDefaultSteps, py::arg("init") = "symmetric");
    m.def("hadamard_baseline", [](int steps, const py::object& init) { return hadamard_baseline(to_init(init), steps); },
          py::arg("steps") = kDefaultSteps, py::arg("init") = "symmetric");
    m.def("default_fit_window", [](int t) { return from_window(default_fit_window(t)); });
    m.def("default_localization_window", [](int t) { return from_window(default_localization_window(t)); });
    m.def("fit_sigma_slope", [](const SummarySeries& s, std::pair<int, int> w) {
        return fit_sigma_slope(s, to_window(w));
    }, py::arg("series"), py::arg("window"));
    m.def("localization_score", [](const SummarySeries& s, std::pair<int, int> w, const SummarySeries& b, double r) {
        return localization_score(s, to_window(w), b, r);
    }, py::arg("series"), py::arg("window"), py::arg("baseline"), py::arg("threshold") = kDefaultLocalizationRatio);
    m.def("detect_recurrence", [](const SummarySeries& s, std::pair<int, int> w, double h) {
        return detect_recurrence(s, to_window(w), h);
    }, py::arg("series"), py::arg("window"), py::arg("height") = kDefaultPeakHeight);
    m.def("sigma_at_step_vs_period", [](const std::string& family, const std::vector<int>& params, int t_probe) {
        std::vector<std::pair<int, double>> rows;
        for (const SigmaRow& r : sigma_at_step_vs_period(parse_case_family(family), params, t_probe)) {
            rows.emplace_back(r.param, r.sigma);
        }
        return rows;
    }, py::arg("family"), py::arg("params"), py::arg("t_probe") = kDefaultSteps);

    m.def("dense_step_matrix", &dense_step_matrix, py::arg("layout"), py::arg("table"), py::arg("window_radius"));
    m.def("oracle_max_difference", &oracle_max_difference, py::arg("spec"), py::arg("steps"));

    m.def("run_case", [](const std::string& out, const std::optional<CaseSpec>& spec, const std::string& pattern,
                         int steps, const py::object& init, const std::optional<std::pair<int, int>>& window,
                         double loc_ratio, double peak_height) {
        RunConfig config;
        config.case_spec = spec;
        config.pattern = pattern;
        config.steps = steps;
        config.init = to_init(init);
        if (window) {
            config.localization_window = to_window(*window);
        }
        config.loc_ratio = loc_ratio;
        config.peak_height = peak_height;
        config.output_dir = out;
        const OutputBundle b = run_case(config);
        py::dict paths;
        paths["summary_csv"] = b.summary_csv;
        paths["snapshot_csv"] = b.snapshot_csv;
        paths["report"] = b.report;
        return paths;
    }, py::arg("out"), py::arg("spec") = std::nullopt, py::arg("pattern") = "", py::arg("steps") = kDefaultSteps,
       py::arg("init") = "symmetric", py::arg("window") = std::nullopt,
       py::arg("loc_ratio") = kDefaultLocalizationRatio, py::arg("peak_height") = kDefaultPeakHeight,
       "Runs one walk and writes summary.csv, snapshot.csv and report.txt into `out`");

    m.def("sweep", [](const std::string& family, const std::vector<int>& params, int steps) {
        SweepConfig config;
        config.family = parse_case_family(family);
        config.params = params;
        config.steps = steps;
        return sweep_csv(sweep(config));
    }, py::arg("family"), py::arg("params"), py::arg("steps") = kDefaultSteps, "CSV text, one row per parameter");

    m.def("reproduce_figures", &reproduce_figures, py::arg("output_dir"));

    m.def("run_invariant_suite", [](int steps) {
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const CheckResult& r : run_invariant_suite(steps)) {
            out.emplace_back(r.name, r.passed, r.detail);
        }
        return out;
    }, py::arg("steps") = kDefaultSteps);
}
