#include "canopy/acceptance.hpp"
#include "canopy/cantor.hpp"
#include "canopy/config.hpp"
#include "canopy/flipcoin.hpp"
#include "canopy/hausdorff.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace canopy;

namespace {

Position to_position(const std::vector<int>& symbols, int arity) {
    return Position(symbols, arity);
}

py::object rat_to_py(const Rational& q) {
    py::object fractions = py::module_::import("fractions");
    return fractions.attr("Fraction")(numerator(q).str(), denominator(q).str());
}

Rational rat_from_py(const py::handle& obj) {
    if (py::isinstance<py::int_>(obj)) return Rational(BigInt(py::str(obj).cast<std::string>()));
    if (py::isinstance<py::str>(obj)) return rat_from_string(obj.cast<std::string>());
    // fractions.Fraction or anything with numerator/denominator
    if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator")) {
        BigInt num(py::str(obj.attr("numerator")).cast<std::string>());
        BigInt den(py::str(obj.attr("denominator")).cast<std::string>());
        return Rational(num, den);
    }
    throw py::type_error("expected an int, a 'p/q' string, or a Fraction");
}

TargetOracle target_from_py(const py::dict& spec) {
    Json j = Json::parse(py::str(py::module_::import("json").attr("dumps")(spec))
                             .cast<std::string>());
    return target_from_json(j);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "finite-depth games on trees: dimension estimators, solvers, ball engines";
    m.attr("__version__") = kLibraryVersion;

    m.def(
        "metric_distance",
        [](const std::vector<int>& x, const std::vector<int>& y, int m_) -> py::object {
            auto d = metric_distance(to_position(x, m_), to_position(y, m_));
            if (!d) return py::none();  // indistinguishable at this depth
            return rat_to_py(*d);
        },
        py::arg("x"), py::arg("y"), py::arg("m") = 2,
        "d_m between two prefixes; None when they agree on the common length");

    m.def(
        "cylinder_diameter",
        [](const std::vector<int>& p, int m_) { return rat_to_py(cylinder_diameter(to_position(p, m_))); },
        py::arg("p"), py::arg("m") = 2);

    m.def(
        "verdict",
        [](const py::dict& set_spec, const std::vector<int>& p) {
            TargetOracle s = target_from_py(set_spec);
            return std::string(verdict_name(s.verdict(Position(p, s.tree.arity))));
        },
        py::arg("set"), py::arg("p"), "tri-state cylinder verdict for a named set");

    m.def(
        "box_count",
        [](const py::dict& set_spec, int depth) { return box_count(target_from_py(set_spec), depth); },
        py::arg("set"), py::arg("depth"));

    m.def(
        "dim_estimate",
        [](const py::dict& set_spec, int n_min, int n_max) {
            DimensionEstimate est = dim_estimate(target_from_py(set_spec), n_min, n_max);
            py::dict out;
            out["slope"] = est.slope;
            out["residual"] = est.residual;
            out["counts"] = est.counts;
            return out;
        },
        py::arg("set"), py::arg("n_min"), py::arg("n_max"));

    m.def(
        "measure_estimate",
        [](const py::dict& set_spec, const py::handle& delta, int depth) {
            PowerSum cost = measure_estimate(target_from_py(set_spec), rat_from_py(delta), depth);
            py::dict out;
            out["exact"] = cost.str();
            out["float"] = cost.to_double();
            out["is_rational"] = cost.is_rational();
            return out;
        },
        py::arg("set"), py::arg("delta"), py::arg("depth"));

    m.def(
        "solve",
        [](const py::dict& set_spec, int depth, const std::string& style_name) {
            TargetOracle s = target_from_py(set_spec);
            TargetStyle style = style_name == "open" ? TargetStyle::Open : TargetStyle::Closed;
            SolveResult r = solve(s.tree, s, depth, style);
            py::dict out;
            out["winner"] = std::string(winner_name(r.winner));
            out["depth"] = r.depth;
            return out;
        },
        py::arg("set"), py::arg("depth"), py::arg("style") = "closed");

    m.def(
        "solve_iterative",
        [](const py::dict& set_spec, int cap, const std::string& style_name) {
            TargetOracle s = target_from_py(set_spec);
            TargetStyle style = style_name == "open" ? TargetStyle::Open : TargetStyle::Closed;
            SolveResult r = solve_iterative(s.tree, s, cap, style);
            py::dict out;
            out["winner"] = std::string(winner_name(r.winner));
            out["depth"] = r.depth;
            return out;
        },
        py::arg("set"), py::arg("cap") = 32, py::arg("style") = "closed");

    m.def(
        "mc_flipcoin",
        [](const py::dict& set_spec, int depth, std::uint64_t trials, std::uint64_t seed) {
            TargetOracle s = target_from_py(set_spec);
            McCurve curve = mc_flipcoin(s, follow_strategy(s), depth, trials, seed);
            py::dict out;
            out["final"] = curve.final_survival();
            std::vector<double> survival;
            for (int d = 0; d <= depth; ++d) survival.push_back(curve.survival(d));
            out["survival"] = survival;
            out["monotone"] = curve.monotone();
            return out;
        },
        py::arg("set"), py::arg("depth") = 60, py::arg("trials") = 100000, py::arg("seed") = 7);

    m.def(
        "value_sandwich",
        [](const py::dict& m_spec, std::size_t steps) {
            Json j = Json::parse(
                py::str(py::module_::import("json").attr("dumps")(m_spec)).cast<std::string>());
            SandwichResult r = value_sandwich_fm(index_set_from_json(j), steps);
            return py::make_tuple(r.lower, r.upper);
        },
        py::arg("m"), py::arg("steps") = 3000,
        "lower and upper finite-horizon payoffs of the explicit block-game strategies");

    m.def(
        "threshold",
        [](const py::handle& alpha, const py::handle& beta, std::uint64_t balls) {
            Threshold t = threshold(rat_from_py(alpha), rat_from_py(beta), balls);
            py::dict out;
            out["float"] = t.value;
            out["exact"] = t.exact ? rat_to_py(*t.exact) : py::object(py::none());
            return out;
        },
        py::arg("alpha"), py::arg("beta"), py::arg("balls"));

    m.def("packing_number", [](int d, const py::handle& big_r, const py::handle& r) {
        return packing_number_linf(d, rat_from_py(big_r), rat_from_py(r));
    });

    m.def("verify_packing_lemma", [](int d) {
        PackingLemmaReport rep = verify_packing_lemma(d);
        py::dict out;
        out["pack"] = rep.packed_in_triple;
        out["bound"] = rep.cube_bound;
        out["pass"] = rep.pass;
        return out;
    });

    m.def(
        "cantor_interval",
        [](const py::handle& lo, const py::handle& hi, int max_digits) {
            return std::string(
                verdict_name(cantor_interval_oracle(rat_from_py(lo), rat_from_py(hi), max_digits)));
        },
        py::arg("lo"), py::arg("hi"), py::arg("max_digits") = 64);

    m.def(
        "play_schmidt",
        [](const py::dict& spec, int steps) {
            Json j = Json::parse(
                py::str(py::module_::import("json").attr("dumps")(spec)).cast<std::string>());
            j["cmd"] = "schmidt";
            j["steps"] = steps;
            return Json::parse(run_results(j, 1).dump()).dump();
        },
        py::arg("spec"), py::arg("steps") = 10, "JSON transcript of a nested-ball run");

    m.def(
        "run_experiment",
        [](const std::string& config_json, std::uint64_t seed) {
            return run_experiment(Json::parse(config_json), seed).dump();
        },
        py::arg("config_json"), py::arg("seed") = 1,
        "full JSON report for a config, as the CLI would produce");

    m.def("acceptance_keys", []() {
        std::vector<std::string> keys;
        for (const auto& row : acceptance_rows()) keys.push_back(row.key);
        return keys;
    });

    m.def(
        "run_acceptance",
        [](const std::string& only) {
            std::ostringstream out;
            MatrixResult r = run_acceptance(out, only, false);
            py::dict d;
            d["passed"] = r.passed;
            d["failed"] = r.failed;
            d["log"] = out.str();
            return d;
        },
        py::arg("only") = "");
}
