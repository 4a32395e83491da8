#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cltbound/bound.hpp"
#include "cltbound/constants.hpp"
#include "cltbound/distribution.hpp"
#include "cltbound/normal.hpp"
#include "cltbound/optimizer.hpp"
#include "cltbound/ranges.hpp"
#include "cltbound/truncation.hpp"
#include "cltbound/verifier.hpp"

namespace py = pybind11;
using namespace cltbound;

namespace {

py::dict report_dict(const FeasibilityReport& r) {
    py::dict d;
    for (const auto& [name, cond] : r.entries()) {
        d[py::str(std::string(name))] = py::make_tuple(cond->satisfied, cond->margin);
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Nonuniform Berry-Esseen bound C(t)";

    m.attr("MIN_COORDINATE") = kMinCoordinate;
    m.attr("UNIFORM_CONSTANT") = kUniformConstant;
    m.attr("NONUNIFORM_CONSTANT") = kNonuniformConstant;

    py::class_<MomentEnvelope>(m, "MomentEnvelope")
        .def_readonly("beta_hi", &MomentEnvelope::beta_hi)
        .def_readonly("m1_hi", &MomentEnvelope::m1_hi)
        .def_readonly("m2_hi", &MomentEnvelope::m2_hi)
        .def_readonly("m3_hi", &MomentEnvelope::m3_hi)
        .def_readonly("abs_m1_hi", &MomentEnvelope::abs_m1_hi)
        .def_readonly("m1_lo", &MomentEnvelope::m1_lo)
        .def_readonly("m2_lo", &MomentEnvelope::m2_lo)
        .def_readonly("ey_lo", &MomentEnvelope::ey_lo)
        .def_readonly("ey2_lo", &MomentEnvelope::ey2_lo)
        .def_readonly("ey3_lo", &MomentEnvelope::ey3_lo);

    m.def(
        "moment_envelope",
        [](double s, double h, double rho) { return moment_envelope({s, h, rho}); }, py::arg("s"), py::arg("h"),
        py::arg("rho"));
    m.def("psi_split", &psi_split, py::arg("n"), py::arg("t"), py::arg("a"), py::arg("b"), py::arg("c"),
          py::arg("rho"));

    py::class_<BoundParams>(m, "BoundParams")
        .def(py::init<double, double, double>(), py::arg("t"), py::arg("tau"), py::arg("b"))
        .def_property_readonly("t", &BoundParams::t)
        .def_property_readonly("tau", &BoundParams::tau)
        .def_property_readonly("b", &BoundParams::b);

    py::class_<CenterQuantities>(m, "CenterQuantities")
        .def_readonly("gamma", &CenterQuantities::gamma)
        .def_readonly("beta_hi", &CenterQuantities::beta_hi)
        .def_readonly("mu_hi", &CenterQuantities::mu_hi)
        .def_readonly("m2_lo", &CenterQuantities::m2_lo)
        .def_readonly("m2_hi", &CenterQuantities::m2_hi)
        .def_readonly("delta2_lo", &CenterQuantities::delta2_lo)
        .def_readonly("alpha", &CenterQuantities::alpha)
        .def_readonly("big_delta", &CenterQuantities::big_delta)
        .def_readonly("eta", &CenterQuantities::eta);

    py::class_<BoundResult>(m, "BoundResult")
        .def_readonly("b_tail", &BoundResult::b_tail)
        .def_readonly("b_center", &BoundResult::b_center)
        .def_readonly("c_value", &BoundResult::c_value)
        .def_readonly("nonuniform_at_t", &BoundResult::nonuniform_at_t)
        .def_readonly("nagaev_at_t", &BoundResult::nagaev_at_t)
        .def_readonly("uniform_ref", &BoundResult::uniform_ref);

    m.def("gamma_budget", [](double t, double tau, double b) { return gamma_budget({t, tau, b}); },
          py::arg("t"), py::arg("tau"), py::arg("b"));
    m.def("center_quantities", [](double t, double tau, double b) { return center_quantities({t, tau, b}); },
          py::arg("t"), py::arg("tau"), py::arg("b"));
    m.def(
        "check_feasibility",
        [](double t, double tau, double b) {
            const BoundParams p(t, tau, b);
            return report_dict(check_feasibility(p, center_quantities(p)));
        },
        py::arg("t"), py::arg("tau"), py::arg("b"),
        "Map of condition name to (satisfied, margin).");
    m.def(
        "compute_bounds",
        [](double t, double tau, double b) -> std::optional<BoundResult> {
            return evaluate({t, tau, b}).result;
        },
        py::arg("t"), py::arg("tau"), py::arg("b"), "BoundResult, or None when (t, tau, b) is infeasible.");
    m.def(
        "evaluate_formulas",
        [](double t, double tau, double b) {
            const BoundParams p(t, tau, b);
            return evaluate_formulas(p, center_quantities(p));
        },
        py::arg("t"), py::arg("tau"), py::arg("b"), "Formula values without the feasibility gate.");

    m.def(
        "param_ranges",
        [](double t, std::optional<double> b) {
            const ParamRanges r = param_ranges(t, b);
            py::dict d;
            d["b_lo"] = r.b_lo;
            d["b_hi"] = r.b_hi;
            d["tau_hi"] = r.tau_hi;
            d["tau_lo"] = r.tau_lo;
            return d;
        },
        py::arg("t"), py::arg("b") = py::none());

    py::class_<OptimizationResult>(m, "OptimizationResult")
        .def_readonly("t", &OptimizationResult::t)
        .def_readonly("evaluations", &OptimizationResult::evaluations)
        .def_readonly("feasible_count", &OptimizationResult::feasible_count)
        .def_property_readonly("feasible", &OptimizationResult::feasible)
        .def_property_readonly("best_tau",
                               [](const OptimizationResult& r) -> std::optional<double> {
                                   return r.optimum ? std::optional(r.optimum->tau) : std::nullopt;
                               })
        .def_property_readonly("best_b",
                               [](const OptimizationResult& r) -> std::optional<double> {
                                   return r.optimum ? std::optional(r.optimum->b) : std::nullopt;
                               })
        .def_property_readonly("c_value",
                               [](const OptimizationResult& r) -> std::optional<double> {
                                   return r.optimum ? std::optional(r.optimum->bound.c_value) : std::nullopt;
                               });

    m.def(
        "optimize", [](double t, double tau_step, double b_step) { return optimize(t, {tau_step, b_step}); },
        py::arg("t"), py::arg("tau_step") = 0.001, py::arg("b_step") = 0.001,
        py::call_guard<py::gil_scoped_release>());
    m.def(
        "make_table",
        [](const std::vector<double>& ts, double tau_step, double b_step) {
            std::vector<OptimizationResult> out;
            for (auto& row : make_table(ts, {tau_step, b_step})) out.push_back(row.result);
            return out;
        },
        py::arg("t_values"), py::arg("tau_step") = 0.001, py::arg("b_step") = 0.001,
        py::call_guard<py::gil_scoped_release>());

    m.def("normal_cdf_complement", [](double t) { return static_cast<double>(normal_cdf_complement(t)); },
          py::arg("t"));

    py::class_<DiscreteDistribution>(m, "DiscreteDistribution")
        .def_static(
            "from_atoms",
            [](const std::vector<std::pair<double, double>>& atoms, std::string id) {
                std::vector<Atom> v;
                for (auto [x, p] : atoms) v.push_back({x, p});
                return DiscreteDistribution::from_atoms(std::move(v), std::move(id));
            },
            py::arg("atoms"), py::arg("id") = "atoms")
        .def_static("rademacher", &DiscreteDistribution::rademacher)
        .def_static("two_point", &DiscreteDistribution::two_point, py::arg("p"))
        .def_static("two_point_with_rho", &DiscreteDistribution::two_point_with_rho, py::arg("rho"))
        .def_static("symmetric_three_point", &DiscreteDistribution::symmetric_three_point, py::arg("p0"))
        .def_property_readonly("id", &DiscreteDistribution::id)
        .def_property_readonly("rho", &DiscreteDistribution::rho)
        .def_property_readonly("atoms", [](const DiscreteDistribution& d) {
            std::vector<std::pair<double, double>> out;
            for (const Atom& a : d.atoms()) out.emplace_back(a.value, a.probability);
            return out;
        });

    m.def("exact_convolution_cdf",
          [](const DiscreteDistribution& d, int n, double x) { return exact_convolution_cdf(d, n, x); },
          py::arg("dist"), py::arg("n"), py::arg("x"));

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("distribution_id", &VerificationReport::distribution_id)
        .def_readonly("n", &VerificationReport::n)
        .def_readonly("t_grid", &VerificationReport::t_grid)
        .def_readonly("ratios", &VerificationReport::ratios)
        .def_readonly("max_ratio", &VerificationReport::max_ratio)
        .def_readonly("violations", &VerificationReport::violations);

    m.def(
        "verify_bound",
        [](const DiscreteDistribution& d, int n, const std::vector<double>& grid,
           std::optional<BoundProvider> c_of_t, bool lower) {
            const Tail tail = lower ? Tail::lower : Tail::upper;
            if (c_of_t) return verify_bound(d, n, grid, *c_of_t, tail);
            OptimizedBound bound;
            return verify_bound(d, n, grid, bound.provider(), tail);
        },
        py::arg("dist"), py::arg("n"), py::arg("t_grid"), py::arg("c_of_t") = py::none(),
        py::arg("lower") = false,
        "c_of_t maps t to C(t) (or None); defaults to the grid-optimized bound.");

    py::class_<CiBound>(m, "CiBound")
        .def_readonly("t", &CiBound::t)
        .def_readonly("c_value", &CiBound::c_value)
        .def_readonly("normal_term", &CiBound::normal_term)
        .def_readonly("nonuniform_term", &CiBound::nonuniform_term)
        .def_readonly("bound", &CiBound::bound);

    m.def(
        "ci_bound",
        [](long long n, double eps, double rho, std::optional<BoundProvider> c_of_t) {
            if (c_of_t) return ci_bound(n, eps, rho, *c_of_t);
            OptimizedBound bound;
            return ci_bound(n, eps, rho, bound.provider());
        },
        py::arg("n"), py::arg("eps"), py::arg("rho") = 1.0, py::arg("c_of_t") = py::none());

    py::register_exception<InfeasibleCoordinate>(m, "InfeasibleCoordinate", PyExc_RuntimeError);
}
