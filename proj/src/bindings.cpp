#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cryptoeq/best_response.hpp"
#include "cryptoeq/market.hpp"
#include "cryptoeq/nash.hpp"
#include "cryptoeq/oracle.hpp"
#include "cryptoeq/speculator.hpp"
#include "cryptoeq/stackelberg.hpp"

namespace py = pybind11;
using namespace cryptoeq;

namespace {

std::string repr_params(const ModelParams& p) {
    std::ostringstream s;
    s << "ModelParams(k=" << p.k << ", d2=" << p.d2 << ", dD2=" << p.dD2 << ", mY=" << p.mY
      << ", sigY2=" << p.sigY2 << ", covYF=" << p.covYF << ")";
    return s.str();
}

std::string repr_point(const StrategyPoint& pt) {
    std::ostringstream s;
    s << "StrategyPoint(p=" << pt.p << ", x=" << pt.x << ", uW=" << pt.uW << ", uD=" << pt.uD
      << ")";
    return s.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Nash and leader-follower equilibria of the crypto allocation game";

    py::class_<ModelParams>(m, "ModelParams")
        .def(py::init([](double k, double d2, double dD2, double mY, double sigY2,
                         double covYF) {
                 ModelParams p{k, d2, dD2, mY, sigY2, covYF};
                 p.validate();
                 return p;
             }),
             py::arg("k"), py::arg("d2"), py::arg("dD2") = 0.0, py::arg("mY") = 1.0,
             py::arg("sigY2") = 0.0, py::arg("covYF") = 0.0)
        .def_readwrite("k", &ModelParams::k)
        .def_readwrite("d2", &ModelParams::d2)
        .def_readwrite("dD2", &ModelParams::dD2)
        .def_readwrite("mY", &ModelParams::mY)
        .def_readwrite("sigY2", &ModelParams::sigY2)
        .def_readwrite("covYF", &ModelParams::covYF)
        .def("validate", &ModelParams::validate)
        .def("__repr__", &repr_params);

    py::class_<HomeStats>(m, "HomeStats")
        .def_readonly("mF", &HomeStats::mF)
        .def_readonly("sigF2", &HomeStats::sigF2);

    py::class_<StrategyPoint>(m, "StrategyPoint")
        .def(py::init<double, double, double, double>(), py::arg("p"), py::arg("x"),
             py::arg("uW") = 0.0, py::arg("uD") = 0.0)
        .def_readonly("p", &StrategyPoint::p)
        .def_readonly("x", &StrategyPoint::x)
        .def_readonly("uW", &StrategyPoint::uW)
        .def_readonly("uD", &StrategyPoint::uD)
        .def("__repr__", &repr_point);

    m.def("home_stats", &home_stats, py::arg("params"), py::arg("p"));
    m.def("utility_w", &utility_w, py::arg("params"), py::arg("p"), py::arg("x"));
    m.def("utility_d_linear", &utility_d_linear, py::arg("params"), py::arg("p"), py::arg("x"));
    m.def("utility_d_risk_averse", &utility_d_risk_averse, py::arg("params"), py::arg("p"),
          py::arg("x"));
    m.def("attractiveness", &attractiveness, py::arg("params"));

    m.def("government_curve", &government_curve, py::arg("params"), py::arg("p"));
    m.def("wealthy_curve", &wealthy_curve, py::arg("params"), py::arg("p"));
    m.def("wealthy_best_response", &wealthy_best_response, py::arg("params"), py::arg("p"));
    m.def("wealthy_curve_slope_numerator", &wealthy_curve_slope_numerator, py::arg("params"),
          py::arg("p"));

    py::enum_<ExistenceCase>(m, "ExistenceCase")
        .value("PC_BELOW_ONE", ExistenceCase::PcBelowOne)
        .value("PC_AT_LEAST_ONE", ExistenceCase::PcAtLeastOne);

    py::class_<ConditionsReport>(m, "ConditionsReport")
        .def_readonly("pc", &ConditionsReport::pc)
        .def_readonly("condpos_holds", &ConditionsReport::condpos_holds)
        .def_readonly("condpos_as_printed", &ConditionsReport::condpos_as_printed)
        .def_readonly("existence_case", &ConditionsReport::existence_case)
        .def_readonly("existence_condition_holds", &ConditionsReport::existence_condition_holds)
        .def_readonly("uniqueness_guaranteed", &ConditionsReport::uniqueness_guaranteed)
        .def_readonly("existence_guaranteed", &ConditionsReport::existence_guaranteed);

    m.def("conditions_report", &conditions_report, py::arg("params"));

    py::class_<SolverOptions>(m, "SolverOptions")
        .def(py::init<>())
        .def_readwrite("scan_intervals", &SolverOptions::scan_intervals)
        .def_readwrite("merge_tol", &SolverOptions::merge_tol)
        .def_readwrite("x_band", &SolverOptions::x_band)
        .def_readwrite("tangency_tol", &SolverOptions::tangency_tol)
        .def_readwrite("verify_grid", &SolverOptions::verify_grid);

    py::enum_<EquilibriumKind>(m, "EquilibriumKind")
        .value("NASH", EquilibriumKind::Nash)
        .value("LEADER_FOLLOWER", EquilibriumKind::LeaderFollower);

    py::class_<EquilibriumResult>(m, "EquilibriumResult")
        .def_readonly("point", &EquilibriumResult::point)
        .def_readonly("kind", &EquilibriumResult::kind)
        .def_readonly("residual", &EquilibriumResult::residual)
        .def_readonly("verified_eps", &EquilibriumResult::verified_eps);

    m.def(
        "find_nash",
        [](const ModelParams& params, const SolverOptions& opts) {
            return find_nash(params, opts);
        },
        py::arg("params"), py::arg("opts") = SolverOptions{});
    m.def(
        "find_nash_with_diagnostics",
        [](const ModelParams& params, const SolverOptions& opts) {
            NashDiagnostics diagnostics;
            auto results = find_nash(params, opts, &diagnostics);
            return py::make_tuple(std::move(results), diagnostics.suspected_tangencies);
        },
        py::arg("params"), py::arg("opts") = SolverOptions{},
        "Returns (equilibria, suspected_tangency_p_values)");
    m.def("max_unilateral_gain", &max_unilateral_gain, py::arg("params"), py::arg("point"),
          py::arg("grid_n") = 10001);

    py::enum_<AttractivenessRegime>(m, "AttractivenessRegime")
        .value("ZERO", AttractivenessRegime::Zero)
        .value("BELOW_K", AttractivenessRegime::BelowK)
        .value("EQUALS_K", AttractivenessRegime::EqualsK)
        .value("K_TO_TWO_K", AttractivenessRegime::KToTwoK)
        .value("ABOVE_TWO_K", AttractivenessRegime::AboveTwoK);

    py::class_<ClosedFormLeaderP>(m, "ClosedFormLeaderP")
        .def_readonly("p", &ClosedFormLeaderP::p)
        .def_readonly("regime", &ClosedFormLeaderP::regime);

    py::class_<StackelbergSolution>(m, "StackelbergSolution")
        .def_readonly("pstar", &StackelbergSolution::pstar)
        .def_readonly("xstar", &StackelbergSolution::xstar)
        .def_readonly("uD", &StackelbergSolution::uD)
        .def_readonly("uW", &StackelbergSolution::uW)
        .def_readonly("regime", &StackelbergSolution::regime)
        .def_readonly("closed_form_p", &StackelbergSolution::closed_form_p)
        .def_readonly("closed_form_used", &StackelbergSolution::closed_form_used)
        .def_readonly("closed_form_numeric_gap", &StackelbergSolution::closed_form_numeric_gap);

    m.def("leader_objective", &leader_objective, py::arg("params"), py::arg("p"));
    m.def("closed_form_pstar", &closed_form_pstar, py::arg("params"));
    m.def(
        "solve_stackelberg",
        [](const ModelParams& params) { return solve_stackelberg(params); },
        py::arg("params"));

    py::class_<SpeculatorParams>(m, "SpeculatorParams")
        .def(py::init([](double a1, double a2, double q, double r1, double r2) {
                 SpeculatorParams sp{a1, a2, q, r1, r2};
                 sp.validate();
                 return sp;
             }),
             py::arg("a1"), py::arg("a2"), py::arg("q"), py::arg("r1"), py::arg("r2"))
        .def_readonly("a1", &SpeculatorParams::a1)
        .def_readonly("a2", &SpeculatorParams::a2)
        .def_readonly("q", &SpeculatorParams::q)
        .def_readonly("r1", &SpeculatorParams::r1)
        .def_readonly("r2", &SpeculatorParams::r2);

    py::enum_<VarianceMode>(m, "VarianceMode")
        .value("EXACT", VarianceMode::Exact)
        .value("AS_PRINTED", VarianceMode::AsPrinted);

    py::class_<CryptoStats>(m, "CryptoStats")
        .def_readonly("mY", &CryptoStats::mY)
        .def_readonly("sigY2", &CryptoStats::sigY2);

    m.def("optimal_volatility", &optimal_volatility, py::arg("sp"));
    m.def("crypto_stats", &crypto_stats, py::arg("sp"), py::arg("vm"),
          py::arg("mode") = VarianceMode::Exact);

    py::class_<MarketState>(m, "MarketState")
        .def(py::init([](double demand_dollars, double units_outstanding, double total_cash,
                         double total_shares) {
                 return MarketState{demand_dollars, units_outstanding, total_cash, total_shares};
             }),
             py::arg("demand_dollars"), py::arg("units_outstanding"), py::arg("total_cash") = 0.0,
             py::arg("total_shares") = 0.0)
        .def_readwrite("demand_dollars", &MarketState::demand_dollars)
        .def_readwrite("units_outstanding", &MarketState::units_outstanding)
        .def_readwrite("total_cash", &MarketState::total_cash)
        .def_readwrite("total_shares", &MarketState::total_shares)
        .def("price", &MarketState::price)
        .def("liquidity", &MarketState::liquidity);

    m.def("equilibrium_price", &equilibrium_price, py::arg("demand_dollars"),
          py::arg("units_outstanding"));
    m.def("aggregate_demand", &aggregate_demand, py::arg("wealth_total"), py::arg("x_star"));
    m.def("liquidity_value", &liquidity_value, py::arg("total_cash"), py::arg("total_shares"));
    m.def("fundamental_value_ssw", &fundamental_value_ssw, py::arg("period_k"));

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init<>())
        .def_readwrite("n_p", &GridSpec::n_p)
        .def_readwrite("n_x", &GridSpec::n_x)
        .def_readwrite("eps", &GridSpec::eps);

    py::class_<GridCluster>(m, "GridCluster")
        .def_readonly("representative", &GridCluster::representative)
        .def_readonly("size", &GridCluster::size)
        .def_readonly("p_lo", &GridCluster::p_lo)
        .def_readonly("p_hi", &GridCluster::p_hi)
        .def_readonly("x_lo", &GridCluster::x_lo)
        .def_readonly("x_hi", &GridCluster::x_hi);

    m.def("grid_best_x", &grid_best_x, py::arg("params"), py::arg("p"), py::arg("n_x"));
    m.def("grid_best_p", &grid_best_p, py::arg("params"), py::arg("x"), py::arg("n_p"),
          py::arg("risk_averse"));
    m.def(
        "grid_nash",
        [](const ModelParams& params, const GridSpec& grid) { return grid_nash(params, grid); },
        py::arg("params"), py::arg("grid") = GridSpec{});
    m.def("cluster_grid_points", &cluster_grid_points, py::arg("points"), py::arg("params"),
          py::arg("grid"));
    m.def(
        "grid_stackelberg",
        [](const ModelParams& params, const GridSpec& grid) {
            return grid_stackelberg(params, grid);
        },
        py::arg("params"), py::arg("grid") = GridSpec{});
}
