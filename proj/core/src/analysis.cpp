#include "qsgeo/analysis.hpp"

#include "qsgeo/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qsg {

namespace {

constexpr double kPi = std::numbers::pi;

void closed_form_ratios(const SearchConfig& cfg, double& num, double& den)
{
    const double diff = cfg.e_prime() - cfg.E;
    const double cross = cfg.x * cfg.x * cfg.e_prime() * cfg.E;
    num = diff * diff + 4.0 * cross;
    den = diff * diff + 2.0 * cross;
}

}  // namespace

const char* to_string(GeodesicVerdict v)
{
    switch (v) {
    case GeodesicVerdict::Geodesic: return "geodesic";
    case GeodesicVerdict::NonGeodesic: return "non-geodesic";
    case GeodesicVerdict::Indeterminate: return "indeterminate";
    }
    return "unknown";
}

Trajectory geometric_trajectory(SchemeKind kind, const SearchConfig& cfg,
                                std::size_t points)
{
    if (points < 2) {
        throw std::invalid_argument("geometric_trajectory: needs at least 2 points");
    }
    const double t_star = optimal_time(kind, cfg);
    std::vector<double> times(points);
    std::vector<PureState> states;
    states.reserve(points);
    for (std::size_t i = 0; i < points; ++i) {
        const double t = t_star * double(i) / double(points - 1);
        times[i] = t;
        states.push_back(kind == SchemeKind::FG ? fg_geometric_state(cfg, t)
                                                : mfg_geometric_state(cfg, t));
    }
    return Trajectory(std::move(times), std::move(states), hamiltonian(kind, cfg),
                      cfg.hbar);
}

EfficiencyReport efficiency_from_definitions(const Trajectory& traj)
{
    EfficiencyReport report;
    report.s0 = wootters_distance(traj.front(), traj.back());
    report.s = trajectory_length(traj);
    if (report.s < 1e-12) {
        throw std::runtime_error("efficiency_from_definitions: degenerate trajectory");
    }
    report.eta = report.s0 / report.s;
    // integral of dE dt equals (hbar/2) s, so Delta/h = s / (4 pi)
    report.delta_over_h = report.s / (4.0 * kPi);
    report.endpoint_overlap = std::abs(inner(traj.front(), traj.back()));
    return report;
}

double eta_mfg_closed(const SearchConfig& cfg)
{
    double num = 0.0;
    double den = 0.0;
    closed_form_ratios(cfg, num, den);
    return std::sqrt(num / (2.0 * den));
}

double delta_mfg_closed(const SearchConfig& cfg)
{
    double num = 0.0;
    double den = 0.0;
    closed_form_ratios(cfg, num, den);
    return 0.5 * std::sqrt(den / (2.0 * num));
}

double fg_mapping_lambda(const SearchConfig& cfg, double t)
{
    const long n = std::lround(1.0 / (4.0 * cfg.x));
    if (n < 1 || std::abs(cfg.x - 1.0 / (4.0 * double(n))) > 1e-9) {
        throw std::domain_error("fg_mapping_lambda: x = " + std::to_string(cfg.x) +
                                " is not of the solvable form 1/(4n)");
    }
    const double half = std::sin(cfg.E * t / (4.0 * cfg.hbar));
    const double full = std::sin(cfg.E * t / (2.0 * cfg.hbar));
    return (half * half + 0.5 * full) / (1.0 + full);
}

GeodesicityReport geodesicity_test(SchemeKind kind, const SearchConfig& cfg,
                                   std::size_t grid_points)
{
    const Trajectory traj = geometric_trajectory(kind, cfg, grid_points);
    const GeodesicArc arc(traj.front(), traj.back());
    const auto profile = min_d2_profile(traj, arc);

    GeodesicityReport report;
    report.scheme = kind;
    report.x = cfg.x;
    report.gamma = kind == SchemeKind::FG ? 1.0 : cfg.gamma;

    double residual_sup = 0.0;
    bool monotone = true;
    for (std::size_t i = 0; i < profile.size(); ++i) {
        residual_sup = std::max(residual_sup, profile[i].d2_min);
        if (i > 0 && profile[i].lambda_min < profile[i - 1].lambda_min - 1e-6) {
            monotone = false;
        }
    }
    const bool endpoints_ok = profile.front().lambda_min <= 1e-6 &&
                              profile.back().lambda_min >= 1.0 - 1e-6;
    report.residual_sup = residual_sup;
    report.monotone_ok = monotone && endpoints_ok;

    if (report.residual_sup <= kGeodesicAcceptResidual && report.monotone_ok) {
        report.verdict = GeodesicVerdict::Geodesic;
    } else if (report.residual_sup >= kGeodesicRejectResidual) {
        report.verdict = GeodesicVerdict::NonGeodesic;
    } else {
        report.verdict = GeodesicVerdict::Indeterminate;
    }
    return report;
}

double x_squared_condition(int n, double gamma)
{
    if (n < 1) {
        throw std::invalid_argument("x_squared_condition: n must be >= 1");
    }
    const double nn = double(n) * double(n);
    return ((1.0 - 16.0 * nn) * gamma * gamma + (2.0 + 32.0 * nn) * gamma +
            (1.0 - 16.0 * nn)) /
           (64.0 * gamma * nn);
}

ConditionSolve mfg_condition_gamma_large(const SearchConfig& cfg, int n)
{
    ConditionSolve out;
    out.x_sq_exact = x_squared_condition(n, cfg.gamma);
    out.x_sq_large_gamma =
        (1.0 - 16.0 * double(n) * double(n)) / (64.0 * double(n) * double(n)) * cfg.gamma;
    out.feasible = out.x_sq_exact > 0.0 && out.x_sq_exact < 1.0;
    return out;
}

FeasibilityWindow feasibility_window(int n)
{
    if (n < 1) {
        throw std::invalid_argument("feasibility_window: n must be >= 1");
    }
    const double nn = double(n) * double(n);
    FeasibilityWindow w;
    w.n = n;
    w.i_minus = (32.0 * nn - 16.0 * double(n) + 2.0) / (32.0 * nn - 2.0);
    w.i_plus = (32.0 * nn + 16.0 * double(n) + 2.0) / (32.0 * nn - 2.0);
    w.measure = 16.0 * double(n) / (16.0 * nn - 1.0);
    return w;
}

std::vector<SweepRow> sweep(const std::vector<double>& gammas,
                            const std::vector<double>& x_grid)
{
    if (gammas.empty() || x_grid.empty()) {
        throw std::invalid_argument("sweep: empty grid");
    }
    std::vector<SweepRow> rows;
    rows.reserve(gammas.size() * x_grid.size());
    for (double g : gammas) {
        for (double x : x_grid) {
            const SearchConfig cfg(x, 1.0, g, 1.0);
            rows.push_back(SweepRow{g, x, eta_mfg_closed(cfg), delta_mfg_closed(cfg)});
        }
    }
    return rows;
}

}  // namespace qsg
