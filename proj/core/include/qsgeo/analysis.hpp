#pragma once

// Efficiency, uncertainty and geodesicity verdicts for the two search
// schemes, the closed-form modified-scheme efficiency/uncertainty pair, the
// solvability condition in the small-energy-difference regime, and the
// feasibility windows of that condition.

#include "qsgeo/geometry.hpp"
#include "qsgeo/search.hpp"

#include <cstddef>
#include <vector>

namespace qsg {

/// Definitional efficiency data of one trajectory: s0 the endpoint geodesic
/// length, s the trajectory length, eta = s0/s, the uncertainty product in
/// units of h (with the orthogonalization window taken as the full
/// duration), and the measured endpoint overlap.
struct EfficiencyReport {
    double s0 = 0.0;
    double s = 0.0;
    double eta = 0.0;
    double delta_over_h = 0.0;
    double endpoint_overlap = 0.0;
};

enum class GeodesicVerdict { Geodesic, NonGeodesic, Indeterminate };

const char* to_string(GeodesicVerdict v);

// Verdict thresholds: residuals at or below the accept level with a
// monotone endpoint-correct argmin mapping count as geodesic, residuals at
// or above the reject level as non-geodesic, the gap is indeterminate.
inline constexpr double kGeodesicAcceptResidual = 1e-9;
inline constexpr double kGeodesicRejectResidual = 1e-3;

struct GeodesicityReport {
    SchemeKind scheme = SchemeKind::FG;
    double x = 0.0;
    double gamma = 1.0;
    double residual_sup = 0.0;  // sup over t of min over lambda of d^2(t,lambda)
    bool monotone_ok = false;   // argmin mapping monotone with lambda(0)=0, lambda(t*)=1
    GeodesicVerdict verdict = GeodesicVerdict::Indeterminate;
};

/// gamma-interval on which the solvability condition admits x^2 > 0, with
/// its exact endpoints and measure.
struct FeasibilityWindow {
    int n = 1;
    double i_minus = 0.0;
    double i_plus = 0.0;
    double measure = 0.0;
};

/// Exact and large-gamma-approximate solutions x^2 of the modified-scheme
/// solvability condition; a non-positive exact value signals infeasibility.
struct ConditionSolve {
    double x_sq_exact = 0.0;
    double x_sq_large_gamma = 0.0;
    bool feasible = false;  // exact solution lies in (0,1)
};

struct SweepRow {
    double gamma = 1.0;
    double x = 0.0;
    double eta_closed = 0.0;
    double delta_over_h_closed = 0.0;
};

// The exact evolved geometric state sampled on a uniform grid over
// [0, optimal_time], generator attached.
Trajectory geometric_trajectory(SchemeKind kind, const SearchConfig& cfg,
                                std::size_t points = 1001);

// eta = s0/s and Delta/h evaluated from the definitions. The dispersion
// integral equals (hbar/2) s, so Delta/h = s/(4 pi) holds on either length
// route; generator-free trajectories fall back to the chord length.
EfficiencyReport efficiency_from_definitions(const Trajectory& traj);

// (1/sqrt 2) sqrt[((E'-E)^2 + 4x^2 E'E) / ((E'-E)^2 + 2x^2 E'E)]; exactly 1
// at gamma = 1.
double eta_mfg_closed(const SearchConfig& cfg);

// (1/(2 sqrt 2)) sqrt[((E'-E)^2 + 2x^2 E'E) / ((E'-E)^2 + 4x^2 E'E)] in
// units of h; exactly 1/4 at gamma = 1.
double delta_mfg_closed(const SearchConfig& cfg);

// The closed-form mapping [sin^2(Et/4hbar) + sin(Et/2hbar)/2] /
// [1 + sin(Et/2hbar)], admitted only for x within 1e-9 of 1/(4n). The
// printed form is the exact argmin mapping for n = 1.
double fg_mapping_lambda(const SearchConfig& cfg, double t);

GeodesicityReport geodesicity_test(SchemeKind kind, const SearchConfig& cfg,
                                   std::size_t grid_points = 1000);

// x^2(n, gamma) of the solvability condition, exact in gamma.
double x_squared_condition(int n, double gamma);

ConditionSolve mfg_condition_gamma_large(const SearchConfig& cfg, int n);

FeasibilityWindow feasibility_window(int n);

// Closed-form (eta, Delta/h) table over the grid, gamma-major x-minor.
std::vector<SweepRow> sweep(const std::vector<double>& gammas,
                            const std::vector<double>& x_grid);

}  // namespace qsg
