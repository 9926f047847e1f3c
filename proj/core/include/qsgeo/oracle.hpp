#pragma once

// Independent brute-force numerics used to validate every closed form:
// fixed-step 4th-order Schrodinger integration with per-step
// renormalization, and exhaustive per-sample minimization of the projective
// distance to a geodesic arc. Fixed step counts keep runs bit-reproducible.

#include "qsgeo/geometry.hpp"
#include "qsgeo/hilbert.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace qsg {

struct IntegratorSpec {
    int steps = 10000;  // total fixed steps over [0, t_end]; at least 100
};

// Classic single-step 4th-order integration of i hbar d|psi>/dt = H |psi>,
// renormalizing after every step; returns the full trajectory with the
// generator attached.
Trajectory integrate_schrodinger(const HermitianOperator& h, const PureState& psi0,
                                 double t_end, const IntegratorSpec& spec = {},
                                 double hbar = 1.0);

// Derivative-free bracketed scalar minimization; returns (argmin, min).
std::pair<double, double> golden_minimize(const std::function<double(double)>& f,
                                          double lo, double hi, double tol = 1e-12);

struct MinD2Point {
    double t = 0.0;
    double lambda_min = 0.0;
    double d2_min = 0.0;
};

// For every trajectory sample, min over lambda in [0,1] of the projective
// distance to the arc: coarse scan on `grid` points to bracket, then
// golden-section refinement to 1e-12.
std::vector<MinD2Point> min_d2_profile(const Trajectory& traj, const GeodesicArc& arc,
                                       int grid = 64);

}  // namespace qsg
