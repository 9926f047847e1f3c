#pragma once

// Projective-space geometry on the two-level manifold: Fubini-Study metric
// (factor-4 convention, orthogonal states at distance pi), Wootters
// distance, geodesic arcs and their two parameterizations, projective
// distance d^2, and trajectory arc length by two independent estimators.

#include "qsgeo/hilbert.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace qsg {

/// Ordered time grid with one state per node; generator, when present, is
/// the time-independent Hamiltonian that produced the states (enables the
/// analytic arc-length route).
struct Trajectory {
    std::vector<double> times;
    std::vector<PureState> states;
    std::optional<HermitianOperator> generator;
    double hbar = 1.0;

    Trajectory(std::vector<double> times_, std::vector<PureState> states_,
               std::optional<HermitianOperator> generator_ = std::nullopt,
               double hbar_ = 1.0);

    std::size_t size() const { return times.size(); }
    double duration() const { return times.back() - times.front(); }
    const PureState& front() const { return states.front(); }
    const PureState& back() const { return states.back(); }
};

/// Geodesic arc between two endpoint states. The relative phase phi obeys
/// <psi_B|psi_A> = |<psi_B|psi_A>| e^{i phi} and is set to zero when the
/// overlap vanishes, so the endpoint vectors enter the interpolation with
/// the phases they carry.
class GeodesicArc {
public:
    GeodesicArc(const PureState& a, const PureState& b);

    const PureState& endpoint_a() const { return a_; }
    const PureState& endpoint_b() const { return b_; }
    double phi() const { return phi_; }
    double overlap_abs() const { return overlap_abs_; }

private:
    PureState a_;
    PureState b_;
    double phi_;
    double overlap_abs_;
};

// 2 arccos|<a|b>|, the geodesic length between the two rays.
double wootters_distance(const PureState& a, const PureState& b);

// 4 [1 - |<a|b>|^2]
double projective_distance_sq(const PureState& a, const PureState& b);

// [(1-lam) psi_A + e^{i phi} lam psi_B] / sqrt(1 - 2 lam (1-lam) (1 - |ov|))
PureState geodesic_point_lambda(const GeodesicArc& arc, double lam);

// [cos(th/2) psi_A + e^{i phi} sin(th/2) psi_B] / sqrt(1 + sin th |ov|),
// theta in [0, pi]; the same arc under lam = lambda_from_theta(theta).
PureState geodesic_point_theta(const GeodesicArc& arc, double theta);

double lambda_from_theta(double theta);

// cos(omega s) psi0 + sin(omega s)/omega dpsi0, the harmonic-oscillator
// solution of the geodesic equation in horizontal affine form. Requires
// <psi0|psi0> = 1, <psi0|dpsi0> = 0 and <dpsi0|dpsi0> = omega^2, each
// within 1e-10.
PureState harmonic_geodesic(const PureState& psi0, const Ket& dpsi0, double omega,
                            double s);

using StateFamily = std::function<PureState(const std::vector<double>&)>;

/// Symmetric metric tensor sampled by central differences.
struct MetricTensor {
    std::size_t dim = 0;
    std::vector<double> coeff;  // row-major dim x dim

    double at(std::size_t a, std::size_t b) const { return coeff[a * dim + b]; }
};

// g_ab = 4 Re[<d_a psi|d_b psi> - <d_a psi|psi><psi|d_b psi>] at xi.
MetricTensor fs_metric_tensor(const StateFamily& family, const std::vector<double>& xi,
                              double step = 1e-5);

/// Both arc-length estimators plus the grid-quality flag; coarse is set
/// when some adjacent overlap drops below 0.99.
struct LengthBreakdown {
    double chord = 0.0;            // sum of 2 arccos|<psi_k|psi_{k+1}>|
    double analytic = 0.0;         // integral of 2 dE(t)/hbar dt, generator route
    bool has_analytic = false;
    bool coarse_grid = false;
};

LengthBreakdown length_breakdown(const Trajectory& traj);

// Analytic route when the generator is known, chord sum otherwise.
double trajectory_length(const Trajectory& traj);

// Quadrature over sampled values: composite Simpson on uniform odd-count
// grids, composite trapezoid otherwise.
double integrate_samples(const std::vector<double>& times,
                         const std::vector<double>& values);

}  // namespace qsg
