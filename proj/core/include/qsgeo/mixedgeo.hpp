#pragma once

// Mixed-state generalization layer: Uhlmann-Jozsa fidelity in its qubit
// closed form, Bures angle/distance, SLD quantum Fisher information from
// sampled trajectories, and the generalized efficiency measures.

#include "qsgeo/hilbert.hpp"

#include <cstddef>
#include <vector>

namespace qsg {

/// 2x2 density matrix, Hermitian by construction; unit trace and positive
/// semidefiniteness (within 1e-12) are validated.
class DensityState {
public:
    DensityState(double rho_ww, double rho_rr, Complex rho_wr);

    static DensityState from_pure(const PureState& psi);
    static DensityState from_bloch(double rx, double ry, double rz);

    double ww() const { return ww_; }
    double rr() const { return rr_; }
    Complex wr() const { return wr_; }

    double purity() const;  // tr(rho^2), in [1/2, 1]

private:
    double ww_;
    double rr_;
    Complex wr_;
};

double density_expectation(const HermitianOperator& op, const DensityState& rho);
double density_dispersion(const HermitianOperator& op, const DensityState& rho);

// U rho U^dagger under exp(-i H t / hbar).
DensityState propagate(const HermitianOperator& op, const DensityState& rho, double t,
                       double hbar = 1.0);

struct MixedTrajectory {
    std::vector<double> times;
    std::vector<DensityState> states;
    double hbar = 1.0;

    MixedTrajectory(std::vector<double> times_, std::vector<DensityState> states_,
                    double hbar_ = 1.0);

    std::size_t size() const { return times.size(); }
};

// Qubit closed form tr(r1 r2) + 2 sqrt(det r1 det r2); equals the squared
// overlap for rank-1 inputs.
double uhlmann_fidelity(const DensityState& r1, const DensityState& r2);

double bures_angle(const DensityState& r1, const DensityState& r2);     // arccos sqrt F
double bures_distance_sq(const DensityState& r1, const DensityState& r2);  // 2(1 - sqrt F)

// Quantum Fisher information tr(rho L^2) at one grid index, with L solved
// from drho/dt = (rho L + L rho)/2 in the eigenbasis of rho; drho/dt comes
// from second-order finite differences on the grid. Eigenvalue pairs whose
// sum underflows 1e-12 are dropped and flagged through rank_deficient.
double sld_qfi(const MixedTrajectory& traj, std::size_t t_index,
               bool* rank_deficient = nullptr);

// 2 arccos(sqrt F[rho(0), rho(t*)]) / integral of sqrt(F_Q) dt.
double efficiency_mixed(const MixedTrajectory& traj);

/// Integrated-QFI ratio of a Hamiltonian path against a geodesic path with
/// matching endpoints, reported in both orientations.
struct EfficiencyTildeReport {
    double h_over_geo = 0.0;
    double geo_over_h = 0.0;
};

EfficiencyTildeReport efficiency_tilde(const MixedTrajectory& traj_h,
                                       const MixedTrajectory& traj_geo);

struct UncertaintyBoundCheck {
    double bound = 0.0;  // (h/2) F_Q^{-1/2}; infinite when F_Q vanishes
    double dxi = 0.0;
    bool satisfied = false;
};

UncertaintyBoundCheck generalized_uncertainty_bound(const MixedTrajectory& traj,
                                                    std::size_t t_index, double dxi);

}  // namespace qsg
