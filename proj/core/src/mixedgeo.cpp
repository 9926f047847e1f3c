#include "qsgeo/mixedgeo.hpp"

#include "qsgeo/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qsg {

namespace {

// Plain 2x2 complex matrix, workspace for density derivatives.
struct Mat2 {
    Complex ww{0.0, 0.0};
    Complex wr{0.0, 0.0};
    Complex rw{0.0, 0.0};
    Complex rr{0.0, 0.0};
};

Mat2 to_mat(const DensityState& rho)
{
    return Mat2{Complex(rho.ww(), 0.0), rho.wr(), std::conj(rho.wr()),
                Complex(rho.rr(), 0.0)};
}

Mat2 scaled_diff(const Mat2& a, const Mat2& b, double inv_h)
{
    return Mat2{(a.ww - b.ww) * inv_h, (a.wr - b.wr) * inv_h, (a.rw - b.rw) * inv_h,
                (a.rr - b.rr) * inv_h};
}

Mat2 lincomb(double ca, const Mat2& a, double cb, const Mat2& b, double cc, const Mat2& c)
{
    return Mat2{ca * a.ww + cb * b.ww + cc * c.ww, ca * a.wr + cb * b.wr + cc * c.wr,
                ca * a.rw + cb * b.rw + cc * c.rw, ca * a.rr + cb * b.rr + cc * c.rr};
}

// d rho/dt at index i: central difference inside, second-order one-sided
// (quadratic fit) at the grid ends.
Mat2 density_derivative(const MixedTrajectory& traj, std::size_t i)
{
    const auto& t = traj.times;
    const std::size_t n = traj.size();
    if (n < 3) {
        throw std::invalid_argument("sld_qfi: need at least 3 grid points");
    }
    if (i > 0 && i + 1 < n) {
        return scaled_diff(to_mat(traj.states[i + 1]), to_mat(traj.states[i - 1]),
                           1.0 / (t[i + 1] - t[i - 1]));
    }
    const bool at_start = (i == 0);
    const std::size_t i0 = at_start ? 0 : n - 1;
    const std::size_t i1 = at_start ? 1 : n - 2;
    const std::size_t i2 = at_start ? 2 : n - 3;
    const double d01 = t[i0] - t[i1];
    const double d02 = t[i0] - t[i2];
    const double d12 = t[i1] - t[i2];
    const double c0 = (d01 + d02) / (d01 * d02);
    const double c1 = -d02 / (d01 * d12);
    const double c2 = d01 / (d02 * d12);
    return lincomb(c0, to_mat(traj.states[i0]), c1, to_mat(traj.states[i1]), c2,
                   to_mat(traj.states[i2]));
}

Complex sandwich(const PureState& bra, const Mat2& m, const PureState& ket)
{
    const Complex left_w = m.ww * ket.a_w() + m.wr * ket.a_r();
    const Complex left_r = m.rw * ket.a_w() + m.rr * ket.a_r();
    return std::conj(bra.a_w()) * left_w + std::conj(bra.a_r()) * left_r;
}

std::vector<double> qfi_speed_samples(const MixedTrajectory& traj)
{
    std::vector<double> speed(traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i) {
        speed[i] = std::sqrt(sld_qfi(traj, i));
    }
    return speed;
}

}  // namespace

DensityState::DensityState(double rho_ww, double rho_rr, Complex rho_wr)
    : ww_(rho_ww), rr_(rho_rr), wr_(rho_wr)
{
    if (std::abs(ww_ + rr_ - 1.0) > 1e-12) {
        throw std::invalid_argument("DensityState: trace = " + std::to_string(ww_ + rr_) +
                                    ", expected 1");
    }
    const double radius = std::hypot(0.5 * (ww_ - rr_), std::abs(wr_));
    if (0.5 - radius < -1e-12) {
        throw std::invalid_argument("DensityState: negative eigenvalue " +
                                    std::to_string(0.5 - radius));
    }
}

DensityState DensityState::from_pure(const PureState& psi)
{
    return DensityState(std::norm(psi.a_w()), std::norm(psi.a_r()),
                        psi.a_w() * std::conj(psi.a_r()));
}

DensityState DensityState::from_bloch(double rx, double ry, double rz)
{
    return DensityState(0.5 * (1.0 + rz), 0.5 * (1.0 - rz),
                        Complex(0.5 * rx, -0.5 * ry));
}

double DensityState::purity() const
{
    return ww_ * ww_ + rr_ * rr_ + 2.0 * std::norm(wr_);
}

double density_expectation(const HermitianOperator& op, const DensityState& rho)
{
    return rho.ww() * op.h_ww + rho.rr() * op.h_rr +
           2.0 * (rho.wr() * std::conj(op.h_wr)).real();
}

double density_dispersion(const HermitianOperator& op, const DensityState& rho)
{
    // tr(rho H^2) with H^2 expanded entrywise
    const double h2_ww = op.h_ww * op.h_ww + std::norm(op.h_wr);
    const double h2_rr = op.h_rr * op.h_rr + std::norm(op.h_wr);
    const Complex h2_wr = (op.h_ww + op.h_rr) * op.h_wr;
    const double second = rho.ww() * h2_ww + rho.rr() * h2_rr +
                          2.0 * (rho.wr() * std::conj(h2_wr)).real();
    const double mean = density_expectation(op, rho);
    return std::sqrt(std::max(0.0, second - mean * mean));
}

DensityState propagate(const HermitianOperator& op, const DensityState& rho, double t,
                       double hbar)
{
    const Spectrum2 eig = spectrum(op);
    // rho(t) entries in the eigenbasis pick up relative phases only
    const Mat2 m = to_mat(rho);
    const Complex r_mm = sandwich(eig.v_minus, m, eig.v_minus);
    const Complex r_pp = sandwich(eig.v_plus, m, eig.v_plus);
    Complex r_mp = sandwich(eig.v_minus, m, eig.v_plus);
    r_mp *= std::polar(1.0, -(eig.e_minus - eig.e_plus) * t / hbar);

    const Complex vm_w = eig.v_minus.a_w();
    const Complex vm_r = eig.v_minus.a_r();
    const Complex vp_w = eig.v_plus.a_w();
    const Complex vp_r = eig.v_plus.a_r();
    const Complex out_ww = r_mm * vm_w * std::conj(vm_w) + r_pp * vp_w * std::conj(vp_w) +
                           r_mp * vm_w * std::conj(vp_w) +
                           std::conj(r_mp) * vp_w * std::conj(vm_w);
    const Complex out_rr = r_mm * vm_r * std::conj(vm_r) + r_pp * vp_r * std::conj(vp_r) +
                           r_mp * vm_r * std::conj(vp_r) +
                           std::conj(r_mp) * vp_r * std::conj(vm_r);
    const Complex out_wr = r_mm * vm_w * std::conj(vm_r) + r_pp * vp_w * std::conj(vp_r) +
                           r_mp * vm_w * std::conj(vp_r) +
                           std::conj(r_mp) * vp_w * std::conj(vm_r);
    return DensityState(out_ww.real(), out_rr.real(), out_wr);
}

MixedTrajectory::MixedTrajectory(std::vector<double> times_,
                                 std::vector<DensityState> states_, double hbar_)
    : times(std::move(times_)), states(std::move(states_)), hbar(hbar_)
{
    if (times.size() < 2 || times.size() != states.size()) {
        throw std::invalid_argument("MixedTrajectory: bad grid");
    }
    for (std::size_t i = 0; i + 1 < times.size(); ++i) {
        if (!(times[i + 1] > times[i])) {
            throw std::invalid_argument("MixedTrajectory: times must be strictly increasing");
        }
    }
}

double uhlmann_fidelity(const DensityState& r1, const DensityState& r2)
{
    const double cross = r1.ww() * r2.ww() + r1.rr() * r2.rr() +
                         2.0 * (r1.wr() * std::conj(r2.wr())).real();
    const double det1 = std::max(0.0, r1.ww() * r1.rr() - std::norm(r1.wr()));
    const double det2 = std::max(0.0, r2.ww() * r2.rr() - std::norm(r2.wr()));
    return std::clamp(cross + 2.0 * std::sqrt(det1 * det2), 0.0, 1.0);
}

double bures_angle(const DensityState& r1, const DensityState& r2)
{
    return std::acos(std::sqrt(uhlmann_fidelity(r1, r2)));
}

double bures_distance_sq(const DensityState& r1, const DensityState& r2)
{
    return 2.0 * (1.0 - std::sqrt(uhlmann_fidelity(r1, r2)));
}

double sld_qfi(const MixedTrajectory& traj, std::size_t t_index, bool* rank_deficient)
{
    if (t_index >= traj.size()) {
        throw std::invalid_argument("sld_qfi: index out of range");
    }
    const Mat2 drho = density_derivative(traj, t_index);
    const DensityState& rho = traj.states[t_index];
    const Spectrum2 eig =
        spectrum(HermitianOperator{rho.ww(), rho.rr(), rho.wr()});
    const double p[2] = {std::max(0.0, eig.e_minus), std::max(0.0, eig.e_plus)};
    const PureState* v[2] = {&eig.v_minus, &eig.v_plus};

    bool dropped = false;
    double f_q = 0.0;
    for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) {
            const double pair_sum = p[j] + p[k];
            if (pair_sum < 1e-12) {
                dropped = true;
                continue;
            }
            const Complex element = 2.0 * sandwich(*v[j], drho, *v[k]) / pair_sum;
            f_q += p[j] * std::norm(element);
        }
    }
    if (rank_deficient != nullptr) {
        *rank_deficient = dropped;
    }
    return f_q;
}

double efficiency_mixed(const MixedTrajectory& traj)
{
    const double denom = integrate_samples(traj.times, qfi_speed_samples(traj));
    if (denom < 1e-12) {
        throw std::runtime_error("efficiency_mixed: degenerate path");
    }
    return 2.0 * bures_angle(traj.states.front(), traj.states.back()) / denom;
}

EfficiencyTildeReport efficiency_tilde(const MixedTrajectory& traj_h,
                                       const MixedTrajectory& traj_geo)
{
    const double f_start = uhlmann_fidelity(traj_h.states.front(), traj_geo.states.front());
    const double f_end = uhlmann_fidelity(traj_h.states.back(), traj_geo.states.back());
    if (f_start < 1.0 - 1e-9 || f_end < 1.0 - 1e-9) {
        throw std::invalid_argument("efficiency_tilde: trajectory endpoints disagree");
    }
    const double along_h = integrate_samples(traj_h.times, qfi_speed_samples(traj_h));
    const double along_geo = integrate_samples(traj_geo.times, qfi_speed_samples(traj_geo));
    if (along_h < 1e-12 || along_geo < 1e-12) {
        throw std::runtime_error("efficiency_tilde: degenerate path");
    }
    return EfficiencyTildeReport{along_h / along_geo, along_geo / along_h};
}

UncertaintyBoundCheck generalized_uncertainty_bound(const MixedTrajectory& traj,
                                                    std::size_t t_index, double dxi)
{
    const double f_q = sld_qfi(traj, t_index);
    const double h = 2.0 * std::numbers::pi * traj.hbar;
    UncertaintyBoundCheck check;
    check.dxi = dxi;
    check.bound = f_q > 0.0 ? 0.5 * h / std::sqrt(f_q)
                            : std::numeric_limits<double>::infinity();
    check.satisfied = dxi >= check.bound;
    return check;
}

}  // namespace qsg
