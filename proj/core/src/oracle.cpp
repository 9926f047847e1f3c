#include "qsgeo/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qsg {

namespace {

Ket schrodinger_rhs(const HermitianOperator& h, const Ket& psi, double hbar)
{
    const Ket image = h.apply(psi);
    const Complex factor(0.0, -1.0 / hbar);
    return Ket{factor * image.a_w, factor * image.a_r};
}

Ket axpy(const Ket& base, double scale, const Ket& dir)
{
    return Ket{base.a_w + scale * dir.a_w, base.a_r + scale * dir.a_r};
}

}  // namespace

Trajectory integrate_schrodinger(const HermitianOperator& h, const PureState& psi0,
                                 double t_end, const IntegratorSpec& spec, double hbar)
{
    if (spec.steps < 100) {
        throw std::invalid_argument("integrate_schrodinger: step count below 100");
    }
    if (!(t_end > 0.0)) {
        throw std::invalid_argument("integrate_schrodinger: t_end must be positive");
    }
    const int n = spec.steps;
    const double dt = t_end / double(n);

    std::vector<double> times(n + 1);
    std::vector<PureState> states;
    states.reserve(n + 1);
    states.push_back(psi0);
    times[0] = 0.0;

    Ket psi = psi0.ket();
    for (int i = 0; i < n; ++i) {
        const Ket k1 = schrodinger_rhs(h, psi, hbar);
        const Ket k2 = schrodinger_rhs(h, axpy(psi, 0.5 * dt, k1), hbar);
        const Ket k3 = schrodinger_rhs(h, axpy(psi, 0.5 * dt, k2), hbar);
        const Ket k4 = schrodinger_rhs(h, axpy(psi, dt, k3), hbar);
        psi.a_w += dt / 6.0 * (k1.a_w + 2.0 * (k2.a_w + k3.a_w) + k4.a_w);
        psi.a_r += dt / 6.0 * (k1.a_r + 2.0 * (k2.a_r + k3.a_r) + k4.a_r);
        const double nm = norm(psi);
        psi.a_w /= nm;
        psi.a_r /= nm;
        times[std::size_t(i) + 1] = double(i + 1) * dt;
        states.emplace_back(psi.a_w, psi.a_r);
    }
    return Trajectory(std::move(times), std::move(states), h, hbar);
}

std::pair<double, double> golden_minimize(const std::function<double(double)>& f,
                                          double lo, double hi, double tol)
{
    constexpr double kInvPhi = 0.6180339887498949;
    double a = lo;
    double b = hi;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = f(x2);
        }
    }
    const double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

std::vector<MinD2Point> min_d2_profile(const Trajectory& traj, const GeodesicArc& arc,
                                       int grid)
{
    if (grid < 64) {
        throw std::invalid_argument("min_d2_profile: coarse grid must be >= 64");
    }
    std::vector<MinD2Point> profile;
    profile.reserve(traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const PureState& sample = traj.states[i];
        const auto d2 = [&](double lam) {
            return projective_distance_sq(sample, geodesic_point_lambda(arc, lam));
        };
        // coarse scan brackets the global minimum; d2 can have two local
        // minima in lambda, so golden section alone is not enough
        int best = 0;
        double best_val = d2(0.0);
        for (int k = 1; k <= grid; ++k) {
            const double val = d2(double(k) / double(grid));
            if (val < best_val) {
                best_val = val;
                best = k;
            }
        }
        const double lo = std::max(0.0, double(best - 1) / double(grid));
        const double hi = std::min(1.0, double(best + 1) / double(grid));
        const auto [lam, val] = golden_minimize(d2, lo, hi, 1e-12);
        profile.push_back(MinD2Point{traj.times[i], lam, val});
    }
    return profile;
}

}  // namespace qsg
