#include "qsgeo/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qsg {

namespace {

double clamp01(double v)
{
    return std::clamp(v, 0.0, 1.0);
}

bool grid_uniform(const std::vector<double>& times)
{
    const double h = (times.back() - times.front()) / double(times.size() - 1);
    for (std::size_t i = 0; i + 1 < times.size(); ++i) {
        if (std::abs(times[i + 1] - times[i] - h) > 1e-9 * std::max(h, 1e-30)) {
            return false;
        }
    }
    return true;
}

}  // namespace

double integrate_samples(const std::vector<double>& times,
                         const std::vector<double>& f)
{
    const std::size_t n = times.size();
    if (n < 2 || f.size() != n) {
        throw std::invalid_argument("integrate_samples: bad grid");
    }
    if (n % 2 == 1 && grid_uniform(times)) {
        // composite Simpson
        const double h = (times.back() - times.front()) / double(n - 1);
        double acc = f.front() + f.back();
        for (std::size_t i = 1; i + 1 < n; ++i) {
            acc += (i % 2 == 1 ? 4.0 : 2.0) * f[i];
        }
        return acc * h / 3.0;
    }
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        acc += 0.5 * (f[i] + f[i + 1]) * (times[i + 1] - times[i]);
    }
    return acc;
}

Trajectory::Trajectory(std::vector<double> times_, std::vector<PureState> states_,
                       std::optional<HermitianOperator> generator_, double hbar_)
    : times(std::move(times_)), states(std::move(states_)),
      generator(std::move(generator_)), hbar(hbar_)
{
    if (times.size() < 2) {
        throw std::invalid_argument("Trajectory: needs at least 2 grid points");
    }
    if (times.size() != states.size()) {
        throw std::invalid_argument("Trajectory: times/states size mismatch");
    }
    for (std::size_t i = 0; i + 1 < times.size(); ++i) {
        if (!(times[i + 1] > times[i])) {
            throw std::invalid_argument("Trajectory: times must be strictly increasing");
        }
    }
    if (!(hbar > 0.0)) {
        throw std::invalid_argument("Trajectory: hbar must be positive");
    }
}

GeodesicArc::GeodesicArc(const PureState& a, const PureState& b) : a_(a), b_(b)
{
    const Complex ov = inner(b, a);  // <psi_B|psi_A>
    overlap_abs_ = std::min(std::abs(ov), 1.0);
    phi_ = overlap_abs_ < 1e-12 ? 0.0 : std::arg(ov);
}

double wootters_distance(const PureState& a, const PureState& b)
{
    return 2.0 * std::acos(clamp01(std::abs(inner(a, b))));
}

double projective_distance_sq(const PureState& a, const PureState& b)
{
    const double ov = clamp01(std::abs(inner(a, b)));
    return 4.0 * (1.0 - ov * ov);
}

PureState geodesic_point_lambda(const GeodesicArc& arc, double lam)
{
    const Complex phase = std::polar(1.0, arc.phi());
    const Complex a_w = (1.0 - lam) * arc.endpoint_a().a_w() +
                        phase * lam * arc.endpoint_b().a_w();
    const Complex a_r = (1.0 - lam) * arc.endpoint_a().a_r() +
                        phase * lam * arc.endpoint_b().a_r();
    const double denom =
        std::sqrt(1.0 - 2.0 * lam * (1.0 - lam) * (1.0 - arc.overlap_abs()));
    return PureState(a_w / denom, a_r / denom);
}

PureState geodesic_point_theta(const GeodesicArc& arc, double theta)
{
    const Complex phase = std::polar(1.0, arc.phi());
    const double c = std::cos(0.5 * theta);
    const double s = std::sin(0.5 * theta);
    const Complex a_w = c * arc.endpoint_a().a_w() + phase * s * arc.endpoint_b().a_w();
    const Complex a_r = c * arc.endpoint_a().a_r() + phase * s * arc.endpoint_b().a_r();
    const double denom = std::sqrt(1.0 + std::sin(theta) * arc.overlap_abs());
    return PureState(a_w / denom, a_r / denom);
}

double lambda_from_theta(double theta)
{
    // tan(th/2) / [1 + tan(th/2)], written to stay finite at theta = pi.
    const double s = std::sin(0.5 * theta);
    const double c = std::cos(0.5 * theta);
    return s / (s + c);
}

PureState harmonic_geodesic(const PureState& psi0, const Ket& dpsi0, double omega,
                            double s)
{
    if (!(omega > 0.0)) {
        throw std::invalid_argument("harmonic_geodesic: omega must be positive");
    }
    const Complex mixed = inner(psi0.ket(), dpsi0);
    if (std::abs(mixed) > 1e-10) {
        throw std::invalid_argument("harmonic_geodesic: <psi0|dpsi0> = " +
                                    std::to_string(std::abs(mixed)) + ", expected 0");
    }
    const double speed_sq = inner(dpsi0, dpsi0).real();
    if (std::abs(speed_sq - omega * omega) > 1e-10 * std::max(1.0, omega * omega)) {
        throw std::invalid_argument("harmonic_geodesic: <dpsi0|dpsi0> = " +
                                    std::to_string(speed_sq) + ", expected omega^2 = " +
                                    std::to_string(omega * omega));
    }
    const double c = std::cos(omega * s);
    const double k = std::sin(omega * s) / omega;
    return PureState(c * psi0.a_w() + k * dpsi0.a_w, c * psi0.a_r() + k * dpsi0.a_r);
}

MetricTensor fs_metric_tensor(const StateFamily& family, const std::vector<double>& xi,
                              double step)
{
    if (!(step > 0.0)) {
        throw std::invalid_argument("fs_metric_tensor: step must be positive");
    }
    const std::size_t m = xi.size();
    const PureState center = family(xi);

    std::vector<Ket> derivs(m);
    std::vector<double> probe = xi;
    for (std::size_t a = 0; a < m; ++a) {
        probe[a] = xi[a] + step;
        const PureState plus = family(probe);
        probe[a] = xi[a] - step;
        const PureState minus = family(probe);
        probe[a] = xi[a];
        derivs[a] = Ket{(plus.a_w() - minus.a_w()) / (2.0 * step),
                        (plus.a_r() - minus.a_r()) / (2.0 * step)};
    }

    MetricTensor g;
    g.dim = m;
    g.coeff.assign(m * m, 0.0);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            const Complex direct = inner(derivs[a], derivs[b]);
            const Complex gauge = inner(derivs[a], center.ket()) * inner(center.ket(), derivs[b]);
            g.coeff[a * m + b] = 4.0 * (direct - gauge).real();
        }
    }
    return g;
}

LengthBreakdown length_breakdown(const Trajectory& traj)
{
    LengthBreakdown out;
    for (std::size_t i = 0; i + 1 < traj.size(); ++i) {
        const double ov = clamp01(std::abs(inner(traj.states[i], traj.states[i + 1])));
        if (ov < 0.99) {
            out.coarse_grid = true;
        }
        out.chord += 2.0 * std::acos(ov);
    }
    if (traj.generator) {
        std::vector<double> speed(traj.size());
        for (std::size_t i = 0; i < traj.size(); ++i) {
            speed[i] = 2.0 * energy_dispersion(*traj.generator, traj.states[i]) / traj.hbar;
        }
        out.analytic = integrate_samples(traj.times, speed);
        out.has_analytic = true;
    }
    return out;
}

double trajectory_length(const Trajectory& traj)
{
    const LengthBreakdown b = length_breakdown(traj);
    return b.has_analytic ? b.analytic : b.chord;
}

}  // namespace qsg
