#include "qsgeo/hilbert.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qsg {

Complex inner(const Ket& a, const Ket& b)
{
    return std::conj(a.a_w) * b.a_w + std::conj(a.a_r) * b.a_r;
}

double norm(const Ket& k)
{
    return std::sqrt(std::norm(k.a_w) + std::norm(k.a_r));
}

PureState::PureState(Complex a_w, Complex a_r)
{
    const double n = std::sqrt(std::norm(a_w) + std::norm(a_r));
    if (!(n > 1e-300)) {
        throw std::invalid_argument("PureState: cannot normalize a (near-)zero vector");
    }
    a_w_ = a_w / n;
    a_r_ = a_r / n;
}

Complex inner(const PureState& a, const PureState& b)
{
    return inner(a.ket(), b.ket());
}

bool equal_up_to_phase(const PureState& a, const PureState& b, double tol)
{
    return std::abs(inner(a, b)) >= 1.0 - tol;
}

Ket HermitianOperator::apply(const Ket& k) const
{
    return Ket{h_ww * k.a_w + h_wr * k.a_r,
               std::conj(h_wr) * k.a_w + h_rr * k.a_r};
}

double expectation(const HermitianOperator& op, const PureState& psi)
{
    return inner(psi.ket(), op.apply(psi)).real();
}

double energy_dispersion(const HermitianOperator& op, const PureState& psi)
{
    const Ket image = op.apply(psi);
    const double mean = inner(psi.ket(), image).real();
    const double second_moment = inner(image, image).real();  // <H psi|H psi> = <H^2>
    double radicand = second_moment - mean * mean;
    if (radicand < 0.0) {
        if (radicand < -1e-12) {
            throw std::runtime_error("energy_dispersion: negative radicand " +
                                     std::to_string(radicand) + " beyond round-off tolerance");
        }
        radicand = 0.0;
    }
    return std::sqrt(radicand);
}

namespace {

// Deterministic phase: rotate so the largest-magnitude component is real
// and non-negative.
PureState canonical_phase(Complex a_w, Complex a_r)
{
    const Complex lead = std::abs(a_w) >= std::abs(a_r) ? a_w : a_r;
    const double mag = std::abs(lead);
    if (mag > 0.0) {
        const Complex phase = std::conj(lead) / mag;
        a_w *= phase;
        a_r *= phase;
    }
    return PureState(a_w, a_r);
}

}  // namespace

Spectrum2 spectrum(const HermitianOperator& op)
{
    const double mean = 0.5 * (op.h_ww + op.h_rr);
    const double delta = 0.5 * (op.h_ww - op.h_rr);
    const double radius = std::hypot(delta, std::abs(op.h_wr));
    const double e_minus = mean - radius;
    const double e_plus = mean + radius;

    const double scale = std::max(std::abs(e_minus), std::abs(e_plus));
    if (2.0 * radius < 1e-14 * scale || radius == 0.0) {
        // Degenerate within resolution: canonical basis is an eigenbasis.
        return Spectrum2{e_minus, e_plus, PureState::basis_w(), PureState::basis_r()};
    }

    // Two algebraic forms of the e_plus eigenvector; take the better
    // conditioned one.
    const Ket cand_a{Complex(radius + delta, 0.0), std::conj(op.h_wr)};
    const Ket cand_b{op.h_wr, Complex(radius - delta, 0.0)};
    const Ket& best = norm(cand_a) >= norm(cand_b) ? cand_a : cand_b;

    PureState v_plus = canonical_phase(best.a_w, best.a_r);
    PureState v_minus = canonical_phase(-std::conj(v_plus.a_r()), std::conj(v_plus.a_w()));
    return Spectrum2{e_minus, e_plus, v_minus, v_plus};
}

PureState propagate(const HermitianOperator& op, const PureState& psi0, double t,
                    double hbar)
{
    const Spectrum2 eig = spectrum(op);
    const Complex c_minus = inner(eig.v_minus, psi0);
    const Complex c_plus = inner(eig.v_plus, psi0);
    const Complex phase_minus = std::polar(1.0, -eig.e_minus * t / hbar);
    const Complex phase_plus = std::polar(1.0, -eig.e_plus * t / hbar);
    const Complex a_w = phase_minus * c_minus * eig.v_minus.a_w() +
                        phase_plus * c_plus * eig.v_plus.a_w();
    const Complex a_r = phase_minus * c_minus * eig.v_minus.a_r() +
                        phase_plus * c_plus * eig.v_plus.a_r();
    return PureState(a_w, a_r);
}

}  // namespace qsg
