#pragma once

// Exact complex linear algebra for two-level systems expressed on the
// orthonormal {|w>, |r>} basis: normalized states, Hermitian operators,
// spectral decomposition, closed-form unitary propagation, expectation
// values and the energy dispersion.

#include <complex>

namespace qsg {

using Complex = std::complex<double>;

inline constexpr double kNormTol = 1e-12;

// Unnormalized amplitude pair; workspace vector for operator images and
// tangents of state families.
struct Ket {
    Complex a_w{0.0, 0.0};
    Complex a_r{0.0, 0.0};
};

Complex inner(const Ket& a, const Ket& b);  // <a|b>
double norm(const Ket& k);

/// Normalized amplitude pair on {|w>, |r>}. The constructor rescales to
/// unit norm and rejects near-zero vectors, so every instance satisfies
/// |a_w|^2 + |a_r|^2 = 1 within 1e-12.
class PureState {
public:
    PureState(Complex a_w, Complex a_r);

    static PureState basis_w() { return PureState(Complex(1.0, 0.0), Complex(0.0, 0.0)); }
    static PureState basis_r() { return PureState(Complex(0.0, 0.0), Complex(1.0, 0.0)); }

    Complex a_w() const { return a_w_; }
    Complex a_r() const { return a_r_; }
    Ket ket() const { return Ket{a_w_, a_r_}; }

private:
    Complex a_w_;
    Complex a_r_;
};

Complex inner(const PureState& a, const PureState& b);

// Global-phase equality, the only state equality the library exposes.
bool equal_up_to_phase(const PureState& a, const PureState& b, double tol = kNormTol);

/// 2x2 Hermitian operator with energy units; diagonal entries real by
/// construction, off-diagonal pair stored once.
struct HermitianOperator {
    double h_ww = 0.0;
    double h_rr = 0.0;
    Complex h_wr{0.0, 0.0};

    Ket apply(const Ket& k) const;
    Ket apply(const PureState& psi) const { return apply(psi.ket()); }
    double trace() const { return h_ww + h_rr; }
};

/// Eigen decomposition of a HermitianOperator, e_minus <= e_plus with
/// orthonormal eigenvectors.
struct Spectrum2 {
    double e_minus = 0.0;
    double e_plus = 0.0;
    PureState v_minus;
    PureState v_plus;

    double gap() const { return e_plus - e_minus; }
};

double expectation(const HermitianOperator& op, const PureState& psi);

// sqrt(<H^2> - <H>^2); clamps round-off radicands in [-1e-12, 0) to zero
// and reports larger negative radicands as numerical degeneracy.
double energy_dispersion(const HermitianOperator& op, const PureState& psi);

Spectrum2 spectrum(const HermitianOperator& op);

// exp(-i H t / hbar) |psi0> via the spectral decomposition.
PureState propagate(const HermitianOperator& op, const PureState& psi0, double t,
                    double hbar = 1.0);

}  // namespace qsg
