#pragma once

// The two analog search Hamiltonians and their closed-form quantities:
// transition probabilities, optimal times, maximum success probabilities,
// and the exact evolved states the geometric analysis runs on. The original
// scheme is the gamma = 1 slice of the modified one throughout.

#include "qsgeo/hilbert.hpp"

namespace qsg {

enum class SchemeKind { FG, MFG };

/// One search scenario: quantum overlap x = <w|s>, oracle energy E, driving
/// ratio gamma = E'/E and hbar. Construction validates 0 < x < 1, E > 0,
/// gamma >= 1, hbar > 0.
struct SearchConfig {
    double x;
    double E = 1.0;
    double gamma = 1.0;
    double hbar = 1.0;

    SearchConfig(double x_, double E_ = 1.0, double gamma_ = 1.0, double hbar_ = 1.0);

    double e_prime() const { return gamma * E; }
};

// A = A(x,E',E), B = B(x,E',E) and lam = half the eigenvalue gap of the
// modified Hamiltonian; A <= B and A*B = -1 identically.
struct ABCoefficients {
    double A = 0.0;
    double B = 0.0;
    double lam = 0.0;
};

// |s> = x|w> + sqrt(1-x^2)|r>
PureState source_state(const SearchConfig& cfg);

PureState target_state();  // |w>

HermitianOperator hamiltonian(SchemeKind kind, const SearchConfig& cfg);

// Closed-form probability of finding |w> at time t when |s> evolves.
double transition_probability(SchemeKind kind, const SearchConfig& cfg, double t);

// Smallest t at which the transition probability peaks.
double optimal_time(SchemeKind kind, const SearchConfig& cfg);

double max_probability(SchemeKind kind, const SearchConfig& cfg);

// Exact evolved state of the original-scheme geometric analysis. Its t = 0
// value is the geometric initial state, which differs from |s> at finite x.
PureState fg_geometric_state(const SearchConfig& cfg, double t);

ABCoefficients ab_coefficients(const SearchConfig& cfg);

PureState mfg_initial_state(const SearchConfig& cfg);

// Exact evolved state of the modified-scheme geometric analysis (the 2x2
// propagation matrix built from A, B, lam applied to mfg_initial_state).
PureState mfg_geometric_state(const SearchConfig& cfg, double t);

}  // namespace qsg
