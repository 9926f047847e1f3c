#include "qsgeo/search.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qsg {

namespace {

constexpr double kXGuard = 1e-6;  // A, B formulas divide by x E' sqrt(1-x^2)

double effective_gamma(SchemeKind kind, const SearchConfig& cfg)
{
    return kind == SchemeKind::FG ? 1.0 : cfg.gamma;
}

// sqrt(4 x^2 E E' + (E' - E)^2), the eigenvalue gap of the modified
// Hamiltonian.
double eigen_gap(const SearchConfig& cfg, double gamma_eff)
{
    const double e_prime = gamma_eff * cfg.E;
    const double diff = e_prime - cfg.E;
    return std::sqrt(4.0 * cfg.x * cfg.x * cfg.E * e_prime + diff * diff);
}

// 1 - sqrt(1-x^2) without cancellation at small x.
double one_minus_cosine(double x)
{
    return x * x / (1.0 + std::sqrt(1.0 - x * x));
}

void check_ab_domain(const SearchConfig& cfg)
{
    if (cfg.x < kXGuard || cfg.x > 1.0 - kXGuard) {
        throw std::domain_error("ab_coefficients: x = " + std::to_string(cfg.x) +
                                " outside guard band (1e-6, 1-1e-6)");
    }
}

}  // namespace

SearchConfig::SearchConfig(double x_, double E_, double gamma_, double hbar_)
    : x(x_), E(E_), gamma(gamma_), hbar(hbar_)
{
    if (!(x > 0.0) || !(x < 1.0)) {
        throw std::invalid_argument("SearchConfig: x must lie strictly in (0,1), got " +
                                    std::to_string(x_));
    }
    if (!(E > 0.0)) {
        throw std::invalid_argument("SearchConfig: E must be positive");
    }
    if (!(gamma >= 1.0)) {
        throw std::invalid_argument("SearchConfig: gamma must be >= 1");
    }
    if (!(hbar > 0.0)) {
        throw std::invalid_argument("SearchConfig: hbar must be positive");
    }
}

PureState source_state(const SearchConfig& cfg)
{
    return PureState(Complex(cfg.x, 0.0), Complex(std::sqrt(1.0 - cfg.x * cfg.x), 0.0));
}

PureState target_state()
{
    return PureState::basis_w();
}

HermitianOperator hamiltonian(SchemeKind kind, const SearchConfig& cfg)
{
    const double e_prime = effective_gamma(kind, cfg) * cfg.E;
    const double x = cfg.x;
    const double w = std::sqrt(1.0 - x * x);
    return HermitianOperator{cfg.E + e_prime * x * x, e_prime * (1.0 - x * x),
                             Complex(e_prime * x * w, 0.0)};
}

double transition_probability(SchemeKind kind, const SearchConfig& cfg, double t)
{
    const double gamma_eff = effective_gamma(kind, cfg);
    const double e_prime = gamma_eff * cfg.E;
    const double gap = eigen_gap(cfg, gamma_eff);
    const double x = cfg.x;
    const double phase = 0.5 * gap * t / cfg.hbar;
    const double sum = e_prime + cfg.E;
    const double amplitude = x * x * sum * sum / (gap * gap);
    const double s = std::sin(phase);
    const double c = std::cos(phase);
    return amplitude * s * s + x * x * c * c;
}

double optimal_time(SchemeKind kind, const SearchConfig& cfg)
{
    const double gap = eigen_gap(cfg, effective_gamma(kind, cfg));
    return std::numbers::pi * cfg.hbar / gap;
}

double max_probability(SchemeKind kind, const SearchConfig& cfg)
{
    if (kind == SchemeKind::FG) {
        return 1.0;
    }
    const double gap = eigen_gap(cfg, cfg.gamma);
    const double sum = cfg.e_prime() + cfg.E;
    return cfg.x * cfg.x * sum * sum / (gap * gap);
}

PureState fg_geometric_state(const SearchConfig& cfg, double t)
{
    const double x = cfg.x;
    const double omc = one_minus_cosine(x);
    const double theta = cfg.E * x * t / cfg.hbar;
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    const Complex prefactor =
        std::polar(1.0, -cfg.E * t / cfg.hbar) / std::sqrt(2.0 * omc);
    const Complex a_w = prefactor * Complex(omc * ct, -x * st);
    const Complex a_r = prefactor * Complex(x * ct, omc * st);
    return PureState(a_w, a_r);
}

ABCoefficients ab_coefficients(const SearchConfig& cfg)
{
    check_ab_domain(cfg);
    const double e_prime = cfg.e_prime();
    const double x = cfg.x;
    const double w = std::sqrt(1.0 - x * x);
    const double gap = eigen_gap(cfg, cfg.gamma);
    const double denom = 2.0 * x * e_prime * w;
    const double base = cfg.E - e_prime + 2.0 * x * x * e_prime;
    return ABCoefficients{(base - gap) / denom, (base + gap) / denom, 0.5 * gap};
}

PureState mfg_initial_state(const SearchConfig& cfg)
{
    const ABCoefficients ab = ab_coefficients(cfg);
    const double sum = ab.A + ab.B;
    const double one_minus_prod = 1.0 - ab.A * ab.B;
    const double root = std::hypot(one_minus_prod, sum);
    // The printed components (root - one_minus_prod, sum) share the factor
    // sum; dividing it out keeps the state well defined where sum crosses
    // zero (x^2 = (gamma-1)/(2 gamma)) and removes the cancellation in
    // root - one_minus_prod.
    const double ratio = sum / (root + one_minus_prod);
    return PureState(Complex(ratio, 0.0), Complex(1.0, 0.0));
}

PureState mfg_geometric_state(const SearchConfig& cfg, double t)
{
    const ABCoefficients ab = ab_coefficients(cfg);
    const double diff = ab.A - ab.B;
    if (std::abs(diff) < 1e-12) {
        throw std::runtime_error("mfg_geometric_state: degenerate A - B");
    }
    const PureState psi0 = mfg_initial_state(cfg);
    const double phase = ab.lam * t / cfg.hbar;
    const double ct = std::cos(phase);
    const double st = std::sin(phase);
    const Complex m_ww(ct, (ab.A + ab.B) / diff * st);
    const Complex m_wr(0.0, -2.0 * ab.A * ab.B / diff * st);
    const Complex m_rw(0.0, 2.0 / diff * st);
    const Complex m_rr(ct, -(ab.A + ab.B) / diff * st);
    const Complex global =
        std::polar(1.0, -(cfg.e_prime() + cfg.E) * t / (2.0 * cfg.hbar));
    const Complex a_w = global * (m_ww * psi0.a_w() + m_wr * psi0.a_r());
    const Complex a_r = global * (m_rw * psi0.a_w() + m_rr * psi0.a_r());
    return PureState(a_w, a_r);
}

}  // namespace qsg
