#include "qsgeo/search.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace qsg;
using namespace qsgtest;

namespace {

constexpr double kPi = std::numbers::pi;

// transition probability through the independent spectral route
double probability_oracle(SchemeKind kind, const SearchConfig& cfg, double t)
{
    const PureState evolved = propagate(hamiltonian(kind, cfg), source_state(cfg), t, cfg.hbar);
    return std::norm(inner(target_state(), evolved));
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("config validation")
{
    CHECK_THROWS_AS(SearchConfig(0.0), std::invalid_argument);
    CHECK_THROWS_AS(SearchConfig(1.0), std::invalid_argument);
    CHECK_THROWS_AS(SearchConfig(-0.2), std::invalid_argument);
    CHECK_THROWS_AS(SearchConfig(0.5, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(SearchConfig(0.5, 1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(SearchConfig(0.5, 1.0, 1.0, 0.0), std::invalid_argument);
    CHECK_NOTHROW(SearchConfig(0.5, 2.0, 3.0, 0.7));
}

TEST_CASE("source state amplitudes")
{
    const PureState s = source_state(SearchConfig(0.6));
    CHECK(std::abs(s.a_w() - Complex(0.6, 0.0)) <= 1e-15);
    CHECK(std::abs(s.a_r() - Complex(0.8, 0.0)) <= 1e-15);

    for (double x : {0.01, 0.1, 0.25, 0.5, 0.9, 0.999}) {
        CHECK(std::abs(inner(target_state(), source_state(SearchConfig(x))).real() - x) <=
              1e-14);
    }

    const PureState nearly_target = source_state(SearchConfig(1.0 - 1e-9));
    CHECK(std::abs(nearly_target.a_r()) < 5e-5);
}

TEST_CASE("hamiltonian entries, trace and gap")
{
    const SearchConfig cfg(0.5, 1.0);
    const HermitianOperator fg = hamiltonian(SchemeKind::FG, cfg);
    CHECK(std::abs(fg.trace() - 2.0) <= 1e-14);  // 2E on normalized states

    const SearchConfig unit_gamma(0.37, 1.3, 1.0, 1.0);
    const HermitianOperator a = hamiltonian(SchemeKind::FG, unit_gamma);
    const HermitianOperator b = hamiltonian(SchemeKind::MFG, unit_gamma);
    CHECK(a.h_ww == b.h_ww);
    CHECK(a.h_rr == b.h_rr);
    CHECK(a.h_wr == b.h_wr);

    const SearchConfig mfg_cfg(0.5, 1.0, 2.0);
    const double expected_gap = std::sqrt(4.0 * 0.25 * 2.0 + 1.0);  // sqrt(4x^2 E'E + (E'-E)^2)
    CHECK(std::abs(spectrum(hamiltonian(SchemeKind::MFG, mfg_cfg)).gap() - expected_gap) <=
          1e-13);
}

TEST_CASE("transition probability closed forms")
{
    const SearchConfig cfg(0.3, 1.0, 2.0);
    CHECK(std::abs(transition_probability(SchemeKind::MFG, cfg, 0.0) - 0.09) <= 1e-14);
    CHECK(std::abs(transition_probability(SchemeKind::FG, cfg, 0.0) - 0.09) <= 1e-14);

    const SearchConfig fg_cfg(0.5, 1.0);
    const double t_star = optimal_time(SchemeKind::FG, fg_cfg);
    CHECK(std::abs(transition_probability(SchemeKind::FG, fg_cfg, t_star) - 1.0) <= 1e-12);

    const SearchConfig unit_gamma(0.42, 1.0, 1.0);
    for (int k = 0; k <= 20; ++k) {
        const double t = 0.35 * double(k);
        CHECK(std::abs(transition_probability(SchemeKind::MFG, unit_gamma, t) -
                       transition_probability(SchemeKind::FG, unit_gamma, t)) <= 1e-14);
    }
}

TEST_CASE("optimal time values and sqrt(N) scaling")
{
    CHECK(std::abs(optimal_time(SchemeKind::FG, SearchConfig(0.5)) - kPi) <= 1e-14);

    const SearchConfig unit_gamma(0.2, 1.0, 1.0);
    CHECK(std::abs(optimal_time(SchemeKind::MFG, unit_gamma) -
                   optimal_time(SchemeKind::FG, unit_gamma)) <= 1e-14);

    const double t4 = optimal_time(SchemeKind::FG, SearchConfig(1.0 / 2.0));     // N = 4
    const double t16 = optimal_time(SchemeKind::FG, SearchConfig(1.0 / 4.0));    // N = 16
    const double t64 = optimal_time(SchemeKind::FG, SearchConfig(1.0 / 8.0));    // N = 64
    CHECK(std::abs(t16 / t4 - 2.0) <= 1e-12);
    CHECK(std::abs(t64 / t16 - 2.0) <= 1e-12);
}

TEST_CASE("maximum probability")
{
    CHECK(max_probability(SchemeKind::FG, SearchConfig(0.123)) == 1.0);
    CHECK(std::abs(max_probability(SchemeKind::MFG, SearchConfig(0.3, 1.0, 1.0)) - 1.0) <=
          1e-14);
    CHECK(std::abs(max_probability(SchemeKind::MFG, SearchConfig(0.5, 1.0, 2.0)) - 0.75) <=
          1e-14);

    // peak value is attained at the optimal time
    std::mt19937 gen(201);
    std::uniform_real_distribution<double> ux(0.05, 0.95);
    std::uniform_real_distribution<double> ug(1.0, 5.0);
    for (int i = 0; i < 50; ++i) {
        const SearchConfig cfg(ux(gen), 1.0, ug(gen));
        const double peak = max_probability(SchemeKind::MFG, cfg);
        CHECK(peak <= 1.0 + 1e-12);
        CHECK(std::abs(transition_probability(SchemeKind::MFG, cfg,
                                              optimal_time(SchemeKind::MFG, cfg)) -
                       peak) <= 1e-12);
        if (cfg.gamma > 1.0) {
            CHECK(peak < 1.0);
        }
    }
}

TEST_CASE("original-scheme geometric state")
{
    const SearchConfig cfg(0.25);
    const double t_star = optimal_time(SchemeKind::FG, cfg);
    for (int k = 0; k <= 100; ++k) {
        const PureState psi = fg_geometric_state(cfg, t_star * double(k) / 100.0);
        CHECK(std::abs(std::norm(psi.a_w()) + std::norm(psi.a_r()) - 1.0) <= 1e-12);
    }

    // closed form solves the Schrodinger equation: spectral-propagator check
    const PureState start = fg_geometric_state(cfg, 0.0);
    const HermitianOperator h = hamiltonian(SchemeKind::FG, cfg);
    for (double t : {0.3, 1.1, 2.7, t_star}) {
        const PureState closed = fg_geometric_state(cfg, t);
        const PureState numeric = propagate(h, start, t, cfg.hbar);
        CHECK(std::abs(closed.a_w() - numeric.a_w()) <= 1e-10);
        CHECK(std::abs(closed.a_r() - numeric.a_r()) <= 1e-10);
    }

    // endpoints orthogonalize
    CHECK(std::abs(inner(start, fg_geometric_state(cfg, t_star))) <= 1e-10);

    // the geometric initial state is not the source state at finite x
    CHECK(std::abs(inner(start, source_state(cfg))) < 1.0 - 1e-3);
}

TEST_CASE("A, B coefficients")
{
    const SearchConfig unit_gamma(0.5, 1.0, 1.0);
    const ABCoefficients ab = ab_coefficients(unit_gamma);
    CHECK(std::abs(ab.lam - 0.5) <= 1e-14);  // E x at gamma = 1
    CHECK(ab.A <= ab.B);

    std::mt19937 gen(202);
    std::uniform_real_distribution<double> ux(0.05, 0.95);
    std::uniform_real_distribution<double> ug(1.0, 6.0);
    for (int i = 0; i < 100; ++i) {
        const SearchConfig cfg(ux(gen), 1.0, ug(gen));
        const ABCoefficients c = ab_coefficients(cfg);
        const double x = cfg.x;
        const double ep = cfg.e_prime();
        const double expected_diff =
            std::sqrt(4.0 * x * x * cfg.E * ep + (ep - cfg.E) * (ep - cfg.E)) /
            (x * ep * std::sqrt(1.0 - x * x));
        CHECK(std::abs((c.B - c.A) - expected_diff) <= 1e-10 * expected_diff);
        CHECK(std::abs(c.A * c.B + 1.0) <= 1e-12);  // AB = -1 identically
        CHECK(std::abs(c.lam - 0.5 * spectrum(hamiltonian(SchemeKind::MFG, cfg)).gap()) <=
              1e-12);
    }

    CHECK_THROWS_AS(ab_coefficients(SearchConfig(1e-7)), std::domain_error);
    CHECK_THROWS_AS(ab_coefficients(SearchConfig(1.0 - 1e-7)), std::domain_error);
    CHECK_THROWS_AS(mfg_initial_state(SearchConfig(1e-7)), std::domain_error);
}

TEST_CASE("modified-scheme initial state")
{
    std::mt19937 gen(203);
    std::uniform_real_distribution<double> ux(0.01, 0.99);
    std::uniform_real_distribution<double> ug(1.0, 4.0);
    for (int i = 0; i < 100; ++i) {
        const PureState psi = mfg_initial_state(SearchConfig(ux(gen), 1.0, ug(gen)));
        CHECK(std::abs(std::norm(psi.a_w()) + std::norm(psi.a_r()) - 1.0) <= 1e-12);
    }

    const SearchConfig cfg(0.25, 1.0, 1.0);
    CHECK(std::abs(std::abs(inner(mfg_initial_state(cfg), fg_geometric_state(cfg, 0.0))) -
                   1.0) <= 1e-10);

    // well defined across the A+B = 0 point x^2 = (gamma-1)/(2 gamma)
    const PureState at_node = mfg_initial_state(SearchConfig(0.5, 1.0, 2.0));
    CHECK(std::abs(std::abs(inner(at_node, PureState::basis_r())) - 1.0) <= 1e-10);
}

TEST_CASE("modified-scheme evolved state")
{
    const SearchConfig cfg(0.3, 1.0, 2.0);
    const PureState start = mfg_initial_state(cfg);

    const PureState frozen = mfg_geometric_state(cfg, 0.0);
    CHECK(std::abs(frozen.a_w() - start.a_w()) <= 1e-14);
    CHECK(std::abs(frozen.a_r() - start.a_r()) <= 1e-14);

    const HermitianOperator h = hamiltonian(SchemeKind::MFG, cfg);
    const double t_star = optimal_time(SchemeKind::MFG, cfg);
    for (int k = 0; k <= 20; ++k) {
        const double t = t_star * double(k) / 20.0;
        const PureState closed = mfg_geometric_state(cfg, t);
        const PureState numeric = propagate(h, start, t, cfg.hbar);
        CHECK(std::abs(closed.a_w() - numeric.a_w()) <= 1e-9);
        CHECK(std::abs(closed.a_r() - numeric.a_r()) <= 1e-9);
    }

    // projective period pi hbar / lam (two-level Rabi period oracle)
    const double period = kPi * cfg.hbar / ab_coefficients(cfg).lam;
    for (double t : {0.4, 1.0, 2.2}) {
        CHECK(equal_up_to_phase(mfg_geometric_state(cfg, t),
                                mfg_geometric_state(cfg, t + period), 1e-10));
    }
}

TEST_CASE("gamma = 1 reduction across the whole surface")
{
    std::mt19937 gen(204);
    std::uniform_real_distribution<double> ux(0.05, 0.95);
    for (int i = 0; i < 50; ++i) {
        const SearchConfig cfg(ux(gen), 1.7, 1.0, 0.9);
        CHECK(std::abs(optimal_time(SchemeKind::MFG, cfg) -
                       optimal_time(SchemeKind::FG, cfg)) <= 1e-12);
        CHECK(std::abs(max_probability(SchemeKind::MFG, cfg) - 1.0) <= 1e-12);
        const double t = 0.3 * double(i % 7);
        CHECK(std::abs(transition_probability(SchemeKind::MFG, cfg, t) -
                       transition_probability(SchemeKind::FG, cfg, t)) <= 1e-12);
        CHECK(equal_up_to_phase(mfg_geometric_state(cfg, t), fg_geometric_state(cfg, t),
                                1e-10));
    }
}

TEST_CASE("closed forms against the spectral oracle on random scenarios")
{
    std::mt19937 gen(205);
    std::uniform_real_distribution<double> ux(0.05, 0.95);
    std::uniform_real_distribution<double> ug(1.0, 5.0);
    std::uniform_real_distribution<double> ut(0.0, 8.0);
    for (int i = 0; i < 50; ++i) {
        const SearchConfig cfg(ux(gen), 1.0, ug(gen));
        const double t = ut(gen);
        CHECK(std::abs(transition_probability(SchemeKind::MFG, cfg, t) -
                       probability_oracle(SchemeKind::MFG, cfg, t)) <= 1e-10);
    }
}

TEST_CASE("monotonicity and ordering in gamma")
{
    for (double x : {0.1, 0.3, 0.6}) {
        double previous_time = optimal_time(SchemeKind::MFG, SearchConfig(x, 1.0, 1.0));
        double previous_peak = max_probability(SchemeKind::MFG, SearchConfig(x, 1.0, 1.0));
        const double fg_time = optimal_time(SchemeKind::FG, SearchConfig(x, 1.0, 1.0));
        for (double g : {1.5, 2.0, 3.0, 5.0}) {
            const SearchConfig cfg(x, 1.0, g);
            const double t = optimal_time(SchemeKind::MFG, cfg);
            const double p = max_probability(SchemeKind::MFG, cfg);
            CHECK(t < previous_time);
            CHECK(p < previous_peak);
            CHECK(t <= fg_time);
            previous_time = t;
            previous_peak = p;
        }
    }
}

}  // TEST_SUITE
