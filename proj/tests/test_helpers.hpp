#pragma once

// Shared generators and independent brute-force oracles for the test
// suites. The oracles here (raw 2x2 arithmetic, characteristic-polynomial
// eigenvalues, Richardson extrapolation) deliberately bypass the library
// code paths they are used to check.

#include "qsgeo/hilbert.hpp"
#include "qsgeo/mixedgeo.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <random>

namespace qsgtest {

using qsg::Complex;
using Mat2c = std::array<std::array<Complex, 2>, 2>;
using Vec2c = std::array<Complex, 2>;

inline qsg::PureState random_state(std::mt19937& gen)
{
    std::normal_distribution<double> n(0.0, 1.0);
    return qsg::PureState(Complex(n(gen), n(gen)), Complex(n(gen), n(gen)));
}

inline qsg::HermitianOperator random_operator(std::mt19937& gen, double scale = 2.0)
{
    std::uniform_real_distribution<double> u(-scale, scale);
    return qsg::HermitianOperator{u(gen), u(gen), Complex(u(gen), u(gen))};
}

inline qsg::DensityState random_density(std::mt19937& gen, double max_radius = 0.95)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> ur(0.0, 1.0);
    double rx = u(gen);
    double ry = u(gen);
    double rz = u(gen);
    const double len = std::sqrt(rx * rx + ry * ry + rz * rz);
    const double radius = max_radius * std::cbrt(ur(gen));
    if (len > 1e-12) {
        rx *= radius / len;
        ry *= radius / len;
        rz *= radius / len;
    } else {
        rx = ry = 0.0;
        rz = radius;
    }
    return qsg::DensityState::from_bloch(rx, ry, rz);
}

inline Mat2c to_matrix(const qsg::HermitianOperator& op)
{
    return Mat2c{{{Complex(op.h_ww, 0.0), op.h_wr},
                  {std::conj(op.h_wr), Complex(op.h_rr, 0.0)}}};
}

inline Vec2c to_vector(const qsg::PureState& psi)
{
    return Vec2c{psi.a_w(), psi.a_r()};
}

inline Vec2c matvec(const Mat2c& m, const Vec2c& v)
{
    return Vec2c{m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
}

inline Complex dot(const Vec2c& a, const Vec2c& b)
{
    return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

// Eigenvalues straight from the characteristic polynomial
// l^2 - tr l + det = 0; independent of the library solver.
inline std::array<double, 2> eigenvalues_charpoly(const qsg::HermitianOperator& op)
{
    const double tr = op.h_ww + op.h_rr;
    const double det = op.h_ww * op.h_rr - std::norm(op.h_wr);
    const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
    return {0.5 * (tr - disc), 0.5 * (tr + disc)};
}

// Leading dt^2 coefficient of f with only even error terms:
// f(dt)/dt^2 = c0 + c2 dt^2 + ..., one Richardson step removes c2.
inline double richardson_even_coefficient(const std::function<double(double)>& f,
                                          double dt)
{
    const double coarse = f(dt) / (dt * dt);
    const double fine = f(0.5 * dt) / (0.25 * dt * dt);
    return (4.0 * fine - coarse) / 3.0;
}

}  // namespace qsgtest
