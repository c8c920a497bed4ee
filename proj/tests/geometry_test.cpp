#include <doctest.h>

#include <cmath>
#include <complex>

#include "ngqm/geometry.hpp"

using namespace ngqm;

namespace {
constexpr double kPi = 3.14159265358979323846;

Complex int_power(Complex z, int m) {
    Complex out(1.0, 0.0);
    for (int i = 0; i < m; ++i) out *= z;
    return out;
}
} // namespace

TEST_CASE("geometry order: j and N label describe the same state") {
    CHECK(GeometryOrder::from_j(2) == GeometryOrder::from_label(3));
    CHECK(GeometryOrder::from_j(3).label() == 4);
    CHECK(GeometryOrder::from_label(5).j() == 4);
    CHECK(GeometryOrder::from_j(3).label_string() == "4G");
    CHECK_THROWS_AS(GeometryOrder::from_j(0), UnsupportedGeometry);
    CHECK_THROWS_AS(GeometryOrder::from_label(1), UnsupportedGeometry);
}

TEST_CASE("roots of -1: identity, modulus, ordering, count for j = 1..8") {
    for (int j = 1; j <= 8; ++j) {
        const RootSet set = roots_of_negative_unity(GeometryOrder::from_j(j));
        REQUIRE(set.roots.size() == static_cast<size_t>(j));
        double previous_arg = -1.0;
        for (const Complex& r : set.roots) {
            CHECK(std::abs(int_power(r, j) + Complex(1.0, 0.0)) <= 1e-12);
            CHECK(std::abs(std::abs(r) - 1.0) <= 1e-14);
            double arg = std::arg(r);
            if (arg < 0.0) arg += 2.0 * kPi;
            CHECK(arg > previous_arg); // strictly increasing principal argument
            previous_arg = arg;
        }
    }
}

TEST_CASE("roots of -1: Vieta product equals (-1)^j") {
    for (int j = 1; j <= 8; ++j) {
        Complex product(1.0, 0.0);
        for (const Complex& r : roots_of_negative_unity(GeometryOrder::from_j(j)).roots)
            product *= r;
        const double expected = (j % 2 == 0) ? 1.0 : -1.0;
        CHECK(std::abs(product - Complex(expected, 0.0)) <= 1e-12);
    }
}

TEST_CASE("roots of -1: the named cubic and quartic roots come out exactly") {
    const double s3 = std::sqrt(3.0) / 2.0;
    const auto r3 = roots_of_negative_unity(GeometryOrder::from_j(3)).roots;
    // (1 + i sqrt 3)/2, -1, (1 - i sqrt 3)/2 in canonical order
    CHECK(std::abs(r3[0] - Complex(0.5, s3)) <= 1e-15);
    CHECK(std::abs(r3[1] - Complex(-1.0, 0.0)) <= 1e-15);
    CHECK(std::abs(r3[2] - Complex(0.5, -s3)) <= 1e-15);

    const double s2 = 1.0 / std::sqrt(2.0);
    const auto r4 = roots_of_negative_unity(GeometryOrder::from_j(4)).roots;
    CHECK(std::abs(r4[0] - Complex(s2, s2)) <= 1e-15);
    CHECK(std::abs(r4[1] - Complex(-s2, s2)) <= 1e-15);
    CHECK(std::abs(r4[2] - Complex(-s2, -s2)) <= 1e-15);
    CHECK(std::abs(r4[3] - Complex(s2, -s2)) <= 1e-15);

    CHECK(std::abs(roots_of_negative_unity(GeometryOrder::from_j(1)).roots[0] -
                   Complex(-1.0, 0.0)) <= 1e-15);
}

TEST_CASE("operator phases reproduce the published table for j <= 4") {
    const double s3 = std::sqrt(3.0) / 2.0;
    const double s2 = 1.0 / std::sqrt(2.0);

    const OperatorPhases p1 = operator_phases(GeometryOrder::from_j(1));
    CHECK(std::abs(p1.momentum_phase - Complex(-1.0, 0.0)) <= 1e-15);
    CHECK(std::abs(p1.energy_phase - Complex(-1.0, 0.0)) <= 1e-15);

    const OperatorPhases p2 = operator_phases(GeometryOrder::from_j(2));
    CHECK(std::abs(p2.momentum_phase - Complex(0.0, -1.0)) <= 1e-15);
    CHECK(std::abs(p2.energy_phase - Complex(0.0, 1.0)) <= 1e-15);

    // j=3: momentum = (-1) * first root = -(1 + i sqrt 3)/2, energy = last root
    const OperatorPhases p3 = operator_phases(GeometryOrder::from_j(3));
    CHECK(std::abs(p3.momentum_phase - Complex(-0.5, -s3)) <= 1e-14);
    CHECK(std::abs(p3.energy_phase - Complex(0.5, -s3)) <= 1e-15);

    // j=4: the product of the first three quartic roots collapses back to
    // the first root (angles pi/4 + 3pi/4 + 5pi/4 = 9pi/4 = pi/4 mod 2pi)
    const OperatorPhases p4 = operator_phases(GeometryOrder::from_j(4));
    CHECK(std::abs(p4.momentum_phase - Complex(s2, s2)) <= 1e-14);
    CHECK(std::abs(p4.energy_phase - Complex(s2, -s2)) <= 1e-15);
}

TEST_CASE("operator phases: printed clock is minus the energy root") {
    for (int j = 1; j <= 6; ++j) {
        const OperatorPhases phases = operator_phases(GeometryOrder::from_j(j));
        CHECK(std::abs(phases.temporal_decay_phase + phases.energy_phase) <= 1e-15);
    }
}

TEST_CASE("separable clock closes the energy chain to +1 for every order") {
    // E_hat exp(tau E t/hbar) multiplies to energy_phase * tau * E; the
    // choice tau = conj(energy_phase) forces the chain to |energy|^2 = +1
    for (int j = 1; j <= 6; ++j) {
        const GeometryOrder order = GeometryOrder::from_j(j);
        const Complex chain = operator_phases(order).energy_phase * stationary_clock_phase(order);
        CHECK(std::abs(chain - Complex(1.0, 0.0)) <= 1e-14);
    }
}

TEST_CASE("operator phases beyond the table follow the (j-1)-product rule") {
    const GeometryOrder order = GeometryOrder::from_j(5);
    const auto roots = roots_of_negative_unity(order).roots;
    const OperatorPhases phases = operator_phases(order);
    Complex product(1.0, 0.0);
    for (size_t i = 0; i + 1 < roots.size(); ++i) product *= roots[i];
    CHECK(std::abs(phases.momentum_phase - product) <= 1e-14);
    CHECK(std::abs(phases.energy_phase - roots.back()) <= 1e-15);
}

TEST_CASE("lj_norm: Euclidean case, single component, cubic value") {
    const double v1[] = {3.0, 4.0};
    CHECK(lj_norm(v1, GeometryOrder::from_j(2)) == doctest::Approx(5.0).epsilon(1e-14));

    const double v2[] = {1.75, 0.0, 0.0};
    for (int j = 1; j <= 5; ++j)
        CHECK(lj_norm(v2, GeometryOrder::from_j(j)) == doctest::Approx(1.75).epsilon(1e-14));

    // (1+1+1+1)^(1/3) = 4^(1/3)
    const double v3[] = {1.0, 1.0, 1.0, 1.0};
    CHECK(lj_norm(v3, GeometryOrder::from_j(3)) ==
          doctest::Approx(1.5874010519682).epsilon(1e-12));

    CHECK_THROWS_AS(lj_norm({}, GeometryOrder::from_j(2)), EmptyInput);
}

TEST_CASE("lj_norm is positively homogeneous of degree one") {
    const double base[] = {0.3, 1.7, 0.0, 2.9, 0.45};
    for (int j = 1; j <= 6; ++j) {
        const GeometryOrder order = GeometryOrder::from_j(j);
        const double reference = lj_norm(base, order);
        for (double t : {0.25, 1.0, 3.5, 1234.5}) {
            double scaled[5];
            for (int i = 0; i < 5; ++i) scaled[i] = t * base[i];
            CHECK(lj_norm(scaled, order) == doctest::Approx(t * reference).epsilon(1e-12));
        }
    }
}

TEST_CASE("minkowski distance: coincident points, 1-D, cubic example") {
    const double a[] = {0.4, -1.0, 2.0};
    CHECK(minkowski_distance(a, a, GeometryOrder::from_j(3)) == 0.0);

    const double p[] = {2.0};
    const double q[] = {-1.5};
    for (int j = 1; j <= 5; ++j)
        CHECK(minkowski_distance(p, q, GeometryOrder::from_j(j)) ==
              doctest::Approx(3.5).epsilon(1e-14));

    const double o[] = {0.0, 0.0};
    const double u[] = {1.0, 1.0};
    CHECK(minkowski_distance(o, u, GeometryOrder::from_j(3)) ==
          doctest::Approx(1.2599210498949).epsilon(1e-12));

    const double short_one[] = {1.0};
    CHECK_THROWS_AS(minkowski_distance(a, short_one, GeometryOrder::from_j(2)), LengthMismatch);
}

TEST_CASE("dispersion energy: linear, quadratic, zero-k cases") {
    const PhysicalConstants electron;
    // j=1: massless-like E = hbar c k
    for (double k : {0.1, 1.0, 7.5})
        CHECK(dispersion_energy(k, GeometryOrder::from_j(1), electron) ==
              doctest::Approx(electron.hbar_c * k).epsilon(1e-14));
    // j=2 at k = pi/nm: (197.3269804 pi)^2 / (2 * 510998.95)
    CHECK(dispersion_energy(kPi, GeometryOrder::from_j(2), electron) ==
          doctest::Approx(0.376030162388).epsilon(1e-11));
    for (int j = 1; j <= 4; ++j)
        CHECK(dispersion_energy(0.0, GeometryOrder::from_j(j), electron) == 0.0);
    CHECK_THROWS_AS(dispersion_energy(-1.0, GeometryOrder::from_j(2), electron),
                    NonpositiveWavenumber);
}

TEST_CASE("dispersion energy: monotone in k and E(2k) = 2^j E(k)") {
    const PhysicalConstants electron;
    for (int j = 1; j <= 4; ++j) {
        const GeometryOrder order = GeometryOrder::from_j(j);
        double previous = 0.0;
        for (double k = 0.5; k <= 8.0; k *= 2.0) {
            const double e = dispersion_energy(k, order, electron);
            CHECK(e > previous);
            previous = e;
            CHECK(dispersion_energy(2.0 * k, order, electron) ==
                  doctest::Approx(std::pow(2.0, j) * e).epsilon(1e-12));
        }
    }
}
