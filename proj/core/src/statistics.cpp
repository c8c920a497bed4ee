#include "ngqm/statistics.hpp"

#include <cmath>

namespace ngqm {

namespace {

double ipow(double base, int exponent) {
    double out = 1.0;
    for (int i = 0; i < exponent; ++i) out *= base;
    return out;
}

Complex cpow_int(Complex base, int exponent) {
    Complex out(1.0, 0.0);
    for (int i = 0; i < exponent; ++i) out *= base;
    return out;
}

void require_moment_state(const BoundState& state) {
    if (state.order.j() < 2 || state.order.j() > 4)
        throw UnsupportedGeometry("moments are defined for the well families j in {2,3,4}");
    if (!(state.normalization > 0.0) || !std::isfinite(state.normalization))
        throw UnnormalizedState("state carries no usable normalization constant");
    if (!(state.width_l > 0.0)) throw UnnormalizedState("state has no well domain");
}

/// -r1 with r1 = exp(i pi / j): the published momentum-moment prefactor
/// (-i, -omega1, -eta1 for j = 2, 3, 4).
Complex moment_prefactor(GeometryOrder order) {
    return -roots_of_negative_unity(order).roots.front();
}

const QuadratureSpec kMomentQuad{1e-13, 1e-13, 4000};

} // namespace

double probability_density(const BoundState& state, double x) {
    return ipow(eval_spatial(state, x), state.order.j());
}

bool density_has_negative_region(const BoundState& state, int scan_points) {
    if (state.order.j() % 2 == 0) return false;
    for (int i = 1; i < scan_points; ++i) {
        const double x = state.width_l * i / scan_points;
        if (probability_density(state, x) < 0.0) return true;
    }
    return false;
}

double density_integral(const BoundState& state, const QuadratureSpec& spec) {
    return integrate([&](double x) { return probability_density(state, x); }, 0.0,
                     state.width_l, spec)
        .value;
}

MomentReport expectation(const BoundState& state, Observable observable, int power) {
    require_moment_state(state);
    if (power < 1 || power > 6)
        throw UnsupportedPower("expectation: power must be in 1..6");

    const int j = state.order.j();
    const double denominator = density_integral(state, kMomentQuad);

    MomentReport report;
    report.observable = observable;
    report.power = power;
    if (observable == Observable::position) {
        const double numerator =
            integrate([&](double x) { return probability_density(state, x) * ipow(x, power); },
                      0.0, state.width_l, kMomentQuad)
                .value;
        report.value = Complex(numerator / denominator, 0.0);
    } else {
        const double radial =
            integrate(
                [&](double x) {
                    return ipow(eval_spatial(state, x), j - 1) *
                           eval_spatial_derivative(state, x, power);
                },
                0.0, state.width_l, kMomentQuad)
                .value;
        report.value = cpow_int(moment_prefactor(state.order), power) * radial / denominator;
    }
    return report;
}

Complex boundary_momentum(const BoundState& state) {
    require_moment_state(state);
    const int j = state.order.j();
    // int phi^(j-1) phi' dx = [phi^j / j] over the well, taken with the
    // stored constant as if it normalized the density
    const double boundary = (ipow(eval_spatial(state, state.width_l), j) -
                             ipow(eval_spatial(state, 0.0), j)) /
                            j;
    return moment_prefactor(state.order) * boundary;
}

double central_moment(const BoundState& state, Observable observable) {
    require_moment_state(state);
    const int j = state.order.j();

    std::array<Complex, 5> moments{}; // moments[k] = <O^k>, k = 1..j
    for (int k = 1; k <= j; ++k)
        moments[static_cast<size_t>(k)] = expectation(state, observable, k).value;

    const Complex mean = moments[1];
    Complex sum(0.0, 0.0);
    double binom = 1.0; // C(j, k)
    for (int k = 0; k <= j; ++k) {
        const Complex raw = (j - k == 0) ? Complex(1.0, 0.0) : moments[static_cast<size_t>(j - k)];
        const double parity = (k % 2 == 0) ? 1.0 : -1.0;
        sum += binom * parity * raw * cpow_int(mean, k);
        binom = binom * (j - k) / (k + 1.0);
    }
    // the root phases collapse to a common factor of total power j, so the
    // sum is real up to rounding
    return sum.real();
}

namespace {

double principal_root_magnitude(Complex radicand, int j, bool* clean_positive_real) {
    const double magnitude = std::abs(radicand);
    const bool clean = magnitude > 0.0 && std::abs(radicand.imag()) <= 1e-9 * magnitude &&
                       radicand.real() > 0.0;
    if (clean_positive_real) *clean_positive_real = clean;
    if (magnitude == 0.0) return 0.0;
    return std::pow(magnitude, 1.0 / j);
}

} // namespace

double generalized_uncertainty(const BoundState& state, Observable observable,
                               DiagnosticRecord* diagnostics) {
    require_moment_state(state);
    const int j = state.order.j();

    Complex mean;
    Complex high;
    if (observable == Observable::position) {
        mean = expectation(state, Observable::position, 1).value;
        high = expectation(state, Observable::position, j).value;
    } else {
        mean = boundary_momentum(state);
        high = expectation(state, Observable::momentum, j).value;
    }
    const Complex radicand = high - cpow_int(mean, j);

    bool clean = false;
    const double spread = principal_root_magnitude(radicand, j, &clean);
    if (diagnostics) {
        if (observable == Observable::position)
            diagnostics->radicand_x = radicand;
        else
            diagnostics->radicand_p = radicand;
        if (!clean && !diagnostics->branch_note.empty()) diagnostics->branch_note += "; ";
        if (!clean)
            diagnostics->branch_note +=
                (observable == Observable::position ? std::string("x") : std::string("p")) +
                "-radicand not a positive real; modulus of the principal root reported";
    }
    return spread;
}

UncertaintyReport heisenberg_check(const BoundState& state) {
    require_moment_state(state);
    const int j = state.order.j();

    UncertaintyReport report;
    report.delta_x = generalized_uncertainty(state, Observable::position, &report.diagnostics);
    report.delta_p = generalized_uncertainty(state, Observable::momentum, &report.diagnostics);
    report.product_over_hbar = report.delta_x * report.delta_p;
    report.satisfies_heisenberg = report.product_over_hbar >= 0.5;

    if (state.n == 0) {
        if (auto published = published_ground_state_product(state.order, state.family)) {
            report.diagnostics.published_value = *published;
            report.diagnostics.relative_deviation =
                std::abs(report.product_over_hbar - *published) / *published;
        }
    }

    if (j == 3) {
        // both third-moment sources: quadrature (forced by phi''' = k^3 phi)
        // and the published 21.6 hbar^3/l^3
        const Complex mean_p = boundary_momentum(state);
        report.mean_p_boundary_magnitude = std::abs(mean_p);
        report.p_pow_j_quadrature = expectation(state, Observable::momentum, 3).value.real();
        const double published_third = 21.6 / ipow(state.width_l, 3);
        report.p_pow_j_published = published_third;
        const Complex radicand = Complex(published_third, 0.0) - cpow_int(mean_p, 3);
        const double delta_p_published = principal_root_magnitude(radicand, 3, nullptr);
        report.delta_p_published_source = delta_p_published;
        report.product_published_source = delta_p_published * report.delta_x;
    }
    return report;
}

Complex commutator_phase(GeometryOrder order) {
    // the designated root of [x,p] = (-1)^(1/j) hbar: exp(i pi / j)
    return roots_of_negative_unity(order).roots.front();
}

std::optional<double> published_ground_state_product(GeometryOrder order, WellFamily family) {
    switch (order.j()) {
        case 2:
            if (family == WellFamily::textbook_3g) return 0.568;
            return std::nullopt; // never computed for the printed cos family
        case 3: return 1.36;
        case 4: return 1.07;
        default: return std::nullopt;
    }
}

} // namespace ngqm
