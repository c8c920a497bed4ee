#include "ngqm/wells.hpp"

#include <cmath>

namespace ngqm {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_bound_geometry(GeometryOrder order) {
    if (order.j() == 1)
        throw NoBoundStates("2G (j=1): the infinite well has no bound states");
    if (order.j() > 4)
        throw UnsupportedGeometry("no closed-form well solutions beyond j = 4");
}

void require_well(int n, double width_l) {
    if (n < 0) throw OutOfDomain("quantum number must be >= 0");
    if (!(width_l > 0.0)) throw OutOfDomain("well width must be positive");
}

} // namespace

double quantization_wavenumber(GeometryOrder order, int n, double width_l) {
    require_bound_geometry(order);
    require_well(n, width_l);
    const double m = (2.0 * n + 1.0) * kPi;
    switch (order.j()) {
        case 2: return m / (2.0 * width_l);
        case 3: return m / (std::sqrt(3.0) * width_l);
        default: return m / (std::sqrt(2.0) * width_l);
    }
}

double eigenenergy_closed_form(GeometryOrder order, int n, const WellConfig& well) {
    require_bound_geometry(order);
    require_well(n, well.width_l);
    well.constants.validate();
    const int j = order.j();
    const double odd = 2.0 * n + 1.0;
    const double base = well.constants.hbar_c * kPi / well.width_l; // eV
    // prefactors 1/2, 1/(9 sqrt 3), 1/32 for j = 2, 3, 4
    const double prefactor = (j == 2)   ? 0.5
                             : (j == 3) ? 1.0 / (9.0 * std::sqrt(3.0))
                                        : 1.0 / 32.0;
    return std::pow(odd, j) * prefactor * std::pow(base, j) /
           std::pow(well.constants.rest_energy, j - 1);
}

double normalization_constant(GeometryOrder order, int n, double width_l) {
    require_bound_geometry(order);
    require_well(n, width_l);
    const double odd = 2.0 * n + 1.0;
    switch (order.j()) {
        case 2:
            return std::sqrt(2.0 / width_l);
        case 3: {
            const double damping = std::exp(-std::sqrt(3.0) * odd * kPi / 2.0);
            const double sign = (n % 2 == 0) ? 1.0 : -1.0;
            const double bracket = 2.0 * std::sqrt(3.0) / 3.0 + sign * damping;
            return std::cbrt(6.0 * kPi * odd / (width_l * bracket));
        }
        default: {
            const double theta = odd * kPi;
            const double a = 640.0 * kPi * odd / width_l;
            if (n < 5) {
                const double d = 90.0 * kPi * odd +
                                 std::sinh(theta) * (3.0 * std::cosh(theta) - 48.0);
                return std::pow(a / d, 0.25);
            }
            // log domain: D = (3/4) e^{2 theta} g with
            // g = 1 - e^{-4t} - 32(e^{-t} - e^{-3t}) + 120 pi (2n+1) e^{-2t}
            const double g = 1.0 - std::exp(-4.0 * theta) -
                             32.0 * (std::exp(-theta) - std::exp(-3.0 * theta)) +
                             120.0 * kPi * odd * std::exp(-2.0 * theta);
            const double log_d = 2.0 * theta + std::log(0.75) + std::log(g);
            return std::exp(0.25 * (std::log(a) - log_d));
        }
    }
}

BoundState make_bound_state(const WellConfig& well, int n, WellFamily family) {
    require_bound_geometry(well.order);
    require_well(n, well.width_l);
    well.constants.validate();
    if (family == WellFamily::textbook_3g && well.order.j() != 2)
        throw UnsupportedGeometry("the textbook family exists only for j = 2");

    BoundState state;
    state.order = well.order;
    state.n = n;
    state.width_l = well.width_l;
    state.constants = well.constants;
    state.family = family;
    if (family == WellFamily::textbook_3g) {
        state.k_n = (n + 1.0) * kPi / well.width_l;
        state.energy = dispersion_energy(state.k_n, well.order, well.constants);
        state.normalization = std::sqrt(2.0 / well.width_l);
    } else {
        state.k_n = quantization_wavenumber(well.order, n, well.width_l);
        state.energy = eigenenergy_closed_form(well.order, n, well);
        state.normalization = normalization_constant(well.order, n, well.width_l);
    }
    return state;
}

namespace detail {

double ExponentialSum::eval(double x, int derivative_order) const {
    Complex sum(0.0, 0.0);
    for (int i = 0; i < terms; ++i) {
        Complex factor = coeff[static_cast<size_t>(i)];
        for (int m = 0; m < derivative_order; ++m) factor *= rate[static_cast<size_t>(i)];
        sum += factor * std::exp(rate[static_cast<size_t>(i)] * x);
    }
    return sum.real();
}

ExponentialSum state_components(const BoundState& state) {
    ExponentialSum sum;
    const double n_const = state.normalization;
    const double k = state.k_n;
    switch (state.order.j()) {
        case 2: {
            if (state.family == WellFamily::textbook_3g) {
                // N sin(kx) = Re[-i N/2 e^{ikx} + i N/2 e^{-ikx}]
                sum.coeff = {Complex(0.0, -0.5 * n_const), Complex(0.0, 0.5 * n_const)};
            } else {
                // N cos(kx)
                sum.coeff = {Complex(0.5 * n_const, 0.0), Complex(0.5 * n_const, 0.0)};
            }
            sum.rate = {Complex(0.0, k), Complex(0.0, -k)};
            sum.terms = 2;
            break;
        }
        case 3: {
            // N e^{-kx/2} cos(sqrt(3) kx/2): rates k(-1/2 +- i sqrt(3)/2);
            // cubes of the rates are +k^3, hence phi''' = k^3 phi.
            const Complex zeta(-0.5 * k, 0.5 * std::sqrt(3.0) * k);
            sum.coeff = {Complex(0.5 * n_const, 0.0), Complex(0.5 * n_const, 0.0)};
            sum.rate = {zeta, std::conj(zeta)};
            sum.terms = 2;
            break;
        }
        default: {
            // N sinh(bx) cos(bx), b = k/sqrt(2): four rates b(+-1 +- i);
            // fourth powers are -4 b^4 = -k^4, hence phi'''' = -k^4 phi.
            const double b = k / std::sqrt(2.0);
            const double c = 0.25 * n_const;
            sum.coeff = {Complex(c, 0.0), Complex(c, 0.0), Complex(-c, 0.0), Complex(-c, 0.0)};
            sum.rate = {Complex(b, b), Complex(b, -b), Complex(-b, b), Complex(-b, -b)};
            sum.terms = 4;
            break;
        }
    }
    return sum;
}

} // namespace detail

double eval_spatial(const BoundState& state, double x) {
    if (x < 0.0 || x > state.width_l)
        throw OutOfDomain("eval_spatial: x outside the well [0, l]");
    return detail::state_components(state).eval(x, 0);
}

double eval_spatial_derivative(const BoundState& state, double x, int order) {
    if (x < 0.0 || x > state.width_l)
        throw OutOfDomain("eval_spatial_derivative: x outside the well [0, l]");
    if (order < 0) throw UnsupportedPower("derivative order must be >= 0");
    return detail::state_components(state).eval(x, order);
}

Complex eval_temporal(const BoundState& state, double tau) {
    if (!std::isfinite(tau)) throw OutOfDomain("eval_temporal: tau must be finite");
    const OperatorPhases phases = operator_phases(state.order);
    return std::exp(phases.temporal_decay_phase * tau);
}

FreeState free_state_2g(double k, std::optional<double> interval_l,
                        const PhysicalConstants& constants) {
    if (!(k > 0.0)) throw NonpositiveWavenumber("free_state_2g: k must be positive");
    constants.validate();
    FreeState state;
    state.order = GeometryOrder::from_j(1);
    state.k = k;
    state.energy = constants.hbar_c * k; // E = hbar k c
    state.spatial_root = Complex(-1.0, 0.0);
    if (interval_l) {
        if (!(*interval_l > 0.0)) throw OutOfDomain("free_state_2g: interval width must be > 0");
        state.domain = FreeDomain::interval;
        state.width_l = interval_l;
        state.normalization = k / (1.0 - std::exp(-k * *interval_l));
    } else {
        state.domain = FreeDomain::half_line;
        state.normalization = k;
    }
    return state;
}

FreeState free_state_ng(double k, GeometryOrder order, const PhysicalConstants& constants) {
    if (!(k > 0.0)) throw NonpositiveWavenumber("free_state_ng: k must be positive");
    if (order.j() < 2) throw UnsupportedGeometry("free_state_ng requires j >= 2");
    constants.validate();
    FreeState state;
    state.order = order;
    state.k = k;
    state.energy = dispersion_energy(k, order, constants);
    state.spatial_root = operator_phases(order).energy_phase;
    state.normalization = 1.0; // not j-integrable on the line; left symbolic
    return state;
}

double dispersion_consistency_ratio(GeometryOrder order, int n, const WellConfig& well) {
    const double closed = eigenenergy_closed_form(order, n, well);
    const double k_n = quantization_wavenumber(order, n, well.width_l);
    return closed / dispersion_energy(k_n, order, well.constants);
}

} // namespace ngqm
