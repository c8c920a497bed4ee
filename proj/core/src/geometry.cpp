#include "ngqm/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace ngqm {

namespace {
constexpr double kPi = 3.14159265358979323846;

double principal_argument(Complex z) {
    double a = std::arg(z);
    if (a < 0.0) a += 2.0 * kPi;
    return a;
}
} // namespace

GeometryOrder GeometryOrder::from_j(int j) {
    if (j < 1) throw UnsupportedGeometry("geometry order requires j >= 1");
    return GeometryOrder(j);
}

GeometryOrder GeometryOrder::from_label(int n_label) {
    if (n_label < 2) throw UnsupportedGeometry("geometry label requires N >= 2");
    return GeometryOrder(n_label - 1);
}

std::string GeometryOrder::label_string() const {
    return std::to_string(label()) + "G";
}

RootSet roots_of_negative_unity(GeometryOrder order) {
    const int j = order.j();
    std::vector<Complex> roots;
    roots.reserve(static_cast<size_t>(j));
    // z^j = -1  <=>  z = exp(i pi (2l+1)/j), l = 0..j-1.  These arguments are
    // already increasing in [0, 2pi), so the canonical order falls out.
    for (int l = 0; l < j; ++l) {
        const double angle = kPi * (2.0 * l + 1.0) / j;
        roots.emplace_back(std::cos(angle), std::sin(angle));
    }
    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
        return principal_argument(a) < principal_argument(b);
    });
    return RootSet{order, std::move(roots)};
}

OperatorPhases operator_phases(GeometryOrder order) {
    const int j = order.j();
    const RootSet set = roots_of_negative_unity(order);

    Complex momentum;
    Complex energy;
    switch (j) {
        case 1:
            // single root -1 for both operators
            momentum = Complex(-1.0, 0.0);
            energy = Complex(-1.0, 0.0);
            break;
        case 2:
            // p = -i hbar d/dx, E = +i hbar d/dt (published assignment swaps
            // the canonical order)
            momentum = Complex(0.0, -1.0);
            energy = Complex(0.0, 1.0);
            break;
        default: {
            // product of the first j-1 canonical roots; the j-th root drives
            // the energy operator.  Matches the published table for j = 3, 4.
            momentum = Complex(1.0, 0.0);
            for (int i = 0; i + 1 < j; ++i) momentum *= set.roots[static_cast<size_t>(i)];
            energy = set.roots[static_cast<size_t>(j - 1)];
            break;
        }
    }
    return OperatorPhases{order, momentum, energy, -energy};
}

Complex stationary_clock_phase(GeometryOrder order) {
    return std::conj(operator_phases(order).energy_phase);
}

double lj_norm(std::span<const double> components, GeometryOrder order) {
    if (components.empty()) throw EmptyInput("lj_norm: empty component list");
    const int j = order.j();
    if (j == 1) {
        double sum = 0.0;
        for (double c : components) sum += std::abs(c);
        return sum;
    }
    // scale out the largest magnitude so c^j cannot overflow
    double scale = 0.0;
    for (double c : components) scale = std::max(scale, std::abs(c));
    if (scale == 0.0) return 0.0;
    double sum = 0.0;
    for (double c : components) sum += std::pow(std::abs(c) / scale, j);
    return scale * std::pow(sum, 1.0 / j);
}

double minkowski_distance(std::span<const double> a, std::span<const double> b,
                          GeometryOrder order) {
    if (a.size() != b.size()) throw LengthMismatch("minkowski_distance: length mismatch");
    if (a.empty()) throw EmptyInput("minkowski_distance: empty input");
    std::vector<double> diff(a.size());
    for (size_t i = 0; i < a.size(); ++i) diff[i] = std::abs(a[i] - b[i]);
    return lj_norm(diff, order);
}

double dispersion_energy(double k, GeometryOrder order, const PhysicalConstants& constants) {
    if (k < 0.0) throw NonpositiveWavenumber("dispersion_energy: k must be >= 0");
    constants.validate();
    const int j = order.j();
    if (j >= 2 && constants.rest_energy <= 0.0)
        throw NonpositiveMass("dispersion_energy: rest energy must be positive");
    // E = (hbar c k)^j / (j (m c^2)^(j-1)), all in eV
    return std::pow(constants.hbar_c * k, j) /
           (static_cast<double>(j) * std::pow(constants.rest_energy, j - 1));
}

} // namespace ngqm
