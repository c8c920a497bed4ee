#pragma once

#include <complex>
#include <span>
#include <vector>

#include "ngqm/constants.hpp"
#include "ngqm/errors.hpp"

namespace ngqm {

using Complex = std::complex<double>;

/// Geometry order j = N - 1 of an L^j-normed framework.  N is the geometry
/// label (2G, 3G, ...); j is the exponent of the dispersion relation and the
/// derivative order of the wave operator.  j = 2 is ordinary quantum
/// mechanics.
class GeometryOrder {
  public:
    static GeometryOrder from_j(int j);
    static GeometryOrder from_label(int n_label); // N = j + 1

    int j() const { return j_; }
    int label() const { return j_ + 1; }

    /// "3G", "4G", ... for display.
    std::string label_string() const;

    friend bool operator==(GeometryOrder a, GeometryOrder b) { return a.j_ == b.j_; }

  private:
    explicit GeometryOrder(int j) : j_(j) {}
    int j_;
};

/// The j solutions of z^j = -1, unit modulus, sorted by principal argument
/// in [0, 2pi).  roots()[0] is always exp(i*pi/j).
struct RootSet {
    GeometryOrder order;
    std::vector<Complex> roots;
};

RootSet roots_of_negative_unity(GeometryOrder order);

/// Dimensionless prefactors of the generalized operators:
///
///   p_hat = momentum_phase * hbar * d/dx
///   E_hat = energy_phase   * hbar * d/dt
///
/// temporal_decay_phase is the exponent prefactor of the printed stationary
/// clock Theta(t) = exp(temporal_decay_phase * E t / hbar); it equals
/// -energy_phase, giving |Theta| = 1 for j = 2 and decaying moduli for
/// j = 3, 4.
///
/// The printed clock solves E_hat Theta = E Theta only for j = 2.  The
/// separable solution of the free wave equation requires the phase
/// conj(energy_phase) instead; see stationary_clock_phase() and the
/// operator eigenvalue probe in the oracle module.
struct OperatorPhases {
    GeometryOrder order;
    Complex momentum_phase;
    Complex energy_phase;
    Complex temporal_decay_phase;
};

/// For j <= 4 the assignments follow the published operator table exactly;
/// for j > 4 momentum_phase is the product of the first j-1 canonical roots
/// and energy_phase is the last root.
OperatorPhases operator_phases(GeometryOrder order);

/// Clock phase tau with E_hat exp(tau E t/hbar) = +E exp(tau E t/hbar):
/// tau = 1/energy_phase = conj(energy_phase).  Coincides with the printed
/// clock for j = 2 and with the (j-1)-root product for even j.
Complex stationary_clock_phase(GeometryOrder order);

/// (sum_i |c_i|^j)^(1/j).  Reduces to the Euclidean norm at j = 2.
/// Components are taken by absolute value so the result is real for odd j.
double lj_norm(std::span<const double> components, GeometryOrder order);

/// lj_norm of the componentwise differences |a_i - b_i|.
double minkowski_distance(std::span<const double> a, std::span<const double> b,
                          GeometryOrder order);

/// Power-law dispersion E = (hbar c k)^j / (j (m c^2)^(j-1)) in eV, with k in
/// 1/nm.  j = 2 reproduces hbar^2 k^2 / 2m; j = 1 reproduces hbar k c.
double dispersion_energy(double k, GeometryOrder order, const PhysicalConstants& constants);

} // namespace ngqm
