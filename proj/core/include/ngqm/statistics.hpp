#pragma once

#include <optional>
#include <string>

#include "ngqm/oracle.hpp"
#include "ngqm/wells.hpp"

namespace ngqm {

enum class Observable { position, momentum };

/// <O^k> under the j-fold measure.  Complex-valued: odd momentum powers
/// carry the root phases.  Units: nm^k for position, (hbar/nm)^k for
/// momentum.
struct MomentReport {
    Observable observable = Observable::position;
    int power = 1;
    Complex value;
};

struct DiagnosticRecord {
    Complex radicand_x;
    Complex radicand_p;
    std::string branch_note;
    std::optional<double> published_value;     // published ground-state product
    std::optional<double> relative_deviation;  // |ours - published| / published
};

struct UncertaintyReport {
    double delta_x = 0.0;            // nm
    double delta_p = 0.0;            // hbar/nm
    double product_over_hbar = 0.0;  // delta_x * delta_p (hbar = 1 units)
    bool satisfies_heisenberg = false; // product_over_hbar >= 0.5, exactly
    DiagnosticRecord diagnostics;

    // j = 3 only: the first momentum moment evaluated as the pure boundary
    // term (the published recipe), and the spread recomputed with the
    // published third moment 21.6 hbar^3/l^3 instead of the quadrature value
    // hbar^3 k0^3.
    std::optional<double> mean_p_boundary_magnitude;
    std::optional<double> p_pow_j_quadrature;
    std::optional<double> p_pow_j_published;
    std::optional<double> delta_p_published_source;
    std::optional<double> product_published_source;
};

/// The j-fold probability measure phi^j on [a, b].  Signed for odd j: the
/// printed cubic normalization only closes under the signed convention, so
/// the sign is kept rather than clipped.
struct ProbabilityMeasure {
    GeometryOrder order = GeometryOrder::from_j(2);
    double a = 0.0;
    double b = 0.0;
};

/// phi_n(x)^j, signed.  OutOfDomain outside [0, l].
double probability_density(const BoundState& state, double x);

/// True iff phi^j < 0 somewhere on a uniform scan of (0, l) (odd j, n >= 1).
bool density_has_negative_region(const BoundState& state, int scan_points = 512);

/// Integral of the signed density over the well (== 1 for a truly
/// normalized state).
double density_integral(const BoundState& state, const QuadratureSpec& spec = {});

/// Expectation under the j-fold measure, as the ratio
///
///   <O^k> = int phi^(j-1) O^k phi dx / int phi^j dx
///
/// The denominator makes the value independent of the stored normalization
/// (the printed j=3 constant over-normalizes; the ratio reproduces the
/// published position moments regardless).  Momentum applies
/// (-r1 hbar d/dx)^k with r1 = exp(i pi / j), matching the published moment
/// prefactors -i, -omega1, -eta1 for j = 2, 3, 4; k <= 6.
MomentReport expectation(const BoundState& state, Observable observable, int power);

/// First momentum moment via the boundary term, assuming unit
/// normalization:  -r1 hbar [phi^j / j]_0^l.  This is the published recipe;
/// for the j=3 ground state it gives |<p>| = N^3/3 ~ 5.15 hbar/l with the
/// printed constant, while the ratio convention gives ~1.42 hbar/l.
Complex boundary_momentum(const BoundState& state);

/// Full binomial central moment of order j,
/// sum_k C(j,k) (-1)^k <O^(j-k)> <O>^k.  The root phases collapse so the
/// result is real (asserted to rounding).
double central_moment(const BoundState& state, Observable observable);

/// Generalized spread (<O^j> - <O>^j)^(1/j).  Momentum uses the
/// boundary-term <p> (published recipe) and the quadrature <p^j>.  When the
/// radicand is not a positive real, the modulus of the principal root is
/// returned and the radicand lands in diagnostics.
double generalized_uncertainty(const BoundState& state, Observable observable,
                               DiagnosticRecord* diagnostics = nullptr);

/// Assembles delta_x, delta_p, product, verdict (product >= 1/2), published
/// ground-state comparisons where they exist, and for j = 3 both third-
/// moment sources.
UncertaintyReport heisenberg_check(const BoundState& state);

/// The designated root of -1 in [x, p]_j = root * hbar:
/// -1, i, omega, eta1 for j = 1..4; exp(i pi / j) generally.
Complex commutator_phase(GeometryOrder order);

/// Published ground-state uncertainty product for the three computed cases
/// (textbook j=2: 0.568, j=3: 1.36, j=4: 1.07), if any.
std::optional<double> published_ground_state_product(GeometryOrder order, WellFamily family);

} // namespace ngqm
