#pragma once

#include <array>
#include <optional>

#include "ngqm/geometry.hpp"

namespace ngqm {

/// Infinite well of width l on [0, l]: V = 0 inside, V = infinity outside.
struct WellConfig {
    double width_l; // nm, > 0
    PhysicalConstants constants;
    GeometryOrder order = GeometryOrder::from_j(2);
};

/// Which closed-form family a j = 2 state belongs to.  The published well
/// solution is the cos((2n+1) pi x / 2l) family; the conventional
/// sin((n+1) pi x / l) family is kept available because the published
/// ground-state uncertainty numbers (0.181 l, 0.568 hbar) belong to it.
enum class WellFamily {
    printed,
    textbook_3g, // j = 2 only
};

/// One bound level of the well.  energy is the printed closed form, which
/// for j = 2 and j = 4 differs from the dispersion relation evaluated at
/// k_n by the documented factors 4 and 1/2 (see
/// dispersion_consistency_ratio).
struct BoundState {
    GeometryOrder order = GeometryOrder::from_j(2);
    int n = 0;                 // quantum number, >= 0
    double width_l = 0.0;      // nm
    double k_n = 0.0;          // 1/nm
    double energy = 0.0;       // eV, printed closed form
    double normalization = 0.0; // nm^(-1/j)
    PhysicalConstants constants;
    WellFamily family = WellFamily::printed;
};

/// k_n from the quantization condition of the geometry:
///   j=2: k_n l = (n + 1/2) pi
///   j=3: (sqrt(3)/2) k_n l = (n + 1/2) pi
///   j=4: (1/sqrt(2)) k_n l = (n + 1/2) pi
/// Throws NoBoundStates for j = 1 and UnsupportedGeometry for j > 4.
double quantization_wavenumber(GeometryOrder order, int n, double width_l);

/// The printed closed-form eigenenergy (NOT the dispersion value at k_n):
///   j=2: (2n+1)^2 hbar^2 pi^2 / (2 m l^2)
///   j=3: (2n+1)^3 hbar^3 pi^3 / (9 sqrt(3) m^2 c l^3)
///   j=4: (2n+1)^4 hbar^4 pi^4 / (32 m^3 c^2 l^4)
double eigenenergy_closed_form(GeometryOrder order, int n, const WellConfig& well);

/// The printed normalization constants.  j=2: sqrt(2/l).  For j=3 and j=4
/// the hyperbolic terms are evaluated in log space for large n so the
/// quotient stays finite.
/// Note: the j=3 constant does not actually normalize the cubic density;
/// integrating the closed form gives a factor that approaches 15/4 (see the
/// statistics module and the `verify` normalization probe).  It is
/// reproduced as printed.
double normalization_constant(GeometryOrder order, int n, double width_l);

/// Assembles the full level: k_n, printed energy, printed normalization.
BoundState make_bound_state(const WellConfig& well, int n,
                            WellFamily family = WellFamily::printed);

/// phi_n(x) on [0, l]; evaluation outside the well is an OutOfDomain error
/// (the wall is a domain restriction, not a value).
double eval_spatial(const BoundState& state, double x);

/// Exact analytic d^m phi / dx^m via the complex-exponential components of
/// the closed forms; order m >= 0.
double eval_spatial_derivative(const BoundState& state, double x, int order);

/// Stationary clock Theta(tau) = exp(temporal_decay_phase * tau) with
/// tau = E_n t / hbar dimensionless.  |Theta| = 1 for j = 2, decaying for
/// j = 3, 4 with the printed phase assignments.
Complex eval_temporal(const BoundState& state, double tau);

enum class FreeDomain { half_line, interval };

/// Free (unbound) solution.  For j = 1 the state is a real decaying
/// exponential with an honest normalization; for j >= 2 the plane-wave-like
/// state is not j-integrable on the line and normalization is left at 1.
struct FreeState {
    GeometryOrder order = GeometryOrder::from_j(2);
    double k = 0.0;           // 1/nm
    double energy = 0.0;      // eV
    Complex spatial_root;     // exponent prefactor of exp(root * k x)
    double normalization = 1.0;
    FreeDomain domain = FreeDomain::half_line;
    std::optional<double> width_l; // set for FreeDomain::interval
};

/// j = 1 free state N exp(-k x): N = k on [0, inf), N = k / (1 - exp(-k l))
/// on [0, l]; E = hbar k c.  The single-branch measure integral of N e^{-kx}
/// over the domain is exactly 1.
FreeState free_state_2g(double k, std::optional<double> interval_l,
                        const PhysicalConstants& constants);

/// j >= 2 free state exp(root * k x) with the geometry's designated root
/// (the energy root) and the dispersion energy.
FreeState free_state_ng(double k, GeometryOrder order, const PhysicalConstants& constants);

/// eigenenergy_closed_form / dispersion_energy(k_n).  Documents the internal
/// factors of the printed spectra: 4.0 for j=2, 1.0 for j=3, 0.5 for j=4
/// (printed family); 1.0 for the textbook j=2 family.
double dispersion_consistency_ratio(GeometryOrder order, int n, const WellConfig& well);

namespace detail {

/// phi(x) = Re sum_i c_i exp(zeta_i x); at most four terms.  Derivatives of
/// any order follow by multiplying each coefficient with zeta_i^m.
struct ExponentialSum {
    std::array<Complex, 4> coeff{};
    std::array<Complex, 4> rate{};
    int terms = 0;

    double eval(double x, int derivative_order) const;
};

ExponentialSum state_components(const BoundState& state);

} // namespace detail

} // namespace ngqm
