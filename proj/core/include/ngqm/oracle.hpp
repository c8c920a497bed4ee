#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ngqm/wells.hpp"

namespace ngqm {

struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_subdivisions = 4000; // >= 10
};

struct IntegralResult {
    double value = 0.0;
    double error = 0.0; // embedded estimate, <= max(abs_tol, rel_tol*|value|)
    int subdivisions = 0;
};

struct ComplexIntegralResult {
    Complex value;
    double error = 0.0;
    int subdivisions = 0;
};

/// Adaptive Gauss-Kronrod (G7/K15) bisection with embedded error estimate.
/// Subdivision order and accumulation order are fixed (depth-first,
/// left-to-right), so results are bit-reproducible across runs.
/// Throws ToleranceNotMet once the subdivision budget is exhausted.
IntegralResult integrate(const std::function<double(double)>& f, double a, double b,
                         const QuadratureSpec& spec = {});
ComplexIntegralResult integrate_complex(const std::function<Complex(double)>& f, double a, double b,
                                const QuadratureSpec& spec = {});

/// Central finite difference of accuracy order >= 4 with one Richardson
/// pairing over steps (h, h/2).  order in 1..4.
double derivative(const std::function<double(double)>& f, double x, int order, double step);

enum class ResidualKind {
    ode,
    boundary,
    eigenvalue,
    normalization,
    hermiticity,
    operator_eigenvalue,
};

struct ResidualReport {
    ResidualKind kind = ResidualKind::ode;
    double max_abs = 0.0;
    double rel_to_scale = 0.0;
    int sample_points = 0;
    std::string note;
};

/// Residual of the time-independent equation with the dispersion-consistent
/// energy:  |H_j phi - E_disp phi| / (E_disp max|phi|)  at `samples`
/// interior points.  H_j carries the sign of (momentum_phase)^j, which makes
/// every closed-form family an exact eigenfunction (the derivative
/// identities phi''' = k^3 phi, phi'''' = -k^4 phi).  Analytic derivatives
/// are cross-checked against finite differences before the residual is
/// trusted.
ResidualReport ode_residual(const BoundState& state, const WellConfig& well, int samples);

/// |phi(0)| and |phi(l)| normalized by max|phi|.  The printed families
/// vanish at x = l for all j; only j = 4 also vanishes at x = 0.
struct BoundaryResidual {
    double at_zero = 0.0; // |phi(0)| / max|phi|
    double at_width = 0.0;
    double scale = 0.0;   // max|phi| on [0, l]
};
BoundaryResidual boundary_residual(const BoundState& state);

/// Applies p_hat to exp(spatial_root k x) and E_hat to the separable clock
/// exp(conj(energy_phase) E t / hbar), multiplying the phases exactly.
///
///   momentum chain: momentum_phase * spatial_root = product of all j roots
///                   = (-1)^j, so p = -hbar k for odd j (reported, not
///                   corrected)
///   energy chain:   energy_phase * conj(energy_phase) = +1, so
///                   E_hat Theta = +E Theta for every j
///
/// The printed bound-state clock (-energy_phase) yields +E only for j = 2;
/// its chain value is reported alongside as printed_clock_eigenvalue.
struct OperatorChainReport {
    GeometryOrder order = GeometryOrder::from_j(2);
    Complex p_eigenvalue_over_hbar_k;  // +1 or -1 (exact chain)
    Complex e_eigenvalue_over_e;       // +1 by construction of the clock
    Complex printed_clock_eigenvalue;  // chain with the printed decay phase
    double p_residual = 0.0;           // |p_chain - 1|
    double e_residual = 0.0;           // |e_chain - 1|
    bool momentum_sign_deviation = false;
    bool printed_clock_deviation = false;
};
OperatorChainReport operator_eigenvalue_check(GeometryOrder order, double k);

/// | <f, H g> - <H f, g> | over the absolute-integrand scale
/// max(int |f H g|, int |H f g|)  (plain pairing of the real stationary
/// states; the scale floor keeps orthogonal pairs from dividing noise by
/// noise).  rel_to_max is the same difference over max(|<f,Hg>|, |<Hf,g>|).
struct HermiticityReport {
    double defect = 0.0;       // |A - B| / abs-scale
    double rel_to_max = 0.0;   // |A - B| / max(|A|, |B|)
    double pairing_fg = 0.0;   // <f, H g>
    double pairing_hf_g = 0.0; // <H f, g>
};
HermiticityReport hermiticity_defect(GeometryOrder order, const BoundState& f,
                                     const BoundState& g, const WellConfig& well);

/// One audited cell of the published bound-electron energy table.
struct TableAuditRow {
    int j = 0;
    double width_l = 0.0;
    int q = 0;                          // quantum number of the row
    double closed_form_ev = 0.0;        // from eigenenergy_closed_form
    std::optional<double> published_ev; // table value, when the cell exists
    std::optional<double> published_ratio_to_ground; // row_q / row_0
    double law_pow_jm1 = 0.0;           // (2q+1)^(j-1)
    double law_pow_j = 0.0;             // (2q+1)^j
    char published_follows = '?';       // 'l' = lower law (j-1), 'j', '?'
};

/// Audits the published table: closed-form energies, row ratios, and which
/// of the two candidate scaling laws the published rows follow.  The
/// published rows scale as (2q+1)^(j-1) even though the closed forms scale
/// as (2q+1)^j.
std::vector<TableAuditRow> table_audit(std::span<const double> widths,
                                       std::span<const int> quantum_numbers,
                                       const PhysicalConstants& constants);

/// The published table values (eV), or nullopt for cells the table lacks.
std::optional<double> published_table_energy(int j, double width_l, int q);

} // namespace ngqm
