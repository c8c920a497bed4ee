#pragma once

#include <string>

namespace ngqm {

/// Laboratory units: energies in eV, lengths in nm, wavenumbers in 1/nm.
/// Masses enter only as rest energies m c^2 (eV) and hbar only as
/// hbar c (eV nm), so no unit conversions hide inside formulas.
struct PhysicalConstants {
    double hbar_c = 197.3269804;       // eV nm (CODATA)
    double rest_energy = 510998.95;    // eV, electron m c^2 (CODATA)

    static PhysicalConstants electron() { return {}; }

    /// Plain `key = value` file; keys `hbar_c_ev_nm` and
    /// `electron_rest_energy_ev`, `#` comments allowed.
    static PhysicalConstants load_config(const std::string& path);

    void validate() const;
};

} // namespace ngqm
