#include "ngqm/reports.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <variant>

#include <json.hpp>

namespace ngqm {

namespace {

using Json = nlohmann::ordered_json;
using Cell = std::variant<std::monostate, double, long long, bool, std::string>;

std::string fmt_double(double v) {
    if (v == 0.0) return "0"; // avoid "-0"
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.12g", v);
    return buffer;
}

std::string csv_escape(const std::string& s) {
    bool needs_quotes = s.find_first_of(",\"\n\r") != std::string::npos;
    if (!needs_quotes) return s;
    std::string out;
    out.reserve(s.size() + 2);
    out.push_back('"');
    for (char c : s) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

struct ReportTable {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

void write_csv(const ReportTable& table, std::ostream& os) {
    for (size_t c = 0; c < table.columns.size(); ++c)
        os << (c ? "," : "") << table.columns[c];
    os << "\n";
    for (const auto& row : table.rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            if (c) os << ",";
            std::visit(
                [&](const auto& value) {
                    using T = std::decay_t<decltype(value)>;
                    if constexpr (std::is_same_v<T, std::monostate>) {
                        // empty cell
                    } else if constexpr (std::is_same_v<T, double>) {
                        os << fmt_double(value);
                    } else if constexpr (std::is_same_v<T, long long>) {
                        os << value;
                    } else if constexpr (std::is_same_v<T, bool>) {
                        os << (value ? "true" : "false");
                    } else {
                        os << csv_escape(value);
                    }
                },
                row[c]);
        }
        os << "\n";
    }
}

Json meta_block(const ReportRequest& request, const std::string& command) {
    Json meta;
    meta["version"] = kVersion;
    meta["command"] = command;
    meta["hbar_c_ev_nm"] = request.constants.hbar_c;
    meta["rest_energy_ev"] = request.constants.rest_energy;
    return meta;
}

void write_json(const ReportTable& table, const ReportRequest& request,
                const std::string& command, std::ostream& os) {
    Json doc;
    doc["meta"] = meta_block(request, command);
    Json rows = Json::array();
    for (const auto& row : table.rows) {
        Json obj;
        for (size_t c = 0; c < row.size(); ++c) {
            std::visit(
                [&](const auto& value) {
                    using T = std::decay_t<decltype(value)>;
                    if constexpr (std::is_same_v<T, std::monostate>)
                        obj[table.columns[c]] = nullptr;
                    else
                        obj[table.columns[c]] = value;
                },
                row[c]);
        }
        rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    os << doc.dump(2) << "\n";
}

void emit(const ReportTable& table, const ReportRequest& request, const std::string& command,
          std::ostream& os) {
    if (request.format == OutputFormat::json)
        write_json(table, request, command, os);
    else
        write_csv(table, os);
}

Cell opt_cell(const std::optional<double>& v) {
    if (v) return Cell{*v};
    return Cell{std::monostate{}};
}

} // namespace

GeometryOrder parse_geometry(const std::string& text) {
    if (text.size() >= 2 && (text.back() == 'G' || text.back() == 'g')) {
        try {
            const int label = std::stoi(text.substr(0, text.size() - 1));
            return GeometryOrder::from_label(label);
        } catch (const UnsupportedGeometry&) {
            throw;
        } catch (const std::exception&) {
            throw ConfigError("bad geometry `" + text + "` (use 2G..5G or j=N)");
        }
    }
    if (text.rfind("j=", 0) == 0) {
        try {
            return GeometryOrder::from_j(std::stoi(text.substr(2)));
        } catch (const UnsupportedGeometry&) {
            throw;
        } catch (const std::exception&) {
            throw ConfigError("bad geometry `" + text + "` (use 2G..5G or j=N)");
        }
    }
    throw ConfigError("bad geometry `" + text + "` (use 2G..5G or j=N)");
}

double parse_mass(const std::string& text) {
    if (text == "electron") return PhysicalConstants{}.rest_energy;
    try {
        size_t used = 0;
        const double value = std::stod(text, &used);
        if (used != text.size() || !(value > 0.0)) throw std::invalid_argument(text);
        return value;
    } catch (const std::exception&) {
        throw ConfigError("bad --mass `" + text + "` (use `electron` or a rest energy in eV)");
    }
}

int run_spectrum(const ReportRequest& request, std::ostream& out, std::ostream& err) {
    if (request.geometry.j() == 1) {
        err << "spectrum: " << request.geometry.label_string()
            << " (j=1) has no bound states; the linear-dispersion well admits only free"
               " decaying solutions\n";
        return ExitStatus::computation;
    }
    const WellConfig well{request.width_l, request.constants, request.geometry};
    const WellFamily family =
        request.textbook_3g ? WellFamily::textbook_3g : WellFamily::printed;

    ReportTable table;
    table.columns = {"n", "k_n_per_nm", "energy_ev", "normalization", "dispersion_ratio"};
    for (int n = 0; n < request.levels; ++n) {
        const BoundState state = make_bound_state(well, n, family);
        const double ratio =
            state.energy / dispersion_energy(state.k_n, state.order, state.constants);
        table.add_row({Cell{static_cast<long long>(n)}, Cell{state.k_n}, Cell{state.energy},
                       Cell{state.normalization}, Cell{ratio}});
    }
    emit(table, request, "spectrum", out);
    return ExitStatus::ok;
}

int run_uncertainty(const ReportRequest& request, std::ostream& out, std::ostream&) {
    const WellConfig well{request.width_l, request.constants, request.geometry};
    const WellFamily family =
        request.textbook_3g ? WellFamily::textbook_3g : WellFamily::printed;
    const BoundState state = make_bound_state(well, request.n, family);
    const UncertaintyReport report = heisenberg_check(state);

    const double l = request.width_l;
    const int j = request.geometry.j();

    ReportTable table;
    table.columns = {"geometry",
                     "family",
                     "n",
                     "delta_x_over_l",
                     "delta_p_l_over_hbar",
                     "product_over_hbar",
                     "satisfies_heisenberg",
                     "published_product",
                     "published_rel_deviation",
                     "mean_p_boundary_l_over_hbar",
                     "p_pow_j_quad",
                     "p_pow_j_published",
                     "delta_p_published_src_l_over_hbar",
                     "product_published_src",
                     "branch_note"};

    std::optional<double> p_quad_scaled;
    if (report.p_pow_j_quadrature) p_quad_scaled = *report.p_pow_j_quadrature * std::pow(l, j);
    std::optional<double> p_pub_scaled;
    if (report.p_pow_j_published) p_pub_scaled = *report.p_pow_j_published * std::pow(l, j);
    std::optional<double> mean_p_scaled;
    if (report.mean_p_boundary_magnitude) mean_p_scaled = *report.mean_p_boundary_magnitude * l;
    std::optional<double> dp_pub_scaled;
    if (report.delta_p_published_source) dp_pub_scaled = *report.delta_p_published_source * l;

    table.add_row({Cell{request.geometry.label_string()},
                   Cell{std::string(family == WellFamily::textbook_3g ? "textbook" : "printed")},
                   Cell{static_cast<long long>(request.n)},
                   Cell{report.delta_x / l},
                   Cell{report.delta_p * l},
                   Cell{report.product_over_hbar},
                   Cell{report.satisfies_heisenberg},
                   opt_cell(report.diagnostics.published_value),
                   opt_cell(report.diagnostics.relative_deviation),
                   opt_cell(mean_p_scaled),
                   opt_cell(p_quad_scaled),
                   opt_cell(p_pub_scaled),
                   opt_cell(dp_pub_scaled),
                   opt_cell(report.product_published_source),
                   Cell{report.diagnostics.branch_note}});
    emit(table, request, "uncertainty", out);
    return ExitStatus::ok;
}

int run_dispersion(const ReportRequest& request, std::ostream& out, std::ostream&) {
    const int points = request.k_points;
    std::vector<double> k(points), e(points);
    const double log_min = std::log(request.k_min);
    const double log_max = std::log(request.k_max);
    for (int i = 0; i < points; ++i) {
        k[i] = std::exp(log_min + (log_max - log_min) * i / (points - 1.0));
        e[i] = dispersion_energy(k[i], request.geometry, request.constants);
    }

    ReportTable table;
    table.columns = {"k_per_nm", "energy_ev", "e_over_pc", "log_slope",
                     "group_velocity_over_c_derived"};
    for (int i = 0; i < points; ++i) {
        const int lo = std::max(0, i - 1);
        const int hi = std::min(points - 1, i + 1);
        const double slope =
            (std::log(e[hi]) - std::log(e[lo])) / (std::log(k[hi]) - std::log(k[lo]));
        // dE/dp = dE/d(hbar k); in units of c that is (dE/dk)/(hbar c)
        const double group = (e[hi] - e[lo]) / (k[hi] - k[lo]) / request.constants.hbar_c;
        const double phase = e[i] / (request.constants.hbar_c * k[i]);
        table.add_row({Cell{k[i]}, Cell{e[i]}, Cell{phase}, Cell{slope}, Cell{group}});
    }
    emit(table, request, "dispersion", out);
    return ExitStatus::ok;
}

int run_state_dump(const ReportRequest& request, std::ostream& out, std::ostream& err) {
    if (request.geometry.j() == 1) {
        err << "state-dump: no bound states for j=1\n";
        return ExitStatus::computation;
    }
    const WellConfig well{request.width_l, request.constants, request.geometry};
    const WellFamily family =
        request.textbook_3g ? WellFamily::textbook_3g : WellFamily::printed;
    const BoundState state = make_bound_state(well, request.n, family);

    constexpr int kSamples = 257; // uniform grid incl. both walls
    ReportTable table;
    table.columns = {"x_nm", "phi", "phi_pow_j"};
    for (int i = 0; i < kSamples; ++i) {
        const double x = request.width_l * i / (kSamples - 1.0);
        const double phi = eval_spatial(state, x);
        table.add_row({Cell{x}, Cell{phi}, Cell{probability_density(state, x)}});
    }
    emit(table, request, "state-dump", out);
    return ExitStatus::ok;
}

int run_table_audit(const ReportRequest& request, std::ostream& out, std::ostream&) {
    const std::array<double, 3> widths = {1.0, 0.25, 0.05};
    const std::array<int, 5> qs = {0, 3, 6, 9, 12};
    const auto rows = table_audit(widths, qs, request.constants);

    ReportTable table;
    table.columns = {"geometry",       "width_nm",   "q",
                     "closed_form_ev", "published_ev", "published_ratio_to_ground",
                     "law_pow_jm1",    "law_pow_j",  "published_follows"};
    for (const auto& row : rows) {
        table.add_row({Cell{GeometryOrder::from_j(row.j).label_string()},
                       Cell{row.width_l},
                       Cell{static_cast<long long>(row.q)},
                       Cell{row.closed_form_ev},
                       opt_cell(row.published_ev),
                       opt_cell(row.published_ratio_to_ground),
                       Cell{row.law_pow_jm1},
                       Cell{row.law_pow_j},
                       Cell{std::string(1, row.published_follows)}});
    }
    emit(table, request, "table-audit", out);
    return ExitStatus::ok;
}

namespace {

struct VerifyContext {
    std::ostream& out;
    int passed = 0;
    int deviations = 0;
    int failed = 0;

    void pass(const std::string& name, const std::string& detail) {
        out << "[PASS] " << name << ": " << detail << "\n";
        ++passed;
    }
    void deviation(const std::string& name, const std::string& detail) {
        out << "[DEVIATION] " << name << ": " << detail << " (documented, expected)\n";
        ++deviations;
    }
    void fail(const std::string& name, const std::string& detail) {
        out << "[FAIL] " << name << ": " << detail << "\n";
        ++failed;
    }
    /// expected-pass check
    void check(bool ok, const std::string& name, const std::string& detail) {
        ok ? pass(name, detail) : fail(name, detail);
    }
    /// documented-deviation check: `present` confirms the deviation is there
    void check_deviation(bool present, const std::string& name, const std::string& detail) {
        present ? deviation(name, detail)
                : fail(name, detail + " -- expected deviation not detected");
    }
};

std::string g(double v) { return fmt_double(v); }

} // namespace

int run_verify(const ReportRequest& request, std::ostream& out, std::ostream&) {
    const PhysicalConstants& constants = request.constants;
    VerifyContext v{out};

    out << "verify report (ngqm " << kVersion << ")\n";
    out << "constants: hbar_c=" << g(constants.hbar_c)
        << " eV nm, rest_energy=" << g(constants.rest_energy) << " eV\n";

    // --- root identities ---------------------------------------------------
    {
        double worst_identity = 0.0;
        double worst_vieta = 0.0;
        for (int j = 1; j <= 8; ++j) {
            const RootSet set = roots_of_negative_unity(GeometryOrder::from_j(j));
            Complex product(1.0, 0.0);
            for (const Complex& r : set.roots) {
                Complex power(1.0, 0.0);
                for (int m = 0; m < j; ++m) power *= r;
                worst_identity = std::max(worst_identity, std::abs(power + Complex(1.0, 0.0)));
                product *= r;
            }
            const double parity = (j % 2 == 0) ? 1.0 : -1.0;
            worst_vieta = std::max(worst_vieta, std::abs(product - Complex(parity, 0.0)));
        }
        v.check(worst_identity <= 1e-12, "root-identity-j1..8",
                "max |r^j + 1| = " + g(worst_identity) + ", limit 1e-12");
        v.check(worst_vieta <= 1e-12, "root-vieta-j1..8",
                "max |prod r - (-1)^j| = " + g(worst_vieta) + ", limit 1e-12");
    }
    {
        const double s3 = std::sqrt(3.0) / 2.0;
        const double s2 = 1.0 / std::sqrt(2.0);
        const std::vector<Complex> expected3 = {{0.5, s3}, {-1.0, 0.0}, {0.5, -s3}};
        const std::vector<Complex> expected4 = {{s2, s2}, {-s2, s2}, {-s2, -s2}, {s2, -s2}};
        double worst = 0.0;
        const RootSet r3 = roots_of_negative_unity(GeometryOrder::from_j(3));
        const RootSet r4 = roots_of_negative_unity(GeometryOrder::from_j(4));
        for (size_t i = 0; i < 3; ++i) worst = std::max(worst, std::abs(r3.roots[i] - expected3[i]));
        for (size_t i = 0; i < 4; ++i) worst = std::max(worst, std::abs(r4.roots[i] - expected4[i]));
        v.check(worst <= 1e-15, "named-roots-j3-j4",
                "max deviation from the printed root values = " + g(worst) + ", limit 1e-15");
    }

    // --- operator eigenvalue chains -----------------------------------------
    for (int j = 1; j <= 4; ++j) {
        const auto chain = operator_eigenvalue_check(GeometryOrder::from_j(j), 1.0);
        v.check(chain.e_residual <= 1e-12, "energy-chain-j" + std::to_string(j),
                "E_hat on the separable clock gives +E, |chain-1| = " + g(chain.e_residual));
        if (j == 3) {
            v.check_deviation(chain.momentum_sign_deviation, "momentum-chain-j3",
                              "p = -hbar k (root product -1)");
        } else {
            v.check(chain.p_residual <= 1e-12, "momentum-chain-j" + std::to_string(j),
                    "p = +hbar k, |chain-1| = " + g(chain.p_residual));
        }
        if (j >= 3) {
            v.check_deviation(chain.printed_clock_deviation,
                              "printed-clock-j" + std::to_string(j),
                              "printed decay phase does not return +E (chain = " +
                                  g(chain.printed_clock_eigenvalue.real()) + (chain.printed_clock_eigenvalue.imag() < 0 ? "-" : "+") +
                                  g(std::abs(chain.printed_clock_eigenvalue.imag())) + "i)");
        }
    }

    // --- bound-state residuals ----------------------------------------------
    for (int j = 2; j <= 4; ++j) {
        const GeometryOrder order = GeometryOrder::from_j(j);
        const WellConfig well{1.0, constants, order};
        double worst_ode = 0.0;
        double worst_wall = 0.0;
        double worst_zero_j4 = 0.0;
        double zero_j23 = 1.0;
        bool fd_ok = true;
        for (int n = 0; n <= 5; ++n) {
            const BoundState state = make_bound_state(well, n);
            const ResidualReport ode = ode_residual(state, well, 101);
            worst_ode = std::max(worst_ode, ode.rel_to_scale);
            fd_ok = fd_ok && ode.note == "fd-crosscheck-ok";
            const BoundaryResidual wall = boundary_residual(state);
            worst_wall = std::max(worst_wall, wall.at_width);
            if (j == 4)
                worst_zero_j4 = std::max(worst_zero_j4, wall.at_zero);
            else
                zero_j23 = std::min(zero_j23, wall.at_zero);
        }
        const std::string tag = GeometryOrder::from_j(j).label_string();
        v.check(worst_ode <= 1e-8 && fd_ok, "ode-residual-" + tag + "-n0..5",
                "max relative residual = " + g(worst_ode) + ", limit 1e-08, fd crosscheck " +
                    (fd_ok ? "ok" : "DISAGREES"));
        v.check(worst_wall <= 1e-10, "boundary-x=l-" + tag,
                "max |phi(l)|/max|phi| = " + g(worst_wall) + ", limit 1e-10");
        if (j == 4) {
            v.check(worst_zero_j4 <= 1e-10, "boundary-x=0-" + tag,
                    "max |phi(0)|/max|phi| = " + g(worst_zero_j4) + ", limit 1e-10");
        } else {
            v.check_deviation(zero_j23 >= 1e-2, "boundary-x=0-" + tag,
                              "printed family keeps |phi(0)|/max|phi| = " + g(zero_j23) +
                                  " at the left wall");
        }
    }

    // --- normalization round-trips -------------------------------------------
    {
        const WellConfig well2{1.0, constants, GeometryOrder::from_j(2)};
        double worst_printed = 0.0;
        double worst_textbook = 0.0;
        for (int n = 0; n <= 5; ++n) {
            worst_printed = std::max(
                worst_printed,
                std::abs(density_integral(make_bound_state(well2, n)) - 1.0));
            worst_textbook = std::max(
                worst_textbook,
                std::abs(density_integral(
                             make_bound_state(well2, n, WellFamily::textbook_3g)) -
                         1.0));
        }
        v.check(worst_printed <= 1e-10, "normalization-3G-printed-n0..5",
                "max |int phi^2 - 1| = " + g(worst_printed) + ", limit 1e-10");
        v.check(worst_textbook <= 1e-10, "normalization-3G-textbook-n0..5",
                "max |int phi^2 - 1| = " + g(worst_textbook) + ", limit 1e-10");

        const WellConfig well4{1.0, constants, GeometryOrder::from_j(4)};
        double worst4 = 0.0;
        for (int n = 0; n <= 5; ++n)
            worst4 = std::max(worst4,
                              std::abs(density_integral(make_bound_state(well4, n)) - 1.0));
        v.check(worst4 <= 1e-6, "normalization-5G-n0..5",
                "max |int phi^4 - 1| = " + g(worst4) + ", limit 1e-06");

        // the printed cubic constant over-normalizes by an exact closed-form
        // factor -> expected deviation, pinned against that factor
        const WellConfig well3{1.0, constants, GeometryOrder::from_j(3)};
        double worst_factor_err = 0.0;
        double measured_n0 = 0.0;
        for (int n = 0; n <= 5; ++n) {
            const double measured = density_integral(make_bound_state(well3, n));
            if (n == 0) measured_n0 = measured;
            const double damping = std::exp(-std::sqrt(3.0) * (2 * n + 1) * M_PI / 2.0);
            const double sign = (n % 2 == 0) ? 1.0 : -1.0;
            const double expected = (5.0 * std::sqrt(3.0) + 3.0 * sign * damping) /
                                    (2.0 * (2.0 * std::sqrt(3.0) / 3.0 + sign * damping));
            worst_factor_err = std::max(worst_factor_err, std::abs(measured / expected - 1.0));
        }
        v.check_deviation(measured_n0 > 3.5 && measured_n0 < 3.7 && worst_factor_err <= 1e-9,
                          "normalization-4G-n0..5",
                          "int phi^3 = " + g(measured_n0) +
                              " at n=0 (printed constant over-normalizes; matches the exact"
                              " excess factor to " +
                              g(worst_factor_err) + ")");

        const double n0 = normalization_constant(GeometryOrder::from_j(4), 0, 1.0);
        const double approx = std::pow(15.4, 0.25);
        v.check(std::abs(n0 / approx - 1.0) <= 0.01, "normalization-5G-n0-approx",
                "N(0) = " + g(n0) + " vs published (15.4/l)^(1/4) = " + g(approx) +
                    ", limit 1%");
    }

    // --- free 2G states -------------------------------------------------------
    {
        double worst = 0.0;
        for (double k : {0.1, 1.0, 10.0}) {
            const FreeState half = free_state_2g(k, std::nullopt, constants);
            const double cut = 40.0 / k; // tail beyond carries exp(-40) ~ 4e-18
            const double integral =
                integrate([&](double x) { return half.normalization * std::exp(-k * x); }, 0.0,
                          cut)
                    .value;
            worst = std::max(worst, std::abs(integral - 1.0));

            const FreeState boxed = free_state_2g(k, 1.0, constants);
            const double boxed_integral =
                integrate([&](double x) { return boxed.normalization * std::exp(-k * x); }, 0.0,
                          1.0)
                    .value;
            worst = std::max(worst, std::abs(boxed_integral - 1.0));
        }
        v.check(worst <= 1e-10, "free-2G-normalization",
                "max |int N e^(-kx) - 1| = " + g(worst) + " over k in {0.1,1,10}, limit 1e-10");
    }

    // --- dispersion consistency ------------------------------------------------
    {
        const std::array<std::pair<int, double>, 3> expected = {{{2, 4.0}, {3, 1.0}, {4, 0.5}}};
        double worst = 0.0;
        for (const auto& [j, ratio] : expected) {
            const WellConfig well{1.0, constants, GeometryOrder::from_j(j)};
            for (int n = 0; n <= 5; ++n)
                worst = std::max(
                    worst,
                    std::abs(dispersion_consistency_ratio(GeometryOrder::from_j(j), n, well) -
                             ratio));
        }
        v.check(worst <= 1e-9, "dispersion-consistency-ratios",
                "printed/dispersion = 4.0 (3G), 1.0 (4G), 0.5 (5G); max deviation = " +
                    g(worst) + ", limit 1e-09");
    }

    // --- scaling laws -------------------------------------------------------------
    {
        double worst_n = 0.0;
        double worst_l = 0.0;
        for (int j = 2; j <= 4; ++j) {
            const GeometryOrder order = GeometryOrder::from_j(j);
            const WellConfig well{1.0, constants, order};
            const double ground = eigenenergy_closed_form(order, 0, well);
            for (int n = 1; n <= 12; ++n) {
                const double ratio = eigenenergy_closed_form(order, n, well) / ground;
                worst_n = std::max(worst_n,
                                   std::abs(ratio / std::pow(2.0 * n + 1.0, j) - 1.0));
            }
            double reference = 0.0;
            for (double l : {0.05, 0.25, 1.0}) {
                const WellConfig scaled{l, constants, order};
                const double invariant =
                    eigenenergy_closed_form(order, 0, scaled) * std::pow(l, j);
                if (reference == 0.0)
                    reference = invariant;
                else
                    worst_l = std::max(worst_l, std::abs(invariant / reference - 1.0));
            }
        }
        v.check(worst_n <= 1e-12, "scaling-quantum-number",
                "E(n)/E(0) = (2n+1)^j for n <= 12; max deviation = " + g(worst_n) +
                    ", limit 1e-12");
        v.check(worst_l <= 1e-10, "scaling-width",
                "E l^j invariant over l in {0.05,0.25,1}; max deviation = " + g(worst_l) +
                    ", limit 1e-10");
    }

    // --- table audit ------------------------------------------------------------
    {
        const std::array<double, 3> widths = {1.0, 0.25, 0.05};
        const std::array<int, 5> qs = {0, 3, 6, 9, 12};
        bool all_lower_law = true;
        for (const auto& row : table_audit(widths, qs, constants))
            if (row.q > 0 && row.published_ev && row.published_follows != 'l')
                all_lower_law = false;
        v.check(all_lower_law, "table-audit-scaling",
                "published rows follow (2q+1)^(j-1), not the closed forms' (2q+1)^j");
    }

    // --- hermiticity probes ---------------------------------------------------------
    {
        const WellConfig well2{1.0, constants, GeometryOrder::from_j(2)};
        const BoundState f2 = make_bound_state(well2, 0, WellFamily::textbook_3g);
        const BoundState g2 = make_bound_state(well2, 1, WellFamily::textbook_3g);
        const HermiticityReport h2 =
            hermiticity_defect(GeometryOrder::from_j(2), f2, g2, well2);
        v.check(h2.defect <= 1e-8, "hermiticity-3G-textbook",
                "defect = " + g(h2.defect) + ", limit 1e-08");

        const WellConfig well3{1.0, constants, GeometryOrder::from_j(3)};
        const BoundState f3 = make_bound_state(well3, 0);
        const BoundState g3 = make_bound_state(well3, 1);
        const HermiticityReport h3 =
            hermiticity_defect(GeometryOrder::from_j(3), f3, g3, well3);
        v.check_deviation(h3.defect > 1e-2, "hermiticity-4G",
                          "odd-order operator defect = " + g(h3.defect) +
                              " for the (n=0, n=1) pair");
    }

    // --- stationary clocks ------------------------------------------------------------
    {
        const WellConfig well2{1.0, constants, GeometryOrder::from_j(2)};
        const BoundState s2 = make_bound_state(well2, 0);
        double worst = 0.0;
        for (int i = 0; i <= 20; ++i)
            worst = std::max(worst, std::abs(std::abs(eval_temporal(s2, 0.4 * i)) - 1.0));
        v.check(worst <= 1e-12, "clock-modulus-3G",
                "|Theta| = 1, max deviation " + g(worst));

        bool monotone = true;
        for (int j = 3; j <= 4; ++j) {
            const WellConfig well{1.0, constants, GeometryOrder::from_j(j)};
            const BoundState state = make_bound_state(well, 0);
            double previous = 1.0 + 1e-15;
            for (int i = 0; i <= 20; ++i) {
                const double modulus = std::abs(eval_temporal(state, 0.4 * i));
                if (modulus > previous) monotone = false;
                previous = modulus;
            }
        }
        v.check(monotone, "clock-decay-4G-5G",
                "|Theta| monotone nonincreasing for the printed decay phases");
    }

    out << "summary: " << v.passed << " passed, " << v.deviations
        << " expected deviations, " << v.failed << " failed\n";
    return v.failed == 0 ? ExitStatus::ok : ExitStatus::verification_failed;
}

int dispatch(const ReportRequest& request, std::ostream& out, std::ostream& err) {
    try {
        if (request.levels < 1) {
            err << "usage: --levels must be >= 1\n";
            return ExitStatus::usage;
        }
        if (!(request.width_l > 0.0)) {
            err << "usage: --width must be positive\n";
            return ExitStatus::usage;
        }
        if (request.command == Command::dispersion &&
            (!(request.k_min > 0.0) || !(request.k_max > request.k_min) || request.k_points < 2)) {
            err << "usage: dispersion needs 0 < k-min < k-max and k-points >= 2\n";
            return ExitStatus::usage;
        }
        request.constants.validate();

        std::ostringstream buffer;
        int code = ExitStatus::ok;
        switch (request.command) {
            case Command::spectrum: code = run_spectrum(request, buffer, err); break;
            case Command::uncertainty: code = run_uncertainty(request, buffer, err); break;
            case Command::dispersion: code = run_dispersion(request, buffer, err); break;
            case Command::verify: code = run_verify(request, buffer, err); break;
            case Command::state_dump: code = run_state_dump(request, buffer, err); break;
            case Command::table_audit: code = run_table_audit(request, buffer, err); break;
        }

        if (request.out_path) {
            std::ofstream file(*request.out_path, std::ios::binary);
            if (!file) {
                err << "cannot open output file: " << *request.out_path << "\n";
                return ExitStatus::computation;
            }
            file << buffer.str();
        } else {
            out << buffer.str();
        }
        return code;
    } catch (const ConfigError& e) {
        err << "usage error: " << e.what() << "\n";
        return ExitStatus::usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return ExitStatus::computation;
    }
}

} // namespace ngqm
