#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ngqm/reports.hpp"

namespace {

struct CommonOptions {
    std::string geometry = "3G";
    double width = 1.0;
    int levels = 5;
    int n = 0;
    std::string mass = "electron";
    std::string format = "csv";
    std::string out_path;
    std::string config_path;
    bool textbook_3g = false;
    double k_min = 0.1;
    double k_max = 10.0;
    int k_points = 33;
};

void add_common(CLI::App* cmd, CommonOptions& options) {
    cmd->add_option("--geometry", options.geometry, "Geometry: 2G..5G or j=N")
        ->capture_default_str();
    cmd->add_option("--width", options.width, "Well width l in nm")->capture_default_str();
    cmd->add_option("--levels", options.levels, "Number of levels n = 0..levels-1")
        ->capture_default_str();
    cmd->add_option("--n", options.n, "Quantum number")->capture_default_str();
    cmd->add_option("--mass", options.mass, "`electron` or a rest energy m c^2 in eV")
        ->capture_default_str();
    cmd->add_option("--format", options.format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", options.out_path, "Write the report to a file");
    cmd->add_option("--config", options.config_path,
                    "Constants config file (fallback: NGQM_CONFIG env var)");
    cmd->add_flag("--textbook-3g", options.textbook_3g,
                  "Use the textbook sin((n+1) pi x / l) family for 3G");
}

ngqm::ReportRequest build_request(const CommonOptions& options, ngqm::Command command) {
    ngqm::ReportRequest request;
    request.command = command;
    request.geometry = ngqm::parse_geometry(options.geometry);
    request.width_l = options.width;
    request.levels = options.levels;
    request.n = options.n;
    request.textbook_3g = options.textbook_3g;
    request.format =
        options.format == "json" ? ngqm::OutputFormat::json : ngqm::OutputFormat::csv;
    if (!options.out_path.empty()) request.out_path = options.out_path;
    request.k_min = options.k_min;
    request.k_max = options.k_max;
    request.k_points = options.k_points;

    std::string config = options.config_path;
    if (config.empty()) {
        if (const char* env = std::getenv("NGQM_CONFIG")) config = env;
    }
    if (!config.empty()) request.constants = ngqm::PhysicalConstants::load_config(config);
    // an explicit numeric --mass overrides the config; `electron` keeps it
    if (options.mass != "electron") request.constants.rest_energy = ngqm::parse_mass(options.mass);
    return request;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generalized (L^j) quantum mechanics: well spectra, uncertainty products,"
                 " dispersion curves, and a numeric verification suite"};
    app.require_subcommand(1);

    CommonOptions options;
    ngqm::Command command = ngqm::Command::spectrum;

    auto* spectrum = app.add_subcommand(
        "spectrum", "Bound-level table: n, k_n, E_n, normalization, dispersion ratio");
    add_common(spectrum, options);
    spectrum->callback([&] { command = ngqm::Command::spectrum; });

    auto* uncertainty = app.add_subcommand(
        "uncertainty", "Generalized uncertainty product for one level");
    add_common(uncertainty, options);
    uncertainty->callback([&] { command = ngqm::Command::uncertainty; });

    auto* dispersion =
        app.add_subcommand("dispersion", "E(k) table with log-log slope and velocities");
    add_common(dispersion, options);
    dispersion->add_option("--k-min", options.k_min, "Grid start, 1/nm")->capture_default_str();
    dispersion->add_option("--k-max", options.k_max, "Grid end, 1/nm")->capture_default_str();
    dispersion->add_option("--k-points", options.k_points, "Grid points")->capture_default_str();
    dispersion->callback([&] { command = ngqm::Command::dispersion; });

    auto* verify = app.add_subcommand("verify", "Run the full verification battery");
    add_common(verify, options);
    verify->callback([&] { command = ngqm::Command::verify; });

    auto* dump = app.add_subcommand("state-dump", "Sampled (x, phi, phi^j) rows for one level");
    add_common(dump, options);
    dump->callback([&] { command = ngqm::Command::state_dump; });

    auto* audit = app.add_subcommand(
        "table-audit", "Closed forms vs the published bound-electron energy table");
    add_common(audit, options);
    audit->callback([&] { command = ngqm::Command::table_audit; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return ngqm::ExitStatus::usage;
    }

    try {
        const ngqm::ReportRequest request = build_request(options, command);
        return ngqm::dispatch(request, std::cout, std::cerr);
    } catch (const ngqm::ConfigError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return ngqm::ExitStatus::usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ngqm::ExitStatus::computation;
    }
}
