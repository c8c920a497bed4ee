#include "ngqm/constants.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "ngqm/errors.hpp"

namespace ngqm {

namespace {
std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}
} // namespace

void PhysicalConstants::validate() const {
    if (!(hbar_c > 0.0) || !std::isfinite(hbar_c))
        throw ConfigError("hbar_c_ev_nm must be a positive finite number");
    if (!(rest_energy > 0.0) || !std::isfinite(rest_energy))
        throw ConfigError("electron_rest_energy_ev must be a positive finite number");
}

PhysicalConstants PhysicalConstants::load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open constants config: " + path);

    PhysicalConstants constants;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected `key = value`");
        const std::string key = trim(line.substr(0, eq));
        const std::string value_text = trim(line.substr(eq + 1));

        double value = 0.0;
        try {
            size_t used = 0;
            value = std::stod(value_text, &used);
            if (used != value_text.size()) throw std::invalid_argument(value_text);
        } catch (const std::exception&) {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": bad number `" +
                              value_text + "`");
        }

        if (key == "hbar_c_ev_nm") {
            constants.hbar_c = value;
        } else if (key == "electron_rest_energy_ev") {
            constants.rest_energy = value;
        } else {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": unknown key `" + key + "`");
        }
    }
    constants.validate();
    return constants;
}

} // namespace ngqm
