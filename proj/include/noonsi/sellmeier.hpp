#pragma once

#include <array>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "noonsi/errors.hpp"
#include "noonsi/units.hpp"

namespace noonsi {

/// One Sellmeier coefficient set:
///   n^2(lambda) = a0 + a1/(lambda^2 - a2) + a3/(lambda^2 - a4) + a5 * lambda^2
/// with lambda in micrometers. Covers the common KTP-style fits.
struct SellmeierCoefficients {
    std::array<double, 6> a{};

    double index(double lambda_um) const {
        const double l2 = lambda_um * lambda_um;
        const double n2 = a[0] + a[1] / (l2 - a[2]) + a[3] / (l2 - a[4]) + a[5] * l2;
        if (!(n2 > 0.0) || !std::isfinite(n2))
            throw NumericError("sellmeier: n^2 not positive/finite at lambda = " +
                               std::to_string(lambda_um) + " um");
        return std::sqrt(n2);
    }

    /// Wavenumber k(omega) = n(lambda) * omega / c, in rad/mm.
    double wavenumber(double omega_rad_per_ps) const {
        const double lambda_nm = wavelength_from_angular_frequency(omega_rad_per_ps);
        const double n = index(lambda_nm * 1e-3);
        // omega/c in rad/nm, converted to rad/mm
        return n * omega_rad_per_ps / kSpeedOfLightNmPerPs * 1e6;
    }
};

/// Per-wave Sellmeier table loaded from a key-value text file with
/// [pump], [signal], [idler] sections, each carrying keys a0..a5.
/// The file's provenance is the user's responsibility and should be
/// documented next to the data.
struct SellmeierTable {
    SellmeierCoefficients pump, signal, idler;

    static SellmeierTable load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw IoError("cannot open sellmeier table: " + path);
        SellmeierTable t;
        std::map<std::string, SellmeierCoefficients*> sections{
            {"pump", &t.pump}, {"signal", &t.signal}, {"idler", &t.idler}};
        std::map<std::string, int> seen;
        SellmeierCoefficients* current = nullptr;
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            auto trim = [](std::string s) {
                const auto b = s.find_first_not_of(" \t\r");
                const auto e = s.find_last_not_of(" \t\r");
                return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
            };
            line = trim(line);
            if (line.empty()) continue;
            if (line.front() == '[') {
                if (line.back() != ']')
                    throw ConfigError("sellmeier table line " + std::to_string(lineno) +
                                      ": malformed section header");
                const std::string name = trim(line.substr(1, line.size() - 2));
                auto it = sections.find(name);
                if (it == sections.end())
                    throw ConfigError("sellmeier table: unknown section [" + name + "]");
                current = it->second;
                continue;
            }
            const auto eq = line.find('=');
            if (eq == std::string::npos || current == nullptr)
                throw ConfigError("sellmeier table line " + std::to_string(lineno) +
                                  ": expected key = value inside a section");
            const std::string key = trim(line.substr(0, eq));
            const std::string val = trim(line.substr(eq + 1));
            if (key.size() != 2 || key[0] != 'a' || key[1] < '0' || key[1] > '5')
                throw ConfigError("sellmeier table: unknown key '" + key + "'");
            current->a[static_cast<std::size_t>(key[1] - '0')] = std::stod(val);
            ++seen[key];
        }
        return t;
    }
};

} // namespace noonsi
