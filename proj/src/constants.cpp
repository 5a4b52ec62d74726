#include "centrefall/constants.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace centrefall {

double convert_polarizability(double cubic_angstrom) {
    if (cubic_angstrom < 0.0) {
        throw ValidationError("polarizability volume must be non-negative, got " +
                              std::to_string(cubic_angstrom) + " A^3");
    }
    return cubic_angstrom * 1e-30;
}

void Particle::validate() const {
    if (!(mass > 0.0)) throw ValidationError("particle mass must be positive: " + name);
    if (!(alpha_vol > 0.0)) throw ValidationError("particle polarizability must be positive: " + name);
}

namespace {

struct BuiltinAtom {
    const char* name;
    double mass_u;
    double alpha_A3;
};

// Isotope masses in u; polarizability volumes in A^3.
constexpr BuiltinAtom kAtoms[] = {
    {"Li7", 7.016003, 24.3},
    {"H1", 1.007825, 0.667},
    {"He3", 3.016029, 0.205},
};

}  // namespace

Particle builtin_particle(std::string_view name) {
    for (const auto& a : kAtoms) {
        if (name == a.name) {
            return Particle{std::string(a.name), a.mass_u * kCodata.amu,
                            convert_polarizability(a.alpha_A3)};
        }
    }
    throw ValidationError("unknown particle \"" + std::string(name) +
                          "\"; built-ins: Li7, H1, He3");
}

const std::vector<std::string>& builtin_particle_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& a : kAtoms) v.emplace_back(a.name);
        return v;
    }();
    return names;
}

Particle load_particle_file(const std::string& path, const Constants& c) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open particle file: " + path);

    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ValidationError("particle file " + path + ": expected key=value, got \"" + line + "\"");
        }
        auto trim = [](std::string s) {
            auto b = s.find_first_not_of(" \t\r");
            auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }

    auto need = [&](const char* key) -> const std::string& {
        auto it = kv.find(key);
        if (it == kv.end()) throw ValidationError("particle file " + path + ": missing key " + key);
        return it->second;
    };
    auto num = [&](const char* key) {
        const std::string& s = need(key);
        std::size_t pos = 0;
        double v;
        try {
            v = std::stod(s, &pos);
        } catch (const std::exception&) {
            throw ValidationError("particle file " + path + ": bad number for " + key + ": " + s);
        }
        if (pos != s.size()) {
            throw ValidationError("particle file " + path + ": bad number for " + key + ": " + s);
        }
        return v;
    };

    Particle p{need("name"), num("mass_u") * c.amu, convert_polarizability(num("alpha_A3"))};
    p.validate();
    return p;
}

}  // namespace centrefall
