#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "centrefall/errors.hpp"

namespace centrefall {

/// Physical constants, CODATA 2018. Fixed values, never recomputed.
/// Functions that depend on hbar take a Constants argument so that tests
/// can probe parameterized limits (e.g. hbar -> 0); production code passes
/// the default.
struct Constants {
    double hbar = 1.054571817e-34;   // reduced Planck constant, J s
    double eps0 = 8.8541878128e-12;  // vacuum permittivity, F/m
    double amu  = 1.66053906660e-27; // atomic mass unit, kg
};

inline constexpr Constants kCodata{};

/// hbar = 1 for the abstract (moment/trial/propagator) modules. The wire
/// calculations are SI-only and must never see this.
inline constexpr Constants kNatural{1.0, 1.0, 1.0};

enum class UnitSystem { si, natural };

inline const Constants& constants_for(UnitSystem u) {
    static constexpr Constants si = kCodata;
    static constexpr Constants natural = kNatural;
    return u == UnitSystem::si ? si : natural;
}

/// Polarizability volume, cubic angstrom -> m^3.
double convert_polarizability(double cubic_angstrom);

/// A polarizable neutral atom.
struct Particle {
    std::string name;
    double mass;       // kg
    double alpha_vol;  // polarizability volume, m^3

    void validate() const;
};

/// Built-in species: "Li7", "H1", "He3".
Particle builtin_particle(std::string_view name);
const std::vector<std::string>& builtin_particle_names();

/// Loads one particle from a key=value file with keys
/// name, mass_u (atomic mass units), alpha_A3 (cubic angstrom).
/// Lines starting with '#' are comments.
Particle load_particle_file(const std::string& path, const Constants& c = kCodata);

}  // namespace centrefall
