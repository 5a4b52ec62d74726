#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "centrefall/constants.hpp"
#include "centrefall/errors.hpp"

namespace centrefall {

/// The 2D radial trial family
///   psi_s(r) = sqrt(2 beta^{s+1} / Gamma(s+1)) r^s exp(-beta r^2 / 2),
/// normalized under the radial measure r dr, with angular factor
/// exp(i l_z phi)/sqrt(2 pi).
struct TrialState {
    double s;      // origin exponent, > 0
    double beta;   // Gaussian width parameter, m^-2
    int l_z = 0;   // orbital quantum number, units of hbar

    void validate() const;
    /// Radial amplitude R(r).
    double radial(double r) const;
};

/// Expectation values in a radial state at coupling gamma. d vanishes for
/// real radial functions. below_half_s flags s < 1/2 states, whose energy
/// is finite here but which cost unbounded energy to prepare.
struct MomentSet {
    double r2;       // <r^2>, m^2
    double inv_r2;   // <1/r^2>, m^-2
    double kinetic;  // <T>, J
    double energy;   // <H> = kinetic - gamma <1/r^2>, J
    double d;        // <rp+pr>, kg m^2/s
    bool below_half_s = false;
};

/// A sampled radial function R(r_i) at r_i = (i+1) dr, i = 0..n-1,
/// normalized so that the quadrature of |R|^2 r dr is 1.
struct RadialProfile {
    double dr = 0.0;
    std::vector<std::complex<double>> values;
    int l_z = 0;

    std::size_t size() const { return values.size(); }
    double r(std::size_t i) const { return (i + 1) * dr; }
    double r_max() const { return values.size() * dr; }
};

/// Closed-form moments of psi_s:
///   <r^2> = (s+1)/beta,  <1/r^2> = beta/s,
///   <T>   = hbar^2 beta / 2m + hbar^2 l_z^2 beta / (2 m s).
MomentSet trial_moments(const TrialState& ts, double gamma, double mass,
                        const Constants& c = kCodata);

/// Coupling at which the state's energy crosses zero: kinetic / <1/r^2>.
/// For psi_s with l_z = 0 this is s hbar^2 / 2m, independent of beta.
double critical_coupling(const MomentSet& ms);

/// Universal minimum of the critical coupling over all states:
/// Gamma_c = hbar^2 / (8 m). Also the strong-coupling boundary.
double min_critical_coupling(double mass, const Constants& c = kCodata);

/// Exponent of the zero-energy (quasi-stationary) trial state at coupling
/// gamma, l_z = 0: s0 = 2 m gamma / hbar^2.
double quasi_stationary_exponent(double gamma, double mass, const Constants& c = kCodata);

/// Samples psi_s on n points up to r_max.
RadialProfile sample_trial_state(const TrialState& ts, double r_max, std::size_t n);

/// Numerically integrated moments of a sampled profile.
///
/// Kinetic energy uses the manifestly positive gradient form
///   <T> = (hbar^2/2m) integral (|R'|^2 + l_z^2 |R|^2/r^2) r dr,
/// with R' obtained by factoring out the fitted origin power r^s before
/// differencing, so fractional exponents do not degrade the stencils.
///
/// Preconditions: quadrature norm within norm_tol of 1 (the loader
/// renormalizes; direct callers must pass normalized data) and tail mass in
/// the outer 5% of the grid below 1e-10. A profile that does not vanish at
/// the origin makes <1/r^2> divergent and is rejected.
MomentSet quadrature_moments(const RadialProfile& profile, double gamma, double mass,
                             const Constants& c = kCodata, double norm_tol = 1e-8);

struct LoadedProfile {
    RadialProfile profile;
    double renorm_factor;  // loaded values were divided by this
};

/// Reads a two-column (r, R) text file with one header line; optional third
/// column for the imaginary part. Values are renormalized and the applied
/// factor recorded.
LoadedProfile load_radial_profile(const std::string& path, int l_z = 0);

}  // namespace centrefall
