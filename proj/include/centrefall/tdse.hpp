#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include "centrefall/constants.hpp"
#include "centrefall/errors.hpp"
#include "centrefall/moment_evolution.hpp"
#include "centrefall/trial_states.hpp"

namespace centrefall {

class PropagationError : public DomainError {
public:
    explicit PropagationError(const std::string& msg) : DomainError(msg) {}
};

/// Uniform radial grid r_i = i dr, i = 0..n, with Dirichlet ends
/// u(0) = u(r_max) = 0 and r_max = n dr.
struct GridSpec {
    std::size_t n;  // interval count; interior unknowns are i = 1..n-1
    double dr;      // m
    double dt;      // s

    double r_max() const { return static_cast<double>(n) * dr; }
    void validate() const;  // n >= 256, dr > 0, dt > 0
};

/// Grid sized for a trial state: r_max = 12/sqrt(beta) and
/// dt = 0.25 m dr / (hbar sqrt(beta)), so one refinement (doubling n)
/// halves both dr and dt.
GridSpec default_grid_for(const TrialState& ts, double mass, const Constants& c = kCodata,
                          std::size_t n = 4096);

/// Complex amplitudes of the reduced radial function u = sqrt(r) R on the
/// interior grid points. The reduction flattens the 2D radial measure, so
/// the discrete norm is sum |u_i|^2 dr, and the Hamiltonian becomes the
/// plain tridiagonal
///   H u = -(hbar^2/2m) u'' + V_eff u,
///   V_eff(r) = hbar^2 (l_z^2 - 1/4) / (2 m r^2) - gamma / r^2.
struct RadialGridState {
    GridSpec grid;
    std::vector<std::complex<double>> u;  // size grid.n - 1; u[k] at r = (k+1) dr
    int l_z = 0;
    double gamma = 0.0;  // J m^2
    double mass = 0.0;   // kg
    double hbar = 0.0;   // J s

    double r(std::size_t k) const { return (k + 1) * grid.dr; }
    double v_eff(double r) const;
};

struct GridObservables {
    double norm;    // sum |u_i|^2 dr
    double r2;      // m^2
    double d;       // kg m^2/s
    double energy;  // J
};

RadialGridState discretize(const TrialState& ts, const GridSpec& spec, double gamma, double mass,
                           const Constants& c = kCodata);
RadialGridState discretize(const RadialProfile& profile, const GridSpec& spec, double gamma,
                           double mass, const Constants& c = kCodata);

/// One Crank-Nicolson step, (1 + i dt H / 2 hbar) u' = (1 - i dt H / 2 hbar) u,
/// solved by the Thomas algorithm. Unitary to machine precision.
void step(RadialGridState& state);

/// Precomputed Crank-Nicolson propagator for repeated stepping of states
/// that share grid, l_z, coupling and mass.
class Propagator {
public:
    explicit Propagator(const RadialGridState& state);
    void step(RadialGridState& state) const;

private:
    std::size_t n_;
    double dr_;
    std::complex<double> off_;                  // off-diagonal of (1 + i dt H / 2 hbar)
    std::vector<std::complex<double>> b_diag_;  // diagonal of (1 - i dt H / 2 hbar)
    std::vector<std::complex<double>> upper_;   // cached forward-sweep multipliers
    std::vector<std::complex<double>> inv_den_; // cached pivot reciprocals
    mutable std::vector<std::complex<double>> rhs_;
};

/// Discrete observables:
///   norm   = sum |u_i|^2 dr
///   r2     = sum r_i^2 |u_i|^2 dr
///   d      = 2 hbar sum Im(u_i* r_i (u_{i+1} - u_{i-1}) / 2dr) dr   (0 exactly for real u)
///   energy = sum [ (hbar^2/2m) |(u_{i+1} - u_i)/dr|^2 + V_eff(r_i) |u_i|^2 ] dr
/// The gradient form of the energy is the exact quadratic form of the
/// stepping Hamiltonian, so it is a conserved quantity of the propagation.
GridObservables observables(const RadialGridState& state);

struct TrajectoryRecord {
    double t, norm, r2, d, energy;
};

struct Trajectory {
    std::vector<TrajectoryRecord> records;  // valid records only, starting at t = 0
    double t_valid;                         // time of the last valid record
    EvolutionCurve analytic;                // quadratic built from the t = 0 observables
};

struct PropagationResult {
    Trajectory trajectory;
    double max_rel_dev;  // max |r2 - analytic| / r2(0) over the validity window
};

/// Propagates until t_max, recording every record_every steps. The validity
/// window ends when probability in the outer 5% of the grid exceeds
/// leak_threshold or r2 drops below (10 dr)^2 -- past that point the grid
/// cannot represent the motion. An initially invalid state is an error.
PropagationResult propagate_and_verify(RadialGridState state, double t_max,
                                       std::size_t record_every = 10,
                                       double leak_threshold = 1e-6);

/// CSV with grid metadata comments and columns
/// t,norm,r2_numeric,r2_analytic,d,energy,rel_dev.
void write_trajectory_csv(std::ostream& out, const PropagationResult& result,
                          const RadialGridState& state);

}  // namespace centrefall
