#pragma once

#include "centrefall/errors.hpp"

namespace centrefall {

/// Initial-state data that fully determines the evolution of <r^2> in an
/// attractive 1/r^2 potential: <r^2>(t) is an exact quadratic in t.
struct MomentState {
    double r2_0;    // <r^2> at t = 0, m^2
    double d_0;     // <rp + pr> at t = 0, kg m^2/s
    double energy;  // <H>, J (conserved)
    double mass;    // kg

    void validate() const;  // r2_0 > 0, mass > 0
};

/// <r^2>(t) = a + b t + c t^2 with a = <r^2>_0, b = <rp+pr>_0/m, c = 2<H>/m.
struct EvolutionCurve {
    double a;  // m^2
    double b;  // m^2/s
    double c;  // m^2/s^2

    double value_at(double t) const { return a + t * (b + t * c); }
};

enum class FateKind { falls, escapes, quasi_stationary };

struct Fate {
    FateKind kind;
    double t_fall;  // first positive zero of the curve; NaN unless kind == falls

    bool falls() const { return kind == FateKind::falls; }
};

/// Normalized evolution y(tau) = 1 + eps*tau + quad_sign*tau^2, where
/// y = <r^2>/<r^2>_0 and tau = t/t0.
/// For <H> != 0: t0 = sqrt(m <r^2>_0 / 2|<H>|), eps = <rp+pr>_0 / sqrt(2 m |<H>| <r^2>_0).
/// For <H> == 0: t0 = m <r^2>_0 / |<rp+pr>_0| and eps = +-1.
struct NormalizedCurve {
    double t0;      // s
    double eps;     // dimensionless
    int quad_sign;  // sign of <H>: -1, 0, +1

    double value_at(double tau) const { return 1.0 + tau * (eps + tau * quad_sign); }
};

EvolutionCurve curve_from_state(const MomentState& state);

/// Plain polynomial evaluation; negative values are returned as-is (the
/// physical motion ends at the first zero, which is the caller's concern).
double r2_at(const EvolutionCurve& curve, double t);

/// Classifies by the sign pattern of (b, c) and the discriminant:
///   c < 0            -> falls at the unique positive root;
///   c > 0            -> falls at the smaller root iff b < 0 and b^2 - 4ac >= 0, else escapes;
///   c == 0           -> falls at a/|b| if b < 0, escapes if b > 0, quasi-stationary if b == 0.
/// A vanishing discriminant (grazing contact) counts as falling.
/// Comparisons against zero are exact; use the rel_tol overload for
/// coefficients that carry quadrature noise.
Fate classify_fate(const EvolutionCurve& curve);

/// Same, but first snaps near-zero coefficients: c is treated as zero when
/// the quadratic term is below rel_tol at the linear crossing time
/// (|c| a <= rel_tol b^2), and b when the linear term is below rel_tol at
/// the quadratic timescale (|b| <= rel_tol sqrt(a |c|)).
Fate classify_fate(const EvolutionCurve& curve, double rel_tol);

/// Falling time for a state with <rp+pr>_0 = 0 (real radial wave function):
/// t_f = sqrt(-m <r^2>_0 / (2 <H>)). Requires energy < 0; a non-negative
/// energy makes t_f imaginary and the particle cannot fall.
double falling_time_symmetric(double r2_0, double energy, double mass);

/// Rejects the doubly degenerate energy == 0 && d_0 == 0 state, whose time
/// unit is arbitrary.
NormalizedCurve normalized_curve(const MomentState& state);

/// Classical radial law r^2(t) = r0^2 + 2 r0 rdot0 t + (2E/m) t^2 -- the
/// same quadratic machinery with classical initial data.
double classical_r2(double r0, double rdot0, double E, double mass, double t);

}  // namespace centrefall
