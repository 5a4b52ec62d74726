#include "centrefall/moment_evolution.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace centrefall {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

void MomentState::validate() const {
    if (!(r2_0 > 0.0) || !std::isfinite(r2_0)) {
        throw ValidationError("<r^2>_0 must be positive and finite, got " + std::to_string(r2_0));
    }
    if (!(mass > 0.0) || !std::isfinite(mass)) {
        throw ValidationError("mass must be positive and finite, got " + std::to_string(mass));
    }
    if (!std::isfinite(d_0) || !std::isfinite(energy)) {
        throw ValidationError("<rp+pr>_0 and <H> must be finite");
    }
}

EvolutionCurve curve_from_state(const MomentState& state) {
    state.validate();
    return EvolutionCurve{state.r2_0, state.d_0 / state.mass, 2.0 * state.energy / state.mass};
}

double r2_at(const EvolutionCurve& curve, double t) { return curve.value_at(t); }

Fate classify_fate(const EvolutionCurve& curve) {
    const double a = curve.a, b = curve.b, c = curve.c;
    if (!(a > 0.0)) throw ValidationError("curve constant term must be positive");

    if (c == 0.0) {
        if (b == 0.0) return {FateKind::quasi_stationary, kNaN};
        if (b > 0.0) return {FateKind::escapes, kNaN};
        return {FateKind::falls, a / -b};
    }

    const double disc = b * b - 4.0 * a * c;
    if (c < 0.0) {
        // disc > b^2 here, so exactly one positive root; the stable form
        // avoids cancellation for either sign of b.
        const double sq = std::sqrt(disc);
        const double t = (b > 0.0) ? (b + sq) / (-2.0 * c) : 2.0 * a / (sq - b);
        return {FateKind::falls, t};
    }

    // c > 0: the parabola opens upward; it reaches zero only if it moves
    // inward first (b < 0) and the discriminant allows contact.
    if (b < 0.0 && disc >= 0.0) {
        const double t = 2.0 * a / (-b + std::sqrt(disc));  // smaller root
        return {FateKind::falls, t};
    }
    return {FateKind::escapes, kNaN};
}

Fate classify_fate(const EvolutionCurve& curve, double rel_tol) {
    if (!(rel_tol >= 0.0)) throw ValidationError("rel_tol must be non-negative");
    EvolutionCurve snapped = curve;
    if (snapped.c != 0.0 && std::abs(snapped.c) * curve.a <= rel_tol * curve.b * curve.b) {
        snapped.c = 0.0;
    }
    if (snapped.b != 0.0 &&
        std::abs(snapped.b) <= rel_tol * std::sqrt(curve.a * std::abs(snapped.c))) {
        snapped.b = 0.0;
    }
    return classify_fate(snapped);
}

double falling_time_symmetric(double r2_0, double energy, double mass) {
    MomentState{r2_0, 0.0, energy, mass}.validate();
    if (energy >= 0.0) {
        throw DomainError(
            "falling time is imaginary for <H> >= 0 with <rp+pr>_0 = 0; "
            "the particle cannot fall (got <H> = " +
            std::to_string(energy) + " J)");
    }
    return std::sqrt(-mass * r2_0 / (2.0 * energy));
}

NormalizedCurve normalized_curve(const MomentState& state) {
    state.validate();
    if (state.energy == 0.0 && state.d_0 == 0.0) {
        throw DomainError(
            "<H> = 0 and <rp+pr>_0 = 0: <r^2> is constant and the time unit "
            "is arbitrary; no normalization is defined");
    }
    if (state.energy == 0.0) {
        const double t0 = state.mass * state.r2_0 / std::abs(state.d_0);
        return NormalizedCurve{t0, state.d_0 > 0.0 ? 1.0 : -1.0, 0};
    }
    const double abs_h = std::abs(state.energy);
    const double t0 = std::sqrt(state.mass * state.r2_0 / (2.0 * abs_h));
    const double eps = state.d_0 / std::sqrt(2.0 * state.mass * abs_h * state.r2_0);
    return NormalizedCurve{t0, eps, state.energy > 0.0 ? 1 : -1};
}

double classical_r2(double r0, double rdot0, double E, double mass, double t) {
    if (!(r0 > 0.0)) throw ValidationError("classical r0 must be positive");
    if (!(mass > 0.0)) throw ValidationError("mass must be positive");
    const EvolutionCurve curve{r0 * r0, 2.0 * r0 * rdot0, 2.0 * E / mass};
    return curve.value_at(t);
}

}  // namespace centrefall
