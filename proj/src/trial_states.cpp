#include "centrefall/trial_states.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "centrefall/numerics.hpp"

namespace centrefall {

namespace {
using cplx = std::complex<double>;
}

void TrialState::validate() const {
    if (!(s > 0.0) || !std::isfinite(s)) {
        throw ValidationError("trial exponent s must be positive, got " + std::to_string(s));
    }
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw ValidationError("trial width beta must be positive, got " + std::to_string(beta));
    }
}

double TrialState::radial(double r) const {
    const double norm = std::sqrt(2.0 * std::pow(beta, s + 1.0) / std::tgamma(s + 1.0));
    return norm * std::pow(r, s) * std::exp(-0.5 * beta * r * r);
}

MomentSet trial_moments(const TrialState& ts, double gamma, double mass, const Constants& c) {
    ts.validate();
    if (!(mass > 0.0)) throw ValidationError("mass must be positive");

    const double h2_2m = c.hbar * c.hbar / (2.0 * mass);
    MomentSet ms;
    ms.r2 = (ts.s + 1.0) / ts.beta;
    ms.inv_r2 = ts.beta / ts.s;
    ms.kinetic = h2_2m * ts.beta * (1.0 + static_cast<double>(ts.l_z) * ts.l_z / ts.s);
    ms.energy = ms.kinetic - gamma * ms.inv_r2;
    ms.d = 0.0;
    ms.below_half_s = ts.s < 0.5;
    return ms;
}

double critical_coupling(const MomentSet& ms) {
    if (!(ms.inv_r2 > 0.0) || !(ms.kinetic > 0.0)) {
        throw ValidationError("critical coupling needs positive kinetic and <1/r^2>");
    }
    return ms.kinetic / ms.inv_r2;
}

double min_critical_coupling(double mass, const Constants& c) {
    if (!(mass > 0.0)) throw ValidationError("mass must be positive");
    return c.hbar * c.hbar / (8.0 * mass);
}

double quasi_stationary_exponent(double gamma, double mass, const Constants& c) {
    if (!(gamma > 0.0)) throw ValidationError("coupling must be positive for a zero-energy exponent");
    if (!(mass > 0.0)) throw ValidationError("mass must be positive");
    return 2.0 * mass * gamma / (c.hbar * c.hbar);
}

RadialProfile sample_trial_state(const TrialState& ts, double r_max, std::size_t n) {
    ts.validate();
    if (!(r_max > 0.0) || n < 16) {
        throw ValidationError("profile sampling needs r_max > 0 and n >= 16");
    }
    RadialProfile p;
    p.dr = r_max / static_cast<double>(n);
    p.l_z = ts.l_z;
    p.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        p.values[i] = cplx(ts.radial(p.r(i)), 0.0);
    }
    return p;
}

namespace {

// Integrands are laid out at r_i = (i+1) dr; each behaves like r^{p} near
// the origin with p derived from the fitted profile exponent.
struct Integrands {
    std::vector<double> norm, r2, inv_r2, kin_rad, d_im;
};

double profile_norm_quadrature(const RadialProfile& profile) {
    const std::size_t n = profile.size();
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) {
        g[i] = std::norm(profile.values[i]) * profile.r(i);
    }
    const double s_fit = numerics::fit_origin_exponent(profile.values);
    if (std::isfinite(s_fit) && s_fit > -0.4) {
        return numerics::integrate_radial_power(g, profile.dr, 2.0 * s_fit + 1.0);
    }
    return numerics::integrate_boole(g, profile.dr);
}

}  // namespace

MomentSet quadrature_moments(const RadialProfile& profile, double gamma, double mass,
                             const Constants& c, double norm_tol) {
    const std::size_t n = profile.size();
    if (n < 64) throw ValidationError("profile too short for quadrature (need n >= 64)");
    if (!(profile.dr > 0.0)) throw ValidationError("profile spacing must be positive");
    if (!(mass > 0.0)) throw ValidationError("mass must be positive");
    const double dr = profile.dr;

    const double norm = profile_norm_quadrature(profile);
    if (std::abs(norm - 1.0) > norm_tol) {
        throw ValidationError("profile not normalized: quadrature norm = " + std::to_string(norm) +
                              " (tolerance " + std::to_string(norm_tol) + ")");
    }

    // Tail mass in the outer 5% of the grid.
    double tail = 0.0;
    const std::size_t tail_start = static_cast<std::size_t>(0.95 * n);
    for (std::size_t i = tail_start; i < n; ++i) {
        tail += std::norm(profile.values[i]) * profile.r(i) * dr;
    }
    if (tail > 1e-10) {
        std::ostringstream msg;
        msg << "profile tail mass " << tail << " in the outer 5% of the grid exceeds 1e-10; "
            << "increase r_max";
        throw ValidationError(msg.str());
    }

    const double s_fit = numerics::fit_origin_exponent(profile.values);
    const double amp_origin = std::abs(profile.values[0]);
    double amp_max = 0.0;
    for (const auto& v : profile.values) amp_max = std::max(amp_max, std::abs(v));
    const bool origin_matters = amp_origin > 1e-8 * amp_max;

    if (origin_matters && (!std::isfinite(s_fit) || s_fit < 0.025)) {
        throw DomainError(
            "profile does not vanish at the origin (fitted exponent " + std::to_string(s_fit) +
            "); <1/r^2> integral is divergent");
    }

    // Derivative of R with the origin power factored out: R = r^s phi with
    // phi smooth, so the stencils see no fractional-power kink.
    std::vector<cplx> deriv;
    if (origin_matters && std::isfinite(s_fit)) {
        std::vector<cplx> phi(n);
        for (std::size_t i = 0; i < n; ++i) {
            phi[i] = profile.values[i] / std::pow(profile.r(i), s_fit);
        }
        const auto dphi = numerics::derivative_fd4(phi, dr);
        deriv.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double r = profile.r(i);
            const double rs = std::pow(r, s_fit);
            deriv[i] = rs * (dphi[i] + s_fit / r * phi[i]);
        }
    } else {
        deriv = numerics::derivative_fd4(profile.values, dr);
    }

    Integrands g;
    g.r2.resize(n);
    g.inv_r2.resize(n);
    g.kin_rad.resize(n);
    g.d_im.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double r = profile.r(i);
        const double abs2 = std::norm(profile.values[i]);
        g.r2[i] = r * r * abs2 * r;
        g.inv_r2[i] = abs2 / r;
        g.kin_rad[i] = std::norm(deriv[i]) * r;
        g.d_im[i] = r * r * std::imag(std::conj(profile.values[i]) * deriv[i]);
    }

    const bool power = origin_matters && std::isfinite(s_fit);
    auto integrate = [&](const std::vector<double>& f, double p) {
        if (power) return numerics::integrate_radial_power(f, dr, p);
        return numerics::integrate_boole(f, dr);
    };

    MomentSet ms;
    ms.r2 = integrate(g.r2, 2.0 * s_fit + 3.0);
    ms.inv_r2 = integrate(g.inv_r2, 2.0 * s_fit - 1.0);
    const double kin_rad = integrate(g.kin_rad, 2.0 * s_fit - 1.0);
    const double l2 = static_cast<double>(profile.l_z) * profile.l_z;
    ms.kinetic = c.hbar * c.hbar / (2.0 * mass) * (kin_rad + l2 * ms.inv_r2);
    ms.energy = ms.kinetic - gamma * ms.inv_r2;
    ms.d = 2.0 * c.hbar * integrate(g.d_im, 2.0 * s_fit + 1.0);
    ms.below_half_s = std::isfinite(s_fit) && s_fit < 0.5 && origin_matters;
    return ms;
}

LoadedProfile load_radial_profile(const std::string& path, int l_z) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open profile file: " + path);

    std::string header;
    if (!std::getline(in, header)) throw ValidationError("profile file is empty: " + path);

    std::vector<double> rs;
    std::vector<cplx> vals;
    std::string line;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ss(line);
        double r, re, im = 0.0;
        if (!(ss >> r >> re)) {
            throw ValidationError("profile file " + path + ": bad row at line " +
                                  std::to_string(line_no));
        }
        ss >> im;  // optional imaginary column
        rs.push_back(r);
        vals.emplace_back(re, im);
    }
    if (rs.size() < 64) {
        throw ValidationError("profile file " + path + ": need at least 64 rows, got " +
                              std::to_string(rs.size()));
    }

    const double dr = rs[0];
    if (!(dr > 0.0)) throw ValidationError("profile file " + path + ": first radius must be > 0");
    for (std::size_t i = 0; i < rs.size(); ++i) {
        const double expected = (i + 1) * dr;
        if (std::abs(rs[i] - expected) > 1e-9 * std::max(1.0, expected)) {
            throw ValidationError("profile file " + path +
                                  ": radii must be uniform with r_i = i*dr starting at dr");
        }
    }

    RadialProfile p;
    p.dr = dr;
    p.l_z = l_z;
    p.values = std::move(vals);

    const double norm = profile_norm_quadrature(p);
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw ValidationError("profile file " + path + ": cannot normalize (norm = " +
                              std::to_string(norm) + ")");
    }
    const double factor = std::sqrt(norm);
    for (auto& v : p.values) v /= factor;
    return LoadedProfile{std::move(p), factor};
}

}  // namespace centrefall
