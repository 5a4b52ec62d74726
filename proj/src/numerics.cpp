#include "centrefall/numerics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace centrefall::numerics {

namespace {
using cplx = std::complex<double>;
}

std::vector<cplx> derivative_fd4(std::span<const cplx> f, double h) {
    const std::size_t n = f.size();
    if (n < 5) throw std::invalid_argument("derivative_fd4 needs at least 5 samples");
    std::vector<cplx> d(n);
    const double inv12h = 1.0 / (12.0 * h);

    d[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) * inv12h;
    d[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) * inv12h;
    for (std::size_t i = 2; i + 2 < n; ++i) {
        d[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) * inv12h;
    }
    d[n - 2] = (-f[n - 5] + 6.0 * f[n - 4] - 18.0 * f[n - 3] + 10.0 * f[n - 2] + 3.0 * f[n - 1]) *
               inv12h;
    d[n - 1] = (3.0 * f[n - 5] - 16.0 * f[n - 4] + 36.0 * f[n - 3] - 48.0 * f[n - 2] +
                25.0 * f[n - 1]) *
               inv12h;
    return d;
}

double integrate_boole(std::span<const double> f, double h) {
    const std::size_t n = f.size();
    if (n < 5) throw std::invalid_argument("integrate_boole needs at least 5 samples");

    const std::size_t intervals = n - 1;
    const std::size_t blocks = intervals / 4;
    const std::size_t rem = intervals % 4;

    double sum = 0.0;
    for (std::size_t b = 0; b < blocks; ++b) {
        const std::size_t i = 4 * b;
        sum += (2.0 * h / 45.0) *
               (7.0 * f[i] + 32.0 * f[i + 1] + 12.0 * f[i + 2] + 32.0 * f[i + 3] + 7.0 * f[i + 4]);
    }
    const std::size_t i = 4 * blocks;
    switch (rem) {
        case 0: break;
        case 1: sum += 0.5 * h * (f[i] + f[i + 1]); break;
        case 2: sum += (h / 3.0) * (f[i] + 4.0 * f[i + 1] + f[i + 2]); break;
        case 3:
            sum += (3.0 * h / 8.0) * (f[i] + 3.0 * f[i + 1] + 3.0 * f[i + 2] + f[i + 3]);
            break;
    }
    return sum;
}

double integrate_radial_power(std::span<const double> g, double h, double p) {
    const std::size_t n = g.size();
    if (n < 16) throw std::invalid_argument("integrate_radial_power needs at least 16 samples");
    if (!(p > -1.0)) throw std::invalid_argument("integrate_radial_power: exponent must exceed -1");

    const double r1 = h;
    const double amp = g[0] / std::pow(r1, p);

    if (!std::isfinite(amp) || amp == 0.0) {
        // No usable origin model (e.g. profile vanishes near the origin):
        // the open panel contributes nothing measurable.
        return integrate_boole(g, h);
    }

    // Subtract A r^p over the first eight intervals so the composite rule
    // integrates only the smooth remainder, then add the model back
    // analytically together with the open panel [0, r1].
    constexpr std::size_t kModelIntervals = 8;
    std::vector<double> smoothed(g.begin(), g.end());
    for (std::size_t i = 0; i <= kModelIntervals; ++i) {
        smoothed[i] -= amp * std::pow((i + 1) * h, p);
    }
    const double r_model_end = (kModelIntervals + 1) * h;
    const double model_total =
        amp / (p + 1.0) * std::pow(r_model_end, p + 1.0);  // exact integral of A r^p on [0, r9]

    return model_total + integrate_boole(smoothed, h);
}

double fit_origin_exponent(std::span<const cplx> f) {
    constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
    if (f.size() < 4) return kNaN;
    const double a1 = std::abs(f[0]);
    const double a2 = std::abs(f[1]);
    const double a4 = std::abs(f[3]);
    if (!(a1 > 0.0) || !(a2 > 0.0) || !(a4 > 0.0)) return kNaN;
    if (!std::isfinite(a1) || !std::isfinite(a2) || !std::isfinite(a4)) return kNaN;
    // ln|f| = c + s ln r + b r^2 at r = h, 2h, 4h:
    //   ln(f2/f1) = s ln2 + 3 b h^2
    //   ln(f4/f2) = s ln2 + 12 b h^2
    // so 4*first - second isolates s.
    const double e1 = std::log(a2 / a1);
    const double e2 = std::log(a4 / a2);
    return (4.0 * e1 - e2) / (3.0 * std::numbers::ln2_v<double>);
}

}  // namespace centrefall::numerics
