#pragma once

#include <complex>
#include <span>
#include <vector>

namespace centrefall::numerics {

/// Fourth-order first derivative of uniformly spaced samples (5-point
/// stencils, one-sided at the ends). Exact for polynomials up to degree 4.
std::vector<std::complex<double>> derivative_fd4(std::span<const std::complex<double>> f,
                                                 double h);

/// Composite Boole integration over [x0, x0 + (n-1)h]. Blocks of four
/// intervals; a 1-3 interval remainder at the far end falls back to
/// lower-order Newton-Cotes. Needs n >= 5.
double integrate_boole(std::span<const double> f, double h);

/// Integral over [0, r_n] of samples g_i = g(r_i), r_i = (i+1)h, where
/// g behaves like A r^p near the origin (p > -1).
///
/// The open panel [0, r_1] is integrated with the local power model
/// A = g_1 / r_1^p, and the same model is subtracted analytically over the
/// first eight intervals so the composite rule only sees the smooth
/// remainder. This keeps full order even when p is fractional.
double integrate_radial_power(std::span<const double> g, double h, double p);

/// Local power exponent of |f| near the origin for samples at r = (i+1)h,
/// assuming ln|f| = const + s ln r + O(r^2). Uses samples 1, 2 and 4, which
/// cancels the quadratic term exactly. Returns NaN when the samples do not
/// support a fit (zeros or non-finite values).
double fit_origin_exponent(std::span<const std::complex<double>> f);

}  // namespace centrefall::numerics
