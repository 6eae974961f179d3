#pragma once

// Double precision Bessel, Struve and error functions used by the
// Haar/Hankel series. All routines are pure and thread safe.

namespace haarhankel::specfun {

/// Bessel function of the first kind, order 0. Even in x.
double bessel_j0(double x);

/// Bessel function of the first kind, order 1. Odd in x.
double bessel_j1(double x);

/// Struve function H0 for x >= 0.
///
/// Three regimes: ascending series for x <= 8, Gauss-Legendre quadrature of
/// the Poisson-type integral (2/pi) int_0^{pi/2} sin(x cos t) dt up to x = 35,
/// and the asymptotic expansion of H0 - Y0 beyond that. Absolute error is
/// below 1e-14 on [0, 1e4].
double struve_h0(double x);

/// Struve function H1 for x >= 0, same regimes as struve_h0.
double struve_h1(double x);

/// D(x) = H0(x) J1(x) - H1(x) J0(x), x >= 0.
double struve_d(double x);

/// int_0^x J0(t) dt = x J0(x) + (pi x / 2) D(x), x >= 0.
double j0_primitive(double x);

/// Error function. Odd in x.
double erf(double x);

/// Complementary error function 1 - erf(x), accurate in the tail.
double erfc(double x);

namespace detail {

// Individual Struve regimes, exposed for the overlap tests.
double struve_h0_series(double x);
double struve_h1_series(double x);
/// int_0^{pi/2} sin(x cos t) sin(t)^(2 nu) dt, nu in {0, 1}.
double struve_integral(double x, int nu);
/// Asymptotic H_nu(x) - Y_nu(x), nu in {0, 1}, truncated at the smallest term.
double struve_minus_neumann_asymptotic(double x, int nu);
/// Y0, Y1 from the Hankel amplitude/phase rationals, x > 8.
double bessel_y0_large(double x);
double bessel_y1_large(double x);

}  // namespace detail

}  // namespace haarhankel::specfun
