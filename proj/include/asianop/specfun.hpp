#ifndef ASIANOP_SPECFUN_HPP
#define ASIANOP_SPECFUN_HPP

#include <complex>

#include "asianop/quad.hpp"

namespace asianop {

// A real value carried as value * exp(log_scale), for quantities whose
// natural magnitude overflows double precision before prefactors cancel.
struct ScaledReal {
  double value = 0.0;
  double log_scale = 0.0;
  double unscaled() const { return value * std::exp(log_scale); }
};

// Dispatch policy for Hermite function evaluation: power series inside
// series_radius, asymptotic expansion in the right half-plane wedge once its
// error bound reaches asym_target_tol, integral representation in between.
struct HermitePolicy {
  double series_radius = 2.5;
  int max_series_terms = 500;
  double asym_target_tol = 1e-10;
  double wedge_delta = 0.78539816339744831;  // pi/4

  HermitePolicy() = default;
  HermitePolicy(double radius, int max_terms, double tol, double delta)
      : series_radius(radius), max_series_terms(max_terms),
        asym_target_tol(tol), wedge_delta(delta) {
    validate();
  }
  // Checks the fields and that the asymptotic error bound can reach
  // asym_target_tol (relative) over the supported degree envelope at the
  // bridge/asymptotic handover radius.
  void validate() const;
};

// Complex gamma function, principal values. Lanczos approximation,
// relative error below 1e-13 for |z| <= 50 away from the poles.
Complex gamma_complex(Complex z);

// log Gamma(z), principal branch for Re(z) > 0 (used by series prefactors).
Complex log_gamma(Complex z);

// (x)_n = x (x+1) ... (x+n-1) by direct product.
Complex pochhammer(Complex x, int n);

// exp(z^2) Erfc(z) for Re(z) >= 0; finite for arbitrarily large |z| in the
// right half-plane.
Complex erfc_scaled(Complex z);

// Complementary error function on the whole plane.
Complex erfc(Complex z);

// Hermite function H_nu(z) of complex degree and argument.
Complex hermite(Complex nu, Complex z, const HermitePolicy& policy = {});

// Hermite polynomial of non-negative integer degree, by recurrence.
Complex hermite_polynomial(int n, Complex z);

// Integral representation (1/Gamma(-nu)) int_0^inf e^{-u^2-2zu} u^{-(nu+1)} du,
// valid for Re(nu) < 0. Independent quadrature oracle for hermite().
Complex hermite_integral(Complex nu, Complex z, const QuadSpec& spec);

// Production path of the pricing integrands: real degree mu < 0, real
// argument, result scaled so arguments far on the negative axis cannot
// overflow before the formula's exponential prefactors cancel.
ScaledReal hermite_real_scaled(double mu, double x,
                               const HermitePolicy& policy = {});

// Modified Bessel function I_mu(z) of complex order, by its power series.
Complex bessel_i(Complex mu, Complex z);

// Schlaefli integral representation, Re(z) > 0.
Complex bessel_i_schlafli(Complex mu, Complex z, const QuadSpec& spec);

// Closed form of Weber's integral int_0^inf e^{-a x^2} x^{mu+1} I_mu(x) dx.
Complex weber_closed_form(double a, Complex mu);

namespace specfun_detail {

// Power series evaluation; throws ConvergenceError past max_series_terms.
Complex hermite_series(Complex nu, Complex z, const HermitePolicy& policy);

// Asymptotic sum with the term count chosen from the printed remainder
// bound; throws WedgeError outside the wedge |arg z| <= pi/2 - delta and
// ConvergenceError when the bound cannot reach the target.
Complex hermite_asymptotic(Complex nu, Complex z, const HermitePolicy& policy,
                           double* achieved_bound = nullptr);

// Remainder bound for the (n+1)-term truncation at |z|, wedge angle delta.
double hermite_asym_bound(Complex nu, double abs_z, double delta, int n);

// Minimizing term count for the bound at (nu, |z|, delta); returns the bound.
double hermite_asym_best(Complex nu, double abs_z, double delta, int max_n,
                         int* best_n);

}  // namespace specfun_detail

}  // namespace asianop

#endif  // ASIANOP_SPECFUN_HPP
