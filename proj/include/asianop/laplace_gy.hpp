#ifndef ASIANOP_LAPLACE_GY_HPP
#define ASIANOP_LAPLACE_GY_HPP

#include "asianop/model.hpp"
#include "asianop/specfun.hpp"

namespace asianop {

// Bromwich inversion controls. The contour abscissa is placed at
// x0 = max(A0/(2h), 2(nu+1) + 1/2) + abscissa_margin with A0 = 24, so the
// trapezoid aliasing error e^{-2 h (x0 - 2(nu+1))} stays near round-off for
// every margin; abscissa_margin shifts the contour further right and the
// result must be invariant under it (Cauchy).
struct BromwichSettings {
  double abscissa_margin = 1.0;
  int n_terms = 64;
  int euler_depth = 12;
  QuadSpec quad;

  BromwichSettings() {
    quad.abs_tol = 1e-12;
    quad.rel_tol = 1e-11;
    quad.tail_eps = 1e-15;
  }
};

// D_nu(a,z) = e^{-1/(2a)}/a int_0^inf e^{-x^2/(2a)} x^{nu+3}
//             I_{sqrt(2z+nu^2)}(x/a) dx, principal square root.
Complex d_nu(double a, Complex z, double nu, const QuadSpec& spec);

// F_GY(a,z) = D_nu(a,z) / (z (z - 2(nu+1))).
Complex f_gy(double a, Complex z, double nu, const QuadSpec& spec);

// Laplace inverse of F_GY(q(h), z) at h, with the strike frozen at
// a = k h + q*; requires nu > -1 and a > 0.
PriceEstimate invert_price(double nu, double h, double k, double q_star,
                           const BromwichSettings& settings = {});

// Residual of the printed transform pairs: max over the f- and g-pair of
// |numeric forward Laplace - closed form|.
double transform_pair_residual(Complex alpha, Complex beta, Complex z,
                               const QuadSpec& spec);

}  // namespace asianop

#endif  // ASIANOP_LAPLACE_GY_HPP
