#ifndef ASIANOP_PRICER_CLOSED_HPP
#define ASIANOP_PRICER_CLOSED_HPP

#include "asianop/model.hpp"
#include "asianop/specfun.hpp"

namespace asianop {

// Smallest normalized time to maturity the trigonometric-hyperbolic
// integrands are evaluated at; below it the oscillation frequency and the
// e^{pi^2/(2h)} bookkeeping defeat double precision.
inline constexpr double kMinH = 0.02;

// Smallest normalized strike accepted by the q > 0 branch; e^{1/(2q)}
// bookkeeping fails below it and the q <= 0 formula owns that boundary.
inline constexpr double kMinQ = 1e-4;

struct ClosedFormSettings {
  enum class TrigRep { theta_integral, sinh_representation, auto_rep };
  QuadSpec quad;
  HermitePolicy hermite;
  TrigRep trig_rep = TrigRep::auto_rep;
  double min_h = kMinH;

  ClosedFormSettings() {
    quad.abs_tol = 1e-11;
    quad.rel_tol = 1e-10;
    quad.tail_eps = 1e-14;
  }
};

// E_b(h)(y) = int_{y/sqrt(2h)+(b/2)sqrt(2h)}^inf e^{-u^2}
//             sin(pi(b - u sqrt(2h)/h)) du, by oscillatory quadrature.
double e_b(double b, double h, double y, const QuadSpec& spec);

// Same quantity through the imaginary part of a weighted complementary
// error function; the production evaluation path.
double e_b_via_erfc(double b, double h, double y);

// Trigonometric term of the valuation formula.
double c_trig(double nu, double h, double q, const ClosedFormSettings& s);

// Hyperbolic term C_{hyp,b} for b in {nu, -nu, nu+2, -(nu+2)}.
double c_hyp(double b, double nu, double h, double q,
             const ClosedFormSettings& s);

// Normalized price C^(nu)(h, q), all regimes.
PriceEstimate price_normalized(double nu, double h, double q,
                               const ClosedFormSettings& s = {});

PriceEstimate price(const MarketQuote& mq, const ClosedFormSettings& s = {});

// (e^{2(nu+1)h} - 1)/(2(nu+1)), with the removable value h at nu = -1.
double expected_a(double nu, double h);

namespace pricer_detail {

// Prefactor c(nu, q) split for log-space assembly:
// c = Gamma(nu+4) (e^{2h(nu+1)}-1)/(nu+1) (2q)^{(nu+2)/2} / (pi e^{1/(2q)}).
double log_c_prefactor_no_strike(double nu, double h);  // ln of all but e^{-1/(2q)} and (2q)^{(nu+2)/2}

// theta-integral and its sinh-representation, exposed for the
// cross-representation diagnostics.
double c_trig_theta(double nu, double h, double q, const ClosedFormSettings& s,
                    double* err_out = nullptr);
double c_trig_sinh(double nu, double h, double q, const ClosedFormSettings& s,
                   double* err_out = nullptr);

// The hyperbolic y-integral with the e^{pi^2/(2h)} factor of the term and
// the e^{-pi^2/(2h)} inside E_b cancelled analytically. degree_shift = 1 and
// cosh_weight = true give the integrand of the q-derivative.
double c_hyp_core(double b, double nu, double h, double q,
                  const ClosedFormSettings& s, int degree_shift,
                  bool cosh_weight, double* err_out, double* round_floor_out);

}  // namespace pricer_detail

}  // namespace asianop

#endif  // ASIANOP_PRICER_CLOSED_HPP
