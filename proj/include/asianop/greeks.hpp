#ifndef ASIANOP_GREEKS_HPP
#define ASIANOP_GREEKS_HPP

#include "asianop/model.hpp"
#include "asianop/pricer_closed.hpp"

namespace asianop {

struct GreeksResult {
  double delta = 0.0;           // dC_t / dS_t
  double hedge_position = 0.0;  // Pi_t = S_t * delta
  double dC_dq = 0.0;           // d C^(nu) / dq
  double fd_delta = 0.0;        // central-difference cross-check
  Engine engine = Engine::closed;
};

// Partial derivative of the normalized price with respect to q.
// Exactly -1 for q <= 0.
double dprice_dq(double nu, double h, double q,
                 const ClosedFormSettings& s = {});

// Delta via dC_t/dS_t = e^{-r(T-t)} 4/(sigma^2 (T-t0)) (C - q dC/dq),
// hedge position S_t * delta, and a central finite difference in the spot
// with strike and running integral held fixed.
GreeksResult delta(const MarketQuote& mq, const ClosedFormSettings& s = {});

// Finite-difference vega, gamma and theta of price(); tagged numeric, no
// analytic counterpart in this library.
struct NumericGreeks {
  double vega = 0.0;
  double gamma = 0.0;
  double theta = 0.0;
};
NumericGreeks numeric_greeks(const MarketQuote& mq,
                             const ClosedFormSettings& s = {});

}  // namespace asianop

#endif  // ASIANOP_GREEKS_HPP
