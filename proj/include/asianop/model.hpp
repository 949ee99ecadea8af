#ifndef ASIANOP_MODEL_HPP
#define ASIANOP_MODEL_HPP

#include <map>
#include <string>

#include "asianop/errors.hpp"

namespace asianop {

// Raw contract and market state. Times are real-valued years; varpi is the
// risk-neutral drift, equal to r for a non-dividend paying stock.
struct MarketQuote {
  double s_t = 0.0;               // spot S_t
  double strike = 0.0;            // K
  double r = 0.0;                 // riskless rate per year
  double varpi = 0.0;             // drift of the risk-neutral SDE
  double sigma = 0.0;             // volatility per sqrt(year)
  double t0 = 0.0;                // writing time
  double t = 0.0;                 // valuation time
  double T_mat = 0.0;             // maturity
  double running_integral = 0.0;  // int_{t0}^{t} S_tau dtau

  void validate() const;
};

// The normalized (nu, h, q) coordinates plus the affine strike
// decomposition q(h) = k h + q*.
struct NormalizedInput {
  double nu = 0.0;
  double h = 0.0;
  double q = 0.0;
  double k = 0.0;
  double q_star = 0.0;
};

enum class Engine { closed, yor, laplace, mc };

const char* engine_name(Engine e);
Engine engine_from_name(const std::string& name);

// A price with its provenance: which engine produced it and either a
// deterministic tolerance or a Monte Carlo standard error.
struct PriceEstimate {
  double value = 0.0;
  Engine engine = Engine::closed;
  double err_est = 0.0;
  std::map<std::string, std::string> diagnostics;
};

NormalizedInput normalize(const MarketQuote& mq);

// C_{t,T}(K) = e^{-r(T-t)}/(T-t0) * 4 S_t / sigma^2 * C^(nu)(h, q)
double denormalize_price(const MarketQuote& mq, double c_nu);

// JSON (de)serialization with field names exactly matching the structs.
std::string to_json(const MarketQuote& mq);
std::string to_json(const PriceEstimate& pe);
MarketQuote market_quote_from_json(const std::string& text);

}  // namespace asianop

#endif  // ASIANOP_MODEL_HPP
