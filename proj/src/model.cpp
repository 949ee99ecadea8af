#include "asianop/model.hpp"

#include <cmath>

#include "json.hpp"

namespace asianop {

void MarketQuote::validate() const {
  if (!(s_t > 0.0)) throw DomainError("MarketQuote: spot must be positive");
  if (!(strike > 0.0)) throw DomainError("MarketQuote: strike must be positive");
  if (!(sigma > 0.0)) throw DomainError("MarketQuote: sigma must be positive");
  if (!(t0 <= t && t <= T_mat))
    throw DomainError("MarketQuote: requires t0 <= t <= T_mat");
  if (running_integral < 0.0)
    throw DomainError("MarketQuote: running_integral must be non-negative");
  if (t == t0 && running_integral != 0.0)
    throw DomainError("MarketQuote: running_integral must be zero at t = t0");
}

const char* engine_name(Engine e) {
  switch (e) {
    case Engine::closed: return "closed";
    case Engine::yor: return "yor";
    case Engine::laplace: return "laplace";
    case Engine::mc: return "mc";
  }
  return "?";
}

Engine engine_from_name(const std::string& name) {
  if (name == "closed") return Engine::closed;
  if (name == "yor") return Engine::yor;
  if (name == "laplace") return Engine::laplace;
  if (name == "mc") return Engine::mc;
  throw DomainError("unknown engine: " + name);
}

NormalizedInput normalize(const MarketQuote& mq) {
  mq.validate();
  NormalizedInput n;
  n.nu = 2.0 * mq.varpi / (mq.sigma * mq.sigma) - 1.0;
  n.h = mq.sigma * mq.sigma / 4.0 * (mq.T_mat - mq.t);
  n.q = mq.sigma * mq.sigma / (4.0 * mq.s_t) *
        (mq.strike * (mq.T_mat - mq.t0) - mq.running_integral);
  n.k = mq.strike / mq.s_t;
  n.q_star = n.q - n.k * n.h;
  return n;
}

double denormalize_price(const MarketQuote& mq, double c_nu) {
  return std::exp(-mq.r * (mq.T_mat - mq.t)) * 4.0 * mq.s_t /
         (mq.sigma * mq.sigma * (mq.T_mat - mq.t0)) * c_nu;
}

std::string to_json(const MarketQuote& mq) {
  nlohmann::ordered_json j;
  j["s_t"] = mq.s_t;
  j["strike"] = mq.strike;
  j["r"] = mq.r;
  j["varpi"] = mq.varpi;
  j["sigma"] = mq.sigma;
  j["t0"] = mq.t0;
  j["t"] = mq.t;
  j["T_mat"] = mq.T_mat;
  j["running_integral"] = mq.running_integral;
  return j.dump();
}

std::string to_json(const PriceEstimate& pe) {
  nlohmann::ordered_json j;
  j["value"] = pe.value;
  j["engine"] = engine_name(pe.engine);
  j["err_est"] = pe.err_est;
  j["diagnostics"] = pe.diagnostics;
  return j.dump();
}

MarketQuote market_quote_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  static const char* known[] = {"s_t", "strike", "r",     "varpi",
                                "sigma", "t0",   "t",     "T_mat",
                                "running_integral"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok = ok || it.key() == k;
    if (!ok) throw DomainError("MarketQuote json: unknown key '" + it.key() + "'");
  }
  MarketQuote mq;
  mq.s_t = j.at("s_t").get<double>();
  mq.strike = j.at("strike").get<double>();
  mq.r = j.value("r", 0.0);
  mq.varpi = j.contains("varpi") ? j.at("varpi").get<double>() : mq.r;
  mq.sigma = j.at("sigma").get<double>();
  mq.t0 = j.value("t0", 0.0);
  mq.t = j.value("t", mq.t0);
  mq.T_mat = j.at("T_mat").get<double>();
  mq.running_integral = j.value("running_integral", 0.0);
  mq.validate();
  return mq;
}

}  // namespace asianop
