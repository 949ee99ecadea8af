#include "asianop/pricer_closed.hpp"

#include <cmath>
#include <sstream>

#include "asianop/yor_mc.hpp"

namespace asianop {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSqrtPi = 1.772453850905516027298167483341145183;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void check_q_positive_domain(double nu, double h, double q, double min_h) {
  if (!(h >= min_h))
    throw OscillationError(
        "closed form: h below the oscillation floor min_h; use the laplace "
        "or mc engine");
  if (!(q >= kMinQ))
    throw SmallQError("closed form: q below the 1e-4 floor of the q > 0 branch");
  if (std::abs(nu + 1.0) <= 1e-8)
    throw NuPoleError(
        "closed form: nu within 1e-8 of -1; the q > 0 limiting form is not "
        "printed in the source material");
  if (!(nu > -4.0 && nu <= 8.0))
    throw DomainError("closed form: nu outside the supported envelope (-4, 8]");
  if (kPi * kPi / (2.0 * h) > 700.0)
    throw OverflowGuardError("closed form: e^{pi^2/(2h)} bookkeeping overflows");
}

// (e^{2h(nu+1)} - 1)/(nu+1), with the removable value 2h at nu = -1.
double expm1_ratio(double nu, double h) {
  if (std::abs(nu + 1.0) < 1e-8) return 2.0 * h;
  return std::expm1(2.0 * h * (nu + 1.0)) / (nu + 1.0);
}

}  // namespace

double e_b_via_erfc(double b, double h, double y) {
  if (!(h > 0.0)) throw DomainError("e_b_via_erfc: h must be positive");
  const double s2h = std::sqrt(2.0 * h);
  const double beta = y / s2h + 0.5 * b * s2h;
  const double c = kPi / s2h;
  // E_b = (sqrt(pi)/2) e^{-pi^2/(2h)} Im[e^{i pi b} Erfc(beta + i c)];
  // the exponents cancel exactly against |e^{-(beta+ic)^2}| = e^{c^2-beta^2}:
  //   E_b = (sqrt(pi)/2) e^{-beta^2} Im[e^{-i pi y/h} erfcx(|beta| + i c)]
  // with the erfc reflection supplying 2 sin(pi b) e^{-pi^2/(2h)} for beta < 0.
  const Complex phase = std::polar(1.0, -kPi * y / h);
  if (beta >= 0.0) {
    const Complex w = erfc_scaled(Complex(beta, c));
    return 0.5 * kSqrtPi * std::exp(-beta * beta) * (phase * w).imag();
  }
  const Complex w = erfc_scaled(Complex(-beta, -c));
  const double reflected =
      2.0 * std::sin(kPi * b) * std::exp(-c * c);
  return 0.5 * kSqrtPi *
         (reflected - std::exp(-beta * beta) * (phase * w).imag());
}

double e_b(double b, double h, double y, const QuadSpec& spec) {
  if (!(h > 0.0)) throw DomainError("e_b: h must be positive");
  if (h < kMinH)
    throw OscillationError("e_b: h below the oscillation floor");
  const double s2h = std::sqrt(2.0 * h);
  const double lo = y / s2h + 0.5 * b * s2h;
  const double freq = s2h / h;  // sin(pi(b - u*freq))
  auto f = [&](double u) {
    return std::exp(-u * u) * std::sin(kPi * (b - u * freq));
  };
  auto env = [&](double u) {
    return u > 0.0 ? std::exp(-u * u) : 1.0;
  };
  const double half_period = h / s2h;
  QuadResult r = integrate_oscillatory(
      f, lo, std::numeric_limits<double>::infinity(), half_period, env, spec);
  return r.value.real();
}

namespace pricer_detail {

double c_trig_theta(double nu, double h, double q, const ClosedFormSettings& s,
                    double* err_out) {
  const double inv2q = 1.0 / (2.0 * q);
  // c(nu, q) with e^{-1/(2q)} folded into the integrand's Hermite scale
  const double c_rest = std::exp(std::lgamma(nu + 4.0) +
                                 0.5 * (nu + 2.0) * std::log(2.0 * q)) *
                        expm1_ratio(nu, h) / kPi;
  const double mu = -(nu + 4.0);
  auto f = [&](double th) {
    const ScaledReal H =
        hermite_real_scaled(mu, -std::cos(th) / std::sqrt(2.0 * q), s.hermite);
    return H.value * std::exp(H.log_scale - inv2q) * std::cos(nu * th);
  };
  QuadResult r = integrate_finite(f, 0.0, kPi, s.quad);
  if (err_out) *err_out = std::abs(c_rest) * r.err_est;
  return c_rest * r.value.real();
}

double c_trig_sinh(double nu, double h, double q, const ClosedFormSettings& s,
                   double* err_out) {
  if (!(nu > -1.0))
    throw DomainError("c_trig sinh representation requires nu > -1");
  const double em1r = expm1_ratio(nu, h);
  const double closed = 0.5 * em1r * (1.0 + 2.0 * q * (nu + 1.0));
  const double sin_nu_pi = std::sin(nu * kPi);
  if (err_out) *err_out = 0.0;
  if (std::abs(sin_nu_pi) < 1e-15) return closed;  // integer nu
  const double inv2q = 1.0 / (2.0 * q);
  const double c_rest = std::exp(std::lgamma(nu + 4.0) +
                                 0.5 * (nu + 2.0) * std::log(2.0 * q)) *
                        em1r / kPi;
  const double mu = -(nu + 4.0);
  auto f = [&](double x) {
    const ScaledReal H =
        hermite_real_scaled(mu, std::cosh(x) / std::sqrt(2.0 * q), s.hermite);
    return H.value * std::exp(H.log_scale - inv2q - nu * x);
  };
  auto env = [&](double x) {
    // H decays like (2 cosh x / sqrt(2q))^{-(nu+4)}
    return std::exp(-(2.0 * nu + 4.0) * std::max(0.0, x - 1.0) - inv2q +
                    std::abs(nu));
  };
  QuadResult r = integrate_semi_infinite(f, 0.0, env, s.quad);
  if (err_out) *err_out = std::abs(c_rest * sin_nu_pi) * r.err_est;
  return closed + sin_nu_pi * c_rest * r.value.real();
}

double c_hyp_core(double b, double nu, double h, double q,
                  const ClosedFormSettings& s, int degree_shift,
                  bool cosh_weight, double* err_out, double* round_floor_out) {
  const double s2h = std::sqrt(2.0 * h);
  const double c = kPi / s2h;
  const double mu = -(nu + 4.0 + degree_shift);
  const double sq2q = std::sqrt(2.0 * q);
  const double pi2_2h = kPi * kPi / (2.0 * h);
  auto f = [&](double y) {
    const ScaledReal H = hermite_real_scaled(mu, std::cosh(y) / sq2q, s.hermite);
    const double beta = y / s2h + 0.5 * b * s2h;
    const Complex phase = std::polar(1.0, -kPi * y / h);
    double v;
    if (beta >= 0.0) {
      const Complex w = erfc_scaled(Complex(beta, c));
      v = H.value * std::exp(H.log_scale + pi2_2h - y * y / (2.0 * h)) *
          (phase * w).imag();
    } else {
      const Complex w = erfc_scaled(Complex(-beta, -c));
      v = H.value * std::exp(H.log_scale + 0.5 * b * b * h + b * y) * 2.0 *
              std::sin(kPi * b) -
          H.value * std::exp(H.log_scale + pi2_2h - y * y / (2.0 * h)) *
              (phase * w).imag();
    }
    return cosh_weight ? v * std::cosh(y) : v;
  };
  const ScaledReal H0 = hermite_real_scaled(mu, 1.0 / sq2q, s.hermite);
  const double env_scale =
      std::abs(H0.value) * std::exp(H0.log_scale) + 1e-300;
  auto env = [&](double y) {
    const double coshw = cosh_weight ? std::cosh(y) : 1.0;
    return env_scale * coshw *
           (std::exp(pi2_2h - y * y / (2.0 * h)) +
            std::exp(0.5 * b * b * h + std::min(b * y, 0.0)) * 2.0);
  };
  QuadSpec spec = s.quad;
  spec.tail_eps = s.quad.tail_eps * std::max(1.0, env_scale * std::exp(pi2_2h));
  QuadResult r = integrate_oscillatory(
      f, 0.0, std::numeric_limits<double>::infinity(), h, env, spec);
  if (err_out) *err_out = r.err_est;
  if (round_floor_out) *round_floor_out = 4e-16 * r.abs_integral;
  return r.value.real();
}

}  // namespace pricer_detail

double c_trig(double nu, double h, double q, const ClosedFormSettings& s) {
  if (!(q > 0.0 && h > 0.0)) throw DomainError("c_trig: requires q > 0, h > 0");
  if (s.trig_rep == ClosedFormSettings::TrigRep::sinh_representation)
    return pricer_detail::c_trig_sinh(nu, h, q, s, nullptr);
  return pricer_detail::c_trig_theta(nu, h, q, s, nullptr);
}

double c_hyp(double b, double nu, double h, double q,
             const ClosedFormSettings& s) {
  if (!(q > 0.0 && h > 0.0)) throw DomainError("c_hyp: requires q > 0, h > 0");
  if (kPi * kPi / (2.0 * h) > 700.0)
    throw OverflowGuardError("c_hyp: e^{pi^2/(2h)} bookkeeping overflows");
  return pricer_detail::c_hyp_core(b, nu, h, q, s, 0, false, nullptr, nullptr);
}

PriceEstimate price_normalized(double nu, double h, double q,
                               const ClosedFormSettings& s) {
  if (!(h >= 0.0)) throw DomainError("price_normalized: h must be >= 0");
  PriceEstimate pe;
  pe.engine = Engine::closed;
  pe.diagnostics["nu"] = fmt(nu);
  pe.diagnostics["h"] = fmt(h);
  pe.diagnostics["q"] = fmt(q);
  if (h == 0.0) {
    pe.value = std::max(-q, 0.0);
    pe.err_est = 0.0;
    pe.diagnostics["branch"] = "h=0";
    return pe;
  }
  if (q <= 0.0) {
    pe.value = 0.5 * expm1_ratio(nu, h) - q;
    pe.err_est = 4e-16 * std::abs(pe.value);
    pe.diagnostics["branch"] = "rigid(q<=0)";
    return pe;
  }
  check_q_positive_domain(nu, h, q, s.min_h);

  double trig_err = 0.0;
  double trig;
  const bool use_sinh =
      s.trig_rep == ClosedFormSettings::TrigRep::sinh_representation;
  if (use_sinh) {
    trig = pricer_detail::c_trig_sinh(nu, h, q, s, &trig_err);
    pe.diagnostics["trig_rep"] = "sinh";
  } else {
    trig = pricer_detail::c_trig_theta(nu, h, q, s, &trig_err);
    pe.diagnostics["trig_rep"] = "theta_integral";
  }
  if (s.trig_rep == ClosedFormSettings::TrigRep::auto_rep && nu > -1.0) {
    double alt_err = 0.0;
    const double alt = pricer_detail::c_trig_sinh(nu, h, q, s, &alt_err);
    pe.diagnostics["trig_sinh_crosscheck"] = fmt(alt);
    pe.diagnostics["trig_rep_diff"] = fmt(trig - alt);
  }

  // The printed five-term sum omits the Bessel-recursion cross term of the
  // trigonometric reduction; restoring it is required for agreement with
  // the Laplace-transform and Monte Carlo engines (closed bracket
  // -q e^{2h(nu+1)}, from the two Weber integrals).
  const double correction = -q * std::exp(2.0 * h * (nu + 1.0));

  double hyp_err = 0.0, hyp_floor = 0.0;
  double bracket = 0.0;
  for (const auto& [bb, sign] :
       {std::pair{nu + 2.0, 1.0}, {-(nu + 2.0), 1.0}, {nu, -1.0}, {-nu, -1.0}}) {
    double e = 0.0, fl = 0.0;
    bracket += sign * pricer_detail::c_hyp_core(bb, nu, h, q, s, 0, false, &e, &fl);
    hyp_err += e;
    hyp_floor += fl;
  }
  const double d_log = std::lgamma(nu + 4.0) -
                       std::log(2.0 * kPi * std::abs(nu + 1.0)) +
                       0.5 * (nu + 2.0) * std::log(2.0 * q) -
                       1.0 / (2.0 * q) - 0.5 * nu * nu * h;
  const double d_signed =
      (nu + 1.0 > 0.0 ? 1.0 : -1.0) * std::exp(d_log);

  pe.value = trig + correction + d_signed * bracket;
  pe.err_est = trig_err + std::abs(d_signed) * (hyp_err + hyp_floor) +
               4e-16 * (std::abs(trig) + std::abs(correction));
  pe.diagnostics["branch"] = "five_term(q>0)";
  pe.diagnostics["c_trig"] = fmt(trig);
  pe.diagnostics["recursion_cross_term"] = fmt(correction);
  pe.diagnostics["hyp_bracket"] = fmt(bracket);
  pe.diagnostics["hyp_round_floor"] = fmt(std::abs(d_signed) * hyp_floor);
  pe.diagnostics["e_b_sine_sign"] = "minus_as_printed";
  return pe;
}

PriceEstimate price(const MarketQuote& mq, const ClosedFormSettings& s) {
  const NormalizedInput n = normalize(mq);
  PriceEstimate pe = price_normalized(n.nu, n.h, n.q, s);
  const double pref = denormalize_price(mq, 1.0);
  pe.value *= pref;
  pe.err_est *= std::abs(pref);
  pe.diagnostics["normalized"] = "0";
  return pe;
}

}  // namespace asianop
