#ifndef ASIANOP_QUAD_HPP
#define ASIANOP_QUAD_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <vector>

#include "asianop/errors.hpp"

namespace asianop {

using Complex = std::complex<double>;

// Tolerances and limits for the adaptive integrators.
struct QuadSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_depth = 40;        // bisection depth per panel
  double tail_eps = 1e-13;   // semi-infinite truncation threshold
  void validate() const;
};

struct QuadResult {
  Complex value{0.0, 0.0};
  double err_est = 0.0;
  double abs_integral = 0.0;  // integral of |f|, for rounding-floor diagnostics
};

namespace quad_detail {

// Gauss-Kronrod 7/15 nodes and weights on [-1,1] (QUADPACK dqk15).
inline constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
inline constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Panel {
  double a = 0, b = 0;
  Complex value{0, 0};
  double err = 0;
  double resabs = 0;
  int depth = 0;
};

template <class F>
Panel eval_panel(F&& f, double a, double b, int depth) {
  const double c = 0.5 * (a + b);
  const double hw = 0.5 * (b - a);
  Complex fc = f(c);
  if (!std::isfinite(fc.real()) || !std::isfinite(fc.imag()))
    throw EvalError("integrand returned non-finite value");
  Complex kron = kWgk[7] * fc;
  Complex gauss{0, 0};
  double resabs = kWgk[7] * std::abs(fc);
  for (int j = 0; j < 7; ++j) {
    const double dx = hw * kXgk[j];
    Complex f1 = f(c - dx);
    Complex f2 = f(c + dx);
    if (!std::isfinite(f1.real()) || !std::isfinite(f1.imag()) ||
        !std::isfinite(f2.real()) || !std::isfinite(f2.imag()))
      throw EvalError("integrand returned non-finite value");
    kron += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  Panel p;
  p.a = a;
  p.b = b;
  p.value = hw * kron;
  p.resabs = hw * resabs;
  p.depth = depth;
  const double diff = hw * std::abs(kron - gauss);
  // QUADPACK-style sharpening of the embedded estimate.
  p.err = (p.resabs > 0 && diff < p.resabs)
              ? p.resabs * std::min(1.0, std::pow(200.0 * diff / p.resabs, 1.5))
              : diff;
  p.err = std::max(p.err, diff * 1e-2);
  return p;
}

template <class F>
QuadResult adaptive(F&& f, double a, double b, const QuadSpec& spec,
                    int max_panels = 2000) {
  QuadResult out;
  if (a == b) return out;
  std::vector<Panel> panels;
  panels.push_back(eval_panel(f, a, b, 0));
  auto total = [&panels]() {
    Complex v{0, 0};
    double e = 0, l1 = 0;
    for (const auto& p : panels) {
      v += p.value;
      e += p.err;
      l1 += p.resabs;
    }
    return std::tuple<Complex, double, double>(v, e, l1);
  };
  for (;;) {
    auto [v, e, l1] = total();
    const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(v));
    if (e <= tol || e <= l1 * 4e-16) {
      // Deterministic in-order summation of the final panel set.
      std::sort(panels.begin(), panels.end(),
                [](const Panel& x, const Panel& y) { return x.a < y.a; });
      out = QuadResult{};
      for (const auto& p : panels) {
        out.value += p.value;
        out.err_est += p.err;
        out.abs_integral += p.resabs;
      }
      return out;
    }
    auto worst = std::max_element(
        panels.begin(), panels.end(),
        [](const Panel& x, const Panel& y) { return x.err < y.err; });
    if (worst->depth >= spec.max_depth || (int)panels.size() >= max_panels)
      throw QuadError("adaptive quadrature: tolerance not reached (err=" +
                      std::to_string(e) + ")");
    Panel old = *worst;
    const double mid = 0.5 * (old.a + old.b);
    *worst = eval_panel(f, old.a, mid, old.depth + 1);
    panels.push_back(eval_panel(f, mid, old.b, old.depth + 1));
  }
}

}  // namespace quad_detail

// Adaptive Gauss-Kronrod integration of f over [a, b].
template <class F>
QuadResult integrate_finite(F&& f, double a, double b, const QuadSpec& spec) {
  if (a > b) throw DomainError("integrate_finite: a > b");
  auto wrap = [&f](double x) { return Complex(f(x)); };
  return quad_detail::adaptive(wrap, a, b, spec);
}

// Integration of f over [a, inf) where envelope is a nonincreasing bound on
// |f| beyond some point. Truncates where the documented factor-2 tail bound
// drops below tail_eps.
template <class F, class Env>
QuadResult integrate_semi_infinite(F&& f, double a, Env&& envelope,
                                   const QuadSpec& spec) {
  double t_prev = a;
  double t = a + 1.0;
  double tail_bound = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 80; ++k) {
    const double width = std::max(1.0, t - t_prev);
    tail_bound = 2.0 * envelope(t) * width;
    if (tail_bound < spec.tail_eps) break;
    t_prev = t;
    t = a + 2.0 * (t - a);
    if (t - a > 1e9)
      throw TailError("integrate_semi_infinite: envelope never drops below tail_eps");
  }
  if (!(tail_bound < spec.tail_eps))
    throw TailError("integrate_semi_infinite: envelope never drops below tail_eps");
  auto wrap = [&f](double x) { return Complex(f(x)); };
  QuadResult r = quad_detail::adaptive(wrap, a, t, spec);
  r.err_est += tail_bound;
  return r;
}

// Panel-by-panel integration over consecutive half-periods, for integrands
// with a sign change per half period. For infinite upper limits the
// alternating-series tail bound is applied once envelope-bounded panel
// contributions fall below tail_eps.
template <class F, class Env>
QuadResult integrate_oscillatory(F&& f, double a, double b, double half_period,
                                 Env&& envelope, const QuadSpec& spec) {
  if (!(half_period > 0)) throw DomainError("integrate_oscillatory: half_period <= 0");
  const bool infinite = std::isinf(b);
  if (!infinite && a > b) throw DomainError("integrate_oscillatory: a > b");
  QuadSpec panel_spec = spec;
  panel_spec.abs_tol = std::max(1e-14, spec.abs_tol / 16.0);
  auto wrap = [&f](double x) { return Complex(f(x)); };
  QuadResult out;
  double lo = a;
  double last_panel_mag = std::numeric_limits<double>::infinity();
  const long max_panels = 200000;
  for (long k = 0; k < max_panels; ++k) {
    double hi = infinite ? a + (k + 1) * half_period : std::min(b, a + (k + 1) * half_period);
    QuadResult p = quad_detail::adaptive(wrap, lo, hi, panel_spec, 400);
    out.value += p.value;
    out.err_est += p.err_est;
    out.abs_integral += p.abs_integral;
    last_panel_mag = std::abs(p.value);
    lo = hi;
    if (!infinite && hi >= b) return out;
    if (infinite && last_panel_mag < spec.tail_eps &&
        envelope(hi) * half_period < spec.tail_eps) {
      out.err_est += last_panel_mag + envelope(hi) * half_period;
      return out;
    }
  }
  throw TailError("integrate_oscillatory: panel budget exhausted");
}

}  // namespace asianop

#endif  // ASIANOP_QUAD_HPP
