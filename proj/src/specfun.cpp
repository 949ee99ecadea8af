#include "asianop/specfun.hpp"

#include <array>
#include <cmath>

namespace asianop {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kSqrtPi = 1.772453850905516027298167483341145183;

// Lanczos approximation, g = 607/128 with Godfrey's 15 coefficients
// (relative error below 1e-14 in the right half-plane).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczosC = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    3.3994649984811888699e-5,
    4.6523628927048575665e-5,   -9.8374475304879564677e-5,
    1.5808870322491248884e-4,   -2.1026444172410488319e-4,
    2.1743961811521264320e-4,   -1.6431810653676389022e-4,
    8.4418223983852743293e-5,   -2.6190838401581408670e-5,
    3.6899182659531622704e-6};

Complex lanczos_sum(Complex z) {
  Complex s(kLanczosC[0], 0.0);
  for (int k = 1; k < 15; ++k) s += kLanczosC[k] / (z + double(k - 1));
  return s;
}

bool near_nonpositive_integer(Complex z, double tol) {
  if (std::abs(z.imag()) > tol) return false;
  double r = std::round(z.real());
  return r <= 0.0 && std::abs(z.real() - r) <= tol;
}

// Degree within nudge distance of a non-negative integer (polynomial case).
bool near_polynomial_degree(Complex nu, int* n_out) {
  if (std::abs(nu.imag()) > 1e-8) return false;
  double r = std::round(nu.real());
  if (r < 0.0 || std::abs(nu.real() - r) > 1e-8) return false;
  *n_out = int(r);
  return true;
}

// w(zeta) = e^{-zeta^2} Erfc(-i zeta) for Im(zeta) >= 0, by the pole
// expansion of the Gaussian with the residue correction inside the strip
// Im(zeta) < pi/delta. The grid (integer or half-integer multiples of
// delta) is chosen to keep Re(zeta) away from the nodes.
Complex faddeeva_upper(Complex zeta) {
  constexpr double delta = 0.4;
  constexpr int K = 17;  // exp(-(K*delta)^2) ~ 6e-21
  double fr = zeta.real() / delta;
  fr -= std::floor(fr);
  const bool trapezoid = (fr > 0.25 && fr < 0.75);
  Complex s(0.0, 0.0);
  if (trapezoid) {
    for (int k = -K; k <= K; ++k) {
      const double t = k * delta;
      s += std::exp(-t * t) / (zeta - t);
    }
  } else {
    for (int k = -K - 1; k <= K; ++k) {
      const double t = (k + 0.5) * delta;
      s += std::exp(-t * t) / (zeta - t);
    }
  }
  s *= Complex(0.0, delta / kPi);
  if (zeta.imag() < kPi / delta) {
    const Complex em = std::exp(Complex(0.0, -2.0 * kPi / delta) * zeta);
    const Complex denom = trapezoid ? (1.0 - em) : (1.0 + em);
    s += 2.0 * std::exp(-zeta * zeta) / denom;
  }
  return s;
}

QuadSpec bridge_spec() {
  QuadSpec s;
  s.abs_tol = 1e-13;
  s.rel_tol = 1e-12;
  s.max_depth = 48;
  s.tail_eps = 1e-15;
  return s;
}

}  // namespace

Complex gamma_complex(Complex z) {
  if (near_nonpositive_integer(z, 1e-12 * std::max(1.0, std::abs(z.real()))))
    throw PoleError("gamma_complex: argument at a non-positive integer pole");
  if (z.real() < 0.5) {
    // Reflection Gamma(z) Gamma(1-z) = pi / sin(pi z).
    return kPi / (std::sin(kPi * z) * gamma_complex(1.0 - z));
  }
  const Complex t = z + (kLanczosG - 0.5);
  return std::sqrt(2.0 * kPi) * std::pow(t, z - 0.5) * std::exp(-t) *
         lanczos_sum(z);
}

Complex log_gamma(Complex z) {
  if (z.real() >= 0.5) {
    const Complex t = z + (kLanczosG - 0.5);
    return (z - 0.5) * std::log(t) - t +
           std::log(std::sqrt(2.0 * kPi) * lanczos_sum(z));
  }
  return std::log(gamma_complex(z));
}

Complex pochhammer(Complex x, int n) {
  if (n < 0) throw DomainError("pochhammer: n must be non-negative");
  Complex p(1.0, 0.0);
  for (int k = 0; k < n; ++k) p *= x + double(k);
  return p;
}

Complex erfc_scaled(Complex z) {
  if (z.real() < 0.0)
    throw DomainError("erfc_scaled: Re(z) must be non-negative");
  if (std::abs(z) < 1e-7) {
    return 1.0 - 2.0 / kSqrtPi * z + z * z;  // pole expansion cancels badly at 0
  }
  return faddeeva_upper(Complex(-z.imag(), z.real()));  // w(i z)
}

Complex erfc(Complex z) {
  if (z.real() < 0.0) return 2.0 - erfc(-z);
  const double log_mag = z.imag() * z.imag() - z.real() * z.real();
  if (log_mag > 700.0)
    throw OverflowError("erfc: e^{-z^2} overflows; use erfc_scaled");
  return std::exp(-z * z) * erfc_scaled(z);
}

Complex hermite_polynomial(int n, Complex z) {
  if (n < 0) throw DomainError("hermite_polynomial: degree must be >= 0");
  if (n == 0) return Complex(1.0, 0.0);
  Complex hm1(1.0, 0.0);
  Complex h = 2.0 * z;
  for (int k = 1; k < n; ++k) {
    Complex hp1 = 2.0 * z * h - 2.0 * double(k) * hm1;
    hm1 = h;
    h = hp1;
  }
  return h;
}

namespace specfun_detail {

Complex hermite_series(Complex nu, Complex z, const HermitePolicy& policy) {
  // H_nu(z) = 1/(2 Gamma(-nu)) sum_n (-1)^n/n! Gamma((n-nu)/2) (2z)^n.
  // Even and odd gamma factors advance by one-step recurrences.
  const Complex two_z = 2.0 * z;
  const Complex zz = two_z * two_z;
  Complex te = gamma_complex(-nu / 2.0);                  // n = 0 term
  Complex to = -gamma_complex((1.0 - nu) / 2.0) * two_z;  // n = 1 term
  Complex sum = te + to;
  int run = 0;
  for (int k = 0; 2 * k + 3 < policy.max_series_terms; ++k) {
    te *= (double(k) - nu / 2.0) * zz / ((2.0 * k + 1.0) * (2.0 * k + 2.0));
    to *= (double(k) + (1.0 - nu) / 2.0) * zz /
          ((2.0 * k + 2.0) * (2.0 * k + 3.0));
    sum += te + to;
    const double tail = std::abs(te) + std::abs(to);
    // run-length guard: alternating-sign complex series
    run = (tail < 0.25e-14 * std::abs(sum)) ? run + 1 : 0;
    if (run >= 3) return sum / (2.0 * gamma_complex(-nu));
  }
  throw ConvergenceError("hermite series: max_series_terms exceeded");
}

double hermite_asym_bound(Complex nu, double abs_z, double delta, int n) {
  const double M = 2.0 * (n + 1) - nu.real();
  const double lg_M = std::lgamma(M);
  const double lg_np = std::lgamma(double(n + 2));
  const double lg_nu = log_gamma(-nu).real();  // log |Gamma(-nu)| for real part
  const double ln_bound = -M * std::log(std::sin(delta)) + lg_M - lg_np -
                          lg_nu - M * std::log(2.0 * abs_z);
  return std::exp(ln_bound);
}

double hermite_asym_best(Complex nu, double abs_z, double delta, int max_n,
                         int* best_n) {
  double best = std::numeric_limits<double>::infinity();
  int arg = 0;
  int rising = 0;
  for (int n = 0; n <= max_n; ++n) {
    const double b = hermite_asym_bound(nu, abs_z, delta, n);
    if (b < best) {
      best = b;
      arg = n;
      rising = 0;
    } else if (++rising > 4) {
      break;
    }
  }
  if (best_n) *best_n = arg;
  return best;
}

Complex hermite_asymptotic(Complex nu, Complex z, const HermitePolicy& policy,
                           double* achieved_bound) {
  const double arg_z = std::arg(z);
  if (!(std::abs(arg_z) <= kPi / 2.0 - policy.wedge_delta + 1e-15))
    throw WedgeError("hermite asymptotic path invoked outside the wedge");
  if (!(nu.real() < 0.0))
    throw DomainError("hermite asymptotic path requires Re(nu) < 0");
  const double delta_eff = kPi / 2.0 - std::abs(arg_z);
  int n = 0;
  const double bound =
      hermite_asym_best(nu, std::abs(z), delta_eff, 30, &n);
  const double leading = std::exp((nu * std::log(2.0 * z)).real());
  if (!(bound <= policy.asym_target_tol * std::max(leading, 1e-300)))
    throw ConvergenceError("hermite asymptotic: error bound above target");
  if (achieved_bound) *achieved_bound = bound;
  // (2z)^nu sum_k (-1)^k (-nu)_{2k} / (k! (2z)^{2k})
  const Complex inv_zz = 1.0 / (4.0 * z * z);
  Complex term(1.0, 0.0);
  Complex sum = term;
  for (int k = 0; k < n; ++k) {
    term *= -(-nu + 2.0 * k) * (-nu + 2.0 * k + 1.0) * inv_zz / (k + 1.0);
    sum += term;
  }
  return std::exp(nu * std::log(2.0 * z)) * sum;
}

}  // namespace specfun_detail

namespace {

// Integral representation with the u -> t^{1/s} substitution on [0,1]
// removing the u^{s-1} endpoint behaviour (s = -Re(nu)).
Complex hermite_bridge(Complex nu, Complex z, const QuadSpec& spec) {
  const double s = -nu.real();
  const Complex i_im(0.0, -nu.imag());
  // upper truncation: u^2 + 2 Re(z) u - (s-1) ln u > ln(1/tail)
  double T = std::max(4.0, -z.real() + std::sqrt(z.real() * z.real() + 45.0));
  for (int it = 0; it < 3; ++it) {
    double want = 45.0 + std::max(0.0, (s - 1.0) * std::log(T));
    T = std::max(4.0, -z.real() + std::sqrt(z.real() * z.real() + want));
  }
  auto head = [&](double t) {
    // u = t^{1/s}; du u^{-(nu+1)} = (1/s) t^{-i Im(nu)/s} dt
    const double u = std::pow(t, 1.0 / s);
    Complex osc(1.0, 0.0);
    if (nu.imag() != 0.0)
      osc = std::exp(i_im / s * std::log(t));
    return std::exp(-u * u - 2.0 * z * u) * osc / s;
  };
  auto tail = [&](double u) {
    return std::exp(-u * u - 2.0 * z * u - (nu + 1.0) * std::log(u));
  };
  QuadResult r1 = integrate_finite(head, 0.0, 1.0, spec);
  QuadResult r2 = integrate_finite(tail, 1.0, T, spec);
  return (r1.value + r2.value) / gamma_complex(-nu);
}

}  // namespace

Complex hermite_integral(Complex nu, Complex z, const QuadSpec& spec) {
  if (!(nu.real() < 0.0))
    throw DomainError("hermite_integral: Re(nu) must be negative");
  return hermite_bridge(nu, z, spec);
}

Complex hermite(Complex nu, Complex z, const HermitePolicy& policy) {
  int n = 0;
  if (near_polynomial_degree(nu, &n)) return hermite_polynomial(n, z);
  if (std::abs(z) <= policy.series_radius)
    return specfun_detail::hermite_series(nu, z, policy);
  if (nu.real() < 0.0 &&
      std::abs(std::arg(z)) <= kPi / 2.0 - policy.wedge_delta) {
    try {
      return specfun_detail::hermite_asymptotic(nu, z, policy);
    } catch (const ConvergenceError&) {
      // bound unreachable at this radius; fall through to the bridge
    }
  }
  if (nu.real() < 0.0) return hermite_bridge(nu, z, bridge_spec());
  // positive non-integer degree beyond the series radius: raise the degree
  // through the recurrence H_{m+1} = 2z H_m - 2m H_{m-1} from degrees in
  // (-2, 0) where the series or bridge applies.
  const int steps = int(std::ceil(nu.real())) + 1;
  Complex mu = nu - double(steps);
  Complex hm1 = hermite(mu - 1.0, z, policy);
  Complex h = hermite(mu, z, policy);
  for (int k = 0; k < steps; ++k) {
    Complex hp1 = 2.0 * z * h - 2.0 * (mu + double(k)) * hm1;
    hm1 = h;
    h = hp1;
  }
  return h;
}

ScaledReal hermite_real_scaled(double mu, double x,
                               const HermitePolicy& policy) {
  int n = 0;
  if (near_polynomial_degree(Complex(mu, 0.0), &n))
    return {hermite_polynomial(n, Complex(x, 0.0)).real(), 0.0};
  if (!(mu < 0.0))
    throw DomainError("hermite_real_scaled: degree must be negative");
  if (std::abs(x) <= policy.series_radius) {
    return {specfun_detail::hermite_series(Complex(mu, 0.0), Complex(x, 0.0),
                                           policy)
                .real(),
            0.0};
  }
  if (x > 0.0) {
    try {
      return {specfun_detail::hermite_asymptotic(Complex(mu, 0.0),
                                                 Complex(x, 0.0), policy)
                  .real(),
              0.0};
    } catch (const ConvergenceError&) {
      return {hermite_bridge(Complex(mu, 0.0), Complex(x, 0.0), bridge_spec())
                  .real(),
              0.0};
    }
  }
  // x < -series_radius: fold the e^{x^2} growth into log_scale so the value
  // factor stays O(1):  H_mu(x) e^{-x^2} = 1/Gamma(s) int e^{-(u-|x|)^2} u^{s-1} du.
  const double s = -mu;
  const double ax = -x;
  const QuadSpec spec = bridge_spec();
  const double T = ax + std::sqrt(45.0 + std::max(0.0, (s - 1.0) *
                                                            std::log(ax + 7.0)));
  auto head = [&](double t) {
    const double u = std::pow(t, 1.0 / s);
    const double d = u - ax;
    return std::exp(-d * d) / s;
  };
  auto body = [&](double u) {
    const double d = u - ax;
    return std::exp(-d * d + (s - 1.0) * std::log(u));
  };
  QuadResult r1 = integrate_finite(head, 0.0, 1.0, spec);
  QuadResult r2 = integrate_finite(body, 1.0, T, spec);
  const double g = std::lgamma(s);
  return {(r1.value.real() + r2.value.real()) * std::exp(-g), x * x};
}

Complex bessel_i(Complex mu, Complex z) {
  if (z.imag() == 0.0 && z.real() < 0.0)
    throw BranchError("bessel_i: z on the negative real axis branch cut");
  // integer-order symmetry I_{-n} = I_n keeps the series prefactor off the
  // Gamma poles
  if (std::abs(mu.imag()) < 1e-12) {
    const double r = std::round(mu.real());
    if (r < 0.0 && std::abs(mu.real() - r) < 1e-12) mu = -mu;
  }
  if (std::abs(z) == 0.0) {
    if (std::abs(mu) == 0.0) return Complex(1.0, 0.0);
    if (mu.real() > 0.0) return Complex(0.0, 0.0);
    throw DomainError("bessel_i: z = 0 with Re(mu) < 0");
  }
  Complex term = std::exp(mu * std::log(z / 2.0) - log_gamma(mu + 1.0));
  Complex sum = term;
  const Complex q = z * z / 4.0;
  int run = 0;
  for (int m = 0; m < 700; ++m) {
    term *= q / ((m + 1.0) * (mu + double(m) + 1.0));
    sum += term;
    run = (std::abs(term) < 0.25e-14 * std::abs(sum)) ? run + 1 : 0;
    if (run >= 3) return sum;
  }
  throw ConvergenceError("bessel_i: series did not converge in 700 terms");
}

Complex bessel_i_schlafli(Complex mu, Complex z, const QuadSpec& spec) {
  if (!(z.real() > 0.0))
    throw DomainError("bessel_i_schlafli: requires Re(z) > 0");
  auto trig = [&](double th) {
    return std::exp(z * std::cos(th)) * std::cos(mu * th);
  };
  QuadResult r1 = integrate_finite(trig, 0.0, kPi, spec);
  Complex result = r1.value / kPi;
  const Complex s = std::sin(mu * kPi);
  if (std::abs(s) > 1e-15) {
    auto f = [&](double x) {
      return std::exp(-z * std::cosh(x) - mu * x);
    };
    const double a_mu = std::abs(mu.real()) + std::abs(mu.imag());
    auto env = [&](double x) {
      return std::exp(-z.real() * std::cosh(x) + a_mu * x);
    };
    QuadResult r2 = integrate_semi_infinite(f, 0.0, env, spec);
    result -= s / kPi * r2.value;
  }
  return result;
}

Complex weber_closed_form(double a, Complex mu) {
  if (!(a > 0.0)) throw DomainError("weber_closed_form: a must be positive");
  if (!(mu.real() > -1.0))
    throw DomainError("weber_closed_form: Re(mu) must exceed -1");
  return std::exp(-(mu + 1.0) * std::log(2.0 * a) + 1.0 / (4.0 * a));
}

void HermitePolicy::validate() const {
  if (!(series_radius >= 0.5 && series_radius <= 8.0))
    throw DomainError("HermitePolicy: series_radius out of [0.5, 8]");
  if (max_series_terms < 50)
    throw DomainError("HermitePolicy: max_series_terms too small");
  if (!(asym_target_tol >= 1e-13))
    throw DomainError("HermitePolicy: asym_target_tol below double floor");
  if (!(wedge_delta > 0.0 && wedge_delta <= kPi / 2.0))
    throw DomainError("HermitePolicy: wedge_delta outside (0, pi/2]");
  // The asymptotic bound must reach the target tolerance, relative to the
  // leading term, somewhere within a practical radius for every degree in
  // the supported envelope; the bridge covers [series_radius, that radius).
  for (double mu : {-0.25, -1.5, -4.0, -8.0, -13.0}) {
    const Complex nu(mu, 0.0);
    bool ok = false;
    for (double r = series_radius; r <= 64.0; r *= 1.3) {
      const double lead = std::pow(2.0 * r, mu);
      if (specfun_detail::hermite_asym_best(nu, r, wedge_delta, 30, nullptr) <=
          asym_target_tol * lead) {
        ok = true;
        break;
      }
    }
    if (!ok)
      throw DomainError(
          "HermitePolicy: asym_target_tol unreachable within radius 64 for "
          "degree envelope");
  }
}

}  // namespace asianop
