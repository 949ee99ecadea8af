#ifndef ASIANOP_YOR_MC_HPP
#define ASIANOP_YOR_MC_HPP

#include <cstdint>
#include <vector>

#include "asianop/model.hpp"
#include "asianop/quad.hpp"

namespace asianop {

struct McSettings {
  std::int64_t paths = 200000;
  int steps = 400;            // time grid on [0, h]
  std::uint64_t seed = 0x5eed;
  bool antithetic = false;

  void validate() const;
};

// psi_a(h) = int_0^inf e^{-w^2/(2h)} e^{-a cosh w} sinh(w) sin(pi w / h) dw
double psi_a(double a, double h, const QuadSpec& spec);

// Yor's triple-integral representation of the normalized price (q > 0).
PriceEstimate price_yor(double nu, double h, double q, const QuadSpec& spec);

// Monte Carlo estimate of E[(int_0^h e^{2(B_tau + nu tau)} dtau - q)^+],
// trapezoid rule on a uniform grid, counter-based per-path substreams.
PriceEstimate mc_price(double nu, double h, double q, const McSettings& mc);

// One path set, several strikes; deterministic for fixed (seed, paths,
// steps) like mc_price, and identical to per-q calls with the same seed.
std::vector<PriceEstimate> mc_price_multi(double nu, double h,
                                          const std::vector<double>& qs,
                                          const McSettings& mc);

// E[int_0^h e^{2(B+nu tau)} dtau] = (e^{2(nu+1)h} - 1)/(2(nu+1)),
// value h at the removable point nu = -1.
double expected_a(double nu, double h);

// n-th moment of A_h as printed in the source text, returned verbatim.
// Contradicted by the MC oracle; see moment_a_reconciled.
double moment_a(int n, double h);

// The reconciled moment formula: exponent e^{+2k^2 h}, the k = 0 term not
// doubled, and an overall 1/2^n. Matches E[A_h] and E[A_h^2] exactly.
double moment_a_reconciled(int n, double h);

}  // namespace asianop

#endif  // ASIANOP_YOR_MC_HPP
