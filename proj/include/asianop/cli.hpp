#ifndef ASIANOP_CLI_HPP
#define ASIANOP_CLI_HPP

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "asianop/laplace_gy.hpp"
#include "asianop/model.hpp"
#include "asianop/pricer_closed.hpp"
#include "asianop/yor_mc.hpp"

namespace asianop {

struct RunConfig {
  enum class Command { price, greeks, compare, grid, selftest };
  enum class Format { json, csv, table };

  Command command = Command::price;
  std::optional<MarketQuote> quote;
  std::optional<NormalizedInput> normalized;  // research input, bypasses normalize()
  std::set<Engine> engines{Engine::closed};
  Format output_format = Format::json;
  ClosedFormSettings closed;
  BromwichSettings bromwich;
  McSettings mc;
  // grid sweeps (normalized coordinates)
  std::vector<double> grid_nu, grid_h, grid_q;

  void validate() const;
};

// Executes one command; emits machine-readable output on `out`, diagnostics
// on `err`. Exit codes: 0 ok, 2 validation failure, 3 numerical failure,
// 4 tolerance FAIL in compare.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// argv front end (flags or --config file); usage errors exit 1.
int run_main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace asianop

#endif  // ASIANOP_CLI_HPP
