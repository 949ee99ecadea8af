#include "asianop/quad.hpp"

namespace asianop {

void QuadSpec::validate() const {
  if (!(abs_tol >= 1e-14) || !(rel_tol >= 1e-14))
    throw DomainError("QuadSpec: tolerances below the double-precision floor 1e-14");
  if (max_depth < 1) throw DomainError("QuadSpec: max_depth must be positive");
  if (!(tail_eps > 0)) throw DomainError("QuadSpec: tail_eps must be positive");
}

}  // namespace asianop
