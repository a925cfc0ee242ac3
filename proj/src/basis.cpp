#include "weierstrass/basis.hpp"

#include <string>

namespace weierstrass {

void check_parameter(double a) {
  if (!(a >= 0.0 && a < 1.0))
    throw std::invalid_argument("self-similarity parameter must lie in [0, 1), got " + std::to_string(a));
}

int depth_for_tolerance(double a, double tolerance) {
  check_parameter(a);
  if (a == 0.0) return 1;
  int depth = 0;
  double tail = 1.0 / (1.0 - a);
  while (tail > tolerance) {
    tail *= a;
    ++depth;
  }
  return depth;
}

}  // namespace weierstrass
