#include "cavlab/rng.hpp"

#include <cmath>
#include <numbers>

namespace cavlab {

double Rng::normal() {
  const double u1 = next_double_open0();
  const double u2 = next_double();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace cavlab
