#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace cavlab {

struct GradCheckResult {
  double max_rel_err = 0.0;
  std::size_t worst_coord = 0;
  double analytic_at_worst = 0.0;
  double numeric_at_worst = 0.0;
};

// Central-difference check of an analytic gradient.
//
// f must be a scalar-valued function of the parameter vector, evaluated with
// 64-bit accumulation (use the double instantiations in kernels.hpp for
// network oracles). For each probed coordinate i:
//
//   cd_i  = (f(p + h e_i) - f(p - h e_i)) / (2h)
//   err_i = |analytic_i - cd_i| / max(|analytic_i|, |cd_i|, 1e-8)
//
// Returns the max error and where it occurred. Throws ContractViolation when
// f produces a non-finite value. `coords` empty means: probe everything.
GradCheckResult gradient_check(const std::function<double(std::span<const double>)>& f,
                               std::span<const double> params,
                               std::span<const double> analytic_grad,
                               double h = 1e-3,
                               std::span<const std::size_t> coords = {});

}  // namespace cavlab
