#include "cavlab/gradcheck.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cavlab/errors.hpp"

namespace cavlab {

GradCheckResult gradient_check(const std::function<double(std::span<const double>)>& f,
                               std::span<const double> params,
                               std::span<const double> analytic_grad,
                               double h,
                               std::span<const std::size_t> coords) {
  if (params.size() != analytic_grad.size())
    throw ContractViolation("gradient_check: params/gradient size mismatch");
  if (!(h > 0.0)) throw ContractViolation("gradient_check: h must be > 0");

  std::vector<std::size_t> all;
  if (coords.empty()) {
    all.resize(params.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    coords = all;
  }

  std::vector<double> p(params.begin(), params.end());
  GradCheckResult result;
  for (std::size_t i : coords) {
    if (i >= p.size())
      throw ContractViolation("gradient_check: coordinate out of range");
    const double saved = p[i];
    p[i] = saved + h;
    const double fp = f(p);
    p[i] = saved - h;
    const double fm = f(p);
    p[i] = saved;
    if (!std::isfinite(fp) || !std::isfinite(fm))
      throw ContractViolation("gradient_check: non-finite intermediate at coord " +
                              std::to_string(i));
    const double cd = (fp - fm) / (2.0 * h);
    const double a = analytic_grad[i];
    const double denom = std::max({std::fabs(a), std::fabs(cd), 1e-8});
    const double err = std::fabs(a - cd) / denom;
    if (err >= result.max_rel_err) {
      result.max_rel_err = err;
      result.worst_coord = i;
      result.analytic_at_worst = a;
      result.numeric_at_worst = cd;
    }
  }
  return result;
}

}  // namespace cavlab
