#include <cmath>
#include <string>

#include "dho/errors.hpp"
#include "dho/exact_core.hpp"
#include "dho/reference_solver.hpp"

namespace dho {

double mathieu_omega(double q) {
  if (!(q > 0) || !std::isfinite(q)) throw InvalidInput("q must be positive");
  return 2.0 / std::sqrt(q);
}

// a_r sits on level r and b_r on level r-1; even r belongs to x0 = 0 and
// odd r to x0 = 1/2.
std::pair<long, double> mathieu_state(long order, MathieuFamily family) {
  if (order < 0) throw InvalidInput("Mathieu order must be non-negative");
  if (family == MathieuFamily::B && order < 1) throw InvalidInput("b_r starts at r = 1");
  const long n = family == MathieuFamily::A ? order : order - 1;
  return {n, order % 2 ? 0.5 : 0.0};
}

MathieuResult mathieu_characteristic(const MathieuQuery& query, MathieuMethod method) {
  MathieuResult res;
  res.omega = mathieu_omega(query.q);
  const auto [n, x0_default] = mathieu_state(query.order, query.family);
  res.state = n;
  res.x0 = x0_default;
  if (query.nu) {
    if (!(*query.nu >= 0 && *query.nu <= 1)) throw InvalidInput("nu must lie in [0, 1]");
    res.x0 = *query.nu / 2;
  }
  if (method == MathieuMethod::Asymptotic) {
    // The series does not see x0 at all.
    res.lambda = eigenvalue_series_value(n, query.series_order, res.omega);
  } else {
    res.lambda = reference_state(n, res.omega, res.x0).value;
  }
  res.value = 2 * query.q * res.lambda;
  return res;
}

std::string to_string(MathieuFamily f) { return f == MathieuFamily::A ? "a" : "b"; }
std::string to_string(MathieuMethod m) { return m == MathieuMethod::Matrix ? "matrix" : "asymptotic"; }

}  // namespace dho
