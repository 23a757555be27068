#include <algorithm>
#include <cmath>
#include <limits>

#include "dho/errors.hpp"
#include "dho/reference_solver.hpp"
#include "dho/wavefunction.hpp"

namespace dho {

TridiagonalOperator build_tridiagonal(double omega, double x0, long j0, ParityMode mode) {
  if (!(omega >= 0) || !std::isfinite(omega)) throw InvalidInput("omega must be non-negative");
  if (!std::isfinite(x0)) throw InvalidInput("x0 must be finite");
  if (j0 < 0) throw InvalidInput("j0 must be non-negative");
  if (mode != ParityMode::None && x0 != 0)
    throw InvalidInput("parity-reduced operators exist only for x0 = 0");
  if (mode == ParityMode::Odd && j0 < 1) throw InvalidInput("odd sector needs j0 >= 1");

  TridiagonalOperator op;
  op.parity = mode;
  op.omega = omega;
  op.x0 = x0;
  op.j_offset = mode == ParityMode::None ? -j0 : (mode == ParityMode::Even ? 0 : 1);
  const double half_w2 = 0.5 * omega * omega;
  for (long j = op.j_offset; j <= j0; ++j) {
    const double d = static_cast<double>(j) - x0;
    op.diag.push_back(half_w2 * d * d);
  }
  if (op.diag.size() > 1) op.offdiag.assign(op.diag.size() - 1, -0.5);
  // Symmetrised even-sector coupling between j = 0 and j = 1.
  if (mode == ParityMode::Even && !op.offdiag.empty()) op.offdiag[0] = -1.0 / std::sqrt(2.0);
  return op;
}

size_t TridiagonalOperator::sturm_count(double probe) const {
  const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  size_t neg = 0;
  double d = 1;
  for (size_t i = 0; i < diag.size(); ++i) {
    d = diag[i] - probe - (i > 0 ? offdiag[i - 1] * offdiag[i - 1] / d : 0.0);
    if (std::abs(d) < tiny) d = -tiny;
    if (d < 0) ++neg;
  }
  return neg;
}

std::pair<double, double> TridiagonalOperator::gershgorin() const {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (size_t i = 0; i < diag.size(); ++i) {
    double r = 0;
    if (i > 0) r += std::abs(offdiag[i - 1]);
    if (i + 1 < diag.size()) r += std::abs(offdiag[i]);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }
  return {lo, hi};
}

std::vector<double> TridiagonalOperator::apply(const std::vector<double>& v) const {
  if (v.size() != diag.size()) throw InvalidInput("vector length does not match operator");
  std::vector<double> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    double s = diag[i] * v[i];
    if (i > 0) s += offdiag[i - 1] * v[i - 1];
    if (i + 1 < v.size()) s += offdiag[i] * v[i + 1];
    out[i] = s;
  }
  return out;
}

long select_dimension(double omega, long n, DimensionRule rule) {
  if (!(omega > 0)) throw InvalidInput("omega must be positive");
  if (n < 0) throw InvalidInput("negative quantum number");
  if (rule == DimensionRule::Strict)
    return static_cast<long>(std::ceil((2.0 / (omega * omega) + 1.0) / 2.0));
  return static_cast<long>(std::ceil(1.25 * static_cast<double>(default_truncation(n, 1, omega, 1e-18))));
}

std::string to_string(ParityMode m) {
  switch (m) {
    case ParityMode::Even: return "even";
    case ParityMode::Odd: return "odd";
    default: return "none";
  }
}

}  // namespace dho
