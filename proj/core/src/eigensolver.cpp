#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "dho/errors.hpp"
#include "dho/reference_solver.hpp"

namespace dho {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double norm2(const std::vector<double>& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

void scale(std::vector<double>& v, double s) {
  for (double& x : v) x *= s;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Smallest value with at least rank+1 eigenvalues below or at it.
double bisect(const TridiagonalOperator& op, size_t rank, double lo, double hi) {
  for (int it = 0; it < 300; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double tol = 2 * kEps * std::max(std::abs(lo), std::abs(hi));
    if (hi - lo <= tol) break;
    if (op.sturm_count(mid) > rank)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

// LU of (T - shift I) with partial pivoting; solve in place.
class ShiftedSolver {
 public:
  ShiftedSolver(const TridiagonalOperator& op, double shift) : n_(op.size()) {
    d_.resize(n_);
    dl_.assign(n_ > 0 ? n_ - 1 : 0, 0.0);
    du_.assign(n_ > 0 ? n_ - 1 : 0, 0.0);
    du2_.assign(n_ > 1 ? n_ - 2 : 0, 0.0);
    swap_.assign(n_, false);
    for (size_t i = 0; i < n_; ++i) d_[i] = op.diag[i] - shift;
    for (size_t i = 0; i + 1 < n_; ++i) dl_[i] = du_[i] = op.offdiag[i];
    double scale_ = 0;
    for (size_t i = 0; i < n_; ++i) scale_ = std::max(scale_, std::abs(op.diag[i]) + 1.0);
    const double floor = kEps * scale_;
    for (size_t i = 0; i + 1 < n_; ++i) {
      if (std::abs(d_[i]) >= std::abs(dl_[i])) {
        if (d_[i] == 0) d_[i] = floor;
        const double f = dl_[i] / d_[i];
        dl_[i] = f;
        d_[i + 1] -= f * du_[i];
      } else {
        const double f = d_[i] / dl_[i];
        d_[i] = dl_[i];
        dl_[i] = f;
        const double t = du_[i];
        du_[i] = d_[i + 1];
        d_[i + 1] = t - f * d_[i + 1];
        if (i + 2 < n_) {
          du2_[i] = du_[i + 1];
          du_[i + 1] = -f * du2_[i];
        }
        swap_[i] = true;
      }
    }
    for (double& v : d_)
      if (std::abs(v) < floor) v = v < 0 ? -floor : floor;
  }

  void solve(std::vector<double>& b) const {
    for (size_t i = 0; i + 1 < n_; ++i) {
      if (swap_[i]) {
        const double t = b[i];
        b[i] = b[i + 1];
        b[i + 1] = t - dl_[i] * b[i + 1];
      } else {
        b[i + 1] -= dl_[i] * b[i];
      }
    }
    for (size_t ii = n_; ii-- > 0;) {
      double s = b[ii];
      if (ii + 1 < n_) s -= du_[ii] * b[ii + 1];
      if (ii + 2 < n_) s -= du2_[ii] * b[ii + 2];
      b[ii] = s / d_[ii];
    }
  }

 private:
  size_t n_;
  std::vector<double> d_, dl_, du_, du2_;
  std::vector<bool> swap_;
};

double residual_of(const TridiagonalOperator& op, const std::vector<double>& v, double value) {
  std::vector<double> hv = op.apply(v);
  for (size_t i = 0; i < v.size(); ++i) hv[i] -= value * v[i];
  return norm2(hv);
}

}  // namespace

std::vector<EigenPair> eigenpairs(const TridiagonalOperator& op, size_t count, const EigenOptions& opts) {
  const size_t dim = op.size();
  if (dim == 0) throw InvalidInput("empty operator");
  if (count > dim) throw InvalidInput("requested more eigenpairs than the dimension");
  std::vector<EigenPair> out;
  if (count == 0) return out;

  auto [glo, ghi] = op.gershgorin();
  const double spread = std::max(1.0, ghi - glo);
  glo -= kEps * spread;
  ghi += kEps * spread;

  std::vector<double> values(count);
  for (size_t r = 0; r < count; ++r) values[r] = bisect(op, r, r > 0 ? values[r - 1] - kEps * spread : glo, ghi);

  // Vectors of values closer than this are explicitly orthogonalised.
  const double cluster_gap = 1e-3 * spread;
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  for (size_t r = 0; r < count; ++r) {
    const double lambda = values[r];
    const double tol = 1e-12 * std::max(1.0, std::abs(lambda));
    EigenPair best;
    best.residual = std::numeric_limits<double>::infinity();
    for (int attempt = 0; attempt <= opts.max_restarts; ++attempt) {
      std::vector<double> v(dim);
      if (attempt == 0 && r < opts.seeds.size() && opts.seeds[r].size() == dim && norm2(opts.seeds[r]) > 0) {
        v = opts.seeds[r];
      } else {
        for (double& x : v) x = unit(rng);
      }
      const double shift = lambda + attempt * 4 * kEps * spread * (attempt % 2 ? 1 : -1);
      const ShiftedSolver lu(op, shift);
      scale(v, 1.0 / norm2(v));
      for (int it = 0; it < 6; ++it) {
        lu.solve(v);
        for (size_t s = r; s-- > 0;) {
          if (std::abs(values[s] - lambda) > cluster_gap) break;
          const double c = dot(v, out[s].vector);
          for (size_t i = 0; i < dim; ++i) v[i] -= c * out[s].vector[i];
        }
        const double nv = norm2(v);
        if (!(nv > 0) || !std::isfinite(nv)) break;
        scale(v, 1.0 / nv);
        if (it >= 1 && residual_of(op, v, lambda) <= tol) break;
      }
      const double res = residual_of(op, v, lambda);
      if (std::isfinite(res) && res < best.residual) {
        best.value = lambda;
        best.vector = v;
        best.residual = res;
      }
      if (best.residual <= tol) break;
    }
    if (!(best.residual <= tol))
      throw NumericalFailure("inverse iteration did not converge for eigenvalue " + std::to_string(r) +
                             " (residual " + std::to_string(best.residual) + ")");
    // Deterministic sign: first component of largest magnitude is positive.
    size_t arg = 0;
    for (size_t i = 1; i < dim; ++i)
      if (std::abs(best.vector[i]) > std::abs(best.vector[arg]) * (1 + 1e-12)) arg = i;
    if (best.vector[arg] < 0) scale(best.vector, -1.0);
    out.push_back(std::move(best));
  }
  return out;
}

std::vector<double> unfold_to_full(const TridiagonalOperator& op, const std::vector<double>& v) {
  if (v.size() != op.size()) throw InvalidInput("vector length does not match operator");
  if (op.parity == ParityMode::None) return v;
  const long j0 = op.j_offset + static_cast<long>(op.size()) - 1;
  std::vector<double> full(static_cast<size_t>(2 * j0 + 1), 0.0);
  const double r = 1.0 / std::sqrt(2.0);
  for (size_t i = 0; i < v.size(); ++i) {
    const long j = op.j_offset + static_cast<long>(i);
    if (j == 0) {
      full[static_cast<size_t>(j0)] = v[i];
    } else {
      const double sign = op.parity == ParityMode::Odd ? -1.0 : 1.0;
      full[static_cast<size_t>(j0 + j)] = v[i] * r;
      full[static_cast<size_t>(j0 - j)] = sign * v[i] * r;
    }
  }
  return full;
}

EigenPair reference_state(long n, double omega, double x0, long j0, const std::vector<double>* seed_full) {
  if (n < 0) throw InvalidInput("negative quantum number");
  ParityMode mode = ParityMode::None;
  size_t rank = static_cast<size_t>(n);
  if (x0 == 0) {
    mode = n % 2 ? ParityMode::Odd : ParityMode::Even;
    rank = static_cast<size_t>(n / 2);
  }
  const TridiagonalOperator op = build_tridiagonal(omega, x0, j0, mode);
  if (rank >= op.size()) throw InvalidInput("grid too small for state " + std::to_string(n));

  EigenOptions opts;
  if (seed_full && seed_full->size() == static_cast<size_t>(2 * j0 + 1)) {
    std::vector<double> s(op.size());
    for (size_t i = 0; i < op.size(); ++i) s[i] = (*seed_full)[static_cast<size_t>(op.j_offset + j0) + i];
    opts.seeds.assign(rank + 1, {});
    opts.seeds[rank] = std::move(s);
  }
  std::vector<EigenPair> pairs = eigenpairs(op, rank + 1, opts);
  EigenPair p = std::move(pairs.back());
  p.vector = unfold_to_full(op, p.vector);
  // Sign convention of the asymptotic vectors: positive just right of x0.
  long jstar = static_cast<long>(std::floor(x0)) + 1;
  if (n % 2 == 0) {
    jstar = static_cast<long>(std::lround(x0));
  }
  double ref = p.vector[static_cast<size_t>(jstar + j0)];
  if (ref == 0) ref = p.vector[static_cast<size_t>(jstar + 1 + j0)];
  if (ref < 0) scale(p.vector, -1.0);
  return p;
}

EigenPair reference_state(long n, double omega, double x0) {
  return reference_state(n, omega, x0, select_dimension(omega, n, DimensionRule::Tail));
}

}  // namespace dho
