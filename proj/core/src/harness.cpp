#include "dho/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>

#include "dho/errors.hpp"
#include "dho/exact_core.hpp"
#include "dho/parallel.hpp"

namespace dho {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void check_omega(double omega) {
  if (!(omega > 0) || !std::isfinite(omega)) throw InvalidInput("omega must be positive and finite");
}

// Asymptotic vector of width j0_small placed on [-j0, j0].
std::vector<double> embedded(const AsymptoticWavefunction& w, long j0) {
  std::vector<double> out(static_cast<size_t>(2 * j0 + 1), 0.0);
  for (long j = -std::min(j0, w.j0); j <= std::min(j0, w.j0); ++j)
    out[static_cast<size_t>(j + j0)] = w.at(j);
  return out;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

std::vector<double> geometric_grid(double start, double stop, int points) {
  if (!(start > 0) || !(stop > 0)) throw InvalidInput("grid end points must be positive");
  if (points < 1) throw InvalidInput("grid needs at least one point");
  if (points == 1) return {start};
  std::vector<double> g;
  const double ratio = std::pow(stop / start, 1.0 / (points - 1));
  for (int i = 0; i < points; ++i) g.push_back(i == points - 1 ? stop : start * std::pow(ratio, i));
  return g;
}

std::vector<double> parse_grid(const std::string& text) {
  std::istringstream in(text);
  std::string a, b, c;
  if (!std::getline(in, a, ':') || !std::getline(in, b, ':') || !std::getline(in, c) || a.empty() ||
      b.empty() || c.empty())
    throw InvalidInput("omega grid must look like START:STOP:POINTS, got '" + text + "'");
  try {
    size_t pos = 0;
    const double start = std::stod(a, &pos);
    if (pos != a.size()) throw std::invalid_argument(a);
    const double stop = std::stod(b, &pos);
    if (pos != b.size()) throw std::invalid_argument(b);
    const int points = std::stoi(c, &pos);
    if (pos != c.size()) throw std::invalid_argument(c);
    return geometric_grid(start, stop, points);
  } catch (const std::logic_error&) {
    throw InvalidInput("unreadable omega grid '" + text + "'");
  }
}

double model_prefactor(long n, long m) {
  static const double c[] = {0.03, 0.002, 0.0006, 1.5e-6, 3e-8};
  if (m < 1 || m > 5) return kNaN;
  return c[m - 1] * std::pow(static_cast<double>(hat(n)), 2.0 * static_cast<double>(m));
}

double norm_error(long n, long m, double omega, double x0) {
  check_omega(omega);
  const long j0_ref = select_dimension(omega, n, DimensionRule::Tail);
  const long j0_asym = std::min(j0_ref, default_truncation(n, m, omega));
  const AsymptoticWavefunction w = assemble_eigenvector(n, m, omega, x0, j0_asym);
  const std::vector<double> a = embedded(w, j0_ref);
  const EigenPair ref = reference_state(n, omega, x0, j0_ref, &a);
  const double sign = dot(a, ref.vector) < 0 ? -1.0 : 1.0;
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - sign * ref.vector[i];
    s += d * d;
  }
  return std::sqrt(s);
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  LineFit f;
  f.points = x.size();
  if (x.size() != y.size() || x.size() < 2) {
    f.slope = f.intercept = kNaN;
    return f;
  }
  double mx = 0, my = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double sxx = 0, sxy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  return f;
}

std::vector<ConvergenceRecord> convergence_experiment(const ExperimentConfig& config) {
  if (config.n_list.empty() || config.m_list.empty() || config.omega_grid.empty())
    throw InvalidInput("convergence experiment needs non-empty n, m and omega lists");
  for (double w : config.omega_grid) check_omega(w);

  std::vector<ConvergenceRecord> cells;
  for (long n : config.n_list)
    for (long m : config.m_list)
      for (double w : config.omega_grid) {
        ConvergenceRecord r;
        r.n = n;
        r.m = m;
        r.omega = w;
        cells.push_back(r);
      }
  const std::vector<double> errors =
      parallel_map(cells.size(), [&](size_t i) { return norm_error(cells[i].n, cells[i].m, cells[i].omega, config.x0); });

  std::map<std::pair<long, long>, std::vector<size_t>> groups;
  for (size_t i = 0; i < cells.size(); ++i) {
    cells[i].norm_error = errors[i];
    cells[i].censored = errors[i] < config.precision_floor;
    groups[{cells[i].n, cells[i].m}].push_back(i);
  }
  for (const auto& [nm, idx] : groups) {
    std::vector<double> lx, ly;
    double smallest = std::numeric_limits<double>::infinity(), pref = kNaN;
    for (size_t i : idx) {
      if (cells[i].censored) continue;
      lx.push_back(std::log(cells[i].omega));
      ly.push_back(std::log(cells[i].norm_error));
      if (cells[i].omega < smallest) {
        smallest = cells[i].omega;
        pref = cells[i].norm_error / std::pow(cells[i].omega, static_cast<double>(nm.second));
      }
    }
    const double slope = lx.size() >= 4 ? fit_line(lx, ly).slope : kNaN;
    for (size_t i : idx) {
      cells[i].fitted_slope = slope;
      cells[i].prefactor = pref;
    }
  }
  return cells;
}

OrthonormalityResult orthonormality_experiment(const std::vector<long>& n_list, long m,
                                               const std::vector<double>& omega_grid, double x0) {
  if (n_list.empty() || omega_grid.empty()) throw InvalidInput("orthonormality needs states and a grid");
  OrthonormalityResult res;
  res.m = m;
  res.rows = parallel_map(omega_grid.size(), [&](size_t gi) {
    const double w = omega_grid[gi];
    check_omega(w);
    long j0 = 1;
    for (long n : n_list) j0 = std::max(j0, default_truncation(n, m, w));
    std::vector<std::vector<double>> vecs;
    for (long n : n_list) vecs.push_back(assemble_eigenvector(n, m, w, x0, j0).values);
    OrthonormalityRow row;
    row.omega = w;
    for (size_t a = 0; a < vecs.size(); ++a) {
      row.max_norm_defect = std::max(row.max_norm_defect, std::abs(dot(vecs[a], vecs[a]) - 1.0));
      for (size_t b = a + 1; b < vecs.size(); ++b) {
        const double o = std::abs(dot(vecs[a], vecs[b]));
        if (o > row.max_overlap) {
          row.max_overlap = o;
          row.n_a = n_list[a];
          row.n_b = n_list[b];
        }
      }
    }
    return row;
  });
  std::vector<double> lx, ly;
  for (size_t i = 0; i < res.rows.size(); ++i) {
    if (i + 1 < res.rows.size()) res.halving_ratios.push_back(res.rows[i].max_overlap / res.rows[i + 1].max_overlap);
    if (res.rows[i].max_overlap > 0) {
      lx.push_back(std::log(res.rows[i].omega));
      ly.push_back(std::log(res.rows[i].max_overlap));
    }
  }
  res.fitted_rate = fit_line(lx, ly).slope;
  return res;
}

OrderScan optimal_order_scan(long n, double omega, long m_max, double x0) {
  check_omega(omega);
  if (m_max < 0) throw InvalidInput("m_max must be non-negative");
  OrderScan s;
  s.n = n;
  s.omega = omega;
  s.x0 = x0;
  s.reference = reference_state(n, omega, x0).value;
  double best = std::numeric_limits<double>::infinity();
  for (long m = 0; m <= m_max; ++m) {
    const double d = std::abs(s.reference - eigenvalue_series_value(n, m, omega));
    s.delta.emplace_back(m, d);
    if (d < best) {
      best = d;
      s.argmin = m;
    }
  }
  return s;
}

// The determinant fit is replaced by fitting eigenvalue residuals: the
// scaled remainder r(w) = c + d w + ... is extrapolated by Richardson steps.
CoefficientEstimate estimate_next_eigenvalue_coefficient(long n, long m_known, double omega0, int halvings) {
  check_omega(omega0);
  if (m_known < 0) throw InvalidInput("m_known must be non-negative");
  if (halvings < 2) throw InvalidInput("at least two halvings are needed");
  CoefficientEstimate e;
  for (int k = 0; k <= halvings; ++k) e.omegas.push_back(omega0 / std::pow(2.0, k));
  const std::vector<double> lambdas =
      parallel_map(e.omegas.size(), [&](size_t i) { return reference_state(n, e.omegas[i], 0.0).value; });
  for (size_t i = 0; i < e.omegas.size(); ++i) {
    const double w = e.omegas[i];
    const double rem = lambdas[i] - eigenvalue_series_value(n, m_known, w);
    // Remainders near double-precision noise make the fit meaningless.
    if (std::abs(rem) < 1e-13 * std::max(1.0, std::abs(lambdas[i]))) e.ill_conditioned = true;
    e.raw.push_back(rem / std::pow(w, static_cast<double>(m_known + 1)));
  }
  for (size_t i = 0; i + 1 < e.raw.size(); ++i) e.extrapolated.push_back(2 * e.raw[i + 1] - e.raw[i]);
  e.estimate = e.extrapolated.back();
  const double prev = e.extrapolated[e.extrapolated.size() - 2];
  if (std::abs(e.estimate - prev) > 0.05 * std::abs(e.estimate)) e.ill_conditioned = true;
  return e;
}

double sset_omega(double charging_energy, double josephson_energy) {
  if (!(charging_energy > 0) || !(josephson_energy > 0))
    throw InvalidInput("charging and Josephson energies must be positive");
  return std::sqrt(2 * charging_energy / josephson_energy);
}

}  // namespace dho
