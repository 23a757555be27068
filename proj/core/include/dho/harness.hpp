#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dho/reference_solver.hpp"
#include "dho/wavefunction.hpp"

namespace dho {

// Geometric grid from start to stop (either direction), inclusive.
std::vector<double> geometric_grid(double start, double stop, int points);
// Parse "START:STOP:POINTS".
std::vector<double> parse_grid(const std::string& text);

struct ExperimentConfig {
  std::vector<long> n_list;
  std::vector<long> m_list;
  std::vector<double> omega_grid;
  double x0 = 0;
  double precision_floor = 1e-11;  // errors below this are censored
};

struct ConvergenceRecord {
  long n = 0;
  long m = 0;
  double omega = 0;
  double norm_error = 0;
  bool censored = false;
  double fitted_slope = 0;  // per (n,m); NaN with fewer than 4 usable points
  double prefactor = 0;     // error / omega^m at the smallest uncensored omega
};

// Error model for the norm: C(n,m) ~ c_m nhat^(2m).
double model_prefactor(long n, long m);

// |psi^(m) - psi_exact| on a common grid, both unit-norm with aligned sign.
double norm_error(long n, long m, double omega, double x0 = 0);

std::vector<ConvergenceRecord> convergence_experiment(const ExperimentConfig& config);

struct LineFit {
  double slope = 0;
  double intercept = 0;
  size_t points = 0;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

struct OrthonormalityRow {
  double omega = 0;
  double max_overlap = 0;  // max |<psi_n, psi_n'>| over n != n'
  long n_a = 0, n_b = 0;   // pair attaining it
  double max_norm_defect = 0;  // max | <psi_n, psi_n> - 1 |
};

struct OrthonormalityResult {
  long m = 0;
  std::vector<OrthonormalityRow> rows;
  std::vector<double> halving_ratios;  // rows[i].max_overlap / rows[i+1].max_overlap
  double fitted_rate = 0;              // slope of log overlap vs log omega
};

OrthonormalityResult orthonormality_experiment(const std::vector<long>& n_list, long m,
                                               const std::vector<double>& omega_grid, double x0 = 0);

struct OrderScan {
  long n = 0;
  double omega = 0;
  double x0 = 0;
  double reference = 0;
  std::vector<std::pair<long, double>> delta;  // (m, |lambda - partial sum|)
  long argmin = 0;
};

OrderScan optimal_order_scan(long n, double omega, long m_max, double x0 = 0);

struct CoefficientEstimate {
  double estimate = 0;
  std::vector<double> omegas;
  std::vector<double> raw;           // (lambda - S_m) / omega^(m+1)
  std::vector<double> extrapolated;  // Richardson across halvings
  bool ill_conditioned = false;
};

// lambda^(m_known+1) from exact eigenvalues at omega0 / 2^k.
CoefficientEstimate estimate_next_eigenvalue_coefficient(long n, long m_known, double omega0,
                                                         int halvings = 4);

double sset_omega(double charging_energy, double josephson_energy);

}  // namespace dho
