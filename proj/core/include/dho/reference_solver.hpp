#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dho {

enum class ParityMode { None, Even, Odd };

// Finite section of H(x0): diagonal omega^2 (j-x0)^2 / 2, off-diagonal -1/2.
// Rows are j = j_offset, j_offset + 1, ...
struct TridiagonalOperator {
  std::vector<double> diag;
  std::vector<double> offdiag;  // offdiag[i] couples rows i and i+1
  long j_offset = 0;
  ParityMode parity = ParityMode::None;
  double omega = 0;
  double x0 = 0;

  size_t size() const { return diag.size(); }
  // Number of eigenvalues strictly below the probe (LDL^T inertia).
  size_t sturm_count(double probe) const;
  // Union of Gershgorin intervals.
  std::pair<double, double> gershgorin() const;
  std::vector<double> apply(const std::vector<double>& v) const;
};

// Even mode: j in [0, j0], first coupling -1/sqrt(2). Odd mode: j in [1, j0].
TridiagonalOperator build_tridiagonal(double omega, double x0, long j0, ParityMode mode);

enum class DimensionRule { Tail, Strict };
long select_dimension(double omega, long n, DimensionRule rule);

struct EigenPair {
  double value = 0;
  std::vector<double> vector;  // unit Euclidean norm, in the operator's rows
  double residual = 0;         // |Hv - value v|
};

struct EigenOptions {
  // Optional starting vectors for inverse iteration, one per requested pair.
  std::vector<std::vector<double>> seeds;
  int max_restarts = 4;
};

// Lowest `count` pairs in ascending order: Sturm bisection for the values,
// inverse iteration for the vectors.
std::vector<EigenPair> eigenpairs(const TridiagonalOperator& op, size_t count,
                                  const EigenOptions& opts = {});

// Map a sector vector back to j in [-j0, j0] with unit norm. Full-mode
// vectors on [-j0, j0] are returned unchanged.
std::vector<double> unfold_to_full(const TridiagonalOperator& op, const std::vector<double>& v);

// State n of H(x0) on [-j0, j0]: parity sectors when x0 = 0, the full chain
// otherwise. The vector is unit-norm on the full grid.
EigenPair reference_state(long n, double omega, double x0, long j0,
                          const std::vector<double>* seed_full = nullptr);
// Same, with j0 chosen by select_dimension(Tail).
EigenPair reference_state(long n, double omega, double x0 = 0);

enum class MathieuFamily { A, B };
enum class MathieuMethod { Matrix, Asymptotic };

struct MathieuQuery {
  long order = 0;  // r in a_r / b_r
  double q = 0;
  // Floquet exponent 2*x0; unset means the value fixed by the parity of r.
  std::optional<double> nu;
  MathieuFamily family = MathieuFamily::A;
  long series_order = 16;  // asymptotic method only
};

struct MathieuResult {
  double value = 0;   // characteristic value a = 2 q lambda
  long state = 0;     // oscillator level n
  double x0 = 0;
  double omega = 0;
  double lambda = 0;
};

double mathieu_omega(double q);
// Oscillator level and displacement behind a_r or b_r.
std::pair<long, double> mathieu_state(long order, MathieuFamily family);
MathieuResult mathieu_characteristic(const MathieuQuery& query, MathieuMethod method);

std::string to_string(ParityMode m);
std::string to_string(MathieuFamily f);
std::string to_string(MathieuMethod m);

}  // namespace dho
