#pragma once

#include <string>
#include <vector>

#include "dho/ansatz.hpp"
#include "dho/formal_series.hpp"

namespace dho {

// Equations "combination = 0", solved by Gauss-Jordan elimination with
// pivots taken in the sorted order of the unknowns.
class LinearSystem {
 public:
  void add_equation(const LinearCombination& eq);
  const std::vector<LinearCombination>& equations() const { return eqs_; }
  // Every unknown with a nonzero coefficient somewhere.
  std::vector<Unknown> unknowns() const;
  // Unique solution; throws InconsistentSystem when there is none or when
  // some unknown is left free.
  Bindings solve() const;

 private:
  std::vector<LinearCombination> eqs_;
};

struct ExpansionOptions {
  Grading grading = Grading::XiOrder;
  // Treat the Hermite coefficients h_k as unknowns (used to generate
  // recursion identities); alpha, beta and lambda must then be known.
  bool symbolic_hermite = false;
};

// Orders 0 and 1: the continuum solution.
Bindings seed_bindings(long n);

// Slots that must be bound (known or unknown) for an expansion through
// target_order. With XiOrder the beta_{k,target+1} may be left out.
std::vector<Unknown> required_slots(long n, int target_order, Grading grading);

// LHS - RHS of the shifted-exponent form of the difference equation,
// expanded in (x, u = sqrt(omega)) and truncated at weight 2*target_order.
// Slots in neither `known` nor `unknowns` count as zero.
FormalSeries expand_difference_residual(long n, int target_order, const Bindings& known,
                                        const std::vector<Unknown>& unknowns,
                                        const ExpansionOptions& opts = {});

struct OrderCertificate {
  int order = 0;
  std::vector<std::pair<std::pair<int, int>, LinearCombination>> equations;  // (x power, u power)
  std::vector<Unknown> pinned;
  std::vector<Unknown> cancelled;  // next-order betas that dropped out
  Bindings solved;
};

// Solve for alpha_{.,m}, beta_{.,m}, lambda^(m) given everything below m.
Bindings solve_next_order(long n, int m, const Bindings& state, OrderCertificate* cert = nullptr);

struct DerivationResult {
  long n = 0;
  int max_order = 0;
  Bindings values;
  std::vector<OrderCertificate> orders;
  std::string certificate_json() const;
};

DerivationResult derive(long n, int max_order);

struct IdentityResult {
  bool pass = true;
  long witness_k = 0;  // first violating index when !pass
  std::string detail;
};

// Recursion identities among Hermite coefficients at orders 1..3.
IdentityResult verify_recursion_identity(int order, long n);
// Hand-simplified closed-form rows (even n for orders 2 and 3).
IdentityResult verify_closed_form_identity(int order, long n);
// Rows generated from the xi-graded residual with symbolic h_k.
std::vector<LinearCombination> generated_identity_rows(int order, long n);

enum class ResidualEquation { Difference, Ode };

// Largest M such that the residual of the order-m solution vanishes exactly
// through omega^M. Searches up to m + extra orders.
long residual_order(long n, long m, ResidualEquation eq, long extra = 2);
long residual_order(const AnsatzCoefficients& a, ResidualEquation eq, long extra = 2);

}  // namespace dho
