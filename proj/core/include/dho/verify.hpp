#pragma once

#include <string>
#include <vector>

namespace dho {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool pass() const;
};

enum class VerifySuite { Tables, Identities, Residuals, All };
VerifySuite parse_suite(const std::string& name);

// Exact self-checks of the coefficient tables, the Hermite recursion
// identities (orders 1-3, n <= 12) and the residual orders (n <= 6, m <= 5).
VerifyReport verify_tables();
VerifyReport verify_identities(long max_n = 12);
VerifyReport verify_residuals(long max_n = 6, long max_m = 5);
VerifyReport run_suite(VerifySuite suite);

}  // namespace dho
