#include "dho/verify.hpp"

#include <string>

#include "dho/derivation.hpp"
#include "dho/errors.hpp"
#include "dho/exact_core.hpp"

namespace dho {

namespace {

void expect_equal(VerifyReport& r, const std::string& name, const Rational& got, const Rational& want) {
  r.checks.push_back({name, got == want, "got " + got.get_str() + ", expected " + want.get_str()});
}

}  // namespace

bool VerifyReport::pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

VerifySuite parse_suite(const std::string& name) {
  if (name == "tables") return VerifySuite::Tables;
  if (name == "identities") return VerifySuite::Identities;
  if (name == "residuals") return VerifySuite::Residuals;
  if (name == "all") return VerifySuite::All;
  throw InvalidInput("unknown suite '" + name + "' (identities, residuals, tables or all)");
}

VerifyReport verify_tables() {
  VerifyReport r;
  // Known low-order exponent coefficients.
  struct AlphaCase {
    long n, k, l;
    const char* value;
  };
  const AlphaCase alphas[] = {{0, 1, 2, "-3/32"},    {0, 1, 3, "-53/1536"},  {0, 2, 2, "1/96"},
                              {2, 1, 2, "-7/32"},    {2, 1, 3, "-275/1536"}, {2, 2, 3, "23/1024"},
                              {2, 3, 3, "-1/1280"}};
  for (const auto& a : alphas)
    expect_equal(r,
                 "alpha(n=" + std::to_string(a.n) + ",k=" + std::to_string(a.k) + ",l=" + std::to_string(a.l) + ")",
                 alpha_coefficient(a.n, a.k, a.l), parse_rational(a.value));

  // beta(k,1) = 1 is the leading term, so corrections start at l=2.
  expect_equal(r, "beta(n=2,k=1,l=2)", beta_coefficient(2, 1, 2), Rational(1, 4));
  expect_equal(r, "beta(n=2,k=1,l=3)", beta_coefficient(2, 1, 3), Rational(37, 256));

  const auto& t = CoefficientTables::instance();
  expect_equal(r, "lambda0", eigenvalue_coefficient(5, 0), Rational(-1));
  expect_equal(r, "lambda1(n=1)", eigenvalue_coefficient(1, 1), Rational(3, 2));
  for (long m = 2; m <= kGeneralEigenvalueOrder; ++m) {
    const long p = t.eigenvalue_denominator_exponent(m);
    const HatPolynomial d = t.eigenvalue_terms()[static_cast<size_t>(m)] * (-pow2(p));
    bool integral = true;
    for (const auto& c : d.coefficients()) integral = integral && c.get_den() == 1;
    const bool ok = integral && d.degree() == m && d.has_parity(static_cast<int>(m % 2)) &&
                    sgn(d.coefficients().back()) > 0;
    r.checks.push_back({"d" + std::to_string(m) + " structure over 2^" + std::to_string(p), ok, d.str()});
  }
  expect_equal(r, "d2 = nhat^2 + 1", t.eigenvalue_terms()[2].at_state(3) * (-pow2(6)), Rational(50));
  expect_equal(r, "lambda2(n=0)", eigenvalue_coefficient(0, 2), Rational(-1, 32));
  expect_equal(r, "lambda3(n=2)", eigenvalue_coefficient(2, 3), Rational(-35, 512));
  expect_equal(r, "lambda17(n=0)", eigenvalue_coefficient(0, 17),
               -Rational(Integer("363372562420411197")) * pow2(-79));
  r.checks.push_back({"exponent slots through order 31", exponent_slot_count(31) == 496,
                      std::to_string(exponent_slot_count(31))});
  return r;
}

VerifyReport verify_identities(long max_n) {
  VerifyReport r;
  for (int order = 1; order <= 3; ++order)
    for (long n = 0; n <= max_n; ++n) {
      const IdentityResult res = verify_recursion_identity(order, n);
      r.checks.push_back({"identity order " + std::to_string(order) + " n=" + std::to_string(n), res.pass,
                          res.pass ? "all rows vanish" : res.detail});
    }
  return r;
}

VerifyReport verify_residuals(long max_n, long max_m) {
  VerifyReport r;
  for (long n = 0; n <= max_n; ++n)
    for (long m = 1; m <= max_m; ++m) {
      const long d = residual_order(n, m, ResidualEquation::Difference);
      const long o = residual_order(n, m, ResidualEquation::Ode);
      r.checks.push_back({"residual n=" + std::to_string(n) + " m=" + std::to_string(m), d >= m && o >= m,
                          "difference " + std::to_string(d) + ", ode " + std::to_string(o)});
    }
  return r;
}

VerifyReport run_suite(VerifySuite suite) {
  VerifyReport out;
  auto append = [&](const VerifyReport& r) { out.checks.insert(out.checks.end(), r.checks.begin(), r.checks.end()); };
  if (suite == VerifySuite::Tables || suite == VerifySuite::All) append(verify_tables());
  if (suite == VerifySuite::Identities || suite == VerifySuite::All) append(verify_identities());
  if (suite == VerifySuite::Residuals || suite == VerifySuite::All) append(verify_residuals());
  return out;
}

}  // namespace dho
