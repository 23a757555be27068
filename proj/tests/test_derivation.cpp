#include <gtest/gtest.h>

#include "json.hpp"

#include "dho/derivation.hpp"
#include "dho/errors.hpp"
#include "dho/exact_core.hpp"

using namespace dho;

TEST(LinearCombination, Arithmetic) {
  const auto a = Unknown::alpha(1, 2), b = Unknown::beta(1, 2);
  LinearCombination x = LinearCombination::of(a, 2) + LinearCombination::of(b) + Rational(3);
  x -= LinearCombination::of(a, 2);
  EXPECT_EQ(x.terms().size(), 1u);
  EXPECT_EQ(x.coefficient(b), 1);
  EXPECT_EQ(x.constant(), 3);
  EXPECT_EQ((x * Rational(0)).is_zero(), true);
  EXPECT_THROW(LinearCombination::of(a) * LinearCombination::of(b), InconsistentSystem);
  const LinearCombination s = x.substitute({{b, Rational(1, 2)}});
  EXPECT_FALSE(s.has_unknowns());
  EXPECT_EQ(s.constant(), Rational(7, 2));
  EXPECT_EQ(s.substitute({{b, Rational(5)}}).constant(), Rational(7, 2));
}

TEST(FormalSeries, ExpMatchesTaylor) {
  // exp(u^2 x) through u-power 6: sum_j (u^2 x)^j / j!.
  FormalSeries f;
  f.add(1, 2, Rational(1));
  const Truncation t{Grading::UPower, 6};
  const FormalSeries e = FormalSeries::exp(f, t);
  EXPECT_EQ(e.coefficient(0, 0).constant(), 1);
  EXPECT_EQ(e.coefficient(1, 2).constant(), 1);
  EXPECT_EQ(e.coefficient(2, 4).constant(), Rational(1, 2));
  EXPECT_EQ(e.coefficient(3, 6).constant(), Rational(1, 6));
  EXPECT_EQ(e.size(), 4u);
}

TEST(FormalSeries, ProductAndDerivative) {
  FormalSeries a, b;
  a.add(1, 0, Rational(1));
  a.add(0, 2, Rational(2));
  b.add(1, 0, Rational(1));
  b.add(0, 2, Rational(-2));
  const FormalSeries p = FormalSeries::product(a, b);
  EXPECT_EQ(p.coefficient(2, 0).constant(), 1);
  EXPECT_TRUE(p.coefficient(1, 2).is_zero());
  EXPECT_EQ(p.coefficient(0, 4).constant(), -4);
  EXPECT_EQ(p.derivative_x().coefficient(1, 0).constant(), 2);
  EXPECT_EQ(p.parity_part(1).size(), 0u);
}

TEST(LinearSystem, SolvesAndRejects) {
  const auto u = Unknown::alpha(1, 2), v = Unknown::alpha(2, 2);
  LinearSystem s;
  s.add_equation(LinearCombination::of(u) + LinearCombination::of(v) - Rational(3));
  s.add_equation(LinearCombination::of(u) - LinearCombination::of(v) - Rational(1));
  const Bindings b = s.solve();
  EXPECT_EQ(b.at(u), 2);
  EXPECT_EQ(b.at(v), 1);

  LinearSystem free;
  free.add_equation(LinearCombination::of(u) + LinearCombination::of(v));
  EXPECT_THROW(free.solve(), InconsistentSystem);

  LinearSystem bad;
  bad.add_equation(LinearCombination::of(u) - Rational(1));
  bad.add_equation(LinearCombination::of(u) - Rational(2));
  EXPECT_THROW(bad.solve(), InconsistentSystem);
}

TEST(Expansion, LowOrdersVanish) {
  for (long n = 0; n <= 12; ++n) {
    std::vector<Unknown> next;
    for (int k = 1; k <= n / 2; ++k) next.push_back(Unknown::beta(k, 2));
    const FormalSeries r = expand_difference_residual(n, 1, seed_bindings(n), next);
    EXPECT_TRUE(r.is_zero()) << "n=" << n << "\n" << r.str();
  }
}

TEST(Expansion, GroundStateThroughOmegaCubed) {
  // n = 0 in powers of u with alpha_{1,2}, alpha_{2,2}, alpha_{1,3}.. unknown.
  std::vector<Unknown> unk;
  for (const auto& u : required_slots(0, 3, Grading::UPower))
    if (!(u == Unknown::alpha(1, 1)) && !(u == Unknown::lambda(0)) && !(u == Unknown::lambda(1))) unk.push_back(u);
  ExpansionOptions opts;
  opts.grading = Grading::UPower;
  const FormalSeries r = expand_difference_residual(0, 3, seed_bindings(0), unk, opts);
  // u^4 x^0 ties lambda^(2) to alpha_{1,2}; u^6 x^2 ties alpha_{1,2} to alpha_{2,2}.
  const LinearCombination c04 = r.coefficient(0, 4);
  EXPECT_EQ(c04.coefficient(Unknown::alpha(1, 2)), 1);
  EXPECT_EQ(c04.coefficient(Unknown::lambda(2)), 1);
  EXPECT_EQ(c04.constant(), Rational(1, 8));
  const LinearCombination c26 = r.coefficient(2, 6);
  EXPECT_EQ(c26.coefficient(Unknown::alpha(1, 2)), -2);
  EXPECT_EQ(c26.coefficient(Unknown::alpha(2, 2)), 6);
  // The omega^3 x^0 slot carries -alpha_{1,2}/2.
  EXPECT_EQ(r.coefficient(0, 6).coefficient(Unknown::alpha(1, 2)), Rational(-1, 2));
  EXPECT_THROW(expand_difference_residual(0, 3, seed_bindings(0), {}, opts), InvalidInput);
}

TEST(Derivation, GroundStateOrderTwo) {
  const Bindings s = solve_next_order(0, 2, seed_bindings(0));
  EXPECT_EQ(s.at(Unknown::alpha(1, 2)), Rational(-3, 32));
  EXPECT_EQ(s.at(Unknown::alpha(2, 2)), Rational(1, 96));
  EXPECT_EQ(s.at(Unknown::lambda(2)), Rational(-1, 32));
}

TEST(Derivation, SecondStateOrderTwoHasThreeUnknowns) {
  OrderCertificate cert;
  solve_next_order(2, 2, seed_bindings(2), &cert);
  std::vector<Unknown> pinned_coeffs;
  for (const auto& u : cert.pinned)
    if (u.kind != Unknown::Kind::Lambda) pinned_coeffs.push_back(u);
  ASSERT_EQ(pinned_coeffs.size(), 3u);
  EXPECT_EQ(pinned_coeffs[0], Unknown::alpha(1, 2));
  EXPECT_EQ(pinned_coeffs[1], Unknown::alpha(2, 2));
  EXPECT_EQ(pinned_coeffs[2], Unknown::beta(1, 2));
  ASSERT_EQ(cert.cancelled.size(), 1u);
  EXPECT_EQ(cert.cancelled[0], Unknown::beta(1, 3));
}

TEST(Derivation, SecondStateOrderThree) {
  const DerivationResult d = derive(2, 3);
  EXPECT_EQ(d.values.at(Unknown::alpha(1, 3)), Rational(-275, 1536));
  EXPECT_EQ(d.values.at(Unknown::alpha(2, 3)), Rational(23, 1024));
  EXPECT_EQ(d.values.at(Unknown::alpha(3, 3)), Rational(-1, 1280));
  EXPECT_EQ(d.values.at(Unknown::beta(1, 3)), Rational(37, 256));
}

TEST(Derivation, RoundTripSmallStates) {
  for (long n = 0; n <= 4; ++n) {
    const DerivationResult d = derive(n, 4);
    const AnsatzCoefficients t = AnsatzCoefficients::from_tables(n, 4);
    for (const auto& [u, v] : t.to_bindings()) ASSERT_EQ(d.values.at(u), v) << "n=" << n << " " << u.name();
  }
}

TEST(Derivation, CertificateIsJson) {
  const auto j = nlohmann::json::parse(derive(1, 3).certificate_json());
  EXPECT_EQ(j["n"], 1);
  ASSERT_EQ(j["orders"].size(), 3u);
  EXPECT_EQ(j["orders"][2]["solved"]["lambda(3)"], to_string(eigenvalue_coefficient(1, 3)));
}

TEST(Identities, HandExamples) {
  EXPECT_TRUE(verify_recursion_identity(1, 2).pass);
  EXPECT_TRUE(verify_recursion_identity(1, 1).pass);
  EXPECT_TRUE(verify_recursion_identity(1, 4).pass);
  EXPECT_THROW(verify_recursion_identity(4, 2), InvalidInput);
}

TEST(Identities, AllOrdersUpToTwelve) {
  for (int order = 1; order <= 3; ++order)
    for (long n = 0; n <= 12; ++n) {
      const IdentityResult r = verify_recursion_identity(order, n);
      EXPECT_TRUE(r.pass) << order << " " << n << ": " << r.detail;
    }
}

TEST(Identities, ClosedFormRowsAreEvenOnly) {
  for (long n = 0; n <= 12; n += 2) {
    EXPECT_TRUE(verify_closed_form_identity(2, n).pass);
    EXPECT_TRUE(verify_closed_form_identity(3, n).pass);
  }
  EXPECT_FALSE(verify_closed_form_identity(2, 3).pass);
}

TEST(Identities, GeneratedRowsRejectWrongCoefficients) {
  // Perturb h_0 of H_4; some generated row must notice.
  const auto rows = generated_identity_rows(2, 4);
  Bindings h;
  for (long k = 0; k <= 2; ++k) h[Unknown::hermite(static_cast<int>(k))] = hermite_coefficient(4, k);
  h[Unknown::hermite(0)] += 1;
  bool noticed = false;
  for (const auto& r : rows) noticed = noticed || !r.substitute(h).is_zero();
  EXPECT_TRUE(noticed);
}

TEST(ResidualOrder, Examples) {
  EXPECT_EQ(residual_order(0, 2, ResidualEquation::Difference), 2);
  EXPECT_GE(residual_order(2, 1, ResidualEquation::Difference), 1);
  EXPECT_GE(residual_order(0, 3, ResidualEquation::Ode), 3);
}

TEST(ResidualOrder, WrongCoefficientIsCaught) {
  AnsatzCoefficients a = AnsatzCoefficients::from_tables(2, 3);
  a.alpha[{2, 3}] += Rational(1, 1000);
  EXPECT_EQ(residual_order(a, ResidualEquation::Difference), 2);
  EXPECT_EQ(residual_order(a, ResidualEquation::Ode), 2);
}
