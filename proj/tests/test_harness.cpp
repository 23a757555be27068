#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "json.hpp"

#include "dho/errors.hpp"
#include "dho/exact_core.hpp"
#include "dho/export.hpp"
#include "dho/harness.hpp"
#include "dho/parallel.hpp"

using namespace dho;

TEST(Sset, Examples) {
  EXPECT_DOUBLE_EQ(sset_omega(2, 2), std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(sset_omega(1, 50), 0.2);
  EXPECT_DOUBLE_EQ(sset_omega(1, 2e6), 0.001);
  EXPECT_THROW(sset_omega(0, 1), InvalidInput);
  EXPECT_THROW(sset_omega(1, -1), InvalidInput);
}

TEST(Grid, ParseAndFit) {
  const auto g = parse_grid("0.1:0.001:3");
  ASSERT_EQ(g.size(), 3u);
  EXPECT_DOUBLE_EQ(g[1], 0.01);
  EXPECT_EQ(g[2], 0.001);
  EXPECT_THROW(parse_grid("0.1:0.01"), InvalidInput);
  EXPECT_THROW(parse_grid("0.1:x:3"), InvalidInput);
  EXPECT_THROW(parse_grid("0:1:3"), InvalidInput);

  const LineFit f = fit_line({0, 1, 2, 3}, {1, 3, 5, 7});
  EXPECT_DOUBLE_EQ(f.slope, 2);
  EXPECT_DOUBLE_EQ(f.intercept, 1);
  EXPECT_TRUE(std::isnan(fit_line({1}, {1}).slope));
}

TEST(Convergence, GroundStateFirstOrder) {
  ExperimentConfig c;
  c.n_list = {0};
  c.m_list = {1};
  c.omega_grid = geometric_grid(0.02, 0.005, 5);
  const auto rec = convergence_experiment(c);
  ASSERT_EQ(rec.size(), 5u);
  EXPECT_NEAR(rec[0].fitted_slope, 1.0, 0.1);
  EXPECT_GT(rec[0].prefactor, 0.003);
  EXPECT_LT(rec[0].prefactor, 0.3);
  for (const auto& r : rec) EXPECT_FALSE(r.censored);
}

TEST(Convergence, SaturatesAtLargeOmega) {
  // Orthogonal unit vectors differ by sqrt(2); nothing can exceed it.
  const double e = norm_error(3, 1, 4.0);
  EXPECT_LE(e, std::sqrt(2.0) + 1e-9);
  EXPECT_GT(e, 1.3);
  // A coarse-grid ground state is close to a lattice delta either way.
  EXPECT_LT(norm_error(0, 1, 10.0), 0.01);
}

TEST(Convergence, FewPointsGiveNoSlope) {
  ExperimentConfig c;
  c.n_list = {0};
  c.m_list = {2};
  c.omega_grid = {0.05, 0.03};
  EXPECT_TRUE(std::isnan(convergence_experiment(c)[0].fitted_slope));
  c.omega_grid = {};
  EXPECT_THROW(convergence_experiment(c), InvalidInput);
}

TEST(Orthonormality, SelfOverlapIsOne) {
  const auto r = orthonormality_experiment({0, 1, 2, 3, 4}, 2, {0.04, 0.02, 0.01});
  ASSERT_EQ(r.rows.size(), 3u);
  ASSERT_EQ(r.halving_ratios.size(), 2u);
  for (const auto& row : r.rows) {
    EXPECT_LT(row.max_norm_defect, 1e-13);
    EXPECT_LT(row.max_overlap, 1e-2);
    EXPECT_EQ((row.n_a + row.n_b) % 2, 0);  // opposite parity is exactly orthogonal
  }
  for (double q : r.halving_ratios) EXPECT_GT(q, 2.0);
}

TEST(OrderScan, SmallAndLargeOmega) {
  const OrderScan s = optimal_order_scan(0, 0.02, 6);
  EXPECT_EQ(s.argmin, 6);
  ASSERT_EQ(s.delta.size(), 7u);
  for (size_t i = 1; i < s.delta.size(); ++i) EXPECT_LT(s.delta[i].second, s.delta[i - 1].second);

  // At omega=2 the partial sums first overshoot at m=16.
  const OrderScan big = optimal_order_scan(0, 2.0, 20);
  EXPECT_EQ(big.argmin, 16);
  bool rises = false;
  for (size_t i = static_cast<size_t>(big.argmin) + 1; i < big.delta.size(); ++i)
    rises = rises || big.delta[i].second > big.delta[static_cast<size_t>(big.argmin)].second;
  EXPECT_TRUE(rises);
}

TEST(CoefficientEstimate, KnownCoefficients) {
  const auto a = estimate_next_eigenvalue_coefficient(0, 1, 0.08);
  EXPECT_NEAR(a.estimate, -1.0 / 32, 0.02 / 32);
  EXPECT_FALSE(a.ill_conditioned);
  const auto b = estimate_next_eigenvalue_coefficient(1, 1, 0.08);
  EXPECT_NEAR(b.estimate, to_double(eigenvalue_coefficient(1, 2)), 0.02 * std::abs(to_double(eigenvalue_coefficient(1, 2))));
  const auto c = estimate_next_eigenvalue_coefficient(0, 2, 0.08);
  EXPECT_NEAR(c.estimate, to_double(eigenvalue_coefficient(0, 3)), 0.02 * std::abs(to_double(eigenvalue_coefficient(0, 3))));
  EXPECT_THROW(estimate_next_eigenvalue_coefficient(0, 1, 0.08, 1), InvalidInput);
}

TEST(Parallel, OrderedAndCapped) {
  const auto v = parallel_map(100, [](size_t i) { return static_cast<long>(i * i); });
  for (size_t i = 0; i < v.size(); ++i) ASSERT_EQ(v[i], static_cast<long>(i * i));
  EXPECT_THROW(parallel_map(10, [](size_t i) -> int { if (i == 7) throw InvalidInput("x"); return 0; }), InvalidInput);

  setenv("DHO_THREADS", "1", 1);
  EXPECT_EQ(worker_count(), 1u);
  setenv("DHO_THREADS", "0", 1);
  EXPECT_THROW(worker_count(), InvalidInput);
  setenv("DHO_THREADS", "two", 1);
  EXPECT_THROW(worker_count(), InvalidInput);
  unsetenv("DHO_THREADS");
  EXPECT_GE(worker_count(), 1u);
}

TEST(Export, CsvAndJson) {
  DataTable t;
  t.metadata = {{"n", 2L}, {"method", std::string("series")}};
  t.columns = {"omega", "value", "ok"};
  t.rows = {{0.5, -0.75, true}, {0.25, std::nan(""), false}};

  std::ostringstream csv;
  write_table(t, Format::Csv, csv);
  const std::string s = csv.str();
  EXPECT_EQ(s.rfind("# n=2,method=series\n", 0), 0u) << s;
  EXPECT_NE(s.find("omega,value,ok\n"), std::string::npos);

  std::ostringstream js;
  write_table(t, Format::Json, js);
  const auto j = nlohmann::json::parse(js.str());
  EXPECT_EQ(j["metadata"]["n"], 2);
  ASSERT_EQ(j["records"].size(), 2u);
  EXPECT_EQ(j["records"][0]["value"], -0.75);
  EXPECT_TRUE(j["records"][1]["value"].is_null());
  EXPECT_THROW(parse_format("xml"), InvalidInput);
}

TEST(Export, ConvergenceTableCarriesModel) {
  ConvergenceRecord r;
  r.n = 2;
  r.m = 1;
  r.omega = 0.01;
  r.norm_error = 1e-3;
  const DataTable t = convergence_table({r}, 0);
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.rows[0].size(), t.columns.size());
  EXPECT_DOUBLE_EQ(model_prefactor(2, 1), 0.03 * 5 * 5);  // nhat(2) = 5
}
