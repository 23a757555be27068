#include "json.hpp"

#include "dho/errors.hpp"
#include "dho/exact_core.hpp"

namespace dho {

namespace {

nlohmann::json hat_json(const HatPolynomial& p) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : p.coefficients()) a.push_back(to_string(c));
  return a;
}

}  // namespace

std::string CoefficientTables::to_json(long max_n) const {
  nlohmann::json j;
  j["format"] = "rationals as \"num/den\" strings; polynomials as coefficient lists by ascending power of nhat=2n+1";

  nlohmann::json eig = nlohmann::json::array();
  for (const auto& p : eigen_) eig.push_back(hat_json(p));
  j["eigenvalue_terms"] = eig;

  nlohmann::json ext = nlohmann::json::object();
  for (size_t i = 0; i < ground_.size(); ++i) ext[std::to_string(17 + i)] = to_string(ground_[i]);
  j["ground_state_extension"] = ext;

  nlohmann::json families = nlohmann::json::object();
  for (long delta = 0; delta <= 6; ++delta) {
    nlohmann::json byk = nlohmann::json::object();
    for (long k = 1; k <= 8; ++k) byk[std::to_string(k)] = hat_json(alpha_family(k, delta));
    families["l-k=" + std::to_string(delta)] = byk;
  }
  j["alpha_families"] = families;

  nlohmann::json extras = nlohmann::json::object();
  for (const auto& [kl, p] : alpha_extra_)
    extras[std::to_string(kl.first) + "," + std::to_string(kl.second)] = hat_json(p);
  j["alpha_extras"] = extras;
  j["ground_state_alpha"] = {{"k", 1}, {"l", ground_state_alpha_slot()}, {"value", to_string(ground_alpha_)}};

  nlohmann::json beta = nlohmann::json::object();
  for (long n = 0; n <= max_n; ++n) {
    nlohmann::json rows = nlohmann::json::object();
    for (long l = 2; l <= kMaxBetaOrder; ++l) {
      nlohmann::json row = nlohmann::json::array();
      for (long k = 0; k <= n / 2; ++k) row.push_back(to_string(beta_coefficient(n, k, l)));
      rows[std::to_string(l)] = row;
    }
    beta[std::to_string(n)] = rows;
  }
  j["beta_by_state"] = beta;
  return j.dump(2);
}

}  // namespace dho
