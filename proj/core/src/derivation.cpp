#include "json.hpp"

#include "dho/derivation.hpp"
#include "dho/errors.hpp"

namespace dho {

namespace {

// Residual slices below the solved order must already vanish.
void check_lower_weights(const FormalSeries& r, int top, long n) {
  for (const auto& [key, c] : r.terms()) {
    const int w = key.second - key.first;
    if (w < top && !c.is_zero())
      throw InconsistentSystem("n=" + std::to_string(n) + ": residual at xi-weight " +
                               std::to_string(w) + " does not vanish (" + c.str() + ")");
    if (w % 2 != 0 && !c.is_zero())
      throw InconsistentSystem("n=" + std::to_string(n) + ": odd power of u survives at weight " +
                               std::to_string(w));
  }
}

}  // namespace

Bindings solve_next_order(long n, int m, const Bindings& state, OrderCertificate* cert) {
  if (m < 2) throw InvalidInput("orders 0 and 1 are seeded, solve from order 2");
  const int kp = static_cast<int>(n / 2);
  std::vector<Unknown> unknowns;
  for (int k = 1; k <= m; ++k) unknowns.push_back(Unknown::alpha(k, m));
  for (int k = 1; k <= kp; ++k) unknowns.push_back(Unknown::beta(k, m));
  unknowns.push_back(Unknown::lambda(m));
  std::vector<Unknown> next;
  for (int k = 1; k <= kp; ++k) next.push_back(Unknown::beta(k, m + 1));
  std::vector<Unknown> all = unknowns;
  all.insert(all.end(), next.begin(), next.end());

  const FormalSeries r = expand_difference_residual(n, m, state, all);
  check_lower_weights(r, 2 * m, n);

  LinearSystem sys;
  OrderCertificate local;
  local.order = m;
  for (const auto& [key, c] : r.terms()) {
    if (key.second - key.first != 2 * m) continue;
    for (const auto& u : next)
      if (sgn(c.coefficient(u)) != 0)
        throw InconsistentSystem(u.name() + " does not cancel at order " + std::to_string(m));
    sys.add_equation(c);
    local.equations.emplace_back(key, c);
  }
  local.cancelled = next;
  Bindings solved = sys.solve();
  for (const auto& u : unknowns)
    if (!solved.count(u))
      throw InconsistentSystem(u.name() + " is absent from the order-" + std::to_string(m) +
                               " equations");
  local.pinned = sys.unknowns();
  local.solved = solved;
  if (cert) *cert = std::move(local);
  return solved;
}

DerivationResult derive(long n, int max_order) {
  if (n < 0 || max_order < 1) throw InvalidInput("derive needs n >= 0 and max_order >= 1");
  DerivationResult res;
  res.n = n;
  res.max_order = max_order;
  res.values = seed_bindings(n);

  // The seeds must satisfy orders 0 and 1 with the order-2 betas free.
  {
    std::vector<Unknown> next;
    for (int k = 1; k <= n / 2; ++k) next.push_back(Unknown::beta(k, 2));
    const FormalSeries r = expand_difference_residual(n, 1, res.values, next);
    if (!r.is_zero()) throw InconsistentSystem("seed solution fails at order <= 1:\n" + r.str());
    OrderCertificate c0;
    c0.order = 1;
    c0.cancelled = next;
    c0.solved = res.values;
    res.orders.push_back(std::move(c0));
  }
  for (int m = 2; m <= max_order; ++m) {
    OrderCertificate cert;
    Bindings s = solve_next_order(n, m, res.values, &cert);
    res.values.insert(s.begin(), s.end());
    res.orders.push_back(std::move(cert));
  }
  return res;
}

std::string DerivationResult::certificate_json() const {
  using nlohmann::json;
  auto lc_json = [](const LinearCombination& c) {
    json t = json::object();
    for (const auto& [u, w] : c.terms()) t[u.name()] = to_string(w);
    return json{{"constant", to_string(c.constant())}, {"terms", t}};
  };
  json j;
  j["n"] = n;
  j["max_order"] = max_order;
  j["convention"] =
      "residual = sym. part of exp(E(x+1)-E(x)) P(x+1) minus (u^4 x^2/2 - lambda) P(x), u^2 = omega";
  json orders_j = json::array();
  for (const auto& o : orders) {
    json oj;
    oj["order"] = o.order;
    json eqs = json::array();
    for (const auto& [key, c] : o.equations) {
      json e = lc_json(c);
      e["x_power"] = key.first;
      e["u_power"] = key.second;
      eqs.push_back(e);
    }
    oj["equations"] = eqs;
    json pinned = json::array();
    for (const auto& u : o.pinned) pinned.push_back(u.name());
    oj["pinned"] = pinned;
    json canc = json::array();
    for (const auto& u : o.cancelled) canc.push_back(u.name());
    oj["cancelled"] = canc;
    json sol = json::object();
    for (const auto& [u, v] : o.solved) sol[u.name()] = to_string(v);
    oj["solved"] = sol;
    orders_j.push_back(oj);
  }
  j["orders"] = orders_j;
  return j.dump(2);
}

}  // namespace dho
