#include <set>

#include "dho/derivation.hpp"
#include "dho/errors.hpp"

namespace dho {

void LinearSystem::add_equation(const LinearCombination& eq) {
  if (!eq.is_zero()) eqs_.push_back(eq);
}

std::vector<Unknown> LinearSystem::unknowns() const {
  std::set<Unknown> s;
  for (const auto& e : eqs_)
    for (const auto& t : e.terms()) s.insert(t.first);
  return {s.begin(), s.end()};
}

Bindings LinearSystem::solve() const {
  const std::vector<Unknown> vars = unknowns();
  const size_t nv = vars.size();
  std::vector<std::vector<Rational>> rows;
  rows.reserve(eqs_.size());
  for (const auto& e : eqs_) {
    std::vector<Rational> r(nv + 1);
    for (size_t j = 0; j < nv; ++j) r[j] = e.coefficient(vars[j]);
    r[nv] = -e.constant();
    rows.push_back(std::move(r));
  }

  size_t rank = 0;
  for (size_t col = 0; col < nv; ++col) {
    size_t piv = rank;
    while (piv < rows.size() && sgn(rows[piv][col]) == 0) ++piv;
    if (piv == rows.size())
      throw InconsistentSystem("unknown " + vars[col].name() + " is not pinned by the equations");
    std::swap(rows[rank], rows[piv]);
    const Rational inv = 1 / rows[rank][col];
    for (auto& v : rows[rank]) v *= inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || sgn(rows[i][col]) == 0) continue;
      const Rational f = rows[i][col];
      for (size_t j = col; j <= nv; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  for (size_t i = rank; i < rows.size(); ++i)
    if (sgn(rows[i][nv]) != 0)
      throw InconsistentSystem("overdetermined system has no solution (residual " +
                               rows[i][nv].get_str() + ")");

  Bindings out;
  for (size_t j = 0; j < nv; ++j) out[vars[j]] = rows[j][nv];
  return out;
}

}  // namespace dho
