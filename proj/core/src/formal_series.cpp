#include "dho/formal_series.hpp"

#include <algorithm>
#include <sstream>

#include "dho/errors.hpp"

namespace dho {

std::string Unknown::name() const {
  switch (kind) {
    case Kind::Alpha: return "alpha(" + std::to_string(k) + "," + std::to_string(l) + ")";
    case Kind::Beta: return "beta(" + std::to_string(k) + "," + std::to_string(l) + ")";
    case Kind::Lambda: return "lambda(" + std::to_string(l) + ")";
    case Kind::Hermite: return "h(" + std::to_string(k) + ")";
  }
  return "?";
}

LinearCombination LinearCombination::of(const Unknown& u, const Rational& coeff) {
  LinearCombination lc;
  if (sgn(coeff) != 0) lc.t_.emplace_back(u, coeff);
  return lc;
}

Rational LinearCombination::coefficient(const Unknown& u) const {
  auto it = std::lower_bound(t_.begin(), t_.end(), u,
                             [](const auto& p, const Unknown& x) { return p.first < x; });
  if (it != t_.end() && it->first == u) return it->second;
  return Rational(0);
}

namespace {

using TermVec = std::vector<std::pair<Unknown, Rational>>;

// Merge two sorted term lists: a + s*b.
TermVec merge(const TermVec& a, const TermVec& b, int s) {
  TermVec out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, s > 0 ? b[j].second : Rational(-b[j].second));
      ++j;
    } else {
      Rational v = s > 0 ? Rational(a[i].second + b[j].second) : Rational(a[i].second - b[j].second);
      if (sgn(v) != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LinearCombination& LinearCombination::operator+=(const LinearCombination& o) {
  c_ += o.c_;
  if (!o.t_.empty()) t_ = merge(t_, o.t_, +1);
  return *this;
}

LinearCombination& LinearCombination::operator-=(const LinearCombination& o) {
  c_ -= o.c_;
  if (!o.t_.empty()) t_ = merge(t_, o.t_, -1);
  return *this;
}

LinearCombination& LinearCombination::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    c_ = 0;
    t_.clear();
    return *this;
  }
  c_ *= s;
  for (auto& p : t_) p.second *= s;
  return *this;
}

LinearCombination LinearCombination::operator-() const {
  LinearCombination r(*this);
  r *= Rational(-1);
  return r;
}

LinearCombination operator*(const LinearCombination& a, const LinearCombination& b) {
  if (a.has_unknowns() && b.has_unknowns())
    throw InconsistentSystem("product of two unknown-bearing terms inside the truncation: (" +
                             a.str() + ") * (" + b.str() + ")");
  if (!a.has_unknowns()) return b * a.c_;
  return a * b.c_;
}

LinearCombination LinearCombination::substitute(const Bindings& b) const {
  LinearCombination r(c_);
  for (const auto& [u, w] : t_) {
    auto it = b.find(u);
    if (it != b.end())
      r.c_ += w * it->second;
    else
      r.t_.emplace_back(u, w);
  }
  return r;
}

std::string LinearCombination::str() const {
  std::ostringstream os;
  os << c_.get_str();
  for (const auto& [u, w] : t_) os << (sgn(w) < 0 ? " - " : " + ") << Rational(abs(w)).get_str() << "*" << u.name();
  return os.str();
}

void FormalSeries::add(int a, int e, const LinearCombination& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.emplace(Key{a, e}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

LinearCombination FormalSeries::coefficient(int a, int e) const {
  auto it = t_.find({a, e});
  return it == t_.end() ? LinearCombination() : it->second;
}

FormalSeries& FormalSeries::operator+=(const FormalSeries& o) {
  for (const auto& [k, c] : o.t_) add(k.first, k.second, c);
  return *this;
}

FormalSeries& FormalSeries::operator-=(const FormalSeries& o) {
  for (const auto& [k, c] : o.t_) add(k.first, k.second, -c);
  return *this;
}

FormalSeries& FormalSeries::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    t_.clear();
    return *this;
  }
  for (auto& [k, c] : t_) c *= s;
  return *this;
}

FormalSeries FormalSeries::product(const FormalSeries& a, const FormalSeries& b,
                                   const Truncation& t) {
  FormalSeries r;
  for (const auto& [ka, ca] : a.t_) {
    for (const auto& [kb, cb] : b.t_) {
      const int x = ka.first + kb.first, e = ka.second + kb.second;
      if (!t.keeps(x, e)) continue;
      r.add(x, e, ca * cb);
    }
  }
  return r;
}

FormalSeries FormalSeries::exp(const FormalSeries& f, const Truncation& t) {
  const int top = t.max_weight;
  if (top == INT_MAX) throw InvalidInput("exp needs a finite truncation");
  std::vector<FormalSeries> fw(static_cast<size_t>(top + 1));
  for (const auto& [k, c] : f.t_) {
    const int w = t.weight(k.first, k.second);
    if (w <= 0) throw InvalidInput("exp argument has a term of non-positive weight");
    if (w <= top) fw[static_cast<size_t>(w)].add(k.first, k.second, c);
  }
  // g E_g = sum_{j=1..g} j f_j E_{g-j}
  std::vector<FormalSeries> ew(static_cast<size_t>(top + 1));
  ew[0].add(0, 0, Rational(1));
  for (int g = 1; g <= top; ++g) {
    FormalSeries acc;
    for (int j = 1; j <= g; ++j) {
      if (fw[static_cast<size_t>(j)].is_zero() || ew[static_cast<size_t>(g - j)].is_zero()) continue;
      FormalSeries p = product(fw[static_cast<size_t>(j)], ew[static_cast<size_t>(g - j)]);
      p *= Rational(j);
      acc += p;
    }
    acc *= Rational(1, g);
    ew[static_cast<size_t>(g)] = std::move(acc);
  }
  FormalSeries r;
  for (const auto& s : ew) r += s;
  return r;
}

FormalSeries FormalSeries::truncated(const Truncation& t) const {
  FormalSeries r;
  for (const auto& [k, c] : t_)
    if (t.keeps(k.first, k.second)) r.t_.emplace(k, c);
  return r;
}

FormalSeries FormalSeries::parity_part(int parity) const {
  FormalSeries r;
  for (const auto& [k, c] : t_)
    if (((k.first % 2) + 2) % 2 == (parity & 1)) r.t_.emplace(k, c);
  return r;
}

FormalSeries FormalSeries::substitute(const Bindings& b) const {
  FormalSeries r;
  for (const auto& [k, c] : t_) r.add(k.first, k.second, c.substitute(b));
  return r;
}

FormalSeries FormalSeries::derivative_x() const {
  FormalSeries r;
  for (const auto& [k, c] : t_)
    if (k.first != 0) r.add(k.first - 1, k.second, c * Rational(k.first));
  return r;
}

FormalSeries FormalSeries::weight_slice(const Truncation& t, int weight) const {
  FormalSeries r;
  for (const auto& [k, c] : t_)
    if (t.weight(k.first, k.second) == weight) r.t_.emplace(k, c);
  return r;
}

int FormalSeries::lowest_weight(const Truncation& t) const {
  int w = INT_MAX;
  for (const auto& [k, c] : t_)
    if (!c.is_zero()) w = std::min(w, t.weight(k.first, k.second));
  return w;
}

std::string FormalSeries::str() const {
  std::ostringstream os;
  for (const auto& [k, c] : t_) os << "x^" << k.first << " u^" << k.second << " : " << c.str() << "\n";
  return os.str();
}

}  // namespace dho
