#include <string>

#include "dho/errors.hpp"
#include "dho/exact_core.hpp"

namespace dho {

namespace {

// d_m listed from nhat^m downward in steps of nhat^2.
struct DRow {
  long m;
  long pow2;
  std::vector<const char*> coeffs;
};

const std::vector<DRow>& d_rows() {
  static const std::vector<DRow> rows = {
      {2, 6, {"1", "1"}},
      {3, 11, {"1", "3"}},
      {4, 17, {"5", "34", "9"}},
      {5, 23, {"33", "410", "405"}},
      {6, 27, {"63", "1260", "2943", "486"}},
      {7, 33, {"527", "15617", "69001", "41607"}},
      {8, 40, {"9387", "388780", "2845898", "4021884", "506979"}},
      {9, 47, {"175045", "9702612", "107798166", "288161796", "130610637"}},
      {10, 51, {"422565", "30315780", "480439190", "2135766820", "2249346285", "238353840"}},
      {11, 57, {"4194753", "379291385", "8186829426", "55529955498", "110241863469", "41540033277"}},
      {12, 61, {"10645960", "1187264199", "33678377895", "327725946398", "1081358909790",
                "940077055035", "88258370067"}},
      {13, 69, {"440374207", "59495737574", "2155821044201", "28738150160500", "144821249264769",
                "236410740537606", "78243613727607"}},
      {14, 72, {"578183175", "93209584104", "4215683624295", "74269604367684", "537905750769429",
                "1456767306013752", "1105711550410653", "94839535889532"}},
      {15, 79, {"12308013927", "2337227706555", "129437253243675", "2928506455684095",
                "29119560960614085", "120372998803922241", "170921920649402745",
                "51316344023990085"}},
      {16, 87, {"530039126159", "117243302735480", "7823093961425652", "222043810819026856",
                "2924952921130025194", "17380315268028265224", "40851669411526600980",
                "27983551470330365784", "2235152520630714879"}},
  };
  return rows;
}

// Ground state, m = 17..31: -num / 2^exp.
const std::vector<std::pair<const char*, long>>& ground_rows() {
  static const std::vector<std::pair<const char*, long>> rows = {
      {"363372562420411197", 79},
      {"6258692522467212813", 83},
      {"227867608383920243815", 88},
      {"4372199488222446620121", 92},
      {"352807992522448740907163", 98},
      {"7465886451386334274097895", 102},
      {"330752735437897260202410959", 107},
      {"7654237307570898665851927581", 111},
      {"1477812451863756884805687589129", 118},
      {"37132718819258763418452357390369", 122},
      // 2^127, not 2^128: the order-27 equation at n=0 fixes it.
      {"1939848955425261040700592191917783", 127},
      {"52598573101029275526869814635336865", 131},
      {"5914101566562517015636997146651378649", 137},
      {"172129355454985486683952198830698506149", 141},
      {"10362392343003738344189045786484697182753", 146},
  };
  return rows;
}

HatPolynomial descending(long top, const std::vector<long>& c) {
  std::vector<Rational> q(c.begin(), c.end());
  return HatPolynomial::from_descending(top, q);
}

}  // namespace

CoefficientTables::CoefficientTables() {
  eigen_.push_back(HatPolynomial({Rational(-1)}));
  eigen_.push_back(HatPolynomial({Rational(0), Rational(1, 2)}));
  for (const auto& row : d_rows()) {
    std::vector<Rational> c;
    for (const char* s : row.coeffs) c.emplace_back(s);
    eigen_.push_back(HatPolynomial::from_descending(row.m, c) * (-pow2(-row.pow2)));
  }
  for (const auto& [num, e] : ground_rows()) ground_.push_back(-Rational(num) * pow2(-e));

  alpha_extra_[{1, 8}] =
      descending(7, {40329, 8289645, 177209155, 505549159}) * (-pow2(-37)) +
      descending(6, {26073, 1518052, 12248825, -2741702}) * (-pow2(-32));
  alpha_extra_[{1, 9}] =
      descending(8, {21259875, 6195597884L, 221074444682L, 1419128841068L, -840819020949L}) *
          (-pow2(-47) / 3) +
      descending(7, {335617, 29718111, 459389255, 1318785849}) * (-pow2(-38));
  alpha_extra_[{2, 9}] =
      descending(7, {4456305, 1323046497, 37843099187L, 131257276187L}) * pow2(-44) +
      descending(6, {110661, 8787700, 93959845, 48228434}) * pow2(-34);

  ground_alpha_ = -parse_rational(
      "5207328980459439428858189871778019425519567564728193/"
      "2765292404617797269550429065808396826741571584");
}

const CoefficientTables& CoefficientTables::instance() {
  static const CoefficientTables t;
  return t;
}

long CoefficientTables::eigenvalue_denominator_exponent(long m) const {
  for (const auto& row : d_rows())
    if (row.m == m) return row.pow2;
  throw OutOfTable("no tabulated denominator for order " + std::to_string(m));
}

long max_eigenvalue_order(long n) {
  if (n < 0) throw InvalidInput("negative quantum number");
  return n == 0 ? kGroundStateEigenvalueOrder : kGeneralEigenvalueOrder;
}

Rational eigenvalue_coefficient(long n, long m) {
  if (n < 0 || m < 0) throw InvalidInput("negative index in eigenvalue_coefficient");
  const auto& t = CoefficientTables::instance();
  if (m <= kGeneralEigenvalueOrder) return t.eigenvalue_terms()[static_cast<size_t>(m)].at_state(n);
  if (n == 0 && m <= kGroundStateEigenvalueOrder)
    return t.ground_state_extension()[static_cast<size_t>(m - 17)];
  throw OutOfTable("eigenvalue coefficient (n=" + std::to_string(n) + ", m=" + std::to_string(m) +
                   ") is not tabulated");
}

double eigenvalue_series_value(long n, long m_max, double omega) {
  if (!(omega > 0)) throw InvalidInput("omega must be positive");
  const Rational w = from_double(omega);
  Rational acc(0), wp(1);
  for (long m = 0; m <= m_max; ++m) {
    acc += eigenvalue_coefficient(n, m) * wp;
    wp *= w;
  }
  return to_double(acc);
}

}  // namespace dho
