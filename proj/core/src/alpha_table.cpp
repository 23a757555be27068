#include <string>

#include "dho/errors.hpp"
#include "dho/exact_core.hpp"

namespace dho {

namespace {

// Ascending polynomial in k with integer coefficients given as decimal strings.
Rational poly_k(long k, std::initializer_list<const char*> coeffs) {
  Integer acc(0), kk(k);
  std::vector<const char*> c(coeffs);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * kk + Integer(*it);
  return Rational(acc);
}

HatPolynomial mono(long power, const Rational& c) {
  std::vector<Rational> v(static_cast<size_t>(power + 1));
  v.back() = c;
  return HatPolynomial(std::move(v));
}

Rational sign_k(long k) { return (k % 2) ? Rational(-1) : Rational(1); }

}  // namespace

HatPolynomial alpha_family(long k, long delta) {
  if (k < 1) throw InvalidInput("alpha index k must be >= 1");
  const Rational s = sign_k(k);
  switch (delta) {
    case 0: {
      const Rational d = 2 * k - 1;
      return mono(0, s * pow2(2 - 2 * k) * gamma_half_ratio(k, 1) / (d * d));
    }
    case 1: {
      const Rational pre = s * pow2(-2 - 2 * k) / k;
      return mono(0, pre) + mono(1, pre * gamma_half_ratio(k, 1));
    }
    case 2: {
      const Rational pre = s * pow2(-4 - 2 * k);
      const Rational g = gamma_half_ratio(k, 2) / 24;
      return (mono(1, Rational(1)) + mono(0, g * poly_k(k, {"3", "52", "40"})) +
              mono(2, g * poly_k(k, {"9", "12"}))) *
             pre;
    }
    case 3: {
      const Rational pre = s * pow2(-9 - 2 * k);
      const Rational g = gamma_half_ratio(k, 3) / 24;
      return (mono(0, poly_k(k, {"-1", "7", "5"})) + mono(2, poly_k(k, {"3", "4"})) +
              mono(1, g * poly_k(k, {"243", "1119", "1928", "1376", "320"})) +
              mono(3, g * poly_k(k, {"33", "101", "104", "32"}))) *
             pre;
    }
    case 4: {
      const Rational pre = s * pow2(-14 - 2 * k);
      const Rational g = gamma_half_ratio(k, 4) / 48;
      return (mono(1, poly_k(k, {"53", "120", "136", "40"})) +
              mono(3, poly_k(k, {"37", "72", "32"}) / 3) +
              mono(0, g * poly_k(k, {"-2612925", "-5292132", "10675063", "36766856", "40148416",
                                     "21300608", "5544448", "565760"}) /
                          315) +
              mono(2, g * poly_k(k, {"11070", "60044", "130810", "142112", "81280", "23168",
                                     "2560"})) +
              mono(4, g * poly_k(k, {"585", "2288", "3585", "2696", "960", "128"}))) *
             pre;
    }
    case 5: {
      const Rational pre = s * pow2(-20 - 2 * k);
      const Rational g = gamma_half_ratio(k, 5) / 48;
      return (mono(0, poly_k(k, {"-5187", "-672", "6580", "7684", "3164", "452"}) / 3) +
              mono(2, poly_k(k, {"1214", "3744", "4080", "1968", "320"})) +
              mono(4, poly_k(k, {"345", "808", "576", "128"}) / 3) +
              mono(1, g * poly_k(k, {"740893230", "3944788389", "9627147810", "14943869467",
                                     "15287941200", "10116675072", "4238798592", "1079918592",
                                     "152076288", "9052160"}) /
                          315) +
              mono(3, g * poly_k(k, {"1825740", "11037114", "27955236", "37919062", "30169312",
                                     "14491648", "4122880", "636928", "40960"}) /
                          3) +
              mono(5, g * poly_k(k, {"85050", "381087", "729798", "752369", "447024", "152576",
                                     "27648", "2048"}) /
                          5)) *
             pre;
    }
    case 6: {
      const Rational pre = s * pow2(-26 - 2 * k);
      const Rational g = gamma_half_ratio(k, 6) / 180;
      return (mono(1, poly_k(k, {"378033", "496368", "786528", "710816", "339904", "79552",
                                 "7232"}) /
                          3) +
              mono(3, poly_k(k, {"69714", "241312", "303392", "177696", "49408", "5120"}) / 3) +
              mono(5, poly_k(k, {"17217", "45360", "40960", "15360", "2048"}) / 15) +
              mono(0, g * poly_k(k, {"-24640192386810", "-105728184475128", "-155775948330744",
                                     "-74654535511116", "74660144680858", "156803802177352",
                                     "134434233033760", "70722102090816", "24590691451392",
                                     "5680345583616", "839668527104", "71921254400",
                                     "2714009600"}) /
                          9009) +
              mono(2, g * poly_k(k, {"22093103970", "162201234402", "504160865145",
                                     "882850470198", "986932878421", "745434338828",
                                     "388089936864", "138972684672", "33504543744",
                                     "5179637760", "462565376", "18104320"}) /
                          21) +
              mono(4, g * poly_k(k, {"152041050", "991922940", "2784482730", "4353707520",
                                     "4203836660", "2632731680", "1088777440", "294912320",
                                     "50245120", "4874240", "204800"})) +
              mono(6, g * poly_k(k, {"2606310", "12799746", "27798345", "34245070", "26181505",
                                     "12857468", "4055200", "792320", "87040", "4096"}))) *
             pre;
    }
    default:
      throw OutOfTable("no closed form for alpha_{k,k+" + std::to_string(delta) + "}");
  }
}

bool alpha_available(long n, long k, long l) {
  if (n < 0 || k < 1 || l < k) return false;
  if (l - k <= 6) return true;
  if ((k == 1 && (l == 8 || l == 9)) || (k == 2 && l == 9)) return true;
  return n == 0 && k == 1 && l == CoefficientTables::instance().ground_state_alpha_slot();
}

Rational alpha_coefficient(long n, long k, long l) {
  if (n < 0 || k < 1 || l < k)
    throw InvalidInput("alpha index out of domain: (k,l)=(" + std::to_string(k) + "," +
                       std::to_string(l) + ")");
  if (l - k <= 6) return alpha_family(k, l - k).at_state(n);
  const auto& t = CoefficientTables::instance();
  auto it = t.alpha_extras().find({k, l});
  if (it != t.alpha_extras().end()) return it->second.at_state(n);
  if (n == 0 && k == 1 && l == t.ground_state_alpha_slot()) return t.ground_state_alpha_datum();
  throw OutOfTable("alpha_{" + std::to_string(k) + "," + std::to_string(l) + "} for n=" +
                   std::to_string(n) + " is not tabulated");
}

}  // namespace dho
