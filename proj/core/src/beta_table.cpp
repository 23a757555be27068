#include <string>

#include "dho/errors.hpp"
#include "dho/exact_core.hpp"

namespace dho {

namespace {

// rows[i][j] is the coefficient of k^(j+1) k'^i.
using Rows = std::vector<std::vector<const char*>>;

struct BetaOrder {
  Rows even;
  const char* even_den;
  Rows odd;  // addend for odd n on top of the even form
  const char* odd_den;
};

const std::vector<BetaOrder>& beta_orders() {
  static const std::vector<BetaOrder> t = {
      // l = 2
      {{{"3", "-1"}, {"10"}}, "48", {{"1"}}, "12"},
      // l = 3
      {{{"855", "-64", "-14", "5"}, {"784", "48", "-100"}, {"1316", "500"}},
       "23040",
       {{"249", "49", "-20"}, {"532", "200"}},
       "11520"},
      // l = 4
      {{{"371385", "-203498", "-12129", "1438"},
        {"1110698", "102042", "-26252"},
        {"496932", "93984"},
        {"560200"}},
       "23224320",
       {{"67680", "12347", "-2602"}, {"108544", "33762"}, {"114456"}},
       "3870720"},
      // l = 5
      {{{"278751375", "-202014918", "35222268", "4026748", "28158", "-9944"},
        {"713250468", "-281790420", "-61452368", "-196176", "209856"},
        {"1105743252", "198178852", "-10630680", "-275344"},
        {"319197168", "81282336", "-22799744"},
        {"271672512", "148408976"}},
       "22295347200",
       {{"119817225", "-23468037", "-12060122", "-330312", "100198"},
        {"436319556", "103769756", "-5886336", "-1921112"},
        {"321608148", "118383396", "-904080"},
        {"224147856", "120486304"}},
       "11147673600"},
      // l = 6
      {{{"134035780725", "-166751340588", "39327194883", "-2269605874", "-477614210", "-19226552",
         "221782", "484"},
        {"413990823078", "-217584747090", "22678956764", "8841166604", "479019924", "-6549884",
         "566984"},
        {"526339688532", "-155591533528", "-55003198072", "-3518713436", "85514000", "-24903296"},
        {"556945898088", "131085561976", "2790556248", "-280060176", "424040144"},
        {"116760015552", "34523271136", "-5865150192", "-3338174576"},
        {"79966766400", "46102886720", "10162787360"}},
       "11771943321600",
       {{"34460588160", "-26910050283", "72069996", "1282383895", "103465570", "-948002",
         "-316976"},
        {"216801198648", "-21671791146", "-18471533106", "-1699322576", "78651584", "5865684"},
        {"345295895928", "96181762100", "1478206984", "-1409258180", "60822872"},
        {"160052617776", "64547633160", "3204992824", "-1898232512"},
        {"83156900448", "47130830560", "10276562912"}},
       "5885971660800"},
      // l = 7
      {{{"21167446950775125", "-34318046368345140", "13674300462898392", "-1352901404372446",
         "-2843855572731", "11311875159790", "704407032828", "12949326156", "-177366189",
         "37677640"},
        {"59570630372492640", "-60644270495554704", "10066261151648252", "104602336760652",
         "-246415137367020", "-20207362771548", "-460168946016", "2604105504", "-2483040560"},
        {"99669485611466412", "-39020273844707836", "2200698814542984", "2070713072954600",
         "212428368788100", "5622413614220", "82814211480", "70784553840"},
        {"82488078028378080", "-18442822328400480", "-9100818756007520", "-964844434165920",
         "-24156442527360", "-3013682511840", "-1116228072960"},
        {"66588038149135200", "18345507366303440", "1191268975557840", "10518809509520",
         "42474114642960", "10244315921840"},
        {"10839030004200960", "3516288982521792", "-363895953410496", "-304221200739456",
         "-51610667908800"},
        {"6218212960526208", "3705496740373376", "898601964676416", "110684037464000"}},
       "1542595452862464000",
       {{"-460686821541975", "-1941941074537755", "366877584331212", "41494582964306",
         "-9965970910165", "-1112954021925", "-34972438722", "958101144", "3798795"},
        {"9145976126266080", "-3823250702059872", "-191143081971676", "173415983605096",
         "24948282593576", "815890000796", "-41300603344", "1974092120"},
        {"19045045703842332", "-607795420829248", "-1422456568355676", "-195873935369616",
         "-2655255816252", "611948653316", "-98001423520"},
        {"18941405236672032", "5863460843089248", "345511721120640", "-55753844615456",
         "-654723253184", "1792716525600"},
        {"6296099301099168", "2692631923242160", "232744611197904", "-59049744898144",
         "-14606140268720"},
        {"2605202959125888", "1525593370591680", "365590616623232", "44670372947200"}},
       "257099242143744000"},
  };
  return t;
}

Rational eval_rows(const Rows& rows, const char* den, long k, long kp) {
  Integer acc(0), kpow_prime(1);
  for (const auto& row : rows) {
    Integer inner(0);
    for (auto it = row.rbegin(); it != row.rend(); ++it) inner = inner * k + Integer(*it);
    acc += inner * k * kpow_prime;
    kpow_prime *= kp;
  }
  Rational r(acc, Integer(den));
  r.canonicalize();
  return r;
}

Rational ipow(long base, long e) { return pow(Rational(base), static_cast<unsigned long>(e)); }

Rational block_leading(long l, long k, long kp) {
  return ipow(k, l - 1) * ipow(10 * kp - k, l - 1) /
         (ipow(48, l - 1) * Rational(factorial(static_cast<unsigned long>(l - 1))));
}

Rational block_next(long l, long k, long kp) {
  const Rational poly =
      Rational((l - 2) * 658 * kp * kp + (402 - 126 * l) * kp * k + (8 * l - 31) * k * k);
  return ipow(k, l - 2) * ipow(10 * kp - k, l - 3) * poly /
         (5 * ipow(48, l - 1) * Rational(factorial(static_cast<unsigned long>(l - 2))));
}

// Leading odd-n difference with the power of 48 as a parameter. The block
// as usually quoted has 48^(l-2); the odd-n tables only close with 48^(l-1).
Rational block_diff_leading(long l, long k, long kp, long power48) {
  return 4 * ipow(k, l - 1) * ipow(10 * kp - k, l - 2) /
         (ipow(48, power48) * Rational(factorial(static_cast<unsigned long>(l - 2))));
}

Rational block_diff_next(long l, long k, long kp) {
  const Rational poly = Rational((2632 * l - 2576) * kp * kp + (1470 - 504 * l) * kp * k +
                                 (32 * l - 145) * k * k);
  return ipow(k, l - 2) * ipow(10 * kp - k, l - 4) * poly /
         (5 * ipow(48, l - 1) * Rational(factorial(static_cast<unsigned long>(l - 3))));
}

}  // namespace

Rational leading_beta_block(BetaBlock which, long l, long second_index, long k, long kp) {
  if (l < 4 || l > 7)
    throw InvalidInput("leading beta blocks are defined for l in [4,7], got " + std::to_string(l));
  if (which == BetaBlock::Leading) {
    if (second_index == 2 * l - 2) return block_leading(l, k, kp);
    if (second_index == 2 * l - 3) return block_next(l, k, kp);
  } else {
    if (second_index == 2 * l - 3) return block_diff_leading(l, k, kp, l - 2);
    if (second_index == 2 * l - 4) return block_diff_next(l, k, kp);
  }
  throw InvalidInput("undefined beta block (l=" + std::to_string(l) +
                     ", index=" + std::to_string(second_index) + ")");
}

Rational beta_coefficient(long n, long k, long l) {
  if (n < 0) throw InvalidInput("negative quantum number");
  const long kp = n / 2;
  if (k < 0 || k > kp)
    throw InvalidInput("beta index k=" + std::to_string(k) + " outside [0," +
                       std::to_string(kp) + "]");
  if (l < 1) throw InvalidInput("beta order l must be >= 1");
  if (l == 1) return Rational(1);
  if (k == 0) return Rational(0);
  if (l > kMaxBetaOrder)
    throw OutOfTable("beta_{k," + std::to_string(l) + "} is not tabulated");

  const BetaOrder& t = beta_orders()[static_cast<size_t>(l - 2)];
  Rational b = eval_rows(t.even, t.even_den, k, kp);
  if (l >= 4) b += block_leading(l, k, kp) + block_next(l, k, kp);
  if (n % 2) {
    b += eval_rows(t.odd, t.odd_den, k, kp);
    if (l >= 4) b += block_diff_leading(l, k, kp, l - 1) + block_diff_next(l, k, kp);
  }
  return b;
}

}  // namespace dho
