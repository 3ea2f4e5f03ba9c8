#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>

#include "ellprime/elliptic_curve.hpp"
#include "ellprime/order_counting.hpp"
#include "ellprime/prime_measures.hpp"

using namespace ellprime;

TEST_CASE("lambda interval sums") {
  CHECK(lambda_sum(1, 1) == 0.0);
  // n = 2,3,4,5,7,8,9 contribute: 3 log 2 + 2 log 3 + log 5 + log 7
  CHECK(lambda_sum(2, 10) ==
        doctest::Approx(std::log(2520.0)).epsilon(1e-12));
  CHECK(lambda_sum(2, 10) == doctest::Approx(7.832014180505469).epsilon(1e-12));

  // interval around p = 877 clears the 2 sqrt p threshold easily
  const double s = lambda_sum(819, 937);
  CHECK(s == doctest::Approx(125.23289006790414).epsilon(1e-9));
  CHECK(s > 2.0 * std::sqrt(877.0));

  CHECK_THROWS_AS(lambda_sum(0, 10), BoundsError);
  CHECK_THROWS_AS(lambda_sum(5, 4), BoundsError);
}

TEST_CASE("lambda sums equal chebyshev psi by direct enumeration") {
  const LambdaSummer summer(10'000);
  double direct = 0.0;
  for (u64 n = 2; n <= 10'000; ++n) direct += von_mangoldt(n);
  CHECK(summer.sum(2, 10'000) == doctest::Approx(direct).epsilon(1e-12));
  // spot values: psi(100) = sum of log p over p^k <= 100
  CHECK(summer.sum(2, 100) == doctest::Approx(94.0453112793777).epsilon(1e-9));
}

TEST_CASE("short interval survey") {
  const SurveyResult tiny = short_interval_survey(10, 9);
  CHECK(tiny.reports.empty());

  const SurveyResult single = short_interval_survey(877, 877);
  REQUIRE(single.reports.size() == 1);
  CHECK(single.reports[0].lo == 818);
  CHECK(single.reports[0].hi == 936);
  CHECK(single.reports[0].pass);
  CHECK(single.exceptions == 0);

  const SurveyResult range = short_interval_survey(10'000, 20'000);
  CHECK(range.reports.size() == 1033);  // pi(2e4) - pi(1e4 - 1)
  CHECK(range.exceptions == 0);
}

TEST_CASE("survey csv rendering round-trips its fields") {
  const SurveyResult range = short_interval_survey(10'000, 10'100);
  const std::string csv = survey_to_csv(range);
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "p,lo,hi,lambda_sum,threshold,pass");
  u64 rows = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == range.reports.size());
  CHECK(csv == survey_to_csv(range));  // deterministic
}

TEST_CASE("brun-titchmarsh interval check") {
  const BrunTitchmarshReport r100 = brun_titchmarsh_check(100);
  CHECK(r100.interval_hi == 140);
  CHECK(r100.prime_count == 9);  // pi(140) - pi(100) = 34 - 25
  CHECK(r100.bound == doctest::Approx(26.0576694).epsilon(1e-6));
  CHECK(r100.pass);

  CHECK(brun_titchmarsh_check(25).pass);  // non-prime x is fine
  for (u64 x : {1000ull, 10'000ull, 100'000ull}) {
    const auto report = brun_titchmarsh_check(x);
    CHECK(report.pass);
  }
  CHECK(brun_titchmarsh_check(1000).prime_count == 20);
  CHECK(brun_titchmarsh_check(10'000).prime_count == 45);
  CHECK(brun_titchmarsh_check(100'000).prime_count == 104);

  CHECK_THROWS_AS(brun_titchmarsh_check(10'000'001), BoundsError);
}

TEST_CASE("hasse measure collapses to 1/(4 sqrt p k) or 0") {
  // #E(F_13) = 19 prime for y^2 = x^3 + 2: any rational point that reduces
  // to a non-identity point is primitive; (-1, 1) lies on the curve over Q.
  const CurveSpec bachet{0, 2, ""};
  const double m13 = hasse_measure(bachet, 13, -1, 1);
  CHECK(m13 == doctest::Approx(1.0 / (4.0 * std::sqrt(13.0))).epsilon(1e-12));

  // #E(F_5) = 4 = 2^2 for y^2 = x^3 + 6x - 2, cyclic: a generator picks up
  // Lambda(4)/log 4 = 1/2; the 2-torsion point (1, 0) gives 0.
  const CurveSpec noncm{6, -2, ""};
  const ReducedCurve c5 = reduce(noncm, 5);
  REQUIRE(order_naive(c5) == 4);
  double measured_primitive = -1.0, measured_torsion = -1.0;
  for (const auto& pt : enumerate_points(c5)) {
    if (pt.infinity) continue;
    const u64 order = point_order(c5, pt, 4);
    const double m = hasse_measure(noncm, 5, static_cast<i64>(pt.x),
                                   static_cast<i64>(pt.y));
    if (order == 4) measured_primitive = m;
    if (order == 2) measured_torsion = m;
  }
  CHECK(measured_primitive ==
        doctest::Approx(0.5 / (4.0 * std::sqrt(5.0))).epsilon(1e-12));
  CHECK(measured_torsion == 0.0);

  // a non-cyclic group contributes nothing: Z/3 x Z/3 at p = 7
  const ReducedCurve c7 = reduce(bachet, 7);
  REQUIRE(order_naive(c7) == 9);
  for (const auto& pt : enumerate_points(c7)) {
    if (pt.infinity) continue;
    CHECK(hasse_measure(bachet, 7, static_cast<i64>(pt.x),
                        static_cast<i64>(pt.y)) == 0.0);
  }

  // #E(F_5) = 6 is not a prime power: measure vanishes identically
  for (const auto& pt : enumerate_points(reduce(bachet, 5))) {
    if (pt.infinity) continue;
    CHECK(hasse_measure(bachet, 5, static_cast<i64>(pt.x),
                        static_cast<i64>(pt.y)) == 0.0);
  }

  // literal interval convention: #E(F_877) = 937 sits just above
  // 877 + floor(2 sqrt 877) = 936, so the measure is 0 there by definition
  CHECK(hasse_measure(bachet, 877, -1, 1) == 0.0);

  CHECK_THROWS_AS(hasse_measure(bachet, 3, -1, 1), BadReductionError);
  CHECK_THROWS_AS(hasse_measure(bachet, 13, 1, 1), DomainError);  // off curve
}

TEST_CASE("hasse measure nonzero only for prime-power generators, p <= 200") {
  const PrimeSieve primes(200);
  for (const CurveSpec& spec :
       {CurveSpec{0, 2, ""}, CurveSpec{6, -2, ""}, CurveSpec{-1, 0, ""}}) {
    const i64 delta = discriminant(spec);
    for (u32 p : primes.primes()) {
      if (p < 5 || delta % p == 0) continue;
      const ReducedCurve c = reduce(spec, p);
      const u64 n = order_naive(c);
      const bool prime_power = von_mangoldt_exact(n).has_value();
      const bool in_literal = n >= hasse_interval(p).literal_lo() &&
                              n <= hasse_interval(p).literal_hi();
      const Factorization fac = factorize(n);
      for (const auto& pt : enumerate_points(c)) {
        if (pt.infinity) continue;
        const double m = hasse_measure(spec, p, static_cast<i64>(pt.x),
                                       static_cast<i64>(pt.y));
        const bool generates = point_order(c, pt, n, fac) == n;
        if (m != 0.0) {
          CHECK(prime_power);
          CHECK(generates);
          CHECK(in_literal);
        } else if (prime_power && in_literal) {
          CHECK_FALSE(generates);
        }
      }
    }
  }
}

TEST_CASE("main term values and normalization") {
  const MainTermReport m10 = main_term_M(10);
  CHECK(m10.value == doctest::Approx(1.3885818358986823).epsilon(1e-9));

  const MainTermReport m1k = main_term_M(1000);
  CHECK(m1k.value == doctest::Approx(18.575036220986213).epsilon(1e-9));
  CHECK(m1k.normalized ==
        doctest::Approx(0.8863465449790313).epsilon(1e-9));

  const MainTermReport m10k = main_term_M(10'000);
  CHECK(m10k.value == doctest::Approx(107.68986720836659).epsilon(1e-9));
  CHECK(m10k.normalized > 0.25);  // comfortably above the expected 1/4 shape

  CHECK_THROWS_AS(main_term_M(1'000'001), BoundsError);
}
