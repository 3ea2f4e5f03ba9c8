#include "ellprime/prime_measures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ellprime/elliptic_characters.hpp"
#include "ellprime/order_counting.hpp"

namespace ellprime {

LambdaSummer::LambdaSummer(u64 limit) : sieve_(limit) {
  prime_logs_.reserve(sieve_.primes().size());
  for (u32 p : sieve_.primes())
    prime_logs_.push_back(std::log(static_cast<double>(p)));
  for (u32 p : sieve_.primes()) {
    if (u64(p) * p > limit) break;
    const double lg = std::log(static_cast<double>(p));
    for (u64 v = u64(p) * p; v <= limit; v *= p) powers_.emplace_back(v, lg);
  }
  std::sort(powers_.begin(), powers_.end());
}

double LambdaSummer::sum(u64 lo, u64 hi) const {
  if (lo < 1 || lo > hi || hi > limit())
    throw BoundsError("LambdaSummer: bad interval");
  const auto& ps = sieve_.primes();
  double total = 0.0;
  auto first = std::lower_bound(ps.begin(), ps.end(), lo);
  auto last = std::upper_bound(ps.begin(), ps.end(), hi);
  for (auto it = first; it != last; ++it)
    total += prime_logs_[it - ps.begin()];
  auto pfirst = std::lower_bound(powers_.begin(), powers_.end(),
                                 std::make_pair(lo, 0.0));
  for (auto it = pfirst; it != powers_.end() && it->first <= hi; ++it)
    total += it->second;
  return total;
}

double lambda_sum(u64 lo, u64 hi) {
  if (hi > 100'000'000) throw BoundsError("lambda_sum: hi must be <= 1e8");
  if (lo < 1 || lo > hi) throw BoundsError("lambda_sum: bad interval");
  return LambdaSummer(std::max<u64>(hi, 2)).sum(lo, hi);
}

SurveyResult short_interval_survey(u64 x_lo, u64 x_hi,
                                   const LambdaSummer& summer) {
  SurveyResult result;
  if (x_lo > x_hi) return result;
  const auto& ps = summer.primes().primes();
  auto first = std::lower_bound(ps.begin(), ps.end(), x_lo);
  for (auto it = first; it != ps.end() && *it <= x_hi; ++it) {
    const u64 p = *it;
    const u64 w = isqrt_u64(4 * p);  // exact floor(2 sqrt p)
    IntervalSumReport report;
    report.center = p;
    report.lo = p - w;
    report.hi = p + w;
    report.lambda_sum = summer.sum(report.lo, report.hi);
    report.threshold = 2.0 * std::sqrt(static_cast<double>(p));
    report.pass = report.lambda_sum > report.threshold;
    if (!report.pass) ++result.exceptions;
    result.reports.push_back(report);
  }
  return result;
}

SurveyResult short_interval_survey(u64 x_lo, u64 x_hi) {
  if (x_hi > 10'000'000)
    throw BoundsError("short_interval_survey: x_hi must be <= 1e7");
  if (x_lo > x_hi) return {};
  const LambdaSummer summer(x_hi + isqrt_u64(4 * x_hi) + 1);
  return short_interval_survey(x_lo, x_hi, summer);
}

std::string survey_to_csv(const SurveyResult& survey) {
  std::ostringstream out;
  out << "p,lo,hi,lambda_sum,threshold,pass\n";
  out.precision(12);
  for (const auto& r : survey.reports) {
    out << r.center << ',' << r.lo << ',' << r.hi << ',' << r.lambda_sum
        << ',' << r.threshold << ',' << (r.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

BrunTitchmarshReport brun_titchmarsh_check(u64 x, const LambdaSummer& summer) {
  BrunTitchmarshReport report;
  report.x = x;
  report.interval_hi = x + isqrt_u64(16 * x);  // exact floor(4 sqrt x)
  if (report.interval_hi > summer.limit())
    throw BoundsError("brun_titchmarsh_check: summer limit too small");
  report.prime_count = summer.count_primes(report.interval_hi) -
                       summer.count_primes(x);
  report.bound = 12.0 * std::sqrt(static_cast<double>(x)) /
                 std::log(static_cast<double>(x));
  report.pass = static_cast<double>(report.prime_count) <= report.bound;
  return report;
}

BrunTitchmarshReport brun_titchmarsh_check(u64 x) {
  if (x < 2 || x > 10'000'000)
    throw BoundsError("brun_titchmarsh_check: x must be in [2, 1e7]");
  const LambdaSummer summer(x + isqrt_u64(16 * x) + 1);
  return brun_titchmarsh_check(x, summer);
}

double hasse_measure(const CurveSpec& spec, u64 p, i64 point_x, i64 point_y) {
  const ReducedCurve curve = reduce(spec, p);  // throws on bad reduction
  auto mod = [&](i64 v) {
    i64 r = v % static_cast<i64>(p);
    return static_cast<u64>(r < 0 ? r + static_cast<i64>(p) : r);
  };
  const ReducedPoint point = ReducedPoint::affine(mod(point_x), mod(point_y));
  if (!on_curve(curve, point))
    throw DomainError("hasse_measure: point does not reduce onto the curve");

  const u64 n = group_order(curve);
  const auto pp = von_mangoldt_exact(n);
  if (!pp) return 0.0;  // Lambda(n) = 0, measure vanishes

  // literal interval [p - 2 sqrt p, p + 2 sqrt p]
  const HasseInterval interval = hasse_interval(p);
  if (n < interval.literal_lo() || n > interval.literal_hi()) return 0.0;

  const Factorization n_factors = factorize(n);
  const auto base = find_primitive_point(curve, n, n_factors);
  if (!base) return 0.0;  // non-cyclic group: no point has order n
  const LogTable table(curve, *base, n);
  if (psi_divisor(table, point, n_factors) == 0) return 0.0;

  // Lambda(q^k)/log(q^k) = 1/k exactly.
  return 1.0 / (4.0 * std::sqrt(static_cast<double>(p)) *
                static_cast<double>(pp->exponent));
}

MainTermReport main_term_M(u64 x) {
  if (x < 2 || x > 1'000'000)
    throw BoundsError("main_term_M: x must be in [2, 1e6]");
  const u64 limit = 2 * x + isqrt_u64(8 * x) + 1;
  const LambdaSummer summer(limit);
  const auto& ps = summer.primes().primes();

  // Proper prime powers q^k (k >= 2) in reach, with their (1 - 1/q)/k weight.
  struct PowerTerm {
    u64 value;
    double weight;
  };
  std::vector<PowerTerm> powers;
  for (u32 q : ps) {
    if (u64(q) * q > limit) break;
    u64 v = u64(q) * q;
    u32 k = 2;
    while (v <= limit) {
      powers.push_back({v, (1.0 - 1.0 / q) / k});
      v *= q;
      ++k;
    }
  }
  std::sort(powers.begin(), powers.end(),
            [](const PowerTerm& a, const PowerTerm& b) {
              return a.value < b.value;
            });

  double total = 0.0;
  auto first = std::lower_bound(ps.begin(), ps.end(), x);
  for (auto it = first; it != ps.end() && *it <= 2 * x; ++it) {
    const u64 p = *it;
    const u64 w = isqrt_u64(4 * p);
    const u64 lo = p - w, hi = p + w;
    double inner = 0.0;
    auto qfirst = std::lower_bound(ps.begin(), ps.end(), lo);
    for (auto qit = qfirst; qit != ps.end() && *qit <= hi; ++qit)
      inner += 1.0 - 1.0 / static_cast<double>(*qit);  // k = 1 term
    auto pfirst = std::lower_bound(
        powers.begin(), powers.end(), lo,
        [](const PowerTerm& t, u64 v) { return t.value < v; });
    for (auto pit = pfirst; pit != powers.end() && pit->value <= hi; ++pit)
      inner += pit->weight;
    total += inner / (4.0 * std::sqrt(static_cast<double>(p)));
  }

  MainTermReport report;
  report.x = x;
  report.value = total;
  const double lx = std::log(static_cast<double>(x));
  report.normalized = total * lx * lx / static_cast<double>(x);
  return report;
}

}  // namespace ellprime
