#pragma once

// Von Mangoldt sums over short intervals, the Lambda-weighted Hasse-interval
// measure, the empirical main term M(x), and interval checks.

#include <string>
#include <vector>

#include "ellprime/elliptic_curve.hpp"
#include "ellprime/numtheory.hpp"

namespace ellprime {

struct IntervalSumReport {
  u64 center = 0;
  u64 lo = 0;
  u64 hi = 0;
  double lambda_sum = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

/// Sieve-backed engine for repeated Lambda(n) interval sums. Construction
/// cost is one sieve up to `limit` (<= 1e8) plus the list of proper prime
/// powers; each sum is then linear in the number of prime powers it covers.
class LambdaSummer {
 public:
  explicit LambdaSummer(u64 limit);

  u64 limit() const { return sieve_.limit(); }
  const PrimeSieve& primes() const { return sieve_; }

  /// sum of Lambda(n) over lo <= n <= hi, summed term by term.
  double sum(u64 lo, u64 hi) const;

  /// pi(x).
  u64 count_primes(u64 x) const { return sieve_.count_leq(x); }

 private:
  PrimeSieve sieve_;
  std::vector<double> prime_logs_;              // log p, aligned with primes()
  std::vector<std::pair<u64, double>> powers_;  // p^k (k >= 2) with log p
};

double lambda_sum(u64 lo, u64 hi);

struct SurveyResult {
  std::vector<IntervalSumReport> reports;
  u64 exceptions = 0;
};

/// For each prime p in [x_lo, x_hi], checks sum of Lambda(n) over
/// [p - 2 sqrt p, p + 2 sqrt p] against the threshold 2 sqrt p. Interval
/// membership is decided exactly: |n - p| <= 2 sqrt p iff (n-p)^2 <= 4p.
SurveyResult short_interval_survey(u64 x_lo, u64 x_hi);
SurveyResult short_interval_survey(u64 x_lo, u64 x_hi,
                                   const LambdaSummer& summer);

/// CSV rendering with columns p, lo, hi, lambda_sum, threshold, pass.
std::string survey_to_csv(const SurveyResult& survey);

struct BrunTitchmarshReport {
  u64 x = 0;
  u64 interval_hi = 0;   // x + floor(4 sqrt x), exact
  u64 prime_count = 0;   // pi(interval_hi) - pi(x)
  double bound = 0.0;    // 12 sqrt(x) / log x
  bool pass = false;
};

/// Verifies pi(x + 4 sqrt x) - pi(x) <= 3 * 4 sqrt x / log x at x <= 1e7.
BrunTitchmarshReport brun_titchmarsh_check(u64 x);
BrunTitchmarshReport brun_titchmarsh_check(u64 x, const LambdaSummer& summer);

/// The discrete density measure at one prime: (1/(4 sqrt p)) Lambda(n)/log n
/// when the reduced point generates E(F_p), the order n is a prime power and
/// lies in the literal interval [p - 2 sqrt p, p + 2 sqrt p]; 0 otherwise.
/// Lambda(q^k)/log(q^k) is taken exactly as 1/k.
double hasse_measure(const CurveSpec& spec, u64 p, i64 point_x, i64 point_y);

struct MainTermReport {
  u64 x = 0;
  double value = 0.0;       // M(x)
  double normalized = 0.0;  // M(x) log^2 x / x
};

/// M(x) = sum over primes p in [x, 2x] of (1/(4 sqrt p)) times the interval
/// sum of (Lambda(n)/log n)(phi(n)/n), evaluated exactly as written
/// (contributions (1 - 1/q)/k at n = q^k). Guarded to x <= 1e6.
MainTermReport main_term_M(u64 x);

}  // namespace ellprime
