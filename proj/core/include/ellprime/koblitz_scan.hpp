#pragma once

// Curve scans over all good primes p <= x: orders, traces, Koblitz primes,
// elliptic divisors, Brun partial sums, L-series coefficients, persistence.

#include <boost/multiprecision/cpp_int.hpp>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ellprime/elliptic_curve.hpp"

namespace ellprime {

inline constexpr u64 kMaxScanBound = 1'000'000;

struct ScanRecord {
  u64 p = 0;
  u64 n = 0;    // #E(F_p)
  i64 ap = 0;   // p + 1 - n
  // Divisors t with t | n and n/t prime, i.e. { n/q : q prime, q | n }.
  std::vector<u64> koblitz_for;
};

/// Per-curve scan results: one record per good prime 5 <= p <= high_water,
/// ascending, none missing. Single writer per curve; snapshots are safe to
/// read concurrently.
class ScanCache {
 public:
  explicit ScanCache(const CurveSpec& spec);

  const CurveSpec& curve() const { return curve_; }
  i64 delta() const { return delta_; }
  u64 high_water() const { return high_water_; }
  const std::vector<ScanRecord>& records() const { return records_; }

  bool covers(u64 x) const { return x <= high_water_; }
  void append(ScanRecord record);  // enforces ascending p
  void set_high_water(u64 x);

  /// "<a>_<b>.scan.csv"
  std::string file_name() const;

  /// CSV with a metadata comment line and header p,n,ap.
  void save(const std::filesystem::path& path) const;
  static ScanCache load(const std::filesystem::path& path);

 private:
  CurveSpec curve_;
  i64 delta_ = 0;
  u64 high_water_ = 0;
  std::vector<ScanRecord> records_;
};

/// Extends the cache to cover every prime p <= x with p >= 5 and p not
/// dividing the discriminant. Incremental: already-covered primes are
/// reused. CacheError on curve mismatch, BoundsError above the scan guard.
ScanCache& scan(const CurveSpec& spec, u64 x, ScanCache& cache);

/// #{p <= x : t | n and n/t prime}. CacheError if the cache does not
/// cover x.
u64 count_koblitz(const ScanCache& cache, u64 x, u64 t);

/// Matching Koblitz records (t | n, n/t prime, p <= x), ascending p.
std::vector<ScanRecord> koblitz_hits(const ScanCache& cache, u64 x, u64 t);

struct SplitCondition {
  u64 modulus = 1;
  std::vector<u64> residues;  // ascending

  bool matches(u64 p) const;
};

/// Residue classes of primes splitting in Q(sqrt(D)).
SplitCondition split_condition_for_discriminant(i64 D);

/// gcd of the group orders over qualifying records (optionally restricted to
/// split primes). DomainError when no record qualifies.
u64 elliptic_divisor_empirical(const ScanCache& cache,
                               const std::optional<SplitCondition>& split);

/// Table lookup of the CM integer divisor by coefficient family, most
/// specific family first; nullopt for curves outside the table.
std::optional<u64> cm_divisor_lookup(const CurveSpec& spec);

using BigRational = boost::multiprecision::cpp_rational;

struct BrunPartialSum {
  BigRational exact;  // sum of 1/p over Koblitz primes p <= x
  u64 terms = 0;

  double as_double() const;
  /// Fixed-point decimal with the given digits after the point, round half
  /// up. Deterministic.
  std::string decimal(unsigned digits) const;
};

/// Exact rational sum of 1/p over records with t | n and n/t prime, p <= x.
BrunPartialSum brun_partial_sum(const ScanCache& cache, u64 x, u64 t);

/// a_1..a_N: a_p from the Frobenius trace at good p >= 5, nonsingular point
/// counts at bad primes, Hecke recurrence at prime powers, multiplicative
/// elsewhere. N <= 1e5.
std::vector<i64> lseries_coeffs(const CurveSpec& spec, u64 N);

/// a_p for a bad prime (p = 2, 3 or p | Delta): p - #E_ns(F_p), the
/// nonsingular point count including the identity. +1 split multiplicative,
/// -1 nonsplit, 0 additive.
i64 bad_prime_trace(const CurveSpec& spec, u64 p);

}  // namespace ellprime
