#include "ellprime/elliptic_characters.hpp"

#include <numeric>
#include <vector>

#include "ellprime/division_polynomials.hpp"

namespace ellprime {

UnitAngle UnitAngle::operator*(const UnitAngle& other) const {
  if (modulus != other.modulus)
    throw DomainError("UnitAngle: mixed moduli");
  return of(numerator + other.numerator, modulus);
}

namespace {

u64 pack(const ReducedPoint& pt, u64 p) {
  return pt.infinity ? 0 : (pt.x + 1) * (p + 1) + pt.y;
}

}  // namespace

LogTable::LogTable(const ReducedCurve& curve, const ReducedPoint& base, u64 n)
    : curve_(curve), base_(base), n_(n) {
  if (n < 1 || n > kMaxLogTableOrder)
    throw BoundsError("LogTable: group order must be in [1, 1e6]");
  if (!on_curve(curve, base))
    throw DomainError("LogTable: base point not on curve");
  logs_.reserve(n * 2);
  logs_[pack(ReducedPoint::identity(), curve.p)] = 0;
  ReducedPoint walk = base;
  for (u64 m = 1; m < n; ++m) {
    if (walk.infinity)
      throw DomainError("LogTable: base point is not primitive");
    logs_[pack(walk, curve.p)] = m;
    walk = detail::add_unchecked(curve, walk, base);
  }
  if (!walk.infinity)
    throw DomainError("LogTable: base point is not primitive");
}

u64 LogTable::log(const ReducedPoint& point) const {
  const auto it = logs_.find(pack(point, curve_.p));
  if (it == logs_.end())
    throw DomainError("LogTable: point outside the group");
  return it->second;
}

bool LogTable::contains(const ReducedPoint& point) const {
  return logs_.count(pack(point, curve_.p)) != 0;
}

LogTable build_log_table(const ReducedCurve& curve, const ReducedPoint& base,
                         u64 n) {
  return LogTable(curve, base, n);
}

UnitAngle character(const LogTable& table, const ReducedPoint& point) {
  return UnitAngle::of(table.log(point), table.order());
}

int psi_divisor(const LogTable& table, const ReducedPoint& point,
                const Factorization& n_factors) {
  const u64 ell = table.log(point);
  // sum_{d|n} mu(d)/d * sum_{0<=t<d} chi_d(tP): the inner sum is d exactly
  // when d | log(P) and 0 otherwise, so each divisor contributes mu(d) or 0.
  i64 total = 0;
  for (u64 d : n_factors.divisors()) {
    if (ell % d == 0) total += moebius(d);
  }
  if (total != 0 && total != 1)
    throw DomainError("psi_divisor: indicator escaped {0,1}");
  return static_cast<int>(total);
}

int psi_divisor_free(const LogTable& table, const ReducedPoint& point) {
  const u64 n = table.order();
  const u64 ell = table.log(point);
  // (1/n) sum over units m of sum_{0<=r<n} chi((mT - P) r): the inner sum is
  // n exactly when log(mT - P) = (m - ell) mod n vanishes, else 0.
  u64 solutions = 0;
  for (u64 m = 0; m < n; ++m) {
    if (std::gcd(m, n) != 1) continue;
    if (m == ell) ++solutions;
  }
  if (solutions > 1)
    throw DomainError("psi_divisor_free: indicator escaped {0,1}");
  return static_cast<int>(solutions);
}

std::optional<ReducedPoint> find_primitive_point(const ReducedCurve& curve,
                                                 u64 n,
                                                 const Factorization& n_factors) {
  for (u64 x = 0; x < curve.p; ++x) {
    for (const ReducedPoint& pt : lift_x(curve, x)) {
      if (primitive_test_lucas(curve, pt, n, n_factors)) return pt;
    }
  }
  return std::nullopt;
}

namespace {

// Reduce an exact element of Z[zeta_n] (n prime), given as coefficient
// counts of zeta^0..zeta^{n-1}, to a rational integer using
// 1 + zeta + ... + zeta^{n-1} = 0. The element is an integer iff all
// coefficients at indices 1..n-1 agree.
i64 reduce_cyclotomic(const std::vector<i64>& coeff) {
  const u64 n = coeff.size();
  for (u64 j = 2; j < n; ++j) {
    if (coeff[j] != coeff[1])
      throw DomainError("geometric_sum_check: sum is not a rational integer");
  }
  return coeff[0] - coeff[1];
}

}  // namespace

GeometricSums geometric_sum_check(u64 n, u64 k) {
  if (!is_prime_u64(n))
    throw DomainError("geometric_sum_check: n must be prime");
  if (k < 1 || k >= n)
    throw DomainError("geometric_sum_check: k must satisfy 1 <= k < n");

  GeometricSums result;

  // sum_{0<r<=n-1} e^{-i 2 pi r k / n}
  std::vector<i64> coeff(n, 0);
  for (u64 r = 1; r < n; ++r) {
    const UnitAngle term = UnitAngle::of(k, n).pow(r).inverse();
    ++coeff[term.numerator];
  }
  result.full_sum = reduce_cyclotomic(coeff);

  // sum over units m of e^{i 2 pi m k / n} (Ramanujan sum c_n(k))
  std::fill(coeff.begin(), coeff.end(), 0);
  for (u64 m = 1; m < n; ++m) {
    if (std::gcd(m, n) != 1) continue;
    const UnitAngle term = UnitAngle::of(k, n).pow(m);
    ++coeff[term.numerator];
  }
  result.unit_sum = reduce_cyclotomic(coeff);

  return result;
}

}  // namespace ellprime
