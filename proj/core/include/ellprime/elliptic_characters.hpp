#pragma once

// Discrete logarithms on cyclic E(F_p), the additive elliptic character, and
// both representations of the primitive-point characteristic function, all in
// exact integer arithmetic.

#include <optional>
#include <unordered_map>

#include "ellprime/elliptic_curve.hpp"

namespace ellprime {

/// The root of unity e^{i 2 pi k / n}, kept exact as the pair (k mod n, n).
/// Multiplication adds numerators mod n.
struct UnitAngle {
  u64 numerator = 0;
  u64 modulus = 1;

  static UnitAngle one(u64 n) { return {0, n}; }
  static UnitAngle of(u64 k, u64 n) { return {k % n, n}; }
  bool is_one() const { return numerator == 0; }
  bool operator==(const UnitAngle&) const = default;

  UnitAngle operator*(const UnitAngle& other) const;
  UnitAngle pow(u64 e) const { return of(mul_mod(numerator, e % modulus, modulus), modulus); }
  UnitAngle inverse() const { return of(numerator == 0 ? 0 : modulus - numerator, modulus); }
};

inline constexpr u64 kMaxLogTableOrder = 1'000'000;

/// Complete discrete-log table with respect to a primitive base point T:
/// log(O) = 0, log(T) = 1, log(mT) = m mod n. Immutable and shareable.
class LogTable {
 public:
  /// Builds by walking T, 2T, ..., nT = O. Errors if T is not primitive
  /// (the table would be partial) or n exceeds the resource guard.
  LogTable(const ReducedCurve& curve, const ReducedPoint& base, u64 n);

  u64 order() const { return n_; }
  const ReducedCurve& curve() const { return curve_; }
  const ReducedPoint& base() const { return base_; }

  /// DomainError for points outside the group.
  u64 log(const ReducedPoint& point) const;
  bool contains(const ReducedPoint& point) const;

 private:
  ReducedCurve curve_;
  ReducedPoint base_;
  u64 n_;
  std::unordered_map<u64, u64> logs_;
};

LogTable build_log_table(const ReducedCurve& curve, const ReducedPoint& base,
                         u64 n);

/// chi(Q) = e^{i 2 pi log_T(Q) / n}.
UnitAngle character(const LogTable& table, const ReducedPoint& point);

/// Divisor representation of the characteristic function of primitive
/// points: sum over d | n of mu(d)/d times the order-d character sum, which
/// collapses exactly to sum of mu(d) over d | gcd(n, log(P)). 1 iff P
/// generates.
int psi_divisor(const LogTable& table, const ReducedPoint& point,
                const Factorization& n_factors);

/// Divisor-free representation: counts units m with mT = P by exact
/// geometric-sum collapse (inner sum is n exactly when log(mT - P) = 0).
/// 1 iff P generates.
int psi_divisor_free(const LogTable& table, const ReducedPoint& point);

/// First primitive point in lift_x order (x ascending, smaller y first),
/// or nullopt when the group is not cyclic.
std::optional<ReducedPoint> find_primitive_point(const ReducedCurve& curve,
                                                 u64 n,
                                                 const Factorization& n_factors);

/// Exact evaluations, for prime n and 1 <= k < n, of the two root-of-unity
/// sums: sum_{0<r<=n-1} e^{-i 2 pi r k / n} and the unit-restricted
/// sum_{gcd(m,n)=1} e^{i 2 pi m k / n} (a Ramanujan sum). Each sum is
/// accumulated as an exact element of Z[zeta_n] and reduced; DomainError if
/// n is composite or the reduction is not a rational integer.
struct GeometricSums {
  i64 full_sum = 0;
  i64 unit_sum = 0;
};
GeometricSums geometric_sum_check(u64 n, u64 k);

}  // namespace ellprime
