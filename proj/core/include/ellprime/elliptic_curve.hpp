#pragma once

// Short-Weierstrass curves y^2 = x^3 + ax + b over Q and their reductions
// mod p: group law, scalar multiplication, point order, invariants.

#include <optional>
#include <string>
#include <vector>

#include "ellprime/numtheory.hpp"

namespace ellprime {

struct CurveSpec {
  i64 a = 0;
  i64 b = 0;
  std::string label;  // optional, e.g. "1728.n4"
};

/// -16(4a^3 + 27b^2). BoundsError if the value overflows 64 bits.
i64 discriminant(const CurveSpec& spec);

/// Reduced fraction num/den with den > 0.
struct Rational {
  i64 num = 0;
  i64 den = 1;
  bool operator==(const Rational&) const = default;
};

/// j = c4^3 / Delta with c4 = -48a. DomainError on singular curves.
Rational j_invariant(const CurveSpec& spec);

/// Parse "a,b" with optional "#label" suffix.
CurveSpec parse_curve(const std::string& text);
std::string curve_to_string(const CurveSpec& spec);

struct ReducedCurve {
  u64 p = 0;  // odd prime >= 5
  u64 a = 0;  // a mod p
  u64 b = 0;  // b mod p
};

/// Reduce mod p. Requires p >= 5 prime with p not dividing the discriminant;
/// BadReductionError otherwise.
ReducedCurve reduce(const CurveSpec& spec, u64 p);

struct ReducedPoint {
  bool infinity = true;
  u64 x = 0;
  u64 y = 0;

  static ReducedPoint identity() { return {}; }
  static ReducedPoint affine(u64 x, u64 y) { return {false, x, y}; }
  bool operator==(const ReducedPoint&) const = default;
};

bool on_curve(const ReducedCurve& curve, const ReducedPoint& point);

/// Chord-tangent group law in affine coordinates. DomainError on off-curve
/// inputs.
ReducedPoint add(const ReducedCurve& curve, const ReducedPoint& lhs,
                 const ReducedPoint& rhs);

ReducedPoint negate(const ReducedCurve& curve, const ReducedPoint& point);

/// k-fold sum by double-and-add; scalar_mul(0, P) is the identity.
ReducedPoint scalar_mul(const ReducedCurve& curve, u64 k,
                        const ReducedPoint& point);

/// Least d >= 1 with dP = O, given a group exponent multiple n (nP = O must
/// hold, else DomainError). Computed by stripping prime factors of n.
u64 point_order(const ReducedCurve& curve, const ReducedPoint& point, u64 n,
                const Factorization& n_factors);
u64 point_order(const ReducedCurve& curve, const ReducedPoint& point, u64 n);

/// All curve points with the given x coordinate, smaller y first.
std::vector<ReducedPoint> lift_x(const ReducedCurve& curve, u64 x);

/// Every point including the identity, in lift_x order (identity first).
/// Guarded to p <= 10^4.
std::vector<ReducedPoint> enumerate_points(const ReducedCurve& curve);

namespace detail {
// Group law without on-curve validation, for hot loops that have already
// checked their inputs.
ReducedPoint add_unchecked(const ReducedCurve& curve, const ReducedPoint& lhs,
                           const ReducedPoint& rhs);
}  // namespace detail

}  // namespace ellprime
