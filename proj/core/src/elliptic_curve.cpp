#include "ellprime/elliptic_curve.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

namespace ellprime {

namespace {

constexpr i64 kCoeffGuard = 2'000'000;  // keeps -16(4a^3+27b^2) inside i64

i128 discriminant_wide(i64 a, i64 b) {
  const i128 a3 = i128(a) * a * a;
  const i128 b2 = i128(b) * b;
  return i128(-16) * (4 * a3 + 27 * b2);
}

}  // namespace

i64 discriminant(const CurveSpec& spec) {
  if (spec.a > kCoeffGuard || spec.a < -kCoeffGuard ||
      spec.b > 100 * kCoeffGuard || spec.b < -100 * kCoeffGuard)
    throw BoundsError("discriminant: coefficients too large for exact i64");
  const i128 d = discriminant_wide(spec.a, spec.b);
  if (d > i128(INT64_MAX) || d < i128(INT64_MIN))
    throw BoundsError("discriminant: value overflows 64 bits");
  return static_cast<i64>(d);
}

Rational j_invariant(const CurveSpec& spec) {
  const i64 delta = discriminant(spec);
  if (delta == 0) throw DomainError("j_invariant: singular curve");
  // c4 = -48a, j = c4^3 / Delta = 6912 a^3 / (4a^3 + 27b^2)
  const i128 num_w = i128(6912) * spec.a * spec.a * spec.a;
  const i128 den_w = i128(4) * spec.a * spec.a * spec.a +
                     i128(27) * spec.b * spec.b;
  if (num_w > i128(INT64_MAX) || num_w < i128(INT64_MIN))
    throw BoundsError("j_invariant: value overflows 64 bits");
  i64 num = static_cast<i64>(num_w);
  i64 den = static_cast<i64>(den_w);
  if (den < 0) {
    den = -den;
    num = -num;
  }
  const i64 g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (den == 0) throw DomainError("j_invariant: singular curve");
  return {num, den};
}

CurveSpec parse_curve(const std::string& text) {
  CurveSpec spec;
  std::string body = text;
  if (auto hash = text.find('#'); hash != std::string::npos) {
    spec.label = text.substr(hash + 1);
    body = text.substr(0, hash);
  }
  const auto comma = body.find(',');
  if (comma == std::string::npos)
    throw DomainError("parse_curve: expected \"a,b\" integers");
  auto parse_int = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.remove_suffix(1);
    i64 value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
      throw DomainError("parse_curve: bad integer coefficient");
    return value;
  };
  spec.a = parse_int(std::string_view(body).substr(0, comma));
  spec.b = parse_int(std::string_view(body).substr(comma + 1));
  return spec;
}

std::string curve_to_string(const CurveSpec& spec) {
  std::string s = std::to_string(spec.a) + "," + std::to_string(spec.b);
  if (!spec.label.empty()) s += "#" + spec.label;
  return s;
}

ReducedCurve reduce(const CurveSpec& spec, u64 p) {
  if (p < 2 || !is_prime_u64(p))
    throw DomainError("reduce: p must be prime");
  const i128 delta = discriminant_wide(spec.a, spec.b);
  if (delta % i128(p) == 0)
    throw BadReductionError("reduce: bad reduction, p divides the discriminant");
  if (p == 2 || p == 3)
    throw BadReductionError("reduce: characteristic 2 and 3 unsupported");
  auto mod = [&](i64 v) {
    i64 r = v % static_cast<i64>(p);
    return static_cast<u64>(r < 0 ? r + static_cast<i64>(p) : r);
  };
  return {p, mod(spec.a), mod(spec.b)};
}

bool on_curve(const ReducedCurve& curve, const ReducedPoint& point) {
  if (point.infinity) return true;
  const u64 p = curve.p;
  if (point.x >= p || point.y >= p) return false;
  const u64 lhs = mul_mod(point.y, point.y, p);
  u64 rhs = mul_mod(mul_mod(point.x, point.x, p), point.x, p);
  rhs = (rhs + mul_mod(curve.a, point.x, p)) % p;
  rhs = (rhs + curve.b) % p;
  return lhs == rhs;
}

namespace detail {

ReducedPoint add_unchecked(const ReducedCurve& curve, const ReducedPoint& lhs,
                           const ReducedPoint& rhs) {
  if (lhs.infinity) return rhs;
  if (rhs.infinity) return lhs;
  const u64 p = curve.p;
  u64 lambda;
  if (lhs.x == rhs.x) {
    if ((lhs.y + rhs.y) % p == 0) return ReducedPoint::identity();
    // tangent: (3x^2 + a) / (2y)
    const u64 num = (mul_mod(3 % p, mul_mod(lhs.x, lhs.x, p), p) + curve.a) % p;
    lambda = mul_mod(num, inv_mod((2 * lhs.y) % p, p), p);
  } else {
    const u64 num = (rhs.y + p - lhs.y) % p;
    const u64 den = (rhs.x + p - lhs.x) % p;
    lambda = mul_mod(num, inv_mod(den, p), p);
  }
  const u64 x3 = (mul_mod(lambda, lambda, p) + 2 * p - lhs.x - rhs.x) % p;
  const u64 y3 = (mul_mod(lambda, (lhs.x + p - x3) % p, p) + p - lhs.y) % p;
  return ReducedPoint::affine(x3, y3);
}

}  // namespace detail

ReducedPoint add(const ReducedCurve& curve, const ReducedPoint& lhs,
                 const ReducedPoint& rhs) {
  if (!on_curve(curve, lhs) || !on_curve(curve, rhs))
    throw DomainError("add: point not on curve");
  return detail::add_unchecked(curve, lhs, rhs);
}

ReducedPoint negate(const ReducedCurve& curve, const ReducedPoint& point) {
  if (point.infinity) return point;
  if (!on_curve(curve, point)) throw DomainError("negate: point not on curve");
  return ReducedPoint::affine(point.x, point.y == 0 ? 0 : curve.p - point.y);
}

ReducedPoint scalar_mul(const ReducedCurve& curve, u64 k,
                        const ReducedPoint& point) {
  if (!on_curve(curve, point))
    throw DomainError("scalar_mul: point not on curve");
  ReducedPoint acc = ReducedPoint::identity();
  ReducedPoint base = point;
  while (k) {
    if (k & 1) acc = detail::add_unchecked(curve, acc, base);
    base = detail::add_unchecked(curve, base, base);
    k >>= 1;
  }
  return acc;
}

u64 point_order(const ReducedCurve& curve, const ReducedPoint& point, u64 n,
                const Factorization& n_factors) {
  if (!scalar_mul(curve, n, point).infinity)
    throw DomainError("point_order: nP != O, n is not an exponent multiple");
  u64 d = n;
  for (const auto& f : n_factors.factors) {
    for (u32 e = 0; e < f.exponent; ++e) {
      if (d % f.base != 0) break;
      if (scalar_mul(curve, d / f.base, point).infinity)
        d /= f.base;
      else
        break;
    }
  }
  return d;
}

u64 point_order(const ReducedCurve& curve, const ReducedPoint& point, u64 n) {
  return point_order(curve, point, n, factorize(n));
}

std::vector<ReducedPoint> lift_x(const ReducedCurve& curve, u64 x) {
  const u64 p = curve.p;
  x %= p;
  u64 rhs = mul_mod(mul_mod(x, x, p), x, p);
  rhs = (rhs + mul_mod(curve.a, x, p)) % p;
  rhs = (rhs + curve.b) % p;
  std::vector<ReducedPoint> points;
  if (rhs == 0) {
    points.push_back(ReducedPoint::affine(x, 0));
  } else if (auto root = sqrt_mod(rhs, p)) {
    points.push_back(ReducedPoint::affine(x, *root));
    points.push_back(ReducedPoint::affine(x, p - *root));
  }
  return points;
}

std::vector<ReducedPoint> enumerate_points(const ReducedCurve& curve) {
  if (curve.p > 10'000)
    throw BoundsError("enumerate_points: p must be <= 1e4");
  std::vector<ReducedPoint> points{ReducedPoint::identity()};
  // One pass over squares instead of per-x Tonelli-Shanks.
  std::vector<std::vector<u64>> roots(curve.p);
  for (u64 y = 0; y < curve.p; ++y) roots[mul_mod(y, y, curve.p)].push_back(y);
  for (u64 x = 0; x < curve.p; ++x) {
    u64 rhs = mul_mod(mul_mod(x, x, curve.p), x, curve.p);
    rhs = (rhs + mul_mod(curve.a, x, curve.p)) % curve.p;
    rhs = (rhs + curve.b) % curve.p;
    for (u64 y : roots[rhs]) points.push_back(ReducedPoint::affine(x, y));
  }
  return points;
}

}  // namespace ellprime
