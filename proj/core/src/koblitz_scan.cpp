#include "ellprime/koblitz_scan.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "ellprime/order_counting.hpp"

namespace ellprime {

namespace {

std::vector<u64> koblitz_divisors(u64 n, const Factorization& n_factors) {
  std::vector<u64> ts;
  for (const auto& f : n_factors.factors) ts.push_back(n / f.base);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

}  // namespace

ScanCache::ScanCache(const CurveSpec& spec)
    : curve_(spec), delta_(discriminant(spec)) {
  if (delta_ == 0) throw DomainError("ScanCache: singular curve");
}

void ScanCache::append(ScanRecord record) {
  if (!records_.empty() && record.p <= records_.back().p)
    throw CacheError("ScanCache: records must ascend in p");
  records_.push_back(std::move(record));
}

void ScanCache::set_high_water(u64 x) {
  if (x < high_water_) throw CacheError("ScanCache: high water cannot drop");
  high_water_ = x;
}

std::string ScanCache::file_name() const {
  return std::to_string(curve_.a) + "_" + std::to_string(curve_.b) +
         ".scan.csv";
}

void ScanCache::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw CacheError("ScanCache: cannot write " + path.string());
  out << "# curve a=" << curve_.a << " b=" << curve_.b << " delta=" << delta_
      << " x=" << high_water_ << "\n";
  out << "p,n,ap\n";
  for (const auto& r : records_) out << r.p << ',' << r.n << ',' << r.ap << "\n";
}

ScanCache ScanCache::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CacheError("ScanCache: cannot read " + path.string());
  std::string line;
  if (!std::getline(in, line) || line.rfind("# curve ", 0) != 0)
    throw CacheError("ScanCache: missing metadata line");
  CurveSpec spec;
  u64 high_water = 0;
  {
    std::istringstream meta(line.substr(8));
    std::string token;
    while (meta >> token) {
      const auto eq = token.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = token.substr(0, eq);
      const std::string value = token.substr(eq + 1);
      if (key == "a") spec.a = std::stoll(value);
      else if (key == "b") spec.b = std::stoll(value);
      else if (key == "x") high_water = std::stoull(value);
      // delta is recomputed; a mismatch would mean a corrupted file
    }
  }
  ScanCache cache(spec);
  if (!std::getline(in, line) || line != "p,n,ap")
    throw CacheError("ScanCache: missing header line");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ScanRecord record;
    char c1 = 0, c2 = 0;
    std::istringstream row(line);
    if (!(row >> record.p >> c1 >> record.n >> c2 >> record.ap) || c1 != ',' ||
        c2 != ',')
      throw CacheError("ScanCache: malformed row: " + line);
    record.koblitz_for = koblitz_divisors(record.n, factorize(record.n));
    cache.append(std::move(record));
  }
  cache.set_high_water(high_water);
  return cache;
}

ScanCache& scan(const CurveSpec& spec, u64 x, ScanCache& cache) {
  if (x > kMaxScanBound) throw BoundsError("scan: x must be <= 1e6");
  if (cache.curve().a != spec.a || cache.curve().b != spec.b)
    throw CacheError("scan: cache belongs to a different curve");
  if (x <= cache.high_water()) return cache;

  const i64 delta = cache.delta();
  const PrimeSieve primes(std::max<u64>(x, 5));
  for (u32 p : primes.primes()) {
    if (p < 5 || p <= cache.high_water()) continue;
    if (u64(p) > x) break;
    if (delta % static_cast<i64>(p) == 0) continue;  // bad reduction
    const ReducedCurve curve = reduce(spec, p);
    ScanRecord record;
    record.p = p;
    record.n = group_order(curve);
    record.ap = static_cast<i64>(p) + 1 - static_cast<i64>(record.n);
    record.koblitz_for = koblitz_divisors(record.n, factorize(record.n));
    cache.append(std::move(record));
  }
  cache.set_high_water(x);
  return cache;
}

u64 count_koblitz(const ScanCache& cache, u64 x, u64 t) {
  return koblitz_hits(cache, x, t).size();
}

std::vector<ScanRecord> koblitz_hits(const ScanCache& cache, u64 x, u64 t) {
  if (!cache.covers(x)) throw CacheError("koblitz_hits: cache does not cover x");
  if (t < 1) throw DomainError("koblitz_hits: t must be >= 1");
  std::vector<ScanRecord> hits;
  for (const auto& r : cache.records()) {
    if (r.p > x) break;
    if (std::binary_search(r.koblitz_for.begin(), r.koblitz_for.end(), t))
      hits.push_back(r);
  }
  return hits;
}

bool SplitCondition::matches(u64 p) const {
  return std::binary_search(residues.begin(), residues.end(), p % modulus);
}

SplitCondition split_condition_for_discriminant(i64 D) {
  if (D == 0)
    throw DomainError("split_condition_for_discriminant: D must be nonzero");
  if (D == -4) return {4, {1}};
  if (D == -3) return {3, {1}};
  if (D == -8) return {8, {1, 3}};
  const u64 absD = static_cast<u64>(D < 0 ? -D : D);
  const u64 modulus = (((D % 4) + 4) % 4 == 1) ? absD : 4 * absD;
  SplitCondition cond{modulus, {}};
  for (u64 r = 1; r < modulus; ++r) {
    if (std::gcd(r, modulus) != 1) continue;
    if (kronecker(D, static_cast<i64>(r)) == 1) cond.residues.push_back(r);
  }
  return cond;
}

u64 elliptic_divisor_empirical(const ScanCache& cache,
                               const std::optional<SplitCondition>& split) {
  u64 g = 0;
  for (const auto& r : cache.records()) {
    if (split && !split->matches(r.p)) continue;
    g = std::gcd(g, r.n);
  }
  if (g == 0)
    throw DomainError("elliptic_divisor_empirical: no qualifying records");
  return g;
}

namespace {

// Largest k-th root detection: m with m^k == v (v > 0), else nullopt.
std::optional<i64> exact_root(i64 v, int k) {
  if (v <= 0) return std::nullopt;
  double guess = std::pow(static_cast<double>(v), 1.0 / k);
  for (i64 m = std::max<i64>(1, static_cast<i64>(guess) - 2);
       m <= static_cast<i64>(guess) + 2; ++m) {
    i64 acc = 1;
    bool overflow = false;
    for (int i = 0; i < k; ++i) {
      if (acc > v / m + 1) { overflow = true; break; }
      acc *= m;
    }
    if (!overflow && acc == v) return m;
  }
  return std::nullopt;
}

bool is_square(i64 v) { return exact_root(v, 2).has_value(); }
bool is_cube(i64 v) {
  if (v == 0) return false;
  return v > 0 ? exact_root(v, 3).has_value() : exact_root(-v, 3).has_value();
}
bool is_fourth(i64 v) { return exact_root(v, 4).has_value(); }

// (a, b) matches (coeff_a c^2, coeff_b c^3) for some nonzero integer c.
bool matches_c23_family(i64 a, i64 b, i64 coeff_a, i64 coeff_b) {
  if (a == 0 || b == 0) return false;
  if (a % coeff_a != 0 || b % coeff_b != 0) return false;
  const i64 c2 = a / coeff_a;
  const i64 c3 = b / coeff_b;
  const auto c = exact_root(c2, 2);
  if (!c) return false;
  for (i64 sign : {i64(1), i64(-1)}) {
    const i64 cc = *c * sign;
    if (cc != 0 && cc * cc == c2 && cc * cc * cc == c3) return true;
  }
  return false;
}

}  // namespace

std::optional<u64> cm_divisor_lookup(const CurveSpec& spec) {
  const i64 a = spec.a, b = spec.b;

  if (a == 0 && b != 0) {
    // D = -3 block, most specific family first. The square families are
    // m^2 and -27 m^2; the cube family is m^3; both at once (exactly
    // b = c^6 or b = -27 c^6) combine to 12 = lcm(3, 4).
    const bool square_family =
        is_square(b) || (b % 27 == 0 && b / 27 < 0 && is_square(-(b / 27)));
    const bool cube_family = is_cube(b);
    if (square_family && cube_family) return 12;
    if (cube_family) return 4;
    if (square_family) return 3;
    return 1;
  }
  if (b == 0 && a != 0) {
    // D = -4 block.
    if ((a < 0 && is_fourth(-a)) || (a > 0 && a % 4 == 0 && is_fourth(a / 4)))
      return 8;
    if (is_square(a) || is_square(-a)) return 4;
    return 2;
  }
  // Fixed quadratic-twist families (-140c^2, -784c^3) etc.
  struct Family {
    i64 coeff_a, coeff_b;
    u64 divisor;
  };
  static constexpr Family kFamilies[] = {
      {-140, -784, 4},                      // D = -7
      {-30, -56, 2},                        // D = -8
      {-1056, -13552, 1},                   // D = -11
      {-608, -5776, 1},                     // D = -19
      {-13760, -621264, 1},                 // D = -43
      {-117920, -15585808, 1},              // D = -67
      {-34790720, -78984748304, 1},         // D = -163
  };
  for (const auto& fam : kFamilies) {
    if (matches_c23_family(a, b, fam.coeff_a, fam.coeff_b)) return fam.divisor;
  }
  return std::nullopt;
}

double BrunPartialSum::as_double() const {
  return exact.convert_to<double>();
}

std::string BrunPartialSum::decimal(unsigned digits) const {
  using boost::multiprecision::cpp_int;
  cpp_int num = numerator(exact);
  const cpp_int den = denominator(exact);
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  cpp_int scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  // round half up at the last digit
  const cpp_int scaled = (num * scale * 2 + den) / (den * 2);
  const cpp_int integral = scaled / scale;
  const cpp_int remainder = scaled % scale;
  std::string frac = remainder.str();
  frac.insert(frac.begin(), digits - frac.size(), '0');
  return sign + integral.str() + "." + frac;
}

namespace {

// Balanced pairwise reduction keeps the rational operands small; the value
// is identical to sequential accumulation, just far cheaper at scan scale.
BigRational sum_reciprocals(const std::vector<ScanRecord>& hits,
                            std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return BigRational(1, hits[lo].p);
  const std::size_t mid = lo + (hi - lo) / 2;
  return sum_reciprocals(hits, lo, mid) + sum_reciprocals(hits, mid, hi);
}

}  // namespace

BrunPartialSum brun_partial_sum(const ScanCache& cache, u64 x, u64 t) {
  BrunPartialSum sum;
  sum.exact = 0;
  const auto hits = koblitz_hits(cache, x, t);
  sum.terms = hits.size();
  if (!hits.empty()) sum.exact = sum_reciprocals(hits, 0, hits.size());
  return sum;
}

i64 bad_prime_trace(const CurveSpec& spec, u64 p) {
  if (p < 2 || !is_prime_u64(p))
    throw DomainError("bad_prime_trace: p must be prime");
  // Count points of the reduced (singular) curve, excluding singular points,
  // including the identity: split multiplicative p-1, nonsplit p+1,
  // additive p.
  const i64 ip = static_cast<i64>(p);
  const u64 a = static_cast<u64>(((spec.a % ip) + ip) % ip);
  const u64 b = static_cast<u64>(((spec.b % ip) + ip) % ip);
  u64 nonsingular = 1;  // identity
  if (p == 2) {
    for (u64 x = 0; x < 2; ++x) {
      for (u64 y = 0; y < 2; ++y) {
        if ((y * y + x * x * x + a * x + b) % 2 != 0) continue;
        // char 2: dF/dy = 0 identically, singular iff x^2 + a = 0 too
        if ((x * x + a) % 2 != 0) ++nonsingular;
      }
    }
    return ip - static_cast<i64>(nonsingular);
  }
  std::vector<u32> root_count(p, 0);
  for (u64 y = 0; y < p; ++y) ++root_count[mul_mod(y, y, p)];
  for (u64 x = 0; x < p; ++x) {
    const u64 rhs =
        (mul_mod(mul_mod(x, x, p), x, p) + mul_mod(a, x, p) + b) % p;
    nonsingular += root_count[rhs];
    // odd p: a singular point needs y = 0 (so rhs = 0) and 3x^2 + a = 0
    if (rhs == 0 && (mul_mod(3 % p, mul_mod(x, x, p), p) + a) % p == 0)
      --nonsingular;
  }
  return ip - static_cast<i64>(nonsingular);
}

std::vector<i64> lseries_coeffs(const CurveSpec& spec, u64 N) {
  if (N < 1 || N > 100'000)
    throw BoundsError("lseries_coeffs: N must be in [1, 1e5]");
  const i64 delta = discriminant(spec);
  if (delta == 0) throw DomainError("lseries_coeffs: singular curve");

  std::vector<i64> coeffs(N + 1, 0);
  coeffs[1] = 1;
  if (N == 1) return {coeffs.begin() + 1, coeffs.end()};

  const PrimeSieve primes(N);
  // smallest prime factor table for multiplicative assembly
  std::vector<u32> spf(N + 1, 0);
  for (u32 p : primes.primes()) {
    for (u64 m = p; m <= N; m += p) {
      if (spf[m] == 0) spf[m] = p;
    }
  }

  for (u32 p : primes.primes()) {
    const bool bad = (p == 2 || p == 3 || delta % static_cast<i64>(p) == 0);
    const i64 ap = bad ? bad_prime_trace(spec, p) : trace(reduce(spec, p));
    u64 pk = p;
    coeffs[pk] = ap;
    // prime powers: Hecke recurrence at good p, a_p^k at bad p
    while (pk <= N / p) {
      const u64 next = pk * p;
      if (bad)
        coeffs[next] = ap * coeffs[pk];
      else
        coeffs[next] = ap * coeffs[pk] -
                       static_cast<i64>(p) * (pk == p ? 1 : coeffs[pk / p]);
      pk = next;
    }
  }

  for (u64 n = 2; n <= N; ++n) {
    const u64 q = spf[n];
    u64 qk = 1, m = n;
    while (m % q == 0) {
      m /= q;
      qk *= q;
    }
    if (m > 1) coeffs[n] = coeffs[qk] * coeffs[m];
  }
  return {coeffs.begin() + 1, coeffs.end()};
}

}  // namespace ellprime
