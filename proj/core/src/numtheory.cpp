#include "ellprime/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ellprime {

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 m) {
  i64 t = 0, nt = 1;
  i64 r = static_cast<i64>(m), nr = static_cast<i64>(a % m);
  while (nr != 0) {
    i64 q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  if (r != 1) throw DomainError("inv_mod: argument not invertible");
  return static_cast<u64>(t < 0 ? t + static_cast<i64>(m) : t);
}

u64 isqrt_u64(u64 n) {
  if (n == 0) return 0;
  u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
  u64 x = pow_mod(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;  // composite witness
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic base set for the full 64-bit range.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                29ull, 31ull, 37ull}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

PrimeSieve::PrimeSieve(u64 limit) : limit_(limit) {
  if (limit < 2 || limit > kMaxLimit)
    throw BoundsError("PrimeSieve: limit must be in [2, 1e8]");
  bits_.assign(limit / 64 + 1, ~0ull);
  auto clear = [&](u64 n) { bits_[n >> 6] &= ~(1ull << (n & 63)); };
  clear(0);
  clear(1);
  for (u64 i = 2; i * i <= limit; ++i) {
    if (is_prime(i)) {
      for (u64 j = i * i; j <= limit; j += i) clear(j);
    }
  }
  for (u64 i = 2; i <= limit; ++i) {
    if (is_prime(i)) primes_.push_back(static_cast<u32>(i));
  }
}

bool PrimeSieve::is_prime(u64 n) const {
  if (n > limit_) throw BoundsError("PrimeSieve: query above limit");
  return (bits_[n >> 6] >> (n & 63)) & 1;
}

u64 PrimeSieve::count_leq(u64 x) const {
  if (x > limit_) throw BoundsError("PrimeSieve: query above limit");
  auto it = std::upper_bound(primes_.begin(), primes_.end(), x);
  return static_cast<u64>(it - primes_.begin());
}

u64 Factorization::value() const {
  u64 v = 1;
  for (const auto& f : factors) {
    for (u32 i = 0; i < f.exponent; ++i) v *= f.base;
  }
  return v;
}

std::vector<u64> Factorization::divisors() const {
  std::vector<u64> ds{1};
  for (const auto& f : factors) {
    const std::size_t count = ds.size();
    u64 pw = 1;
    for (u32 e = 1; e <= f.exponent; ++e) {
      pw *= f.base;
      for (std::size_t i = 0; i < count; ++i) ds.push_back(ds[i] * pw);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

bool Factorization::is_squarefree() const {
  return std::all_of(factors.begin(), factors.end(),
                     [](const PrimePower& f) { return f.exponent == 1; });
}

namespace {

// Shared trial-division primes up to 1e6, enough for n <= 1e12.
const std::vector<u32>& trial_primes() {
  static const PrimeSieve s(1'000'000);
  return s.primes();
}

}  // namespace

Factorization factorize(u64 n) {
  if (n < 1 || n > 1'000'000'000'000ull)
    throw BoundsError("factorize: n must be in [1, 1e12]");
  Factorization fac;
  for (u32 p : trial_primes()) {
    if (u64(p) * p > n) break;
    if (n % p == 0) {
      u32 e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      fac.factors.push_back({p, e});
    }
  }
  if (n > 1) fac.factors.push_back({n, 1});
  return fac;
}

int moebius(u64 n) {
  const Factorization fac = factorize(n);
  if (!fac.is_squarefree()) return 0;
  return fac.factors.size() % 2 == 0 ? 1 : -1;
}

u64 euler_phi(u64 n) {
  u64 phi = 1;
  for (const auto& f : factorize(n).factors) {
    u64 pw = f.base - 1;
    for (u32 e = 1; e < f.exponent; ++e) pw *= f.base;
    phi *= pw;
  }
  return phi;
}

std::optional<PrimePower> von_mangoldt_exact(u64 n) {
  if (n < 2) return std::nullopt;
  const Factorization fac = factorize(n);
  if (fac.factors.size() != 1) return std::nullopt;
  return fac.factors.front();
}

double von_mangoldt(u64 n) {
  const auto pp = von_mangoldt_exact(n);
  return pp ? std::log(static_cast<double>(pp->base)) : 0.0;
}

int legendre(i64 a, u64 p) {
  if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
    throw DomainError("legendre: modulus must be an odd prime");
  u64 r = static_cast<u64>(((a % static_cast<i64>(p)) + static_cast<i64>(p)) %
                           static_cast<i64>(p));
  if (r == 0) return 0;
  return pow_mod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

int kronecker(i64 a, i64 n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int sign = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) sign = -sign;
  }
  int v2 = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v2;
  }
  if (v2 > 0) {
    if (a % 2 == 0) return 0;
    // (a|2) = (-1)^((a^2-1)/8), only parity of v2 matters
    i64 am8 = ((a % 8) + 8) % 8;
    if (v2 % 2 == 1 && (am8 == 3 || am8 == 5)) sign = -sign;
  }
  a = ((a % n) + n) % n;
  // standard quadratic reciprocity loop on odd n
  while (a != 0) {
    int va = 0;
    while (a % 2 == 0) {
      a /= 2;
      ++va;
    }
    i64 nm8 = n % 8;
    if (va % 2 == 1 && (nm8 == 3 || nm8 == 5)) sign = -sign;
    if (a % 4 == 3 && n % 4 == 3) sign = -sign;
    std::swap(a, n);
    a %= n;
  }
  return n == 1 ? sign : 0;
}

std::optional<u64> sqrt_mod(u64 a, u64 p) {
  if (p < 3 || p % 2 == 0 || !is_prime_u64(p))
    throw DomainError("sqrt_mod: modulus must be an odd prime");
  a %= p;
  if (a == 0) return 0;
  if (pow_mod(a, (p - 1) / 2, p) != 1) return std::nullopt;

  u64 root;
  if (p % 4 == 3) {
    root = pow_mod(a, (p + 1) / 4, p);
  } else {
    // Tonelli-Shanks with the smallest nonresidue as generator.
    u64 q = p - 1;
    int s = 0;
    while ((q & 1) == 0) {
      q >>= 1;
      ++s;
    }
    u64 z = 2;
    while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
    u64 c = pow_mod(z, q, p);
    u64 t = pow_mod(a, q, p);
    u64 r = pow_mod(a, (q + 1) / 2, p);
    int m = s;
    while (t != 1) {
      u64 t2 = t;
      int i = 0;
      while (t2 != 1) {
        t2 = mul_mod(t2, t2, p);
        ++i;
      }
      u64 b = c;
      for (int j = 0; j < m - i - 1; ++j) b = mul_mod(b, b, p);
      r = mul_mod(r, b, p);
      c = mul_mod(b, b, p);
      t = mul_mod(t, c, p);
      m = i;
    }
    root = r;
  }
  return std::min(root, p - root);
}

}  // namespace ellprime
