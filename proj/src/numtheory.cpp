#include "dss/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dss/error.hpp"

namespace dss {

namespace {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;
__extension__ using i128 = __int128;

bool miller_rabin_round(u64 n, u64 d, int s, u64 a) {
  u64 x = pow_mod(a % n, d, n);
  if (x == 0 || x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Brent's variant of Pollard rho; n odd composite.
u64 find_divisor(u64 n) {
  for (u64 c = 1;; ++c) {
    auto step = [&](u64 x) { return (mul_mod(x, x, n) + c) % n; };
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    constexpr u64 batch = 128;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(batch, r - k); ++i) {
          y = step(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += batch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const u64 d = find_divisor(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

// Inverse of a modulo m, assuming gcd(a, m) = 1 and m >= 1.
u64 inverse_mod(u64 a, u64 m) {
  if (m == 1) return 0;
  i128 t = 0, new_t = 1;
  i128 r = m, new_r = a % m;
  while (new_r != 0) {
    const i128 q = r / new_r;
    std::tie(t, new_t) = std::pair{new_t, t - q * new_t};
    std::tie(r, new_r) = std::pair{new_r, r - q * new_r};
  }
  if (t < 0) t += m;
  return static_cast<u64>(t);
}

}  // namespace

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr u64 small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : small) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a proven witness set for n < 3.3e24.
  return std::all_of(std::begin(small), std::end(small),
                     [&](u64 a) { return miller_rabin_round(n, d, s, a); });
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<u64> out;
  if (n <= 1) return out;
  for (u64 p = 2; p < 64 && p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  factor_into(n, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2 || !is_prime(p)) {
    fail(Errc::not_prime, std::to_string(p) + " is not an odd prime");
  }
  const auto factors = prime_factors(p - 1);
  for (u64 g = 2; g < p; ++g) {
    const bool generates = std::none_of(factors.begin(), factors.end(), [&](u64 r) {
      return pow_mod(g, (p - 1) / r, p) == 1;
    });
    if (generates) return g;
  }
  fail(Errc::not_prime, "no primitive root found for " + std::to_string(p));
}

CyclotomicTable CyclotomicTable::create(std::uint64_t p, std::uint64_t f, const Budget& budget) {
  if (p == 2 || !is_prime(p)) fail(Errc::not_prime, std::to_string(p) + " is not an odd prime");
  if (f == 0 || (p - 1) % f != 0) {
    fail(Errc::order_does_not_divide,
         "order " + std::to_string(f) + " does not divide " + std::to_string(p - 1));
  }
  if (p > static_cast<u64>(budget.max_modulus)) {
    fail(Errc::budget_exceeded, "prime " + std::to_string(p) + " exceeds modulus budget");
  }

  CyclotomicTable t;
  t.p_ = p;
  t.f_ = f;
  t.g_ = primitive_root(p);
  t.class_of_.assign(p, kZero);
  t.classes_.assign(f, {});
  for (auto& c : t.classes_) c.reserve((p - 1) / f);

  u64 x = 1;
  for (u64 k = 0; k + 1 < p; ++k) {
    const auto cls = static_cast<std::uint32_t>(k % f);
    t.class_of_[x] = cls;
    t.classes_[cls].push_back(static_cast<std::int64_t>(x));
    x = mul_mod(x, t.g_, p);
  }
  for (auto& c : t.classes_) std::sort(c.begin(), c.end());
  return t;
}

Count CyclotomicTable::cyclotomic_number(std::uint64_t i, std::uint64_t j) const {
  const auto target = static_cast<std::uint32_t>(j % f_);
  Count n = 0;
  for (auto x : members(i)) {
    if (class_of(static_cast<u64>(x) + 1) == target) ++n;
  }
  return n;
}

CrtMap CrtMap::create(Modulus v, Modulus w) {
  if (v <= 0 || w <= 0) fail(Errc::invalid_parameter, "CRT moduli must be positive");
  if (std::gcd(v, w) != 1) {
    fail(Errc::not_coprime, std::to_string(v) + " and " + std::to_string(w) + " are not coprime");
  }
  Modulus vw = 0;
  if (__builtin_mul_overflow(v, w, &vw)) {
    fail(Errc::invalid_parameter, "product modulus exceeds 2^63 - 1");
  }
  CrtMap m;
  m.v_ = v;
  m.w_ = w;
  m.vw_ = vw;
  const u64 uv = static_cast<u64>(v), uw = static_cast<u64>(w), uvw = static_cast<u64>(vw);
  m.e_v_ = mul_mod(uw, inverse_mod(uw % uv, uv), uvw);
  m.e_w_ = mul_mod(uv, inverse_mod(uv % uw, uw), uvw);
  return m;
}

Residue CrtMap::combine(Residue a, Residue b) const {
  const u64 n = static_cast<u64>(vw_);
  const u64 x = (mul_mod(static_cast<u64>(a), e_v_, n) + mul_mod(static_cast<u64>(b), e_w_, n)) % n;
  return static_cast<Residue>(x);
}

std::pair<Residue, Residue> CrtMap::split(Residue x) const { return {x % v_, x % w_}; }

}  // namespace dss
