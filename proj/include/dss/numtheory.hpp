#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dss/core.hpp"

namespace dss {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Deterministic for every 64-bit input.
bool is_prime(std::uint64_t n);

// Distinct prime divisors of n in ascending order; empty for n <= 1.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// Smallest primitive root of an odd prime p. Throws NotPrime otherwise,
// including for p = 2.
std::uint64_t primitive_root(std::uint64_t p);

// The order-f cyclotomic classes C_0..C_{f-1} of F_p generated from the
// smallest primitive root: C_i = { g^(i + t f) : 0 <= t < (p-1)/f }.
class CyclotomicTable {
 public:
  static constexpr std::uint32_t kZero = 0xffffffffu;

  static CyclotomicTable create(std::uint64_t p, std::uint64_t f, const Budget& budget = {});

  std::uint64_t prime() const noexcept { return p_; }
  std::uint64_t order() const noexcept { return f_; }
  std::uint64_t generator() const noexcept { return g_; }
  std::uint64_t class_size() const noexcept { return (p_ - 1) / f_; }

  // Class index of x mod p, or kZero when x = 0 mod p.
  std::uint32_t class_of(std::uint64_t x) const { return class_of_[x % p_]; }

  // Members of C_i, ascending. i is taken mod f.
  const std::vector<std::int64_t>& members(std::uint64_t i) const { return classes_[i % f_]; }

  // (i, j)_f = |(C_i + 1) ∩ C_j|, indices taken mod f.
  Count cyclotomic_number(std::uint64_t i, std::uint64_t j) const;

 private:
  CyclotomicTable() = default;

  std::uint64_t p_ = 0;
  std::uint64_t f_ = 0;
  std::uint64_t g_ = 0;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::vector<std::int64_t>> classes_;
};

// The ring isomorphism Z_v x Z_w -> Z_{vw} for coprime v, w.
class CrtMap {
 public:
  static CrtMap create(Modulus v, Modulus w);

  Modulus first() const noexcept { return v_; }
  Modulus second() const noexcept { return w_; }
  Modulus product() const noexcept { return vw_; }

  Residue combine(Residue a, Residue b) const;
  std::pair<Residue, Residue> split(Residue x) const;

 private:
  CrtMap() = default;

  Modulus v_ = 1, w_ = 1, vw_ = 1;
  // idempotents: e_v = 1 mod v, 0 mod w; e_w = 0 mod v, 1 mod w
  std::uint64_t e_v_ = 0, e_w_ = 0;
};

}  // namespace dss
