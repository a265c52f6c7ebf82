#include "dss/products.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dss/error.hpp"
#include "dss/numtheory.hpp"

namespace dss {

namespace {

using u64 = std::uint64_t;

std::string str(u64 x) { return std::to_string(x); }

u64 checked_mul(u64 a, u64 b) {
  u64 r = 0;
  if (__builtin_mul_overflow(a, b, &r)) fail(Errc::invalid_parameter, "parameter product overflows");
  return r;
}

Modulus checked_modulus(Modulus a, Modulus b) {
  Modulus r = 0;
  if (__builtin_mul_overflow(a, b, &r)) fail(Errc::invalid_parameter, "product modulus exceeds 2^63 - 1");
  return r;
}

u64 ipow(u64 base, u64 exp) {
  u64 r = 1;
  for (u64 i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

struct PaleyParams {
  u64 m, q, rho, lambda;
};

PaleyParams paley_params(u64 p, u64 q) {
  if (p == 2 || !is_prime(p)) fail(Errc::not_prime, str(p) + " is not an odd prime");
  if (p % 4 != 3) fail(Errc::wrong_residue_class, str(p) + " is not 3 mod 4");
  if (q == 0 || (p - 1) % (2 * q) != 0) {
    fail(Errc::order_does_not_divide, "2q = " + str(2 * q) + " does not divide " + str(p - 1));
  }
  const u64 m = (p - 1) / (2 * q);
  return {m, q, (p - 2 * m - 1) / 4, (m - 1) / 2};
}

bool admissible(u64 p, u64 s) {
  switch (p) {
    case 2: return s >= 2 && s <= 5;
    case 3: return s >= 2 && s <= 3;
    case 5:
    case 8:
    case 9: return s == 2;
    default: return false;
  }
}

}  // namespace

Count direct_product_index(const VerificationReport& a, const VerificationReport& b) {
  if (!a.is_perfect || !b.is_perfect) fail(Errc::ingredient_not_perfect, "ingredient is not perfect");
  if (!a.is_regular || !b.is_regular) fail(Errc::ingredient_not_regular, "ingredient is not regular");
  if (!a.df_lambda || !b.df_lambda) fail(Errc::ingredient_not_df, "ingredient is not a difference family");
  const u64 m = a.set_sizes.front(), m2 = b.set_sizes.front();
  const u64 mixed = a.index * b.index + a.index * *b.df_lambda + b.index * *a.df_lambda;
  return std::min({mixed, a.index * m2 * b.q, b.index * m * a.q});
}

DifferenceSystem direct_product(const DifferenceSystem& a, const DifferenceSystem& b,
                                const Budget& budget) {
  const auto crt = CrtMap::create(a.modulus(), b.modulus());
  if (a.modulus() < 2 || b.modulus() < 2) {
    fail(Errc::invalid_parameter, "ingredient moduli must be at least 2");
  }
  const auto ra = verify(a, budget);
  const auto rb = verify(b, budget);
  const Count claimed = direct_product_index(ra, rb);
  check_budget(checked_mul(a.redundancy(), b.redundancy()), crt.product(), budget);

  std::vector<std::vector<std::int64_t>> sets;
  sets.reserve(a.set_count() * b.set_count());
  for (const auto& qa : a.sets()) {
    for (const auto& qb : b.sets()) {
      std::vector<std::int64_t> s;
      s.reserve(qa.size() * qb.size());
      for (auto x : qa) {
        for (auto y : qb) s.push_back(crt.combine(x, y));
      }
      sets.push_back(std::move(s));
    }
  }
  auto out = DifferenceSystem::create(crt.product(), sets,
                                      "direct-product(" + a.provenance() + "; " + b.provenance() + ")");
  const auto report = verify(out, budget);
  if (report.index != claimed) {
    fail(Errc::claim_mismatch, "direct product index " + str(report.index) +
                                   " differs from predicted " + str(claimed));
  }
  return out.with_claim(report.index);
}

Count fhs_embedding_index(Count sequence_index, Modulus v, const VerificationReport& b) {
  if (!b.is_perfect) fail(Errc::ingredient_not_perfect, "second ingredient is not perfect");
  if (!b.df_lambda) fail(Errc::ingredient_not_df, "second ingredient is not a difference family");
  return std::min(checked_mul(sequence_index, b.redundancy),
                  checked_mul(static_cast<u64>(v), *b.df_lambda + b.index));
}

DifferenceSystem fhs_embedding_product(const FrequencyHoppingSequence& x,
                                       const DifferenceSystem& b, const Budget& budget) {
  if (b.modulus() < 2) fail(Errc::invalid_parameter, "second ingredient needs modulus >= 2");
  const auto rb = verify(b, budget);
  const auto v = static_cast<Modulus>(x.period());
  const Modulus w = b.modulus();
  const auto a = to_difference_system(x);
  const Count rho = verify(a, budget).index;
  const Count bound = fhs_embedding_index(rho, v, rb);
  const Modulus vw = checked_modulus(v, w);
  check_budget(checked_mul(static_cast<u64>(v), b.redundancy()), vw, budget);

  std::vector<std::int64_t> support;
  for (const auto& s : b.sets()) support.insert(support.end(), s.begin(), s.end());
  std::sort(support.begin(), support.end());

  std::vector<std::vector<std::int64_t>> sets;
  sets.reserve(a.set_count() * support.size());
  for (const auto& qi : a.sets()) {
    for (auto shift : support) {
      std::vector<std::int64_t> s;
      s.reserve(qi.size());
      for (auto pos : qi) s.push_back(w * pos + shift);
      sets.push_back(std::move(s));
    }
  }
  auto out = DifferenceSystem::create(
      vw, sets,
      "fhs-embed(period " + str(x.period()) + "; " + b.provenance() + "); index >= " + str(bound));
  const auto report = verify(out, budget);
  if (report.index < bound) {
    fail(Errc::claim_mismatch, "embedding index " + str(report.index) + " below guaranteed " + str(bound));
  }
  return out.with_claim(report.index);
}

DifferenceSystem fhs_ds_product(const FrequencyHoppingSequence& x, const DifferenceSystem& d,
                                const Budget& budget) {
  if (d.set_count() != 1) fail(Errc::not_single_set, "expected a single set, got " + str(d.set_count()));
  if (!verify(d, budget).df_lambda) {
    fail(Errc::not_difference_set, "inner differences are not uniform");
  }
  return fhs_embedding_product(x, d, budget);
}

PaleyProductPrediction predict_paley_product(std::uint64_t v, std::uint64_t q, std::uint64_t v2,
                                             std::uint64_t q2) {
  const auto a = paley_params(v, q);
  const auto b = paley_params(v2, q2);
  if (v == v2) fail(Errc::invalid_parameter, "the two primes must be distinct");

  PaleyProductPrediction out;
  const u64 mixed = a.rho * b.rho + a.rho * b.lambda + b.rho * a.lambda;
  out.params = {checked_mul(v, v2), a.m * b.m, a.q * b.q,
                std::min({mixed, a.rho * b.m * b.q, b.rho * a.m * a.q})};
  out.closed_form_index = (a.m * (b.m - 1) * (a.q - 1) + (a.m - 1) * b.m * (b.q - 1) +
                           a.m * b.m * (a.q - 1) * (b.q - 1)) / 4;
  out.closed_form_is_min = out.closed_form_index == out.params.index;
  return out;
}

HyperplaneProductPrediction predict_hyperplane_product(std::uint64_t p, std::uint64_t s,
                                                       std::uint64_t p2, std::uint64_t s2) {
  if (!admissible(p, s)) fail(Errc::not_admissible, "(p, s) = (" + str(p) + ", " + str(s) + ") not admissible");
  if (!admissible(p2, s2)) fail(Errc::not_admissible, "(p, s) = (" + str(p2) + ", " + str(s2) + ") not admissible");

  struct Ingredient {
    u64 length, m, q, rho;
  };
  auto ingredient = [](u64 p, u64 s) {
    return Ingredient{(ipow(p, 2 * s + 1) - 1) / (p - 1), p + 1,
                      (ipow(p, 2 * s) - 1) / (p * p - 1), (ipow(p, 2 * s - 1) - p) / (p - 1)};
  };
  const auto a = ingredient(p, s);
  const auto b = ingredient(p2, s2);
  if (std::gcd(a.length, b.length) != 1) {
    fail(Errc::not_coprime, "lengths " + str(a.length) + " and " + str(b.length) + " are not coprime");
  }

  HyperplaneProductPrediction out;
  out.params = {checked_mul(a.length, b.length), a.m * b.m, a.q * b.q,
                ((ipow(p, 2 * s - 1) - 1) / (p - 1)) * ((ipow(p2, 2 * s2 - 1) - 1) / (p2 - 1)) - 1};
  // lambda = 1 for both hyperplane families
  out.min_branch_index =
      std::min({a.rho * b.rho + a.rho + b.rho, a.rho * b.m * b.q, b.rho * a.m * a.q});
  return out;
}

}  // namespace dss
