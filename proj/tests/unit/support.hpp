#pragma once

#include <doctest.h>

#include <optional>

#include "dss/core.hpp"
#include "dss/error.hpp"

// Runs expr and returns the error code it threw, or nullopt if it returned.
template <class F>
std::optional<dss::Errc> error_of(F&& f) {
  try {
    f();
  } catch (const dss::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

#define CHECK_ERRC(expr, code) CHECK(error_of([&] { (void)(expr); }) == std::optional{code})

inline dss::DifferenceSystem z25() {
  return dss::DifferenceSystem::create(25, {{1, 2, 3, 4, 6, 15}, {5, 9, 10, 14, 17, 24}});
}

#include <random>
#include <vector>

// Hand-rolled generator for property tests: every residue of Z_v is dropped
// or dealt to one of q sets at random.
class FamilyGen {
 public:
  explicit FamilyGen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
    return lo + rng_() % (hi - lo + 1);
  }

  // Sets may come out empty; callers that need nonempty sets filter.
  std::vector<std::vector<std::int64_t>> sets(std::int64_t v, std::size_t q, bool cover_all) {
    std::vector<std::vector<std::int64_t>> out(q);
    for (std::int64_t x = 0; x < v; ++x) {
      const auto slot = uniform(0, cover_all ? q - 1 : q);
      if (slot < q) out[slot].push_back(x);
    }
    return out;
  }

  dss::DifferenceSystem family(std::int64_t v_max, bool cover_all = false) {
    const auto v = static_cast<std::int64_t>(uniform(2, static_cast<std::uint64_t>(v_max)));
    const auto q = static_cast<std::size_t>(uniform(1, 5));
    auto s = sets(v, q, cover_all);
    std::erase_if(s, [](const auto& x) { return x.empty(); });
    if (s.empty()) s.push_back({0});
    return dss::DifferenceSystem::create(v, s);
  }

 private:
  std::mt19937_64 rng_;
};
