#include "dss/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "dss/error.hpp"

namespace dss {

namespace {

__extension__ using u128 = unsigned __int128;

struct Spectra {
  DifferenceSpectrum outer;
  DifferenceSpectrum inner;
};

// One O(s^2) walk over ordered pairs of U = union of the sets, with a label
// array deciding outer vs inner.
Spectra compute_spectra(const DifferenceSystem& d, const Budget& budget) {
  check_budget(d.redundancy(), d.modulus(), budget);
  const Modulus v = d.modulus();
  const auto n = static_cast<std::size_t>(v);

  std::vector<Residue> elems;
  std::vector<std::uint32_t> label;
  elems.reserve(d.redundancy());
  label.reserve(d.redundancy());
  for (std::size_t i = 0; i < d.set_count(); ++i) {
    for (auto r : d.set(i)) {
      elems.push_back(r);
      label.push_back(static_cast<std::uint32_t>(i));
    }
  }

  Spectra s{{v, std::vector<Count>(n, 0), SpectrumKind::outer},
            {v, std::vector<Count>(n, 0), SpectrumKind::inner}};
  auto& outer = s.outer.counts;
  auto& inner = s.inner.counts;
  for (std::size_t x = 0; x < elems.size(); ++x) {
    const Residue a = elems[x];
    const std::uint32_t la = label[x];
    for (std::size_t y = 0; y < elems.size(); ++y) {
      if (x == y) continue;
      Residue diff = a - elems[y];
      if (diff < 0) diff += v;
      if (label[y] == la) {
        ++inner[static_cast<std::size_t>(diff)];
      } else {
        ++outer[static_cast<std::size_t>(diff)];
      }
    }
  }
  return s;
}

Count isqrt_ceil(u128 n) {
  if (n == 0) return 0;
  auto r = static_cast<u128>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (r * r < n) ++r;
  return static_cast<Count>(r);
}

Count to_count(u128 x) {
  if (x > std::numeric_limits<Count>::max()) {
    fail(Errc::invalid_parameter, "bound arguments too large");
  }
  return static_cast<Count>(x);
}

}  // namespace

Count DifferenceSpectrum::total() const {
  return std::accumulate(counts.begin(), counts.end(), Count{0});
}

Count DifferenceSpectrum::min_nonzero() const {
  if (counts.size() < 2) return 0;
  return *std::min_element(counts.begin() + 1, counts.end());
}

bool DifferenceSpectrum::constant_nonzero() const {
  if (counts.size() < 2) return true;
  return std::all_of(counts.begin() + 1, counts.end(),
                     [&](Count c) { return c == counts[1]; });
}

DifferenceSpectrum outer_spectrum(const DifferenceSystem& d, const Budget& budget) {
  return compute_spectra(d, budget).outer;
}

DifferenceSpectrum inner_spectrum(const DifferenceSystem& d, const Budget& budget) {
  return compute_spectra(d, budget).inner;
}

double LevenshteinBound::value() const {
  return std::sqrt(static_cast<double>(numerator) / static_cast<double>(denominator));
}

Count LevenshteinBound::ceiling() const {
  // r^2 >= ceil(num/den) is equivalent to r^2 * den >= num for integer r
  return isqrt_ceil((static_cast<u128>(numerator) + denominator - 1) / denominator);
}

std::optional<LevenshteinBound> levenshtein_bound(Modulus v, Count q, Count rho) {
  if (v < 1) fail(Errc::invalid_parameter, "modulus must be positive");
  if (q < 2) return std::nullopt;
  const u128 num = static_cast<u128>(q) * rho * static_cast<u128>(v - 1);
  return LevenshteinBound{to_count(num), q - 1};
}

std::optional<Count> wang_bound(Modulus v, Count q, Count rho) {
  if (v < 1) fail(Errc::invalid_parameter, "modulus must be positive");
  if (q < 2) return std::nullopt;
  const u128 base = static_cast<u128>(rho) * static_cast<u128>(v - 1);
  if (base >> 120) fail(Errc::invalid_parameter, "bound arguments too large");
  const u128 n = base + (base + (q - 2)) / (q - 1);
  // sqrt(S(n)) with S(n) the least square >= n is ceil(sqrt(n))
  return isqrt_ceil(n);
}

VerificationReport verify(const DifferenceSystem& d, const Budget& budget) {
  const Spectra s = compute_spectra(d, budget);

  VerificationReport r;
  r.v = d.modulus();
  r.q = d.set_count();
  r.redundancy = d.redundancy();
  r.rate = d.rate();
  r.index = s.outer.min_nonzero();
  r.is_perfect = s.outer.constant_nonzero();

  r.set_sizes.reserve(d.set_count());
  for (const auto& set : d.sets()) r.set_sizes.push_back(set.size());
  std::sort(r.set_sizes.begin(), r.set_sizes.end());
  r.is_regular = r.set_sizes.front() == r.set_sizes.back();

  if (s.inner.constant_nonzero()) {
    r.df_lambda = s.inner.counts.size() > 1 ? s.inner.counts[1] : 0;
  }

  r.levenshtein_bound = levenshtein_bound(r.v, r.q, r.index);
  r.wang_bound = wang_bound(r.v, r.q, r.index);
  if (r.levenshtein_bound) {
    const u128 lhs = static_cast<u128>(r.redundancy) * r.redundancy * r.levenshtein_bound->denominator;
    r.meets_levenshtein_equality = lhs == r.levenshtein_bound->numerator;
  }
  return r;
}

bool check_claim(const DifferenceSystem& d, const Budget& budget) {
  if (!d.claimed_index()) fail(Errc::no_claim, "family carries no claimed index");
  return verify(d, budget).index == *d.claimed_index();
}

}  // namespace dss
