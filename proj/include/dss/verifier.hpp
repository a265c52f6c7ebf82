#pragma once

#include <optional>
#include <vector>

#include "dss/core.hpp"

namespace dss {

enum class SpectrumKind { outer, inner };

// counts[d] is the number of ordered pairs (a, b) with a - b = d (mod v),
// a and b drawn from different sets (outer) or the same set with a != b
// (inner).
struct DifferenceSpectrum {
  Modulus v = 0;
  std::vector<Count> counts;
  SpectrumKind kind = SpectrumKind::outer;

  Count total() const;
  // Minimum over d != 0; 0 when v = 1.
  Count min_nonzero() const;
  // True when counts[d] takes one value over all d != 0.
  bool constant_nonzero() const;
};

DifferenceSpectrum outer_spectrum(const DifferenceSystem& d, const Budget& budget = {});
DifferenceSpectrum inner_spectrum(const DifferenceSystem& d, const Budget& budget = {});

// sqrt(numerator / denominator) with numerator = q rho (v-1) and
// denominator = q - 1. Kept exact so optimality is decided in integers.
struct LevenshteinBound {
  Count numerator = 0;
  Count denominator = 1;

  double value() const;
  // Smallest integer r with r^2 * denominator >= numerator.
  Count ceiling() const;
};

// Both bounds are undefined for q < 2.
std::optional<LevenshteinBound> levenshtein_bound(Modulus v, Count q, Count rho);
std::optional<Count> wang_bound(Modulus v, Count q, Count rho);

struct VerificationReport {
  Modulus v = 0;
  Count q = 0;
  Count redundancy = 0;
  Rational rate;
  Count index = 0;
  bool is_regular = false;
  bool is_perfect = false;
  std::optional<Count> df_lambda;
  std::vector<Count> set_sizes;  // ascending
  std::optional<LevenshteinBound> levenshtein_bound;
  std::optional<Count> wang_bound;
  bool meets_levenshtein_equality = false;
};

VerificationReport verify(const DifferenceSystem& d, const Budget& budget = {});

// Throws NoClaim when the family carries no claimed index.
bool check_claim(const DifferenceSystem& d, const Budget& budget = {});

}  // namespace dss
