#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dss {

using Residue = std::int64_t;
using Modulus = std::int64_t;
using Count = std::uint64_t;
using Symbol = std::uint32_t;

// Limits applied before any exhaustive pass over a family.
struct Budget {
  // Upper bound on redundancy^2, the number of ordered pairs walked by the
  // spectrum loops.
  Count max_pairs = 1'000'000'000;
  // Upper bound on v for anything that allocates a dense per-residue array.
  Modulus max_modulus = Modulus{1} << 24;
};

void check_budget(Count redundancy, Modulus v, const Budget& budget);

// Exact nonnegative fraction kept in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t num, std::int64_t den);
  std::string str() const;
  bool operator==(const Rational&) const = default;
};

Rational operator*(const Rational& a, const Rational& b);

// A family of pairwise disjoint subsets Q_0..Q_{q-1} of Z_v, stored in
// canonical form: each set strictly increasing, set order as supplied.
class DifferenceSystem {
 public:
  static DifferenceSystem create(Modulus v,
                                 const std::vector<std::vector<std::int64_t>>& sets,
                                 std::string provenance = {},
                                 std::optional<Count> claimed_index = {});

  Modulus modulus() const noexcept { return v_; }
  std::size_t set_count() const noexcept { return sets_.size(); }
  const std::vector<std::vector<Residue>>& sets() const noexcept { return sets_; }
  const std::vector<Residue>& set(std::size_t i) const { return sets_.at(i); }
  Count redundancy() const noexcept { return redundancy_; }
  Rational rate() const { return Rational::of(static_cast<std::int64_t>(redundancy_), v_); }
  const std::string& provenance() const noexcept { return provenance_; }
  std::optional<Count> claimed_index() const noexcept { return claimed_index_; }

  DifferenceSystem with_claim(std::optional<Count> index) const;
  DifferenceSystem with_provenance(std::string provenance) const;

  bool operator==(const DifferenceSystem&) const = default;

 private:
  DifferenceSystem() = default;

  Modulus v_ = 0;
  std::vector<std::vector<Residue>> sets_;
  Count redundancy_ = 0;
  std::string provenance_;
  std::optional<Count> claimed_index_;
};

// Period-v sequence over an alphabet of q symbols. The supports of the
// symbols partition Z_v, so it is the same thing as a rate-one family.
class FrequencyHoppingSequence {
 public:
  static FrequencyHoppingSequence create(std::size_t alphabet, std::vector<Symbol> symbols);

  std::size_t period() const noexcept { return symbols_.size(); }
  std::size_t alphabet() const noexcept { return alphabet_; }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }

  bool operator==(const FrequencyHoppingSequence&) const = default;

 private:
  FrequencyHoppingSequence() = default;

  std::size_t alphabet_ = 0;
  std::vector<Symbol> symbols_;
};

// Supports of symbols 0..q-1 in symbol order, empty supports dropped.
DifferenceSystem to_difference_system(const FrequencyHoppingSequence& x,
                                      std::string provenance = {});

// Symbol i marks the positions of the i-th set. Throws NotRateOne unless the
// sets cover Z_v.
FrequencyHoppingSequence to_hopping_sequence(const DifferenceSystem& d);

}  // namespace dss
