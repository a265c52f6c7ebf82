#include "dss/core.hpp"

#include <algorithm>
#include <numeric>

#include "dss/error.hpp"

namespace dss {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::ok: return "Ok";
    case Errc::element_out_of_range: return "ElementOutOfRange";
    case Errc::sets_not_disjoint: return "SetsNotDisjoint";
    case Errc::empty_family: return "EmptyFamily";
    case Errc::not_rate_one: return "NotRateOne";
    case Errc::not_prime: return "NotPrime";
    case Errc::order_does_not_divide: return "OrderDoesNotDivide";
    case Errc::not_coprime: return "NotCoprime";
    case Errc::wrong_residue_class: return "WrongResidueClass";
    case Errc::invalid_parameter: return "InvalidParameter";
    case Errc::not_admissible: return "NotAdmissible";
    case Errc::no_claim: return "NoClaim";
    case Errc::ingredient_not_perfect: return "IngredientNotPerfect";
    case Errc::ingredient_not_regular: return "IngredientNotRegular";
    case Errc::ingredient_not_df: return "IngredientNotDF";
    case Errc::not_single_set: return "NotSingleSet";
    case Errc::not_difference_set: return "NotDifferenceSet";
    case Errc::alphabet_too_small: return "AlphabetTooSmall";
    case Errc::payload_length_mismatch: return "PayloadLengthMismatch";
    case Errc::symbol_out_of_range: return "SymbolOutOfRange";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::offset_out_of_range: return "OffsetOutOfRange";
    case Errc::parse_error: return "ParseError";
    case Errc::index_formula_mismatch: return "IndexFormulaMismatch";
    case Errc::claim_mismatch: return "ClaimMismatch";
    case Errc::verification_failed: return "VerificationFailed";
    case Errc::budget_exceeded: return "BudgetExceeded";
  }
  return "Unknown";
}

void check_budget(Count redundancy, Modulus v, const Budget& budget) {
  if (v > budget.max_modulus) {
    fail(Errc::budget_exceeded, "modulus " + std::to_string(v) + " exceeds budget " +
                                    std::to_string(budget.max_modulus));
  }
  __extension__ const unsigned __int128 pairs = static_cast<unsigned __int128>(redundancy) * redundancy;
  if (pairs > budget.max_pairs) {
    fail(Errc::budget_exceeded, "redundancy " + std::to_string(redundancy) +
                                    " squared exceeds pair budget " +
                                    std::to_string(budget.max_pairs));
  }
}

Rational Rational::of(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0) fail(Errc::invalid_parameter, "rational must be nonnegative with positive denominator");
  const std::int64_t g = std::gcd(num, den);
  return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

std::string Rational::str() const { return std::to_string(num) + "/" + std::to_string(den); }

Rational operator*(const Rational& a, const Rational& b) {
  // cross-reduce first to keep the products small
  const std::int64_t g1 = std::gcd(a.num, b.den);
  const std::int64_t g2 = std::gcd(b.num, a.den);
  const std::int64_t n1 = g1 ? a.num / g1 : 0, d2 = g1 ? b.den / g1 : b.den;
  const std::int64_t n2 = g2 ? b.num / g2 : 0, d1 = g2 ? a.den / g2 : a.den;
  std::int64_t num = 0, den = 0;
  if (__builtin_mul_overflow(n1, n2, &num) || __builtin_mul_overflow(d1, d2, &den)) {
    fail(Errc::invalid_parameter, "rational product overflows");
  }
  return Rational::of(num, den);
}

DifferenceSystem DifferenceSystem::create(Modulus v,
                                          const std::vector<std::vector<std::int64_t>>& sets,
                                          std::string provenance,
                                          std::optional<Count> claimed_index) {
  if (v <= 0) fail(Errc::invalid_parameter, "modulus must be positive");
  if (sets.empty()) fail(Errc::empty_family, "a family needs at least one set");

  DifferenceSystem d;
  d.v_ = v;
  d.sets_.reserve(sets.size());
  Count total = 0;
  for (const auto& s : sets) {
    for (auto x : s) {
      if (x < 0 || x >= v) {
        fail(Errc::element_out_of_range,
             "element " + std::to_string(x) + " not in [0, " + std::to_string(v) + ")");
      }
    }
    std::vector<Residue> sorted(s.begin(), s.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      fail(Errc::sets_not_disjoint, "duplicate residue inside a set");
    }
    total += sorted.size();
    d.sets_.push_back(std::move(sorted));
  }

  std::vector<Residue> all;
  all.reserve(total);
  for (const auto& s : d.sets_) all.insert(all.end(), s.begin(), s.end());
  std::sort(all.begin(), all.end());
  if (auto it = std::adjacent_find(all.begin(), all.end()); it != all.end()) {
    fail(Errc::sets_not_disjoint, "residue " + std::to_string(*it) + " appears in two sets");
  }

  d.redundancy_ = total;
  d.provenance_ = std::move(provenance);
  d.claimed_index_ = claimed_index;
  return d;
}

DifferenceSystem DifferenceSystem::with_claim(std::optional<Count> index) const {
  DifferenceSystem d = *this;
  d.claimed_index_ = index;
  return d;
}

DifferenceSystem DifferenceSystem::with_provenance(std::string provenance) const {
  DifferenceSystem d = *this;
  d.provenance_ = std::move(provenance);
  return d;
}

FrequencyHoppingSequence FrequencyHoppingSequence::create(std::size_t alphabet,
                                                          std::vector<Symbol> symbols) {
  if (symbols.empty()) fail(Errc::invalid_parameter, "sequence period must be positive");
  if (alphabet == 0) fail(Errc::invalid_parameter, "alphabet must be nonempty");
  for (auto s : symbols) {
    if (s >= alphabet) {
      fail(Errc::symbol_out_of_range,
           "symbol " + std::to_string(s) + " outside alphabet of size " + std::to_string(alphabet));
    }
  }
  FrequencyHoppingSequence x;
  x.alphabet_ = alphabet;
  x.symbols_ = std::move(symbols);
  return x;
}

DifferenceSystem to_difference_system(const FrequencyHoppingSequence& x, std::string provenance) {
  std::vector<std::vector<std::int64_t>> supports(x.alphabet());
  const auto& sym = x.symbols();
  for (std::size_t pos = 0; pos < sym.size(); ++pos) {
    supports[sym[pos]].push_back(static_cast<std::int64_t>(pos));
  }
  std::erase_if(supports, [](const auto& s) { return s.empty(); });
  return DifferenceSystem::create(static_cast<Modulus>(x.period()), supports, std::move(provenance));
}

FrequencyHoppingSequence to_hopping_sequence(const DifferenceSystem& d) {
  if (d.redundancy() != static_cast<Count>(d.modulus())) {
    fail(Errc::not_rate_one, "family covers " + std::to_string(d.redundancy()) + " of " +
                                 std::to_string(d.modulus()) + " residues");
  }
  std::vector<Symbol> symbols(static_cast<std::size_t>(d.modulus()));
  for (std::size_t i = 0; i < d.set_count(); ++i) {
    for (auto r : d.set(i)) symbols[static_cast<std::size_t>(r)] = static_cast<Symbol>(i);
  }
  return FrequencyHoppingSequence::create(d.set_count(), std::move(symbols));
}

}  // namespace dss
