#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dss {

// Numeric values are mirrored by dss_status in dss.h.
enum class Errc : int {
  ok = 0,
  element_out_of_range = 1,
  sets_not_disjoint = 2,
  empty_family = 3,
  not_rate_one = 4,
  not_prime = 5,
  order_does_not_divide = 6,
  not_coprime = 7,
  wrong_residue_class = 8,
  invalid_parameter = 9,
  not_admissible = 10,
  no_claim = 11,
  ingredient_not_perfect = 12,
  ingredient_not_regular = 13,
  ingredient_not_df = 14,
  not_single_set = 15,
  not_difference_set = 16,
  alphabet_too_small = 17,
  payload_length_mismatch = 18,
  symbol_out_of_range = 19,
  length_mismatch = 20,
  offset_out_of_range = 21,
  parse_error = 22,
  index_formula_mismatch = 23,
  claim_mismatch = 24,
  verification_failed = 25,
  budget_exceeded = 26,
};

/// CamelCase name used in machine-readable error output, e.g. "NotPrime".
std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace dss
