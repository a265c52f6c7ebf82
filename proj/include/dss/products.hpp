#pragma once

#include <cstdint>

#include "dss/core.hpp"
#include "dss/verifier.hpp"

namespace dss {

// Index of the direct product of two perfect regular difference families:
//   min(rho rho' + rho lambda' + rho' lambda,  rho m' q',  rho' m q).
// Both reports must describe perfect regular families with df_lambda set.
Count direct_product_index(const VerificationReport& a, const VerificationReport& b);

// Family { Q_i x Q'_j } carried into Z_{v v'} by the CRT, ordered by (i, j)
// lexicographically. Ingredients are re-verified on entry; coprimality is
// checked before anything else. The result's index must equal
// direct_product_index exactly (ClaimMismatch otherwise).
DifferenceSystem direct_product(const DifferenceSystem& a, const DifferenceSystem& b,
                                const Budget& budget = {});

// Guaranteed lower bound min(rho s', v (lambda' + rho')) for embedding a
// sequence of index rho into Z_{v v'} along b (s' = redundancy of b).
Count fhs_embedding_index(Count sequence_index, Modulus v, const VerificationReport& b);

// Sets S_{i,x} = { v' a + x : a in Q_i } for each nonempty symbol support Q_i
// of x and each x in the union of b's sets, ordered by i then x. b must be
// perfect and form a difference family. The measured index must reach
// fhs_embedding_index (ClaimMismatch otherwise); the result carries the
// measured index as its claim.
DifferenceSystem fhs_embedding_product(const FrequencyHoppingSequence& x,
                                       const DifferenceSystem& b, const Budget& budget = {});

// Embedding product with a cyclic difference set read as a one-set family of
// index 0.
DifferenceSystem fhs_ds_product(const FrequencyHoppingSequence& x, const DifferenceSystem& d,
                                const Budget& budget = {});

struct ParameterTuple {
  Count v = 0;
  Count m = 0;
  Count q = 0;
  Count index = 0;

  bool operator==(const ParameterTuple&) const = default;
};

struct PaleyProductPrediction {
  ParameterTuple params;      // index is the explicit three-way minimum
  Count closed_form_index = 0;
  bool closed_form_is_min = false;
};

// Parameters of the direct product of two Paley-type families over distinct
// primes v, v2 = 3 mod 4 with v = 2 m q + 1 and v2 = 2 m2 q2 + 1.
PaleyProductPrediction predict_paley_product(std::uint64_t v, std::uint64_t q, std::uint64_t v2,
                                             std::uint64_t q2);

struct HyperplaneProductPrediction {
  ParameterTuple params;      // from the closed forms
  Count min_branch_index = 0; // explicit three-way minimum from the ingredient parameters
};

// (p, s) must be one of (2, 2..5), (3, 2..3), (5|8|9, 2); throws
// NotAdmissible otherwise and NotCoprime when the two lengths share a factor.
HyperplaneProductPrediction predict_hyperplane_product(std::uint64_t p, std::uint64_t s,
                                                       std::uint64_t p2, std::uint64_t s2);

}  // namespace dss
