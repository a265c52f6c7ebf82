#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "dss/core.hpp"
#include "dss/numtheory.hpp"

namespace dss {

// Index predicted from cyclotomic numbers of order f*q for the family
// { C_{f i} : 0 <= i < q }:
//   min over i in [0, f) of  sum_{j<q} sum_{1<=a<q} (i + j f, a f)_{fq}.
// table.order() must equal f * q.
Count cyclotomic_index_formula(const CyclotomicTable& table, std::uint64_t f, std::uint64_t q);

// The q classes C_0, C_f, ..., C_{(q-1) f} of order f q over F_p. The
// formula index is cross-checked against the brute-force spectrum; any
// disagreement throws IndexFormulaMismatch. The returned family carries the
// verified index as its claim.
DifferenceSystem cyclotomic_dss(std::uint64_t p, std::uint64_t f, std::uint64_t q,
                                const Budget& budget = {});

// Perfect regular (16n^2+1, 4n^2, 2, 2n^2): classes C_0, C_2 of order 4.
DifferenceSystem quartic_pair(std::uint64_t n, const Budget& budget = {});
// Perfect regular (12n^2+1, 2n^2, 3, 2n^2): classes C_0, C_2, C_4 of order 6.
DifferenceSystem sextic_triple(std::uint64_t n, const Budget& budget = {});
// Perfect regular (108n^2+1, 18n^2, 2, 6n^2): classes C_0, C_3 of order 6.
DifferenceSystem sextic_pair(std::uint64_t n, const Budget& budget = {});

// Paley type: p = 3 mod 4, p = 2 m q + 1. Perfect regular with index
// (p - 2m - 1)/4, forming a difference family with lambda = (m - 1)/2.
DifferenceSystem paley_dss(std::uint64_t p, std::uint64_t q, const Budget& budget = {});

// Quadratic residues of p = 3 mod 4 as a single-set family, checked to be a
// difference set with parameters (p, (p-1)/2, (p-3)/4).
DifferenceSystem qr_difference_set(std::uint64_t p, const Budget& budget = {});

FrequencyHoppingSequence identity_fhs(std::size_t v);

// Symbol i on C_i of order q for i < q, symbol q at position 0.
FrequencyHoppingSequence cyclotomic_fhs(std::uint64_t p, std::uint64_t q, const Budget& budget = {});

enum class PrimeForm { quartic, sextic_triple, sextic_pair };

// a n^2 + 1 for a = 16, 12, 108; throws InvalidParameter on 64-bit overflow.
std::uint64_t evaluate(PrimeForm form, std::uint64_t n);
std::string_view form_name(PrimeForm form);
std::optional<PrimeForm> parse_prime_form(std::string_view name);

// All n in [1, n_max] with the form prime, ascending.
std::vector<std::uint64_t> scan_prime_forms(PrimeForm form, std::uint64_t n_max);

}  // namespace dss
