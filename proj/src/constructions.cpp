#include "dss/constructions.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "dss/error.hpp"
#include "dss/verifier.hpp"

namespace dss {

namespace {

using u64 = std::uint64_t;

std::string str(u64 x) { return std::to_string(x); }

void require_odd_prime(u64 p) {
  if (p == 2 || !is_prime(p)) fail(Errc::not_prime, str(p) + " is not an odd prime");
}

struct Built {
  DifferenceSystem dss;
  VerificationReport report;
};

Built build_cyclotomic(u64 p, u64 f, u64 q, std::string provenance, const Budget& budget) {
  require_odd_prime(p);
  if (f == 0 || q == 0) fail(Errc::invalid_parameter, "f and q must be positive");
  u64 order = 0;
  if (__builtin_mul_overflow(f, q, &order) || (p - 1) % order != 0) {
    fail(Errc::order_does_not_divide,
         "f*q = " + str(f) + "*" + str(q) + " does not divide p-1 = " + str(p - 1));
  }
  check_budget((p - 1) / f, static_cast<Modulus>(p), budget);

  const auto table = CyclotomicTable::create(p, order, budget);
  std::vector<std::vector<std::int64_t>> sets;
  sets.reserve(q);
  for (u64 i = 0; i < q; ++i) sets.push_back(table.members(f * i));

  const Count predicted = cyclotomic_index_formula(table, f, q);
  auto family = DifferenceSystem::create(static_cast<Modulus>(p), sets, std::move(provenance));
  auto report = verify(family, budget);
  if (report.index != predicted) {
    fail(Errc::index_formula_mismatch, "cyclotomic-number formula gives " + str(predicted) +
                                           " but the spectrum gives " + str(report.index) +
                                           " for p=" + str(p) + " f=" + str(f) + " q=" + str(q));
  }
  return {family.with_claim(report.index), std::move(report)};
}

void expect(bool ok, const std::string& what) {
  if (!ok) fail(Errc::verification_failed, what);
}

DifferenceSystem perfect_series(u64 n, PrimeForm form, u64 f, u64 q, u64 expected_index,
                                const Budget& budget) {
  if (n == 0) fail(Errc::invalid_parameter, "n must be positive");
  const u64 p = evaluate(form, n);
  if (!is_prime(p)) fail(Errc::not_prime, str(p) + " is not prime");
  const std::string name{form_name(form)};
  auto [family, report] = build_cyclotomic(
      p, f, q, std::string{form_name(form)} + " n=" + str(n) + " p=" + str(p), budget);
  expect(report.is_perfect && report.is_regular && report.index == expected_index,
         name + " n=" + str(n) + " did not verify as perfect regular with index " +
             str(expected_index));
  return family;
}

}  // namespace

Count cyclotomic_index_formula(const CyclotomicTable& table, std::uint64_t f, std::uint64_t q) {
  if (f == 0 || q == 0 || table.order() != f * q) {
    fail(Errc::invalid_parameter, "table order must equal f*q");
  }
  Count best = std::numeric_limits<Count>::max();
  for (u64 i = 0; i < f; ++i) {
    Count sum = 0;
    for (u64 j = 0; j < q; ++j) {
      for (u64 a = 1; a < q; ++a) sum += table.cyclotomic_number(i + j * f, a * f);
    }
    best = std::min(best, sum);
  }
  return best;
}

DifferenceSystem cyclotomic_dss(std::uint64_t p, std::uint64_t f, std::uint64_t q,
                                const Budget& budget) {
  return build_cyclotomic(p, f, q, "cyclotomic p=" + str(p) + " f=" + str(f) + " q=" + str(q),
                          budget)
      .dss;
}

DifferenceSystem quartic_pair(std::uint64_t n, const Budget& budget) {
  return perfect_series(n, PrimeForm::quartic, 2, 2, 2 * n * n, budget);
}

DifferenceSystem sextic_triple(std::uint64_t n, const Budget& budget) {
  return perfect_series(n, PrimeForm::sextic_triple, 2, 3, 2 * n * n, budget);
}

DifferenceSystem sextic_pair(std::uint64_t n, const Budget& budget) {
  return perfect_series(n, PrimeForm::sextic_pair, 3, 2, 6 * n * n, budget);
}

DifferenceSystem paley_dss(std::uint64_t p, std::uint64_t q, const Budget& budget) {
  require_odd_prime(p);
  if (p % 4 != 3) fail(Errc::wrong_residue_class, str(p) + " is not 3 mod 4");
  if (q == 0 || (p - 1) % (2 * q) != 0) {
    fail(Errc::order_does_not_divide, "2q = " + str(2 * q) + " does not divide " + str(p - 1));
  }
  const u64 m = (p - 1) / (2 * q);
  auto [family, report] =
      build_cyclotomic(p, 2, q, "paley p=" + str(p) + " q=" + str(q), budget);
  expect(report.is_perfect && report.is_regular && report.index == (p - 2 * m - 1) / 4 &&
             report.df_lambda == (m - 1) / 2,
         "paley p=" + str(p) + " q=" + str(q) + " did not verify");
  return family;
}

DifferenceSystem qr_difference_set(std::uint64_t p, const Budget& budget) {
  require_odd_prime(p);
  if (p % 4 != 3) fail(Errc::wrong_residue_class, str(p) + " is not 3 mod 4");
  check_budget((p - 1) / 2, static_cast<Modulus>(p), budget);
  const auto table = CyclotomicTable::create(p, 2, budget);
  auto family = DifferenceSystem::create(static_cast<Modulus>(p), {table.members(0)},
                                         "qr-ds p=" + str(p), Count{0});
  const auto report = verify(family, budget);
  expect(report.df_lambda == (p - 3) / 4 && report.index == 0,
         "quadratic residues of " + str(p) + " did not verify as a difference set");
  return family;
}

FrequencyHoppingSequence identity_fhs(std::size_t v) {
  if (v < 2) fail(Errc::invalid_parameter, "identity sequence needs period >= 2");
  std::vector<Symbol> symbols(v);
  for (std::size_t i = 0; i < v; ++i) symbols[i] = static_cast<Symbol>(i);
  return FrequencyHoppingSequence::create(v, std::move(symbols));
}

FrequencyHoppingSequence cyclotomic_fhs(std::uint64_t p, std::uint64_t q, const Budget& budget) {
  require_odd_prime(p);
  if (q == 0 || (p - 1) % q != 0) {
    fail(Errc::order_does_not_divide, str(q) + " does not divide " + str(p - 1));
  }
  const auto table = CyclotomicTable::create(p, q, budget);
  std::vector<Symbol> symbols(p);
  symbols[0] = static_cast<Symbol>(q);
  for (u64 x = 1; x < p; ++x) symbols[x] = table.class_of(x);
  return FrequencyHoppingSequence::create(q + 1, std::move(symbols));
}

std::uint64_t evaluate(PrimeForm form, std::uint64_t n) {
  u64 a = 0;
  switch (form) {
    case PrimeForm::quartic: a = 16; break;
    case PrimeForm::sextic_triple: a = 12; break;
    case PrimeForm::sextic_pair: a = 108; break;
  }
  u64 sq = 0, v = 0;
  if (__builtin_mul_overflow(n, n, &sq) || __builtin_mul_overflow(a, sq, &v) || v == UINT64_MAX) {
    fail(Errc::invalid_parameter, "form value overflows 64 bits at n=" + str(n));
  }
  return v + 1;
}

std::string_view form_name(PrimeForm form) {
  switch (form) {
    case PrimeForm::quartic: return "quartic-pair";
    case PrimeForm::sextic_triple: return "sextic-triple";
    case PrimeForm::sextic_pair: return "sextic-pair";
  }
  return "?";
}

std::optional<PrimeForm> parse_prime_form(std::string_view name) {
  if (name == "16n2+1" || name == "16n^2+1" || name == "quartic-pair") return PrimeForm::quartic;
  if (name == "12n2+1" || name == "12n^2+1" || name == "sextic-triple") return PrimeForm::sextic_triple;
  if (name == "108n2+1" || name == "108n^2+1" || name == "sextic-pair") return PrimeForm::sextic_pair;
  return std::nullopt;
}

std::vector<std::uint64_t> scan_prime_forms(PrimeForm form, std::uint64_t n_max) {
  if (n_max == 0) fail(Errc::invalid_parameter, "n_max must be at least 1");
  std::vector<u64> out;
  for (u64 n = 1; n <= n_max; ++n) {
    if (is_prime(evaluate(form, n))) out.push_back(n);
  }
  return out;
}

}  // namespace dss
