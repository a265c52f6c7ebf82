#include "dss/tables.hpp"

#include "dss/constructions.hpp"
#include "dss/error.hpp"
#include "dss/verifier.hpp"

namespace dss {

namespace {

TableRow checked_row(std::uint64_t n, const DifferenceSystem& d, std::string construction,
                     const Budget& budget) {
  const auto r = verify(d, budget);
  if (!r.is_perfect || !r.is_regular || !d.claimed_index() || *d.claimed_index() != r.index) {
    fail(Errc::verification_failed, construction + " n=" + std::to_string(n) + " failed re-verification");
  }
  return {n, static_cast<Count>(r.v), r.set_sizes.front(), r.q, r.index, r.redundancy, std::move(construction)};
}

}  // namespace

std::vector<TableRow> table1_rows(const Budget& budget) {
  constexpr std::uint64_t n_max = 10;
  std::vector<TableRow> rows;
  for (auto form : {PrimeForm::quartic, PrimeForm::sextic_triple, PrimeForm::sextic_pair}) {
    for (auto n : scan_prime_forms(form, n_max)) {
      DifferenceSystem d = form == PrimeForm::quartic         ? quartic_pair(n, budget)
                           : form == PrimeForm::sextic_triple ? sextic_triple(n, budget)
                                                              : sextic_pair(n, budget);
      rows.push_back(checked_row(n, d, std::string{form_name(form)}, budget));
    }
  }
  return rows;
}

std::vector<TableRow> paley_rows(std::uint64_t p, std::uint64_t q, const Budget& budget) {
  return {checked_row((p - 3) / 4, paley_dss(p, q, budget), "paley", budget)};
}

std::vector<TableRow> paley_rows(const Budget& budget) {
  std::vector<TableRow> rows;
  for (std::uint64_t p : {7, 11, 19, 23}) {
    for (std::uint64_t q = 2; 2 * q <= p - 1; ++q) {
      if ((p - 1) % (2 * q) == 0) rows.push_back(paley_rows(p, q, budget).front());
    }
  }
  return rows;
}

std::string to_csv(const std::vector<TableRow>& rows) {
  std::string out = "n,v,m,q,rho,redundancy_rate,construction\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + ',' + std::to_string(r.v) + ',' + std::to_string(r.m) + ',' +
           std::to_string(r.q) + ',' + std::to_string(r.rho) + ',' + std::to_string(r.redundancy) +
           '/' + std::to_string(r.v) + ',' + r.construction + '\n';
  }
  return out;
}

}  // namespace dss
