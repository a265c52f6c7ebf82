#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dss/core.hpp"

namespace dss {

struct TableRow {
  std::uint64_t n = 0;
  Count v = 0;
  Count m = 0;
  Count q = 0;
  Count rho = 0;
  Count redundancy = 0;
  std::string construction;

  bool operator==(const TableRow&) const = default;
};

// Every admissible n <= 10 of the three cyclotomic series, each row built
// and re-verified perfect and regular before it is returned.
std::vector<TableRow> table1_rows(const Budget& budget = {});

// Paley-type rows for one (p, q).
std::vector<TableRow> paley_rows(std::uint64_t p, std::uint64_t q, const Budget& budget = {});
// Paley-type rows for p in {7, 11, 19, 23} and every q >= 2 with 2q | p - 1.
std::vector<TableRow> paley_rows(const Budget& budget = {});

// Header n,v,m,q,rho,redundancy_rate,construction; rate written as s/v.
std::string to_csv(const std::vector<TableRow>& rows);

}  // namespace dss
