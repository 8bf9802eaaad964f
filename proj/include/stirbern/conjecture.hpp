#pragma once

#include "stirbern/coeff_table.hpp"

#include <utility>
#include <vector>

namespace stirbern {

// Scan of the coefficient table for growth in n and unimodality in i.
//
// The hard checks are the weak forms: a(n+1,i) < a(n,i) is a monotonicity
// violation and a row that decreases and then increases again is not unimodal.
// Ties are tallied separately since a(1,2) = a(2,2) = 1 and a(3,3) = a(3,4) = 6.
struct ConjectureReport {
  int n_max = 0;
  std::vector<std::pair<int, int>> monotonicity_violations;  // (n, i): a(n+1,i) < a(n,i)
  std::vector<int> unimodality_violations;                   // rows with more than one peak
  std::vector<std::pair<int, int>> monotonicity_ties;        // (n, i): a(n+1,i) == a(n,i)
  std::vector<int> plateau_rows;                             // unimodal only in the weak sense

  bool ok() const { return monotonicity_violations.empty() && unimodality_violations.empty(); }
};

ConjectureReport conjecture_check(const CoeffTable& table);
ConjectureReport conjecture_check(int n_max);

// Weakly unimodal: non-decreasing then non-increasing.
bool is_unimodal(const std::vector<Integer>& seq);

}  // namespace stirbern
