#include "stirbern/conjecture.hpp"

#include <stdexcept>

namespace stirbern {

bool is_unimodal(const std::vector<Integer>& seq) {
  std::size_t j = 1;
  while (j < seq.size() && seq[j] >= seq[j - 1]) ++j;
  while (j < seq.size() && seq[j] <= seq[j - 1]) ++j;
  return j >= seq.size();
}

ConjectureReport conjecture_check(const CoeffTable& table) {
  ConjectureReport rep;
  rep.n_max = table.n_max();
  for (int n = 1; n <= table.n_max(); ++n) {
    const auto& row = table.row(n);
    if (!is_unimodal(row)) rep.unimodality_violations.push_back(n);
    for (std::size_t j = 1; j < row.size(); ++j) {
      if (row[j] == row[j - 1]) {
        rep.plateau_rows.push_back(n);
        break;
      }
    }
    if (n == table.n_max()) continue;
    for (int i = 2; i <= n + 1; ++i) {
      const Integer cur = table(n, i);
      const Integer nxt = table(n + 1, i);
      if (nxt < cur) rep.monotonicity_violations.emplace_back(n, i);
      else if (nxt == cur) rep.monotonicity_ties.emplace_back(n, i);
    }
  }
  return rep;
}

ConjectureReport conjecture_check(int n_max) {
  if (n_max < 2) throw std::invalid_argument("conjecture_check: n_max must be >= 2");
  return conjecture_check(CoeffTable(n_max));
}

}  // namespace stirbern
