#pragma once

#include <vector>

// Published values of a(n,i) for n <= 11, i = 2, 3, ... (row n = 11 stops at i = 11).
inline const std::vector<std::vector<long long>>& published_coefficients() {
  static const std::vector<std::vector<long long>> rows = {
      {1},
      {1, 2},
      {2, 6, 6},
      {6, 22, 36, 24},
      {24, 100, 210, 240, 120},
      {120, 548, 1350, 2040, 1800, 720},
      {720, 3528, 9744, 17640, 21000, 15120, 5040},
      {5040, 26136, 78792, 162456, 235200, 231840, 141120, 40320},
      {40320, 219168, 708744, 1614816, 2693880, 3265920, 2751840, 1451520, 362880},
      {362880, 2053152, 7036200, 17368320, 32319000, 45556560, 47628000, 35078400, 16329600, 3628800},
      {3628800, 21257280, 76521456, 201828000, 410031600, 649479600, 795175920, 731808000, 479001600,
       199584000},
  };
  return rows;
}
