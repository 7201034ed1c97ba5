// Exact min-cost assignment on small square matrices. Realizes the
// minimum over permutations in the component/tree matching step of the
// distance pipeline.
#pragma once

#include <cstdint>
#include <vector>

namespace mua {

// Square after phantom padding; rows past real_rows are phantom rows
// whose entries carry the cost of leaving that column unmatched.
struct CostMatrix {
  std::vector<std::vector<std::int64_t>> cost;
  int real_rows = 0;
};

struct Assignment {
  std::int64_t value = 0;
  std::vector<int> row_to_col;
};

// O(m^3) augmenting-path (Hungarian) solver. Throws std::invalid_argument
// on a non-square matrix or a negative entry.
Assignment assignment_min(const CostMatrix& c);

// Permutation enumeration, m <= 8; cross-check oracle for assignment_min.
Assignment assignment_brute_force(const CostMatrix& c);

}  // namespace mua
