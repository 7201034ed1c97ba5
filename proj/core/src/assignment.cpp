#include "mua/assignment.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mua {

namespace {

void check_matrix(const CostMatrix& c) {
  const size_t m = c.cost.size();
  for (const auto& row : c.cost) {
    if (row.size() != m)
      throw std::invalid_argument("assignment: matrix must be square");
    for (std::int64_t v : row)
      if (v < 0) throw std::invalid_argument("assignment: negative entry");
  }
}

}  // namespace

Assignment assignment_min(const CostMatrix& c) {
  check_matrix(c);
  const int m = static_cast<int>(c.cost.size());
  if (m == 0) return {0, {}};
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

  // potentials u,v and column matches p, 1-indexed with column 0 as slack
  std::vector<std::int64_t> u(m + 1, 0), v(m + 1, 0);
  std::vector<int> p(m + 1, 0), way(m + 1, 0);
  for (int i = 1; i <= m; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<std::int64_t> minv(m + 1, kInf);
    std::vector<char> used(m + 1, 0);
    do {
      used[j0] = 1;
      int i0 = p[j0], j1 = 0;
      std::int64_t delta = kInf;
      for (int j = 1; j <= m; ++j) {
        if (used[j]) continue;
        std::int64_t cur = c.cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  Assignment out;
  out.row_to_col.assign(m, -1);
  for (int j = 1; j <= m; ++j) out.row_to_col[p[j] - 1] = j - 1;
  for (int i = 0; i < m; ++i) out.value += c.cost[i][out.row_to_col[i]];
  return out;
}

Assignment assignment_brute_force(const CostMatrix& c) {
  check_matrix(c);
  const int m = static_cast<int>(c.cost.size());
  if (m > 8)
    throw std::invalid_argument("assignment_brute_force: limited to m <= 8");
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  Assignment best;
  best.value = std::numeric_limits<std::int64_t>::max();
  do {
    std::int64_t total = 0;
    for (int i = 0; i < m; ++i) total += c.cost[i][perm[i]];
    if (total < best.value) {
      best.value = total;
      best.row_to_col = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (m == 0) best.value = 0;
  return best;
}

}  // namespace mua
