#include "mua/distance.hpp"

#include <atomic>
#include <limits>
#include <stdexcept>

#include "mua/canonical.hpp"

namespace mua {

TreeDistanceCache& default_tree_cache() {
  static TreeDistanceCache cache;
  return cache;
}

namespace {

std::atomic<bool> g_cross_check{false};

std::int64_t solve_assignment(const CostMatrix& m) {
  Assignment a = assignment_min(m);
  if (g_cross_check.load(std::memory_order_relaxed) && m.cost.size() <= 8) {
    Assignment ref = assignment_brute_force(m);
    if (ref.value != a.value)
      throw std::logic_error("assignment cross-check mismatch");
  }
  return a.value;
}

std::int64_t tree_distance_impl(const TreeAlg& t1, const TreeAlg& t2,
                                TreeDistanceCache& cache);

std::int64_t forest_distance_impl(const std::vector<TreeAlg>& small,
                                  const std::vector<TreeAlg>& large,
                                  TreeDistanceCache& cache) {
  const int n = static_cast<int>(small.size());
  const int m = static_cast<int>(large.size());
  if (m == 0) return 0;
  CostMatrix cm;
  cm.real_rows = n;
  cm.cost.assign(m, std::vector<std::int64_t>(m, 0));
  for (int j = 0; j < m; ++j) {
    std::int64_t unmatched = mgen(large[j]);
    for (int i = 0; i < m; ++i)
      cm.cost[i][j] =
          i < n ? tree_distance_impl(small[i], large[j], cache) : unmatched;
  }
  return solve_assignment(cm);
}

std::int64_t tree_distance_impl(const TreeAlg& t1, const TreeAlg& t2,
                                TreeDistanceCache& cache) {
  CanonicalCode c1 = canonical_code(t1), c2 = canonical_code(t2);
  if (c1 == c2) return 0;
  const std::string& lo = c1 < c2 ? c1.bytes : c2.bytes;
  const std::string& hi = c1 < c2 ? c2.bytes : c1.bytes;
  std::string key = lo + "|" + hi;
  if (auto hit = cache.lookup(key)) return *hit;
  // recursion bottoms out: main subtrees have strictly smaller height
  std::vector<TreeAlg> f1 = associated_forest(t1), f2 = associated_forest(t2);
  std::int64_t value = f1.size() <= f2.size()
                           ? forest_distance_impl(f1, f2, cache)
                           : forest_distance_impl(f2, f1, cache);
  cache.store(key, value);
  return value;
}

std::int64_t connected_distance_impl(const Component& a, const Component& b,
                                     TreeDistanceCache& cache) {
  CoreInfo core_a = core_of(a), core_b = core_of(b);
  if (core_a.length != core_b.length) return mgen(a) + mgen(b);
  const int n = core_a.length;
  std::vector<TreeAlg> ta = tree_decomposition(a), tb = tree_decomposition(b);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (int k = 0; k < n; ++k) {
    std::int64_t total = 0;
    for (int i = 0; i < n && total < best; ++i)
      total += tree_distance_impl(ta[i], tb[(i + k) % n], cache);
    best = std::min(best, total);
  }
  return best;
}

}  // namespace

void set_assignment_cross_check(bool enabled) { g_cross_check.store(enabled); }
bool assignment_cross_check_enabled() { return g_cross_check.load(); }

Distance forest_distance(const std::vector<TreeAlg>& f1,
                         const std::vector<TreeAlg>& f2,
                         TreeDistanceCache* cache) {
  TreeDistanceCache& c = cache ? *cache : default_tree_cache();
  return f1.size() <= f2.size()
             ? Distance(forest_distance_impl(f1, f2, c))
             : Distance(forest_distance_impl(f2, f1, c));
}

Distance tree_distance(const TreeAlg& t1, const TreeAlg& t2,
                       TreeDistanceCache* cache) {
  TreeDistanceCache& c = cache ? *cache : default_tree_cache();
  return Distance(tree_distance_impl(t1, t2, c));
}

Distance connected_distance(const Component& a, const Component& b,
                            TreeDistanceCache* cache) {
  TreeDistanceCache& c = cache ? *cache : default_tree_cache();
  return Distance(connected_distance_impl(a, b, c));
}

Distance distance(const MonoAlg& a, const MonoAlg& b,
                  TreeDistanceCache* cache) {
  TreeDistanceCache& c = cache ? *cache : default_tree_cache();
  std::vector<Component> ca = components(a), cb = components(b);
  const std::vector<Component>& small = ca.size() <= cb.size() ? ca : cb;
  const std::vector<Component>& large = ca.size() <= cb.size() ? cb : ca;
  const int n = static_cast<int>(small.size());
  const int m = static_cast<int>(large.size());
  CostMatrix cm;
  cm.real_rows = n;
  cm.cost.assign(m, std::vector<std::int64_t>(m, 0));
  for (int j = 0; j < m; ++j) {
    std::int64_t unmatched = mgen(large[j]);
    for (int i = 0; i < m; ++i)
      cm.cost[i][j] = i < n ? connected_distance_impl(small[i], large[j], c)
                            : unmatched;
  }
  return Distance(solve_assignment(cm));
}

}  // namespace mua
