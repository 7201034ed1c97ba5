// Exact generator distance between finite monounary algebras.
// Pipeline: component assignment with phantom rows -> cycle-rotation
// matching of in-tree sequences -> recursive forest distance over the
// main subtrees, solved as min-cost assignment at every level.
#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "mua/assignment.hpp"
#include "mua/extnat.hpp"
#include "mua/monoalg.hpp"

namespace mua {

// Memo for tree-level distances, keyed on the ordered pair of canonical
// codes. Inserts are idempotent, so concurrent use is safe.
class TreeDistanceCache {
 public:
  std::optional<std::int64_t> lookup(const std::string& key) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void store(const std::string& key, std::int64_t value) {
    std::lock_guard<std::mutex> lock(mu_);
    map_.emplace(key, value);
  }
  size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return map_.size();
  }

 private:
  mutable std::mutex mu_;
  std::unordered_map<std::string, std::int64_t> map_;
};

// Process-wide default cache used when none is supplied.
TreeDistanceCache& default_tree_cache();

// When enabled, every assignment solve with size <= 8 is re-checked
// against brute-force permutation enumeration.
void set_assignment_cross_check(bool enabled);
bool assignment_cross_check_enabled();

// Minimum over injective matchings of the smaller forest into the
// larger of matched tree distances plus mgen of unmatched trees.
Distance forest_distance(const std::vector<TreeAlg>& f1,
                         const std::vector<TreeAlg>& f2,
                         TreeDistanceCache* cache = nullptr);

// 0 when isomorphic, else the forest distance of the main subtrees.
Distance tree_distance(const TreeAlg& t1, const TreeAlg& t2,
                       TreeDistanceCache* cache = nullptr);

// Connected algebras: mgen(a)+mgen(b) for different core lengths, else
// the best cyclic alignment of the two tree decompositions.
Distance connected_distance(const Component& a, const Component& b,
                            TreeDistanceCache* cache = nullptr);

Distance distance(const MonoAlg& a, const MonoAlg& b,
                  TreeDistanceCache* cache = nullptr);

}  // namespace mua
