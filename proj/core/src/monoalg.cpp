#include "mua/monoalg.hpp"

#include <algorithm>
#include <numeric>

#include "text_tokens.hpp"

namespace mua {

MonoAlg::MonoAlg(int size, std::vector<int> map) : n(size), f(std::move(map)) {
  if (n < 1) throw std::invalid_argument("MonoAlg: universe must be non-empty");
  if (static_cast<int>(f.size()) != n)
    throw std::invalid_argument("MonoAlg: operation table size mismatch");
  for (int i = 0; i < n; ++i)
    if (f[i] < 0 || f[i] >= n)
      throw std::invalid_argument("MonoAlg: image out of range at element " +
                                  std::to_string(i));
}

int MonoAlg::iterate(int x, int k) const {
  while (k-- > 0) x = f[x];
  return x;
}

MonoAlg parse_mua(const std::string& text) {
  using detail::parse_nat;
  using detail::where;
  auto toks = detail::tokenize(text);
  if (toks.empty()) throw ParseError("line 1, col 1: missing element count");
  int n = parse_nat(toks[0], "element count");
  if (n < 1)
    throw ParseError(where(toks[0]) + ": element count must be >= 1");
  if (static_cast<int>(toks.size()) < 1 + n)
    throw ParseError("line " + std::to_string(toks.back().line) +
                     ": expected " + std::to_string(n) + " images, got " +
                     std::to_string(toks.size() - 1));
  if (static_cast<int>(toks.size()) > 1 + n)
    throw ParseError(where(toks[1 + n]) + ": unexpected token '" +
                     toks[1 + n].text + "' after " + std::to_string(n) +
                     " images");
  std::vector<int> f(n);
  for (int i = 0; i < n; ++i) {
    int v = parse_nat(toks[1 + i], "image");
    if (v >= n)
      throw ParseError(where(toks[1 + i]) + ": image " + std::to_string(v) +
                       " out of range [0," + std::to_string(n) + ")");
    f[i] = v;
  }
  return MonoAlg(n, std::move(f));
}

std::vector<Component> components(const MonoAlg& a) {
  std::vector<int> parent(a.n);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<int> find_stack;
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (int i = 0; i < a.n; ++i) {
    int ra = find(i), rb = find(a.f[i]);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  // roots are minimal elements of their classes, so ascending root order
  // is the required order by minimal element
  std::vector<std::vector<int>> buckets(a.n);
  for (int i = 0; i < a.n; ++i) buckets[find(i)].push_back(i);
  std::vector<Component> out;
  for (int r = 0; r < a.n; ++r)
    if (!buckets[r].empty()) out.push_back({&a, std::move(buckets[r])});
  return out;
}

CoreInfo core_of(const Component& c) {
  const MonoAlg& a = *c.parent;
  // after |component| steps every walk has entered the cycle
  int x = a.iterate(c.elements[0], static_cast<int>(c.elements.size()));
  std::vector<int> cycle{x};
  for (int y = a.f[x]; y != x; y = a.f[y]) cycle.push_back(y);
  auto mn = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), mn, cycle.end());
  CoreInfo info;
  info.length = static_cast<int>(cycle.size());
  info.cycle = std::move(cycle);
  return info;
}

std::vector<int> independent_elements(const MonoAlg& a) {
  std::vector<int> indeg(a.n, 0);
  for (int i = 0; i < a.n; ++i) ++indeg[a.f[i]];
  std::vector<int> out;
  for (int i = 0; i < a.n; ++i)
    if (indeg[i] == 0) out.push_back(i);
  return out;
}

int mgen(const MonoAlg& a) {
  std::vector<int> indeg(a.n, 0);
  for (int i = 0; i < a.n; ++i) ++indeg[a.f[i]];
  int total = 0;
  for (const Component& c : components(a)) {
    int ind = 0;
    for (int e : c.elements)
      if (indeg[e] == 0) ++ind;
    total += ind > 0 ? ind : 1;  // a pure cycle still needs one generator
  }
  return total;
}

int mgen(const Component& c) {
  const MonoAlg& a = *c.parent;
  std::vector<char> in(a.n, 0);
  for (int e : c.elements) in[e] = 1;
  std::vector<char> has_preimage(a.n, 0);
  for (int i = 0; i < a.n; ++i)
    if (in[i]) has_preimage[a.f[i]] = 1;
  int ind = 0;
  for (int e : c.elements)
    if (!has_preimage[e]) ++ind;
  return ind > 0 ? ind : 1;
}

std::vector<int> generate(const MonoAlg& a, const std::vector<int>& x) {
  std::vector<char> in(a.n, 0);
  for (int s : x) {
    if (s < 0 || s >= a.n)
      throw std::invalid_argument("generate: element out of range");
    for (int y = s; !in[y]; y = a.f[y]) in[y] = 1;
  }
  std::vector<int> out;
  for (int i = 0; i < a.n; ++i)
    if (in[i]) out.push_back(i);
  return out;
}

MonoAlg disjoint_union(const MonoAlg& a, const MonoAlg& b) {
  std::vector<int> f(a.f);
  f.reserve(a.n + b.n);
  for (int i = 0; i < b.n; ++i) f.push_back(b.f[i] + a.n);
  return MonoAlg(a.n + b.n, std::move(f));
}

MonoAlg attach_tail(const MonoAlg& a, int at, int m) {
  if (at < 0 || at >= a.n)
    throw std::invalid_argument("attach_tail: attachment point out of range");
  if (m < 0) throw std::invalid_argument("attach_tail: negative tail length");
  std::vector<int> f(a.f);
  f.reserve(a.n + m);
  for (int i = 0; i < m; ++i) f.push_back(i + 1 < m ? a.n + i + 1 : at);
  return MonoAlg(a.n + m, std::move(f));
}

MonoAlg make_mpl(int n, int l) {
  if (n < 1) throw std::invalid_argument("make_mpl: cycle length must be >= 1");
  if (l < 0) throw std::invalid_argument("make_mpl: negative tail length");
  std::vector<int> f(n);
  for (int i = 0; i < n; ++i) f[i] = (i + 1) % n;
  return attach_tail(MonoAlg(n, std::move(f)), 0, l);
}

bool is_tree_alg(const MonoAlg& a) {
  auto comps = components(a);
  return comps.size() == 1 && core_of(comps[0]).length == 1;
}

MonoAlg induced_subalgebra(const MonoAlg& a, const std::vector<int>& closed,
                           std::vector<int>* old_labels) {
  std::vector<int> sorted(closed);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty())
    throw std::invalid_argument("induced_subalgebra: empty subset");
  std::vector<int> new_label(a.n, -1);
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
    new_label[sorted[i]] = i;
  std::vector<int> f(sorted.size());
  for (size_t i = 0; i < sorted.size(); ++i) {
    int img = a.f[sorted[i]];
    if (img < 0 || new_label[img] < 0)
      throw std::invalid_argument("induced_subalgebra: subset not f-closed");
    f[i] = new_label[img];
  }
  if (old_labels) *old_labels = sorted;
  return MonoAlg(static_cast<int>(sorted.size()), std::move(f));
}

std::vector<TreeAlg> tree_decomposition(const Component& c) {
  const MonoAlg& a = *c.parent;
  CoreInfo core = core_of(c);
  const int k = core.length;
  std::vector<int> cycle_index(a.n, -1);
  for (int i = 0; i < k; ++i) cycle_index[core.cycle[i]] = i;
  // first cycle vertex reached from each element
  std::vector<int> hit(a.n, -1);
  for (int e : c.elements) {
    std::vector<int> path;
    int x = e;
    while (hit[x] < 0 && cycle_index[x] < 0) {
      path.push_back(x);
      x = a.f[x];
    }
    int h = cycle_index[x] >= 0 ? cycle_index[x] : hit[x];
    for (int p : path) hit[p] = h;
    hit[x] = h;
  }
  std::vector<std::vector<int>> members(k);
  for (int e : c.elements) members[hit[e]].push_back(e);
  std::vector<TreeAlg> trees;
  trees.reserve(k);
  for (int i = 0; i < k; ++i) {
    std::vector<int> old_labels;
    // cut the outgoing cycle edge by looping the root
    MonoAlg whole = *c.parent;
    whole.f[core.cycle[i]] = core.cycle[i];
    trees.push_back(induced_subalgebra(whole, members[i], &old_labels));
  }
  return trees;
}

std::vector<TreeAlg> associated_forest(const TreeAlg& t) {
  int root = -1;
  for (int i = 0; i < t.n; ++i)
    if (t.f[i] == i) {
      root = i;
      break;
    }
  if (root < 0)
    throw std::invalid_argument("associated_forest: input has no fixed point");
  if (t.n == 1) return {};
  // descendants of each root child, found by reverse reachability
  std::vector<std::vector<int>> preimages(t.n);
  for (int i = 0; i < t.n; ++i)
    if (i != root) preimages[t.f[i]].push_back(i);
  std::vector<TreeAlg> forest;
  for (int child : preimages[root]) {
    std::vector<int> sub;
    std::vector<int> stack{child};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      sub.push_back(x);
      for (int p : preimages[x]) stack.push_back(p);
    }
    MonoAlg cut = t;
    cut.f[child] = child;
    forest.push_back(induced_subalgebra(cut, sub));
  }
  return forest;
}

TreeAlg tree_of_forest(const std::vector<TreeAlg>& forest) {
  int total = 0;
  for (const TreeAlg& t : forest) total += t.n;
  std::vector<int> f;
  f.reserve(total + 1);
  int offset = 0;
  for (const TreeAlg& t : forest) {
    for (int i = 0; i < t.n; ++i)
      f.push_back(t.f[i] == i ? total : t.f[i] + offset);
    offset += t.n;
  }
  f.push_back(total);  // fresh root loops
  return MonoAlg(total + 1, std::move(f));
}

}  // namespace mua
