#include "mua/large.hpp"

#include <algorithm>

#include "mua/canonical.hpp"

namespace mua {

namespace {

std::vector<int> indegrees(const MonoAlg& a) {
  std::vector<int> d(a.n, 0);
  for (int i = 0; i < a.n; ++i) ++d[a.f[i]];
  return d;
}

std::vector<int> complement_of(int n, const std::vector<int>& subset) {
  std::vector<char> in(n, 0);
  for (int x : subset) in[x] = 1;
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (!in[i]) out.push_back(i);
  return out;
}

// Composes an isomorphism source -> relabelled complement with the
// original labels of the complement.
std::vector<int> lift_embedding(const std::vector<int>& iso,
                                const std::vector<int>& old_labels) {
  std::vector<int> out(iso.size());
  for (size_t i = 0; i < iso.size(); ++i) out[i] = old_labels[iso[i]];
  return out;
}

std::optional<LargeEmbedWitness> try_disjoint_mpl(const MonoAlg& source,
                                                  const MonoAlg& target,
                                                  int extra) {
  auto indeg = indegrees(target);
  for (const Component& comp : components(target)) {
    if (static_cast<int>(comp.elements.size()) != extra) continue;
    int ind = -1, ind_count = 0;
    for (int e : comp.elements)
      if (indeg[e] == 0) {
        ind = e;
        ++ind_count;
      }
    if (ind_count > 1) continue;  // single-generated components only
    CoreInfo core = core_of(comp);
    int l = extra - core.length;
    // one independent element iff a non-trivial tail hangs off the cycle;
    // the component is then Mpl-shaped iff it is single-generated
    int generator = ind_count == 1 ? ind : comp.elements[0];
    if (static_cast<int>(generate(target, {generator}).size()) != extra)
      continue;
    std::vector<int> rest = complement_of(target.n, comp.elements);
    std::vector<int> old_labels;
    MonoAlg rest_alg = induced_subalgebra(target, rest, &old_labels);
    auto iso = find_isomorphism(source, rest_alg);
    if (!iso) continue;
    LargeEmbedWitness w;
    w.kind = LargeEmbedWitness::Kind::DisjointMpl;
    w.n = core.length;
    w.l = l;
    w.embedding = lift_embedding(*iso, old_labels);
    w.gen = generator;
    return w;
  }
  return std::nullopt;
}

std::optional<LargeEmbedWitness> try_tail(const MonoAlg& source,
                                          const MonoAlg& target, int extra) {
  auto indeg = indegrees(target);
  for (int x = 0; x < target.n; ++x) {
    if (indeg[x] != 0) continue;
    // prefix x, f(x), ..., of length `extra`; interior elements must have
    // the previous prefix element as their only preimage
    std::vector<int> prefix{x};
    bool ok = true;
    for (int i = 1; i < extra; ++i) {
      int next = target.f[prefix.back()];
      if (indeg[next] != 1) {
        ok = false;
        break;
      }
      prefix.push_back(next);
    }
    if (!ok) continue;
    std::vector<int> rest = complement_of(target.n, prefix);
    std::vector<int> old_labels;
    MonoAlg rest_alg = induced_subalgebra(target, rest, &old_labels);
    auto iso = find_isomorphism(source, rest_alg);
    if (!iso) continue;
    LargeEmbedWitness w;
    w.kind = LargeEmbedWitness::Kind::Tail;
    w.m = extra;
    w.embedding = lift_embedding(*iso, old_labels);
    w.gen = x;
    int attach = target.f[prefix.back()];
    w.at = static_cast<int>(
        std::find(w.embedding.begin(), w.embedding.end(), attach) -
        w.embedding.begin());
    return w;
  }
  return std::nullopt;
}

}  // namespace

std::pair<bool, std::optional<LargeEmbedWitness>> is_largely_embeddable(
    const MonoAlg& source, const MonoAlg& target) {
  const int extra = target.n - source.n;
  if (extra < 0) return {false, std::nullopt};
  if (extra == 0) {
    auto iso = find_isomorphism(source, target);
    if (!iso) return {false, std::nullopt};
    LargeEmbedWitness w;
    w.kind = LargeEmbedWitness::Kind::Tail;
    w.at = 0;
    w.m = 0;
    w.embedding = *iso;
    w.gen = (*iso)[0];
    return {true, w};
  }
  if (auto w = try_disjoint_mpl(source, target, extra)) return {true, *w};
  if (auto w = try_tail(source, target, extra)) return {true, *w};
  return {false, std::nullopt};
}

bool validate_large_witness(const MonoAlg& source, const MonoAlg& target,
                            const LargeEmbedWitness& w) {
  if (static_cast<int>(w.embedding.size()) != source.n) return false;
  std::vector<char> hit(target.n, 0);
  for (int img : w.embedding) {
    if (img < 0 || img >= target.n || hit[img]) return false;
    hit[img] = 1;
  }
  for (int i = 0; i < source.n; ++i)
    if (w.embedding[source.f[i]] != target.f[w.embedding[i]]) return false;
  if (w.gen < 0 || w.gen >= target.n) return false;

  std::vector<int> gens(w.embedding);
  gens.push_back(w.gen);
  if (static_cast<int>(generate(target, gens).size()) != target.n) return false;

  std::vector<int> rest = complement_of(target.n, w.embedding);
  switch (w.kind) {
    case LargeEmbedWitness::Kind::DisjointMpl: {
      if (w.n < 1 || w.l < 0) return false;
      if (static_cast<int>(rest.size()) != w.n + w.l) return false;
      for (int r : rest)
        if (hit[target.f[r]]) return false;  // must be a separate component
      MonoAlg rest_alg = induced_subalgebra(target, rest);
      return is_isomorphic(rest_alg, make_mpl(w.n, w.l));
    }
    case LargeEmbedWitness::Kind::Tail: {
      if (static_cast<int>(rest.size()) != w.m) return false;
      if (w.at < 0 || w.at >= source.n) return false;
      if (w.m == 0) return true;
      auto indeg = indegrees(target);
      if (hit[w.gen] || indeg[w.gen] != 0) return false;
      std::vector<char> seen(target.n, 0);
      int cur = w.gen;
      seen[cur] = 1;
      for (int i = 1; i < w.m; ++i) {
        cur = target.f[cur];
        if (hit[cur] || seen[cur] || indeg[cur] != 1) return false;
        seen[cur] = 1;
      }
      return target.f[cur] == w.embedding[w.at];
    }
  }
  return false;
}

MonoAlg push_up_witness(const MonoAlg& c, const MonoAlg& a,
                        const LargeEmbedWitness& wa, const MonoAlg& b,
                        const LargeEmbedWitness& wb) {
  if (!validate_large_witness(c, a, wa))
    throw std::invalid_argument("push_up_witness: invalid witness for first target");
  if (!validate_large_witness(c, b, wb))
    throw std::invalid_argument("push_up_witness: invalid witness for second target");
  using Kind = LargeEmbedWitness::Kind;
  // a ≅ c ⊔ Mpl: append the same component to b, and symmetrically;
  // two tails commute, so attach b's tail onto a at the shared image
  if (wa.kind == Kind::DisjointMpl) return disjoint_union(b, make_mpl(wa.n, wa.l));
  if (wb.kind == Kind::DisjointMpl) return disjoint_union(a, make_mpl(wb.n, wb.l));
  return attach_tail(a, wa.embedding[wb.at], wb.m);
}

}  // namespace mua
