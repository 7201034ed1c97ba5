#include "mua/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace mua {

namespace {

// Children in the in-tree sense: f-preimages, minus the cycle
// predecessor for cycle vertices (cycle edges are not tree edges).
std::vector<std::vector<int>> tree_children(const MonoAlg& a,
                                            const std::vector<char>& on_cycle) {
  std::vector<std::vector<int>> children(a.n);
  for (int i = 0; i < a.n; ++i)
    if (!(on_cycle[i] && on_cycle[a.f[i]])) children[a.f[i]].push_back(i);
  return children;
}

// AHU codes, iterative post-order from each cycle root.
void compute_codes(int root, const std::vector<std::vector<int>>& children,
                   std::vector<std::string>& code) {
  struct Frame {
    int v;
    size_t next_child;
  };
  std::vector<Frame> stack{{root, 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& kids = children[f.v];
    if (f.next_child < kids.size()) {
      stack.push_back({kids[f.next_child++], 0});
      continue;
    }
    std::vector<const std::string*> parts;
    parts.reserve(kids.size());
    for (int c : kids) parts.push_back(&code[c]);
    std::sort(parts.begin(), parts.end(),
              [](const std::string* x, const std::string* y) { return *x < *y; });
    std::string& out = code[f.v];
    out = "(";
    for (const std::string* p : parts) out += *p;
    out += ")";
    stack.pop_back();
  }
}

struct ComponentCanon {
  std::string code;          // minimal rotation of the cycle's tree codes
  std::vector<int> ordering; // original labels in canonical visit order
};

ComponentCanon canonize_component(const MonoAlg& a, const Component& comp,
                                  const std::vector<std::vector<int>>& children,
                                  std::vector<std::string>& code) {
  CoreInfo core = core_of(comp);
  const int k = core.length;
  for (int r : core.cycle) compute_codes(r, children, code);

  auto rotation = [&](int s) {
    std::string out;
    for (int i = 0; i < k; ++i) out += code[core.cycle[(s + i) % k]];
    return out;
  };
  int best = 0;
  std::string best_code = rotation(0);
  for (int s = 1; s < k; ++s) {
    std::string cand = rotation(s);
    if (cand < best_code) {
      best_code = std::move(cand);
      best = s;
    }
  }

  // visit order: cycle roots from the chosen start, each tree pre-order
  // with children in code order (ties by label, fixed but immaterial)
  ComponentCanon result;
  result.code = std::move(best_code);
  result.ordering.reserve(comp.elements.size());
  for (int i = 0; i < k; ++i) {
    std::vector<int> stack{core.cycle[(best + i) % k]};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      result.ordering.push_back(v);
      std::vector<int> kids = children[v];
      std::sort(kids.begin(), kids.end(), [&](int x, int y) {
        return code[x] != code[y] ? code[x] < code[y] : x < y;
      });
      // reversed push so the smallest-code child is visited first
      for (auto it = kids.rbegin(); it != kids.rend(); ++it)
        stack.push_back(*it);
    }
  }
  return result;
}

}  // namespace

CanonicalForm canonical_form(const MonoAlg& a) {
  std::vector<char> on_cycle(a.n, 0);
  auto comps = components(a);
  for (const Component& c : comps)
    for (int v : core_of(c).cycle) on_cycle[v] = 1;
  auto children = tree_children(a, on_cycle);
  std::vector<std::string> code(a.n);

  std::vector<ComponentCanon> canons;
  canons.reserve(comps.size());
  for (const Component& c : comps)
    canons.push_back(canonize_component(a, c, children, code));
  std::sort(canons.begin(), canons.end(),
            [](const ComponentCanon& x, const ComponentCanon& y) {
              return x.code < y.code;
            });

  CanonicalForm form;
  form.code.components = static_cast<int>(canons.size());
  form.to_canonical.assign(a.n, -1);
  int pos = 0;
  for (const ComponentCanon& c : canons) {
    form.code.bytes += "[";
    form.code.bytes += c.code;
    form.code.bytes += "]";
    for (int v : c.ordering) form.to_canonical[v] = pos++;
  }
  return form;
}

CanonicalCode canonical_code(const MonoAlg& a) { return canonical_form(a).code; }

bool is_isomorphic(const MonoAlg& a, const MonoAlg& b) {
  if (a.n != b.n) return false;
  return canonical_code(a) == canonical_code(b);
}

std::optional<std::vector<int>> find_isomorphism(const MonoAlg& a,
                                                 const MonoAlg& b) {
  if (a.n != b.n) return std::nullopt;
  CanonicalForm fa = canonical_form(a), fb = canonical_form(b);
  if (fa.code != fb.code) return std::nullopt;
  std::vector<int> from_canonical_b(b.n);
  for (int i = 0; i < b.n; ++i) from_canonical_b[fb.to_canonical[i]] = i;
  std::vector<int> iso(a.n);
  for (int i = 0; i < a.n; ++i) iso[i] = from_canonical_b[fa.to_canonical[i]];
  return iso;
}

MonoAlg relabel(const MonoAlg& a, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != a.n)
    throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<int> f(a.n, -1);
  for (int i = 0; i < a.n; ++i) f[perm[i]] = perm[a.f[i]];
  return MonoAlg(a.n, std::move(f));
}

}  // namespace mua
