// Finite monounary algebras: a set {0..n-1} with one total self-map f,
// i.e. a functional graph. Decomposition into connected components,
// cycle (core) extraction, generation, and the structural constructions
// used by the distance pipeline.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mua {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MonoAlg {
  int n = 1;                 // universe size, >= 1
  std::vector<int> f;        // f[i] in [0,n)

  MonoAlg() : f{0} {}
  MonoAlg(int size, std::vector<int> map);

  int apply(int x) const { return f[x]; }
  // f^k(x)
  int iterate(int x, int k) const;
};

// A weakly-connected class of the functional graph. `elements` is sorted.
struct Component {
  const MonoAlg* parent = nullptr;
  std::vector<int> elements;
};

// The unique cycle of a connected algebra, f-oriented, starting at the
// minimal cycle element: f(cycle[i]) = cycle[(i+1) % length].
struct CoreInfo {
  std::vector<int> cycle;
  int length = 0;
};

// A connected algebra whose core is a single fixed point (the root).
// Structurally just a MonoAlg; the alias marks intent in signatures.
using TreeAlg = MonoAlg;

// .mua format: '#' comment lines; first token n; then n images.
// Errors name the offending line and token position.
MonoAlg parse_mua(const std::string& text);

std::vector<Component> components(const MonoAlg& a);
CoreInfo core_of(const Component& c);

// Elements with no f-preimage.
std::vector<int> independent_elements(const MonoAlg& a);

// Minimal number of generators: per component, |independent| (or 1 for a
// pure cycle), summed over components.
int mgen(const MonoAlg& a);
int mgen(const Component& c);

// Forward orbit closure of x; empty input yields the empty set.
std::vector<int> generate(const MonoAlg& a, const std::vector<int>& x);

// Universe n_a + n_b, b's labels shifted by n_a.
MonoAlg disjoint_union(const MonoAlg& a, const MonoAlg& b);

// Appends a chain x_0 -> x_1 -> ... -> x_{m-1} -> at of m fresh elements
// labelled n..n+m-1; m = 0 copies a.
MonoAlg attach_tail(const MonoAlg& a, int at, int m);

// The cycle-with-tail algebra: cycle 0..n-1, tail of length l ending at 0.
MonoAlg make_mpl(int n, int l);

// True iff connected with core length 1.
bool is_tree_alg(const MonoAlg& a);

// Extracts the subalgebra induced by a closed subset, relabelled to
// 0..k-1 in ascending element order. `old_labels[i]` is the original
// label of new element i.
MonoAlg induced_subalgebra(const MonoAlg& a, const std::vector<int>& closed,
                           std::vector<int>* old_labels = nullptr);

// In-trees hanging off the cycle, in cycle order from the minimal cycle
// element: tree i is rooted at cycle vertex i with the root made a fixed
// point. Cycle edges are cut.
std::vector<TreeAlg> tree_decomposition(const Component& c);

// Main subtrees of the root: remove the looped root, loop each child.
// A bare fixed point maps to the empty forest.
std::vector<TreeAlg> associated_forest(const TreeAlg& t);

// Fresh looped root with every tree's root redirected into it; the
// empty forest yields the one-point algebra. Inverse of
// associated_forest up to isomorphism.
TreeAlg tree_of_forest(const std::vector<TreeAlg>& forest);

}  // namespace mua
