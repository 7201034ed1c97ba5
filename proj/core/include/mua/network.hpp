// Networks of large embeddings: vertices are algebras, red edges join
// isomorphic vertices (cost 0), blue edges join large-subalgebra pairs
// (cost 1). Generator distance = minimum blue-length, via 0-1 BFS.
// Includes the brute-force monounary class enumeration (oracle) and the
// scalable class network built from the two large-embedding
// constructions.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mua/canonical.hpp"
#include "mua/extnat.hpp"
#include "mua/finite_algebra.hpp"
#include "mua/monoalg.hpp"

namespace mua {

struct Network {
  std::vector<std::string> labels;  // per vertex: size + iso-class tag
  std::vector<std::pair<int, int>> red_edges;   // normalized u < v, sorted
  std::vector<std::pair<int, int>> blue_edges;  // normalized u < v, sorted
  int size() const { return static_cast<int>(labels.size()); }
};

// Minimum number of blue edges over u-v paths; infinity if disconnected.
Distance network_distance(const Network& net, int u, int v);

// Maximum pairwise distance within start's connected component (red and
// blue edges both connect).
Distance component_diameter(const Network& net, int start);

// Deterministic DOT text: red edges style=dashed,color=red, blue edges
// color=blue.
std::string export_dot(const Network& net);

// Network over all subalgebras of fa. Blue edge between u and v iff an
// isomorphic copy of the smaller one is a proper large subalgebra of the
// larger; red edge iff isomorphic.
struct SubalgebraNetwork {
  std::shared_ptr<const FiniteAlgebra> algebra;
  std::vector<SubUniverse> vertices;   // sorted by (size, elements)
  std::vector<int> iso_class;          // tag per vertex, first-seen order
  std::vector<char> large_in_ambient;  // is v large in the full algebra
  Network net;
};

SubalgebraNetwork build_subalgebra_network(const FiniteAlgebra& fa);

// One canonical representative per isomorphism class of monounary
// algebras with n <= cap, by n^n table enumeration. Hard limit 8.
std::vector<MonoAlg> enumerate_monounary(int cap);

// Class network over all monounary classes with n <= cap. Vertices are
// generated by closing the pure cycles under the two blue-successor
// constructions (disjoint cycle-with-tail, attached tail), which reach
// every class; the successor pairs are exactly the blue edges. Hard
// limit 14.
struct MonounaryNetwork {
  int cap = 0;
  std::vector<MonoAlg> reps;          // canonically labelled, one per class
  std::vector<CanonicalCode> codes;   // aligned with reps
  Network net;                        // blue edges only; red are loops
  std::vector<int> adj_start;         // CSR over blue edges, both directions
  std::vector<int> adj;

  // index of a's class, if |a| <= cap
  std::optional<int> find(const MonoAlg& a) const;
};

MonounaryNetwork build_monounary_network(int cap);

// Blue-path distances from source in the sub-network induced by classes
// of size <= cap; -1 marks unreachable.
std::vector<std::int64_t> distances_within_cap(const MonounaryNetwork& net,
                                               int source, int cap);

}  // namespace mua
