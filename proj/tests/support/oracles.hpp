// Reference implementations used only by tests. Deliberately naive and
// independent of the library's algorithms: closures run on bitmasks,
// isomorphism scans all permutations, shortest paths use Dijkstra.
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mua/extnat.hpp"
#include "mua/monoalg.hpp"
#include "mua/network.hpp"

namespace oracle {

// f-closure of the seed set, as a bitmask. Requires n <= 20.
std::uint32_t orbit_mask(const mua::MonoAlg& a, std::uint32_t seed);

// Smallest subset size whose closure is the whole universe. n <= 16.
int min_generators(const mua::MonoAlg& a);

// Full permutation scan. n <= 8.
bool isomorphic(const mua::MonoAlg& a, const mua::MonoAlg& b);

// Lexicographically smallest relabelled table over all n! relabelings;
// two algebras get the same table iff they are isomorphic. n <= 7.
std::vector<int> min_table(const mua::MonoAlg& a);

// Dijkstra over red(0)/blue(1) edges; reference for the 0-1 BFS.
mua::Distance network_distance(const mua::Network& net, int u, int v);

// Straight from the definition: some f-closed subset of target induces
// a copy of source and, together with one extra element, generates all
// of target. Exponential in target.n; keep n <= 12.
bool largely_embeddable(const mua::MonoAlg& source, const mua::MonoAlg& target);

mua::MonoAlg random_monoalg(std::mt19937& rng, int n);

// Random tree-algebra: looped root 0, each later element attached below
// an earlier one.
mua::TreeAlg random_tree(std::mt19937& rng, int n);

}  // namespace oracle
