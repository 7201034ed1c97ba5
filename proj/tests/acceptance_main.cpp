// Acceptance gate: one pass/fail line per criterion, exit code = number
// of failed criteria. Criteria can be selected by number on the command
// line; the default runs all nine.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mua/canonical.hpp"
#include "mua/distance.hpp"
#include "mua/extnat.hpp"
#include "mua/finite_algebra.hpp"
#include "mua/large.hpp"
#include "mua/monoalg.hpp"
#include "mua/network.hpp"
#include "mua/qz.hpp"
#include "support/oracles.hpp"

namespace {

using mua::Distance;
using mua::ExtNat;
using mua::MonoAlg;

struct Tally {
  long checks = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && failures.size() < 25) failures.push_back(what);
    if (!ok && failures.size() == 25) failures.push_back("... more suppressed");
  }
  template <typename A, typename B>
  void expect_eq(const A& got, const B& want, const std::string& what) {
    std::ostringstream os;
    os << what << ": got " << got << ", want " << want;
    expect(got == want, os.str());
  }
};

std::string fixture(const char* name) {
  return std::string(MUA_FIXTURE_DIR) + "/" + name;
}

MonoAlg load_fixture(const char* name) {
  std::ifstream in(fixture(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + fixture(name));
  std::ostringstream buf;
  buf << in.rdbuf();
  return mua::parse_mua(buf.str());
}

// ---- criterion 1: worked-figure distance -------------------------------

void criterion1(Tally& t) {
  auto a = load_fixture("figA.mua");
  auto b = load_fixture("figB.mua");
  auto start = std::chrono::steady_clock::now();
  mua::TreeDistanceCache cache;
  t.expect_eq(mua::distance(a, b, &cache).str(), std::string("4"),
              "distance between the figure algebras");
  t.expect_eq(mua::distance(b, a, &cache).str(), std::string("4"),
              "distance is symmetric on the figure pair");

  // the six permutation sums over the three main-subtree matchings
  auto fa = mua::associated_forest(a);
  auto fb = mua::associated_forest(b);
  if (fa.size() != 3 || fb.size() != 3) {
    t.expect(false, "expected three main subtrees on each side");
    return;
  }
  std::uint64_t d[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      d[i][j] = mua::tree_distance(fa[i], fb[j], &cache).finite();
  std::multiset<std::uint64_t> sums;
  std::vector<int> perm{0, 1, 2};
  do {
    sums.insert(d[0][perm[0]] + d[1][perm[1]] + d[2][perm[2]]);
  } while (std::next_permutation(perm.begin(), perm.end()));
  t.expect(sums == std::multiset<std::uint64_t>{4, 4, 5, 6, 7, 8},
           "permutation sums over subtree matchings are {5,7,4,4,6,8}");
  t.expect_eq(*sums.begin(), std::uint64_t{4}, "minimal permutation sum");

  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start).count();
  t.expect(secs < 1.0, "runtime below one second");
}

// ---- criterion 2: capped network BFS equals the exact pipeline ---------

void criterion2(Tally& t) {
  auto reps = mua::enumerate_monounary(6);
  t.expect_eq(reps.size(), size_t{207}, "iso classes with at most 6 elements");
  auto net = mua::build_monounary_network(14);

  std::vector<int> idx(reps.size());
  for (size_t i = 0; i < reps.size(); ++i) {
    auto found = net.find(reps[i]);
    if (!found) {
      t.expect(false, "class missing from the network");
      return;
    }
    idx[i] = *found;
  }

  mua::TreeDistanceCache cache;
  long mismatches = 0;
  for (size_t i = 0; i < reps.size(); ++i) {
    const int s = reps[i].n;
    // one BFS per cap serves every partner of this source
    std::map<int, std::vector<std::int64_t>> by_cap;
    for (int c = s + 1; c <= s + 8 && c <= 14; ++c)
      by_cap[c] = mua::distances_within_cap(net, idx[i], c);
    // classes are sorted by size, so partners j >= i give caps in s+1..s+8
    for (size_t j = i; j < reps.size(); ++j) {
      const int cap = s + reps[j].n;
      auto exact = mua::distance(reps[i], reps[j], &cache);
      std::int64_t bfs = by_cap.at(cap)[idx[j]];
      std::int64_t padded = by_cap.at(cap + 2)[idx[j]];
      bool ok = exact.is_finite() &&
                static_cast<std::int64_t>(exact.finite()) == bfs &&
                bfs == padded;
      if (!ok) ++mismatches;
      t.expect(ok, "pair (" + std::to_string(i) + "," + std::to_string(j) +
                       "): exact " + exact.str() + ", bfs@" +
                       std::to_string(cap) + " " + std::to_string(bfs) +
                       ", bfs@" + std::to_string(cap + 2) + " " +
                       std::to_string(padded));
    }
  }
  t.expect_eq(mismatches, 0l, "mismatching pairs");
}

// ---- criterion 3: large subgroups of the order-24 symmetric group ------

void criterion3(Tally& t) {
  auto start = std::chrono::steady_clock::now();
  auto s4 = mua::symmetric_group(4);
  auto perms = mua::all_permutations(4);
  auto subs = mua::enumerate_subalgebras(s4);
  t.expect_eq(subs.size(), size_t{30}, "subgroup count of the order-24 group");

  std::map<int, int> histogram;
  for (const auto& s : subs) ++histogram[static_cast<int>(s.elements.size())];
  t.expect(histogram == std::map<int, int>{{1, 1},
                                           {2, 9},
                                           {3, 4},
                                           {4, 7},
                                           {6, 4},
                                           {8, 3},
                                           {12, 1},
                                           {24, 1}},
           "subgroup order histogram {1:1,2:9,3:4,4:7,6:4,8:3,12:1,24:1}");

  auto index_of = [&](std::vector<int> p) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), p) -
                            perms.begin());
  };
  // the three double transpositions and the subgroup they span
  const std::set<int> double_transpositions{
      index_of({1, 0, 3, 2}), index_of({2, 3, 0, 1}), index_of({3, 2, 1, 0})};
  std::vector<int> klein_gens(double_transpositions.begin(),
                              double_transpositions.end());
  auto normal_klein = mua::closure(s4, klein_gens);

  std::vector<int> all(24);
  std::iota(all.begin(), all.end(), 0);
  mua::SubUniverse whole{&s4, all};

  for (const auto& sub : subs) {
    const size_t k = sub.elements.size();
    bool expect_large = true;  // orders 3, 6, 8, 12, 24 are all large
    if (k == 1) {
      expect_large = false;
    } else if (k == 2) {
      // transpositions have fixed points; double transpositions do not
      int x = sub.elements[0] == 0 ? sub.elements[1] : sub.elements[0];
      expect_large = !double_transpositions.count(x);
    } else if (k == 4) {
      expect_large = sub.elements != normal_klein;
    }
    bool got = mua::is_large_subalgebra(sub, whole);
    std::string members = "{";
    for (int e : sub.elements) members += std::to_string(e) + ",";
    members.back() = '}';
    t.expect_eq(got, expect_large, "largeness of subgroup " + members);
  }

  // the named rows: {e,(12)} YES, {e,(12)(34)} NO, double-transposition
  // Klein subgroup NO
  auto named = [&](std::vector<int> gens) {
    return mua::SubUniverse{&s4, mua::closure(s4, gens)};
  };
  t.expect(mua::is_large_subalgebra(named({index_of({1, 0, 2, 3})}), whole),
           "the transposition subgroup is large");
  t.expect(!mua::is_large_subalgebra(named({index_of({1, 0, 3, 2})}), whole),
           "the double-transposition subgroup is not large");
  t.expect(!mua::is_large_subalgebra(mua::SubUniverse{&s4, normal_klein}, whole),
           "the double-transposition Klein subgroup is not large");

  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                              start).count();
  t.expect(secs < 10.0, "runtime below ten seconds");
}

// ---- criterion 4: the 8-element Boolean cube network -------------------

void criterion4(Tally& t) {
  auto sn = mua::build_subalgebra_network(mua::boolean_algebra(3));
  t.expect_eq(sn.net.size(), 5, "vertex count");
  t.expect_eq(sn.net.red_edges.size(), size_t{3}, "red edge count");
  t.expect_eq(sn.net.blue_edges.size(), size_t{6}, "blue edge count");

  int bottom = -1, top = -1;
  for (int v = 0; v < sn.net.size(); ++v) {
    if (sn.vertices[v].elements == std::vector<int>{0, 7}) bottom = v;
    if (sn.vertices[v].elements.size() == 8) top = v;
  }
  if (bottom < 0 || top < 0) {
    t.expect(false, "expected subalgebras {0,1} and the full cube");
    return;
  }
  t.expect_eq(mua::network_distance(sn.net, bottom, top).str(),
              std::string("2"), "distance from {0,1} to the full algebra");
  t.expect_eq(mua::component_diameter(sn.net, bottom).str(), std::string("2"),
              "component diameter");
}

// ---- criterion 5: the order-12 alternating group network ---------------

void criterion5(Tally& t) {
  auto first = mua::build_subalgebra_network(mua::alternating_group(4));
  t.expect_eq(first.net.size(), 10, "subgroup count");

  // iso-class histogram: class size keyed by subgroup order
  std::map<std::pair<int, int>, int> class_of;  // (order, class) -> members
  for (int v = 0; v < first.net.size(); ++v)
    ++class_of[{static_cast<int>(first.vertices[v].elements.size()),
                first.iso_class[v]}];
  std::map<int, std::multiset<int>> histogram;  // order -> sizes of its classes
  for (const auto& [key, members] : class_of)
    histogram[key.first].insert(members);
  t.expect(histogram ==
               std::map<int, std::multiset<int>>{{1, {1}},
                                                 {2, {3}},
                                                 {3, {4}},
                                                 {4, {1}},
                                                 {12, {1}}},
           "iso-class histogram trivial:1, Z2:3, Z3:4, Klein:1, whole:1");

  t.expect_eq(first.net.red_edges.size(), size_t{9}, "red edge count");
  t.expect_eq(first.net.blue_edges.size(), size_t{18}, "blue edge count");

  auto second = mua::build_subalgebra_network(mua::alternating_group(4));
  t.expect(first.net.red_edges == second.net.red_edges &&
               first.net.blue_edges == second.net.blue_edges &&
               first.net.labels == second.net.labels,
           "edge lists are stable across runs");
}

// ---- criterion 6: closed-form distances for subgroups of Q/Z -----------

void criterion6(Tally& t) {
  const ExtNat inf = ExtNat::infinity();
  auto seq = [](ExtNat def, std::vector<std::pair<int, ExtNat>> e = {}) {
    return mua::make_choice_seq(def, std::move(e));
  };
  // one representative per closed-form case
  t.expect_eq(mua::qz_distance(seq(inf), seq(inf)).str(), std::string("0"),
              "equal sequences");
  t.expect_eq(mua::qz_distance(seq(inf, {{0, ExtNat(2)}}),
                               seq(inf, {{0, ExtNat(4)}}))
                  .str(),
              std::string("1"), "strictly below");
  t.expect_eq(mua::qz_distance(seq(inf, {{0, ExtNat(1)}, {1, ExtNat(2)}}),
                               seq(inf, {{0, ExtNat(2)}, {1, ExtNat(1)}}))
                  .str(),
              std::string("2"), "equivalent but incomparable");
  t.expect_eq(mua::qz_distance(seq(ExtNat(0)), seq(ExtNat(0), {{0, inf}})).str(),
              std::string("inf"), "inequivalent sequences");
  // mismatched infinity patterns fall under the inequivalent case
  t.expect_eq(mua::qz_distance(seq(inf, {{0, ExtNat(1)}}),
                               seq(inf, {{1, ExtNat(1)}}))
                  .str(),
              std::string("inf"), "mismatched infinity patterns");

  t.expect_eq(mua::qz_diameter(seq(inf)).str(), std::string("0"),
              "diameter with no finite positions");
  t.expect_eq(mua::qz_diameter(seq(inf, {{3, ExtNat(7)}})).str(),
              std::string("1"), "diameter with one finite position");
  t.expect_eq(mua::qz_diameter(seq(ExtNat(0))).str(), std::string("2"),
              "diameter with infinitely many finite positions");
  t.expect_eq(mua::qz_diameter(seq(inf, {{0, ExtNat(1)}, {4, ExtNat(2)}})).str(),
              std::string("2"), "diameter with two finite positions");
}

// ---- criterion 7: metric and bound properties --------------------------

void criterion7(Tally& t) {
  std::mt19937 rng(20240817);
  mua::TreeDistanceCache cache;
  auto size_dist = std::uniform_int_distribution<int>(1, 8);
  long embed_positives = 0, diff_core_pairs = 0, same_core_pairs = 0;

  const int kPairs = 12000;
  for (int trial = 0; trial < kPairs; ++trial) {
    MonoAlg a = oracle::random_monoalg(rng, size_dist(rng));
    MonoAlg b = oracle::random_monoalg(rng, size_dist(rng));
    if (trial % 8 == 0) {
      // force large-embeddable pairs into the sample
      std::uniform_int_distribution<int> at(0, a.n - 1), m(1, 2);
      b = trial % 16 == 0
              ? mua::attach_tail(a, at(rng), m(rng))
              : mua::disjoint_union(a, mua::make_mpl(m(rng), trial % 3 == 0));
    }

    auto d_ab = mua::distance(a, b, &cache);
    auto d_ba = mua::distance(b, a, &cache);
    if (!d_ab.is_finite()) {
      t.expect(false, "finite algebras at infinite distance");
      continue;
    }
    t.expect(d_ab == d_ba, "symmetry");
    t.expect((d_ab.finite() == 0) == mua::is_isomorphic(a, b),
             "zero distance exactly for isomorphic pairs");

    const std::uint64_t mg = mua::mgen(a) + mua::mgen(b);
    t.expect(d_ab.finite() <= mg, "distance bounded by the generator sum");

    auto comps_a = mua::components(a);
    auto comps_b = mua::components(b);
    if (comps_a.size() == 1 && comps_b.size() == 1) {
      int core_a = mua::core_of(comps_a[0]).length;
      int core_b = mua::core_of(comps_b[0]).length;
      if (core_a != core_b) {
        ++diff_core_pairs;
        t.expect(d_ab.finite() == mg,
                 "non-isomorphic cores force the full generator sum");
      } else {
        ++same_core_pairs;
        t.expect(d_ab.finite() + 1 <= mg,
                 "same-core pairs stay below the generator sum");
      }
    }

    if (a.n <= b.n) {
      auto [emb, w] = mua::is_largely_embeddable(a, b);
      if (emb) {
        ++embed_positives;
        t.expect(d_ab.finite() <= 1, "large embeddability implies distance 1");
      }
    }
  }
  t.expect(embed_positives >= kPairs / 16, "embeddable pairs were sampled");
  t.expect(diff_core_pairs > 100 && same_core_pairs > 100,
           "both core regimes were sampled");

  const int kTriples = 12000;
  for (int trial = 0; trial < kTriples; ++trial) {
    MonoAlg a = oracle::random_monoalg(rng, size_dist(rng));
    MonoAlg b = oracle::random_monoalg(rng, size_dist(rng));
    MonoAlg c = oracle::random_monoalg(rng, size_dist(rng));
    auto ab = mua::distance(a, b, &cache);
    auto ac = mua::distance(a, c, &cache);
    auto cb = mua::distance(c, b, &cache);
    t.expect(ab <= ac + cb, "triangle inequality");
  }
}

// ---- criterion 8: reduction coherence and push-up ----------------------

void criterion8(Tally& t) {
  std::mt19937 rng(777);
  mua::TreeDistanceCache cache;

  auto code_multiset = [](const std::vector<mua::TreeAlg>& forest) {
    std::multiset<std::string> codes;
    for (const auto& tr : forest) codes.insert(mua::canonical_code(tr).bytes);
    return codes;
  };

  for (int trial = 0; trial < 1200; ++trial) {
    auto t1 = oracle::random_tree(rng, 1 + trial % 10);
    auto t2 = oracle::random_tree(rng, 1 + (trial * 3) % 10);
    auto f1 = mua::associated_forest(t1);
    auto f2 = mua::associated_forest(t2);
    t.expect(mua::tree_distance(t1, t2, &cache) ==
                 mua::forest_distance(f1, f2, &cache),
             "tree distance equals the forest distance of main subtrees");
    t.expect(mua::is_isomorphic(mua::tree_of_forest(f1), t1),
             "rebuilding from the forest recovers the tree");
    t.expect(code_multiset(mua::associated_forest(mua::tree_of_forest(f1))) ==
                 code_multiset(f1),
             "splitting the rebuilt tree recovers the forest");
  }

  auto random_extension = [&](const MonoAlg& c) {
    std::uniform_int_distribution<int> coin(0, 1), small(1, 3);
    if (coin(rng)) {
      std::uniform_int_distribution<int> at(0, c.n - 1);
      return mua::attach_tail(c, at(rng), small(rng));
    }
    return mua::disjoint_union(c, mua::make_mpl(small(rng), coin(rng)));
  };
  for (int trial = 0; trial < 1200; ++trial) {
    auto c = oracle::random_monoalg(rng, 1 + trial % 6);
    auto a = random_extension(c);
    auto b = random_extension(c);
    auto wa = mua::is_largely_embeddable(c, a);
    auto wb = mua::is_largely_embeddable(c, b);
    if (!wa.first || !wb.first) {
      t.expect(false, "constructed extension not recognized");
      continue;
    }
    auto d = mua::push_up_witness(c, a, *wa.second, b, *wb.second);
    t.expect(mua::is_largely_embeddable(a, d).first &&
                 mua::is_largely_embeddable(b, d).first,
             "push-up output embeds both sides largely");
  }
}

// ---- criterion 9: generator counts and embedding monotonicity ----------

void criterion9(Tally& t) {
  long tables = 0, sub_pairs = 0;
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> f(n, 0);
    while (true) {
      MonoAlg a(n, f);
      ++tables;
      t.expect(mua::mgen(a) == oracle::min_generators(a),
               "mgen equals the brute-force minimum");

      // every f-closed subset gives an embedded subalgebra
      const std::uint32_t full = (1u << n) - 1;
      const int whole_mgen = mua::mgen(a);
      for (std::uint32_t s = 1; s < full; ++s) {
        if (oracle::orbit_mask(a, s) != s) continue;
        std::vector<int> elems;
        for (int i = 0; i < n; ++i)
          if (s >> i & 1u) elems.push_back(i);
        ++sub_pairs;
        t.expect(mua::mgen(mua::induced_subalgebra(a, elems)) <= whole_mgen,
                 "embedded subalgebras never need more generators");
      }

      int d = n - 1;
      while (d >= 0 && ++f[d] == n) f[d--] = 0;
      if (d < 0) break;
    }
  }
  t.expect_eq(tables, 50069l, "tables scanned");
  t.expect(sub_pairs > 100000, "subalgebra pairs exercised");
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(Tally&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "worked-figure distance and permutation sums", criterion1},
      {2, "capped network BFS equals the exact pipeline", criterion2},
      {3, "subgroup table of the order-24 symmetric group", criterion3},
      {4, "8-element Boolean cube network", criterion4},
      {5, "order-12 alternating group network", criterion5},
      {6, "closed-form distances for subgroups of Q/Z", criterion6},
      {7, "metric and bound properties on random samples", criterion7},
      {8, "reduction coherence and push-up verification", criterion8},
      {9, "generator counts and embedding monotonicity", criterion9},
  };

  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    Tally tally;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(tally);
    } catch (const std::exception& e) {
      tally.expect(false, std::string("unhandled exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                start).count();
    std::ostringstream line;
    line << "criterion " << c.id << ": "
         << (tally.failures.empty() ? "PASS" : "FAIL") << "  " << c.title
         << "  [" << std::fixed;
    line.precision(2);
    line << secs << "s, " << tally.checks << " checks]";
    std::cout << line.str() << "\n";
    for (const auto& f : tally.failures) std::cout << "    " << f << "\n";
    if (!tally.failures.empty()) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" :
                std::to_string(failed) + " criteria failed") << "\n";
  return failed;
}
