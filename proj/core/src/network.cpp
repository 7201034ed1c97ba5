#include "mua/network.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace mua {

namespace {

constexpr int kEnumHardCap = 8;      // n^n table scan
constexpr int kNetworkHardCap = 14;  // successor-closure build

std::vector<std::vector<std::pair<int, int>>> weighted_adjacency(
    const Network& net) {
  std::vector<std::vector<std::pair<int, int>>> adj(net.size());
  for (auto [u, v] : net.red_edges) {
    adj[u].push_back({v, 0});
    adj[v].push_back({u, 0});
  }
  for (auto [u, v] : net.blue_edges) {
    adj[u].push_back({v, 1});
    adj[v].push_back({u, 1});
  }
  return adj;
}

std::vector<std::int64_t> zero_one_bfs(
    const std::vector<std::vector<std::pair<int, int>>>& adj, int source) {
  std::vector<std::int64_t> dist(adj.size(), -1);
  std::deque<int> dq{source};
  dist[source] = 0;
  while (!dq.empty()) {
    int u = dq.front();
    dq.pop_front();
    for (auto [v, w] : adj[u]) {
      std::int64_t nd = dist[u] + w;
      if (dist[v] < 0 || nd < dist[v]) {
        dist[v] = nd;
        if (w == 0)
          dq.push_front(v);
        else
          dq.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace

Distance network_distance(const Network& net, int u, int v) {
  if (u < 0 || u >= net.size() || v < 0 || v >= net.size())
    throw std::invalid_argument("network_distance: unknown vertex");
  auto dist = zero_one_bfs(weighted_adjacency(net), u);
  return dist[v] < 0 ? Distance::infinity() : Distance(dist[v]);
}

Distance component_diameter(const Network& net, int start) {
  if (start < 0 || start >= net.size())
    throw std::invalid_argument("component_diameter: unknown vertex");
  auto adj = weighted_adjacency(net);
  auto from_start = zero_one_bfs(adj, start);
  std::int64_t best = 0;
  for (int v = 0; v < net.size(); ++v) {
    if (from_start[v] < 0) continue;  // other component
    auto d = zero_one_bfs(adj, v);
    for (int w = 0; w < net.size(); ++w)
      if (from_start[w] >= 0) best = std::max(best, d[w]);
  }
  return Distance(best);
}

std::string export_dot(const Network& net) {
  std::string out = "graph network {\n";
  for (int v = 0; v < net.size(); ++v)
    out += "  v" + std::to_string(v) + " [label=\"" + net.labels[v] + "\"];\n";
  for (auto [u, v] : net.red_edges)
    out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) +
           " [style=dashed,color=red];\n";
  for (auto [u, v] : net.blue_edges)
    out += "  v" + std::to_string(u) + " -- v" + std::to_string(v) +
           " [color=blue];\n";
  out += "}\n";
  return out;
}

SubalgebraNetwork build_subalgebra_network(const FiniteAlgebra& fa) {
  SubalgebraNetwork sn;
  sn.algebra = std::make_shared<FiniteAlgebra>(fa);
  sn.vertices = enumerate_subalgebras(*sn.algebra);
  const int V = static_cast<int>(sn.vertices.size());

  // iso classes, tags in first-seen order over the sorted vertex list
  sn.iso_class.assign(V, -1);
  int next_class = 0;
  for (int i = 0; i < V; ++i) {
    if (sn.iso_class[i] >= 0) continue;
    sn.iso_class[i] = next_class;
    for (int j = i + 1; j < V; ++j)
      if (sn.iso_class[j] < 0 &&
          sn.vertices[j].elements.size() == sn.vertices[i].elements.size() &&
          fa_isomorphic(sn.vertices[i], sn.vertices[j]))
        sn.iso_class[j] = next_class;
    ++next_class;
  }

  // nested proper pairs with a large-subalgebra relation
  std::vector<std::vector<char>> large_in(V, std::vector<char>(V, 0));
  for (int w = 0; w < V; ++w)
    for (int v = 0; v < V; ++v) {
      if (w == v) continue;
      if (sn.vertices[w].elements.size() >= sn.vertices[v].elements.size())
        continue;
      if (!std::includes(sn.vertices[v].elements.begin(),
                         sn.vertices[v].elements.end(),
                         sn.vertices[w].elements.begin(),
                         sn.vertices[w].elements.end()))
        continue;
      large_in[w][v] = is_large_subalgebra(sn.vertices[w], sn.vertices[v]);
    }

  sn.large_in_ambient.assign(V, 0);
  for (int v = 0; v < V; ++v)
    sn.large_in_ambient[v] = v == V - 1 || large_in[v][V - 1];

  for (int u = 0; u < V; ++u)
    for (int v = u + 1; v < V; ++v) {
      if (sn.iso_class[u] == sn.iso_class[v]) {
        sn.net.red_edges.push_back({u, v});
        continue;
      }
      // blue iff a copy of the smaller is a proper large subalgebra of
      // the larger
      int small = u, big = v;
      if (sn.vertices[small].elements.size() >
          sn.vertices[big].elements.size())
        std::swap(small, big);
      if (sn.vertices[small].elements.size() ==
          sn.vertices[big].elements.size())
        continue;
      bool blue = false;
      for (int w = 0; w < V && !blue; ++w)
        blue = sn.iso_class[w] == sn.iso_class[small] && large_in[w][big];
      if (blue) sn.net.blue_edges.push_back({u, v});
    }

  sn.net.labels.reserve(V);
  for (int v = 0; v < V; ++v)
    sn.net.labels.push_back(std::to_string(sn.vertices[v].elements.size()) +
                            ":c" + std::to_string(sn.iso_class[v]));
  return sn;
}

std::vector<MonoAlg> enumerate_monounary(int cap) {
  if (cap < 1) throw std::invalid_argument("enumerate_monounary: cap must be >= 1");
  if (cap > kEnumHardCap)
    throw std::invalid_argument(
        "enumerate_monounary: cap " + std::to_string(cap) +
        " exceeds the hard limit " + std::to_string(kEnumHardCap) +
        " (n^n table scan)");
  std::vector<MonoAlg> out;
  std::set<std::string> seen;
  for (int n = 1; n <= cap; ++n) {
    std::vector<int> f(n, 0);
    while (true) {
      MonoAlg a(n, f);
      CanonicalForm form = canonical_form(a);
      if (seen.insert(form.code.bytes).second)
        out.push_back(relabel(a, form.to_canonical));
      int d = n - 1;
      while (d >= 0 && ++f[d] == n) f[d--] = 0;
      if (d < 0) break;
    }
  }
  std::sort(out.begin(), out.end(), [](const MonoAlg& a, const MonoAlg& b) {
    if (a.n != b.n) return a.n < b.n;
    return canonical_code(a) < canonical_code(b);
  });
  return out;
}

std::optional<int> MonounaryNetwork::find(const MonoAlg& a) const {
  CanonicalCode code = canonical_code(a);
  for (size_t i = 0; i < codes.size(); ++i)
    if (codes[i] == code) return static_cast<int>(i);
  return std::nullopt;
}

MonounaryNetwork build_monounary_network(int cap) {
  if (cap < 1)
    throw std::invalid_argument("build_monounary_network: cap must be >= 1");
  if (cap > kNetworkHardCap)
    throw std::invalid_argument(
        "build_monounary_network: cap " + std::to_string(cap) +
        " exceeds the hard limit " + std::to_string(kNetworkHardCap));

  MonounaryNetwork mn;
  mn.cap = cap;
  std::unordered_map<std::string, int> index;
  // ordered worklist: successors are strictly larger, so processing in
  // insertion order per size is a valid closure order
  std::vector<std::vector<int>> by_size(cap + 1);
  auto intern = [&](const MonoAlg& a) {
    CanonicalForm form = canonical_form(a);
    auto it = index.find(form.code.bytes);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(mn.reps.size());
    index.emplace(form.code.bytes, id);
    mn.reps.push_back(relabel(a, form.to_canonical));
    mn.codes.push_back(std::move(form.code));
    by_size[a.n].push_back(id);
    return id;
  };

  for (int n = 1; n <= cap; ++n) intern(make_mpl(n, 0));

  std::vector<std::pair<int, int>> edges;
  for (int s = 1; s <= cap; ++s) {
    for (size_t qi = 0; qi < by_size[s].size(); ++qi) {
      int uid = by_size[s][qi];
      MonoAlg u = mn.reps[uid];  // copy: reps may reallocate
      std::set<int> succ;
      for (int extra = 1; extra <= cap - s; ++extra) {
        for (int n = 1; n <= extra; ++n)
          succ.insert(intern(disjoint_union(u, make_mpl(n, extra - n))));
        for (int at = 0; at < s; ++at)
          succ.insert(intern(attach_tail(u, at, extra)));
      }
      for (int vid : succ) edges.push_back({std::min(uid, vid), std::max(uid, vid)});
    }
  }

  // reorder vertices by (size, code) for deterministic output
  std::vector<int> order(mn.reps.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (mn.reps[a].n != mn.reps[b].n) return mn.reps[a].n < mn.reps[b].n;
    return mn.codes[a] < mn.codes[b];
  });
  std::vector<int> rank(order.size());
  for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  {
    std::vector<MonoAlg> reps;
    std::vector<CanonicalCode> codes;
    reps.reserve(order.size());
    codes.reserve(order.size());
    for (int old : order) {
      reps.push_back(std::move(mn.reps[old]));
      codes.push_back(std::move(mn.codes[old]));
    }
    mn.reps = std::move(reps);
    mn.codes = std::move(codes);
  }
  for (auto& [u, v] : edges) {
    u = rank[u];
    v = rank[v];
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  mn.net.blue_edges = std::move(edges);
  mn.net.labels.reserve(mn.reps.size());
  for (size_t i = 0; i < mn.reps.size(); ++i)
    mn.net.labels.push_back(std::to_string(mn.reps[i].n) + ":c" +
                            std::to_string(i));

  // CSR adjacency for repeated BFS
  const int V = static_cast<int>(mn.reps.size());
  std::vector<int> degree(V, 0);
  for (auto [u, v] : mn.net.blue_edges) {
    ++degree[u];
    ++degree[v];
  }
  mn.adj_start.assign(V + 1, 0);
  for (int v = 0; v < V; ++v) mn.adj_start[v + 1] = mn.adj_start[v] + degree[v];
  mn.adj.assign(mn.adj_start[V], 0);
  std::vector<int> fill = mn.adj_start;
  for (auto [u, v] : mn.net.blue_edges) {
    mn.adj[fill[u]++] = v;
    mn.adj[fill[v]++] = u;
  }
  return mn;
}

std::vector<std::int64_t> distances_within_cap(const MonounaryNetwork& net,
                                               int source, int cap) {
  const int V = static_cast<int>(net.reps.size());
  if (source < 0 || source >= V)
    throw std::invalid_argument("distances_within_cap: unknown vertex");
  std::vector<std::int64_t> dist(V, -1);
  if (net.reps[source].n > cap) return dist;
  // all edges are blue, so 0-1 BFS degenerates to plain BFS
  std::deque<int> dq{source};
  dist[source] = 0;
  while (!dq.empty()) {
    int u = dq.front();
    dq.pop_front();
    for (int i = net.adj_start[u]; i < net.adj_start[u + 1]; ++i) {
      int v = net.adj[i];
      if (net.reps[v].n > cap || dist[v] >= 0) continue;
      dist[v] = dist[u] + 1;
      dq.push_back(v);
    }
  }
  return dist;
}

}  // namespace mua
