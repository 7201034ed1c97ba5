#include "mua/finite_algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "text_tokens.hpp"

namespace mua {

namespace {

// n^arity with an overflow guard; tables beyond this are rejected.
constexpr long kMaxTable = 1 << 24;

long table_size(int n, int arity) {
  long size = 1;
  for (int i = 0; i < arity; ++i) {
    size *= n;
    if (size > kMaxTable)
      throw std::invalid_argument("operation table too large");
  }
  return size;
}

}  // namespace

int FiniteAlgebra::apply(int op, const std::vector<int>& args) const {
  const Op& o = ops[op];
  long idx = 0;
  for (int a : args) idx = idx * n + a;
  return o.table[idx];
}

bool FiniteAlgebra::same_signature(const FiniteAlgebra& other) const {
  if (ops.size() != other.ops.size()) return false;
  for (size_t i = 0; i < ops.size(); ++i)
    if (ops[i].arity != other.ops[i].arity) return false;
  return true;
}

FiniteAlgebra parse_fa(const std::string& text) {
  using detail::parse_nat;
  using detail::where;
  auto toks = detail::tokenize(text);
  size_t pos = 0;
  auto need = [&](const char* what) -> const detail::Token& {
    if (pos >= toks.size())
      throw ParseError("unexpected end of input: missing " +
                       std::string(what));
    return toks[pos++];
  };
  const auto& kw = need("'n <size>' header");
  if (kw.text != "n")
    throw ParseError(where(kw) + ": expected 'n', got '" + kw.text + "'");
  FiniteAlgebra fa;
  fa.n = parse_nat(need("universe size"), "universe size");
  if (fa.n < 1) throw ParseError("universe size must be >= 1");
  while (pos < toks.size()) {
    const auto& op_kw = need("'op <arity>'");
    if (op_kw.text != "op")
      throw ParseError(where(op_kw) + ": expected 'op', got '" + op_kw.text +
                       "'");
    FiniteAlgebra::Op op;
    op.arity = parse_nat(need("arity"), "arity");
    long size = table_size(fa.n, op.arity);
    op.table.reserve(size);
    for (long i = 0; i < size; ++i) {
      const auto& t = need("table entry");
      int v = parse_nat(t, "table entry");
      if (v >= fa.n)
        throw ParseError(where(t) + ": entry " + std::to_string(v) +
                         " out of range [0," + std::to_string(fa.n) + ")");
      op.table.push_back(v);
    }
    fa.ops.push_back(std::move(op));
  }
  return fa;
}

std::vector<int> closure(const FiniteAlgebra& fa, const std::vector<int>& x) {
  std::vector<char> in(fa.n, 0);
  std::vector<int> members;
  auto add = [&](int v) {
    if (!in[v]) {
      in[v] = 1;
      members.push_back(v);
    }
  };
  for (int v : x) {
    if (v < 0 || v >= fa.n)
      throw std::invalid_argument("closure: element out of range");
    add(v);
  }
  for (const auto& op : fa.ops)
    if (op.arity == 0) add(op.table[0]);
  // fixpoint: apply every operation to all argument tuples of known
  // members until nothing new appears
  size_t settled = 0;
  while (settled < members.size()) {
    settled = members.size();
    for (size_t oi = 0; oi < fa.ops.size(); ++oi) {
      const auto& op = fa.ops[oi];
      if (op.arity == 0) continue;
      std::vector<int> idx(op.arity, 0);
      std::vector<int> args(op.arity);
      const int k = static_cast<int>(members.size());
      while (true) {
        for (int i = 0; i < op.arity; ++i) args[i] = members[idx[i]];
        add(fa.apply(static_cast<int>(oi), args));
        int d = op.arity - 1;
        while (d >= 0 && ++idx[d] == k) idx[d--] = 0;
        if (d < 0) break;
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<SubUniverse> enumerate_subalgebras(const FiniteAlgebra& fa) {
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> queue;
  auto offer = [&](std::vector<int> s) {
    if (s.empty()) return;
    if (found.insert(s).second) queue.push_back(std::move(s));
  };
  offer(closure(fa, {}));
  for (int x = 0; x < fa.n; ++x) offer(closure(fa, {x}));
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    std::vector<int> base = queue[qi];  // copy: queue may reallocate
    std::vector<char> in(fa.n, 0);
    for (int v : base) in[v] = 1;
    for (int y = 0; y < fa.n; ++y) {
      if (in[y]) continue;
      std::vector<int> seed = base;
      seed.push_back(y);
      offer(closure(fa, seed));
    }
  }
  std::vector<SubUniverse> out;
  out.reserve(found.size());
  for (const auto& s : found) out.push_back({&fa, s});
  std::sort(out.begin(), out.end(), [](const SubUniverse& a, const SubUniverse& b) {
    if (a.elements.size() != b.elements.size())
      return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  return out;
}

bool is_large_subalgebra(const SubUniverse& sub, const SubUniverse& amb) {
  if (sub.parent != amb.parent)
    throw std::invalid_argument("is_large_subalgebra: different parents");
  if (!std::includes(amb.elements.begin(), amb.elements.end(),
                     sub.elements.begin(), sub.elements.end()))
    throw std::invalid_argument("is_large_subalgebra: not nested");
  const FiniteAlgebra& fa = *sub.parent;
  for (int b : amb.elements) {
    std::vector<int> gens = sub.elements;
    gens.push_back(b);
    if (closure(fa, gens) == amb.elements) return true;
  }
  return false;
}

FiniteAlgebra restrict_algebra(const FiniteAlgebra& fa,
                               const std::vector<int>& closed) {
  std::vector<int> new_label(fa.n, -1);
  for (size_t i = 0; i < closed.size(); ++i) new_label[closed[i]] = static_cast<int>(i);
  FiniteAlgebra out;
  out.n = static_cast<int>(closed.size());
  for (size_t oi = 0; oi < fa.ops.size(); ++oi) {
    const auto& op = fa.ops[oi];
    FiniteAlgebra::Op r;
    r.arity = op.arity;
    long size = table_size(out.n, op.arity);
    r.table.resize(size);
    std::vector<int> idx(op.arity, 0);
    std::vector<int> args(op.arity);
    for (long flat = 0; flat < size; ++flat) {
      for (int i = 0; i < op.arity; ++i) args[i] = closed[idx[i]];
      int img = fa.apply(static_cast<int>(oi), args);
      if (new_label[img] < 0)
        throw std::invalid_argument("restrict_algebra: subset not closed");
      r.table[flat] = new_label[img];
      int d = op.arity - 1;
      while (d >= 0 && ++idx[d] == out.n) idx[d--] = 0;
    }
    out.ops.push_back(std::move(r));
  }
  return out;
}

namespace {

// size of the singleton-generated subalgebra; cheap iso invariant
// (element order, for groups)
std::vector<int> orbit_sizes(const FiniteAlgebra& fa) {
  std::vector<int> inv(fa.n);
  for (int x = 0; x < fa.n; ++x)
    inv[x] = static_cast<int>(closure(fa, {x}).size());
  return inv;
}

// smallest generating tuple, by size then lexicographically
std::vector<int> generating_tuple(const FiniteAlgebra& fa) {
  if (static_cast<int>(closure(fa, {}).size()) == fa.n) return {};
  std::vector<int> tuple;
  for (int k = 1; k <= fa.n; ++k) {
    tuple.assign(k, 0);
    std::vector<int> comb(k);
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
      if (static_cast<int>(closure(fa, comb).size()) == fa.n) return comb;
      int d = k - 1;
      while (d >= 0 && comb[d] == fa.n - k + d) --d;
      if (d < 0) break;
      ++comb[d];
      for (int i = d + 1; i < k; ++i) comb[i] = comb[i - 1] + 1;
    }
  }
  throw std::logic_error("generating_tuple: universe does not generate itself");
}

// extends generator images to a full homomorphism by parallel closure;
// returns true iff it completes to a bijection
bool extend_to_isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b,
                           const std::vector<int>& gens,
                           const std::vector<int>& images) {
  std::vector<int> map(a.n, -1);
  std::vector<char> used(b.n, 0);
  std::vector<int> known;
  auto assign = [&](int x, int y) {
    if (map[x] >= 0) return map[x] == y;
    if (used[y]) return false;
    map[x] = y;
    used[y] = 1;
    known.push_back(x);
    return true;
  };
  for (size_t i = 0; i < gens.size(); ++i)
    if (!assign(gens[i], images[i])) return false;
  size_t settled = 0;
  while (settled < known.size()) {
    settled = known.size();
    for (size_t oi = 0; oi < a.ops.size(); ++oi) {
      const auto& op = a.ops[oi];
      std::vector<int> idx(op.arity, 0);
      std::vector<int> args_a(op.arity), args_b(op.arity);
      const int k = static_cast<int>(known.size());
      if (op.arity > 0 && k == 0) continue;
      while (true) {
        for (int i = 0; i < op.arity; ++i) {
          args_a[i] = known[idx[i]];
          args_b[i] = map[args_a[i]];
        }
        if (!assign(a.apply(static_cast<int>(oi), args_a),
                    b.apply(static_cast<int>(oi), args_b)))
          return false;
        int d = op.arity - 1;
        while (d >= 0 && ++idx[d] == k) idx[d--] = 0;
        if (d < 0) break;
      }
    }
  }
  return static_cast<int>(known.size()) == a.n;  // gens generate a, so full
}

}  // namespace

bool fa_isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (!a.same_signature(b))
    throw std::invalid_argument("fa_isomorphic: signatures differ");
  if (a.n != b.n) return false;
  std::vector<int> inv_a = orbit_sizes(a), inv_b = orbit_sizes(b);
  {
    std::vector<int> sa = inv_a, sb = inv_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> gens = generating_tuple(a);
  const int k = static_cast<int>(gens.size());
  if (k == 0) return extend_to_isomorphism(a, b, {}, {});
  std::vector<int> images(k, 0);
  while (true) {
    bool plausible = true;
    for (int i = 0; i < k && plausible; ++i)
      plausible = inv_a[gens[i]] == inv_b[images[i]];
    if (plausible && extend_to_isomorphism(a, b, gens, images)) return true;
    int d = k - 1;
    while (d >= 0 && ++images[d] == b.n) images[d--] = 0;
    if (d < 0) return false;
  }
}

bool fa_isomorphic(const SubUniverse& a, const SubUniverse& b) {
  if (a.elements.size() != b.elements.size()) return false;
  return fa_isomorphic(restrict_algebra(*a.parent, a.elements),
                       restrict_algebra(*b.parent, b.elements));
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<std::vector<int>> even_permutations(int n) {
  std::vector<std::vector<int>> out;
  for (auto& p : all_permutations(n)) {
    int inversions = 0;
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = i + 1; j < p.size(); ++j)
        if (p[i] > p[j]) ++inversions;
    if (inversions % 2 == 0) out.push_back(p);
  }
  return out;
}

namespace {

FiniteAlgebra group_from_permutations(const std::vector<std::vector<int>>& perms,
                                      int degree) {
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);
  const int N = static_cast<int>(perms.size());
  FiniteAlgebra g;
  g.n = N;
  FiniteAlgebra::Op mult{2, std::vector<int>(static_cast<size_t>(N) * N)};
  FiniteAlgebra::Op inverse{1, std::vector<int>(N)};
  FiniteAlgebra::Op identity{0, {0}};
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  identity.table[0] = index.at(id);
  std::vector<int> tmp(degree);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      for (int x = 0; x < degree; ++x) tmp[x] = perms[i][perms[j][x]];
      mult.table[static_cast<size_t>(i) * N + j] = index.at(tmp);
    }
    for (int x = 0; x < degree; ++x) tmp[perms[i][x]] = x;
    inverse.table[i] = index.at(tmp);
  }
  g.ops = {std::move(mult), std::move(inverse), std::move(identity)};
  return g;
}

}  // namespace

FiniteAlgebra symmetric_group(int n) {
  if (n < 1 || n > 5)
    throw std::invalid_argument("symmetric_group: supported range is 1..5");
  return group_from_permutations(all_permutations(n), n);
}

FiniteAlgebra alternating_group(int n) {
  if (n < 1 || n > 5)
    throw std::invalid_argument("alternating_group: supported range is 1..5");
  return group_from_permutations(even_permutations(n), n);
}

FiniteAlgebra boolean_algebra(int atoms) {
  if (atoms < 0 || atoms > 4)
    throw std::invalid_argument("boolean_algebra: supported range is 0..4");
  const int N = 1 << atoms;
  const int full = N - 1;
  FiniteAlgebra fa;
  fa.n = N;
  FiniteAlgebra::Op meet{2, std::vector<int>(static_cast<size_t>(N) * N)};
  FiniteAlgebra::Op join{2, std::vector<int>(static_cast<size_t>(N) * N)};
  FiniteAlgebra::Op compl_{1, std::vector<int>(N)};
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      meet.table[static_cast<size_t>(i) * N + j] = i & j;
      join.table[static_cast<size_t>(i) * N + j] = i | j;
    }
    compl_.table[i] = full ^ i;
  }
  fa.ops = {std::move(meet), std::move(join), std::move(compl_),
            {0, {0}}, {0, {full}}};
  return fa;
}

FiniteAlgebra cyclic_group(int n) {
  if (n < 1) throw std::invalid_argument("cyclic_group: order must be >= 1");
  FiniteAlgebra fa;
  fa.n = n;
  FiniteAlgebra::Op add{2, std::vector<int>(static_cast<size_t>(n) * n)};
  FiniteAlgebra::Op neg{1, std::vector<int>(n)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      add.table[static_cast<size_t>(i) * n + j] = (i + j) % n;
    neg.table[i] = (n - i) % n;
  }
  fa.ops = {std::move(add), std::move(neg), {0, {0}}};
  return fa;
}

}  // namespace mua
