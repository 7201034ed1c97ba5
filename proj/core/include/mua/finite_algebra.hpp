// Generic finite algebras given by operation tables: closure,
// subalgebra enumeration, large-subalgebra test, isomorphism by
// generator mapping, and builtin group/Boolean-algebra constructors.
#pragma once

#include <string>
#include <vector>

#include "mua/monoalg.hpp"  // ParseError

namespace mua {

struct FiniteAlgebra {
  struct Op {
    int arity = 1;
    std::vector<int> table;  // row-major, size n^arity
  };
  int n = 0;
  std::vector<Op> ops;

  // args.size() must equal ops[op].arity
  int apply(int op, const std::vector<int>& args) const;
  bool same_signature(const FiniteAlgebra& other) const;
};

// .fa format: '#' comments; "n <size>"; per operation "op <arity>"
// followed by n^arity table entries in row-major order.
FiniteAlgebra parse_fa(const std::string& text);

// A subset of a parent algebra closed under all its operations; sorted.
struct SubUniverse {
  const FiniteAlgebra* parent = nullptr;
  std::vector<int> elements;
};

// Least superset of x closed under every operation (constants included).
std::vector<int> closure(const FiniteAlgebra& fa, const std::vector<int>& x);

// All non-empty closed subsets: singleton/constant closures extended one
// outside element at a time until saturation; sorted by (size, elements).
std::vector<SubUniverse> enumerate_subalgebras(const FiniteAlgebra& fa);

// True iff some b in amb satisfies <sub ∪ {b}> = amb (b may lie in sub,
// so sub = amb qualifies). Throws if sub is not nested in amb.
bool is_large_subalgebra(const SubUniverse& sub, const SubUniverse& amb);

// The subalgebra as an algebra in its own right, elements relabelled to
// 0..k-1 in ascending order of original label.
FiniteAlgebra restrict_algebra(const FiniteAlgebra& fa,
                               const std::vector<int>& closed);

bool fa_isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b);
bool fa_isomorphic(const SubUniverse& a, const SubUniverse& b);

// Builtins (group signature: ·, ⁻¹, e; Boolean signature: ∧, ∨, ¬, 0, 1).
// Group elements are permutations ordered lexicographically by one-line
// notation; Boolean elements are atom bitmasks 0..2^k-1.
FiniteAlgebra symmetric_group(int n);    // n <= 5
FiniteAlgebra alternating_group(int n);  // n <= 5
FiniteAlgebra boolean_algebra(int atoms);  // atoms <= 4
FiniteAlgebra cyclic_group(int n);

// Element universes backing the group builtins, in table order.
std::vector<std::vector<int>> all_permutations(int n);
std::vector<std::vector<int>> even_permutations(int n);

}  // namespace mua
