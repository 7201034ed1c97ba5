// Relabeling-invariant codes for monounary algebras: AHU-style rooted
// in-tree codes around each cycle, lexicographically minimal cycle
// rotation per component, sorted multiset of component codes. Equal
// codes iff isomorphic; the canonical permutation makes isomorphisms
// explicit.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mua/monoalg.hpp"

namespace mua {

struct CanonicalCode {
  std::string bytes;    // component codes wrapped in [ ], sorted, concatenated
  int components = 0;   // distinguishes connected from multi-component codes

  friend bool operator==(const CanonicalCode& a, const CanonicalCode& b) {
    return a.bytes == b.bytes;
  }
  friend bool operator!=(const CanonicalCode& a, const CanonicalCode& b) {
    return !(a == b);
  }
  friend bool operator<(const CanonicalCode& a, const CanonicalCode& b) {
    return a.bytes < b.bytes;
  }
};

struct CanonicalForm {
  CanonicalCode code;
  // old label -> canonical position; equal positions across two algebras
  // with equal codes define an isomorphism
  std::vector<int> to_canonical;
};

CanonicalCode canonical_code(const MonoAlg& a);
CanonicalForm canonical_form(const MonoAlg& a);

bool is_isomorphic(const MonoAlg& a, const MonoAlg& b);

// Element map a -> b witnessing isomorphism, if one exists.
std::optional<std::vector<int>> find_isomorphism(const MonoAlg& a,
                                                 const MonoAlg& b);

// Relabel by a permutation: element i of the result is perm^{-1}(i) of a.
MonoAlg relabel(const MonoAlg& a, const std::vector<int>& perm);

}  // namespace mua
