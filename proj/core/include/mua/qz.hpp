// Subgroups of Q/Z as choice sequences: one extended natural per prime
// position, stored as a default value plus finitely many exceptions.
// Equivalence compares infinity patterns and finite difference sets;
// the generator distance collapses to 0, 1, 2 or infinity.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mua/extnat.hpp"
#include "mua/monoalg.hpp"  // ParseError

namespace mua {

struct ChoiceSeq {
  ExtNat def;
  // sorted by position; values differ from def (normalized)
  std::vector<std::pair<int, ExtNat>> exceptions;

  ExtNat at(int pos) const;
  friend bool operator==(const ChoiceSeq& a, const ChoiceSeq& b) {
    return a.def == b.def && a.exceptions == b.exceptions;
  }
};

// Normalizes: drops entries equal to the default, sorts by position.
// Throws std::invalid_argument on duplicate positions.
ChoiceSeq make_choice_seq(ExtNat def,
                          std::vector<std::pair<int, ExtNat>> entries);

// Syntax: default=<nat|inf>[;<idx>:<nat|inf>,...]
ChoiceSeq parse_choice_seq(const std::string& spec);

// Same infinity pattern and finitely many differences.
bool seq_equiv(const ChoiceSeq& k, const ChoiceSeq& k2);

// seq_equiv plus pointwise <= at every position.
bool seq_preceq(const ChoiceSeq& k, const ChoiceSeq& k2);

// 0 equal; 1 comparable and unequal; 2 equivalent but incomparable both
// ways; infinity otherwise.
Distance qz_distance(const ChoiceSeq& k, const ChoiceSeq& k2);

// Diameter of the connected component of <k>: by the number c of finite
// positions, 0 for c=0, 1 for c=1, else 2.
Distance qz_diameter(const ChoiceSeq& k);

}  // namespace mua
