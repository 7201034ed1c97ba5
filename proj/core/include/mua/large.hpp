// Large embeddability for monounary algebras: A embeds onto a
// subalgebra A' of B such that A' plus one element generates B. For
// finite algebras this holds exactly when B is A plus a disjoint
// cycle-with-tail component, or A with one attached tail (possibly
// empty, i.e. isomorphic). Includes the constructive push-up.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mua/monoalg.hpp"

namespace mua {

struct LargeEmbedWitness {
  enum class Kind {
    DisjointMpl,  // target ≅ source ⊔ Mpl(n,l)
    Tail,         // target ≅ attach_tail(source, at, m); m = 0 means isomorphic
  };
  Kind kind = Kind::Tail;
  int n = 0, l = 0;            // DisjointMpl parameters
  int at = 0, m = 0;           // Tail parameters; at is a source label
  std::vector<int> embedding;  // source label -> target label, injective hom
  int gen = -1;                // target element with <image ∪ {gen}> = target
};

// Decides source ⊑ target; returns a checkable witness when true.
std::pair<bool, std::optional<LargeEmbedWitness>> is_largely_embeddable(
    const MonoAlg& source, const MonoAlg& target);

// Re-verifies a witness against the pair it claims to certify.
bool validate_large_witness(const MonoAlg& source, const MonoAlg& target,
                            const LargeEmbedWitness& w);

// Given witnesses for c ⊑ a and c ⊑ b, constructs D with a ⊑ D and
// b ⊑ D. Throws std::invalid_argument if a witness fails validation.
MonoAlg push_up_witness(const MonoAlg& c, const MonoAlg& a,
                        const LargeEmbedWitness& wa, const MonoAlg& b,
                        const LargeEmbedWitness& wb);

}  // namespace mua
