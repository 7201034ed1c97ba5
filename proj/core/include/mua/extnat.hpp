// Naturals extended with an infinity marker. Shared value type for
// distances (network + monounary pipeline) and choice-sequence entries.
#pragma once

#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>

namespace mua {

class ExtNat {
public:
  constexpr ExtNat() : value_(0), inf_(false) {}
  constexpr ExtNat(std::uint64_t v) : value_(v), inf_(false) {}

  static constexpr ExtNat infinity() {
    ExtNat e;
    e.inf_ = true;
    return e;
  }

  constexpr bool is_infinite() const { return inf_; }
  constexpr bool is_finite() const { return !inf_; }

  // Finite value accessor; throws on infinity.
  std::uint64_t finite() const {
    if (inf_) throw std::logic_error("ExtNat: finite() on infinity");
    return value_;
  }

  friend constexpr bool operator==(ExtNat a, ExtNat b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.value_ == b.value_);
  }
  friend constexpr bool operator!=(ExtNat a, ExtNat b) { return !(a == b); }

  // Total order with n < inf for every finite n.
  friend constexpr bool operator<(ExtNat a, ExtNat b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.value_ < b.value_;
  }
  friend constexpr bool operator<=(ExtNat a, ExtNat b) { return a < b || a == b; }
  friend constexpr bool operator>(ExtNat a, ExtNat b) { return b < a; }
  friend constexpr bool operator>=(ExtNat a, ExtNat b) { return b <= a; }

  // Addition absorbs infinity.
  friend constexpr ExtNat operator+(ExtNat a, ExtNat b) {
    if (a.inf_ || b.inf_) return infinity();
    return ExtNat(a.value_ + b.value_);
  }

  std::string str() const { return inf_ ? "inf" : std::to_string(value_); }

private:
  std::uint64_t value_;
  bool inf_;
};

// Generator distances take values in the extended naturals.
using Distance = ExtNat;

}  // namespace mua
