#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "errors.hpp"

namespace semiring_lab {

using Element = int;

/// Largest supported semiring order; element sets are single 64-bit words.
inline constexpr std::size_t max_order = 64;

/// A subset of the elements 0..order-1 of one particular semiring.
///
/// The owner is the fingerprint of the semiring the set was drawn from, so
/// that operations mixing sets of different semirings can be rejected.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::size_t order, std::uint64_t owner, std::uint64_t bits = 0)
      : bits_(bits), order_(static_cast<std::uint32_t>(order)), owner_(owner) {
    assert(order <= max_order);
    assert(order == max_order || (bits >> order) == 0);
  }

  static ElementSet of(std::size_t order, std::uint64_t owner, std::initializer_list<Element> xs) {
    ElementSet s(order, owner);
    for (auto x : xs) s.insert(x);
    return s;
  }

  static ElementSet full(std::size_t order, std::uint64_t owner) {
    return ElementSet(order, owner, order == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order) - 1);
  }

  std::uint64_t bits() const noexcept { return bits_; }
  std::size_t order() const noexcept { return order_; }
  std::uint64_t owner() const noexcept { return owner_; }

  bool contains(Element x) const noexcept {
    return x >= 0 && static_cast<std::size_t>(x) < order_ && ((bits_ >> x) & 1U);
  }
  void insert(Element x) {
    assert(x >= 0 && static_cast<std::size_t>(x) < order_);
    bits_ |= std::uint64_t{1} << x;
  }
  void erase(Element x) { bits_ &= ~(std::uint64_t{1} << x); }

  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const noexcept { return bits_ == 0; }
  bool is_full() const noexcept { return *this == full(order_, owner_); }

  bool subset_of(const ElementSet& other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  bool proper_subset_of(const ElementSet& other) const noexcept {
    return subset_of(other) && bits_ != other.bits_;
  }

  ElementSet operator&(const ElementSet& o) const { return {order_, owner_, bits_ & o.bits_}; }
  ElementSet operator|(const ElementSet& o) const { return {order_, owner_, bits_ | o.bits_}; }
  ElementSet operator-(const ElementSet& o) const { return {order_, owner_, bits_ & ~o.bits_}; }
  ElementSet complement() const { return full(order_, owner_) - *this; }

  /// Sorted element indices.
  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for (auto b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (auto b = bits_; b != 0; b &= b - 1) f(static_cast<Element>(std::countr_zero(b)));
  }

  bool operator==(const ElementSet& o) const noexcept {
    return bits_ == o.bits_ && order_ == o.order_ && owner_ == o.owner_;
  }
  /// Orders by bitset value, which is the deterministic order used throughout.
  std::strong_ordering operator<=>(const ElementSet& o) const noexcept {
    if (auto c = owner_ <=> o.owner_; c != 0) return c;
    return bits_ <=> o.bits_;
  }

 private:
  std::uint64_t bits_ = 0;
  std::uint32_t order_ = 0;
  std::uint64_t owner_ = 0;
};

inline void require_same_owner(const ElementSet& a, const ElementSet& b) {
  if (a.owner() != b.owner() || a.order() != b.order()) throw OwnerMismatch();
}

}  // namespace semiring_lab
