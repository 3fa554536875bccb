#pragma once

#include "penv/bits.hpp"

#include <cstddef>
#include <vector>

namespace penv {

using Element = unsigned;
/// A set of group elements. Every subset of a finite discrete group is open.
using ElementSet = Subset;

/// A finite group given by a validated Cayley table. Elements are 0..order-1.
///
/// The topology is always discrete, the only T0 group topology on a finite
/// set, so the group is Polish and "open V" means "any subset".
class FiniteGroup {
 public:
  std::size_t order() const { return order_; }
  Element identity() const { return id_; }
  Element mul(Element a, Element b) const { return mul_[a * order_ + b]; }
  Element inv(Element a) const { return inv_[a]; }

  ElementSet elements() const { return full_set(order_); }
  std::vector<std::vector<Element>> table() const;

  /// Right translate: {g·h : g ∈ s}.
  ElementSet right_mul(ElementSet s, Element h) const;
  bool is_subgroup(ElementSet h) const;

  bool operator==(const FiniteGroup&) const = default;

  friend FiniteGroup make_group(const std::vector<std::vector<Element>>& table);

 private:
  std::size_t order_ = 0;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  Element id_ = 0;
};

/// Validates a Cayley table. Throws NotAssociative, NoIdentity or NoInverse
/// naming the witnessing triple/element; InvalidOrder for a malformed table.
FiniteGroup make_group(const std::vector<std::vector<Element>>& table);

/// ℤ_k with (a + b) mod k.
FiniteGroup cyclic(std::size_t k);

}  // namespace penv
