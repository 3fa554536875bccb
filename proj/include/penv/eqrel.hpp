#pragma once

#include "penv/bits.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace penv {

/// An equivalence relation on {0..size-1}, stored as class ids.
///
/// Class ids are canonical: classes are numbered in order of their least
/// member, so equal relations compare equal.
class EqRel {
 public:
  EqRel() = default;

  static EqRel identity(std::size_t n);
  static EqRel from_class_ids(const std::vector<unsigned>& ids);
  /// The relation given by `related`, or nullopt if it is not an equivalence.
  static std::optional<EqRel> from_relation(std::size_t n,
                                            const std::function<bool(unsigned, unsigned)>& related);

  std::size_t size() const { return class_id_.size(); }
  std::size_t class_count() const { return reps_.size(); }
  unsigned class_of(unsigned i) const { return class_id_[i]; }
  const std::vector<unsigned>& class_ids() const { return class_id_; }
  bool related(unsigned a, unsigned b) const { return class_id_[a] == class_id_[b]; }
  /// Least member of class c.
  unsigned rep(unsigned c) const { return reps_[c]; }
  const std::vector<unsigned>& reps() const { return reps_; }
  /// Members of class c; requires size() <= 64.
  Subset members(unsigned c) const;
  /// Union of the classes meeting s; requires size() <= 64.
  Subset saturate(Subset s) const;
  /// Class ids of the members of s.
  Subset classes_of(Subset s) const;
  /// Points whose class lies in cs.
  Subset preimage(Subset cs) const;

  bool operator==(const EqRel&) const = default;

 private:
  std::vector<unsigned> class_id_;
  std::vector<unsigned> reps_;
};

/// Union-find with path halving, used to assemble relations from pairs.
class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n);
  unsigned find(unsigned x);
  void unite(unsigned a, unsigned b);
  EqRel relation();

 private:
  std::vector<unsigned> parent_;
};

}  // namespace penv
