#pragma once

#include "penv/bits.hpp"
#include "penv/eqrel.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace penv {

/// Total map between point index ranges.
using PointMap = std::vector<unsigned>;

/// A finite topological space on points 0..size-1.
///
/// Stored through the minimal open neighbourhood of every point. A finite
/// topology is closed under arbitrary intersections, so U_x (the
/// intersection of all opens containing x) is open, and a set is open iff it
/// contains U_x for each of its points. `opens()` enumerates the family.
class FinTop {
 public:
  FinTop() = default;

  static FinTop discrete(std::size_t n);
  static FinTop indiscrete(std::size_t n);
  /// Builds from neighbourhoods; they must form a consistent preorder
  /// (x ∈ U_x, y ∈ U_x ⇒ U_y ⊆ U_x). Throws InvalidSubset otherwise.
  static FinTop from_neighborhoods(std::vector<Subset> nbhd);

  std::size_t size() const { return nbhd_.size(); }
  Subset points() const { return full_set(size()); }
  Subset neighborhood(unsigned x) const { return nbhd_[x]; }
  const std::vector<Subset>& neighborhoods() const { return nbhd_; }

  bool is_open(Subset a) const;
  bool is_closed(Subset a) const { return is_open(points() & ~a); }
  bool is_discrete() const;

  /// Every open set, sorted ascending. Exponential in the worst case.
  std::vector<Subset> opens() const;

  bool operator==(const FinTop&) const = default;

 private:
  std::vector<Subset> nbhd_;
};

/// A family of subsets of {0..size-1}, sorted and duplicate-free.
struct SetFamily {
  std::size_t size = 0;
  std::vector<Subset> members;

  bool contains(Subset s) const;
  bool operator==(const SetFamily&) const = default;
};

/// Smallest topology in which every generator is open.
FinTop make_topology(std::size_t size, std::span<const Subset> generators);

Subset interior(const FinTop& t, Subset a);
Subset closure(const FinTop& t, Subset a);

/// Whether `a` is nowhere dense in the subspace `s`: its closure in `s` has
/// empty interior in `s`.
bool is_nowhere_dense_in(const FinTop& t, Subset a, Subset s);

/// Whether `a` is meager in the subspace `s`.
///
/// In a finite space a meager set is a finite union of nowhere dense sets,
/// subsets of nowhere dense sets are nowhere dense, and every set is the
/// union of its singletons, so `a` is meager iff each of its points is
/// nowhere dense in `s`. The empty set is meager everywhere, including in
/// the empty subspace.
bool is_meager_in(const FinTop& t, Subset a, Subset s);

struct Separation {
  bool t0 = false;
  bool t1 = false;
  bool t2 = false;
};

Separation separation(const FinTop& t);

/// Trace topology on `s`, re-indexed by the increasing order of `s`.
FinTop subspace(const FinTop& t, Subset s);
/// Product topology; point (i, j) has index i * b.size() + j.
FinTop product(const FinTop& a, const FinTop& b);
/// Discrete {0..k-1} times t; point (g, x) has index g * t.size() + x.
FinTop product_with_discrete(const FinTop& t, std::size_t k);
/// Quotient topology on the classes of `e`.
FinTop quotient(const FinTop& t, const EqRel& e);
/// Transports t along the bijection `relabel` (point x becomes relabel[x]).
FinTop transport(const FinTop& t, const PointMap& relabel);

/// Algebra of sets generated by the opens. In a finite space this is the
/// Borel σ-algebra; its atoms are the classes of points with equal
/// neighbourhoods.
SetFamily borel_algebra(const FinTop& t);
/// Atoms of the Borel algebra, in order of least member.
std::vector<Subset> borel_atoms(const FinTop& t);

Subset image(const PointMap& f, Subset a);
Subset preimage(const PointMap& f, Subset a, std::size_t src_size);

bool is_continuous(const PointMap& f, const FinTop& src, const FinTop& dst);
bool is_open_map(const PointMap& f, const FinTop& src, const FinTop& dst);
bool is_homeomorphism(const PointMap& f, const FinTop& src, const FinTop& dst);

/// In a finite space a countable intersection of opens is a finite one,
/// hence open, so G_δ coincides with open.
inline bool is_gdelta(const FinTop& t, Subset a) { return t.is_open(a); }

}  // namespace penv
