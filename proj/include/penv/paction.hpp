#pragma once

#include "penv/bits.hpp"
#include "penv/eqrel.hpp"
#include "penv/group.hpp"
#include "penv/report.hpp"
#include "penv/topology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace penv {

inline constexpr unsigned kUndefined = ~0U;

/// A partial point map over the whole carrier; kUndefined off its domain.
using PartialMap = std::vector<unsigned>;

/// A (global) action u of a finite group on a finite space: maps[g] = u_g.
struct TotalAction {
  FiniteGroup group;
  FinTop space;
  std::vector<PointMap> maps;
};

/// Empty optional iff `u` is a continuous action; otherwise a witness.
std::optional<std::string> action_violation(const TotalAction& u);

/// Dense encoding of pairs (a, b) with b < inner as a * inner + b.
struct PairIndex {
  std::size_t inner = 0;
  unsigned encode(unsigned a, unsigned b) const { return static_cast<unsigned>(a * inner + b); }
  unsigned first(unsigned i) const { return static_cast<unsigned>(i / inner); }
  unsigned second(unsigned i) const { return static_cast<unsigned>(i % inner); }
};

/// A partial action m = {m_g : X_{g⁻¹} → X_g} of a finite group on a finite space.
///
/// `dom(g)` is X_g, the target side; `map(g)` holds m_g and is meant to be
/// defined exactly on X_{g⁻¹} = dom(inv(g)). The constructor checks only the
/// shape of the tables; `validate` checks everything else, so ill-formed and
/// mutated instances can be represented and reported on.
class PartialAction {
 public:
  PartialAction(FiniteGroup group, FinTop space, std::vector<Subset> dom,
                std::vector<PartialMap> maps);

  /// Derives every X_g from the maps: X_g is where m_{g⁻¹} is defined.
  static PartialAction from_maps(FiniteGroup group, FinTop space, std::vector<PartialMap> maps);
  /// A global action viewed as a partial action.
  static PartialAction from_total(const TotalAction& u);

  const FiniteGroup& group() const { return group_; }
  const FinTop& space() const { return space_; }
  std::size_t points() const { return space_.size(); }

  /// X_g.
  Subset dom(Element g) const { return dom_[g]; }
  /// X_{g⁻¹}, the domain of m_g.
  Subset source(Element g) const { return dom_[group_.inv(g)]; }
  const PartialMap& map(Element g) const { return maps_[g]; }
  /// ∃ g·x, read from the map table.
  bool defined(Element g, unsigned x) const { return maps_[g][x] != kUndefined; }
  unsigned act(Element g, unsigned x) const { return maps_[g][x]; }
  /// Points where m_g is defined (equals source(g) when well formed).
  Subset defined_set(Element g) const;
  /// m_g applied to the defined part of a.
  Subset apply(Element g, Subset a) const;

  /// G*X as a subset of G×X (pair index g * points() + x).
  Subset product_domain() const;
  PairIndex pair_index() const { return {points()}; }

  bool operator==(const PartialAction&) const = default;

 private:
  FiniteGroup group_;
  FinTop space_;
  std::vector<Subset> dom_;
  std::vector<PartialMap> maps_;
};

/// Checks the pair axioms PA1–PA3, the bijection axioms (i)–(iii), the
/// topological conditions, and that the two axiom systems agree.
///
/// Sections: "structure", "pair axioms", "bijection axioms", "topological";
/// the top-level check "formulations agree" compares the two axiom systems.
Report validate(const PartialAction& pa);
bool is_valid(const PartialAction& pa);

/// The partial action on X ⊆ Y induced by a global action u on Y:
/// X_g = X ∩ u_g(X) and m_g = u_g restricted to X_{g⁻¹}. Points of the result
/// are the members of X in increasing order.
PartialAction induced(const TotalAction& u, Subset x);

/// m_g = a_g for g in the subgroup H and X_g = ∅ otherwise. `a` is indexed
/// by elements of G; rows outside H are ignored.
PartialAction subgroup_restriction(const FiniteGroup& g, ElementSet h, const FinTop& space,
                                   const std::vector<PointMap>& a);

/// G^x = {g : ∃ g·x}.
ElementSet g_upper(const PartialAction& pa, unsigned x);
/// G_x = {g ∈ G^x : g·x = x}.
ElementSet stabilizer(const PartialAction& pa, unsigned x);
/// G^x·x.
Subset orbit(const PartialAction& pa, unsigned x);
/// x ~ y iff y ∈ G^x·x. Throws AxiomViolation if that is not an equivalence.
EqRel orbit_equivalence(const PartialAction& pa);

/// Translation of G^x, continuity/openness of the orbit quotient map, and
/// closure of G^x under stabilizer cosets.
Report check_orbit_lemma(const PartialAction& pa);

/// m̂_g(h, x) = (h g⁻¹, g·x) on G×X with (G×X)_g = G × X_g.
PartialAction hat_action(const PartialAction& pa);

/// β_g(x, y) = (x, g·y) on X×X with domain X × X_{g⁻¹}.
PartialAction beta_square(const PartialAction& pa);

}  // namespace penv
