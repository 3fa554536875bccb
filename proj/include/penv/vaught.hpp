#pragma once

#include "penv/paction.hpp"

namespace penv {

/// A^{ΔV}: points x where {g ∈ V ∩ G^x : g·x ∈ A} is not meager in V ∩ G^x.
///
/// Meagerness is decided by the space-side category oracle on the discrete
/// group, so in effect x qualifies iff some g ∈ V ∩ G^x sends it into A.
/// Throws InvalidOpenSet for an empty V.
Subset delta_transform(const PartialAction& pa, Subset a, ElementSet v);

/// A^{*V}: points x where {g ∈ V ∩ G^x : g·x ∈ A} is comeager in V ∩ G^x.
/// Holds vacuously when V ∩ G^x is empty.
Subset star_transform(const PartialAction& pa, Subset a, ElementSet v);

/// Complement duality, countable union/intersection rules (checked over
/// every cover of A by three sets) and the basis decomposition
/// x ∈ A^{ΔV} iff x ∈ A^{*U} for some nonempty U ⊆ V with U^x nonempty.
/// Without the U^x condition the union also picks up points where the star
/// transform holds vacuously; that difference is checked to be the only one.
Report check_transform_identities(const PartialAction& pa);

/// For open A: A^{ΔV} = ⋃_{g∈V} {x ∈ X_{g⁻¹} : g·x ∈ A}, and it is open.
/// Throws NotOpen when A is not open.
Report check_open_case(const PartialAction& pa, Subset a, ElementSet v);

/// S ∈ I_[x] iff {g ∈ G^x : g·x ∈ S} is meager in G^x. Verifies that every
/// member of the orbit gives the same answer (AxiomViolation otherwise).
/// Throws InvalidSubset unless S ⊆ G^x·x.
bool ideal_member(const PartialAction& pa, unsigned x, Subset s);

/// A_I for a set A of pairs (pair index x * |X| + y), computed twice.
struct IdealSet {
  Subset by_ideal = 0;      // {x : {y ∈ [x] : (x,y) ∈ A} ∈ I_[x]}
  Subset by_transform = 0;  // {x : (x,x) ∈ (X²∖A)^{*G}} under β
  bool agree() const { return by_ideal == by_transform; }
};

IdealSet ideal_set(const PartialAction& pa, Subset pairs);

}  // namespace penv
