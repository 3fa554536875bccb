#pragma once

#include "penv/globalize.hpp"

#include <optional>
#include <string>
#include <vector>

namespace penv {

/// S(x) picks one member of the class of x.
struct SelectorMap {
  std::vector<unsigned> image;

  std::size_t size() const { return image.size(); }
  unsigned operator()(unsigned x) const { return image[x]; }
  bool operator==(const SelectorMap&) const = default;
};

/// Empty iff S(x) E x and (x E y ⟺ S(x) = S(y)) for all x, y.
std::optional<std::string> selector_violation(const SelectorMap& s, const EqRel& e);

/// S(x) = least member of [x].
SelectorMap min_selector(const EqRel& e);

/// Selector for the hat-orbit relation on G×X that fixes {1}×X:
/// S'(g, x) = (1, g·x) when g ∈ G^x, the least class member otherwise.
/// Throws AxiomViolation if the result is not a selector.
SelectorMap normalized_hat_selector(const PartialAction& pa);

/// Fixed points of S in increasing order.
std::vector<unsigned> transversal(const SelectorMap& s);

/// The topology τ on X_G transported from the transversal T ⊆ G×X, the two
/// Borel structures, and the standard-Borel clauses:
///   (a) every quotient-open set is τ-open;
///   (b) the quotient Borel structure equals Borel(τ);
///   (c) ι(X) is τ-Borel, with f⁻¹(ι(X)) = (G*X) ∩ T;
///   (d) Borel of ι(X) under τ equals Borel(X) carried by ι;
///   (e) every μ_g is Borel(τ)-measurable.
struct BorelReport {
  FinTop tau;
  SetFamily quotient_borel;
  SetFamily tau_borel;
  std::vector<unsigned> transversal;
  Report checks;
};

/// Throws AxiomViolation if `selector` is not a selector for R or the
/// transversal does not meet each class once.
BorelReport tau_topology(const Globalization& glob, const SelectorMap& selector);

/// Per group element, the classes where μ_g : (X_G, τ) → (X_G, τ) is not
/// continuous: c fails when μ_g(N(c)) ⊄ N(μ_g(c)) for the minimal
/// τ-neighbourhoods N.
struct ContinuityTable {
  std::vector<Subset> discontinuous;
  bool continuous() const;
};

ContinuityTable mu_tau_continuity(const Globalization& glob, const BorelReport& borel);

/// f([g, x]) = second coordinate of S'(g, x). Throws AxiomViolation when it
/// depends on the representative.
PointMap class_reduction(const Globalization& glob, const SelectorMap& selector);

/// ι reduces E^p_G to E_G, and f reduces E_G to E^p_G; both Borel.
Report check_bireducibility(const Globalization& glob, const SelectorMap& selector);

/// For every (g, x), h ↦ (g h⁻¹, h·x) is a bijection from G^x onto the hat
/// orbit of (g, x), with inverse (j, y) ↦ j⁻¹ g, and a homeomorphism.
Report check_hat_orbit_charts(const PartialAction& pa);

}  // namespace penv
