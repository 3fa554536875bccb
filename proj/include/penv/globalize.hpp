#pragma once

#include "penv/paction.hpp"

namespace penv {

/// The enveloping space X_G = (G×X)/R of a partial action, with its
/// quotient topology, the enveloping action μ and the embedding ι.
///
/// Classes are numbered by their least pair (g, x) in lexicographic order,
/// which is also their representative.
struct Globalization {
  PartialAction source;
  FinTop product;            // G×X, pair index g * |X| + x
  EqRel relation;            // R on G×X
  FinTop xg_topology;        // quotient topology on the classes
  std::vector<PointMap> mu;  // mu[g][c] = μ_g(c)
  PointMap iota;             // ι(x) = [1, x]

  std::size_t class_count() const { return relation.class_count(); }
  unsigned class_of(Element g, unsigned x) const {
    return relation.class_of(source.pair_index().encode(g, x));
  }
  unsigned rep(unsigned c) const { return relation.rep(c); }
  Subset iota_image() const { return image(iota, source.space().points()); }
  TotalAction enveloping_action() const { return {source.group(), xg_topology, mu}; }
};

/// (g, x) R (h, y) iff x ∈ X_{g⁻¹h} and m_{h⁻¹g}(x) = y.
/// Throws AxiomViolation if R is not an equivalence.
EqRel enveloping_relation(const PartialAction& pa);

/// Builds X_G. Throws AxiomViolation if μ is not well defined on classes or
/// ι is not injective.
Globalization globalize(const PartialAction& pa);

/// ι is a homeomorphism onto its image, μ_g ι = ι m_g, ι(X) is open when
/// G*X is open, the partial action μ induces on ι(X) is m, and μ is a
/// continuous action on X_G.
Report check_embedding(const Globalization& glob);

/// R equals the orbit relation of the hat action.
Report check_hat_relation(const PartialAction& pa);

struct EffrosFlags {
  bool relation_open = false;  // E open in X×X
  bool orbits_open = false;    // every orbit open in X
  bool quotient_t0 = false;    // X/E is T0
  bool discrete_carrier = false;
  bool agree() const { return relation_open == orbits_open && orbits_open == quotient_t0; }
};

EffrosFlags effros_flags(const PartialAction& pa);

/// Reports the three flags; their equivalence is asserted only for a
/// discrete carrier, the one finite metrizable case.
Report effros_report(const PartialAction& pa);

}  // namespace penv
