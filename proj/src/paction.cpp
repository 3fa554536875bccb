#include "penv/paction.hpp"

#include "penv/error.hpp"

#include <string>

namespace penv {

namespace {

std::string gx(Element g, unsigned x) {
  return "g=" + std::to_string(g) + " x=" + std::to_string(x);
}

std::string ghx(Element g, Element h, unsigned x) {
  return "g=" + std::to_string(g) + " h=" + std::to_string(h) + " x=" + std::to_string(x);
}

// m_g restricted to its source, as a total map between re-indexed subspaces.
// Returns nullopt unless it is a bijection source(g) -> dom(g).
std::optional<PointMap> restricted_bijection(const PartialAction& pa, Element g) {
  const Subset src = pa.source(g);
  const Subset dst = pa.dom(g);
  if (cardinality(src) != cardinality(dst)) return std::nullopt;
  std::vector<unsigned> dst_pos(pa.points(), kUndefined);
  unsigned pos = 0;
  for_each_bit(dst, [&](unsigned y) { dst_pos[y] = pos++; });
  PointMap f;
  Subset hit = 0;
  bool ok = true;
  for_each_bit(src, [&](unsigned x) {
    const unsigned y = pa.act(g, x);
    if (y == kUndefined || y >= pa.points() || !contains(dst, y) || contains(hit, y)) {
      ok = false;
      return;
    }
    hit |= singleton(y);
    f.push_back(dst_pos[y]);
  });
  if (!ok) return std::nullopt;
  return f;
}

}  // namespace

std::optional<std::string> action_violation(const TotalAction& u) {
  const auto& grp = u.group;
  const std::size_t n = u.space.size();
  if (u.maps.size() != grp.order()) return "expected one map per group element";
  for (Element g = 0; g < grp.order(); ++g) {
    if (u.maps[g].size() != n) return "map " + std::to_string(g) + " has wrong length";
    for (unsigned y : u.maps[g])
      if (y >= n) return "map " + std::to_string(g) + " leaves the space";
  }
  for (unsigned x = 0; x < n; ++x)
    if (u.maps[grp.identity()][x] != x) return "identity moves x=" + std::to_string(x);
  for (Element g = 0; g < grp.order(); ++g)
    for (Element h = 0; h < grp.order(); ++h)
      for (unsigned x = 0; x < n; ++x)
        if (u.maps[g][u.maps[h][x]] != u.maps[grp.mul(g, h)][x])
          return "u_g u_h != u_gh at " + ghx(g, h, x);
  for (Element g = 0; g < grp.order(); ++g)
    if (!is_continuous(u.maps[g], u.space, u.space))
      return "u_g not continuous at g=" + std::to_string(g);
  return std::nullopt;
}

PartialAction::PartialAction(FiniteGroup group, FinTop space, std::vector<Subset> dom,
                             std::vector<PartialMap> maps)
    : group_(std::move(group)), space_(std::move(space)), dom_(std::move(dom)), maps_(std::move(maps)) {
  const std::size_t n = space_.size();
  if (dom_.size() != group_.order() || maps_.size() != group_.order())
    throw Error(ErrorKind::InvalidSubset, "need one domain and one map per group element");
  for (Element g = 0; g < group_.order(); ++g) {
    if (!is_subset(dom_[g], space_.points()))
      throw Error(ErrorKind::InvalidSubset, "X_" + std::to_string(g) + " leaves the space");
    if (maps_[g].size() != n)
      throw Error(ErrorKind::InvalidSubset, "m_" + std::to_string(g) + " has wrong length");
    for (unsigned y : maps_[g])
      if (y != kUndefined && y >= n)
        throw Error(ErrorKind::InvalidSubset, "m_" + std::to_string(g) + " leaves the space");
  }
}

PartialAction PartialAction::from_maps(FiniteGroup group, FinTop space, std::vector<PartialMap> maps) {
  std::vector<Subset> dom(group.order(), 0);
  if (maps.size() != group.order())
    throw Error(ErrorKind::InvalidSubset, "need one map per group element");
  for (Element g = 0; g < group.order(); ++g) {
    Subset d = 0;
    for (unsigned x = 0; x < maps[g].size(); ++x)
      if (maps[g][x] != kUndefined) d |= singleton(x);
    dom[group.inv(g)] = d;
  }
  return PartialAction(std::move(group), std::move(space), std::move(dom), std::move(maps));
}

PartialAction PartialAction::from_total(const TotalAction& u) {
  if (auto why = action_violation(u)) throw Error(ErrorKind::NotAnAction, *why);
  std::vector<Subset> dom(u.group.order(), u.space.points());
  std::vector<PartialMap> maps(u.maps.begin(), u.maps.end());
  return PartialAction(u.group, u.space, std::move(dom), std::move(maps));
}

Subset PartialAction::defined_set(Element g) const {
  Subset d = 0;
  for (unsigned x = 0; x < points(); ++x)
    if (defined(g, x)) d |= singleton(x);
  return d;
}

Subset PartialAction::apply(Element g, Subset a) const {
  Subset out = 0;
  for_each_bit(a, [&](unsigned x) {
    if (defined(g, x)) out |= singleton(act(g, x));
  });
  return out;
}

Subset PartialAction::product_domain() const {
  const auto idx = pair_index();
  Subset s = 0;
  for (Element g = 0; g < group_.order(); ++g)
    for_each_bit(source(g), [&](unsigned x) { s |= singleton(idx.encode(g, x)); });
  return s;
}

Report validate(const PartialAction& pa) {
  const auto& grp = pa.group();
  const std::size_t n = pa.points();
  const Element one = grp.identity();
  Report report{"validate", {}, {}};

  Report structure{"structure", {}, {}};
  Clause consistent("m_g defined exactly on X_{g^-1}");
  for (Element g = 0; g < grp.order(); ++g)
    consistent.verify(pa.defined_set(g) == pa.source(g), [&] {
      return "g=" + std::to_string(g) + " defined on " + format_subset(pa.defined_set(g)) +
             " but X_{g^-1}=" + format_subset(pa.source(g));
    });
  consistent.record(structure);

  // Pair formulation: only the partial function (g, x) -> g·x is consulted.
  Report pair{"pair axioms", {}, {}};
  Clause pa1("PA1"), pa2("PA2"), pa3("PA3");
  for (unsigned x = 0; x < n; ++x)
    pa3.verify(pa.defined(one, x) && pa.act(one, x) == x, [&] { return gx(one, x); });
  for (Element g = 0; g < grp.order(); ++g) {
    const Element gi = grp.inv(g);
    for (unsigned x = 0; x < n; ++x) {
      if (!pa.defined(g, x)) continue;
      const unsigned y = pa.act(g, x);
      pa1.verify(pa.defined(gi, y) && pa.act(gi, y) == x, [&] { return gx(g, x); });
    }
  }
  for (Element g = 0; g < grp.order(); ++g)
    for (Element h = 0; h < grp.order(); ++h)
      for (unsigned x = 0; x < n; ++x) {
        if (!pa.defined(h, x) || !pa.defined(g, pa.act(h, x))) continue;
        const Element gh = grp.mul(g, h);
        pa2.verify(pa.defined(gh, x) && pa.act(gh, x) == pa.act(g, pa.act(h, x)),
                   [&] { return ghx(g, h, x); });
      }
  pa1.record(pair);
  pa2.record(pair);
  pa3.record(pair);

  // Bijection formulation: X_g from the domain table, m_g read on X_{g^-1} only.
  Report bij{"bijection axioms", {}, {}};
  Clause bijective("m_g bijective X_{g^-1} -> X_g");
  Clause ax1("(i) X_1 = X and m_1 = id");
  Clause ax2("(ii) m_g(X_{g^-1} & X_h) = X_g & X_gh");
  Clause ax3("(iii) m_g m_h = m_gh on X_{h^-1} & X_{(gh)^-1}");
  for (Element g = 0; g < grp.order(); ++g)
    bijective.verify(restricted_bijection(pa, g).has_value(),
                     [&] { return "g=" + std::to_string(g); });
  {
    bool id_ok = pa.dom(one) == pa.space().points();
    unsigned bad = 0;
    for (unsigned x = 0; x < n && id_ok; ++x)
      if (!(pa.defined(one, x) && pa.act(one, x) == x)) {
        id_ok = false;
        bad = x;
      }
    ax1.verify(id_ok, [&] {
      return pa.dom(one) != pa.space().points() ? "X_1=" + format_subset(pa.dom(one))
                                                : gx(one, bad);
    });
  }
  for (Element g = 0; g < grp.order(); ++g) {
    for (Element h = 0; h < grp.order(); ++h) {
      const Element gh = grp.mul(g, h);
      const Subset lhs = pa.apply(g, pa.source(g) & pa.dom(h));
      const Subset rhs = pa.dom(g) & pa.dom(gh);
      ax2.verify(lhs == rhs, [&] {
        return "g=" + std::to_string(g) + " h=" + std::to_string(h) + ": " + format_subset(lhs) +
               " vs " + format_subset(rhs);
      });
      const Subset d = pa.source(h) & pa.source(gh);
      bool ok = true;
      unsigned bad = 0;
      for_each_bit(d, [&](unsigned x) {
        if (!ok) return;
        const unsigned y = pa.act(h, x);
        const bool fine = y != kUndefined && contains(pa.source(g), y) && pa.act(g, y) != kUndefined &&
                          contains(rhs, pa.act(g, y)) && pa.act(gh, x) == pa.act(g, y);
        if (!fine) {
          ok = false;
          bad = x;
        }
      });
      ax3.verify(ok, [&] { return ghx(g, h, bad); });
    }
  }
  bijective.record(bij);
  ax1.record(bij);
  ax2.record(bij);
  ax3.record(bij);

  Report topo{"topological", {}, {}};
  Clause open_domains("X_g open");
  Clause homeo("m_g homeomorphism X_{g^-1} -> X_g");
  for (Element g = 0; g < grp.order(); ++g) {
    open_domains.verify(pa.space().is_open(pa.dom(g)), [&] {
      return "g=" + std::to_string(g) + " X_g=" + format_subset(pa.dom(g));
    });
    if (auto f = restricted_bijection(pa, g)) {
      const FinTop src = subspace(pa.space(), pa.source(g));
      const FinTop dst = subspace(pa.space(), pa.dom(g));
      homeo.verify(is_homeomorphism(*f, src, dst), [&] { return "g=" + std::to_string(g); });
    }
  }
  open_domains.record(topo);
  homeo.record(topo);

  const Subset gx_set = pa.product_domain();
  const FinTop prod = product_with_discrete(pa.space(), grp.order());
  topo.info("G*X open in GxX", prod.is_open(gx_set) ? "yes" : "no");
  topo.info("G*X G_delta in GxX", std::string(is_gdelta(prod, gx_set) ? "yes" : "no") +
                                      " (finite space: G_delta coincides with open)");

  const bool pair_ok = pair.ok();
  const bool bij_ok = bij.ok();
  if (structure.ok()) {
    if (pair_ok == bij_ok)
      report.pass("formulations agree", pair_ok ? "both hold" : "both fail");
    else
      report.fail("formulations agree",
                  std::string("pair axioms ") + (pair_ok ? "hold" : "fail") +
                      ", bijection axioms " + (bij_ok ? "hold" : "fail"),
                  "internal inconsistency");
  } else {
    report.not_applicable("formulations agree", "domain table inconsistent with maps");
  }
  report.add(std::move(structure));
  report.add(std::move(pair));
  report.add(std::move(bij));
  report.add(std::move(topo));
  return report;
}

bool is_valid(const PartialAction& pa) { return validate(pa).ok(); }

PartialAction induced(const TotalAction& u, Subset x) {
  if (auto why = action_violation(u)) throw Error(ErrorKind::NotAnAction, *why);
  if (!is_subset(x, u.space.points()))
    throw Error(ErrorKind::InvalidSubset, format_subset(x) + " is not a set of points");
  const auto& grp = u.group;
  std::vector<unsigned> pos(u.space.size(), kUndefined);
  unsigned next = 0;
  for_each_bit(x, [&](unsigned p) { pos[p] = next++; });
  const std::size_t m = cardinality(x);

  std::vector<Subset> dom(grp.order(), 0);
  std::vector<PartialMap> maps(grp.order(), PartialMap(m, kUndefined));
  for (Element g = 0; g < grp.order(); ++g) {
    const Subset xg = x & image(u.maps[g], x);
    for_each_bit(xg, [&](unsigned p) { dom[g] |= singleton(pos[p]); });
  }
  for (Element g = 0; g < grp.order(); ++g) {
    const Subset src = x & image(u.maps[grp.inv(g)], x);
    for_each_bit(src, [&](unsigned p) { maps[g][pos[p]] = pos[u.maps[g][p]]; });
  }
  return PartialAction(grp, subspace(u.space, x), std::move(dom), std::move(maps));
}

PartialAction subgroup_restriction(const FiniteGroup& g, ElementSet h, const FinTop& space,
                                   const std::vector<PointMap>& a) {
  if (!g.is_subgroup(h)) throw Error(ErrorKind::NotASubgroup, format_subset(h));
  const std::size_t n = space.size();
  if (a.size() != g.order()) throw Error(ErrorKind::NotAnAction, "expected one row per element of G");
  for_each_bit(h, [&](unsigned e) {
    if (a[e].size() != n) throw Error(ErrorKind::NotAnAction, "row " + std::to_string(e) + " malformed");
    for (unsigned y : a[e])
      if (y >= n) throw Error(ErrorKind::NotAnAction, "row " + std::to_string(e) + " leaves the space");
    if (!is_continuous(a[e], space, space))
      throw Error(ErrorKind::NotAnAction, "a_" + std::to_string(e) + " not continuous");
  });
  for (unsigned x = 0; x < n; ++x)
    if (a[g.identity()][x] != x) throw Error(ErrorKind::NotAnAction, "identity moves x=" + std::to_string(x));
  for_each_bit(h, [&](unsigned p) {
    for_each_bit(h, [&](unsigned q) {
      for (unsigned x = 0; x < n; ++x)
        if (a[p][a[q][x]] != a[g.mul(p, q)][x])
          throw Error(ErrorKind::NotAnAction, "a_g a_h != a_gh at " + ghx(p, q, x));
    });
  });

  std::vector<Subset> dom(g.order(), 0);
  std::vector<PartialMap> maps(g.order(), PartialMap(n, kUndefined));
  for_each_bit(h, [&](unsigned e) {
    dom[e] = space.points();
    maps[e].assign(a[e].begin(), a[e].end());
  });
  return PartialAction(g, space, std::move(dom), std::move(maps));
}

ElementSet g_upper(const PartialAction& pa, unsigned x) {
  ElementSet s = 0;
  for (Element g = 0; g < pa.group().order(); ++g)
    if (contains(pa.source(g), x)) s |= singleton(g);
  return s;
}

ElementSet stabilizer(const PartialAction& pa, unsigned x) {
  ElementSet s = 0;
  for_each_bit(g_upper(pa, x), [&](unsigned g) {
    if (pa.act(g, x) == x) s |= singleton(g);
  });
  return s;
}

Subset orbit(const PartialAction& pa, unsigned x) {
  Subset s = 0;
  for_each_bit(g_upper(pa, x), [&](unsigned g) {
    if (pa.defined(g, x)) s |= singleton(pa.act(g, x));
  });
  return s;
}

EqRel orbit_equivalence(const PartialAction& pa) {
  std::vector<Subset> orbits(pa.points());
  for (unsigned x = 0; x < pa.points(); ++x) orbits[x] = orbit(pa, x);
  auto e = EqRel::from_relation(pa.points(),
                                [&](unsigned x, unsigned y) { return contains(orbits[x], y); });
  if (!e) throw Error(ErrorKind::AxiomViolation, "orbit relation is not an equivalence");
  return *e;
}

Report check_orbit_lemma(const PartialAction& pa) {
  const auto& grp = pa.group();
  Report report{"orbit lemma", {}, {}};

  Clause translate("G^x g = G^{g^-1 x} for x in X_g");
  for (Element g = 0; g < grp.order(); ++g)
    for_each_bit(pa.dom(g), [&](unsigned x) {
      const unsigned y = pa.act(grp.inv(g), x);
      translate.verify(y != kUndefined && grp.right_mul(g_upper(pa, x), g) == g_upper(pa, y),
                       [&] { return gx(g, x); });
    });
  translate.record(report);

  const EqRel e = orbit_equivalence(pa);
  const FinTop q = quotient(pa.space(), e);
  const PointMap proj(e.class_ids().begin(), e.class_ids().end());
  if (is_continuous(proj, pa.space(), q))
    report.pass("quotient map continuous");
  else
    report.fail("quotient map continuous", "projection onto orbit classes");
  if (is_open_map(proj, pa.space(), q)) {
    report.pass("quotient map open");
  } else {
    unsigned bad = 0;
    for (unsigned x = 0; x < pa.points(); ++x)
      if (!q.is_open(image(proj, pa.space().neighborhood(x)))) {
        bad = x;
        break;
      }
    report.fail("quotient map open", "image of neighbourhood of x=" + std::to_string(bad));
  }

  Clause coset("g in G^x and g^-1 h in G_x imply h in G^x");
  for (unsigned x = 0; x < pa.points(); ++x) {
    const ElementSet up = g_upper(pa, x);
    const ElementSet stab = stabilizer(pa, x);
    for_each_bit(up, [&](unsigned g) {
      for (Element h = 0; h < grp.order(); ++h)
        if (contains(stab, grp.mul(grp.inv(g), h)))
          coset.verify(contains(up, h), [&] { return ghx(g, h, x); });
    });
  }
  coset.record(report);
  return report;
}

PartialAction hat_action(const PartialAction& pa) {
  const auto& grp = pa.group();
  const std::size_t n = pa.points();
  const PairIndex idx{n};
  FinTop carrier = product_with_discrete(pa.space(), grp.order());
  std::vector<Subset> dom(grp.order(), 0);
  std::vector<PartialMap> maps(grp.order(), PartialMap(carrier.size(), kUndefined));
  for (Element g = 0; g < grp.order(); ++g) {
    for (Element h = 0; h < grp.order(); ++h) {
      for_each_bit(pa.dom(g), [&](unsigned x) { dom[g] |= singleton(idx.encode(h, x)); });
      for_each_bit(pa.source(g), [&](unsigned x) {
        if (!pa.defined(g, x)) return;
        maps[g][idx.encode(h, x)] = idx.encode(grp.mul(h, grp.inv(g)), pa.act(g, x));
      });
    }
  }
  return PartialAction(grp, std::move(carrier), std::move(dom), std::move(maps));
}

PartialAction beta_square(const PartialAction& pa) {
  const auto& grp = pa.group();
  const std::size_t n = pa.points();
  const PairIndex idx{n};
  FinTop carrier = product(pa.space(), pa.space());
  std::vector<Subset> dom(grp.order(), 0);
  std::vector<PartialMap> maps(grp.order(), PartialMap(carrier.size(), kUndefined));
  for (Element g = 0; g < grp.order(); ++g) {
    for (unsigned x = 0; x < n; ++x) {
      for_each_bit(pa.dom(g), [&](unsigned y) { dom[g] |= singleton(idx.encode(x, y)); });
      for_each_bit(pa.source(g), [&](unsigned y) {
        if (!pa.defined(g, y)) return;
        maps[g][idx.encode(x, y)] = idx.encode(x, pa.act(g, y));
      });
    }
  }
  PartialAction beta(grp, std::move(carrier), std::move(dom), std::move(maps));
  for (unsigned x = 0; x < n; ++x)
    for (unsigned y = 0; y < n; ++y)
      if (g_upper(beta, idx.encode(x, y)) != g_upper(pa, y))
        throw Error(ErrorKind::AxiomViolation, "G^(x,y) != G^y at x=" + std::to_string(x) +
                                                   " y=" + std::to_string(y));
  return beta;
}

}  // namespace penv
