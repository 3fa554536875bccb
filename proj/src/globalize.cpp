#include "penv/globalize.hpp"

#include "penv/error.hpp"

#include <string>

namespace penv {

namespace {

std::string pair_str(unsigned g, unsigned x) {
  return "(" + std::to_string(g) + "," + std::to_string(x) + ")";
}

}  // namespace

EqRel enveloping_relation(const PartialAction& pa) {
  const auto& grp = pa.group();
  const PairIndex idx = pa.pair_index();
  const std::size_t total = grp.order() * pa.points();
  if (total > kMaxPoints)
    throw Error(ErrorKind::CapacityExceeded, "G x X has " + std::to_string(total) + " points");
  auto related = [&](unsigned a, unsigned b) {
    const Element g = idx.first(a);
    const Element h = idx.first(b);
    const unsigned x = idx.second(a);
    const unsigned y = idx.second(b);
    return contains(pa.dom(grp.mul(grp.inv(g), h)), x) &&
           pa.act(grp.mul(grp.inv(h), g), x) == y;
  };
  auto e = EqRel::from_relation(total, related);
  if (!e) throw Error(ErrorKind::AxiomViolation, "R is not an equivalence relation");
  return *e;
}

Globalization globalize(const PartialAction& pa) {
  const auto& grp = pa.group();
  const PairIndex idx = pa.pair_index();
  EqRel r = enveloping_relation(pa);
  FinTop prod = product_with_discrete(pa.space(), grp.order());
  FinTop xg = quotient(prod, r);

  std::vector<PointMap> mu(grp.order(), PointMap(r.class_count(), 0));
  for (Element g = 0; g < grp.order(); ++g) {
    for (unsigned c = 0; c < r.class_count(); ++c) {
      const unsigned rep = r.rep(c);
      mu[g][c] = r.class_of(idx.encode(grp.mul(g, idx.first(rep)), idx.second(rep)));
    }
    for (unsigned p = 0; p < r.size(); ++p) {
      const unsigned moved = r.class_of(idx.encode(grp.mul(g, idx.first(p)), idx.second(p)));
      if (moved != mu[g][r.class_of(p)])
        throw Error(ErrorKind::AxiomViolation,
                    "mu not well defined: g=" + std::to_string(g) + " at " +
                        pair_str(idx.first(p), idx.second(p)));
    }
  }

  PointMap iota(pa.points());
  Subset seen = 0;
  for (unsigned x = 0; x < pa.points(); ++x) {
    iota[x] = r.class_of(idx.encode(grp.identity(), x));
    if (contains(seen, iota[x]))
      throw Error(ErrorKind::AxiomViolation, "iota not injective at x=" + std::to_string(x));
    seen |= singleton(iota[x]);
  }
  return Globalization{pa, std::move(prod), std::move(r), std::move(xg), std::move(mu), std::move(iota)};
}

Report check_embedding(const Globalization& glob) {
  const PartialAction& pa = glob.source;
  const auto& grp = pa.group();
  Report report{"embedding", {}, {}};

  const TotalAction env = glob.enveloping_action();
  if (auto why = action_violation(env))
    report.fail("mu is a continuous action", *why);
  else
    report.pass("mu is a continuous action");

  Clause homeo("mu_g homeomorphism of X_G");
  for (Element g = 0; g < grp.order(); ++g)
    homeo.verify(is_homeomorphism(glob.mu[g], glob.xg_topology, glob.xg_topology),
                 [&] { return "g=" + std::to_string(g); });
  homeo.record(report);

  const Subset img = glob.iota_image();
  if (cardinality(img) == pa.points())
    report.pass("iota injective");
  else
    report.fail("iota injective", "image " + format_subset(img));

  // ι as a map onto the re-indexed subspace ι(X).
  std::vector<unsigned> pos(glob.class_count(), kUndefined);
  unsigned next = 0;
  for_each_bit(img, [&](unsigned c) { pos[c] = next++; });
  PointMap onto(pa.points());
  for (unsigned x = 0; x < pa.points(); ++x) onto[x] = pos[glob.iota[x]];
  const FinTop image_space = subspace(glob.xg_topology, img);
  if (is_homeomorphism(onto, pa.space(), image_space))
    report.pass("iota homeomorphism onto image");
  else
    report.fail("iota homeomorphism onto image",
                is_continuous(onto, pa.space(), image_space) ? "inverse not continuous"
                                                             : "iota not continuous");

  Clause equiv("mu_g iota = iota m_g on X_{g^-1}");
  for (Element g = 0; g < grp.order(); ++g)
    for_each_bit(pa.source(g), [&](unsigned x) {
      equiv.verify(glob.mu[g][glob.iota[x]] == glob.iota[pa.act(g, x)],
                   [&] { return "g=" + std::to_string(g) + " x=" + std::to_string(x); });
    });
  equiv.record(report);

  if (glob.product.is_open(pa.product_domain())) {
    if (glob.xg_topology.is_open(img))
      report.pass("iota(X) open in X_G", "G*X open in GxX");
    else
      report.fail("iota(X) open in X_G", "iota(X)=" + format_subset(img));
  } else {
    report.not_applicable("iota(X) open in X_G", "hypothesis fails: G*X is not open in GxX");
  }

  const PartialAction restricted = induced(env, img);
  Clause iso("induced action on iota(X) equals m");
  for (Element g = 0; g < grp.order(); ++g) {
    Subset dom_via_iota = 0;
    for_each_bit(pa.dom(g), [&](unsigned x) { dom_via_iota |= singleton(onto[x]); });
    iso.verify(restricted.dom(g) == dom_via_iota,
               [&] { return "domain of g=" + std::to_string(g); });
    for (unsigned x = 0; x < pa.points(); ++x) {
      const unsigned expect = pa.defined(g, x) ? onto[pa.act(g, x)] : kUndefined;
      iso.verify(restricted.act(g, onto[x]) == expect,
                 [&] { return "g=" + std::to_string(g) + " x=" + std::to_string(x); });
    }
  }
  iso.record(report);
  return report;
}

Report check_hat_relation(const PartialAction& pa) {
  Report report{"hat relation", {}, {}};
  const EqRel r = enveloping_relation(pa);
  const EqRel hat = orbit_equivalence(hat_action(pa));
  const PairIndex idx = pa.pair_index();
  Clause same("R equals hat-orbit relation");
  for (unsigned a = 0; a < r.size(); ++a)
    for (unsigned b = 0; b < r.size(); ++b)
      same.verify(r.related(a, b) == hat.related(a, b), [&] {
        return pair_str(idx.first(a), idx.second(a)) + " ~ " + pair_str(idx.first(b), idx.second(b));
      });
  same.record(report);
  report.info("classes", std::to_string(r.class_count()));
  return report;
}

EffrosFlags effros_flags(const PartialAction& pa) {
  const FinTop& t = pa.space();
  const EqRel e = orbit_equivalence(pa);
  EffrosFlags f;
  f.discrete_carrier = t.is_discrete();
  // E is open in X×X iff it contains U_x × U_y for each related pair, the
  // minimal product neighbourhood of (x, y).
  f.relation_open = true;
  for (unsigned x = 0; x < pa.points(); ++x)
    for (unsigned y = 0; y < pa.points(); ++y) {
      if (!e.related(x, y)) continue;
      for_each_bit(t.neighborhood(x), [&](unsigned a) {
        for_each_bit(t.neighborhood(y), [&](unsigned b) {
          if (!e.related(a, b)) f.relation_open = false;
        });
      });
    }
  f.orbits_open = true;
  for (unsigned x = 0; x < pa.points(); ++x)
    if (!t.is_open(orbit(pa, x))) f.orbits_open = false;
  f.quotient_t0 = separation(quotient(t, e)).t0;
  return f;
}

Report effros_report(const PartialAction& pa) {
  const EffrosFlags f = effros_flags(pa);
  Report report{"effros", {}, {}};
  auto yn = [](bool b) { return std::string(b ? "true" : "false"); };
  report.info("E open in XxX (G_delta)", yn(f.relation_open));
  report.info("every orbit open (G_delta)", yn(f.orbits_open));
  report.info("X/E is T0", yn(f.quotient_t0));
  if (f.discrete_carrier) {
    if (f.agree())
      report.pass("conditions agree", "discrete carrier");
    else
      report.fail("conditions agree", "E open=" + yn(f.relation_open) + " orbits open=" +
                                          yn(f.orbits_open) + " T0=" + yn(f.quotient_t0));
  } else {
    report.not_applicable("conditions agree",
                          std::string("carrier not discrete, hence not metrizable; flags ") +
                              (f.agree() ? "happen to agree" : "disagree"));
  }
  return report;
}

}  // namespace penv
