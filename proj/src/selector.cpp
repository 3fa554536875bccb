#include "penv/selector.hpp"

#include "penv/error.hpp"

#include <string>

namespace penv {

namespace {

std::string pair_str(const PairIndex& idx, unsigned p) {
  return "(" + std::to_string(idx.first(p)) + "," + std::to_string(idx.second(p)) + ")";
}

// Quotient Borel structure: class sets whose preimage is a union of atoms
// of the Borel algebra upstairs.
SetFamily quotient_borel_structure(const FinTop& upstairs, const EqRel& e) {
  const auto atoms = borel_atoms(upstairs);
  const std::size_t classes = e.class_count();
  if (classes > 24)
    throw Error(ErrorKind::CapacityExceeded, std::to_string(classes) + " classes is too many to list");
  SetFamily fam;
  fam.size = classes;
  for (Subset b = 0; b < (Subset{1} << classes); ++b) {
    const Subset pre = e.preimage(b);
    bool borel = true;
    for (Subset atom : atoms)
      if ((pre & atom) != 0 && (pre & atom) != atom) borel = false;
    if (borel) fam.members.push_back(b);
  }
  return fam;
}

}  // namespace

std::optional<std::string> selector_violation(const SelectorMap& s, const EqRel& e) {
  if (s.size() != e.size()) return "selector and relation sizes differ";
  for (unsigned x = 0; x < s.size(); ++x) {
    if (s(x) >= s.size() || !e.related(s(x), x)) return "S(" + std::to_string(x) + ") not related to it";
    for (unsigned y = 0; y < s.size(); ++y)
      if (e.related(x, y) != (s(x) == s(y)))
        return "x=" + std::to_string(x) + " y=" + std::to_string(y);
  }
  return std::nullopt;
}

SelectorMap min_selector(const EqRel& e) {
  SelectorMap s;
  s.image.resize(e.size());
  for (unsigned x = 0; x < e.size(); ++x) s.image[x] = e.rep(e.class_of(x));
  return s;
}

SelectorMap normalized_hat_selector(const PartialAction& pa) {
  const auto& grp = pa.group();
  const PairIndex idx = pa.pair_index();
  const EqRel hat = orbit_equivalence(hat_action(pa));
  const Element one = grp.identity();

  // (1, x) ~ (g, y) iff g ∈ G^y and g·y = x.
  for (unsigned x = 0; x < pa.points(); ++x)
    for (Element g = 0; g < grp.order(); ++g)
      for (unsigned y = 0; y < pa.points(); ++y) {
        const bool expect = contains(pa.source(g), y) && pa.act(g, y) == x;
        if (hat.related(idx.encode(one, x), idx.encode(g, y)) != expect)
          throw Error(ErrorKind::AxiomViolation, "(1," + std::to_string(x) + ") vs (" +
                                                     std::to_string(g) + "," + std::to_string(y) + ")");
      }

  SelectorMap s = min_selector(hat);
  for (Element g = 0; g < grp.order(); ++g)
    for_each_bit(pa.source(g), [&](unsigned x) { s.image[idx.encode(g, x)] = idx.encode(one, pa.act(g, x)); });
  if (auto why = selector_violation(s, hat))
    throw Error(ErrorKind::AxiomViolation, "normalized selector broken: " + *why);
  return s;
}

std::vector<unsigned> transversal(const SelectorMap& s) {
  std::vector<unsigned> t;
  for (unsigned x = 0; x < s.size(); ++x)
    if (s(x) == x) t.push_back(x);
  return t;
}

BorelReport tau_topology(const Globalization& glob, const SelectorMap& selector) {
  const PartialAction& pa = glob.source;
  const EqRel& r = glob.relation;
  const PairIndex idx = pa.pair_index();
  if (auto why = selector_violation(selector, r))
    throw Error(ErrorKind::AxiomViolation, "not a selector for R: " + *why);

  BorelReport out;
  out.transversal = transversal(selector);
  PointMap f;  // position in T -> class
  Subset t_set = 0;
  Subset hit = 0;
  for (unsigned p : out.transversal) {
    t_set |= singleton(p);
    const unsigned c = r.class_of(p);
    if (contains(hit, c)) throw Error(ErrorKind::AxiomViolation, "transversal meets a class twice");
    hit |= singleton(c);
    f.push_back(c);
  }
  if (hit != full_set(glob.class_count()))
    throw Error(ErrorKind::AxiomViolation, "transversal misses a class");

  out.tau = transport(subspace(glob.product, t_set), f);
  out.quotient_borel = quotient_borel_structure(glob.product, r);
  out.tau_borel = borel_algebra(out.tau);

  Report& rep = out.checks;
  rep.name = "standard Borel";

  Clause extends("(a) quotient-open sets are tau-open");
  for (unsigned c = 0; c < glob.class_count(); ++c)
    extends.verify(out.tau.is_open(glob.xg_topology.neighborhood(c)),
                   [&] { return "neighbourhood of class " + std::to_string(c); });
  extends.record(rep);
  const std::size_t q_opens = glob.xg_topology.opens().size();
  const std::size_t t_opens = out.tau.opens().size();
  rep.info("open families", "quotient " + std::to_string(q_opens) + ", tau " + std::to_string(t_opens) +
                                (q_opens == t_opens ? " (equal)" : " (tau strictly finer)"));

  if (out.quotient_borel == out.tau_borel)
    rep.pass("(b) quotient Borel structure = Borel(tau)",
             std::to_string(out.tau_borel.members.size()) + " sets");
  else
    rep.fail("(b) quotient Borel structure = Borel(tau)",
             std::to_string(out.quotient_borel.members.size()) + " vs " +
                 std::to_string(out.tau_borel.members.size()) + " sets");

  const Subset iota_x = glob.iota_image();
  Subset f_pre = 0;
  for (unsigned i = 0; i < out.transversal.size(); ++i)
    if (contains(iota_x, f[i])) f_pre |= singleton(out.transversal[i]);
  const bool c_ok = out.tau_borel.contains(iota_x) && f_pre == (pa.product_domain() & t_set);
  if (c_ok)
    rep.pass("(c) iota(X) is tau-Borel");
  else
    rep.fail("(c) iota(X) is tau-Borel", "iota(X)=" + format_subset(iota_x) +
                                             " f^-1=" + format_subset(f_pre));

  std::vector<unsigned> pos(glob.class_count(), kUndefined);
  unsigned next = 0;
  for_each_bit(iota_x, [&](unsigned c) { pos[c] = next++; });
  PointMap onto(pa.points());
  for (unsigned x = 0; x < pa.points(); ++x) onto[x] = pos[glob.iota[x]];
  if (borel_algebra(subspace(out.tau, iota_x)) == borel_algebra(transport(pa.space(), onto)))
    rep.pass("(d) Borel(X) = Borel(X, tau_X)");
  else
    rep.fail("(d) Borel(X) = Borel(X, tau_X)", "families differ on iota(X)");

  Clause measurable("(e) mu_g is Borel(tau)-measurable");
  for (Element g = 0; g < pa.group().order(); ++g)
    for (Subset b : out.tau_borel.members)
      measurable.verify(out.tau_borel.contains(preimage(glob.mu[g], b, glob.class_count())),
                        [&] { return "g=" + std::to_string(g) + " B=" + format_subset(b); });
  measurable.record(rep);

  std::string tlist;
  for (unsigned p : out.transversal) tlist += pair_str(idx, p);
  rep.info("transversal", tlist);
  return out;
}

bool ContinuityTable::continuous() const {
  for (Subset s : discontinuous)
    if (s != 0) return false;
  return true;
}

ContinuityTable mu_tau_continuity(const Globalization& glob, const BorelReport& borel) {
  ContinuityTable table;
  table.discontinuous.assign(glob.source.group().order(), 0);
  for (Element g = 0; g < glob.source.group().order(); ++g)
    for (unsigned c = 0; c < glob.class_count(); ++c) {
      const Subset moved = image(glob.mu[g], borel.tau.neighborhood(c));
      if (!is_subset(moved, borel.tau.neighborhood(glob.mu[g][c])))
        table.discontinuous[g] |= singleton(c);
    }
  return table;
}

PointMap class_reduction(const Globalization& glob, const SelectorMap& selector) {
  const PairIndex idx = glob.source.pair_index();
  PointMap f(glob.class_count(), kUndefined);
  for (unsigned p = 0; p < glob.relation.size(); ++p) {
    const unsigned c = glob.relation.class_of(p);
    const unsigned value = idx.second(selector(p));
    if (f[c] != kUndefined && f[c] != value)
      throw Error(ErrorKind::AxiomViolation, "f depends on the representative of class " + std::to_string(c));
    f[c] = value;
  }
  return f;
}

Report check_bireducibility(const Globalization& glob, const SelectorMap& selector) {
  const PartialAction& pa = glob.source;
  Report report{"bireducibility", {}, {}};
  const EqRel partial = orbit_equivalence(pa);
  const EqRel global = orbit_equivalence(PartialAction::from_total(glob.enveloping_action()));

  Clause iota_red("iota reduces E^p_G to E_G");
  for (unsigned x = 0; x < pa.points(); ++x)
    for (unsigned y = 0; y < pa.points(); ++y)
      iota_red.verify(partial.related(x, y) == global.related(glob.iota[x], glob.iota[y]),
                      [&] { return "x=" + std::to_string(x) + " y=" + std::to_string(y); });
  iota_red.record(report);

  const PointMap f = class_reduction(glob, selector);
  report.pass("f well defined");
  Clause f_red("f reduces E_G to E^p_G");
  for (unsigned c = 0; c < glob.class_count(); ++c)
    for (unsigned d = 0; d < glob.class_count(); ++d)
      f_red.verify(global.related(c, d) == partial.related(f[c], f[d]),
                   [&] { return "c=" + std::to_string(c) + " d=" + std::to_string(d); });
  f_red.record(report);

  const BorelReport borel = tau_topology(glob, selector);
  const SetFamily x_borel = borel_algebra(pa.space());
  Clause iota_meas("iota Borel measurable");
  for (Subset b : borel.tau_borel.members)
    iota_meas.verify(x_borel.contains(preimage(glob.iota, b, pa.points())),
                     [&] { return "B=" + format_subset(b); });
  iota_meas.record(report);
  Clause f_meas("f Borel measurable");
  for (Subset b : x_borel.members)
    f_meas.verify(borel.tau_borel.contains(preimage(f, b, glob.class_count())),
                  [&] { return "B=" + format_subset(b); });
  f_meas.record(report);
  return report;
}

Report check_hat_orbit_charts(const PartialAction& pa) {
  const auto& grp = pa.group();
  const PairIndex idx = pa.pair_index();
  const PartialAction hat = hat_action(pa);
  Report report{"hat orbit charts", {}, {}};
  Clause bij("rho bijective onto the hat orbit");
  Clause inverse("rho^-1(j, y) = j^-1 g");
  Clause homeo("rho homeomorphism");
  for (Element g = 0; g < grp.order(); ++g)
    for (unsigned x = 0; x < pa.points(); ++x) {
      const unsigned p = idx.encode(g, x);
      const ElementSet up = g_upper(pa, x);
      const Subset orb = orbit(hat, p);
      auto where = [&] { return "(g,x)=" + pair_str(idx, p); };
      PointMap rho;  // position in G^x -> position in the orbit
      std::vector<unsigned> orb_pos(hat.points(), kUndefined);
      unsigned next = 0;
      for_each_bit(orb, [&](unsigned q) { orb_pos[q] = next++; });
      Subset hit = 0;
      bool inside = true;
      bool inv_ok = true;
      for_each_bit(up, [&](unsigned h) {
        const unsigned q = idx.encode(grp.mul(g, grp.inv(h)), pa.act(h, x));
        if (!contains(orb, q)) {
          inside = false;
          return;
        }
        hit |= singleton(q);
        rho.push_back(orb_pos[q]);
        if (grp.mul(grp.inv(idx.first(q)), g) != h) inv_ok = false;
      });
      const bool is_bij = inside && hit == orb && cardinality(orb) == cardinality(up);
      bij.verify(is_bij, where);
      inverse.verify(inv_ok, where);
      if (is_bij)
        homeo.verify(is_homeomorphism(rho, subspace(FinTop::discrete(grp.order()), up),
                                      subspace(hat.space(), orb)),
                     where);
    }
  bij.record(report);
  inverse.record(report);
  homeo.record(report);
  return report;
}

}  // namespace penv
