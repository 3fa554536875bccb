#include "penv/vaught.hpp"

#include "penv/error.hpp"

#include <string>
#include <vector>

namespace penv {

namespace {

void require_open_set(const PartialAction& pa, ElementSet v) {
  if (v == 0 || !is_subset(v, pa.group().elements()))
    throw Error(ErrorKind::InvalidOpenSet, "V=" + format_subset(v) + " must be a nonempty set of elements");
}

// {g ∈ V^x : g·x ∈ A}, together with V^x.
std::pair<ElementSet, ElementSet> hitting_set(const PartialAction& pa, unsigned x, Subset a,
                                              ElementSet v) {
  const ElementSet vx = v & g_upper(pa, x);
  ElementSet hit = 0;
  for_each_bit(vx, [&](unsigned g) {
    if (contains(a, pa.act(g, x))) hit |= singleton(g);
  });
  return {hit, vx};
}

}  // namespace

Subset delta_transform(const PartialAction& pa, Subset a, ElementSet v) {
  require_open_set(pa, v);
  const FinTop group_space = FinTop::discrete(pa.group().order());
  Subset out = 0;
  for (unsigned x = 0; x < pa.points(); ++x) {
    const auto [hit, vx] = hitting_set(pa, x, a, v);
    if (!is_meager_in(group_space, hit, vx)) out |= singleton(x);
  }
  return out;
}

Subset star_transform(const PartialAction& pa, Subset a, ElementSet v) {
  require_open_set(pa, v);
  const FinTop group_space = FinTop::discrete(pa.group().order());
  Subset out = 0;
  for (unsigned x = 0; x < pa.points(); ++x) {
    const auto [hit, vx] = hitting_set(pa, x, a, v);
    if (is_meager_in(group_space, vx & ~hit, vx)) out |= singleton(x);
  }
  return out;
}

Report check_transform_identities(const PartialAction& pa) {
  Report report{"transform identities", {}, {}};
  const std::size_t n = pa.points();
  const std::size_t order = pa.group().order();
  const Subset all = pa.space().points();
  if (n > 10 || order > 10) {
    report.not_applicable("complement duality", "instance too large for exhaustive sweep");
    return report;
  }
  const std::size_t subsets = std::size_t{1} << n;
  const std::size_t opens_of_g = (std::size_t{1} << order) - 1;

  // Tables of both transforms for every (A, V); the identities are then
  // checked by lookup.
  std::vector<Subset> delta(subsets * (opens_of_g + 1));
  std::vector<Subset> star(subsets * (opens_of_g + 1));
  auto at = [&](Subset a, ElementSet v) { return static_cast<std::size_t>(a) * (opens_of_g + 1) + v; };
  for (Subset a = 0; a < subsets; ++a)
    for (ElementSet v = 1; v <= opens_of_g; ++v) {
      delta[at(a, v)] = delta_transform(pa, a, v);
      star[at(a, v)] = star_transform(pa, a, v);
    }

  Clause dual("X - A^{dV} = (X - A)^{*V} and X - A^{*V} = (X - A)^{dV}");
  for (Subset a = 0; a < subsets; ++a)
    for (ElementSet v = 1; v <= opens_of_g; ++v) {
      const Subset ca = all & ~a;
      const bool ok = (all & ~delta[at(a, v)]) == star[at(ca, v)] &&
                      (all & ~star[at(a, v)]) == delta[at(ca, v)];
      dual.verify(ok, [&] { return "A=" + format_subset(a) + " V=" + format_subset(v); });
    }
  dual.record(report);

  // Every assignment of a 3-bit membership mask per point gives a triple
  // (A_0, A_1, A_2): A is their union for the delta rule, their intersection
  // for the star rule.
  std::size_t triples = 1;
  for (std::size_t i = 0; i < n; ++i) triples *= 8;
  if (triples * opens_of_g <= 4'000'000) {
    Clause unions("A = U A_k implies A^{dV} = U A_k^{dV}");
    Clause inters("A = & A_k implies A^{*V} = & A_k^{*V}");
    for (std::size_t code = 0; code < triples; ++code) {
      Subset part[3] = {0, 0, 0};
      std::size_t c = code;
      for (unsigned x = 0; x < n; ++x, c /= 8)
        for (unsigned k = 0; k < 3; ++k)
          if ((c >> k) & 1U) part[k] |= singleton(x);
      const Subset uni = part[0] | part[1] | part[2];
      const Subset inter = part[0] & part[1] & part[2];
      for (ElementSet v = 1; v <= opens_of_g; ++v) {
        const Subset du = delta[at(part[0], v)] | delta[at(part[1], v)] | delta[at(part[2], v)];
        const Subset si = star[at(part[0], v)] & star[at(part[1], v)] & star[at(part[2], v)];
        auto witness = [&] {
          return "A_k=" + format_subset(part[0]) + "," + format_subset(part[1]) + "," +
                 format_subset(part[2]) + " V=" + format_subset(v);
        };
        unions.verify(delta[at(uni, v)] == du, witness);
        inters.verify(star[at(inter, v)] == si, witness);
      }
    }
    unions.record(report);
    inters.record(report);
  } else {
    report.not_applicable("A = U A_k implies A^{dV} = U A_k^{dV}", "too many covers to enumerate");
    report.not_applicable("A = & A_k implies A^{*V} = & A_k^{*V}", "too many covers to enumerate");
  }

  // A point x with U^x empty lies in every A^{*U} vacuously but in no
  // A^{dV}, so the union only counts U meeting G^x. For total actions this
  // is no restriction. The unrestricted union is checked too: it may only
  // exceed A^{dV} at such vacuous points.
  std::vector<Subset> meets(opens_of_g + 1, 0);  // {x : U^x nonempty}
  for (ElementSet u = 1; u <= opens_of_g; ++u)
    for_each_bit(u, [&](unsigned g) { meets[u] |= pa.source(g); });
  Clause basis("A^{dV} = U{A^{*U} : U subset of V, U^x nonempty}");
  Clause literal("U{A^{*U} : U subset of V} exceeds A^{dV} only where some U^x is empty");
  std::size_t vacuous = 0;
  for (Subset a = 0; a < subsets; ++a)
    for (ElementSet v = 1; v <= opens_of_g; ++v) {
      Subset rhs = 0, unrestricted = 0, some_empty = 0;
      for (ElementSet u = v; u != 0; u = (u - 1) & v) {
        rhs |= star[at(a, u)] & meets[u];
        unrestricted |= star[at(a, u)];
        some_empty |= all & ~meets[u];
      }
      auto witness = [&] { return "A=" + format_subset(a) + " V=" + format_subset(v); };
      basis.verify(delta[at(a, v)] == rhs, witness);
      const Subset extra = unrestricted & ~delta[at(a, v)];
      literal.verify(is_subset(delta[at(a, v)], unrestricted) && is_subset(extra, some_empty), witness);
      if (extra != 0) ++vacuous;
    }
  basis.record(report);
  literal.record(report);
  report.info("unrestricted union differs", std::to_string(vacuous) + " (A, V) pair(s), all at vacuous points");
  report.info("analytic hypothesis", "vacuous on a finite space; checked for every A");
  return report;
}

Report check_open_case(const PartialAction& pa, Subset a, ElementSet v) {
  if (!pa.space().is_open(a)) throw Error(ErrorKind::NotOpen, format_subset(a));
  require_open_set(pa, v);
  Subset formula = 0;
  for_each_bit(v, [&](unsigned g) {
    for_each_bit(pa.source(g), [&](unsigned x) {
      if (contains(a, pa.act(g, x))) formula |= singleton(x);
    });
  });
  const Subset delta = delta_transform(pa, a, v);
  Report report{"open case", {}, {}};
  const std::string where = "A=" + format_subset(a) + " V=" + format_subset(v);
  if (formula == delta)
    report.pass("union formula equals A^{dV}", where + " -> " + format_subset(delta));
  else
    report.fail("union formula equals A^{dV}", where,
                format_subset(formula) + " vs " + format_subset(delta));
  if (pa.space().is_open(delta))
    report.pass("A^{dV} open", where);
  else
    report.fail("A^{dV} open", where + " -> " + format_subset(delta));
  return report;
}

bool ideal_member(const PartialAction& pa, unsigned x, Subset s) {
  const Subset cls = orbit(pa, x);
  if (!is_subset(s, cls))
    throw Error(ErrorKind::InvalidSubset, format_subset(s) + " is not inside the orbit of " + std::to_string(x));
  const FinTop group_space = FinTop::discrete(pa.group().order());
  auto decide = [&](unsigned p) {
    const auto [hit, up] = hitting_set(pa, p, s, pa.group().elements());
    return is_meager_in(group_space, hit, up);
  };
  const bool answer = decide(x);
  for_each_bit(cls, [&](unsigned p) {
    if (decide(p) != answer)
      throw Error(ErrorKind::AxiomViolation, "ideal depends on representative: x=" +
                                                 std::to_string(x) + " vs " + std::to_string(p));
  });
  return answer;
}

IdealSet ideal_set(const PartialAction& pa, Subset pairs) {
  const std::size_t n = pa.points();
  const PairIndex idx{n};
  IdealSet out;
  for (unsigned x = 0; x < n; ++x) {
    Subset section = 0;
    for_each_bit(orbit(pa, x), [&](unsigned y) {
      if (contains(pairs, idx.encode(x, y))) section |= singleton(y);
    });
    if (ideal_member(pa, x, section)) out.by_ideal |= singleton(x);
  }
  const PartialAction beta = beta_square(pa);
  const Subset complement = beta.space().points() & ~pairs;
  const Subset star = star_transform(beta, complement, pa.group().elements());
  for (unsigned x = 0; x < n; ++x)
    if (contains(star, idx.encode(x, x))) out.by_transform |= singleton(x);
  return out;
}

}  // namespace penv
