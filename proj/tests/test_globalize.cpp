#include "penv/error.hpp"
#include "penv/globalize.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace penv;

namespace {

PartialAction z2_swap() {
  return PartialAction::from_total(TotalAction{cyclic(2), FinTop::discrete(2), {{0, 1}, {1, 0}}});
}

PartialAction trivial_on(std::size_t n) {
  PointMap id(n);
  for (unsigned x = 0; x < n; ++x) id[x] = x;
  return PartialAction::from_total(TotalAction{cyclic(1), FinTop::discrete(n), {id}});
}

// R straight from its definition, pair by pair.
bool r_holds(const PartialAction& pa, Element g, unsigned x, Element h, unsigned y) {
  const auto& grp = pa.group();
  const Element ginv_h = grp.mul(grp.inv(g), h);
  const Element hinv_g = grp.mul(grp.inv(h), g);
  return contains(pa.dom(ginv_h), x) && pa.map(hinv_g)[x] == y;
}

}  // namespace

TEST_SUITE("globalize") {

TEST_CASE("trivial group: R is equality and iota the identity") {
  const PartialAction pa = trivial_on(3);
  CHECK(enveloping_relation(pa) == EqRel::identity(3));
  const Globalization glob = globalize(pa);
  CHECK(glob.iota == PointMap{0, 1, 2});
  CHECK(check_embedding(glob).ok());
}

TEST_CASE("Z2 swap: two classes, pair by pair") {
  const PartialAction pa = z2_swap();
  const EqRel r = enveloping_relation(pa);
  CHECK(r.class_count() == 2);
  const PairIndex ix = pa.pair_index();
  for (Element g = 0; g < 2; ++g)
    for (unsigned x = 0; x < 2; ++x)
      for (Element h = 0; h < 2; ++h)
        for (unsigned y = 0; y < 2; ++y)
          CHECK(r.related(ix.encode(g, x), ix.encode(h, y)) == r_holds(pa, g, x, h, y));
  CHECK(r.related(ix.encode(0, 0), ix.encode(1, 1)));
  CHECK(r.related(ix.encode(0, 1), ix.encode(1, 0)));
}

TEST_CASE("global action: X_G is a copy of X") {
  const PartialAction pa = z2_swap();
  const Globalization glob = globalize(pa);
  CHECK(glob.class_count() == 2);
  CHECK(glob.iota_image() == 0b11);
  for (Element g = 0; g < 2; ++g)
    for (unsigned x = 0; x < 2; ++x) CHECK(glob.mu[g][glob.iota[x]] == glob.iota[pa.act(g, x)]);
}

TEST_CASE("finite analog with three group elements") {
  const PartialAction pa = testing::example48(3);
  const Globalization glob = globalize(pa);
  CHECK(glob.class_count() == 4);
  // {(g, v)} is one class, the (g, x0) are singletons.
  CHECK(glob.class_of(0, 1) == glob.class_of(1, 1));
  CHECK(glob.class_of(0, 1) == glob.class_of(2, 1));
  CHECK(glob.class_of(0, 0) != glob.class_of(1, 0));
  CHECK(glob.class_of(1, 0) != glob.class_of(2, 0));
  for (Element m = 0; m < 3; ++m)
    for (Element n = 0; n < 3; ++n) CHECK(glob.mu[m][glob.class_of(n, 0)] == glob.class_of((n + m) % 3, 0));
  // ι(X) = {[0,x0], [0,v]} is open.
  CHECK(glob.iota_image() == (singleton(glob.class_of(0, 0)) | singleton(glob.class_of(0, 1))));
  CHECK(glob.xg_topology.is_open(glob.iota_image()));
  CHECK(check_embedding(glob).ok());
  CHECK(check_hat_relation(pa).ok());
}

TEST_CASE("R matches its definition and the hat-orbit oracle on every valid instance") {
  for (const PartialAction& pa : testing::all_valid(4, 3)) {
    const EqRel r = enveloping_relation(pa);
    const auto& grp = pa.group();
    const PairIndex ix = pa.pair_index();
    const std::size_t n = pa.points();
    bool defn = true;
    for (Element g = 0; g < grp.order(); ++g)
      for (unsigned x = 0; x < n; ++x)
        for (Element h = 0; h < grp.order(); ++h)
          for (unsigned y = 0; y < n; ++y)
            defn &= r.related(ix.encode(g, x), ix.encode(h, y)) == r_holds(pa, g, x, h, y);
    CHECK(defn);
    CHECK(r == EqRel::from_class_ids(oracle::hat_orbit_ids(pa)));
  }
}

TEST_CASE("quotient topology of X_G against the saturation oracle") {
  for (const PartialAction& pa : testing::all_valid(3, 2)) {
    const Globalization glob = globalize(pa);
    const oracle::Family prod_opens = oracle::opens_of(glob.product);
    for (Subset c = 0; c <= glob.xg_topology.points(); ++c)
      CHECK(glob.xg_topology.is_open(c) == prod_opens.contains(glob.relation.preimage(c)));
  }
}

TEST_CASE("capacity of G x X") {
  // 9 elements on 8 points: 72 pairs.
  const PartialAction big = PartialAction::from_total(
      TotalAction{cyclic(9), FinTop::indiscrete(8), std::vector<PointMap>(9, PointMap{0, 1, 2, 3, 4, 5, 6, 7})});
  try {
    enveloping_relation(big);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapacityExceeded);
  }
}

TEST_CASE("Effros flags") {
  const EffrosFlags swap = effros_flags(z2_swap());
  CHECK((swap.relation_open && swap.orbits_open && swap.quotient_t0));
  CHECK(effros_report(z2_swap()).ok());

  // Trivial group on Sierpiński: E is equality, orbits are singletons.
  const FinTop s = make_topology(2, std::vector<Subset>{0b10});
  const PartialAction triv = PartialAction::from_total(TotalAction{cyclic(1), s, {{0, 1}}});
  const EffrosFlags f = effros_flags(triv);
  CHECK_FALSE(f.discrete_carrier);
  CHECK_FALSE(f.relation_open);
  CHECK_FALSE(f.orbits_open);
  CHECK(f.quotient_t0);
  CHECK(effros_report(triv).ok());
}

}
