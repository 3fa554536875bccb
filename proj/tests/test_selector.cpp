#include "penv/error.hpp"
#include "penv/selector.hpp"
#include "support/instances.hpp"

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

}  // namespace

TEST_SUITE("selector") {

TEST_CASE("least-member selector") {
  CHECK(min_selector(EqRel::identity(3)).image == std::vector<unsigned>{0, 1, 2});
  CHECK(min_selector(EqRel::from_class_ids({0, 0, 0})).image == std::vector<unsigned>{0, 0, 0});
  const EqRel hat = enveloping_relation(z2_swap());
  // Classes {(0,0),(1,1)} and {(0,1),(1,0)}: indices {0,3} and {1,2}.
  CHECK(min_selector(hat).image == std::vector<unsigned>{0, 1, 1, 0});
  CHECK_FALSE(selector_violation(min_selector(hat), hat).has_value());
}

TEST_CASE("selector violations are named") {
  const EqRel e = EqRel::from_class_ids({0, 0, 1});
  CHECK(selector_violation(SelectorMap{{2, 0, 2}}, e).has_value());  // S(0) not related to 0
  CHECK(selector_violation(SelectorMap{{0, 1, 2}}, e).has_value());  // related points, different picks
  CHECK_FALSE(selector_violation(SelectorMap{{1, 1, 2}}, e).has_value());
}

TEST_CASE("normalized hat selector") {
  const PartialAction swap = z2_swap();
  const SelectorMap s = normalized_hat_selector(swap);
  const PairIndex ix = swap.pair_index();
  for (Element g = 0; g < 2; ++g)
    for (unsigned x = 0; x < 2; ++x) CHECK(s(ix.encode(g, x)) == ix.encode(0, swap.act(g, x)));

  CHECK(normalized_hat_selector(trivial_on(3)).image == std::vector<unsigned>{0, 1, 2});

  const PartialAction ex = testing::example48(3);
  // (0,x0), (0,v), (1,x0), (2,x0) at pair indices 0, 1, 2, 4.
  CHECK(transversal(normalized_hat_selector(ex)) == std::vector<unsigned>{0, 1, 2, 4});
}

TEST_CASE("transversal") {
  CHECK(transversal(min_selector(EqRel::identity(3))) == std::vector<unsigned>{0, 1, 2});
  CHECK(transversal(min_selector(EqRel::from_class_ids({0, 0, 0}))) == std::vector<unsigned>{0});
}

TEST_CASE("tau on a global action is X itself") {
  const PartialAction swap = z2_swap();
  const Globalization glob = globalize(swap);
  const BorelReport b = tau_topology(glob, normalized_hat_selector(swap));
  CHECK(b.checks.ok());
  CHECK(b.tau == glob.xg_topology);
  CHECK(mu_tau_continuity(glob, b).continuous());
  CHECK(check_bireducibility(glob, normalized_hat_selector(swap)).ok());
}

TEST_CASE("tau and mu on the finite analog") {
  const PartialAction ex = testing::example48(3);
  const Globalization glob = globalize(ex);
  const BorelReport b = tau_topology(glob, normalized_hat_selector(ex));
  CHECK_MESSAGE(b.checks.ok(), to_text(b.checks));
  const unsigned v = glob.class_of(0, 1);
  const unsigned x0 = glob.class_of(0, 0);
  CHECK(b.tau.is_open(singleton(v)));
  for (Element g = 1; g < 3; ++g) CHECK(b.tau.is_open(singleton(glob.class_of(g, 0))));
  CHECK(b.tau.neighborhood(x0) == (singleton(x0) | singleton(v)));

  const ContinuityTable c = mu_tau_continuity(glob, b);
  CHECK_FALSE(c.continuous());
  CHECK(c.discontinuous[0] == 0);
  CHECK(c.discontinuous[1] == singleton(x0));
  CHECK(c.discontinuous[2] == singleton(x0));
}

TEST_CASE("trivial group: mu is vacuously continuous") {
  const PartialAction pa = trivial_on(2);
  const Globalization glob = globalize(pa);
  CHECK(mu_tau_continuity(glob, tau_topology(glob, normalized_hat_selector(pa))).continuous());
}

TEST_CASE("bireducibility") {
  const PartialAction ex = testing::example48(3);
  const Globalization glob = globalize(ex);
  const SelectorMap s = normalized_hat_selector(ex);
  const PointMap f = class_reduction(glob, s);
  for (Element g = 0; g < 3; ++g) CHECK(f[glob.class_of(g, 0)] == 0);
  CHECK(f[glob.class_of(0, 1)] == 1);
  CHECK(check_bireducibility(glob, s).ok());
  CHECK(orbit_equivalence(ex).class_count() == 2);
  CHECK(orbit_equivalence(PartialAction::from_total(glob.enveloping_action())).class_count() == 2);

  // Z2 swap induced on {0}: X_G has two classes in one orbit.
  const PartialAction ind = induced(TotalAction{cyclic(2), FinTop::discrete(2), {{0, 1}, {1, 0}}}, 0b01);
  const Globalization g2 = globalize(ind);
  CHECK(g2.class_count() == 2);
  CHECK(orbit_equivalence(PartialAction::from_total(g2.enveloping_action())).class_count() == 1);
  CHECK(check_bireducibility(g2, normalized_hat_selector(ind)).ok());
}

TEST_CASE("hat orbit charts") {
  CHECK(check_hat_orbit_charts(trivial_on(2)).ok());
  CHECK(check_hat_orbit_charts(testing::example48(3)).ok());
  CHECK(check_hat_orbit_charts(z2_swap()).ok());
}

TEST_CASE("selector pipeline on all small valid instances") {
  for (const PartialAction& pa : testing::all_valid(3, 2)) {
    const Globalization glob = globalize(pa);
    const SelectorMap s = normalized_hat_selector(pa);
    CHECK_FALSE(selector_violation(s, glob.relation).has_value());
    // (1, x) is always fixed.
    for (unsigned x = 0; x < pa.points(); ++x) {
      const unsigned p = pa.pair_index().encode(pa.group().identity(), x);
      CHECK(s(p) == p);
    }
    CHECK(tau_topology(glob, s).checks.ok());
    CHECK(check_bireducibility(glob, s).ok());
    CHECK(check_hat_orbit_charts(pa).ok());
  }
}

TEST_CASE("a bad selector is refused") {
  const PartialAction swap = z2_swap();
  const Globalization glob = globalize(swap);
  CHECK_THROWS_AS(tau_topology(glob, SelectorMap{{0, 1, 2, 3}}), Error);
}

}
