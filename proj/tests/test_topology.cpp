#include "penv/error.hpp"
#include "penv/topology.hpp"
#include "support/instances.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace penv;

namespace {

FinTop sierpinski() { return make_topology(2, std::vector<Subset>{0b10}); }

std::vector<Subset> sorted(const oracle::Family& f) { return {f.begin(), f.end()}; }

}  // namespace

TEST_SUITE("topology") {

TEST_CASE("generated topologies") {
  CHECK(sierpinski().opens() == std::vector<Subset>{0b00, 0b10, 0b11});
  CHECK(make_topology(3, std::vector<Subset>{}).opens() == std::vector<Subset>{0, 0b111});
  CHECK(make_topology(2, std::vector<Subset>{0b01, 0b10}).opens().size() == 4);
  CHECK(make_topology(2, std::vector<Subset>{0b01, 0b10}).is_discrete());
  CHECK_THROWS_AS(make_topology(2, std::vector<Subset>{0b100}), Error);
}

TEST_CASE("topology count on three points") {
  // Topologies on a labelled 3-set: 29.
  CHECK(testing::all_topologies(1).size() == 1);
  CHECK(testing::all_topologies(2).size() == 4);
  CHECK(testing::all_topologies(3).size() == 29);
}

TEST_CASE("opens match lattice closure of generators") {
  // Every family of subsets of 3 points closed under ∪ and ∩ with ∅ and X
  // is a topology; generate from random pairs of generators.
  for (Subset a = 0; a < 8; ++a)
    for (Subset b = 0; b < 8; ++b) {
      const std::vector<Subset> gens{a, b};
      CHECK(make_topology(3, gens).opens() == sorted(oracle::lattice_closure(3, gens)));
    }
}

TEST_CASE("opens oracle agrees with the lattice closure of neighbourhoods") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const FinTop& t : testing::all_topologies(n))
      CHECK(oracle::opens_of(t) == oracle::lattice_closure(n, t.neighborhoods()));
}

TEST_CASE("interior and closure") {
  const FinTop s = sierpinski();
  CHECK(interior(s, 0b01) == 0);
  CHECK(closure(s, 0b01) == 0b01);
  CHECK(closure(s, 0b10) == 0b11);
  for (const FinTop& t : testing::all_topologies(3)) {
    CHECK(interior(t, t.points()) == t.points());
    CHECK(closure(t, t.points()) == t.points());
  }
  const FinTop d = FinTop::discrete(3);
  for (Subset a = 0; a < 8; ++a) {
    CHECK(interior(d, a) == a);
    CHECK(closure(d, a) == a);
  }
}

TEST_CASE("nowhere dense and meager") {
  const FinTop s = sierpinski();
  CHECK(is_nowhere_dense_in(s, 0b01, 0b11));
  CHECK(is_meager_in(s, 0b01, 0b11));
  CHECK_FALSE(is_meager_in(s, 0b10, 0b11));
  CHECK(is_meager_in(s, 0, 0b11));
  CHECK(is_meager_in(s, 0, 0));
  CHECK_THROWS_AS(is_meager_in(s, 0b11, 0b01), Error);
}

TEST_CASE("meagerness agrees with the union-of-nowhere-dense oracle") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const FinTop& t : testing::all_topologies(n)) {
      const oracle::Family opens = oracle::opens_of(t);
      for (Subset s = 0; s <= t.points(); ++s)
        for (Subset a = s;; a = (a - 1) & s) {
          CHECK(is_nowhere_dense_in(t, a, s) == oracle::nowhere_dense(opens, a, s));
          CHECK(is_meager_in(t, a, s) == oracle::meager(opens, a, s));
          if (a == 0) break;
        }
    }
}

TEST_CASE("separation axioms") {
  const Separation s = separation(sierpinski());
  CHECK(s.t0);
  CHECK_FALSE(s.t1);
  CHECK_FALSE(s.t2);
  const Separation d = separation(FinTop::discrete(3));
  CHECK((d.t0 && d.t1 && d.t2));
  const Separation i = separation(FinTop::indiscrete(2));
  CHECK_FALSE((i.t0 || i.t1 || i.t2));
  for (const FinTop& t : testing::all_topologies(3)) {
    const Separation got = separation(t);
    const Separation want = oracle::separation_of(3, oracle::opens_of(t));
    CHECK(got.t0 == want.t0);
    CHECK(got.t1 == want.t1);
    CHECK(got.t2 == want.t2);
  }
}

TEST_CASE("subspace, product, quotient") {
  const FinTop s = sierpinski();
  CHECK(subspace(s, 0b01) == FinTop::discrete(1));
  CHECK(product_with_discrete(s, 2).opens().size() == 9);
  CHECK(quotient(FinTop::discrete(2), EqRel::from_class_ids({0, 0})) == FinTop::discrete(1));
  // Product opens are exactly the unions of open rectangles.
  for (const FinTop& a : testing::all_topologies(2))
    for (const FinTop& b : testing::all_topologies(2)) {
      std::vector<Subset> rects;
      for (Subset u : a.opens())
        for (Subset w : b.opens()) {
          Subset r = 0;
          for_each_bit(u, [&](unsigned i) {
            for_each_bit(w, [&](unsigned j) { r |= singleton(i * 2 + j); });
          });
          rects.push_back(r);
        }
      CHECK(product(a, b).opens() == sorted(oracle::lattice_closure(4, rects)));
    }
}

TEST_CASE("quotient opens are the sets with open saturated preimage") {
  for (const FinTop& t : testing::all_topologies(3)) {
    for (const auto& ids : std::vector<std::vector<unsigned>>{{0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {0, 0, 0}}) {
      const EqRel e = EqRel::from_class_ids(ids);
      const FinTop q = quotient(t, e);
      for (Subset c = 0; c <= q.points(); ++c) CHECK(q.is_open(c) == t.is_open(e.preimage(c)));
    }
  }
}

TEST_CASE("Borel algebras") {
  CHECK(borel_algebra(sierpinski()).members.size() == 4);
  CHECK(borel_algebra(FinTop::indiscrete(2)).members == std::vector<Subset>{0, 0b11});
  CHECK(borel_algebra(FinTop::discrete(3)).members.size() == 8);
  for (const FinTop& t : testing::all_topologies(3)) {
    const oracle::Family opens = oracle::opens_of(t);
    CHECK(borel_algebra(t).members == sorted(oracle::sigma_closure(3, opens)));
    CHECK(oracle::sigma_by_atoms(3, opens) == oracle::sigma_closure(3, opens));
  }
}

TEST_CASE("continuity and openness of maps") {
  const FinTop s = sierpinski();
  const PointMap id{0, 1};
  CHECK(is_continuous(id, s, s));
  CHECK(is_open_map(id, s, s));
  const PointMap constant{0, 0};
  CHECK(is_continuous(constant, FinTop::discrete(2), s));
  CHECK_FALSE(is_open_map(constant, FinTop::discrete(2), s));
  CHECK(is_gdelta(s, 0b10));
  CHECK_FALSE(is_gdelta(s, 0b01));
  // Continuity from the definition: preimages of opens are open.
  for (const FinTop& a : testing::all_topologies(2))
    for (const FinTop& b : testing::all_topologies(2))
      for (unsigned f0 = 0; f0 < 2; ++f0)
        for (unsigned f1 = 0; f1 < 2; ++f1) {
          const PointMap f{f0, f1};
          bool cont = true, open = true;
          for (Subset u : b.opens()) cont &= a.is_open(preimage(f, u, 2));
          for (Subset u : a.opens()) open &= b.is_open(image(f, u));
          CHECK(is_continuous(f, a, b) == cont);
          CHECK(is_open_map(f, a, b) == open);
        }
}

TEST_CASE("transport relabels points") {
  const FinTop s = sierpinski();
  const FinTop swapped = transport(s, {1, 0});
  CHECK(swapped.opens() == std::vector<Subset>{0b00, 0b01, 0b11});
}

}
