#pragma once

// Brute-force reference computations over explicit families of sets.

#include "penv/paction.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <vector>

namespace penv::oracle {

using Family = std::set<Subset>;

/// Close a family under pairwise union and intersection, adding ∅ and the
/// full set.
inline Family lattice_closure(std::size_t n, const std::vector<Subset>& gens) {
  Family fam{0, full_set(n)};
  fam.insert(gens.begin(), gens.end());
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Subset> cur(fam.begin(), fam.end());
    for (Subset a : cur)
      for (Subset b : cur) {
        grew |= fam.insert(a | b).second;
        grew |= fam.insert(a & b).second;
      }
  }
  return fam;
}

/// Opens of t: the subsets that are unions of the minimal neighbourhoods
/// they contain.
inline Family opens_of(const FinTop& t) {
  Family fam;
  for (Subset s = 0; s <= t.points(); ++s) {
    Subset covered = 0;
    for (unsigned x = 0; x < t.size(); ++x)
      if (is_subset(t.neighborhood(x), s)) covered |= t.neighborhood(x);
    if (covered == s) fam.insert(s);
  }
  return fam;
}

/// σ-algebra generated by a family: close under complement and union.
inline Family sigma_closure(std::size_t n, const Family& gens) {
  Family fam = gens;
  fam.insert(0);
  fam.insert(full_set(n));
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Subset> cur(fam.begin(), fam.end());
    for (Subset a : cur) {
      grew |= fam.insert(full_set(n) & ~a).second;
      for (Subset b : cur) grew |= fam.insert(a | b).second;
    }
  }
  return fam;
}

/// σ-algebra generated by a family, via atoms: a set belongs iff it contains
/// the atom of each of its points, the atom of x being the intersection of
/// the members containing x and the complements of those that do not.
inline Family sigma_by_atoms(std::size_t n, const Family& gens) {
  const Subset all = full_set(n);
  std::vector<Subset> atom(n, all);
  for (unsigned x = 0; x < n; ++x)
    for (Subset u : gens) atom[x] &= contains(u, x) ? u : (all & ~u);
  Family out;
  for (Subset b = 0;; ++b) {
    bool ok = true;
    for_each_bit(b, [&](unsigned x) { ok &= is_subset(atom[x], b); });
    if (ok) out.insert(b);
    if (b == all) break;
  }
  return out;
}

/// Opens of the subspace s, as subsets of the ambient index set.
inline Family relative_opens(const Family& opens, Subset s) {
  Family out;
  for (Subset u : opens) out.insert(u & s);
  return out;
}

inline Subset relative_interior(const Family& rel, Subset a) {
  Subset in = 0;
  for (Subset u : rel)
    if (is_subset(u, a)) in |= u;
  return in;
}

inline Subset relative_closure(const Family& rel, Subset s, Subset a) {
  // Complement in s of the union of relative opens missing a.
  Subset out = 0;
  for (Subset u : rel)
    if ((u & a) == 0) out |= u;
  return s & ~out;
}

inline bool nowhere_dense(const Family& opens, Subset a, Subset s) {
  const Family rel = relative_opens(opens, s);
  return relative_interior(rel, relative_closure(rel, s, a)) == 0;
}

/// A is meager in s iff it is the union of the nowhere-dense sets it contains.
inline bool meager(const Family& opens, Subset a, Subset s) {
  Subset covered = 0;
  for (Subset b = a;; b = (b - 1) & a) {
    if (nowhere_dense(opens, b, s)) covered |= b;
    if (b == 0) break;
  }
  return covered == a;
}

inline Family all_subsets(std::size_t n) {
  Family f;
  for (Subset s = 0; s <= full_set(n); ++s) f.insert(s);
  return f;
}

inline Separation separation_of(std::size_t n, const Family& opens) {
  Separation s{true, true, true};
  for (unsigned x = 0; x < n; ++x)
    for (unsigned y = 0; y < n; ++y) {
      if (x == y) continue;
      bool x_not_y = false, y_not_x = false, disjoint = false;
      for (Subset u : opens) {
        if (contains(u, x) && !contains(u, y)) x_not_y = true;
        if (contains(u, y) && !contains(u, x)) y_not_x = true;
        for (Subset w : opens)
          if (contains(u, x) && contains(w, y) && (u & w) == 0) disjoint = true;
      }
      if (!x_not_y && !y_not_x) s.t0 = false;
      if (!x_not_y) s.t1 = false;
      if (!disjoint) s.t2 = false;
    }
  return s;
}

/// PA1–PA3 read off the map table, the domain table matching the maps, each
/// X_g open and each m_g a homeomorphism X_{g⁻¹} → X_g of subspaces.
inline bool is_topological_partial_action(const PartialAction& pa) {
  const auto& grp = pa.group();
  const std::size_t n = pa.points();
  auto act = [&](Element g, unsigned x) { return pa.map(g)[x]; };
  for (unsigned x = 0; x < n; ++x) {
    if (act(grp.identity(), x) != x) return false;  // PA3
    for (Element g = 0; g < grp.order(); ++g) {
      const unsigned y = act(g, x);
      if (y == kUndefined) continue;
      if (y >= n || act(grp.inv(g), y) != x) return false;  // PA1
      for (Element h = 0; h < grp.order(); ++h) {
        const unsigned z = act(h, y);
        if (z != kUndefined && act(grp.mul(h, g), x) != z) return false;  // PA2
      }
    }
  }
  const Family opens = opens_of(pa.space());
  auto subspace_open = [&](Subset a, Subset s) {
    return std::any_of(opens.begin(), opens.end(), [&](Subset u) { return (u & s) == a; });
  };
  for (Element g = 0; g < grp.order(); ++g) {
    Subset src = 0, img = 0;
    for (unsigned x = 0; x < n; ++x)
      if (act(g, x) != kUndefined) {
        src |= singleton(x);
        img |= singleton(act(g, x));
      }
    if (pa.dom(g) != img || !opens.contains(img)) return false;
    for (Subset u : opens) {
      Subset fwd = 0, back = 0;
      for_each_bit(u & src, [&](unsigned x) { fwd |= singleton(act(g, x)); });
      for_each_bit(u & img, [&](unsigned y) { back |= singleton(act(grp.inv(g), y)); });
      if (!subspace_open(fwd, img) || !subspace_open(back, src)) return false;
    }
  }
  return true;
}

/// Orbit relation of the hat action on G×X, by breadth-first search with the
/// formula (h, x) ↦ (h g⁻¹, g·x) applied whenever g·x is defined.
inline std::vector<unsigned> hat_orbit_ids(const PartialAction& pa) {
  const auto& grp = pa.group();
  const std::size_t n = pa.points();
  const std::size_t total = grp.order() * n;
  std::vector<unsigned> id(total, kUndefined);
  unsigned next = 0;
  for (unsigned start = 0; start < total; ++start) {
    if (id[start] != kUndefined) continue;
    std::deque<unsigned> queue{start};
    id[start] = next;
    while (!queue.empty()) {
      const unsigned p = queue.front();
      queue.pop_front();
      const Element h = p / n;
      const unsigned x = p % n;
      for (Element g = 0; g < grp.order(); ++g) {
        const unsigned y = pa.map(g)[x];
        if (y == kUndefined) continue;
        const unsigned q = grp.mul(h, grp.inv(g)) * n + y;
        if (id[q] == kUndefined) {
          id[q] = next;
          queue.push_back(q);
        }
      }
    }
    ++next;
  }
  return id;
}

/// Vaught transforms straight from the definitions, with meagerness decided
/// in the discrete topology on G by `meager` above.
inline Subset delta(const PartialAction& pa, Subset a, Subset v) {
  const auto& grp = pa.group();
  const Family discrete = all_subsets(grp.order());
  Subset out = 0;
  for (unsigned x = 0; x < pa.points(); ++x) {
    Subset vx = 0, hits = 0;
    for (Element g = 0; g < grp.order(); ++g) {
      if (!contains(v, g) || pa.map(g)[x] == kUndefined) continue;
      vx |= singleton(g);
      if (contains(a, pa.map(g)[x])) hits |= singleton(g);
    }
    if (!meager(discrete, hits, vx)) out |= singleton(x);
  }
  return out;
}

inline Subset star(const PartialAction& pa, Subset a, Subset v) {
  const auto& grp = pa.group();
  const Family discrete = all_subsets(grp.order());
  Subset out = 0;
  for (unsigned x = 0; x < pa.points(); ++x) {
    Subset vx = 0, misses = 0;
    for (Element g = 0; g < grp.order(); ++g) {
      if (!contains(v, g) || pa.map(g)[x] == kUndefined) continue;
      vx |= singleton(g);
      if (!contains(a, pa.map(g)[x])) misses |= singleton(g);
    }
    if (meager(discrete, misses, vx)) out |= singleton(x);
  }
  return out;
}

}  // namespace penv::oracle
