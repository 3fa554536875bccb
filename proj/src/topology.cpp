#include "penv/topology.hpp"

#include "penv/error.hpp"

#include <algorithm>
#include <string>

namespace penv {

namespace {

void require_capacity(std::size_t n, const char* what) {
  if (n > kMaxPoints)
    throw Error(ErrorKind::CapacityExceeded,
                std::string(what) + " needs " + std::to_string(n) + " points, limit is 64");
}

// Packs the bits of `a` that lie in `s` into positions 0..|s|-1.
Subset compress(Subset a, Subset s) {
  Subset out = 0;
  unsigned pos = 0;
  for_each_bit(s, [&](unsigned i) {
    if (contains(a, i)) out |= singleton(pos);
    ++pos;
  });
  return out;
}

}  // namespace

FinTop FinTop::discrete(std::size_t n) {
  require_capacity(n, "discrete space");
  FinTop t;
  t.nbhd_.resize(n);
  for (unsigned x = 0; x < n; ++x) t.nbhd_[x] = singleton(x);
  return t;
}

FinTop FinTop::indiscrete(std::size_t n) {
  require_capacity(n, "indiscrete space");
  FinTop t;
  t.nbhd_.assign(n, full_set(n));
  return t;
}

FinTop FinTop::from_neighborhoods(std::vector<Subset> nbhd) {
  require_capacity(nbhd.size(), "space");
  const Subset all = full_set(nbhd.size());
  for (unsigned x = 0; x < nbhd.size(); ++x) {
    if (!is_subset(nbhd[x], all) || !contains(nbhd[x], x))
      throw Error(ErrorKind::InvalidSubset, "neighbourhood of " + std::to_string(x) + " malformed");
    for_each_bit(nbhd[x], [&](unsigned y) {
      if (!is_subset(nbhd[y], nbhd[x]))
        throw Error(ErrorKind::InvalidSubset,
                    "neighbourhoods of " + std::to_string(x) + " and " + std::to_string(y) +
                        " are not nested");
    });
  }
  FinTop t;
  t.nbhd_ = std::move(nbhd);
  return t;
}

bool FinTop::is_open(Subset a) const {
  bool open = true;
  for_each_bit(a, [&](unsigned x) {
    if (x >= size() || !is_subset(nbhd_[x], a)) open = false;
  });
  return open;
}

bool FinTop::is_discrete() const {
  for (unsigned x = 0; x < size(); ++x)
    if (nbhd_[x] != singleton(x)) return false;
  return true;
}

std::vector<Subset> FinTop::opens() const {
  std::vector<Subset> family{0};
  for (Subset u : nbhd_) {
    const std::size_t n = family.size();
    for (std::size_t i = 0; i < n; ++i) family.push_back(family[i] | u);
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
  }
  return family;
}

bool SetFamily::contains(Subset s) const {
  return std::binary_search(members.begin(), members.end(), s);
}

FinTop make_topology(std::size_t size, std::span<const Subset> generators) {
  require_capacity(size, "space");
  const Subset all = full_set(size);
  std::vector<Subset> nbhd(size, all);
  for (Subset g : generators) {
    if (!is_subset(g, all))
      throw Error(ErrorKind::InvalidSubset,
                  "generator " + format_subset(g) + " not within " + std::to_string(size) + " points");
    for_each_bit(g, [&](unsigned x) { nbhd[x] &= g; });
  }
  return FinTop::from_neighborhoods(std::move(nbhd));
}

Subset interior(const FinTop& t, Subset a) {
  Subset out = 0;
  for_each_bit(a & t.points(), [&](unsigned x) {
    if (is_subset(t.neighborhood(x), a)) out |= singleton(x);
  });
  return out;
}

Subset closure(const FinTop& t, Subset a) {
  Subset out = 0;
  for (unsigned x = 0; x < t.size(); ++x)
    if ((t.neighborhood(x) & a) != 0) out |= singleton(x);
  return out;
}

bool is_nowhere_dense_in(const FinTop& t, Subset a, Subset s) {
  const Subset cl = closure(t, a) & s;
  // Interior relative to s: points whose trace neighbourhood stays inside cl.
  bool empty_interior = true;
  for_each_bit(cl, [&](unsigned y) {
    if (is_subset(t.neighborhood(y) & s, cl)) empty_interior = false;
  });
  return empty_interior;
}

bool is_meager_in(const FinTop& t, Subset a, Subset s) {
  if (!is_subset(a, s) || !is_subset(s, t.points()))
    throw Error(ErrorKind::InvalidSubset, format_subset(a) + " is not inside " + format_subset(s));
  bool meager = true;
  for_each_bit(a, [&](unsigned x) {
    if (!is_nowhere_dense_in(t, singleton(x), s)) meager = false;
  });
  return meager;
}

Separation separation(const FinTop& t) {
  Separation sep{true, true, true};
  for (unsigned x = 0; x < t.size(); ++x) {
    if (!t.is_closed(singleton(x))) sep.t1 = false;
    for (unsigned y = x + 1; y < t.size(); ++y) {
      if (t.neighborhood(x) == t.neighborhood(y)) sep.t0 = false;
      if ((t.neighborhood(x) & t.neighborhood(y)) != 0) sep.t2 = false;
    }
  }
  return sep;
}

FinTop subspace(const FinTop& t, Subset s) {
  if (!is_subset(s, t.points()))
    throw Error(ErrorKind::InvalidSubset, format_subset(s) + " is not a set of points");
  std::vector<Subset> nbhd;
  nbhd.reserve(cardinality(s));
  for_each_bit(s, [&](unsigned x) { nbhd.push_back(compress(t.neighborhood(x) & s, s)); });
  return FinTop::from_neighborhoods(std::move(nbhd));
}

FinTop product(const FinTop& a, const FinTop& b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  require_capacity(na * nb, "product space");
  std::vector<Subset> nbhd(na * nb, 0);
  for (unsigned i = 0; i < na; ++i) {
    for (unsigned j = 0; j < nb; ++j) {
      Subset u = 0;
      for_each_bit(a.neighborhood(i), [&](unsigned k) { u |= b.neighborhood(j) << (k * nb); });
      nbhd[i * nb + j] = u;
    }
  }
  return FinTop::from_neighborhoods(std::move(nbhd));
}

FinTop product_with_discrete(const FinTop& t, std::size_t k) {
  return product(FinTop::discrete(k), t);
}

FinTop quotient(const FinTop& t, const EqRel& e) {
  require_capacity(e.class_count(), "quotient space");
  std::vector<Subset> nbhd(e.class_count());
  for (unsigned c = 0; c < e.class_count(); ++c) {
    Subset classes = singleton(c);
    for (;;) {
      Subset reach = 0;
      for_each_bit(e.preimage(classes), [&](unsigned p) { reach |= t.neighborhood(p); });
      const Subset next = classes | e.classes_of(reach);
      if (next == classes) break;
      classes = next;
    }
    nbhd[c] = classes;
  }
  return FinTop::from_neighborhoods(std::move(nbhd));
}

FinTop transport(const FinTop& t, const PointMap& relabel) {
  const std::size_t n = t.size();
  if (relabel.size() != n || image(relabel, t.points()) != full_set(n))
    throw Error(ErrorKind::InvalidSubset, "relabelling is not a bijection");
  std::vector<Subset> nbhd(n);
  for (unsigned x = 0; x < n; ++x) nbhd[relabel[x]] = image(relabel, t.neighborhood(x));
  return FinTop::from_neighborhoods(std::move(nbhd));
}

std::vector<Subset> borel_atoms(const FinTop& t) {
  std::vector<Subset> atoms;
  Subset assigned = 0;
  for (unsigned x = 0; x < t.size(); ++x) {
    if (contains(assigned, x)) continue;
    Subset atom = 0;
    for (unsigned y = x; y < t.size(); ++y)
      if (t.neighborhood(y) == t.neighborhood(x)) atom |= singleton(y);
    assigned |= atom;
    atoms.push_back(atom);
  }
  return atoms;
}

SetFamily borel_algebra(const FinTop& t) {
  const auto atoms = borel_atoms(t);
  if (atoms.size() > 24)
    throw Error(ErrorKind::CapacityExceeded,
                "Borel algebra with " + std::to_string(atoms.size()) + " atoms is too large to list");
  SetFamily fam;
  fam.size = t.size();
  const std::size_t count = std::size_t{1} << atoms.size();
  fam.members.reserve(count);
  for (std::size_t pick = 0; pick < count; ++pick) {
    Subset s = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if ((pick >> i) & 1U) s |= atoms[i];
    fam.members.push_back(s);
  }
  std::sort(fam.members.begin(), fam.members.end());
  return fam;
}

Subset image(const PointMap& f, Subset a) {
  Subset out = 0;
  for_each_bit(a, [&](unsigned x) { out |= singleton(f[x]); });
  return out;
}

Subset preimage(const PointMap& f, Subset a, std::size_t src_size) {
  Subset out = 0;
  for (unsigned x = 0; x < src_size; ++x)
    if (contains(a, f[x])) out |= singleton(x);
  return out;
}

bool is_continuous(const PointMap& f, const FinTop& src, const FinTop& dst) {
  // Opens of dst are unions of minimal neighbourhoods and preimage commutes
  // with unions.
  for (unsigned y = 0; y < dst.size(); ++y)
    if (!src.is_open(preimage(f, dst.neighborhood(y), src.size()))) return false;
  return true;
}

bool is_open_map(const PointMap& f, const FinTop& src, const FinTop& dst) {
  for (unsigned x = 0; x < src.size(); ++x)
    if (!dst.is_open(image(f, src.neighborhood(x)))) return false;
  return true;
}

bool is_homeomorphism(const PointMap& f, const FinTop& src, const FinTop& dst) {
  if (src.size() != dst.size() || f.size() != src.size()) return false;
  if (image(f, src.points()) != dst.points()) return false;
  return is_continuous(f, src, dst) && is_open_map(f, src, dst);
}

}  // namespace penv
