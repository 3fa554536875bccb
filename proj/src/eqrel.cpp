#include "penv/eqrel.hpp"

#include <numeric>

namespace penv {

EqRel EqRel::identity(std::size_t n) {
  std::vector<unsigned> ids(n);
  std::iota(ids.begin(), ids.end(), 0U);
  return from_class_ids(ids);
}

EqRel EqRel::from_class_ids(const std::vector<unsigned>& ids) {
  EqRel e;
  e.class_id_.resize(ids.size());
  std::vector<std::pair<unsigned, unsigned>> seen;  // raw id -> canonical id
  for (unsigned i = 0; i < ids.size(); ++i) {
    unsigned canon = 0;
    bool found = false;
    for (const auto& [raw, c] : seen) {
      if (raw == ids[i]) {
        canon = c;
        found = true;
        break;
      }
    }
    if (!found) {
      canon = static_cast<unsigned>(e.reps_.size());
      seen.emplace_back(ids[i], canon);
      e.reps_.push_back(i);
    }
    e.class_id_[i] = canon;
  }
  return e;
}

std::optional<EqRel> EqRel::from_relation(std::size_t n,
                                          const std::function<bool(unsigned, unsigned)>& related) {
  DisjointSet ds(n);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      if (related(a, b)) ds.unite(a, b);
  EqRel e = ds.relation();
  // The union-find closure is an equivalence; the input is one iff nothing was added.
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      if (related(a, b) != e.related(a, b)) return std::nullopt;
  return e;
}

Subset EqRel::members(unsigned c) const {
  Subset s = 0;
  for (unsigned i = 0; i < class_id_.size(); ++i)
    if (class_id_[i] == c) s |= singleton(i);
  return s;
}

Subset EqRel::saturate(Subset s) const { return preimage(classes_of(s)); }

Subset EqRel::classes_of(Subset s) const {
  Subset cs = 0;
  for_each_bit(s, [&](unsigned i) { cs |= singleton(class_id_[i]); });
  return cs;
}

Subset EqRel::preimage(Subset cs) const {
  Subset s = 0;
  for (unsigned i = 0; i < class_id_.size(); ++i)
    if (contains(cs, class_id_[i])) s |= singleton(i);
  return s;
}

DisjointSet::DisjointSet(std::size_t n) : parent_(n) {
  std::iota(parent_.begin(), parent_.end(), 0U);
}

unsigned DisjointSet::find(unsigned x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

void DisjointSet::unite(unsigned a, unsigned b) {
  a = find(a);
  b = find(b);
  if (a == b) return;
  if (a < b)
    parent_[b] = a;
  else
    parent_[a] = b;
}

EqRel DisjointSet::relation() {
  std::vector<unsigned> ids(parent_.size());
  for (unsigned i = 0; i < ids.size(); ++i) ids[i] = find(i);
  return EqRel::from_class_ids(ids);
}

}  // namespace penv
