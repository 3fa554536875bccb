#include "penv/group.hpp"

#include "penv/error.hpp"

#include <string>

namespace penv {

std::vector<std::vector<Element>> FiniteGroup::table() const {
  std::vector<std::vector<Element>> rows(order_, std::vector<Element>(order_));
  for (Element a = 0; a < order_; ++a)
    for (Element b = 0; b < order_; ++b) rows[a][b] = mul(a, b);
  return rows;
}

ElementSet FiniteGroup::right_mul(ElementSet s, Element h) const {
  ElementSet out = 0;
  for_each_bit(s, [&](unsigned g) { out |= singleton(mul(g, h)); });
  return out;
}

bool FiniteGroup::is_subgroup(ElementSet h) const {
  if (!is_subset(h, elements()) || !contains(h, id_)) return false;
  bool closed = true;
  for_each_bit(h, [&](unsigned a) {
    if (!contains(h, inv(a))) closed = false;
    for_each_bit(h, [&](unsigned b) {
      if (!contains(h, mul(a, b))) closed = false;
    });
  });
  return closed;
}

FiniteGroup make_group(const std::vector<std::vector<Element>>& table) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::InvalidOrder, "empty Cayley table");
  if (n > kMaxPoints)
    throw Error(ErrorKind::CapacityExceeded, "group order " + std::to_string(n) + " exceeds 64");
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n)
      throw Error(ErrorKind::InvalidOrder, "row " + std::to_string(a) + " has wrong length");
    for (Element e : table[a])
      if (e >= n)
        throw Error(ErrorKind::InvalidOrder,
                    "entry " + std::to_string(e) + " in row " + std::to_string(a) + " out of range");
  }

  FiniteGroup g;
  g.order_ = n;
  g.mul_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g.mul_[a * n + b] = table[a][b];

  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw Error(ErrorKind::NotAssociative, "(" + std::to_string(a) + "," + std::to_string(b) +
                                                     "," + std::to_string(c) + ")");

  bool found = false;
  for (Element e = 0; e < n && !found; ++e) {
    bool is_id = true;
    for (Element a = 0; a < n && is_id; ++a) is_id = g.mul(e, a) == a && g.mul(a, e) == a;
    if (is_id) {
      g.id_ = e;
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::NoIdentity, "no two-sided identity in table");

  g.inv_.assign(n, 0);
  for (Element a = 0; a < n; ++a) {
    bool has = false;
    for (Element b = 0; b < n && !has; ++b) {
      if (g.mul(a, b) == g.id_ && g.mul(b, a) == g.id_) {
        g.inv_[a] = b;
        has = true;
      }
    }
    if (!has) throw Error(ErrorKind::NoInverse, std::to_string(a));
  }
  return g;
}

FiniteGroup cyclic(std::size_t k) {
  if (k == 0) throw Error(ErrorKind::InvalidOrder, "cyclic group of order 0");
  std::vector<std::vector<Element>> t(k, std::vector<Element>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) t[a][b] = static_cast<Element>((a + b) % k);
  return make_group(t);
}

}  // namespace penv
