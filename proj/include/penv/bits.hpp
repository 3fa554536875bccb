#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace penv {

/// A subset of a dense index range {0..63}, one bit per index.
using Subset = std::uint64_t;

/// Largest carrier a Subset can address.
inline constexpr std::size_t kMaxPoints = 64;

constexpr Subset full_set(std::size_t n) {
  return n >= kMaxPoints ? ~Subset{0} : (Subset{1} << n) - 1;
}

constexpr Subset singleton(std::size_t i) { return Subset{1} << i; }

constexpr bool contains(Subset s, std::size_t i) { return (s >> i) & 1U; }

constexpr bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }

constexpr std::size_t cardinality(Subset s) {
  return static_cast<std::size_t>(std::popcount(s));
}

template <typename F>
constexpr void for_each_bit(Subset s, F&& f) {
  while (s != 0) {
    const auto i = static_cast<unsigned>(std::countr_zero(s));
    f(i);
    s &= s - 1;
  }
}

inline std::vector<unsigned> to_indices(Subset s) {
  std::vector<unsigned> out;
  out.reserve(cardinality(s));
  for_each_bit(s, [&](unsigned i) { out.push_back(i); });
  return out;
}

inline Subset from_indices(const std::vector<unsigned>& idx) {
  Subset s = 0;
  for (unsigned i : idx) s |= singleton(i);
  return s;
}

/// "{0,2,5}"
inline std::string format_subset(Subset s) {
  std::string out = "{";
  bool first = true;
  for_each_bit(s, [&](unsigned i) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  });
  return out + "}";
}

}  // namespace penv
