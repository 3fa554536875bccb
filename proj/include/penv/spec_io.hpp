#pragma once

#include "penv/paction.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace penv {

struct CyclicGroupSpec {
  std::size_t order = 1;
  bool operator==(const CyclicGroupSpec&) const = default;
};

struct TableGroupSpec {
  std::vector<std::vector<Element>> table;
  bool operator==(const TableGroupSpec&) const = default;
};

using GroupSpec = std::variant<CyclicGroupSpec, TableGroupSpec>;

/// A partial action as read from a JSON document, names resolved to indices.
///
///   {"label": string?,
///    "group": {"kind": "cyclic", "order": int} | {"kind": "table", "table": [[int]]},
///    "space": {"points": [string], "opens": [[string]]},
///    "domains": {"<element>": [string]},
///    "maps": {"<element>": {string: string}}}
///
/// Listed opens generate the topology. Elements missing from "domains" or
/// "maps" get the empty set / empty map; the identity's domain must list
/// every point.
struct ActionSpec {
  std::optional<std::string> label;
  GroupSpec group;
  std::vector<std::string> points;
  std::vector<Subset> opens;
  std::vector<Subset> domains;
  std::vector<PartialMap> maps;

  bool operator==(const ActionSpec&) const = default;
};

/// Throws Error(ParseError) for malformed JSON and Error(SchemaError) with a
/// JSON-pointer path for schema violations.
ActionSpec parse_spec(std::string_view document);

/// Canonical JSON; parse_spec(serialize_spec(s)) == s.
std::string serialize_spec(const ActionSpec& spec);

FiniteGroup build_group(const GroupSpec& spec);
PartialAction to_partial_action(const ActionSpec& spec);

}  // namespace penv
