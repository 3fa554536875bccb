#include "penv/spec_io.hpp"

#include "penv/error.hpp"

#include <json.hpp>

#include <map>
#include <string>

namespace penv {

using nlohmann::json;

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::SchemaError, (path.empty() ? "/" : path) + ": " + what);
}

const json& field(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) schema(path + "/" + key, "missing");
  return *it;
}

std::size_t as_count(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) schema(path, "expected a non-negative integer");
  return static_cast<std::size_t>(j.get<long long>());
}

GroupSpec parse_group(const json& j) {
  if (!j.is_object()) schema("/group", "expected an object");
  const json& kind = field(j, "/group", "kind");
  if (!kind.is_string()) schema("/group/kind", "expected a string");
  const std::string k = kind.get<std::string>();
  if (k == "cyclic") {
    const std::size_t order = as_count(field(j, "/group", "order"), "/group/order");
    return CyclicGroupSpec{order};
  }
  if (k == "table") {
    const json& t = field(j, "/group", "table");
    if (!t.is_array()) schema("/group/table", "expected an array of rows");
    TableGroupSpec spec;
    for (std::size_t r = 0; r < t.size(); ++r) {
      const std::string rp = "/group/table/" + std::to_string(r);
      if (!t[r].is_array()) schema(rp, "expected an array");
      std::vector<Element> row;
      for (std::size_t c = 0; c < t[r].size(); ++c)
        row.push_back(static_cast<Element>(as_count(t[r][c], rp + "/" + std::to_string(c))));
      spec.table.push_back(std::move(row));
    }
    return spec;
  }
  schema("/group/kind", "expected \"cyclic\" or \"table\"");
}

Element parse_element(const std::string& key, std::size_t order, const std::string& path) {
  if (key.empty() || key.size() > 4 || key.find_first_not_of("0123456789") != std::string::npos ||
      (key.size() > 1 && key[0] == '0'))
    schema(path, "group elements are decimal indices");
  const auto e = static_cast<Element>(std::stoul(key));
  if (e >= order) schema(path, "element out of range");
  return e;
}

}  // namespace

FiniteGroup build_group(const GroupSpec& spec) {
  if (const auto* c = std::get_if<CyclicGroupSpec>(&spec)) return cyclic(c->order);
  return make_group(std::get<TableGroupSpec>(spec).table);
}

ActionSpec parse_spec(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  if (!doc.is_object()) schema("", "expected an object");

  ActionSpec spec;
  if (auto it = doc.find("label"); it != doc.end()) {
    if (!it->is_string()) schema("/label", "expected a string");
    spec.label = it->get<std::string>();
  }

  spec.group = parse_group(field(doc, "", "group"));
  FiniteGroup grp = [&] {
    try {
      return build_group(spec.group);
    } catch (const Error& e) {
      schema("/group", e.what());
    }
  }();
  const std::size_t order = grp.order();

  const json& space = field(doc, "", "space");
  if (!space.is_object()) schema("/space", "expected an object");
  const json& pts = field(space, "/space", "points");
  if (!pts.is_array()) schema("/space/points", "expected an array of names");
  if (pts.size() > kMaxPoints) schema("/space/points", "at most 64 points are supported");
  std::map<std::string, unsigned> index;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string p = "/space/points/" + std::to_string(i);
    if (!pts[i].is_string()) schema(p, "expected a string");
    const std::string name = pts[i].get<std::string>();
    if (!index.emplace(name, static_cast<unsigned>(i)).second) schema(p, "duplicate point \"" + name + "\"");
    spec.points.push_back(name);
  }
  auto resolve = [&](const json& j, const std::string& path) {
    if (!j.is_string()) schema(path, "expected a point name");
    auto it = index.find(j.get<std::string>());
    if (it == index.end()) schema(path, "unknown point \"" + j.get<std::string>() + "\"");
    return it->second;
  };
  auto resolve_set = [&](const json& j, const std::string& path) {
    if (!j.is_array()) schema(path, "expected an array of point names");
    Subset s = 0;
    for (std::size_t i = 0; i < j.size(); ++i) s |= singleton(resolve(j[i], path + "/" + std::to_string(i)));
    return s;
  };

  const json& opens = field(space, "/space", "opens");
  if (!opens.is_array()) schema("/space/opens", "expected an array of sets");
  for (std::size_t i = 0; i < opens.size(); ++i)
    spec.opens.push_back(resolve_set(opens[i], "/space/opens/" + std::to_string(i)));

  const json& domains = field(doc, "", "domains");
  if (!domains.is_object()) schema("/domains", "expected an object keyed by element");
  spec.domains.assign(order, 0);
  std::vector<bool> has_domain(order, false);
  for (const auto& [key, value] : domains.items()) {
    const std::string path = "/domains/" + key;
    const Element g = parse_element(key, order, path);
    spec.domains[g] = resolve_set(value, path);
    has_domain[g] = true;
  }
  if (!has_domain[grp.identity()] || spec.domains[grp.identity()] != full_set(spec.points.size()))
    schema("/domains/" + std::to_string(grp.identity()), "the identity's domain must list every point");

  const json& maps = field(doc, "", "maps");
  if (!maps.is_object()) schema("/maps", "expected an object keyed by element");
  spec.maps.assign(order, PartialMap(spec.points.size(), kUndefined));
  for (const auto& [key, value] : maps.items()) {
    const std::string path = "/maps/" + key;
    const Element g = parse_element(key, order, path);
    if (!value.is_object()) schema(path, "expected an object from point to point");
    for (const auto& [from, to] : value.items()) {
      const unsigned x = resolve(json(from), path + "/" + from);
      spec.maps[g][x] = resolve(to, path + "/" + from);
    }
  }
  return spec;
}

std::string serialize_spec(const ActionSpec& spec) {
  json doc;
  if (spec.label) doc["label"] = *spec.label;
  if (const auto* c = std::get_if<CyclicGroupSpec>(&spec.group))
    doc["group"] = {{"kind", "cyclic"}, {"order", c->order}};
  else
    doc["group"] = {{"kind", "table"}, {"table", std::get<TableGroupSpec>(spec.group).table}};

  auto names = [&](Subset s) {
    json arr = json::array();
    for_each_bit(s, [&](unsigned i) { arr.push_back(spec.points[i]); });
    return arr;
  };
  json opens = json::array();
  for (Subset s : spec.opens) opens.push_back(names(s));
  doc["space"] = {{"points", spec.points}, {"opens", opens}};

  json domains = json::object();
  for (std::size_t g = 0; g < spec.domains.size(); ++g) domains[std::to_string(g)] = names(spec.domains[g]);
  doc["domains"] = domains;

  json maps = json::object();
  for (std::size_t g = 0; g < spec.maps.size(); ++g) {
    json m = json::object();
    for (std::size_t x = 0; x < spec.maps[g].size(); ++x)
      if (spec.maps[g][x] != kUndefined) m[spec.points[x]] = spec.points[spec.maps[g][x]];
    maps[std::to_string(g)] = m;
  }
  doc["maps"] = maps;
  return doc.dump(2) + "\n";
}

PartialAction to_partial_action(const ActionSpec& spec) {
  FiniteGroup grp = build_group(spec.group);
  FinTop space = make_topology(spec.points.size(), spec.opens);
  return PartialAction(std::move(grp), std::move(space), spec.domains, spec.maps);
}

}  // namespace penv
