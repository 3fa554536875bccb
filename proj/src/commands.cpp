#include "penv/commands.hpp"

#include "penv/error.hpp"
#include "penv/globalize.hpp"
#include "penv/selector.hpp"
#include "penv/vaught.hpp"

#include <sstream>

namespace penv {

using nlohmann::json;

namespace {

struct Context {
  const ActionSpec& spec;
  const PartialAction& pa;

  const std::string& name(unsigned x) const { return spec.points[x]; }

  json names(Subset s) const {
    json arr = json::array();
    for_each_bit(s, [&](unsigned x) { arr.push_back(name(x)); });
    return arr;
  }

  std::string pair_name(unsigned p) const {
    const PairIndex idx = pa.pair_index();
    return "(" + std::to_string(idx.first(p)) + "," + name(idx.second(p)) + ")";
  }

  std::string class_name(const Globalization& glob, unsigned c) const {
    const PairIndex idx = pa.pair_index();
    const unsigned r = glob.rep(c);
    return "[" + std::to_string(idx.first(r)) + "," + name(idx.second(r)) + "]";
  }

  json class_names(const Globalization& glob, Subset cs) const {
    json arr = json::array();
    for_each_bit(cs, [&](unsigned c) { arr.push_back(class_name(glob, c)); });
    return arr;
  }
};

json element_list(ElementSet s) {
  json arr = json::array();
  for_each_bit(s, [&](unsigned g) { arr.push_back(g); });
  return arr;
}

std::string join(const json& arr) {
  std::string out = "{";
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) out += ", ";
    out += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return out + "}";
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) {
    const auto b = cur.find_first_not_of(' ');
    const auto e = cur.find_last_not_of(' ');
    if (b != std::string::npos) parts.push_back(cur.substr(b, e - b + 1));
  }
  return parts;
}

void add_orbits(CommandResult& out, const Context& ctx) {
  const PartialAction& pa = ctx.pa;
  json table = json::array();
  for (unsigned x = 0; x < pa.points(); ++x) {
    table.push_back({{"point", ctx.name(x)},
                     {"G^x", element_list(g_upper(pa, x))},
                     {"G_x", element_list(stabilizer(pa, x))},
                     {"orbit", ctx.names(orbit(pa, x))}});
    out.summary.push_back("point " + ctx.name(x) + ": G^x=" + join(element_list(g_upper(pa, x))) +
                          " G_x=" + join(element_list(stabilizer(pa, x))) +
                          " orbit=" + join(ctx.names(orbit(pa, x))));
  }
  const EqRel e = orbit_equivalence(pa);
  json classes = json::array();
  for (unsigned c = 0; c < e.class_count(); ++c) classes.push_back(ctx.names(e.members(c)));
  out.data["orbits"] = {{"points", table}, {"classes", classes}};
}

std::string render_dot(const Context& ctx, const Globalization& glob) {
  std::ostringstream dot;
  const FinTop& t = glob.xg_topology;
  dot << "digraph specialization {\n";
  for (unsigned c = 0; c < glob.class_count(); ++c)
    dot << "  c" << c << " [label=\"" << ctx.class_name(glob, c) << "\"];\n";
  // c -> d iff c lies in the closure of {d}, i.e. d ∈ U_c.
  for (unsigned c = 0; c < glob.class_count(); ++c)
    for_each_bit(t.neighborhood(c), [&](unsigned d) {
      if (d != c) dot << "  c" << c << " -> c" << d << ";\n";
    });
  dot << "}\n";
  dot << "digraph mu {\n";
  for (unsigned c = 0; c < glob.class_count(); ++c)
    dot << "  c" << c << " [label=\"" << ctx.class_name(glob, c) << "\"];\n";
  const auto& grp = ctx.pa.group();
  for (Element g = 0; g < grp.order(); ++g) {
    if (g == grp.identity()) continue;
    for (unsigned c = 0; c < glob.class_count(); ++c)
      dot << "  c" << c << " -> c" << glob.mu[g][c] << " [label=\"" << g << "\"];\n";
  }
  dot << "}\n";
  return dot.str();
}

void add_globalize(CommandResult& out, const Context& ctx, const Globalization& glob, bool want_dot) {
  out.report.add(check_embedding(glob));
  out.report.add(check_hat_relation(ctx.pa));
  out.report.add(effros_report(ctx.pa));

  const Separation sep = separation(glob.xg_topology);
  Report facts{"enveloping space facts", {}, {}};
  auto yn = [](bool b) { return std::string(b ? "true" : "false"); };
  facts.info("X_G T0", yn(sep.t0));
  facts.info("X_G T1", yn(sep.t1));
  facts.info("X_G T2", yn(sep.t2));
  out.report.add(std::move(facts));

  json classes = json::array();
  json nbhd = json::object();
  for (unsigned c = 0; c < glob.class_count(); ++c) {
    json members = json::array();
    for_each_bit(glob.relation.members(c), [&](unsigned p) { members.push_back(ctx.pair_name(p)); });
    classes.push_back({{"class", ctx.class_name(glob, c)}, {"members", members}});
    nbhd[ctx.class_name(glob, c)] = ctx.class_names(glob, glob.xg_topology.neighborhood(c));
  }
  json mu = json::object();
  for (Element g = 0; g < ctx.pa.group().order(); ++g) {
    json row = json::object();
    for (unsigned c = 0; c < glob.class_count(); ++c)
      row[ctx.class_name(glob, c)] = ctx.class_name(glob, glob.mu[g][c]);
    mu[std::to_string(g)] = row;
  }
  json iota = json::object();
  for (unsigned x = 0; x < ctx.pa.points(); ++x) iota[ctx.name(x)] = ctx.class_name(glob, glob.iota[x]);
  out.data["globalization"] = {{"classes", classes},
                               {"minimal_open_neighborhoods", nbhd},
                               {"mu", mu},
                               {"iota", iota},
                               {"separation", {{"T0", sep.t0}, {"T1", sep.t1}, {"T2", sep.t2}}}};

  out.summary.push_back("X_G has " + std::to_string(glob.class_count()) + " classes; T0=" + yn(sep.t0) +
                        " T1=" + yn(sep.t1) + " T2=" + yn(sep.t2));
  for (const auto& c : classes) out.summary.push_back("  " + c["class"].get<std::string>() + " = " + join(c["members"]));
  if (want_dot) out.dot = render_dot(ctx, glob);
}

Subset parse_point_set(const Context& ctx, const std::string& text) {
  Subset s = 0;
  for (const auto& name : split(text)) {
    bool found = false;
    for (unsigned x = 0; x < ctx.spec.points.size(); ++x)
      if (ctx.spec.points[x] == name) {
        s |= singleton(x);
        found = true;
      }
    if (!found) throw Error(ErrorKind::UsageError, "--set: unknown point \"" + name + "\"");
  }
  return s;
}

ElementSet parse_element_set(const Context& ctx, const std::string& text) {
  if (text == "all") return ctx.pa.group().elements();
  ElementSet v = 0;
  for (const auto& part : split(text)) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || part.size() > 4)
      throw Error(ErrorKind::UsageError, "--open-g: \"" + part + "\" is not an element index");
    const auto g = std::stoul(part);
    if (g >= ctx.pa.group().order())
      throw Error(ErrorKind::UsageError, "--open-g: element " + part + " out of range");
    v |= singleton(g);
  }
  if (v == 0) throw Error(ErrorKind::UsageError, "--open-g must name at least one element");
  return v;
}

void add_vaught(CommandResult& out, const Context& ctx, const CommandOptions& opts) {
  if (!opts.set) throw Error(ErrorKind::UsageError, "vaught needs --set");
  if (opts.kind != "delta" && opts.kind != "star")
    throw Error(ErrorKind::UsageError, "--kind must be delta or star");
  const Subset a = parse_point_set(ctx, *opts.set);
  const ElementSet v = parse_element_set(ctx, opts.open_g.value_or("all"));
  const Subset result = opts.kind == "delta" ? delta_transform(ctx.pa, a, v) : star_transform(ctx.pa, a, v);
  out.data["vaught"] = {{"kind", opts.kind},
                        {"set", ctx.names(a)},
                        {"open_g", element_list(v)},
                        {"result", ctx.names(result)}};
  out.summary.push_back(std::string(opts.kind == "delta" ? "A^{dV}" : "A^{*V}") + " for A=" +
                        join(ctx.names(a)) + " V=" + join(element_list(v)) + ": " + join(ctx.names(result)));
  out.report.add(check_transform_identities(ctx.pa));
  if (ctx.pa.space().is_open(a)) {
    out.report.add(check_open_case(ctx.pa, a, v));
  } else {
    Report open{"open case", {}, {}};
    open.not_applicable("union formula equals A^{dV}", "A is not open");
    out.report.add(std::move(open));
  }
}

void add_vaught_sweep(CommandResult& out, const Context& ctx) {
  out.report.add(check_transform_identities(ctx.pa));
  Report open{"open case", {}, {}};
  Clause formula("union formula equals A^{dV} for open A");
  Clause is_open("A^{dV} open for open A");
  const ElementSet all = ctx.pa.group().elements();
  for (Subset a : ctx.pa.space().opens())
    for (ElementSet v = all; v != 0; v = (v - 1) & all) {
      const Report r = check_open_case(ctx.pa, a, v);
      formula.verify(r.checks[0].status == Status::pass, [&] { return r.checks[0].witness; });
      is_open.verify(r.checks[1].status == Status::pass, [&] { return r.checks[1].witness; });
    }
  formula.record(open);
  is_open.record(open);
  out.report.add(std::move(open));

  Report ideal{"idealistic", {}, {}};
  Clause not_in_ideal("C not in I_C");
  for (unsigned x = 0; x < ctx.pa.points(); ++x)
    not_in_ideal.verify(!ideal_member(ctx.pa, x, orbit(ctx.pa, x)),
                        [&] { return "x=" + ctx.name(x); });
  not_in_ideal.record(ideal);
  const std::size_t pairs = ctx.pa.points() * ctx.pa.points();
  if (pairs <= 12) {
    Clause agree("A_I by ideal = A_I by beta transform");
    for (Subset a = 0; a < (Subset{1} << pairs); ++a)
      agree.verify(ideal_set(ctx.pa, a).agree(), [&] { return "A=" + format_subset(a); });
    agree.record(ideal);
  } else {
    ideal.not_applicable("A_I by ideal = A_I by beta transform", "too many sets of pairs to enumerate");
  }
  out.report.add(std::move(ideal));
}

void add_selector(CommandResult& out, const Context& ctx, const Globalization& glob) {
  const SelectorMap s = normalized_hat_selector(ctx.pa);
  BorelReport borel = tau_topology(glob, s);
  const ContinuityTable cont = mu_tau_continuity(glob, borel);

  Report facts{"tau continuity of mu", {}, {}};
  json disc = json::object();
  for (Element g = 0; g < ctx.pa.group().order(); ++g) {
    const Subset bad = cont.discontinuous[g];
    disc[std::to_string(g)] = ctx.class_names(glob, bad);
    facts.info("mu_" + std::to_string(g),
               bad == 0 ? "continuous" : "discontinuous at " + join(ctx.class_names(glob, bad)));
    if (bad != 0)
      out.summary.push_back("mu_" + std::to_string(g) + " not tau-continuous at " +
                            join(ctx.class_names(glob, bad)));
  }

  json transversal = json::array();
  for (unsigned p : borel.transversal) transversal.push_back(ctx.pair_name(p));
  json tau = json::object();
  for (unsigned c = 0; c < glob.class_count(); ++c)
    tau[ctx.class_name(glob, c)] = ctx.class_names(glob, borel.tau.neighborhood(c));
  const PointMap f = class_reduction(glob, s);
  json fmap = json::object();
  for (unsigned c = 0; c < glob.class_count(); ++c) fmap[ctx.class_name(glob, c)] = ctx.name(f[c]);
  out.data["selector"] = {{"transversal", transversal},
                          {"tau_minimal_open_neighborhoods", tau},
                          {"mu_tau_discontinuities", disc},
                          {"reduction_f", fmap},
                          {"quotient_borel_size", borel.quotient_borel.members.size()},
                          {"tau_borel_size", borel.tau_borel.members.size()}};
  out.summary.push_back("transversal T = " + join(transversal));

  out.report.add(std::move(borel.checks));
  out.report.add(std::move(facts));
  out.report.add(check_bireducibility(glob, s));
  out.report.add(check_hat_orbit_charts(ctx.pa));
}

}  // namespace

CommandResult run_command(const std::string& command, const ActionSpec& spec, const CommandOptions& options) {
  static const char* known[] = {"validate", "globalize", "orbits", "vaught", "selector", "report"};
  bool ok_command = false;
  for (const char* k : known) ok_command = ok_command || command == k;
  if (!ok_command) throw Error(ErrorKind::UsageError, "unknown command \"" + command + "\"");

  const PartialAction pa = to_partial_action(spec);
  const Context ctx{spec, pa};
  CommandResult out;
  out.report.name = command;

  Report validation = validate(pa);
  const bool valid = validation.ok();
  out.report.add(std::move(validation));
  out.data["valid"] = valid;
  if (!valid) {
    out.report.not_applicable("analysis", "skipped: input is not a valid topological partial action");
    return out;
  }
  if (command == "validate" || command == "orbits" || command == "report")
    out.report.add(check_orbit_lemma(pa));
  if (command == "orbits" || command == "report") add_orbits(out, ctx);
  if (command == "vaught") add_vaught(out, ctx, options);
  if (command == "report") add_vaught_sweep(out, ctx);
  if (command == "globalize" || command == "selector" || command == "report") {
    const Globalization glob = globalize(pa);
    if (command != "selector") add_globalize(out, ctx, glob, options.want_dot);
    if (command != "globalize") add_selector(out, ctx, glob);
  }
  return out;
}

json to_json(const Report& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json j = {{"name", c.name}, {"status", to_string(c.status)}};
    if (!c.witness.empty()) j["witness"] = c.witness;
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  json sections = json::array();
  for (const auto& s : report.sections) sections.push_back(to_json(s));
  return {{"name", report.name}, {"ok", report.ok()}, {"checks", checks}, {"sections", sections}};
}

std::string render_json(const std::string& command, const ActionSpec& spec, const CommandResult& result) {
  json doc = {{"command", command},
              {"ok", result.report.ok()},
              {"report", to_json(result.report)},
              {"data", result.data}};
  if (spec.label) doc["label"] = *spec.label;
  if (auto f = result.report.first_failure())
    doc["first_failure"] = {{"check", f->name}, {"witness", f->witness}};
  return doc.dump(2) + "\n";
}

std::string render_text(const std::string& command, const ActionSpec& spec, const CommandResult& result) {
  std::ostringstream out;
  out << command;
  if (spec.label) out << " -- " << *spec.label;
  out << '\n';
  for (const auto& line : result.summary) out << line << '\n';
  out << to_text(result.report);
  if (auto f = result.report.first_failure())
    out << "FAILED: " << f->name << " (witness: " << f->witness << ")\n";
  else
    out << "all checks passed\n";
  return out.str();
}

}  // namespace penv
