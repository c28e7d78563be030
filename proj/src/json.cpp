#include "opglue/json.hpp"

#include <algorithm>
#include <initializer_list>
#include <limits>

namespace opglue::json {

namespace {

[[noreturn]] void fail(std::string_view context, std::string const& message) {
  throw Error(ErrorKind::parse_error, std::string(context) + ": " + message);
}

void expect_object(Json const& j, std::string_view context,
                   std::initializer_list<std::string_view> required,
                   std::initializer_list<std::string_view> optional = {}) {
  if (!j.is_object()) fail(context, "expected an object");
  for (auto key : required) {
    if (!j.contains(std::string(key))) fail(context, "missing field \"" + std::string(key) + "\"");
  }
  for (auto const& [key, _] : j.items()) {
    auto known = std::find(required.begin(), required.end(), key) != required.end() ||
                 std::find(optional.begin(), optional.end(), key) != optional.end();
    if (!known) fail(context, "unknown field \"" + key + "\"");
  }
}

std::string get_string(Json const& j, std::string_view context) {
  if (!j.is_string()) fail(context, "expected a string");
  return j.get<std::string>();
}

std::size_t get_index(Json const& j, std::string_view context) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    fail(context, "expected a non-negative integer");
  }
  return j.get<std::size_t>();
}

Json const& get_array(Json const& j, std::string_view context) {
  if (!j.is_array()) fail(context, "expected an array");
  return j;
}

BaseType get_base(Json const& j, std::string_view context) {
  auto tag = get_string(j, context);
  auto base = parse_base_type(tag);
  if (!base) fail(context, "unknown base type \"" + tag + "\"");
  return *base;
}

std::map<std::string, std::string> get_string_map(Json const& j, std::string_view context) {
  if (!j.is_object()) fail(context, "expected an object of strings");
  std::map<std::string, std::string> out;
  for (auto const& [k, v] : j.items()) out[k] = get_string(v, context);
  return out;
}

Json string_map(std::map<std::string, std::string> const& m) {
  Json out = Json::object();
  for (auto const& [k, v] : m) out[k] = v;
  return out;
}

}  // namespace

Value value_from_payload(BaseType base, Json const& p) {
  switch (base) {
    case BaseType::boolean:
      if (!p.is_boolean()) fail("value", "expected a boolean");
      return Value(p.get<bool>());
    case BaseType::natural:
      if (p.is_number_unsigned() || (p.is_number_integer() && p.get<long long>() >= 0)) {
        return Value(Natural(p.get<std::uint64_t>()));
      }
      if (p.is_string()) {
        auto digits = p.get<std::string>();
        if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit)) {
          return Value(Natural(digits));
        }
      }
      fail("value", "expected a natural number");
    case BaseType::string:
      return Value(get_string(p, "value"));
    case BaseType::unit:
      if (!p.is_null()) fail("value", "unit is written as null");
      return Value(Unit{});
    case BaseType::fieldmap:
      return Value(FieldMap(get_string_map(p, "fieldmap value")));
  }
  fail("value", "unreachable");
}

Json payload(Value const& v) {
  switch (v.type()) {
    case BaseType::boolean: return v.as_bool();
    case BaseType::natural: {
      auto const& n = v.as_natural();
      if (n <= std::numeric_limits<std::uint64_t>::max()) return n.convert_to<std::uint64_t>();
      return n.str();
    }
    case BaseType::string: return v.as_string();
    case BaseType::unit: return nullptr;
    case BaseType::fieldmap: return string_map(v.as_fieldmap());
  }
  return nullptr;
}

Value value_from_json(Json const& j) {
  expect_object(j, "literal", {"base", "value"});
  return value_from_payload(get_base(j["base"], "literal base"), j["value"]);
}

Json to_json(Value const& v) {
  return Json{{"base", std::string(to_string(v.type()))}, {"value", payload(v)}};
}

TermExpr term_expr_from_json(Json const& j) {
  if (!j.is_object() || j.size() != 1) fail("action", "expected exactly one of builtin/arg/lit/apply");
  if (j.contains("builtin")) return TermExpr::builtin(get_string(j["builtin"], "builtin"));
  if (j.contains("arg")) return TermExpr::arg(get_index(j["arg"], "arg"));
  if (j.contains("lit")) return TermExpr::literal(value_from_json(j["lit"]));
  if (j.contains("apply")) {
    auto const& a = j["apply"];
    expect_object(a, "apply", {"head", "args"});
    std::vector<TermExpr> args;
    for (auto const& arg : get_array(a["args"], "apply args")) args.push_back(term_expr_from_json(arg));
    return TermExpr::apply(term_expr_from_json(a["head"]), std::move(args));
  }
  fail("action", "unknown field \"" + j.begin().key() + "\"");
}

Json to_json(TermExpr const& e) {
  return std::visit(
      [](auto const& node) -> Json {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, TermExpr::Builtin>) {
          return Json{{"builtin", node.name}};
        } else if constexpr (std::is_same_v<T, TermExpr::Arg>) {
          return Json{{"arg", node.index}};
        } else if constexpr (std::is_same_v<T, TermExpr::Literal>) {
          return Json{{"lit", to_json(node.value)}};
        } else {
          Json args = Json::array();
          for (auto const& a : node.args) args.push_back(to_json(a));
          return Json{{"apply", {{"head", to_json(*node.head)}, {"args", args}}}};
        }
      },
      e.node());
}

Dsl dsl_from_json(Json const& j) {
  expect_object(j, "dsl", {"name", "types", "functions"});
  Dsl d;
  d.name = get_string(j["name"], "dsl name");
  for (auto const& t : get_array(j["types"], "types")) {
    expect_object(t, "type", {"sigil", "base"});
    d.universe.sigils.push_back({get_string(t["sigil"], "sigil"), get_base(t["base"], "base")});
  }
  for (auto const& f : get_array(j["functions"], "functions")) {
    expect_object(f, "function", {"name", "domain", "codomain", "action"});
    FunctionSymbol sym{get_string(f["name"], "function name"), {}, TermExpr::arg(0)};
    for (auto const& s : get_array(f["domain"], "domain")) sym.signature.domain.push_back(get_string(s, "domain sigil"));
    sym.signature.codomain = get_string(f["codomain"], "codomain");
    sym.action = term_expr_from_json(f["action"]);
    d.symbols.push_back(std::move(sym));
  }
  return d;
}

Json to_json(Dsl const& d) {
  Json types = Json::array();
  for (auto const& s : d.universe.sigils) {
    types.push_back({{"sigil", s.name}, {"base", std::string(to_string(s.base))}});
  }
  Json functions = Json::array();
  for (auto const& f : d.symbols) {
    functions.push_back({{"name", f.name},
                         {"domain", f.signature.domain},
                         {"codomain", f.signature.codomain},
                         {"action", to_json(f.action)}});
  }
  return Json{{"name", d.name}, {"types", types}, {"functions", functions}};
}

OperadTerm operad_term_from_json(Json const& j) {
  if (!j.is_object() || j.size() != 1) fail("term", "expected exactly one of unit/gen/graft/perm");
  if (j.contains("unit")) return OperadTerm::make_unit(get_string(j["unit"], "unit"));
  if (j.contains("gen")) return OperadTerm::make_generator(get_string(j["gen"], "gen"));
  if (j.contains("graft")) {
    auto const& g = j["graft"];
    expect_object(g, "graft", {"outer", "i", "inner"});
    return OperadTerm::make_graft(operad_term_from_json(g["outer"]), get_index(g["i"], "graft i"),
                                  operad_term_from_json(g["inner"]));
  }
  if (j.contains("perm")) {
    auto const& p = j["perm"];
    expect_object(p, "perm", {"base", "images"});
    std::vector<std::size_t> images;
    for (auto const& k : get_array(p["images"], "images")) images.push_back(get_index(k, "image"));
    try {
      return OperadTerm::make_permuted(operad_term_from_json(p["base"]), Permutation(std::move(images)));
    } catch (Error const& e) {
      fail("perm", e.what());
    }
  }
  fail("term", "unknown field \"" + j.begin().key() + "\"");
}

Json to_json(OperadTerm const& t) {
  return std::visit(
      [](auto const& node) -> Json {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, OperadTerm::Unit>) {
          return Json{{"unit", node.color}};
        } else if constexpr (std::is_same_v<T, OperadTerm::Generator>) {
          return Json{{"gen", node.symbol}};
        } else if constexpr (std::is_same_v<T, OperadTerm::Graft>) {
          return Json{{"graft", {{"outer", to_json(*node.outer)}, {"i", node.index}, {"inner", to_json(*node.inner)}}}};
        } else {
          return Json{{"perm", {{"base", to_json(*node.base)}, {"images", node.perm.images()}}}};
        }
      },
      t.node());
}

DslMorphism morphism_from_json(Json const& maps, Dsl source, Dsl target,
                               std::string_view types_key, std::string_view functions_key) {
  expect_object(maps, "morphism", {types_key}, {functions_key});
  DslMorphism m{std::move(source), std::move(target), {}, {}};
  m.type_map = get_string_map(maps[std::string(types_key)], "type map");
  if (maps.contains(std::string(functions_key))) {
    m.symbol_map = get_string_map(maps[std::string(functions_key)], "function map");
  }
  return m;
}

Json maps_to_json(DslMorphism const& m) {
  return Json{{"types", string_map(m.type_map)}, {"functions", string_map(m.symbol_map)}};
}

GlueWitness glue_witness_from_json(Json const& j) {
  expect_object(j, "witness", {"left", "right", "base"});
  return {get_string(j["left"], "witness left"), get_string(j["right"], "witness right"),
          get_base(j["base"], "witness base")};
}

Json to_json(GlueWitness const& w) {
  return Json{{"left", w.left_sigil}, {"right", w.right_sigil}, {"base", std::string(to_string(w.base))}};
}

namespace {

ClassMember sigil_ref_from_json(Json const& j) {
  expect_object(j, "sigil reference", {"object", "sigil"});
  return {get_string(j["object"], "object"), get_string(j["sigil"], "sigil")};
}

}  // namespace

DiagramWitness diagram_witness_from_json(Json const& j) {
  expect_object(j, "witness", {"left", "right", "base"});
  return {sigil_ref_from_json(j["left"]), sigil_ref_from_json(j["right"]), get_base(j["base"], "witness base")};
}

Json to_json(DiagramWitness const& w) {
  return Json{{"left", {{"object", w.left.object}, {"sigil", w.left.name}}},
              {"right", {{"object", w.right.object}, {"sigil", w.right.name}}},
              {"base", std::string(to_string(w.base))}};
}

std::vector<EquivalenceClass> classes_from_json(Json const& j) {
  std::vector<EquivalenceClass> out;
  for (auto const& c : get_array(j, "classes")) {
    expect_object(c, "class", {"name", "members"});
    EquivalenceClass cls{get_string(c["name"], "class name"), {}};
    for (auto const& m : get_array(c["members"], "members")) {
      expect_object(m, "member", {"object", "name"});
      cls.members.push_back({get_string(m["object"], "object"), get_string(m["name"], "name")});
    }
    out.push_back(std::move(cls));
  }
  return out;
}

Json to_json(std::vector<EquivalenceClass> const& classes) {
  Json out = Json::array();
  for (auto const& c : classes) {
    Json members = Json::array();
    for (auto const& m : c.members) members.push_back({{"object", m.object}, {"name", m.name}});
    out.push_back({{"name", c.name}, {"members", members}});
  }
  return out;
}

Json to_json(ValidationReport const& r) {
  Json diagnostics = Json::array();
  for (auto const& d : r.diagnostics) {
    diagnostics.push_back({{"kind", d.kind}, {"subject", d.subject}, {"message", d.message}});
  }
  return Json{{"ok", r.ok()}, {"diagnostics", diagnostics}};
}

Json to_json(UniversalityReport const& r) {
  auto out = to_json(static_cast<ValidationReport const&>(r));
  out["cocones"] = r.cocones;
  out["symbol_cocones"] = r.symbol_cocones;
  out["candidates"] = r.candidates;
  return out;
}

Json to_json(LawReport const& r) {
  Json axioms = Json::array();
  for (auto const& a : r.axioms) {
    Json entry{{"axiom", std::string(to_string(a.axiom))},
               {"status", a.passed() ? "pass" : "fail"},
               {"instances", a.instances},
               {"failures", a.failures},
               {"counterexample", nullptr}};
    if (a.counterexample) {
      auto const& cx = *a.counterexample;
      Json args = Json::array();
      for (auto const& v : cx.args) args.push_back(to_json(v));
      entry["counterexample"] = {{"law", cx.law}, {"lhs", cx.lhs}, {"rhs", cx.rhs}, {"args", args},
                                 {"lhs_result", cx.lhs_result}, {"rhs_result", cx.rhs_result}};
    }
    axioms.push_back(std::move(entry));
  }
  return Json{{"dsl", r.dsl}, {"bound", r.bound}, {"depth", r.depth}, {"ok", r.ok()}, {"axioms", axioms}};
}

Json to_json(PushoutRecord const& r) {
  Json witnesses = Json::array();
  for (auto const& w : r.witnesses) witnesses.push_back(to_json(w));
  Json used = Json::array();
  for (auto const& w : r.result.witnesses_used) used.push_back(to_json(w));
  return Json{{"kind", "pushout"},
              {"ok", true},
              {"bound", r.bound},
              {"span",
               {{"apex", to_json(r.span.apex)},
                {"left", to_json(r.span.left.target)},
                {"right", to_json(r.span.right.target)},
                {"left_map", maps_to_json(r.span.left)},
                {"right_map", maps_to_json(r.span.right)}}},
              {"witnesses", witnesses},
              {"glued", to_json(r.result.glued)},
              {"inj_left", maps_to_json(r.result.inj_left)},
              {"inj_right", maps_to_json(r.result.inj_right)},
              {"type_classes", to_json(r.result.type_classes)},
              {"symbol_classes", to_json(r.result.symbol_classes)},
              {"witnesses_used", used},
              {"safety", to_json(r.result.safety)}};
}

namespace {

ValidationReport report_from_json(Json const& j) {
  expect_object(j, "report", {"ok", "diagnostics"});
  ValidationReport r;
  for (auto const& d : get_array(j["diagnostics"], "diagnostics")) {
    expect_object(d, "diagnostic", {"kind", "subject", "message"});
    r.add(get_string(d["kind"], "kind"), get_string(d["subject"], "subject"), get_string(d["message"], "message"));
  }
  return r;
}

std::size_t get_bound(Json const& j) { return get_index(j, "bound"); }

}  // namespace

Json edge_maps(Json const& edge) {
  Json maps{{"type_map", edge["type_map"]}};
  if (edge.contains("function_map")) maps["function_map"] = edge["function_map"];
  return maps;
}

namespace {

}  // namespace

PushoutRecord pushout_record_from_json(Json const& j) {
  expect_object(j, "pushout report",
                {"kind", "ok", "bound", "span", "witnesses", "glued", "inj_left", "inj_right",
                 "type_classes", "symbol_classes", "witnesses_used", "safety"});
  if (j["kind"] != "pushout") fail("pushout report", "kind must be \"pushout\"");
  if (j["ok"] != true) fail("pushout report", "report does not describe a successful pushout");
  auto const& sp = j["span"];
  expect_object(sp, "span", {"apex", "left", "right", "left_map", "right_map"});
  PushoutRecord r;
  r.bound = get_bound(j["bound"]);
  r.span.apex = dsl_from_json(sp["apex"]);
  r.span.left = morphism_from_json(sp["left_map"], r.span.apex, dsl_from_json(sp["left"]));
  r.span.right = morphism_from_json(sp["right_map"], r.span.apex, dsl_from_json(sp["right"]));
  for (auto const& w : get_array(j["witnesses"], "witnesses")) r.witnesses.push_back(glue_witness_from_json(w));
  r.result.glued = dsl_from_json(j["glued"]);
  r.result.inj_left = morphism_from_json(j["inj_left"], r.span.left.target, r.result.glued);
  r.result.inj_right = morphism_from_json(j["inj_right"], r.span.right.target, r.result.glued);
  r.result.type_classes = classes_from_json(j["type_classes"]);
  r.result.symbol_classes = classes_from_json(j["symbol_classes"]);
  for (auto const& w : get_array(j["witnesses_used"], "witnesses_used")) {
    r.result.witnesses_used.push_back(glue_witness_from_json(w));
  }
  r.result.safety = report_from_json(j["safety"]);
  return r;
}

Json to_json(ColimitRecord const& r) {
  Json objects = Json::array();
  for (std::size_t i = 0; i < r.diagram.shape.objects.size(); ++i) {
    objects.push_back({{"name", r.diagram.shape.objects[i]}, {"dsl", to_json(r.diagram.nodes[i])}});
  }
  Json edges = Json::array();
  for (std::size_t j = 0; j < r.diagram.shape.edges.size(); ++j) {
    auto const& e = r.diagram.shape.edges[j];
    auto const& m = r.diagram.morphisms[j];
    edges.push_back({{"name", e.name}, {"from", e.from}, {"to", e.to},
                     {"type_map", string_map(m.type_map)}, {"function_map", string_map(m.symbol_map)}});
  }
  Json legs = Json::object();
  for (std::size_t i = 0; i < r.result.legs.size(); ++i) {
    legs[r.diagram.shape.objects[i]] = maps_to_json(r.result.legs[i]);
  }
  Json witnesses = Json::array();
  for (auto const& w : r.witnesses) witnesses.push_back(to_json(w));
  Json used = Json::array();
  for (auto const& w : r.result.witnesses_used) used.push_back(to_json(w));
  return Json{{"kind", "colimit"},
              {"ok", true},
              {"bound", r.bound},
              {"diagram", {{"objects", objects}, {"edges", edges}}},
              {"witnesses", witnesses},
              {"colimit", to_json(r.result.colimit)},
              {"legs", legs},
              {"sigil_classes", to_json(r.result.sigil_classes)},
              {"symbol_classes", to_json(r.result.symbol_classes)},
              {"witnesses_used", used},
              {"safety", to_json(r.result.safety)}};
}

ColimitRecord colimit_record_from_json(Json const& j) {
  expect_object(j, "colimit report",
                {"kind", "ok", "bound", "diagram", "witnesses", "colimit", "legs", "sigil_classes",
                 "symbol_classes", "witnesses_used", "safety"});
  if (j["kind"] != "colimit") fail("colimit report", "kind must be \"colimit\"");
  if (j["ok"] != true) fail("colimit report", "report does not describe a successful colimit");
  ColimitRecord r;
  r.bound = get_bound(j["bound"]);
  auto const& dg = j["diagram"];
  expect_object(dg, "diagram", {"objects", "edges"});
  for (auto const& o : get_array(dg["objects"], "objects")) {
    expect_object(o, "object", {"name", "dsl"});
    r.diagram.shape.objects.push_back(get_string(o["name"], "object name"));
    r.diagram.nodes.push_back(dsl_from_json(o["dsl"]));
  }
  for (auto const& e : get_array(dg["edges"], "edges")) {
    expect_object(e, "edge", {"name", "from", "to", "type_map"}, {"function_map"});
    ShapeEdge edge{get_string(e["name"], "edge name"), get_string(e["from"], "edge from"), get_string(e["to"], "edge to")};
    r.diagram.shape.edges.push_back(edge);
    r.diagram.morphisms.push_back(morphism_from_json(edge_maps(e), r.diagram.node(edge.from),
                                                     r.diagram.node(edge.to), "type_map", "function_map"));
  }
  for (auto const& w : get_array(j["witnesses"], "witnesses")) r.witnesses.push_back(diagram_witness_from_json(w));
  r.result.colimit = dsl_from_json(j["colimit"]);
  auto const& legs = j["legs"];
  if (!legs.is_object()) fail("legs", "expected an object");
  for (std::size_t i = 0; i < r.diagram.shape.objects.size(); ++i) {
    auto const& name = r.diagram.shape.objects[i];
    if (!legs.contains(name)) fail("legs", "missing leg for object " + name);
    r.result.legs.push_back(morphism_from_json(legs[name], r.diagram.nodes[i], r.result.colimit));
  }
  if (legs.size() != r.diagram.shape.objects.size()) fail("legs", "legs do not match the objects");
  r.result.sigil_classes = classes_from_json(j["sigil_classes"]);
  r.result.symbol_classes = classes_from_json(j["symbol_classes"]);
  for (auto const& w : get_array(j["witnesses_used"], "witnesses_used")) {
    r.result.witnesses_used.push_back(diagram_witness_from_json(w));
  }
  r.result.safety = report_from_json(j["safety"]);
  return r;
}

}  // namespace opglue::json
