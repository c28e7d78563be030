#include "opglue/files.hpp"

#include <fstream>
#include <algorithm>

namespace opglue::files {

namespace fs = std::filesystem;
using json::Json;

Json read_json(fs::path const& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io_error, "cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (nlohmann::json::exception const& e) {
    throw Error(ErrorKind::parse_error, path.string() + ": " + e.what());
  }
}

void write_text(fs::path const& path, std::string const& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::io_error, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorKind::io_error, "failed writing " + path.string());
}

namespace {

// Prefixes parse errors with the file they came from.
template <typename F>
auto in_file(fs::path const& path, F&& f) {
  try {
    return f();
  } catch (Error const& e) {
    if (e.kind() != ErrorKind::parse_error) throw;
    std::string what = e.what();
    if (what.rfind(path.string(), 0) == 0) throw;
    throw Error(ErrorKind::parse_error, path.string() + ": " + what);
  }
}

fs::path resolve(fs::path const& base_file, Json const& j, std::string const& field) {
  if (!j.is_string()) throw Error(ErrorKind::parse_error, field + ": expected a path string");
  fs::path p = j.get<std::string>();
  return p.is_absolute() ? p : base_file.parent_path() / p;
}

void expect_fields(Json const& j, std::string const& context, std::vector<std::string> const& required,
                   std::vector<std::string> const& optional) {
  if (!j.is_object()) throw Error(ErrorKind::parse_error, context + ": expected an object");
  for (auto const& k : required) {
    if (!j.contains(k)) throw Error(ErrorKind::parse_error, context + ": missing field \"" + k + "\"");
  }
  for (auto const& [k, _] : j.items()) {
    if (std::find(required.begin(), required.end(), k) == required.end() &&
        std::find(optional.begin(), optional.end(), k) == optional.end()) {
      throw Error(ErrorKind::parse_error, context + ": unknown field \"" + k + "\"");
    }
  }
}

std::optional<std::size_t> optional_bound(Json const& j) {
  if (!j.contains("bound")) return std::nullopt;
  auto const& b = j["bound"];
  if (!b.is_number_unsigned()) throw Error(ErrorKind::parse_error, "bound: expected a non-negative integer");
  return b.get<std::size_t>();
}

}  // namespace

Dsl load_dsl(fs::path const& path) {
  return in_file(path, [&] { return json::dsl_from_json(read_json(path)); });
}

OperadTerm load_term(fs::path const& path) {
  return in_file(path, [&] { return json::operad_term_from_json(read_json(path)); });
}

GlueSpec load_glue(fs::path const& path) {
  auto j = read_json(path);
  return in_file(path, [&] {
    expect_fields(j, "glue", {"left", "right", "apex", "left_map", "right_map"}, {"witnesses", "bound"});
    GlueSpec g;
    g.span.apex = load_dsl(resolve(path, j["apex"], "apex"));
    g.span.left = json::morphism_from_json(j["left_map"], g.span.apex, load_dsl(resolve(path, j["left"], "left")));
    g.span.right = json::morphism_from_json(j["right_map"], g.span.apex, load_dsl(resolve(path, j["right"], "right")));
    if (j.contains("witnesses")) {
      if (!j["witnesses"].is_array()) throw Error(ErrorKind::parse_error, "witnesses: expected an array");
      for (auto const& w : j["witnesses"]) g.witnesses.push_back(json::glue_witness_from_json(w));
    }
    g.bound = optional_bound(j);
    return g;
  });
}

DiagramSpec load_diagram(fs::path const& path) {
  auto j = read_json(path);
  return in_file(path, [&] {
    expect_fields(j, "diagram", {"objects"}, {"edges", "witnesses", "bound"});
    DiagramSpec spec;
    auto& d = spec.diagram;
    if (!j["objects"].is_array()) throw Error(ErrorKind::parse_error, "objects: expected an array");
    for (auto const& o : j["objects"]) {
      expect_fields(o, "object", {"name", "dsl"}, {});
      if (!o["name"].is_string()) throw Error(ErrorKind::parse_error, "object name: expected a string");
      d.shape.objects.push_back(o["name"].get<std::string>());
      d.nodes.push_back(load_dsl(resolve(path, o["dsl"], "dsl")));
    }
    if (j.contains("edges")) {
      if (!j["edges"].is_array()) throw Error(ErrorKind::parse_error, "edges: expected an array");
      for (auto const& e : j["edges"]) {
        expect_fields(e, "edge", {"name", "from", "to", "type_map"}, {"function_map"});
        for (auto const* k : {"name", "from", "to"}) {
          if (!e[k].is_string()) throw Error(ErrorKind::parse_error, std::string("edge ") + k + ": expected a string");
        }
        ShapeEdge edge{e["name"].get<std::string>(), e["from"].get<std::string>(), e["to"].get<std::string>()};
        auto from = d.shape.find_object(edge.from);
        auto to = d.shape.find_object(edge.to);
        if (!from || !to) {
          throw Error(ErrorKind::parse_error, "edge " + edge.name + " names an unknown object");
        }
        d.shape.edges.push_back(edge);
        d.morphisms.push_back(json::morphism_from_json(json::edge_maps(e), d.nodes[*from], d.nodes[*to],
                                                       "type_map", "function_map"));
      }
    }
    if (j.contains("witnesses")) {
      if (!j["witnesses"].is_array()) throw Error(ErrorKind::parse_error, "witnesses: expected an array");
      for (auto const& w : j["witnesses"]) spec.witnesses.push_back(json::diagram_witness_from_json(w));
    }
    spec.bound = optional_bound(j);
    return spec;
  });
}

fs::path sibling_report_path(fs::path const& dsl_path, std::string const& suffix) {
  auto name = dsl_path.filename().string();
  static std::string const ext = ".dsl.json";
  if (name.size() > ext.size() && name.compare(name.size() - ext.size(), ext.size(), ext) == 0) {
    name.resize(name.size() - ext.size());
  }
  return dsl_path.parent_path() / (name + suffix);
}

}  // namespace opglue::files
