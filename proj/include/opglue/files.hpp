#ifndef OPGLUE_FILES_HPP_
#define OPGLUE_FILES_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "opglue/json.hpp"

// Loaders for the on-disk formats (.dsl.json, .term.json, .glue.json,
// .diag.json). Paths inside glue and diagram files resolve relative to the
// file that names them.
namespace opglue::files {

json::Json read_json(std::filesystem::path const& path);
void write_text(std::filesystem::path const& path, std::string const& text);

Dsl load_dsl(std::filesystem::path const& path);
OperadTerm load_term(std::filesystem::path const& path);

struct GlueSpec {
  Span span;
  std::vector<GlueWitness> witnesses;
  std::optional<std::size_t> bound;
};
GlueSpec load_glue(std::filesystem::path const& path);

struct DiagramSpec {
  Diagram diagram;
  std::vector<DiagramWitness> witnesses;
  std::optional<std::size_t> bound;
};
DiagramSpec load_diagram(std::filesystem::path const& path);

// "x.dsl.json" -> "x<suffix>"; other names get the suffix appended.
std::filesystem::path sibling_report_path(std::filesystem::path const& dsl_path,
                                          std::string const& suffix);

}  // namespace opglue::files

#endif
