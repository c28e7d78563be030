#ifndef OPGLUE_JSON_HPP_
#define OPGLUE_JSON_HPP_

#include <cstddef>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "opglue/diagram.hpp"
#include "opglue/laws.hpp"

// JSON encodings of every artifact. Readers are strict: unknown or missing
// fields raise parse_error.
namespace opglue::json {

using Json = nlohmann::json;

// {"base": <tag>, "value": <payload>}
Value value_from_json(Json const& j);
Json to_json(Value const& v);
// Bare payload: true, 3, "abc", null, {"f": "a"}.
Value value_from_payload(BaseType base, Json const& payload);
Json payload(Value const& v);

TermExpr term_expr_from_json(Json const& j);
Json to_json(TermExpr const& e);

Dsl dsl_from_json(Json const& j);
Json to_json(Dsl const& d);

OperadTerm operad_term_from_json(Json const& j);
Json to_json(OperadTerm const& t);

// {"types": {...}, "functions": {...}}; "functions" may be omitted.
DslMorphism morphism_from_json(Json const& maps, Dsl source, Dsl target,
                               std::string_view types_key = "types",
                               std::string_view functions_key = "functions");
Json maps_to_json(DslMorphism const& m);
// The type_map/function_map pair of a diagram edge object.
Json edge_maps(Json const& edge);

GlueWitness glue_witness_from_json(Json const& j);
Json to_json(GlueWitness const& w);
DiagramWitness diagram_witness_from_json(Json const& j);
Json to_json(DiagramWitness const& w);

std::vector<EquivalenceClass> classes_from_json(Json const& j);
Json to_json(std::vector<EquivalenceClass> const& classes);

Json to_json(ValidationReport const& r);
Json to_json(UniversalityReport const& r);
Json to_json(LawReport const& r);

// Self-contained pushout report: the span, witnesses, glued DSL,
// injections, classes and safety report.
struct PushoutRecord {
  Span span;
  std::vector<GlueWitness> witnesses;
  std::size_t bound = 3;
  PushoutResult result;
};
Json to_json(PushoutRecord const& r);
PushoutRecord pushout_record_from_json(Json const& j);

struct ColimitRecord {
  Diagram diagram;
  std::vector<DiagramWitness> witnesses;
  std::size_t bound = 3;
  ColimitResult result;
};
Json to_json(ColimitRecord const& r);
ColimitRecord colimit_record_from_json(Json const& j);

}  // namespace opglue::json

#endif
