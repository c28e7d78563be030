#ifndef OPGLUE_DIAGRAM_HPP_
#define OPGLUE_DIAGRAM_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opglue/pushout.hpp"

namespace opglue {

struct ShapeEdge {
  std::string name;
  std::string from;
  std::string to;

  bool operator==(ShapeEdge const&) const = default;
};

// A finite graph; the diagram shape is the free category on it.
struct Shape {
  std::vector<std::string> objects;
  std::vector<ShapeEdge> edges;

  std::optional<std::size_t> find_object(std::string_view name) const noexcept;
};

// nodes[i] sits over shape.objects[i]; morphisms[j] over shape.edges[j].
struct Diagram {
  Shape shape;
  std::vector<Dsl> nodes;
  std::vector<DslMorphism> morphisms;

  Dsl const& node(std::string_view object) const;
};

// A glue witness between sigils of two (possibly equal) diagram objects.
struct DiagramWitness {
  ClassMember left;
  ClassMember right;
  BaseType base;

  bool operator==(DiagramWitness const&) const = default;
};

struct ColimitResult {
  Dsl colimit;
  // legs[i] : nodes[i] -> colimit.
  std::vector<DslMorphism> legs;
  std::vector<EquivalenceClass> sigil_classes;
  std::vector<EquivalenceClass> symbol_classes;
  std::vector<DiagramWitness> witnesses_used;
  ValidationReport safety;
};

ValidationReport validate_diagram(Diagram const& d, std::size_t bound);

// Quotient of the disjoint union of all nodes by the edge-generated relation.
// Objects without outgoing edges name the classes. Throws invalid_diagram,
// then safety_violation, inconsistent_quotient or action_disagreement.
ColimitResult colimit(Diagram const& d, std::vector<DiagramWitness> const& witnesses,
                      std::size_t bound);

ValidationReport check_cocone(Diagram const& d, ColimitResult const& r);

UniversalityReport verify_colimit_universal(ColimitResult const& r, Diagram const& d,
                                            std::size_t max_target_sigils,
                                            std::size_t ceiling = default_search_ceiling);

// The span as a diagram over objects left <- apex -> right.
Diagram span_diagram(Span const& s);
std::vector<DiagramWitness> span_witnesses(std::vector<GlueWitness> const& witnesses);

inline constexpr char const* apex_label = "apex";

}  // namespace opglue

#endif
