#ifndef OPGLUE_QUOTIENT_HPP_
#define OPGLUE_QUOTIENT_HPP_

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "opglue/dsl.hpp"

namespace opglue {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n);

  std::size_t find(std::size_t x);
  // Returns false when x and y were already in one set.
  bool unite(std::size_t x, std::size_t y);
  std::size_t size() const noexcept { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
};

// A sigil or symbol of one constituent DSL, tagged with the constituent's label.
struct ClassMember {
  std::string object;
  std::string name;

  auto operator<=>(ClassMember const&) const = default;
};

struct EquivalenceClass {
  std::string name;
  std::vector<ClassMember> members;

  bool operator==(EquivalenceClass const&) const = default;
};

// Element `index` of the sigil (or symbol) list of part `part`.
struct ElementRef {
  std::size_t part;
  std::size_t index;

  auto operator<=>(ElementRef const&) const = default;
};

struct QuotientPart {
  std::string label;
  Dsl const* dsl;
  // Naming parts contribute class names and representatives, and their
  // merged sigils need glue witnesses.
  bool naming;
};

struct PartWitness {
  ElementRef left;
  ElementRef right;
  BaseType base;
};

struct QuotientInput {
  std::string name;
  std::vector<QuotientPart> parts;
  std::vector<std::pair<ElementRef, ElementRef>> sigil_links;
  std::vector<std::pair<ElementRef, ElementRef>> symbol_links;
  std::vector<PartWitness> witnesses;
  std::size_t bound = 3;
};

struct Quotient {
  std::vector<EquivalenceClass> sigil_classes;
  std::vector<EquivalenceClass> symbol_classes;
  // [part][element] -> class index.
  std::vector<std::vector<std::size_t>> sigil_class_of;
  std::vector<std::vector<std::size_t>> symbol_class_of;
  std::vector<std::size_t> witnesses_used;
  ValidationReport safety;
  // Meaningful only when safety.ok().
  Dsl glued;
};

// Quotient of the disjoint union of the parts by the closure of the links.
// Classes are ordered by their first member in (part, source) order.
Quotient compute_quotient(QuotientInput const& input);

// Error kind for the first failing safety diagnostic.
ErrorKind safety_error_kind(ValidationReport const& safety);

}  // namespace opglue

#endif
