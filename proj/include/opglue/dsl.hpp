#ifndef OPGLUE_DSL_HPP_
#define OPGLUE_DSL_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "opglue/error.hpp"
#include "opglue/value.hpp"

namespace opglue {

struct SigilDecl {
  std::string name;
  BaseType base;

  bool operator==(SigilDecl const&) const = default;
};

// Sigils plus their denotation into the base-type catalog.
struct TypeUniverse {
  std::vector<SigilDecl> sigils;

  std::optional<std::size_t> find(std::string_view sigil) const noexcept;
  bool contains(std::string_view sigil) const noexcept { return find(sigil).has_value(); }
  std::vector<std::string> names() const;

  bool operator==(TypeUniverse const&) const = default;
};

BaseType denote_type(TypeUniverse const& u, std::string_view sigil);

struct Signature {
  std::vector<std::string> domain;
  std::string codomain;

  std::size_t arity() const noexcept { return domain.size(); }
  bool operator==(Signature const&) const = default;
};

// First-order action language: builtin references, argument projections,
// literals and application of a builtin to argument expressions. A bare
// builtin as the whole action applies it to the symbol's arguments in order.
class TermExpr {
 public:
  struct Builtin {
    std::string name;
  };
  struct Arg {
    std::size_t index;
  };
  struct Literal {
    Value value;
  };
  struct Apply {
    std::shared_ptr<TermExpr const> head;
    std::vector<TermExpr> args;
  };
  using Node = std::variant<Builtin, Arg, Literal, Apply>;

  static TermExpr builtin(std::string name) { return TermExpr(Builtin{std::move(name)}); }
  static TermExpr arg(std::size_t index) { return TermExpr(Arg{index}); }
  static TermExpr literal(Value v) { return TermExpr(Literal{std::move(v)}); }
  static TermExpr apply(TermExpr head, std::vector<TermExpr> args);

  Node const& node() const noexcept { return node_; }

  friend bool operator==(TermExpr const& a, TermExpr const& b);

 private:
  explicit TermExpr(Node n) : node_(std::move(n)) {}
  Node node_;
};

struct FunctionSymbol {
  std::string name;
  Signature signature;
  TermExpr action;

  bool operator==(FunctionSymbol const&) const = default;
};

struct Dsl {
  std::string name;
  TypeUniverse universe;
  std::vector<FunctionSymbol> symbols;

  std::optional<std::size_t> find_symbol(std::string_view name) const noexcept;
  FunctionSymbol const& symbol(std::string_view name) const;
  BaseType denote(std::string_view sigil) const { return denote_type(universe, sigil); }
  std::vector<BaseType> denote(std::vector<std::string> const& sigils) const;

  bool operator==(Dsl const&) const = default;
};

struct BuiltinInfo {
  std::string_view name;
  std::vector<BaseType> domain;
  BaseType codomain;
};

std::span<BuiltinInfo const> builtin_catalog();
BuiltinInfo const* find_builtin(std::string_view name) noexcept;
Value apply_builtin(std::string_view name, std::span<Value const> args);

// Checks an action against the denoted base-type signature of its symbol.
// Returns an explanation on failure.
std::optional<std::string> check_action(TermExpr const& action,
                                        std::vector<BaseType> const& domain,
                                        BaseType codomain);

ValidationReport validate_dsl(Dsl const& d);

// Throws invalid_dsl carrying the report when validation fails.
void require_valid(Dsl const& d);

Value eval_action(Dsl const& d, FunctionSymbol const& f, std::span<Value const> args);

// Runs an action without the signature checks of eval_action.
Value run_action(TermExpr const& action, std::span<Value const> args);

}  // namespace opglue

#endif
