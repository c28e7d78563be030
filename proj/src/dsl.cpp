#include "opglue/dsl.hpp"

#include <algorithm>
#include <set>

namespace opglue {

std::optional<std::size_t> TypeUniverse::find(std::string_view sigil) const noexcept {
  for (std::size_t i = 0; i < sigils.size(); ++i) {
    if (sigils[i].name == sigil) return i;
  }
  return std::nullopt;
}

std::vector<std::string> TypeUniverse::names() const {
  std::vector<std::string> out;
  out.reserve(sigils.size());
  for (auto const& s : sigils) out.push_back(s.name);
  return out;
}

BaseType denote_type(TypeUniverse const& u, std::string_view sigil) {
  auto idx = u.find(sigil);
  if (!idx) {
    throw Error(ErrorKind::unknown_sigil, "unknown sigil " + std::string(sigil));
  }
  return u.sigils[*idx].base;
}

TermExpr TermExpr::apply(TermExpr head, std::vector<TermExpr> args) {
  return TermExpr(Apply{std::make_shared<TermExpr const>(std::move(head)), std::move(args)});
}

bool operator==(TermExpr const& a, TermExpr const& b) {
  if (a.node_.index() != b.node_.index()) return false;
  return std::visit(
      [&](auto const& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        auto const& rhs = std::get<T>(b.node_);
        if constexpr (std::is_same_v<T, TermExpr::Builtin>) {
          return lhs.name == rhs.name;
        } else if constexpr (std::is_same_v<T, TermExpr::Arg>) {
          return lhs.index == rhs.index;
        } else if constexpr (std::is_same_v<T, TermExpr::Literal>) {
          return lhs.value == rhs.value;
        } else {
          return *lhs.head == *rhs.head && lhs.args == rhs.args;
        }
      },
      a.node_);
}

std::optional<std::size_t> Dsl::find_symbol(std::string_view sym) const noexcept {
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (symbols[i].name == sym) return i;
  }
  return std::nullopt;
}

FunctionSymbol const& Dsl::symbol(std::string_view sym) const {
  auto idx = find_symbol(sym);
  if (!idx) {
    throw Error(ErrorKind::unknown_symbol,
                "unknown symbol " + std::string(sym) + " in " + name);
  }
  return symbols[*idx];
}

std::vector<BaseType> Dsl::denote(std::vector<std::string> const& sigils) const {
  std::vector<BaseType> out;
  out.reserve(sigils.size());
  for (auto const& s : sigils) out.push_back(denote(s));
  return out;
}

// ---------------------------------------------------------------------------
// Builtins
// ---------------------------------------------------------------------------

namespace {

using enum BaseType;

std::vector<BuiltinInfo> const& catalog() {
  static std::vector<BuiltinInfo> const entries{
      {"take_prefix", {natural, string}, string},
      {"id_string", {string}, string},
      {"concat", {string, string}, string},
      {"length", {string}, natural},
      {"eq_nat", {natural, natural}, boolean},
      {"add", {natural, natural}, natural},
      {"fields_of", {fieldmap}, string},
  };
  return entries;
}

// Byte length of the first n UTF-8 code points of s.
std::size_t utf8_prefix_bytes(std::string const& s, Natural const& n) {
  std::size_t pos = 0;
  Natural taken = 0;
  while (pos < s.size() && taken < n) {
    auto lead = static_cast<unsigned char>(s[pos]);
    std::size_t width = lead < 0x80 ? 1 : (lead >> 5) == 0x6 ? 2 : (lead >> 4) == 0xE ? 3 : 4;
    pos = std::min(s.size(), pos + width);
    ++taken;
  }
  return pos;
}

std::size_t utf8_length(std::string const& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) {
        return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
      }));
}

}  // namespace

std::span<BuiltinInfo const> builtin_catalog() { return catalog(); }

BuiltinInfo const* find_builtin(std::string_view name) noexcept {
  for (auto const& b : catalog()) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

Value apply_builtin(std::string_view name, std::span<Value const> args) {
  auto const* info = find_builtin(name);
  if (!info) {
    throw Error(ErrorKind::unknown_builtin, "unknown builtin " + std::string(name));
  }
  if (args.size() != info->domain.size()) {
    throw Error(ErrorKind::arity_mismatch,
                "builtin " + std::string(name) + " expects " +
                    std::to_string(info->domain.size()) + " arguments, got " +
                    std::to_string(args.size()));
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].type() != info->domain[i]) {
      throw Error(ErrorKind::type_mismatch,
                  "builtin " + std::string(name) + " argument " + std::to_string(i) +
                      " expects " + std::string(to_string(info->domain[i])) + ", got " +
                      std::string(to_string(args[i].type())));
    }
  }

  if (name == "take_prefix") {
    auto const& s = args[1].as_string();
    return Value(s.substr(0, utf8_prefix_bytes(s, args[0].as_natural())));
  }
  if (name == "id_string") return args[0];
  if (name == "concat") return Value(args[0].as_string() + args[1].as_string());
  if (name == "length") return Value(utf8_length(args[0].as_string()));
  if (name == "eq_nat") return Value(args[0].as_natural() == args[1].as_natural());
  if (name == "add") return Value(Natural(args[0].as_natural() + args[1].as_natural()));
  // fields_of: std::map iterates keys in ascending order already.
  std::string joined;
  for (auto const& [field, _] : args[0].as_fieldmap()) {
    if (!joined.empty()) joined += ",";
    joined += field;
  }
  return Value(std::move(joined));
}

// ---------------------------------------------------------------------------
// Type checking
// ---------------------------------------------------------------------------

namespace {

struct Inferred {
  std::optional<BaseType> type;
  std::string error;
};

Inferred infer(TermExpr const& e, std::vector<BaseType> const& domain) {
  return std::visit(
      [&](auto const& node) -> Inferred {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, TermExpr::Builtin>) {
          return {std::nullopt, "builtin " + node.name + " used as a value"};
        } else if constexpr (std::is_same_v<T, TermExpr::Arg>) {
          if (node.index >= domain.size()) {
            return {std::nullopt, "argument index " + std::to_string(node.index) +
                                      " out of range for arity " +
                                      std::to_string(domain.size())};
          }
          return {domain[node.index], {}};
        } else if constexpr (std::is_same_v<T, TermExpr::Literal>) {
          return {node.value.type(), {}};
        } else {
          auto const* head = std::get_if<TermExpr::Builtin>(&node.head->node());
          if (!head) return {std::nullopt, "application head must be a builtin"};
          auto const* info = find_builtin(head->name);
          if (!info) return {std::nullopt, "unknown builtin " + head->name};
          if (node.args.size() != info->domain.size()) {
            return {std::nullopt, "builtin " + head->name + " applied to " +
                                      std::to_string(node.args.size()) + " arguments, expects " +
                                      std::to_string(info->domain.size())};
          }
          for (std::size_t i = 0; i < node.args.size(); ++i) {
            auto sub = infer(node.args[i], domain);
            if (!sub.type) return sub;
            if (*sub.type != info->domain[i]) {
              return {std::nullopt, "builtin " + head->name + " argument " + std::to_string(i) +
                                        " expects " + std::string(to_string(info->domain[i])) +
                                        ", got " + std::string(to_string(*sub.type))};
            }
          }
          return {info->codomain, {}};
        }
      },
      e.node());
}

Value evaluate(TermExpr const& e, std::span<Value const> args) {
  return std::visit(
      [&](auto const& node) -> Value {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, TermExpr::Builtin>) {
          return apply_builtin(node.name, args);
        } else if constexpr (std::is_same_v<T, TermExpr::Arg>) {
          if (node.index >= args.size()) {
            throw Error(ErrorKind::arity_mismatch,
                        "argument index " + std::to_string(node.index) + " out of range");
          }
          return args[node.index];
        } else if constexpr (std::is_same_v<T, TermExpr::Literal>) {
          return node.value;
        } else {
          auto const* head = std::get_if<TermExpr::Builtin>(&node.head->node());
          if (!head) {
            throw Error(ErrorKind::type_mismatch, "application head must be a builtin");
          }
          std::vector<Value> inner;
          inner.reserve(node.args.size());
          for (auto const& a : node.args) inner.push_back(evaluate(a, args));
          return apply_builtin(head->name, inner);
        }
      },
      e.node());
}

}  // namespace

Value run_action(TermExpr const& action, std::span<Value const> args) {
  return evaluate(action, args);
}

std::optional<std::string> check_action(TermExpr const& action,
                                        std::vector<BaseType> const& domain,
                                        BaseType codomain) {
  if (auto const* b = std::get_if<TermExpr::Builtin>(&action.node())) {
    auto const* info = find_builtin(b->name);
    if (!info) return "unknown builtin " + b->name;
    if (info->domain != domain || info->codomain != codomain) {
      return "builtin " + b->name + " does not match the denoted signature";
    }
    return std::nullopt;
  }
  auto inferred = infer(action, domain);
  if (!inferred.type) return inferred.error;
  if (*inferred.type != codomain) {
    return "action returns " + std::string(to_string(*inferred.type)) + ", signature expects " +
           std::string(to_string(codomain));
  }
  return std::nullopt;
}

ValidationReport validate_dsl(Dsl const& d) {
  ValidationReport report;

  std::set<std::string> seen_sigils;
  for (auto const& s : d.universe.sigils) {
    if (s.name.empty()) {
      report.add("empty-name", "universe", "empty sigil name");
    } else if (!seen_sigils.insert(s.name).second) {
      report.add("duplicate-sigil", s.name, "duplicate sigil " + s.name);
    }
  }

  std::set<std::string> seen_symbols;
  for (auto const& f : d.symbols) {
    if (f.name.empty()) {
      report.add("empty-name", "symbols", "empty symbol name");
    } else if (!seen_symbols.insert(f.name).second) {
      report.add("duplicate-symbol", f.name, "duplicate symbol " + f.name);
    }
    if (f.signature.arity() == 0) {
      report.add("nullary-symbol", f.name, "symbol " + f.name + " has arity 0");
    }

    bool sigils_known = true;
    auto check_sigil = [&](std::string const& s) {
      if (!d.universe.contains(s)) {
        sigils_known = false;
        report.add("unknown-sigil", f.name, "unknown sigil " + s);
      }
    };
    for (auto const& s : f.signature.domain) check_sigil(s);
    check_sigil(f.signature.codomain);

    if (sigils_known) {
      auto problem = check_action(f.action, d.denote(f.signature.domain),
                                  d.denote(f.signature.codomain));
      if (problem) report.add("ill-typed-action", f.name, *problem);
    }
  }
  return report;
}

void require_valid(Dsl const& d) {
  auto report = validate_dsl(d);
  if (!report.ok()) {
    throw Error(ErrorKind::invalid_dsl,
                "DSL " + d.name + " is invalid: " + report.diagnostics.front().message, report);
  }
}

Value eval_action(Dsl const& d, FunctionSymbol const& f, std::span<Value const> args) {
  auto const& sig = f.signature;
  if (args.size() != sig.arity()) {
    throw Error(ErrorKind::arity_mismatch,
                f.name + " expects " + std::to_string(sig.arity()) + " arguments, got " +
                    std::to_string(args.size()));
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    auto expected = d.denote(sig.domain[i]);
    if (args[i].type() != expected) {
      throw Error(ErrorKind::type_mismatch,
                  f.name + " argument " + std::to_string(i) + " must inhabit " +
                      std::string(to_string(expected)) + ", got " +
                      std::string(to_string(args[i].type())));
    }
  }
  auto result = evaluate(f.action, args);
  if (result.type() != d.denote(sig.codomain)) {
    throw Error(ErrorKind::type_mismatch, f.name + " produced a value outside its codomain");
  }
  return result;
}

}  // namespace opglue
