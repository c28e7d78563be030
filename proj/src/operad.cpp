#include "opglue/operad.hpp"

#include <algorithm>
#include <numeric>

namespace opglue {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (auto k : images_) {
    if (k >= images_.size() || hit[k]) {
      throw Error(ErrorKind::size_mismatch, "image list is not a permutation of 0..n-1");
    }
    hit[k] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> images(n);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(std::size_t n, std::size_t a, std::size_t b) {
  auto p = identity(n).images_;
  std::swap(p.at(a), p.at(b));
  return Permutation(std::move(p));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) inv[images_[k]] = k;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (images_[k] != k) return false;
  }
  return true;
}

Permutation compose(Permutation const& outer, Permutation const& inner) {
  if (outer.size() != inner.size()) {
    throw Error(ErrorKind::size_mismatch, "cannot compose permutations of different sizes");
  }
  std::vector<std::size_t> images(inner.size());
  for (std::size_t k = 0; k < images.size(); ++k) images[k] = outer(inner(k));
  return Permutation(std::move(images));
}

std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<Permutation> out;
  auto images = Permutation::identity(n).images();
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Permutation block_permutation(Permutation const& sigma, std::size_t i, std::size_t m) {
  auto const n = sigma.size();
  auto const s = sigma(i);
  auto expanded = [&](std::size_t j) { return j < s ? j : j + m - 1; };
  std::vector<std::size_t> images;
  images.reserve(n + m - 1);
  for (std::size_t k = 0; k < i; ++k) images.push_back(expanded(sigma(k)));
  for (std::size_t r = 0; r < m; ++r) images.push_back(s + r);
  for (std::size_t k = i + 1; k < n; ++k) images.push_back(expanded(sigma(k)));
  return Permutation(std::move(images));
}

Permutation block_inset(Permutation const& tau, std::size_t i, std::size_t n) {
  auto const m = tau.size();
  auto images = Permutation::identity(n + m - 1).images();
  for (std::size_t r = 0; r < m; ++r) images[i + r] = i + tau(r);
  return Permutation(std::move(images));
}

// ---------------------------------------------------------------------------

OperadTerm OperadTerm::make_graft(OperadTerm outer, std::size_t index, OperadTerm inner) {
  return OperadTerm(Graft{std::make_shared<OperadTerm const>(std::move(outer)), index,
                          std::make_shared<OperadTerm const>(std::move(inner))});
}

OperadTerm OperadTerm::make_permuted(OperadTerm base, Permutation perm) {
  return OperadTerm(Permuted{std::make_shared<OperadTerm const>(std::move(base)), std::move(perm)});
}

bool operator==(OperadTerm const& a, OperadTerm const& b) {
  if (a.node_.index() != b.node_.index()) return false;
  return std::visit(
      [&](auto const& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        auto const& rhs = std::get<T>(b.node_);
        if constexpr (std::is_same_v<T, OperadTerm::Unit>) {
          return lhs.color == rhs.color;
        } else if constexpr (std::is_same_v<T, OperadTerm::Generator>) {
          return lhs.symbol == rhs.symbol;
        } else if constexpr (std::is_same_v<T, OperadTerm::Graft>) {
          return lhs.index == rhs.index && *lhs.outer == *rhs.outer && *lhs.inner == *rhs.inner;
        } else {
          return lhs.perm == rhs.perm && *lhs.base == *rhs.base;
        }
      },
      a.node_);
}

Profile profile_of(Dsl const& d, OperadTerm const& t) {
  return std::visit(
      [&](auto const& node) -> Profile {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, OperadTerm::Unit>) {
          if (!d.universe.contains(node.color)) {
            throw Error(ErrorKind::unknown_sigil, "unknown sigil " + node.color);
          }
          return {node.color, {node.color}};
        } else if constexpr (std::is_same_v<T, OperadTerm::Generator>) {
          auto const& sig = d.symbol(node.symbol).signature;
          return {sig.codomain, sig.domain};
        } else if constexpr (std::is_same_v<T, OperadTerm::Graft>) {
          auto outer = profile_of(d, *node.outer);
          auto inner = profile_of(d, *node.inner);
          if (node.index >= outer.arity()) {
            throw Error(ErrorKind::ill_colored_term,
                        "graft at slot " + std::to_string(node.index) + " of " +
                            to_display(*node.outer) + ": slot out of range for arity " +
                            std::to_string(outer.arity()));
          }
          if (outer.inputs[node.index] != inner.output) {
            throw Error(ErrorKind::ill_colored_term,
                        "graft at slot " + std::to_string(node.index) + " of " +
                            to_display(*node.outer) + ": slot expects " +
                            outer.inputs[node.index] + ", " + to_display(*node.inner) +
                            " outputs " + inner.output);
          }
          Profile out{outer.output, {}};
          auto slot = outer.inputs.begin() + static_cast<std::ptrdiff_t>(node.index);
          out.inputs.insert(out.inputs.end(), outer.inputs.begin(), slot);
          out.inputs.insert(out.inputs.end(), inner.inputs.begin(), inner.inputs.end());
          out.inputs.insert(out.inputs.end(), slot + 1, outer.inputs.end());
          return out;
        } else {
          auto base = profile_of(d, *node.base);
          if (node.perm.size() != base.arity()) {
            throw Error(ErrorKind::ill_colored_term,
                        "permutation of size " + std::to_string(node.perm.size()) +
                            " applied to a term of arity " + std::to_string(base.arity()));
          }
          Profile out{base.output, {}};
          for (std::size_t k = 0; k < base.arity(); ++k) out.inputs.push_back(base.inputs[node.perm(k)]);
          return out;
        }
      },
      t.node());
}

OperadTerm unit_term(Dsl const& d, std::string const& color) {
  if (!d.universe.contains(color)) {
    throw Error(ErrorKind::unknown_sigil, "unknown sigil " + color);
  }
  return OperadTerm::make_unit(color);
}

OperadTerm generator_term(Dsl const& d, std::string const& symbol) {
  d.symbol(symbol);
  return OperadTerm::make_generator(symbol);
}

OperadTerm graft(Dsl const& d, OperadTerm const& outer, std::size_t i, OperadTerm const& inner) {
  auto op = profile_of(d, outer);
  auto ip = profile_of(d, inner);
  if (i >= op.arity()) {
    throw Error(ErrorKind::index_out_of_range,
                "graft slot " + std::to_string(i) + " out of range for arity " +
                    std::to_string(op.arity()));
  }
  if (op.inputs[i] != ip.output) {
    throw Error(ErrorKind::color_mismatch, "slot " + std::to_string(i) + " expects " +
                                               op.inputs[i] + ", inner term outputs " + ip.output);
  }
  return OperadTerm::make_graft(outer, i, inner);
}

OperadTerm permute_term(Dsl const& d, OperadTerm const& t, Permutation const& sigma) {
  auto p = profile_of(d, t);
  if (sigma.size() != p.arity()) {
    throw Error(ErrorKind::size_mismatch,
                "permutation of size " + std::to_string(sigma.size()) +
                    " does not match arity " + std::to_string(p.arity()));
  }
  return OperadTerm::make_permuted(t, sigma);
}

struct CompiledTerm::Node {
  enum class Kind { unit, generator, graft, permuted } kind;
  std::size_t arity = 0;
  // generator
  std::string symbol;
  TermExpr action = TermExpr::arg(0);
  BaseType codomain = BaseType::unit;
  // graft and permuted
  std::size_t index = 0;
  std::shared_ptr<Node const> first;
  std::shared_ptr<Node const> second;
  Permutation perm;
};

namespace {

using Node = CompiledTerm::Node;

std::shared_ptr<Node const> compile(Dsl const& d, OperadTerm const& t) {
  auto n = std::make_shared<Node>();
  std::visit(
      [&](auto const& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, OperadTerm::Unit>) {
          n->kind = Node::Kind::unit;
          n->arity = 1;
        } else if constexpr (std::is_same_v<T, OperadTerm::Generator>) {
          auto const& f = d.symbol(node.symbol);
          n->kind = Node::Kind::generator;
          n->arity = f.signature.arity();
          n->symbol = f.name;
          n->action = f.action;
          n->codomain = d.denote(f.signature.codomain);
        } else if constexpr (std::is_same_v<T, OperadTerm::Graft>) {
          n->kind = Node::Kind::graft;
          n->index = node.index;
          n->first = compile(d, *node.outer);
          n->second = compile(d, *node.inner);
          n->arity = n->first->arity + n->second->arity - 1;
        } else {
          n->kind = Node::Kind::permuted;
          n->first = compile(d, *node.base);
          n->perm = node.perm;
          n->arity = node.perm.size();
        }
      },
      t.node());
  return n;
}

// Arguments are assumed well-typed.
Value run(Node const& n, std::span<Value const> args) {
  switch (n.kind) {
    case Node::Kind::unit: return args[0];
    case Node::Kind::generator: {
      auto result = run_action(n.action, args);
      if (result.type() != n.codomain) {
        throw Error(ErrorKind::type_mismatch, n.symbol + " produced a value outside its codomain");
      }
      return result;
    }
    case Node::Kind::graft: {
      auto const m = n.second->arity;
      auto const i = n.index;
      std::vector<Value> outer;
      outer.reserve(args.size() - m + 1);
      outer.insert(outer.end(), args.begin(), args.begin() + static_cast<std::ptrdiff_t>(i));
      outer.push_back(run(*n.second, args.subspan(i, m)));
      outer.insert(outer.end(), args.begin() + static_cast<std::ptrdiff_t>(i + m), args.end());
      return run(*n.first, outer);
    }
    case Node::Kind::permuted: {
      std::vector<Value> base(args.size());
      for (std::size_t k = 0; k < args.size(); ++k) base[n.perm(k)] = args[k];
      return run(*n.first, base);
    }
  }
  return Value();
}

}  // namespace

CompiledTerm::CompiledTerm(Dsl const& d, OperadTerm const& t)
    : root_(compile(d, t)), profile_(profile_of(d, t)), inputs_(d.denote(profile_.inputs)),
      display_(to_display(t)) {}

Value CompiledTerm::operator()(std::span<Value const> args) const {
  if (args.size() != inputs_.size()) {
    throw Error(ErrorKind::arity_mismatch, display_ + " expects " + std::to_string(inputs_.size()) +
                                               " arguments, got " + std::to_string(args.size()));
  }
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (args[k].type() != inputs_[k]) {
      throw Error(ErrorKind::type_mismatch,
                  "argument " + std::to_string(k) + " must inhabit " +
                      std::string(to_string(inputs_[k])) + ", got " +
                      std::string(to_string(args[k].type())));
    }
  }
  return run(*root_, args);
}

Value eval_term(Dsl const& d, OperadTerm const& t, std::span<Value const> args) {
  return CompiledTerm(d, t)(args);
}

std::size_t graft_depth(OperadTerm const& t) noexcept {
  return std::visit(
      [](auto const& node) -> std::size_t {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, OperadTerm::Graft>) {
          return 1 + std::max(graft_depth(*node.outer), graft_depth(*node.inner));
        } else if constexpr (std::is_same_v<T, OperadTerm::Permuted>) {
          return graft_depth(*node.base);
        } else {
          return 0;
        }
      },
      t.node());
}

std::string to_display(OperadTerm const& t) {
  return std::visit(
      [](auto const& node) -> std::string {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, OperadTerm::Unit>) {
          return "1_" + node.color;
        } else if constexpr (std::is_same_v<T, OperadTerm::Generator>) {
          return node.symbol;
        } else if constexpr (std::is_same_v<T, OperadTerm::Graft>) {
          return "(" + to_display(*node.outer) + " o" + std::to_string(node.index) + " " +
                 to_display(*node.inner) + ")";
        } else {
          std::string images;
          for (auto k : node.perm.images()) {
            if (!images.empty()) images += ",";
            images += std::to_string(k);
          }
          return "(" + to_display(*node.base) + " . [" + images + "])";
        }
      },
      t.node());
}

}  // namespace opglue
