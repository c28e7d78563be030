#ifndef OPGLUE_OPERAD_HPP_
#define OPGLUE_OPERAD_HPP_

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "opglue/dsl.hpp"

namespace opglue {

// A bijection on {0..n-1}, stored as its image list.
class Permutation {
 public:
  Permutation() = default;
  // Throws size_mismatch unless images is a permutation of 0..n-1.
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t n);
  static Permutation transposition(std::size_t n, std::size_t a, std::size_t b);

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t k) const { return images_.at(k); }
  std::vector<std::size_t> const& images() const noexcept { return images_; }
  Permutation inverse() const;
  bool is_identity() const noexcept;

  bool operator==(Permutation const&) const = default;

 private:
  std::vector<std::size_t> images_;
};

// k -> outer(inner(k)); permuting by inner and then by outer equals permuting
// by compose(inner, outer) under the right action used here.
Permutation compose(Permutation const& outer, Permutation const& inner);

// All permutations of n points in lexicographic order of image lists.
std::vector<Permutation> all_permutations(std::size_t n);

// For sigma on n points: the permutation of n+m-1 points that moves the
// m-element block at slot i to slot sigma(i) and the singletons as sigma does.
Permutation block_permutation(Permutation const& sigma, std::size_t i, std::size_t m);

// For tau on m points: tau acting on the block [i, i+m) of n+m-1 points.
Permutation block_inset(Permutation const& tau, std::size_t i, std::size_t n);

// Output color and ordered input colors of an operad term.
struct Profile {
  std::string output;
  std::vector<std::string> inputs;

  std::size_t arity() const noexcept { return inputs.size(); }
  bool operator==(Profile const&) const = default;
};

class OperadTerm {
 public:
  struct Unit {
    std::string color;
  };
  struct Generator {
    std::string symbol;
  };
  struct Graft {
    std::shared_ptr<OperadTerm const> outer;
    std::size_t index;
    std::shared_ptr<OperadTerm const> inner;
  };
  struct Permuted {
    std::shared_ptr<OperadTerm const> base;
    Permutation perm;
  };
  using Node = std::variant<Unit, Generator, Graft, Permuted>;

  // Raw node constructors. No coloring checks; use the free functions below
  // (or profile_of) to obtain checked terms.
  static OperadTerm make_unit(std::string color) { return OperadTerm(Unit{std::move(color)}); }
  static OperadTerm make_generator(std::string symbol) {
    return OperadTerm(Generator{std::move(symbol)});
  }
  static OperadTerm make_graft(OperadTerm outer, std::size_t index, OperadTerm inner);
  static OperadTerm make_permuted(OperadTerm base, Permutation perm);

  Node const& node() const noexcept { return node_; }

  friend bool operator==(OperadTerm const& a, OperadTerm const& b);

 private:
  explicit OperadTerm(Node n) : node_(std::move(n)) {}
  Node node_;
};

// Throws ill_colored_term (naming the offending graft), unknown_sigil, or
// unknown_symbol.
Profile profile_of(Dsl const& d, OperadTerm const& t);

OperadTerm unit_term(Dsl const& d, std::string const& color);
OperadTerm generator_term(Dsl const& d, std::string const& symbol);
// Checked grafting: index_out_of_range or color_mismatch.
OperadTerm graft(Dsl const& d, OperadTerm const& outer, std::size_t i, OperadTerm const& inner);
// Checked permutation: size_mismatch.
OperadTerm permute_term(Dsl const& d, OperadTerm const& t, Permutation const& sigma);

// A term whose profile and symbol references are resolved once, for repeated
// evaluation. Holds copies of the actions it needs; the Dsl may go away.
class CompiledTerm {
 public:
  // Throws as profile_of does.
  CompiledTerm(Dsl const& d, OperadTerm const& t);

  Profile const& profile() const noexcept { return profile_; }
  // Same checks and result as eval_term.
  Value operator()(std::span<Value const> args) const;

  struct Node;

 private:
  std::shared_ptr<Node const> root_;
  Profile profile_;
  std::vector<BaseType> inputs_;
  std::string display_;
};

// Substitution semantics of the operad of sets:
// (f o_i g)(x_0..x_{i-1}, y.., x_{i+1}..) = f(x_0..x_{i-1}, g(y..), x_{i+1}..).
Value eval_term(Dsl const& d, OperadTerm const& t, std::span<Value const> args);

std::size_t graft_depth(OperadTerm const& t) noexcept;
std::string to_display(OperadTerm const& t);

}  // namespace opglue

#endif
