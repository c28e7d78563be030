#ifndef OPGLUE_VALUE_HPP_
#define OPGLUE_VALUE_HPP_

#include <array>
#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace opglue {

// The fixed catalog of base types every sigil denotes into.
enum class BaseType { boolean, natural, string, unit, fieldmap };

inline constexpr std::array<BaseType, 5> all_base_types{
    BaseType::boolean, BaseType::natural, BaseType::string, BaseType::unit,
    BaseType::fieldmap};

std::string_view to_string(BaseType t) noexcept;
std::optional<BaseType> parse_base_type(std::string_view tag) noexcept;

using Natural = boost::multiprecision::cpp_int;

struct Unit {
  auto operator<=>(Unit const&) const = default;
};

// std::map keeps fieldmap equality independent of insertion order.
using FieldMap = std::map<std::string, std::string>;

// A run-time datum. Alternative index matches the BaseType enumerator.
class Value {
 public:
  using Storage = std::variant<bool, Natural, std::string, Unit, FieldMap>;

  Value() : data_(Unit{}) {}
  Value(bool b) : data_(b) {}
  Value(Natural n);
  template <std::integral I>
    requires(!std::same_as<I, bool>)
  Value(I n) : Value(Natural(n)) {}
  Value(std::string s) : data_(std::move(s)) {}
  Value(char const* s) : data_(std::string(s)) {}
  Value(Unit u) : data_(u) {}
  Value(FieldMap m) : data_(std::move(m)) {}

  BaseType type() const noexcept { return static_cast<BaseType>(data_.index()); }

  bool as_bool() const { return std::get<bool>(data_); }
  Natural const& as_natural() const { return std::get<Natural>(data_); }
  std::string const& as_string() const { return std::get<std::string>(data_); }
  FieldMap const& as_fieldmap() const { return std::get<FieldMap>(data_); }

  Storage const& storage() const noexcept { return data_; }

  friend bool operator==(Value const& a, Value const& b) { return a.data_ == b.data_; }
  friend bool operator<(Value const& a, Value const& b) { return a.data_ < b.data_; }

 private:
  Storage data_;
};

// Human-readable rendering used in diagnostics and counterexamples.
std::string to_display(Value const& v);

// Bounded, duplicate-free enumeration of a base-type carrier. Throws
// invalid_bound when bound == 0.
std::vector<Value> enumerate_carrier(BaseType t, std::size_t bound);

// Visits the cartesian product of carriers, last position varying fastest.
// The visitor returns false to stop early; the function returns false iff it
// was stopped.
bool for_each_tuple(std::vector<BaseType> const& types, std::size_t bound,
                    std::function<bool(std::vector<Value> const&)> const& visit);

std::vector<std::vector<Value>> enumerate_tuples(std::vector<BaseType> const& types,
                                                 std::size_t bound);

}  // namespace opglue

#endif
