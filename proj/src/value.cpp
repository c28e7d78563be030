#include "opglue/value.hpp"

#include "opglue/error.hpp"

#include <algorithm>

namespace opglue {

std::string_view to_string(BaseType t) noexcept {
  switch (t) {
    case BaseType::boolean: return "boolean";
    case BaseType::natural: return "natural";
    case BaseType::string: return "string";
    case BaseType::unit: return "unit";
    case BaseType::fieldmap: return "fieldmap";
  }
  return "?";
}

std::optional<BaseType> parse_base_type(std::string_view tag) noexcept {
  for (auto t : all_base_types) {
    if (to_string(t) == tag) return t;
  }
  return std::nullopt;
}

Value::Value(Natural n) : data_(std::move(n)) {
  if (std::get<Natural>(data_) < 0) {
    throw Error(ErrorKind::type_mismatch, "naturals are non-negative");
  }
}

namespace {

std::string quoted(std::string const& s) { return "\"" + s + "\""; }

struct DisplayVisitor {
  std::string operator()(bool b) const { return b ? "true" : "false"; }
  std::string operator()(Natural const& n) const { return n.str(); }
  std::string operator()(std::string const& s) const { return quoted(s); }
  std::string operator()(Unit) const { return "()"; }
  std::string operator()(FieldMap const& m) const {
    std::string out = "{";
    bool first = true;
    for (auto const& [k, v] : m) {
      if (!first) out += ", ";
      first = false;
      out += k + ": " + quoted(v);
    }
    return out + "}";
  }
};

std::vector<Value> shortlex_strings(std::size_t max_len_exclusive) {
  std::vector<Value> out;
  std::vector<std::string> layer{""};
  for (std::size_t len = 0; len < max_len_exclusive; ++len) {
    for (auto const& s : layer) out.emplace_back(s);
    std::vector<std::string> next;
    for (auto const& s : layer) {
      next.push_back(s + "a");
      next.push_back(s + "b");
    }
    layer = std::move(next);
  }
  return out;
}

// Maps ordered by size, then by field names, then by values.
std::vector<Value> small_fieldmaps(std::size_t max_fields) {
  static constexpr std::array<char const*, 2> names{"f", "g"};
  static constexpr std::array<char const*, 2> values{"", "a"};
  std::vector<Value> out;
  out.emplace_back(FieldMap{});
  if (max_fields >= 1) {
    for (auto name : names) {
      for (auto value : values) out.emplace_back(FieldMap{{name, value}});
    }
  }
  if (max_fields >= 2) {
    for (auto vf : values) {
      for (auto vg : values) out.emplace_back(FieldMap{{"f", vf}, {"g", vg}});
    }
  }
  return out;
}

}  // namespace

std::string to_display(Value const& v) { return std::visit(DisplayVisitor{}, v.storage()); }

std::vector<Value> enumerate_carrier(BaseType t, std::size_t bound) {
  if (bound == 0) {
    throw Error(ErrorKind::invalid_bound, "enumeration bound must be at least 1");
  }
  switch (t) {
    case BaseType::boolean: return {Value(false), Value(true)};
    case BaseType::unit: return {Value(Unit{})};
    case BaseType::natural: {
      std::vector<Value> out;
      out.reserve(bound);
      for (std::size_t i = 0; i < bound; ++i) out.emplace_back(Natural(i));
      return out;
    }
    case BaseType::string: return shortlex_strings(std::min<std::size_t>(bound, 4));
    case BaseType::fieldmap: return small_fieldmaps(std::min<std::size_t>(bound, 2));
  }
  return {};
}

bool for_each_tuple(std::vector<BaseType> const& types, std::size_t bound,
                    std::function<bool(std::vector<Value> const&)> const& visit) {
  std::vector<std::vector<Value>> carriers;
  carriers.reserve(types.size());
  for (auto t : types) carriers.push_back(enumerate_carrier(t, bound));

  std::vector<std::size_t> odometer(types.size(), 0);
  std::vector<Value> tuple;
  tuple.reserve(types.size());
  for (auto const& c : carriers) tuple.push_back(c.front());

  while (true) {
    if (!visit(tuple)) return false;
    std::size_t pos = types.size();
    while (pos > 0) {
      --pos;
      if (++odometer[pos] < carriers[pos].size()) {
        tuple[pos] = carriers[pos][odometer[pos]];
        break;
      }
      odometer[pos] = 0;
      tuple[pos] = carriers[pos].front();
      if (pos == 0) return true;
    }
    if (types.empty()) return true;
  }
}

std::vector<std::vector<Value>> enumerate_tuples(std::vector<BaseType> const& types,
                                                 std::size_t bound) {
  std::vector<std::vector<Value>> out;
  for_each_tuple(types, bound, [&](std::vector<Value> const& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

}  // namespace opglue
