#ifndef OPGLUE_MAP_SEARCH_HPP_
#define OPGLUE_MAP_SEARCH_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "opglue/dsl.hpp"
#include "opglue/error.hpp"

namespace opglue::detail {

// Visits every denotation-preserving map from `sources` (listed by base)
// into the sigils of `target`, as index vectors. Stops when visit returns false.
template <typename Visit>
bool for_each_sigil_map(std::vector<BaseType> const& sources, TypeUniverse const& target,
                        Visit&& visit) {
  std::vector<std::vector<std::size_t>> allowed(sources.size());
  for (std::size_t i = 0; i < sources.size(); ++i) {
    for (std::size_t t = 0; t < target.sigils.size(); ++t) {
      if (target.sigils[t].base == sources[i]) allowed[i].push_back(t);
    }
    if (allowed[i].empty()) return true;
  }
  std::vector<std::size_t> odometer(sources.size(), 0);
  std::vector<std::size_t> map(sources.size());
  for (std::size_t i = 0; i < sources.size(); ++i) map[i] = allowed[i][0];
  while (true) {
    if (!visit(map)) return false;
    std::size_t pos = sources.size();
    while (true) {
      if (pos == 0) return true;
      --pos;
      if (++odometer[pos] < allowed[pos].size()) {
        map[pos] = allowed[pos][odometer[pos]];
        break;
      }
      odometer[pos] = 0;
      map[pos] = allowed[pos][0];
    }
  }
}

// Visits every map {0..n-1} -> {0..m-1}.
template <typename Visit>
bool for_each_function(std::size_t n, std::size_t m, Visit&& visit) {
  std::vector<std::size_t> map(n, 0);
  if (n > 0 && m == 0) return true;
  while (true) {
    if (!visit(map)) return false;
    std::size_t pos = n;
    while (true) {
      if (pos == 0) return true;
      --pos;
      if (++map[pos] < m) break;
      map[pos] = 0;
    }
  }
}

class SearchBudget {
 public:
  explicit SearchBudget(std::size_t ceiling) : ceiling_(ceiling) {}
  void spend() {
    if (++spent_ > ceiling_) {
      throw Error(ErrorKind::search_space_exceeded,
                  "universal-property search exceeded " + std::to_string(ceiling_) +
                      " candidate checks");
    }
  }
  std::size_t spent() const noexcept { return spent_; }

 private:
  std::size_t ceiling_;
  std::size_t spent_ = 0;
};

inline std::vector<BaseType> bases_of(TypeUniverse const& u) {
  std::vector<BaseType> out;
  for (auto const& s : u.sigils) out.push_back(s.base);
  return out;
}

}  // namespace opglue::detail

#endif
