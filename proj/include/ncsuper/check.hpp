#pragma once

#include <string>
#include <vector>

#include "ncsuper/algebra.hpp"

namespace ncsuper {

/// One verified identity. `residual` is the printed normal form of lhs - rhs,
/// empty when it vanished.
struct CheckResult {
  std::string check_id;
  std::string anchor;
  bool pass = false;
  std::string residual;
};

using CheckList = std::vector<CheckResult>;

inline CheckResult zero_check(std::string id, std::string anchor, const Presentation& p, const Element& residual) {
  const bool ok = residual.is_zero();
  return {std::move(id), std::move(anchor), ok, ok ? std::string() : p.format(residual)};
}

inline CheckResult bool_check(std::string id, std::string anchor, bool ok, std::string detail = {}) {
  return {std::move(id), std::move(anchor), ok, ok ? std::string() : std::move(detail)};
}

inline void append(CheckList& into, CheckList more) {
  into.insert(into.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

}  // namespace ncsuper
