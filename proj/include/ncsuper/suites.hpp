#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncsuper/check.hpp"
#include "ncsuper/presentations.hpp"

namespace ncsuper {

/// presentations, matrices, covariance, forms, connection, curvature, metric.
const std::vector<std::string>& suite_names();

struct SuiteConfig {
  std::vector<std::string> suites;  // may contain "all"
  std::optional<std::pair<Poly, Poly>> pinned;
  std::optional<RuleCorruption> corruption;
};

struct SuiteReport {
  std::vector<std::string> suites;
  CheckList results;
  /// Set when a presentation failed its confluence audit; later suites were skipped.
  bool aborted = false;

  std::size_t passed() const;
  std::size_t failed() const { return results.size() - passed(); }
};

/// Throws std::invalid_argument on an unknown or empty suite list.
SuiteReport run_suites(const SuiteConfig& config);

std::string report_text(const SuiteReport& report);
std::string report_json(const SuiteReport& report);

}  // namespace ncsuper
