#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncsuper/algebra.hpp"
#include "ncsuper/check.hpp"
#include "ncsuper/matrix.hpp"

namespace ncsuper {

/// Public algebra ids.
enum class AlgebraId { superspace, calculus, group, combined };

std::string_view algebra_name(AlgebraId id);
std::optional<AlgebraId> algebra_from_name(std::string_view name);

/// Relation lists as text, one relation per entry.
const std::vector<std::string>& superspace_relations();
const std::vector<std::string>& differential_relations();
const std::vector<std::string>& cordiff_relations();
const std::vector<std::string>& dercor_relations();
const std::vector<std::string>& derdiff_relations();
const std::vector<std::string>& derder_relations();
const std::vector<std::string>& group_relations();
/// Commutation relations of e, beta, gamma; theorems, not rules.
const std::vector<std::string>& group_derived_relations();

/// Replace rule `rule` of presentation `algebra` by a wrong right-hand side.
struct RuleCorruption {
  std::string algebra;
  std::size_t rule = 0;
};

/// Every presentation the engine uses. Besides the four public algebras:
///   forms          superspace plus free one-form letters, coefficients moved left
///   wedge          forms plus the two-form relations
///   group_forms    group (x) forms with Koszul cross rules
struct AlgebraSet {
  std::shared_ptr<const Presentation> superspace;
  std::shared_ptr<const Presentation> calculus;
  std::shared_ptr<const Presentation> group;
  std::shared_ptr<const Presentation> combined;
  std::shared_ptr<const Presentation> forms;
  std::shared_ptr<const Presentation> wedge;
  std::shared_ptr<const Presentation> group_forms;

  const Presentation& get(AlgebraId id) const;
  std::vector<std::shared_ptr<const Presentation>> all() const;
  const Presentation& by_name(std::string_view name) const;
};

/// Builds every presentation. Confluence is not checked here.
AlgebraSet build_algebras(const std::optional<RuleCorruption>& corruption = std::nullopt);
/// Shared uncorrupted set.
const AlgebraSet& standard_algebras();

class ConfluenceError : public AlgebraError {
 public:
  ConfluenceError(const std::string& what, ConfluenceReport report)
      : AlgebraError(what), report_(std::move(report)) {}
  const ConfluenceReport& report() const { return report_; }

 private:
  ConfluenceReport report_;
};

/// One public presentation, audited; throws ConfluenceError on a failing overlap.
std::shared_ptr<const Presentation> build_presentation(AlgebraId id);

/// The wrong right-hand side used for corruption: the negated rhs, or 1 when it is 0.
Element corrupted_rhs(const RewriteRule& rule);

/// e, beta, gamma expressed through a, b, c, d, alpha, delta, normalized in `p`
/// (any presentation containing the group letters).
Element group_e(const Presentation& p);
Element group_beta(const Presentation& p);
Element group_gamma(const Presentation& p);
/// Parser hook resolving e, beta, gamma in `p`.
Presentation::Macros group_macros(const Presentation& p);

/// T as a 3x3 matrix over `p`.
GradedMatrix t_matrix(const Presentation& p);
/// tau = (T^st)^-1 = J T J^-1.
GradedMatrix tau_matrix(const Presentation& p);
/// Printed antipode S(T).
GradedMatrix antipode_matrix(const Presentation& p);

/// Coordinates X^i, differentials Xi^i, derivatives d_i as letters of `p`.
Element coordinate(const Presentation& p, std::size_t i);
Element differential(const Presentation& p, std::size_t i);
Element derivative(const Presentation& p, std::size_t i);

/// Left coaction: algebra map from a calculus-type presentation (`from`, which
/// may also be `forms`) into its group tensor product (`to`).
class Coaction {
 public:
  Coaction(const Presentation& from, const Presentation& to);
  Element image_of(Letter l) const { return images_.at(l); }
  Element operator()(const Element& e) const;

 private:
  const Presentation& from_;
  const Presentation& to_;
  std::vector<Element> images_;
};

/// Group counit applied to the group letters of an element of `p`.
Element counit(const Presentation& p, const Element& e);

CheckList verify_presentation_theorems(const AlgebraSet& set);
CheckList check_confluence_all(const AlgebraSet& set);
/// Primed relations, invariants and counit. Derivative families are listed
/// under their own ids.
CheckList check_covariance(const AlgebraSet& set);
/// Supercommutators of the coordinates at h = 0.
CheckList check_classical_superspace(const AlgebraSet& set);

}  // namespace ncsuper
