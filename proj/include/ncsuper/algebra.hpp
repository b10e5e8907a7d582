#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ncsuper/poly.hpp"

namespace ncsuper {

/// Z2 degree: 0 even, 1 odd.
using Parity = std::uint8_t;

/// A generator's position in its table doubles as its rank in the normal order.
using Letter = std::uint8_t;
using Word = std::vector<Letter>;

struct Generator {
  std::string name;
  Parity parity = 0;
  /// Weight in the termination order; positive.
  unsigned weight = 1;
};

class GeneratorTable {
 public:
  GeneratorTable() = default;
  explicit GeneratorTable(std::vector<Generator> entries);

  std::size_t size() const { return entries_.size(); }
  const Generator& operator[](Letter l) const { return entries_.at(l); }
  const std::vector<Generator>& entries() const { return entries_; }
  std::optional<Letter> find(std::string_view name) const;
  Letter at(std::string_view name) const;

 private:
  std::vector<Generator> entries_;
};

/// Finite formal sum of Poly-weighted words. Carries no presentation; the
/// same value is "normalized" only relative to the presentation that produced it.
class Element {
 public:
  using TermMap = std::map<Word, Poly>;

  Element() = default;
  Element(const Poly& scalar);  // NOLINT(google-explicit-constructor)
  Element(long scalar) : Element(Poly(scalar)) {}  // NOLINT(google-explicit-constructor)

  static Element word(Word w, const Poly& coeff = Poly(1));
  static Element letter(Letter l) { return word({l}); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const;
  /// Coefficient of the empty word.
  Poly scalar_part() const;
  Poly coefficient(const Word& w) const;

  void add(const Word& w, const Poly& coeff);

  Element& operator+=(const Element& rhs);
  Element& operator-=(const Element& rhs);
  Element& operator*=(const Poly& scalar);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(Element a) { return a *= Poly(-1); }
  friend Element operator*(Element a, const Poly& s) { return a *= s; }
  friend Element operator*(const Poly& s, Element a) { return a *= s; }
  friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

  /// Concatenation product, no rewriting.
  friend Element free_product(const Element& a, const Element& b);

  Element substitute(const std::map<Symbol, Poly>& bindings) const;

 private:
  TermMap terms_;
};

struct RewriteRule {
  Word lhs;
  Element rhs;
  /// Relation text the rule was oriented from.
  std::string source;
};

struct OverlapResult {
  Word overlap;
  std::size_t first_rule = 0;
  std::size_t second_rule = 0;
  Element via_first;
  Element via_second;
  bool agree = false;
};

struct ConfluenceReport {
  std::vector<OverlapResult> overlaps;
  bool ok() const;
  std::size_t failures() const;
};

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class StepBudgetExceeded : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Rewrite-step guard per normalization. Reads NCSUPER_STEP_BUDGET once,
/// default 1'000'000.
std::size_t step_budget();
void set_step_budget(std::size_t steps);

/// Generators plus quadratic rewrite rules.
///
/// Words are compared by total weight, then lexicographically by rank; every
/// rule must strictly decrease a word under that order, which certifies
/// termination. Rules keep the parity of their lhs.
class Presentation {
 public:
  Presentation(std::string name, GeneratorTable table, std::vector<RewriteRule> rules);

  /// Orients each relation "lhs = rhs" (or a bare expression meaning "= 0")
  /// by solving for its largest word, whose coefficient must be a nonzero
  /// rational.
  static Presentation from_relations(std::string name, GeneratorTable table,
                                     const std::vector<std::string>& relations);

  const std::string& name() const { return name_; }
  const GeneratorTable& table() const { return table_; }
  const std::vector<RewriteRule>& rules() const { return rules_; }
  const RewriteRule* rule_for(Letter first, Letter second) const;

  Parity word_parity(const Word& w) const;
  /// Parity of each term; throws if the terms disagree.
  Parity parity(const Element& e) const;
  unsigned word_weight(const Word& w) const;
  /// Strict termination order.
  bool word_less(const Word& a, const Word& b) const;
  bool is_irreducible(const Word& w) const;

  Element normalize(const Element& e) const;
  Element normalize_word(const Word& w) const;
  Element multiply(const Element& a, const Element& b) const;
  Element power(const Element& e, unsigned n) const;
  /// Graded commutator [a, b} = ab - (-1)^{|a||b|} ba of homogeneous elements.
  Element supercommutator(const Element& a, const Element& b) const;

  ConfluenceReport check_confluence() const;

  /// Named elements the parser expands in place of an identifier.
  using Macros = std::function<std::optional<Element>(const std::string&)>;

  /// Parses and normalizes an expression over this table; `*` is the
  /// algebra product, `h c0 c1 c2` are scalars.
  Element parse(std::string_view text, const Macros& macros = {}) const;
  /// Normal form of lhs - rhs for "lhs = rhs"; a bare expression means "= 0".
  Element relation(std::string_view text, const Macros& macros = {}) const;
  /// lhs - rhs as written, without rewriting.
  Element free_relation(std::string_view text, const Macros& macros = {}) const;
  std::string format(const Element& e) const;
  std::string format_word(const Word& w) const;

  /// Copy with one rule's rhs replaced; re-validated.
  Presentation with_rule_rhs(std::size_t index, Element rhs) const;

 private:
  void validate() const;
  void index_rules();

  std::string name_;
  GeneratorTable table_;
  std::vector<RewriteRule> rules_;
  std::vector<int> pair_rule_;  // size n*n, -1 when no rule

  struct Cache {
    std::mutex mutex;
    std::unordered_map<std::string, Element> normal_forms;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Relabels letters by generator name; the result is not normalized.
Element embed(const Element& e, const Presentation& from, const Presentation& to);

/// Formats `coeff * word_text` as a term with an explicit leading sign
/// handled by the caller; shared by every printer in the project.
std::string format_term(const Poly& coeff, const std::string& word_text, bool first);

}  // namespace ncsuper
