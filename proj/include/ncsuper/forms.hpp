#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ncsuper/check.hpp"
#include "ncsuper/presentations.hpp"

namespace ncsuper {

/// Element of Omega^{k1} (x) Omega^{k2} (x) ... over the superspace, kept
/// left-canonical: every word is coordinates followed by one-form letters.
/// `layout` lists the form degree of each tensor slot (1 or 2); an empty
/// layout is a function.
class Tensor {
 public:
  Tensor() = default;
  Tensor(std::vector<unsigned> layout, Element value) : layout_(std::move(layout)), value_(std::move(value)) {}

  const std::vector<unsigned>& layout() const { return layout_; }
  const Element& value() const { return value_; }
  unsigned degree() const;
  bool is_zero() const { return value_.is_zero(); }

  friend bool operator==(const Tensor& a, const Tensor& b) { return a.layout_ == b.layout_ && a.value_ == b.value_; }

 private:
  std::vector<unsigned> layout_;
  Element value_;
};

class FormError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operations on tensors over the `forms` and `wedge` presentations.
class Forms {
 public:
  explicit Forms(const AlgebraSet& set);

  const Presentation& algebra() const { return forms_; }

  /// Normal form: coordinates left, two-form slots reduced to the basis
  /// {xi1 xi1, xi1 eta, xi1 xi2, eta xi2, xi2 xi2}.
  Tensor canonicalize(std::vector<unsigned> layout, const Element& raw) const;
  Tensor canonicalize(const Tensor& t) const { return canonicalize(t.layout(), t.value()); }

  Tensor function(const Element& f) const;
  Tensor basis(std::size_t a) const;
  Tensor basis_pair(std::size_t a, std::size_t b) const;
  Tensor coordinate(std::size_t a) const;

  Tensor add(const Tensor& a, const Tensor& b) const;
  Tensor sub(const Tensor& a, const Tensor& b) const;
  Tensor scale(const Poly& s, const Tensor& t) const;
  /// a (x) b: slots concatenated.
  Tensor tensor(const Tensor& a, const Tensor& b) const;
  /// a /\ b: the last slot of a and the first slot of b are wedged.
  Tensor wedge(const Tensor& a, const Tensor& b) const;
  /// Algebra product; at most one side may carry form slots unless both are functions.
  Tensor multiply(const Tensor& a, const Tensor& b) const;

  /// sigma on slots (pos, pos+1), both of degree 1.
  Tensor sigma(const Tensor& t, std::size_t pos = 0) const;
  /// Wedges slots 0 and 1.
  Tensor pi(const Tensor& t) const;
  /// Exterior derivative of a function or a one-form.
  Tensor d(const Tensor& t) const;

  Parity parity(const Tensor& t) const;
  Tensor substitute(const Tensor& t, const std::map<Symbol, Poly>& bindings) const;

  /// Invariant elements.
  Tensor phi() const;
  Tensor rho() const;
  Tensor lambda() const;
  Tensor chi() const;
  Tensor varpi() const;

  std::string format(const Tensor& t) const;
  /// Grammar of the command line: `ox` separates slots, `/\` wedges, `*` is
  /// the algebra product; rho, phi, Lambda are the invariants.
  Tensor parse(std::string_view text) const;

 private:
  const Presentation& forms_;
  const Presentation& wedge_;
  std::vector<Letter> coord_;
  std::vector<Letter> diff_;
};

CheckList check_form_identities(const AlgebraSet& set);

}  // namespace ncsuper
