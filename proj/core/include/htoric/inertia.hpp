#pragma once

#include <vector>

#include "htoric/git_model.hpp"

namespace htoric {

/// Finite-order torus element g = exp(2 pi i v), v in (Q/Z)^d.
class TorsionElement {
 public:
  TorsionElement() = default;
  /// Reduces v to its canonical representative in [0,1)^d.
  explicit TorsionElement(const RationalVector& v);

  static TorsionElement identity(std::size_t d) { return TorsionElement(RationalVector(d, Rational(0))); }

  const RationalVector& v() const { return v_; }
  std::size_t rank() const { return v_.size(); }
  /// Least r >= 1 with r v integral.
  const Integer& order() const { return order_; }
  bool is_identity() const { return order_ == 1; }

  TorsionElement inverse() const;
  /// <w, v>
  Rational pairing(const IntVector& w) const;
  bool fixes(const IntVector& w) const { return is_integral(pairing(w)); }

  friend TorsionElement operator+(const TorsionElement& a, const TorsionElement& b);
  friend bool operator==(const TorsionElement& a, const TorsionElement& b) { return a.v_ == b.v_; }
  friend bool operator<(const TorsionElement& a, const TorsionElement& b) { return a.v_ < b.v_; }

  std::vector<std::string> to_strings() const;

 private:
  RationalVector v_;
  Integer order_ = 1;
};

struct InertiaComponent {
  TorsionElement g;
  IndexSet fixed_columns;  // indices into the ambient model's base columns
  StackModel model;        // model built on the fixed columns
  Rational age;
};

struct DoubleInertiaComponent {
  TorsionElement g1, g2;
  IndexSet common_fixed;
  TorsionElement target;  // g1 g2
};

std::vector<TorsionElement> stabilizer_elements(const WeightMatrix& a, const IndexSet& basis);
IndexSet fixed_columns(const WeightMatrix& a, const TorsionElement& g);

/// Sorted, deduplicated torsion elements whose fixed locus meets the stable locus.
std::vector<TorsionElement> inertia_elements(const StackModel& model);
/// Whether the points fixed by every element of `fixed` columns include a stable point.
bool fixed_locus_nonempty(const StackModel& model, const IndexSet& fixed);

/// Sum of frac(<w, v>) over the model's tangent characters with multiplicity.
Rational age(const StackModel& model, const TorsionElement& g);

InertiaComponent inertia_component(const StackModel& model, const TorsionElement& g);
std::vector<InertiaComponent> inertia_components(const StackModel& model);

/// Ordered pairs of inertia elements with a nonempty common fixed stable locus.
std::vector<DoubleInertiaComponent> double_inertia(const StackModel& model);

}  // namespace htoric
