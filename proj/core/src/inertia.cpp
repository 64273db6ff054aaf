#include "htoric/inertia.hpp"

#include <algorithm>

namespace htoric {

TorsionElement::TorsionElement(const RationalVector& v) : v_(canonical_mod_one(v)) {
  for (const auto& x : v_) order_ = lcm(order_, denominator_of(x));
}

TorsionElement TorsionElement::inverse() const {
  RationalVector neg = v_;
  for (auto& x : neg) x = -x;
  return TorsionElement(neg);
}

Rational TorsionElement::pairing(const IntVector& w) const { return dot(w, v_); }

TorsionElement operator+(const TorsionElement& a, const TorsionElement& b) {
  if (a.rank() != b.rank()) throw DimensionMismatch("torsion element rank mismatch");
  RationalVector s = a.v_;
  for (std::size_t i = 0; i < s.size(); ++i) s[i] += b.v_[i];
  return TorsionElement(s);
}

std::vector<std::string> TorsionElement::to_strings() const {
  std::vector<std::string> out;
  for (const auto& x : v_) out.push_back(to_string(x));
  return out;
}

std::vector<TorsionElement> stabilizer_elements(const WeightMatrix& a, const IndexSet& basis) {
  if (basis.size() != a.d()) throw InvalidInput("stabilizer_elements: " + format_index_set(basis) + " is not a basis");
  IntMatrix sub = a.matrix().select_columns(basis);
  if (sub.determinant() == 0)
    throw InvalidInput("stabilizer_elements: " + format_index_set(basis) + " is not a basis");
  std::vector<TorsionElement> out;
  for (const auto& v : cokernel_torsion_elements(sub)) out.emplace_back(v);
  return out;
}

IndexSet fixed_columns(const WeightMatrix& a, const TorsionElement& g) {
  if (g.rank() != a.d()) throw DimensionMismatch("fixed_columns: rank mismatch");
  IndexSet out;
  for (std::size_t j = 0; j < a.n(); ++j)
    if (g.fixes(a.column(j))) out.push_back(j);
  return out;
}

bool fixed_locus_nonempty(const StackModel& model, const IndexSet& fixed) {
  if (fixed.size() < model.d()) return false;
  if (model.base.matrix().select_columns(fixed).rank() < model.d()) return false;
  return model.is_stable_support(model.coordinates_of_columns(fixed));
}

std::vector<TorsionElement> inertia_elements(const StackModel& model) {
  std::vector<TorsionElement> out;
  for (const auto& basis : column_bases(model.base)) {
    for (auto& g : stabilizer_elements(model.base, basis)) {
      if (fixed_locus_nonempty(model, fixed_columns(model.base, g))) out.push_back(std::move(g));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational age(const StackModel& model, const TorsionElement& g) {
  if (!fixed_locus_nonempty(model, fixed_columns(model.base, g)))
    throw InvalidInput("age: element is not in the inertia of the model");
  Rational total = 0;
  for (const auto& [w, mult] : model.tangent_class.terms()) total += mult * frac(g.pairing(w));
  return total;
}

InertiaComponent inertia_component(const StackModel& model, const TorsionElement& g) {
  IndexSet fixed = fixed_columns(model.base, g);
  if (!fixed_locus_nonempty(model, fixed)) throw InvalidInput("inertia_component: empty fixed locus");
  return InertiaComponent{g, fixed, restrict_to_columns(model, fixed), age(model, g)};
}

std::vector<InertiaComponent> inertia_components(const StackModel& model) {
  std::vector<InertiaComponent> out;
  for (const auto& g : inertia_elements(model)) out.push_back(inertia_component(model, g));
  return out;
}

std::vector<DoubleInertiaComponent> double_inertia(const StackModel& model) {
  std::vector<TorsionElement> elems = inertia_elements(model);
  std::vector<IndexSet> fixed;
  for (const auto& g : elems) fixed.push_back(fixed_columns(model.base, g));
  std::vector<DoubleInertiaComponent> out;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j) {
      IndexSet common;
      std::set_intersection(fixed[i].begin(), fixed[i].end(), fixed[j].begin(), fixed[j].end(),
                            std::back_inserter(common));
      if (!fixed_locus_nonempty(model, common)) continue;
      out.push_back({elems[i], elems[j], std::move(common), elems[i] + elems[j]});
    }
  return out;
}

}  // namespace htoric
