#pragma once

// Logarithmic traces, obstruction bundles and the orbifold (Chen-Ruan) star
// product on the Chow groups of the inertia stack of a toric-type model.

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "htoric/characters.hpp"
#include "htoric/chow.hpp"
#include "htoric/inertia.hpp"

namespace htoric {

/// Weights each g-eigenpiece of V by its eigenvalue exponent k/r; a character
/// w contributes frac(<w, v>) times its multiplicity.
CharacterClass log_trace(const TorsionElement& g, const CharacterClass& v);

/// L(g1)T + L(g2)T + L((g1 g2)^-1)T - T + T^{g1,g2}, computed from the model's
/// tangent class. Throws NotABundle when a multiplicity is negative or fractional.
CharacterClass obstruction(const StackModel& model, const TorsionElement& g1, const TorsionElement& g2);

/// Tangent characters fixed by g1 g2 but not by both g1 and g2: the normal
/// bundle of the (g1, g2) double-inertia component inside the g1 g2 component.
CharacterClass normal_class(const StackModel& model, const TorsionElement& g1, const TorsionElement& g2);

/// Top Chern class prod_w <w, t>^mult. Throws NotABundle.
Polynomial euler_poly(const CharacterClass& bundle);
/// Total multiplicity of a bundle.
unsigned bundle_rank(const CharacterClass& bundle);

struct ProductEntry {
  std::size_t left = 0, right = 0, target = 0;  // component indices
  IndexSet common_fixed;
  CharacterClass obstruction;
  Polynomial obstruction_euler;
  CharacterClass normal;
  Polynomial normal_euler;
  /// eu(R) * e(N); l_left * l_right = structure * l_target.
  Polynomial structure;
  unsigned degree = 0;
  IntVector coordinates;  // canonical, in the target ring
};

struct OrbifoldTable {
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  ModelKind kind = ModelKind::Lawrence;
  std::size_t rank = 0;
  std::vector<InertiaComponent> components;
  std::vector<GradedRingPresentation> rings;
  /// Only pairs with a nonempty double-inertia component; missing pairs multiply to zero.
  std::map<std::pair<std::size_t, std::size_t>, ProductEntry> products;
  /// Requested comparison bound.
  unsigned requested_degree = 0;
  /// Ring truncation actually used, raised to cover all pair and triple products.
  unsigned truncation = 0;

  std::size_t index_of(const TorsionElement& g) const;
  std::size_t identity_index() const;
  const ProductEntry* product(std::size_t i, std::size_t j) const;
  /// l_g: the fundamental class of component i.
  GradedClass generator(std::size_t i) const;
};

OrbifoldTable orbifold_table(const StackModel& model, unsigned degree);

/// alpha * beta; a class on component npos (or with zero polynomial) is zero.
GradedClass star(const OrbifoldTable& table, const GradedClass& a, const GradedClass& b);
bool is_zero_class(const OrbifoldTable& table, const GradedClass& c);
bool same_class(const OrbifoldTable& table, const GradedClass& a, const GradedClass& b);

struct LawsReport {
  bool commutative = true;
  bool associative = true;
  bool unit = true;
  bool age_graded = true;
  std::size_t pairs_checked = 0;
  std::size_t triples_checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return commutative && associative && unit && age_graded; }
};

/// Commutativity on all pairs, associativity on all triples, the unit law for
/// l_1 and additivity of (degree + age) on nonzero generator products.
LawsReport check_star_laws(const OrbifoldTable& table);

struct PullbackReport {
  bool pass = true;
  std::size_t components_checked = 0;
  std::vector<std::string> failures;
};

/// Obstruction classes of the hypertoric model equal the restrictions of the
/// Lawrence ones on every double-inertia component.
PullbackReport verify_obstruction_pullback(const IntMatrix& a, const IntVector& theta);

struct OrbifoldIsoReport {
  bool pass = true;
  std::size_t components = 0;
  std::size_t products = 0;
  std::vector<std::string> failures;
};

/// Builds both orbifold tables independently and compares component rings
/// (up to `degree`), structure constants and ages.
OrbifoldIsoReport verify_orbifold_iso(const IntMatrix& a, const IntVector& theta, unsigned degree);

std::string describe_element(const TorsionElement& g);  // "(1/3)" or "(0,1/2)"

}  // namespace htoric
