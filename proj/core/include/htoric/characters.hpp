#pragma once

#include <map>
#include <string>

#include "htoric/exact.hpp"

namespace htoric {

/// Formal rational combination of torus characters w in Z^d. The trivial
/// character is kept apart with an integer multiplicity.
class CharacterClass {
 public:
  using Terms = std::map<IntVector, Rational>;

  explicit CharacterClass(std::size_t rank = 0) : rank_(rank) {}

  std::size_t rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  const Integer& trivial() const { return trivial_; }

  /// Adds mult copies of w; a zero w goes to the trivial multiplicity,
  /// which must then be integral.
  void add(const IntVector& w, const Rational& mult);
  void add_trivial(const Integer& mult) { trivial_ += mult; }

  Rational multiplicity(const IntVector& w) const;

  /// Nonnegative integer multiplicities everywhere.
  bool is_bundle() const;
  bool is_zero() const { return terms_.empty() && trivial_ == 0; }

  CharacterClass& operator+=(const CharacterClass& o);
  CharacterClass& operator-=(const CharacterClass& o);
  friend bool operator==(const CharacterClass&, const CharacterClass&) = default;

  /// e.g. "chi(2) + 1/3*chi(1,1) - 2*1".
  std::string to_string() const;

 private:
  std::size_t rank_;
  Terms terms_;
  Integer trivial_ = 0;
};

bool is_trivial_character(const IntVector& w);

}  // namespace htoric
