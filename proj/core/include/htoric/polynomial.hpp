#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "htoric/exact.hpp"

namespace htoric {

/// Exponent vector of a monomial in t_1..t_d.
struct Monomial {
  std::vector<unsigned> exps;

  unsigned degree() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);

/// Graded lexicographic order with t1 > t2 > ... ; "greater first".
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All monomials of degree k in n variables, in decreasing grlex order.
std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned k);

/// Sparse integer polynomial in a fixed number of variables.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Integer, GrlexGreater>;

  explicit Polynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}

  static Polynomial constant(std::size_t num_vars, const Integer& c);
  static Polynomial variable(std::size_t num_vars, std::size_t i);
  /// <w, t> = sum_i w_i t_i
  static Polynomial linear_form(std::span<const Integer> w);
  static Polynomial monomial(const Monomial& m, const Integer& c = 1);

  std::size_t num_vars() const { return num_vars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Monomial& m) const;

  /// Degree of the leading term; 0 for the zero polynomial.
  unsigned degree() const;
  bool is_homogeneous() const;

  void add_term(const Monomial& m, const Integer& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Integer& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Integer& c) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned e) const;
  /// Substitutes images[i] for t_i; images share a common variable count.
  Polynomial substitute(const std::vector<Polynomial>& images, std::size_t target_vars) const;

  /// e.g. "2*t1^2", "t1*t2 - 3*t2^2", "0".
  std::string to_string() const;

 private:
  std::size_t num_vars_;
  Terms terms_;
};

}  // namespace htoric
