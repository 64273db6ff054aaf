#pragma once

// Exact integer/rational arithmetic, integer matrices, Smith normal form and
// enumeration of the finite groups {v in (Q/Z)^d : M^T v integral}.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "htoric/errors.hpp"

namespace htoric {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

Integer numerator_of(const Rational& r);
Integer denominator_of(const Rational& r);

/// Floor division for arbitrary sign (cpp_int division truncates).
Integer floor_div(const Integer& a, const Integer& b);
/// Remainder in [0, |b|).
Integer mod_floor(const Integer& a, const Integer& b);

Rational floor(const Rational& r);
/// Fractional part in [0, 1).
Rational frac(const Rational& r);
bool is_integral(const Rational& r);

/// Entries reduced to [0,1); the canonical representative of a class in (Q/Z)^d.
RationalVector canonical_mod_one(const RationalVector& v);
bool is_integral(const RationalVector& v);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);
/// Accepts "p", "-p", "p/q".
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

Rational dot(std::span<const Integer> w, std::span<const Rational> v);

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  IntMatrix select_columns(std::span<const std::size_t> cols) const;
  IntMatrix transpose() const;

  Integer determinant() const;
  std::size_t rank() const;
  bool is_diagonal() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);

  IntVector apply(std::span<const Integer> x) const;
  RationalVector apply(std::span<const Rational> x) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// U * M * V = D with U, V unimodular and D diagonal with d1 | d2 | ... .
struct SnfResult {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// Diagonal entries of D (length min(rows, cols)), nonnegative.
  IntVector diagonal() const;
  /// Number of nonzero diagonal entries.
  std::size_t rank() const;
};

SnfResult snf(const IntMatrix& m);

/// Exact solution of M x = b, or nullopt when inconsistent. Free variables
/// of an underdetermined system are set to zero.
std::optional<RationalVector> solve_rational(const IntMatrix& m, const RationalVector& b);

/// All v in (Q/Z)^d with M^T v integral, canonical and sorted. |result| = |det M|.
std::vector<RationalVector> cokernel_torsion_elements(const IntMatrix& m);

}  // namespace htoric
