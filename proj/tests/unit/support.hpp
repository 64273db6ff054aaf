#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "htoric/exact.hpp"

namespace test {

inline htoric::Rational q(const std::string& s) { return htoric::parse_rational(s); }

inline htoric::IntVector iv(std::initializer_list<long long> xs) {
  htoric::IntVector v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

inline htoric::RationalVector qv(std::initializer_list<const char*> xs) {
  htoric::RationalVector v;
  for (auto x : xs) v.push_back(q(x));
  return v;
}

/// 1 x n matrix.
inline htoric::IntMatrix row(std::initializer_list<long long> xs) {
  return htoric::IntMatrix::from_rows({iv(xs)});
}

}  // namespace test

namespace doctest {
template <>
struct StringMaker<htoric::Integer> {
  static String convert(const htoric::Integer& z) { return htoric::to_string(z).c_str(); }
};
template <>
struct StringMaker<htoric::Rational> {
  static String convert(const htoric::Rational& r) { return htoric::to_string(r).c_str(); }
};
template <>
struct StringMaker<htoric::IntMatrix> {
  static String convert(const htoric::IntMatrix& m) { return m.to_string().c_str(); }
};
}  // namespace doctest
