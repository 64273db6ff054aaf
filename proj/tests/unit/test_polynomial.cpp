#include "htoric/characters.hpp"
#include "htoric/polynomial.hpp"
#include "support.hpp"

using namespace htoric;
using test::iv;
using test::q;

namespace {
Polynomial t(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }

Integer binomial(unsigned n, unsigned k) {
  Integer r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}
}  // namespace

TEST_CASE("monomials of degree k in grlex order") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (unsigned k = 0; k <= 5; ++k)
      CHECK(Integer(monomials_of_degree(n, k).size()) == binomial(static_cast<unsigned>(n + k - 1), k));
  auto m = monomials_of_degree(2, 2);
  REQUIRE(m.size() == 3);
  CHECK(m[0].exps == std::vector<unsigned>{2, 0});
  CHECK(m[1].exps == std::vector<unsigned>{1, 1});
  CHECK(m[2].exps == std::vector<unsigned>{0, 2});
  CHECK(monomials_of_degree(0, 0).size() == 1);
  CHECK(monomials_of_degree(0, 1).empty());
}

TEST_CASE("polynomial arithmetic and printing") {
  Polynomial t1 = t(2, 0), t2 = t(2, 1);
  Polynomial p = t1 * t2 - t2 * t2 * Integer(3);
  CHECK(p.to_string() == "t1*t2 - 3*t2^2");
  CHECK((t1 * t1 * Integer(2)).to_string() == "2*t1^2");
  CHECK((Polynomial(2) - t1 * t1).to_string() == "-t1^2");
  CHECK(Polynomial(2).to_string() == "0");
  CHECK((p - p).is_zero());
  CHECK(p.is_homogeneous());
  CHECK_FALSE((p + t1).is_homogeneous());
  CHECK((t1 + t2).pow(3) == (t1 + t2) * (t1 + t2) * (t1 + t2));
  CHECK(Polynomial::linear_form(iv({1, -2})).to_string() == "t1 - 2*t2");
  CHECK_THROWS_AS(t1 + t(3, 0), DimensionMismatch);
}

TEST_CASE("substitution is a ring map") {
  Polynomial t1 = t(2, 0), t2 = t(2, 1);
  std::vector<Polynomial> images{t1 + t2, t2 * Integer(2)};
  Polynomial a = t1 * t1 + t2, b = t1 * t2 * Integer(3) - t2;
  CHECK((a * b).substitute(images, 2) == a.substitute(images, 2) * b.substitute(images, 2));
  CHECK((a + b).substitute(images, 2) == a.substitute(images, 2) + b.substitute(images, 2));
  Polynomial u = t(1, 0);
  CHECK((t1 * t2).substitute({u, u * Integer(2)}, 1).to_string() == "2*t1^2");
}

TEST_CASE("character classes") {
  CharacterClass c(1);
  c.add(iv({2}), 1);
  c.add(iv({0}), 3);
  c.add(iv({1}), q("1/3"));
  CHECK(c.trivial() == 3);
  CHECK(c.multiplicity(iv({1})) == q("1/3"));
  CHECK_FALSE(c.is_bundle());
  CHECK(c.to_string() == "1/3*chi(1) + chi(2) + 3*1");
  CharacterClass d = c;
  d -= c;
  CHECK(d.is_zero());
  CHECK_THROWS_AS(c.add(iv({1, 1}), 1), DimensionMismatch);
}
