#include <algorithm>

#include "htoric/chow.hpp"
#include "htoric/orbifold.hpp"
#include "htoric/sampling.hpp"
#include "support.hpp"

using namespace htoric;
using test::iv;
using test::qv;
using test::row;

namespace {

Polynomial t1() { return Polynomial::variable(1, 0); }

GradedRingPresentation ring1(std::vector<Polynomial> rels, unsigned trunc = 6) {
  return GradedRingPresentation(1, std::move(rels), trunc);
}

GroupInvariants z() { return {1, {}}; }
GroupInvariants zmod(long long n) { return {0, iv({n})}; }

}  // namespace

TEST_CASE("presentations of the basic examples") {
  StackModel mu3 = make_direct_model(row({0, 1, 2, 3}), {{3}});
  GradedRingPresentation p = presentation(mu3, 4);
  CHECK(p.relation_strings() == std::vector<std::string>{"3*t1"});
  CHECK(p.piece(0).invariants() == z());
  for (unsigned k = 1; k <= 4; ++k) CHECK(p.piece(k).invariants() == zmod(3));

  GradedRingPresentation p2 = presentation(make_lawrence_model(row({1, 1, 1}), iv({1})), 4);
  CHECK(p2.relation_strings() == std::vector<std::string>{"t1^3"});
  for (unsigned k = 0; k <= 2; ++k) CHECK(p2.piece(k).invariants() == z());
  CHECK(p2.piece(3).invariants().is_zero());

  GradedRingPresentation p12 = presentation(make_lawrence_model(row({1, 2}), iv({1})), 4);
  CHECK(p12.relation_strings() == std::vector<std::string>{"2*t1^2"});
  CHECK(p12.piece(2).invariants() == zmod(2));
  CHECK(p12.piece(2).invariants().to_string() == "Z/2");

  CHECK(default_truncation(mu3) == 8);
  CHECK(presentation(mu3).truncation() == 8);
}

TEST_CASE("graded groups") {
  GradedRingPresentation p = ring1({t1() * Integer(3)}, 3);
  CHECK(graded_group(p, 1).invariants().to_string() == "Z/3");
  CHECK(graded_group(p, 0).invariants().to_string() == "Z");
  CHECK_THROWS_AS(graded_group(p, 4), DegreeOverflow);

  // Z[t1,t2]/(t1 t2): degree k >= 1 is free on t1^k, t2^k
  Polynomial a = Polynomial::variable(2, 0), b = Polynomial::variable(2, 1);
  GradedRingPresentation q(2, {a * b}, 4);
  for (unsigned k = 1; k <= 4; ++k) CHECK(q.piece(k).invariants() == GroupInvariants{2, {}});
  GradedRingPresentation r(2, {a * Integer(2), b * Integer(6)}, 3);
  CHECK(r.piece(1).invariants().to_string() == "Z/2 + Z/6");
  CHECK(r.piece(2).invariants().to_string() == "Z/2 + Z/2 + Z/6");
}

TEST_CASE("graded invariants do not depend on relation order") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Polynomial> rels;
    for (int i = 0; i < 3; ++i) {
      IntMatrix w = random_matrix(rng(), 1, 2, 4);
      Polynomial p = Polynomial::linear_form(w.row(0));
      if (rng() % 2) p = p * Polynomial::linear_form(random_matrix(rng(), 1, 2, 4).row(0));
      if (!p.is_zero()) rels.push_back(p);
    }
    std::vector<Polynomial> rev(rels.rbegin(), rels.rend());
    GradedRingPresentation a(2, rels, 3), b(2, rev, 3);
    for (unsigned k = 0; k <= 3; ++k) CHECK(a.piece(k).invariants() == b.piece(k).invariants());
  }
}

TEST_CASE("reduce") {
  GradedRingPresentation p = ring1({t1() * Integer(3)});
  CHECK(reduce(p, t1() * Integer(4)) == reduce(p, t1()));
  CHECK(reduce(p, t1() * Integer(3)) == iv({0}));
  CHECK(reduce(p, Polynomial(1), 2) == iv({0}));
  GradedRingPresentation q = ring1({t1() * t1() * Integer(2)});
  CHECK(reduce(q, t1() * t1() * Integer(-1)) == reduce(q, t1() * t1()));
  CHECK_THROWS_AS(reduce(q, t1() * t1() + t1()), InvalidInput);

  SUBCASE("additive and idempotent") {
    Polynomial a = Polynomial::variable(2, 0), b = Polynomial::variable(2, 1);
    GradedRingPresentation r(2, {a * a * Integer(4) - a * b * Integer(2), b * Integer(6) + a * Integer(3)}, 4);
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
      unsigned k = 1 + rng() % 4;
      auto rand_poly = [&] {
        Polynomial p(2);
        for (const auto& m : monomials_of_degree(2, k)) p.add_term(m, Integer(static_cast<long long>(rng() % 21) - 10));
        return p;
      };
      Polynomial x = rand_poly(), y = rand_poly();
      const GradedPiece& pc = r.piece(k);
      IntVector cx = reduce(r, x, k), cy = reduce(r, y, k), cxy = reduce(r, x + y, k);
      // coordinates of x + y agree with the sum, modulo the torsion orders
      IntVector sum(cx.size());
      for (std::size_t i = 0; i < cx.size(); ++i) sum[i] = cx[i] + cy[i];
      CHECK(pc.coordinates(pc.coefficients(x + y)) == cxy);
      CHECK(pc.is_zero_class(x + y - x - y));
      // adding a relation multiple does not move the canonical coordinates
      Polynomial shifted = x;
      if (k >= 1) shifted += (a * Integer(3) + b * Integer(6)) * Polynomial::monomial(monomials_of_degree(2, k - 1)[0]);
      CHECK(reduce(r, shifted, k) == cx);
      std::size_t tors = pc.invariants().torsion.size();
      for (std::size_t i = 0; i < cx.size(); ++i) {
        if (i < tors) CHECK(mod_floor(sum[i], pc.invariants().torsion[i]) == cxy[i]);
        else CHECK(sum[i] == cxy[i]);
      }
    }
  }
}

TEST_CASE("ring map isomorphism checks") {
  GradedRingPresentation z3 = ring1({t1() * Integer(3)}, 5);
  GradedRingPresentation z2 = ring1({t1() * t1() * Integer(2)}, 5);
  GradedRingPresentation zt = ring1({t1()}, 5);  // Z in degree 0 only

  CHECK(ring_map_is_iso(z2, z2, {t1()}, 5).iso);
  CHECK(ring_map_is_iso(z3, z3, {t1() * Integer(2)}, 5).iso);

  IsoReport zero = ring_map_is_iso(z3, zt, {Polynomial(1)}, 5);
  CHECK_FALSE(zero.iso);
  CHECK_FALSE(zero.injective);
  CHECK(zero.well_defined);
  REQUIRE(zero.failing_degree.has_value());
  CHECK(*zero.failing_degree == 1);

  IsoReport not_onto = ring_map_is_iso(z2, z2, {t1() * Integer(3)}, 5);
  CHECK_FALSE(not_onto.iso);
  CHECK(*not_onto.failing_degree == 1);
  CHECK_FALSE(not_onto.surjective);

  IsoReport bad = ring_map_is_iso(z3, z2, {t1()}, 5);
  CHECK_FALSE(bad.well_defined);

  CHECK_THROWS_AS(ring_map_is_iso(z3, z3, {t1() * t1()}, 2), InvalidInput);

  SUBCASE("composition of isomorphisms") {
    Polynomial a = Polynomial::variable(2, 0), b = Polynomial::variable(2, 1);
    // relations invariant under swapping and negating the variables
    GradedRingPresentation r(2, {a * b * Integer(2), a * Integer(3) + b * Integer(3)}, 4);
    std::vector<Polynomial> f{b, a}, g{a * Integer(-1), b * Integer(-1)};
    REQUIRE(ring_map_is_iso(r, r, f, 4).iso);
    REQUIRE(ring_map_is_iso(r, r, g, 4).iso);
    std::vector<Polynomial> gf{f[0].substitute(g, 2), f[1].substitute(g, 2)};
    CHECK(ring_map_is_iso(r, r, gf, 4).iso);
  }
}

TEST_CASE("gysin pushforward") {
  SUBCASE("identity embedding") {
    GradedRingPresentation p = ring1({t1() * Integer(3)});
    GysinEmbedding e{&p, &p, 0, Polynomial::constant(1, 1), 0};
    CHECK_NOTHROW(check_gysin_well_defined(e));
    GradedClass c = gysin_push(GradedClass{0, t1() * Integer(2), 1}, e);
    CHECK(c.poly == t1() * Integer(2));
    CHECK(c.degree == 1);
  }
  SUBCASE("mu3 sector into the identity sector") {
    StackModel m = make_direct_model(row({0, 1, 2, 3}), {{3}});
    TorsionElement w(qv({"1/3"}));
    Polynomial e = euler_poly(normal_class(m, w, w.inverse()));
    CHECK(e.to_string() == "2*t1^2");
    GradedRingPresentation amb = presentation(m, 4);
    GradedRingPresentation sub = presentation(inertia_component(m, w).model, 4);
    GysinEmbedding emb{&sub, &amb, 0, e, 2};
    CHECK_NOTHROW(check_gysin_well_defined(emb));
    GradedClass pushed = gysin_push(GradedClass{1, Polynomial::constant(1, 1), 0}, emb);
    CHECK(pushed.degree == 2);
    CHECK(pushed.poly.to_string() == "2*t1^2");
  }
  SUBCASE("half sector of the Lawrence T*P(1,2)") {
    StackModel m = make_lawrence_model(row({1, 2}), iv({1}));
    TorsionElement h(qv({"1/2"}));
    CHECK(euler_poly(normal_class(m, h, h)).to_string() == "-t1^2");
  }
  SUBCASE("ill-defined pushforward is rejected") {
    GradedRingPresentation sub = ring1({t1()}, 4);
    GradedRingPresentation amb = ring1({t1() * t1() * t1()}, 4);
    GysinEmbedding e{&sub, &amb, 0, Polynomial::constant(1, 1), 0};
    CHECK_THROWS_AS(check_gysin_well_defined(e), GysinUndefined);
  }
  SUBCASE("projection formula on random classes") {
    // push(restrict(alpha)) = alpha * e(N) as ambient classes
    StackModel m = make_direct_model(row({0, 1, 2, 3}), {{3}});
    TorsionElement w(qv({"1/3"}));
    GradedRingPresentation amb = presentation(m, 6);
    GradedRingPresentation sub = presentation(inertia_component(m, w).model, 6);
    Polynomial e = euler_poly(normal_class(m, w, w.inverse()));
    GysinEmbedding emb{&sub, &amb, 0, e, 2};
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
      unsigned k = rng() % 4;
      Polynomial alpha = Polynomial::monomial(monomials_of_degree(1, k)[0], Integer(static_cast<long long>(rng() % 50) - 25));
      GradedClass pushed = gysin_push(GradedClass{1, alpha, k}, emb);
      CHECK(reduce(amb, pushed) == reduce(amb, alpha * e, k + 2));
    }
  }
}
