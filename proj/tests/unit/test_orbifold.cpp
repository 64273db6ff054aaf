#include "htoric/orbifold.hpp"
#include "htoric/sampling.hpp"
#include "support.hpp"

using namespace htoric;
using test::iv;
using test::q;
using test::qv;
using test::row;

namespace {

TorsionElement g(std::initializer_list<const char*> v) { return TorsionElement(qv(v)); }

CharacterClass chi(long long w, long long mult = 1) {
  CharacterClass c(1);
  c.add(iv({w}), mult);
  return c;
}

StackModel mu3_model() { return make_direct_model(row({0, 1, 2, 3}), {{3}}); }

}  // namespace

TEST_CASE("logarithmic trace") {
  CharacterClass t1 = log_trace(g({"1/3"}), chi(1));
  CHECK(t1.multiplicity(iv({1})) == q("1/3"));
  CHECK(log_trace(g({"1/3"}), chi(2)).multiplicity(iv({2})) == q("2/3"));
  CharacterClass triv(1);
  triv.add_trivial(2);
  CHECK(log_trace(g({"1/3"}), triv).is_zero());
  CHECK(log_trace(g({"1/3"}), chi(3)).is_zero());
}

TEST_CASE("obstruction classes") {
  StackModel mu3 = mu3_model();
  CHECK(obstruction(mu3, g({"1/3"}), g({"1/3"})) == chi(2));
  CHECK(obstruction(mu3, g({"2/3"}), g({"2/3"})) == chi(1));
  CHECK(obstruction(mu3, g({"1/3"}), g({"2/3"})).is_zero());
  for (const char* x : {"0", "1/3", "2/3"}) CHECK(obstruction(mu3, g({"0"}), g({x})).is_zero());

  StackModel lawrence = make_lawrence_model(row({1, 2}), iv({1}));
  CHECK(obstruction(lawrence, g({"1/2"}), g({"1/2"})).is_zero());
}

TEST_CASE("euler polynomials") {
  CHECK(euler_poly(CharacterClass(1)).to_string() == "1");
  CHECK(euler_poly(chi(2)).to_string() == "2*t1");
  CharacterClass c = chi(1);
  c += chi(2);
  CHECK(euler_poly(c).to_string() == "2*t1^2");
  CHECK(euler_poly(chi(-1, 2)).to_string() == "t1^2");
  CharacterClass with_trivial = chi(1);
  with_trivial.add_trivial(1);
  CHECK(euler_poly(with_trivial).is_zero());
  CHECK_THROWS_AS(euler_poly(chi(1, -1)), NotABundle);
  CHECK(bundle_rank(c) == 2);
}

TEST_CASE("mu3 orbifold table") {
  OrbifoldTable t = orbifold_table(mu3_model(), 4);
  REQUIRE(t.components.size() == 3);
  const std::size_t one = t.index_of(g({"0"})), w = t.index_of(g({"1/3"})), w2 = t.index_of(g({"2/3"}));
  CHECK(t.identity_index() == one);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(t.rings[i].relation_strings() == std::vector<std::string>{"3*t1"});
    CHECK(t.rings[i].piece(1).invariants().to_string() == "Z/3");
  }
  CHECK(t.components[w].age == 1);
  CHECK(t.components[w2].age == 1);
  CHECK(t.products.size() == 9);

  const ProductEntry* ww = t.product(w, w);
  REQUIRE(ww != nullptr);
  CHECK(ww->target == w2);
  CHECK(ww->obstruction == chi(2));
  CHECK(ww->obstruction_euler.to_string() == "2*t1");
  CHECK(ww->structure.to_string() == "2*t1");

  const ProductEntry* w2w2 = t.product(w2, w2);
  REQUIRE(w2w2 != nullptr);
  CHECK(w2w2->target == w);
  CHECK(w2w2->structure.to_string() == "t1");

  const ProductEntry* mixed = t.product(w, w2);
  REQUIRE(mixed != nullptr);
  CHECK(mixed->target == one);
  CHECK(mixed->obstruction.is_zero());
  CHECK(mixed->structure.to_string() == "2*t1^2");
  CHECK(same_class(t, star(t, t.generator(w), t.generator(w2)),
                   GradedClass{one, Polynomial::monomial(Monomial{{2}}, 2), 2}));
  // 2t^2 = -t^2 in Z[t]/(3t)
  CHECK(same_class(t, star(t, t.generator(w), t.generator(w2)),
                   GradedClass{one, Polynomial::monomial(Monomial{{2}}, -1), 2}));
  CHECK(check_star_laws(t).ok());
}

TEST_CASE("T*P(1,2) hypertoric table") {
  OrbifoldTable t = orbifold_table(make_hypertoric_model(row({1, 2}), iv({1})), 5);
  const std::size_t one = t.index_of(g({"0"})), h = t.index_of(g({"1/2"}));
  const ProductEntry* hh = t.product(h, h);
  REQUIRE(hh != nullptr);
  CHECK(hh->target == one);
  CHECK(hh->obstruction.is_zero());
  CHECK(hh->structure.to_string() == "-t1^2");
  CHECK(same_class(t, star(t, t.generator(h), t.generator(h)),
                   GradedClass{one, Polynomial::monomial(Monomial{{2}}, 1), 2}));
  LawsReport laws = check_star_laws(t);
  CHECK(laws.ok());
  CHECK(laws.triples_checked == 8);
}

TEST_CASE("trivial inertia table") {
  OrbifoldTable t = orbifold_table(make_lawrence_model(IntMatrix::identity(2), iv({1, 1})), 3);
  REQUIRE(t.components.size() == 1);
  REQUIRE(t.products.size() == 1);
  CHECK(t.product(0, 0)->structure.to_string() == "1");
  CHECK(same_class(t, star(t, t.generator(0), t.generator(0)), t.generator(0)));
}

TEST_CASE("star raises on degree overflow") {
  OrbifoldTable t = orbifold_table(mu3_model(), 2);
  const std::size_t w = t.index_of(g({"1/3"})), w2 = t.index_of(g({"2/3"}));
  GradedClass big{w, Polynomial::monomial(Monomial{{t.truncation}}, 1), t.truncation};
  CHECK_THROWS_AS(star(t, big, t.generator(w2)), DegreeOverflow);
}

TEST_CASE("obstruction properties on random generic instances") {
  for (std::uint64_t seed = 200; seed < 240; ++seed) {
    RandomInstance inst = random_generic_instance(seed);
    CAPTURE(inst.a);
    for (ModelKind kind : {ModelKind::Lawrence, ModelKind::Hypertoric}) {
      StackModel m = make_git_model(kind, inst.a, inst.theta);
      for (const auto& c : double_inertia(m)) {
        CharacterClass r = obstruction(m, c.g1, c.g2);
        CHECK(r.is_bundle());
        CHECK(r == obstruction(m, c.g2, c.g1));
        CHECK(r.trivial() == 0);
        if (c.g1.is_identity()) CHECK(r.is_zero());
      }
    }
  }
}

TEST_CASE("product laws, pullback and isomorphism on random generic instances") {
  for (std::uint64_t seed = 300; seed < 315; ++seed) {
    RandomInstance inst = random_generic_instance(seed);
    CAPTURE(inst.a);
    CAPTURE(inst.theta);
    LawsReport laws = check_star_laws(orbifold_table(make_hypertoric_model(inst.a, inst.theta), 4));
    CHECK(laws.ok());
    CHECK(verify_obstruction_pullback(inst.a, inst.theta).pass);
    OrbifoldIsoReport iso = verify_orbifold_iso(inst.a, inst.theta, 4);
    CHECK(iso.pass);
  }
}

TEST_CASE("pullback and isomorphism on named instances") {
  PullbackReport pb = verify_obstruction_pullback(row({1, 2}), iv({1}));
  CHECK(pb.pass);
  CHECK(pb.components_checked == 4);
  CHECK(verify_obstruction_pullback(IntMatrix::identity(2), iv({1, 1})).pass);

  OrbifoldIsoReport a = verify_orbifold_iso(row({1, 2}), iv({1}), 5);
  CHECK(a.pass);
  CHECK(a.components == 2);
  OrbifoldIsoReport b = verify_orbifold_iso(row({1}), iv({1}), 5);
  CHECK(b.pass);
  CHECK(b.components == 1);
  CHECK(verify_orbifold_iso(row({1, 1}), iv({1}), 4).pass);
}
