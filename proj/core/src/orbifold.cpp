#include "htoric/orbifold.hpp"

#include <algorithm>

namespace htoric {

std::string describe_element(const TorsionElement& g) {
  std::string out = "(";
  const auto parts = g.to_strings();
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
  return out + ")";
}

CharacterClass log_trace(const TorsionElement& g, const CharacterClass& v) {
  CharacterClass out(v.rank());
  for (const auto& [w, mult] : v.terms()) out.add(w, mult * frac(g.pairing(w)));
  return out;
}

namespace {

// Part of V on which both elements act trivially.
CharacterClass invariant_part(const TorsionElement& g1, const TorsionElement& g2, const CharacterClass& v) {
  CharacterClass out(v.rank());
  for (const auto& [w, mult] : v.terms())
    if (g1.fixes(w) && g2.fixes(w)) out.add(w, mult);
  out.add_trivial(v.trivial());
  return out;
}

Rational ceil_of(const Rational& r) { return -floor(-r); }

}  // namespace

CharacterClass obstruction(const StackModel& model, const TorsionElement& g1, const TorsionElement& g2) {
  const CharacterClass& t = model.tangent_class;
  CharacterClass r = log_trace(g1, t);
  r += log_trace(g2, t);
  r += log_trace((g1 + g2).inverse(), t);
  r -= t;
  r += invariant_part(g1, g2, t);
  if (!r.is_bundle())
    throw NotABundle("obstruction class " + r.to_string() + " for " + describe_element(g1) + "," +
                     describe_element(g2) + " is not a bundle");
  return r;
}

CharacterClass normal_class(const StackModel& model, const TorsionElement& g1, const TorsionElement& g2) {
  const TorsionElement prod = g1 + g2;
  CharacterClass out(model.d());
  for (const auto& [w, mult] : model.tangent_class.terms())
    if (prod.fixes(w) && !(g1.fixes(w) && g2.fixes(w))) out.add(w, mult);
  if (!out.is_bundle()) throw NotABundle("normal class " + out.to_string() + " is not a bundle");
  return out;
}

Polynomial euler_poly(const CharacterClass& bundle) {
  if (!bundle.is_bundle()) throw NotABundle("euler_poly: " + bundle.to_string() + " is not a bundle");
  Polynomial p = Polynomial::constant(bundle.rank(), 1);
  if (bundle.trivial() > 0) return Polynomial(bundle.rank());
  for (const auto& [w, mult] : bundle.terms())
    p = p * Polynomial::linear_form(w).pow(static_cast<unsigned>(numerator_of(mult)));
  return p;
}

unsigned bundle_rank(const CharacterClass& bundle) {
  if (!bundle.is_bundle()) throw NotABundle("bundle_rank: " + bundle.to_string() + " is not a bundle");
  Integer total = bundle.trivial();
  for (const auto& [w, mult] : bundle.terms()) total += numerator_of(mult);
  return static_cast<unsigned>(total);
}

// ---------------------------------------------------------------------------

std::size_t OrbifoldTable::index_of(const TorsionElement& g) const {
  for (std::size_t i = 0; i < components.size(); ++i)
    if (components[i].g == g) return i;
  return npos;
}

std::size_t OrbifoldTable::identity_index() const { return index_of(TorsionElement::identity(rank)); }

const ProductEntry* OrbifoldTable::product(std::size_t i, std::size_t j) const {
  auto it = products.find({i, j});
  return it == products.end() ? nullptr : &it->second;
}

GradedClass OrbifoldTable::generator(std::size_t i) const {
  return GradedClass{i, Polynomial::constant(rank, 1), 0};
}

OrbifoldTable orbifold_table(const StackModel& model, unsigned degree) {
  OrbifoldTable t;
  t.kind = model.kind;
  t.rank = model.d();
  t.requested_degree = degree;
  t.components = inertia_components(model);
  const std::size_t c = t.components.size();

  unsigned needed = degree;
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      const auto& ci = t.components[i];
      const auto& cj = t.components[j];
      IndexSet common;
      std::set_intersection(ci.fixed_columns.begin(), ci.fixed_columns.end(), cj.fixed_columns.begin(),
                            cj.fixed_columns.end(), std::back_inserter(common));
      if (!fixed_locus_nonempty(model, common)) continue;
      ProductEntry e;
      e.left = i;
      e.right = j;
      e.target = t.index_of(ci.g + cj.g);
      if (e.target == OrbifoldTable::npos)
        throw Error("product of " + describe_element(ci.g) + " and " + describe_element(cj.g) +
                    " lands outside the inertia components");
      e.common_fixed = std::move(common);
      e.obstruction = obstruction(model, ci.g, cj.g);
      e.obstruction_euler = euler_poly(e.obstruction);
      e.normal = normal_class(model, ci.g, cj.g);
      e.normal_euler = euler_poly(e.normal);
      e.structure = e.obstruction_euler * e.normal_euler;
      e.degree = bundle_rank(e.obstruction) + bundle_rank(e.normal);
      needed = std::max(needed, e.degree);
      t.products.emplace(std::make_pair(i, j), std::move(e));
    }

  // Triple products have degree age_a + age_b + age_c - age_abc.
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = 0; b < c; ++b)
      for (std::size_t k = 0; k < c; ++k) {
        std::size_t abc = t.index_of(t.components[a].g + t.components[b].g + t.components[k].g);
        if (abc == OrbifoldTable::npos) continue;
        Rational deg = t.components[a].age + t.components[b].age + t.components[k].age - t.components[abc].age;
        if (deg > 0) needed = std::max(needed, static_cast<unsigned>(numerator_of(ceil_of(deg))));
      }
  t.truncation = needed;

  for (const auto& comp : t.components) t.rings.push_back(presentation(comp.model, t.truncation));

  std::map<IndexSet, GradedRingPresentation> double_rings;
  for (auto& [key, e] : t.products) {
    auto it = double_rings.find(e.common_fixed);
    if (it == double_rings.end())
      it = double_rings.emplace(e.common_fixed, presentation(restrict_to_columns(model, e.common_fixed), t.truncation))
               .first;
    GysinEmbedding emb{&it->second, &t.rings[e.target], e.target, e.normal_euler, bundle_rank(e.normal)};
    check_gysin_well_defined(emb);
    e.coordinates = reduce(t.rings[e.target], e.structure, e.degree);
  }
  return t;
}

GradedClass star(const OrbifoldTable& table, const GradedClass& a, const GradedClass& b) {
  const std::size_t npos = OrbifoldTable::npos;
  auto zero_on = [&](std::size_t comp, unsigned deg) { return GradedClass{comp, Polynomial(table.rank), deg}; };
  if (a.component == npos || b.component == npos) return zero_on(npos, a.degree + b.degree);
  if (a.component >= table.components.size() || b.component >= table.components.size())
    throw InvalidInput("star: component index out of range");

  const ProductEntry* e = table.product(a.component, b.component);
  if (e == nullptr) {
    std::size_t target = table.index_of(table.components[a.component].g + table.components[b.component].g);
    return zero_on(target, a.degree + b.degree);
  }
  unsigned deg = a.degree + b.degree + e->degree;
  if (deg > table.rings[e->target].truncation())
    throw DegreeOverflow("star: product degree " + std::to_string(deg) + " exceeds truncation " +
                         std::to_string(table.rings[e->target].truncation()));
  return GradedClass{e->target, a.poly * b.poly * e->structure, deg};
}

bool is_zero_class(const OrbifoldTable& table, const GradedClass& c) {
  if (c.component == OrbifoldTable::npos || c.poly.is_zero()) return true;
  return table.rings[c.component].piece(c.degree).is_zero_class(c.poly);
}

bool same_class(const OrbifoldTable& table, const GradedClass& a, const GradedClass& b) {
  bool za = is_zero_class(table, a), zb = is_zero_class(table, b);
  if (za || zb) return za && zb;
  if (a.component != b.component || a.degree != b.degree) return false;
  const auto& ring = table.rings[a.component];
  return reduce(ring, a) == reduce(ring, b);
}

LawsReport check_star_laws(const OrbifoldTable& table) {
  LawsReport r;
  const std::size_t c = table.components.size();
  auto name = [&](std::size_t i) { return describe_element(table.components[i].g); };

  const std::size_t one = table.identity_index();
  if (one == OrbifoldTable::npos) {
    r.unit = false;
    r.failures.push_back("identity component missing");
  }
  for (std::size_t i = 0; i < c; ++i) {
    GradedClass li = table.generator(i);
    if (one != OrbifoldTable::npos) {
      GradedClass lone = table.generator(one);
      if (!same_class(table, star(table, lone, li), li) || !same_class(table, star(table, li, lone), li)) {
        r.unit = false;
        r.failures.push_back("unit law fails on " + name(i));
      }
    }
    for (std::size_t j = 0; j < c; ++j) {
      GradedClass lj = table.generator(j);
      GradedClass ij = star(table, li, lj);
      ++r.pairs_checked;
      if (!same_class(table, ij, star(table, lj, li))) {
        r.commutative = false;
        r.failures.push_back("commutativity fails on " + name(i) + "," + name(j));
      }
      if (!is_zero_class(table, ij)) {
        Rational lhs = Rational(ij.degree) + table.components[ij.component].age;
        Rational rhs = table.components[i].age + table.components[j].age;
        if (lhs != rhs) {
          r.age_graded = false;
          r.failures.push_back("age grading fails on " + name(i) + "," + name(j));
        }
      }
      for (std::size_t k = 0; k < c; ++k) {
        GradedClass lk = table.generator(k);
        ++r.triples_checked;
        GradedClass left = star(table, ij, lk);
        GradedClass right = star(table, li, star(table, lj, lk));
        if (!same_class(table, left, right)) {
          r.associative = false;
          r.failures.push_back("associativity fails on " + name(i) + "," + name(j) + "," + name(k));
        }
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------

PullbackReport verify_obstruction_pullback(const IntMatrix& a, const IntVector& theta) {
  PullbackReport report;
  StackModel x = make_lawrence_model(a, theta);
  StackModel y = make_hypertoric_model(a, theta);
  auto dx = double_inertia(x);
  auto dy = double_inertia(y);
  auto fail = [&](std::string msg) {
    report.pass = false;
    report.failures.push_back(std::move(msg));
  };
  if (dx.size() != dy.size()) fail("double inertia component counts differ");

  for (const auto& comp : dy) {
    ++report.components_checked;
    const std::string label = describe_element(comp.g1) + "," + describe_element(comp.g2);
    bool in_x = std::any_of(dx.begin(), dx.end(),
                            [&](const DoubleInertiaComponent& o) { return o.g1 == comp.g1 && o.g2 == comp.g2; });
    if (!in_x) {
      fail("component " + label + " of the hypertoric double inertia has no Lawrence counterpart");
      continue;
    }
    try {
      CharacterClass ry = obstruction(y, comp.g1, comp.g2);
      CharacterClass rx = obstruction(x, comp.g1, comp.g2);
      if (!(ry == rx)) fail("obstruction mismatch on " + label + ": " + ry.to_string() + " vs " + rx.to_string());
    } catch (const NotABundle& e) {
      fail(e.what());
    }
  }
  return report;
}

OrbifoldIsoReport verify_orbifold_iso(const IntMatrix& a, const IntVector& theta, unsigned degree) {
  OrbifoldIsoReport report;
  auto fail = [&](std::string msg) {
    report.pass = false;
    report.failures.push_back(std::move(msg));
  };
  OrbifoldTable tx = orbifold_table(make_lawrence_model(a, theta), degree);
  OrbifoldTable ty = orbifold_table(make_hypertoric_model(a, theta), degree);
  report.components = ty.components.size();
  report.products = ty.products.size();
  if (tx.components.size() != ty.components.size()) {
    fail("inertia component counts differ");
    return report;
  }

  for (std::size_t i = 0; i < tx.components.size(); ++i) {
    const auto& cx = tx.components[i];
    const auto& cy = ty.components[i];
    const std::string label = describe_element(cy.g);
    if (!(cx.g == cy.g) || cx.fixed_columns != cy.fixed_columns) {
      fail("component " + label + " does not match");
      continue;
    }
    std::vector<Polynomial> id;
    for (std::size_t v = 0; v < tx.rank; ++v) id.push_back(Polynomial::variable(tx.rank, v));
    IsoReport iso = ring_map_is_iso(tx.rings[i], ty.rings[i], id, degree);
    if (!iso.iso) fail("component " + label + " ring: " + iso.reason);
    if (cx.age != cy.age)
      fail("component " + label + " age " + to_string(cx.age) + " vs " + to_string(cy.age));
  }

  for (const auto& [key, ey] : ty.products) {
    const std::string label = describe_element(ty.components[key.first].g) + "*" +
                              describe_element(ty.components[key.second].g);
    const ProductEntry* ex = tx.product(key.first, key.second);
    if (ex == nullptr) {
      fail("product " + label + " missing on the Lawrence side");
      continue;
    }
    if (ex->target != ey.target || ex->degree != ey.degree) {
      fail("product " + label + " target or degree differs");
      continue;
    }
    if (reduce(ty.rings[ey.target], ex->structure, ex->degree) != ey.coordinates)
      fail("product " + label + " structure constant " + ex->structure.to_string() + " vs " +
           ey.structure.to_string());
  }
  for (const auto& [key, ex] : tx.products)
    if (ty.product(key.first, key.second) == nullptr) fail("product missing on the hypertoric side");
  return report;
}

}  // namespace htoric
