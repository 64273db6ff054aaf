#include "htoric/chow.hpp"

#include <mutex>

namespace htoric {

std::string GroupInvariants::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  if (free_rank > 0) out = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  for (const auto& t : torsion) out += (out.empty() ? "" : " + ") + std::string("Z/") + t.str();
  return out;
}

// ---------------------------------------------------------------------------

GradedPiece::GradedPiece(std::size_t num_vars, unsigned degree, const std::vector<Polynomial>& relations)
    : num_vars_(num_vars), degree_(degree), basis_(monomials_of_degree(num_vars, degree)) {
  for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);

  std::vector<IntVector> gens;
  for (const auto& r : relations) {
    unsigned e = r.degree();
    if (r.is_zero() || e > degree) continue;
    for (const auto& m : monomials_of_degree(num_vars, degree - e))
      gens.push_back(coefficients(r * Polynomial::monomial(m)));
  }
  relations_ = IntMatrix::from_columns(basis_.size(), gens);
  SnfResult s = snf(relations_);
  u_ = std::move(s.U);
  factors_ = s.diagonal();
  rank_ = s.rank();
}

GroupInvariants GradedPiece::invariants() const {
  GroupInvariants g;
  g.free_rank = basis_.size() - rank_;
  for (std::size_t i = 0; i < rank_; ++i)
    if (factors_[i] > 1) g.torsion.push_back(factors_[i]);
  return g;
}

IntVector GradedPiece::coefficients(const Polynomial& p) const {
  if (p.num_vars() != num_vars_) throw DimensionMismatch("polynomial variable count mismatch");
  IntVector x(basis_.size(), Integer(0));
  for (const auto& [m, c] : p.terms()) {
    auto it = index_.find(m);
    if (it == index_.end())
      throw InvalidInput("polynomial " + p.to_string() + " is not homogeneous of degree " + std::to_string(degree_));
    x[it->second] = c;
  }
  return x;
}

IntVector GradedPiece::coordinates(const IntVector& x) const {
  IntVector y = u_.apply(std::span<const Integer>(x));
  IntVector out;
  for (std::size_t i = 0; i < rank_; ++i)
    if (factors_[i] > 1) out.push_back(mod_floor(y[i], factors_[i]));
  for (std::size_t i = rank_; i < y.size(); ++i) out.push_back(y[i]);
  return out;
}

bool GradedPiece::contains(const IntVector& x) const {
  IntVector y = u_.apply(std::span<const Integer>(x));
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < rank_) {
      if (y[i] % factors_[i] != 0) return false;
    } else if (y[i] != 0) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

GradedRingPresentation::GradedRingPresentation(std::size_t num_vars, std::vector<Polynomial> relations,
                                               unsigned truncation)
    : num_vars_(num_vars), relations_(std::move(relations)), truncation_(truncation),
      cache_(std::make_shared<Cache>()) {
  for (const auto& r : relations_) {
    if (r.num_vars() != num_vars_) throw DimensionMismatch("relation variable count mismatch");
    if (!r.is_homogeneous()) throw InvalidInput("relation " + r.to_string() + " is not homogeneous");
  }
}

GradedRingPresentation GradedRingPresentation::with_truncation(unsigned d) const {
  return GradedRingPresentation(num_vars_, relations_, d);
}

const GradedPiece& GradedRingPresentation::piece(unsigned k) const {
  if (k > truncation_)
    throw DegreeOverflow("degree " + std::to_string(k) + " exceeds truncation " + std::to_string(truncation_));
  {
    std::shared_lock lock(cache_->mutex);
    auto it = cache_->pieces.find(k);
    if (it != cache_->pieces.end()) return *it->second;
  }
  auto computed = std::make_unique<GradedPiece>(num_vars_, k, relations_);
  std::unique_lock lock(cache_->mutex);
  auto [it, inserted] = cache_->pieces.try_emplace(k, std::move(computed));
  return *it->second;
}

std::vector<std::string> GradedRingPresentation::relation_strings() const {
  std::vector<std::string> out;
  for (const auto& r : relations_) out.push_back(r.to_string());
  return out;
}

// ---------------------------------------------------------------------------

unsigned default_truncation(const StackModel& model) { return static_cast<unsigned>(2 * model.num_coords()); }

GradedRingPresentation presentation(const StackModel& model, unsigned truncation) {
  const auto& coords = model.arrangement.ambient_coords;
  std::vector<Polynomial> rels;
  for (const auto& s : model.arrangement.unstable_minimal) {
    Polynomial r = Polynomial::constant(model.d(), 1);
    for (std::size_t c : s) r = r * Polynomial::linear_form(coords[c].character);
    if (!r.is_zero()) rels.push_back(std::move(r));
  }
  return GradedRingPresentation(model.d(), std::move(rels), truncation);
}

GradedRingPresentation presentation(const StackModel& model) {
  return presentation(model, default_truncation(model));
}

const GradedPiece& graded_group(const GradedRingPresentation& pres, unsigned k) { return pres.piece(k); }

IntVector reduce(const GradedRingPresentation& pres, const Polynomial& p, unsigned degree) {
  if (!p.is_homogeneous()) throw InvalidInput("reduce: " + p.to_string() + " is not homogeneous");
  if (!p.is_zero() && p.degree() != degree)
    throw InvalidInput("reduce: " + p.to_string() + " does not have degree " + std::to_string(degree));
  return pres.piece(degree).coordinates(p);
}

IntVector reduce(const GradedRingPresentation& pres, const Polynomial& p) { return reduce(pres, p, p.degree()); }

IntVector reduce(const GradedRingPresentation& pres, const GradedClass& c) { return reduce(pres, c.poly, c.degree); }

// ---------------------------------------------------------------------------

IsoReport ring_map_is_iso(const GradedRingPresentation& src, const GradedRingPresentation& dst,
                          const std::vector<Polynomial>& var_images, unsigned max_degree) {
  if (var_images.size() != src.num_vars()) throw DimensionMismatch("ring map: one image per source variable");
  for (const auto& img : var_images) {
    if (img.num_vars() != dst.num_vars()) throw DimensionMismatch("ring map: image variable count");
    if (!img.is_homogeneous() || (!img.is_zero() && img.degree() != 1))
      throw InvalidInput("ring map: image " + img.to_string() + " is not homogeneous of degree 1");
  }
  IsoReport report;
  auto fail = [&](unsigned k, std::string why) {
    report.iso = false;
    report.failing_degree = k;
    report.reason = std::move(why);
  };

  for (unsigned k = 0; k <= max_degree; ++k) {
    const GradedPiece& ps = src.piece(k);
    const GradedPiece& pd = dst.piece(k);
    const std::size_t ns = ps.basis().size(), nd = pd.basis().size();

    std::vector<IntVector> phi_cols;
    for (const auto& m : ps.basis())
      phi_cols.push_back(pd.coefficients(Polynomial::monomial(m).substitute(var_images, dst.num_vars())));
    IntMatrix phi = IntMatrix::from_columns(nd, phi_cols);

    const IntMatrix& rs = ps.relation_matrix();
    for (std::size_t c = 0; c < rs.cols(); ++c) {
      if (!pd.contains(phi.apply(std::span<const Integer>(rs.column(c))))) {
        report.well_defined = false;
        fail(k, "map does not send relations to relations in degree " + std::to_string(k));
        return report;
      }
    }

    // B = [phi | R_dst]; image of B is everything iff surjective.
    const IntMatrix& rd = pd.relation_matrix();
    IntMatrix b(nd, ns + rd.cols());
    for (std::size_t r = 0; r < nd; ++r) {
      for (std::size_t c = 0; c < ns; ++c) b(r, c) = phi(r, c);
      for (std::size_t c = 0; c < rd.cols(); ++c) b(r, ns + c) = rd(r, c);
    }
    SnfResult s = snf(b);
    const std::size_t rank = s.rank();
    IntVector diag = s.diagonal();
    bool surjective = rank == nd;
    for (std::size_t i = 0; i < rank && surjective; ++i) surjective = diag[i] == 1;

    // kernel of B projected to the source block: classes mapping to zero
    bool injective = true;
    for (std::size_t j = rank; j < b.cols() && injective; ++j) {
      IntVector x(ns);
      for (std::size_t r = 0; r < ns; ++r) x[r] = s.V(r, j);
      injective = ps.contains(x);
    }
    if (!surjective) report.surjective = false;
    if (!injective) report.injective = false;
    if (!surjective || !injective) {
      std::string what = !injective && !surjective ? "neither injective nor surjective"
                         : !injective             ? "not injective"
                                                  : "not surjective";
      fail(k, what + " in degree " + std::to_string(k));
      return report;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

void check_gysin_well_defined(const GysinEmbedding& e) {
  if (e.sub->num_vars() != e.ambient->num_vars()) throw DimensionMismatch("gysin: variable count mismatch");
  for (const auto& r : e.sub->relations()) {
    Polynomial p = r * e.normal_euler;
    if (p.is_zero() || p.degree() > e.ambient->truncation()) continue;
    if (!e.ambient->piece(p.degree()).is_zero_class(p))
      throw GysinUndefined("gysin pushforward not well defined: relation " + r.to_string() + " times e(N) = " +
                           e.normal_euler.to_string() + " is nonzero in the ambient ring");
  }
}

GradedClass gysin_push(const GradedClass& c, const GysinEmbedding& e) {
  Polynomial p = c.poly * e.normal_euler;
  unsigned deg = c.degree + e.codimension;
  if (deg > e.ambient->truncation())
    throw DegreeOverflow("gysin: degree " + std::to_string(deg) + " exceeds truncation");
  return GradedClass{e.ambient_component, std::move(p), deg};
}

}  // namespace htoric
