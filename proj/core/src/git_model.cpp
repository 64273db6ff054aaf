#include "htoric/git_model.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace htoric {

std::string format_index_set(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
  return out + "}";
}

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::Lawrence: return "lawrence";
    case ModelKind::Hypertoric: return "hypertoric";
    case ModelKind::DirectToric: return "direct";
  }
  return "unknown";
}

CoordSet SigmaSet::coordinates(std::size_t n) const {
  CoordSet out;
  for (std::size_t i = 0; i < basis.size(); ++i)
    out.push_back(tags[i] == Tag::X ? basis[i] : n + basis[i]);
  std::sort(out.begin(), out.end());
  return out;
}

std::string GenericReport::describe() const {
  if (generic) return "generic";
  std::string out = "non-generic: ";
  for (std::size_t i = 0; i < violations.size(); ++i) {
    const auto& v = violations[i];
    out += (i ? "; " : "") + std::string("basis ") + format_index_set(v.basis) + ", lambda_" +
           std::to_string(v.column() + 1) + " = 0";
  }
  return out;
}

CoordSet StackModel::coordinates_of_columns(const IndexSet& cols) const {
  CoordSet out;
  for (std::size_t j : cols) {
    out.push_back(j);
    if (doubled()) out.push_back(n() + j);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool StackModel::is_stable_support(const CoordSet& support) const {
  for (const auto& s : arrangement.unstable_minimal) {
    bool meets = std::any_of(s.begin(), s.end(), [&](std::size_t c) {
      return std::binary_search(support.begin(), support.end(), c);
    });
    if (!meets) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

// Calls f(subset) for every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(idx);
    if (k == 0) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool is_subset(const CoordSet& a, const CoordSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool size_then_lex(const CoordSet& a, const CoordSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

void require_basis(const WeightMatrix& a, const IndexSet& basis) {
  if (basis.size() != a.d()) throw InvalidInput("column set " + format_index_set(basis) + " has wrong size");
  for (std::size_t j : basis)
    if (j >= a.n()) throw InvalidInput("column index out of range in " + format_index_set(basis));
  if (a.matrix().select_columns(basis).determinant() == 0)
    throw InvalidInput("columns " + format_index_set(basis) + " are not a basis");
}

std::vector<AmbientCoordinate> ambient_coordinates(const WeightMatrix& base, const IndexSet& ids, bool doubled) {
  std::vector<AmbientCoordinate> out;
  for (std::size_t j = 0; j < base.n(); ++j)
    out.push_back({"x" + std::to_string(ids[j] + 1), base.column(j), j});
  if (doubled) {
    for (std::size_t j = 0; j < base.n(); ++j) {
      IntVector w = base.column(j);
      for (auto& x : w) x = -x;
      out.push_back({"y" + std::to_string(ids[j] + 1), w, j});
    }
  }
  return out;
}

IndexSet iota(std::size_t n) {
  IndexSet ids(n);
  for (std::size_t j = 0; j < n; ++j) ids[j] = j;
  return ids;
}

StackModel build_git(ModelKind kind, const IntMatrix& a, const IntVector& theta, IndexSet ids) {
  WeightMatrix wm(a);
  if (theta.size() != wm.d())
    throw DimensionMismatch("theta has length " + std::to_string(theta.size()) + ", expected " +
                            std::to_string(wm.d()));
  if (!wm.has_full_rank())
    throw RankDeficient("rank deficient: rank " + std::to_string(a.rank()) + " < d = " + std::to_string(wm.d()));
  if (is_trivial_character(theta)) throw InvalidInput("theta must be nonzero");
  GenericReport report = check_generic(wm, theta);
  if (!report.generic) throw NonGeneric(report.describe());

  StackModel m;
  m.kind = kind;
  m.base = wm;
  m.theta = theta;
  m.weights = lawrence_double(wm);
  m.columns = std::move(ids);
  for (const auto& basis : column_bases(wm)) m.arrangement.sigma_sets.push_back(sigma_set(wm, basis, theta));
  for (const auto& s : m.arrangement.sigma_sets) m.arrangement.stable_supports.push_back(s.coordinates(wm.n()));
  m.arrangement.stable_supports = minimal_elements(m.arrangement.stable_supports);
  m.arrangement.unstable_minimal = minimal_unstable_sets(m.arrangement.sigma_sets, wm.n());
  m.arrangement.ambient_coords = ambient_coordinates(wm, m.columns, true);

  m.tangent_class = CharacterClass(wm.d());
  for (const auto& c : m.arrangement.ambient_coords) m.tangent_class.add(c.character, 1);
  m.tangent_class.add_trivial(-Integer(wm.d()));  // Lie(T)
  if (kind == ModelKind::Hypertoric) {
    m.tangent_class.add_trivial(-Integer(wm.d()));  // normal directions of mu^{-1}(0)
    m.moment_rank = wm.d();
  }
  return m;
}

StackModel build_direct(const IntMatrix& weights, const std::vector<CoordSet>& unstable, IndexSet ids) {
  WeightMatrix wm(weights);
  if (!wm.has_full_rank())
    throw RankDeficient("rank deficient: rank " + std::to_string(weights.rank()) + " < d = " +
                        std::to_string(wm.d()));
  if (unstable.empty()) throw InvalidInput("direct model needs at least one unstable coordinate set");
  std::vector<CoordSet> sets;
  for (CoordSet s : unstable) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) throw InvalidInput("empty unstable set removes every point");
    if (s.back() >= wm.n()) throw InvalidInput("unstable coordinate index out of range");
    sets.push_back(std::move(s));
  }
  StackModel m;
  m.kind = ModelKind::DirectToric;
  m.base = wm;
  m.weights = wm;
  m.columns = std::move(ids);
  m.arrangement.unstable_minimal = minimal_elements(std::move(sets));
  m.arrangement.stable_supports = minimal_unstable_sets(m.arrangement.unstable_minimal);
  m.arrangement.ambient_coords = ambient_coordinates(wm, m.columns, false);
  m.tangent_class = CharacterClass(wm.d());
  for (const auto& c : m.arrangement.ambient_coords) m.tangent_class.add(c.character, 1);
  m.tangent_class.add_trivial(-Integer(wm.d()));
  return m;
}

}  // namespace

std::vector<IndexSet> column_bases(const WeightMatrix& a) {
  if (!a.has_full_rank())
    throw RankDeficient("rank deficient: rank " + std::to_string(a.matrix().rank()) + " < d = " +
                        std::to_string(a.d()));
  std::vector<IndexSet> out;
  for_each_subset(a.n(), a.d(), [&](const std::vector<std::size_t>& c) {
    if (a.matrix().select_columns(c).determinant() != 0) out.push_back(c);
  });
  return out;
}

RationalVector lambda_coeffs(const WeightMatrix& a, const IndexSet& basis, const IntVector& theta) {
  require_basis(a, basis);
  RationalVector rhs(theta.begin(), theta.end());
  auto x = solve_rational(a.matrix().select_columns(basis), rhs);
  return *x;  // nonsingular square system always solvable
}

SigmaSet sigma_set(const WeightMatrix& a, const IndexSet& basis, const IntVector& theta) {
  RationalVector lambda = lambda_coeffs(a, basis, theta);
  SigmaSet s;
  s.basis = basis;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (lambda[i] == 0)
      throw NonGeneric("non-generic: basis " + format_index_set(basis) + ", lambda_" +
                       std::to_string(basis[i] + 1) + " = 0");
    s.tags.push_back(lambda[i] > 0 ? Tag::X : Tag::Y);
  }
  return s;
}

GenericReport check_generic(const WeightMatrix& a, const IntVector& theta) {
  GenericReport report;
  for (const auto& basis : column_bases(a)) {
    RationalVector lambda = lambda_coeffs(a, basis, theta);
    for (std::size_t i = 0; i < lambda.size(); ++i)
      if (lambda[i] == 0) report.violations.push_back({basis, i});
  }
  report.generic = report.violations.empty();
  return report;
}

std::vector<CoordSet> minimal_elements(std::vector<CoordSet> sets) {
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  std::sort(sets.begin(), sets.end(), size_then_lex);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<CoordSet> out;
  for (auto& s : sets) {
    bool dominated = std::any_of(out.begin(), out.end(), [&](const CoordSet& m) { return is_subset(m, s); });
    if (!dominated) out.push_back(std::move(s));
  }
  return out;
}

std::vector<CoordSet> minimal_unstable_sets(const std::vector<CoordSet>& sigmas) {
  CoordSet universe;
  for (const auto& s : sigmas) universe.insert(universe.end(), s.begin(), s.end());
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  if (universe.size() > 24) throw InvalidInput("hitting-set search limited to 24 coordinates");

  // sigma sets as bitmasks over positions in universe
  std::vector<std::uint32_t> masks;
  for (const auto& s : sigmas) {
    std::uint32_t m = 0;
    for (std::size_t c : s) m |= 1u << (std::lower_bound(universe.begin(), universe.end(), c) - universe.begin());
    masks.push_back(m);
  }
  std::vector<std::uint32_t> found;
  std::vector<CoordSet> out;
  for (std::size_t k = 0; k <= universe.size(); ++k) {
    for_each_subset(universe.size(), k, [&](const std::vector<std::size_t>& idx) {
      std::uint32_t m = 0;
      for (std::size_t i : idx) m |= 1u << i;
      for (std::uint32_t f : found)
        if ((f & m) == f) return;
      for (std::uint32_t s : masks)
        if ((s & m) == 0) return;
      found.push_back(m);
      CoordSet set;
      for (std::size_t i : idx) set.push_back(universe[i]);
      out.push_back(std::move(set));
    });
  }
  return out;
}

std::vector<CoordSet> minimal_unstable_sets(const std::vector<SigmaSet>& sigmas, std::size_t n) {
  std::vector<CoordSet> sets;
  for (const auto& s : sigmas) sets.push_back(s.coordinates(n));
  return minimal_unstable_sets(sets);
}

WeightMatrix lawrence_double(const WeightMatrix& a) {
  IntMatrix m(a.d(), 2 * a.n());
  for (std::size_t i = 0; i < a.d(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) {
      m(i, j) = a.matrix()(i, j);
      m(i, a.n() + j) = -a.matrix()(i, j);
    }
  return WeightMatrix(std::move(m));
}

RationalVector moment_eval(const WeightMatrix& a, const RationalVector& p) {
  if (p.size() != 2 * a.n())
    throw DimensionMismatch("moment_eval: point has " + std::to_string(p.size()) + " coordinates, expected " +
                            std::to_string(2 * a.n()));
  RationalVector mu(a.d(), Rational(0));
  for (std::size_t j = 0; j < a.n(); ++j) {
    Rational xy = p[j] * p[a.n() + j];
    if (xy == 0) continue;
    for (std::size_t i = 0; i < a.d(); ++i) mu[i] += Rational(a.matrix()(i, j)) * xy;
  }
  return mu;
}

StackModel make_git_model(ModelKind kind, const IntMatrix& a, const IntVector& theta) {
  if (kind == ModelKind::DirectToric) throw InvalidInput("direct models take an unstable arrangement, not theta");
  return build_git(kind, a, theta, iota(a.cols()));
}

StackModel make_lawrence_model(const IntMatrix& a, const IntVector& theta) {
  return make_git_model(ModelKind::Lawrence, a, theta);
}

StackModel make_hypertoric_model(const IntMatrix& a, const IntVector& theta) {
  return make_git_model(ModelKind::Hypertoric, a, theta);
}

StackModel make_direct_model(const IntMatrix& weights, const std::vector<CoordSet>& unstable) {
  return build_direct(weights, unstable, iota(weights.cols()));
}

StackModel restrict_to_columns(const StackModel& model, const IndexSet& cols) {
  IndexSet ids;
  for (std::size_t j : cols) {
    if (j >= model.n()) throw InvalidInput("restrict_to_columns: column out of range");
    ids.push_back(model.columns[j]);
  }
  IntMatrix sub = model.base.matrix().select_columns(cols);
  if (model.kind != ModelKind::DirectToric) return build_git(model.kind, sub, *model.theta, std::move(ids));

  std::vector<CoordSet> unstable;
  for (const auto& s : model.arrangement.unstable_minimal) {
    CoordSet r;
    for (std::size_t c : s) {
      auto it = std::lower_bound(cols.begin(), cols.end(), c);
      if (it != cols.end() && *it == c) r.push_back(static_cast<std::size_t>(it - cols.begin()));
    }
    if (r.empty()) throw InvalidInput("restriction to " + format_index_set(cols) + " has no stable points");
    unstable.push_back(std::move(r));
  }
  return build_direct(sub, unstable, std::move(ids));
}

}  // namespace htoric
