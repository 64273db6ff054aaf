#include "htoric/verifiers.hpp"

#include <algorithm>
#include <numeric>

namespace htoric {

std::string format_sigma(const SigmaSet& s) {
  std::vector<std::pair<std::size_t, std::string>> parts;
  for (std::size_t i = 0; i < s.basis.size(); ++i)
    parts.emplace_back(s.basis[i], (s.tags[i] == Tag::X ? "x" : "y") + std::to_string(s.basis[i] + 1));
  std::sort(parts.begin(), parts.end());
  std::string out = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i].second;
  return out + "}";
}

LocalModelSRE LocalModelSRE::cyclic(const Integer& order, std::vector<Integer> weights, const Integer& k) {
  if (order < 1) throw InvalidInput("cyclic group order must be positive");
  LocalModelSRE m;
  m.generators.emplace_back(RationalVector{Rational(k, order)});
  for (auto& w : weights) m.normal_weights.push_back(IntVector{mod_floor(w, order)});
  return m;
}

bool sre_condition_iii(const LocalModelSRE& model) {
  for (const auto& g : model.generators)
    for (const auto& w : model.normal_weights)
      if (!g.fixes(w)) return false;
  return true;
}

std::vector<LocalModelSRE> hypertoric_normal_models(const IntMatrix& a, const IntVector& theta) {
  StackModel y = make_hypertoric_model(a, theta);
  std::vector<LocalModelSRE> out;
  for (const auto& s : y.arrangement.sigma_sets) {
    LocalModelSRE m;
    m.generators = stabilizer_elements(y.base, s.basis);
    // mu is T-invariant: its d components are trivial characters
    m.normal_weights.assign(y.d(), IntVector(y.d(), Integer(0)));
    out.push_back(std::move(m));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::size_t ChartInstance::sigma_coordinate(std::size_t i) const {
  const std::size_t n = weights.n(), j = sigma.basis[i];
  return sigma.tags[i] == Tag::X ? j : n + j;
}

std::size_t ChartInstance::moved_coordinate(std::size_t i) const {
  const std::size_t n = weights.n(), j = sigma.basis[i];
  return sigma.tags[i] == Tag::X ? n + j : j;
}

ChartInstance make_chart(const WeightMatrix& a, const SigmaSet& sigma) {
  const std::size_t d = a.d();
  if (sigma.basis.size() != d) throw InvalidInput("chart: sigma set must have d elements");
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  // permutations are generated in lexicographic order; take the first that works
  do {
    bool ok = true;
    for (std::size_t i = 0; i < d && ok; ++i) ok = a.matrix()(perm[i], sigma.basis[i]) != 0;
    if (ok) {
      ChartInstance c;
      c.weights = a;
      c.sigma = sigma;
      c.pivot_order = perm;
      c.reduced = IntMatrix(d, a.n());
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < a.n(); ++j) c.reduced(i, j) = a.matrix()(perm[i], j);
      c.base_point_dim = 2 * a.n() - d;
      c.fiber_dim = d;
      return c;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw InvalidInput("chart: columns " + format_index_set(sigma.basis) + " admit no nonzero pivot order");
}

bool in_chart_domain(const ChartInstance& chart, const RationalVector& p) {
  if (p.size() != 2 * chart.weights.n()) return false;
  for (std::size_t i = 0; i < chart.sigma.basis.size(); ++i)
    if (p[chart.sigma_coordinate(i)] == 0) return false;
  return true;
}

namespace {

// delta with A'_C delta = diag(a'_ii) z: the change of x_j y_j in the pivot columns.
RationalVector pivot_increments(const ChartInstance& chart, const RationalVector& z) {
  const std::size_t d = chart.fiber_dim;
  IntMatrix sub = chart.reduced.select_columns(chart.sigma.basis);
  RationalVector rhs(d);
  for (std::size_t i = 0; i < d; ++i) rhs[i] = Rational(sub(i, i)) * z[i];
  return *solve_rational(sub, rhs);
}

}  // namespace

RationalVector chart_forward(const ChartInstance& chart, const RationalVector& base, const RationalVector& z) {
  if (z.size() != chart.fiber_dim) throw DimensionMismatch("chart_forward: z has wrong length");
  if (!in_chart_domain(chart, base)) throw InvalidInput("chart_forward: base point is not in U_sigma");
  RationalVector mu = moment_eval(chart.weights, base);
  if (!std::all_of(mu.begin(), mu.end(), [](const Rational& x) { return x == 0; }))
    throw InvalidInput("chart_forward: base point is not in mu^{-1}(0)");
  RationalVector delta = pivot_increments(chart, z);
  RationalVector q = base;
  for (std::size_t i = 0; i < chart.fiber_dim; ++i)
    q[chart.moved_coordinate(i)] += delta[i] / base[chart.sigma_coordinate(i)];
  return q;
}

std::pair<RationalVector, RationalVector> chart_inverse(const ChartInstance& chart, const RationalVector& q) {
  if (!in_chart_domain(chart, q)) throw InvalidInput("chart_inverse: point is not in U_sigma");
  const std::size_t d = chart.fiber_dim;
  RationalVector mu = moment_eval(WeightMatrix(chart.reduced), q);
  RationalVector z(d);
  for (std::size_t i = 0; i < d; ++i) z[i] = mu[i] / Rational(chart.reduced(i, chart.sigma.basis[i]));
  RationalVector delta = pivot_increments(chart, z);
  RationalVector base = q;
  for (std::size_t i = 0; i < d; ++i) base[chart.moved_coordinate(i)] -= delta[i] / q[chart.sigma_coordinate(i)];
  return {std::move(base), std::move(z)};
}

// ---------------------------------------------------------------------------

long long RationalSampler::next_int(long long lo, long long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long long>(rng_() % span);
}

Rational RationalSampler::next() {
  return Rational(Integer(next_int(-max_num_, max_num_)), Integer(next_int(1, max_den_)));
}

Rational RationalSampler::next_nonzero() {
  for (;;) {
    Rational r = next();
    if (r != 0) return r;
  }
}

ChartsReport verify_charts(const IntMatrix& a, const IntVector& theta, std::size_t samples, std::uint64_t seed) {
  StackModel y = make_hypertoric_model(a, theta);
  ChartsReport report;
  RationalSampler rng(seed);
  for (const auto& sigma : y.arrangement.sigma_sets) {
    ChartReport cr;
    cr.sigma = format_sigma(sigma);
    ChartInstance chart = make_chart(y.base, sigma);
    cr.pivot_order = chart.pivot_order;
    auto fail = [&](std::string msg) {
      cr.pass = false;
      if (cr.failures.size() < 5) cr.failures.push_back(std::move(msg));
    };
    for (std::size_t s = 0; s < samples; ++s) {
      RationalVector q(2 * y.n());
      for (auto& x : q) x = rng.next();
      for (std::size_t i = 0; i < sigma.basis.size(); ++i) q[chart.sigma_coordinate(i)] = rng.next_nonzero();
      ++cr.samples;

      auto [base, z] = chart_inverse(chart, q);
      RationalVector mu = moment_eval(y.base, base);
      bool on_zero = std::all_of(mu.begin(), mu.end(), [](const Rational& x) { return x == 0; });
      if (on_zero) ++cr.base_on_zero_fiber;
      else fail("base point off mu^{-1}(0) for sample " + std::to_string(s));
      if (!on_zero) continue;

      bool forward_ok = chart_forward(chart, base, z) == q;
      // other direction: fresh fiber coordinate over the same base point
      RationalVector z2(chart.fiber_dim);
      for (auto& x : z2) x = rng.next();
      auto [base2, z2_back] = chart_inverse(chart, chart_forward(chart, base, z2));
      bool backward_ok = base2 == base && z2_back == z2;
      if (forward_ok && backward_ok) ++cr.roundtrips;
      else fail("roundtrip mismatch for sample " + std::to_string(s));
    }
    if (!cr.pass) report.pass = false;
    report.charts.push_back(std::move(cr));
  }
  return report;
}

}  // namespace htoric
