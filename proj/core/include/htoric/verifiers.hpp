#pragma once

// Local checks on hypertoric embeddings: the strong-regular-embedding
// criterion on normal representations of stabilizers, and the explicit
// product charts U_sigma = (mu^{-1}(0) n U_sigma) x A^d.

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "htoric/git_model.hpp"
#include "htoric/inertia.hpp"

namespace htoric {

/// Stabilizer group (by generators) and the characters of the normal fiber.
struct LocalModelSRE {
  std::vector<TorsionElement> generators;
  std::vector<IntVector> normal_weights;

  /// mu_r in rank one, generated by k/r; weights reduced mod r.
  static LocalModelSRE cyclic(const Integer& order, std::vector<Integer> weights, const Integer& k = 1);
};

/// True iff every generator acts trivially on every normal weight.
bool sre_condition_iii(const LocalModelSRE& model);

/// One local model per column basis: the basis stabilizer acting on the d
/// trivial characters normal to mu^{-1}(0).
std::vector<LocalModelSRE> hypertoric_normal_models(const IntMatrix& a, const IntVector& theta);

struct ChartInstance {
  WeightMatrix weights;  // A, undoubled
  SigmaSet sigma;
  /// Row i of the reordered matrix is row pivot_order[i] of A; entry (i, basis[i]) != 0.
  std::vector<std::size_t> pivot_order;
  IntMatrix reduced;  // A with rows permuted by pivot_order
  std::size_t base_point_dim = 0;
  std::size_t fiber_dim = 0;

  /// Coordinate index (in the 2n-list) carrying sigma[i], and the one the chart moves.
  std::size_t sigma_coordinate(std::size_t i) const;
  std::size_t moved_coordinate(std::size_t i) const;
};

/// Lexicographically smallest row permutation giving nonzero pivots.
ChartInstance make_chart(const WeightMatrix& a, const SigmaSet& sigma);

bool in_chart_domain(const ChartInstance& chart, const RationalVector& p);

/// (base point in mu^{-1}(0) n U_sigma, z in Q^d) -> point of U_sigma.
RationalVector chart_forward(const ChartInstance& chart, const RationalVector& base, const RationalVector& z);
/// Inverse of chart_forward.
std::pair<RationalVector, RationalVector> chart_inverse(const ChartInstance& chart, const RationalVector& q);

struct ChartReport {
  std::string sigma;
  std::vector<std::size_t> pivot_order;
  std::size_t samples = 0;
  std::size_t roundtrips = 0;  // both directions exact
  std::size_t base_on_zero_fiber = 0;
  bool pass = true;
  std::vector<std::string> failures;
};

struct ChartsReport {
  bool pass = true;
  std::vector<ChartReport> charts;
};

ChartsReport verify_charts(const IntMatrix& a, const IntVector& theta, std::size_t samples, std::uint64_t seed);

/// Seeded exact rationals with bounded numerators and denominators.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, long long max_numerator = 9, long long max_denominator = 5)
      : rng_(seed), max_num_(max_numerator), max_den_(max_denominator) {}

  Rational next();
  Rational next_nonzero();
  long long next_int(long long lo, long long hi);  // inclusive

 private:
  std::mt19937_64 rng_;
  long long max_num_;
  long long max_den_;
};

std::string format_sigma(const SigmaSet& s);  // "{y2,x3}"

}  // namespace htoric
