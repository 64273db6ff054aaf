#pragma once

// Integral graded rings Z[t_1..t_d]/(homogeneous relations), evaluated one
// degree at a time by Smith normal form up to a truncation bound.

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "htoric/git_model.hpp"
#include "htoric/polynomial.hpp"

namespace htoric {

/// Z^free_rank + Z/torsion[0] + ... with torsion[i] | torsion[i+1], all > 1.
struct GroupInvariants {
  std::size_t free_rank = 0;
  IntVector torsion;

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  /// "0", "Z", "Z/3", "Z^2 + Z/2 + Z/4".
  std::string to_string() const;
  friend bool operator==(const GroupInvariants&, const GroupInvariants&) = default;
};

/// Degree-k part: Z^{monomials} modulo the span of relation multiples.
class GradedPiece {
 public:
  GradedPiece(std::size_t num_vars, unsigned degree, const std::vector<Polynomial>& relations);

  unsigned degree() const { return degree_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  /// Columns are relation generators times complementary monomials.
  const IntMatrix& relation_matrix() const { return relations_; }
  /// Diagonal of the Smith form of relation_matrix, zeros included.
  const IntVector& invariant_factors() const { return factors_; }
  GroupInvariants invariants() const;

  /// Coefficients of a homogeneous degree-k polynomial in the monomial basis.
  IntVector coefficients(const Polynomial& p) const;
  /// Canonical coordinates: torsion parts reduced into [0, d_i), then free parts.
  IntVector coordinates(const IntVector& x) const;
  IntVector coordinates(const Polynomial& p) const { return coordinates(coefficients(p)); }
  /// Membership in the relation submodule.
  bool contains(const IntVector& x) const;
  bool is_zero_class(const Polynomial& p) const { return contains(coefficients(p)); }

 private:
  std::size_t num_vars_;
  unsigned degree_;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t, GrlexGreater> index_;
  IntMatrix relations_;
  IntMatrix u_;
  IntVector factors_;
  std::size_t rank_ = 0;
};

class GradedRingPresentation {
 public:
  GradedRingPresentation(std::size_t num_vars, std::vector<Polynomial> relations, unsigned truncation);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Polynomial>& relations() const { return relations_; }
  unsigned truncation() const { return truncation_; }
  GradedRingPresentation with_truncation(unsigned d) const;

  /// Degree-k piece, computed on first use. Throws DegreeOverflow when k > truncation.
  const GradedPiece& piece(unsigned k) const;

  std::vector<std::string> relation_strings() const;

 private:
  struct Cache {
    std::shared_mutex mutex;
    std::map<unsigned, std::unique_ptr<GradedPiece>> pieces;
  };

  std::size_t num_vars_;
  std::vector<Polynomial> relations_;
  unsigned truncation_;
  std::shared_ptr<Cache> cache_;
};

/// A homogeneous class on one inertia component (component index).
struct GradedClass {
  std::size_t component = 0;
  Polynomial poly;
  unsigned degree = 0;
};

/// 2 * (number of ambient coordinates).
unsigned default_truncation(const StackModel& model);

/// One relation prod_{j in S} <w_j, t> for each minimal unstable set S.
GradedRingPresentation presentation(const StackModel& model, unsigned truncation);
GradedRingPresentation presentation(const StackModel& model);

const GradedPiece& graded_group(const GradedRingPresentation& pres, unsigned k);

/// Canonical coordinates of the class in its graded piece.
IntVector reduce(const GradedRingPresentation& pres, const Polynomial& p, unsigned degree);
IntVector reduce(const GradedRingPresentation& pres, const Polynomial& p);
IntVector reduce(const GradedRingPresentation& pres, const GradedClass& c);

struct IsoReport {
  bool iso = true;
  std::optional<unsigned> failing_degree;
  bool well_defined = true;
  bool injective = true;
  bool surjective = true;
  std::string reason;
};

/// Degreewise bijectivity (k = 0..max_degree) of the map t_i -> var_images[i].
IsoReport ring_map_is_iso(const GradedRingPresentation& src, const GradedRingPresentation& dst,
                          const std::vector<Polynomial>& var_images, unsigned max_degree);

/// Closed embedding of a component ring into an ambient one on the same
/// variables, with normal Euler polynomial e(N).
struct GysinEmbedding {
  const GradedRingPresentation* sub = nullptr;
  const GradedRingPresentation* ambient = nullptr;
  std::size_t ambient_component = 0;
  Polynomial normal_euler;
  /// Rank of the normal bundle (degree of e(N) even when e(N) vanishes).
  unsigned codimension = 0;
};

/// Every relation of the subring times e(N) must vanish in the ambient ring
/// (checked in degrees up to the ambient truncation). Throws GysinUndefined.
void check_gysin_well_defined(const GysinEmbedding& e);
/// Pushforward of a class lifted to a polynomial: poly * e(N).
GradedClass gysin_push(const GradedClass& c, const GysinEmbedding& e);

}  // namespace htoric
