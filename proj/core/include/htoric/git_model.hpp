#pragma once

// GIT input data (A, theta), stability arrangements and the three stack
// models: Lawrence toric, hypertoric, and directly presented toric quotients.

#include <optional>
#include <string>
#include <vector>

#include "htoric/characters.hpp"
#include "htoric/exact.hpp"

namespace htoric {

/// Sorted, 0-based column indices.
using IndexSet = std::vector<std::size_t>;
/// Sorted, 0-based coordinate indices. In doubled models y_j is n + j.
using CoordSet = std::vector<std::size_t>;

/// d x n matrix of torus weights; column j is the weight of x_j.
class WeightMatrix {
 public:
  WeightMatrix() = default;
  explicit WeightMatrix(IntMatrix a) : a_(std::move(a)) {}

  const IntMatrix& matrix() const { return a_; }
  std::size_t d() const { return a_.rows(); }
  std::size_t n() const { return a_.cols(); }
  IntVector column(std::size_t j) const { return a_.column(j); }
  bool has_full_rank() const { return a_.rank() == a_.rows(); }

  friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

 private:
  IntMatrix a_;
};

enum class Tag { X, Y };

struct SigmaSet {
  IndexSet basis;
  std::vector<Tag> tags;  // parallel to basis

  /// Coordinate indices in the doubled list (x_j -> j, y_j -> n + j), sorted.
  CoordSet coordinates(std::size_t n) const;
  friend bool operator==(const SigmaSet&, const SigmaSet&) = default;
};

struct GenericViolation {
  IndexSet basis;
  std::size_t position = 0;  // index into basis with lambda = 0
  std::size_t column() const { return basis[position]; }
};

struct GenericReport {
  bool generic = true;
  /// Every violating (basis, position), bases in lexicographic order.
  std::vector<GenericViolation> violations;
  std::string describe() const;
};

struct AmbientCoordinate {
  std::string label;
  IntVector character;
  std::size_t column = 0;  // column of the base matrix this coordinate belongs to
};

struct StableArrangement {
  std::vector<SigmaSet> sigma_sets;        // empty for direct models
  std::vector<CoordSet> stable_supports;   // minimal coordinate sets whose nonvanishing is stable
  std::vector<CoordSet> unstable_minimal;  // minimal S with V(S) unstable
  std::vector<AmbientCoordinate> ambient_coords;
};

enum class ModelKind { Lawrence, Hypertoric, DirectToric };

std::string to_string(ModelKind kind);

struct StackModel {
  ModelKind kind = ModelKind::Lawrence;
  /// Undoubled weights: A for Lawrence/Hypertoric, the coordinate weights for direct models.
  WeightMatrix base;
  std::optional<IntVector> theta;
  /// Weights of every ambient coordinate (A± for the doubled kinds).
  WeightMatrix weights;
  StableArrangement arrangement;
  CharacterClass tangent_class;
  std::size_t moment_rank = 0;
  /// Original column ids of base, so components keep their labels.
  IndexSet columns;

  std::size_t d() const { return base.d(); }
  std::size_t n() const { return base.n(); }
  std::size_t num_coords() const { return weights.n(); }
  bool doubled() const { return kind != ModelKind::DirectToric; }

  /// Coordinates attached to the given base columns (x_j, plus y_j when doubled).
  CoordSet coordinates_of_columns(const IndexSet& cols) const;
  /// True if a point whose nonzero coordinates are exactly `support` is stable.
  bool is_stable_support(const CoordSet& support) const;
};

std::vector<IndexSet> column_bases(const WeightMatrix& a);
RationalVector lambda_coeffs(const WeightMatrix& a, const IndexSet& basis, const IntVector& theta);
SigmaSet sigma_set(const WeightMatrix& a, const IndexSet& basis, const IntVector& theta);
GenericReport check_generic(const WeightMatrix& a, const IntVector& theta);

/// Inclusion-minimal coordinate sets meeting every given set; ordered by size
/// then lexicographically.
std::vector<CoordSet> minimal_unstable_sets(const std::vector<CoordSet>& sigmas);
std::vector<CoordSet> minimal_unstable_sets(const std::vector<SigmaSet>& sigmas, std::size_t n);
/// Removes non-minimal members and duplicates; same ordering as above.
std::vector<CoordSet> minimal_elements(std::vector<CoordSet> sets);

WeightMatrix lawrence_double(const WeightMatrix& a);
/// mu_i = sum_j a_ij x_j y_j for p = (x_1..x_n, y_1..y_n).
RationalVector moment_eval(const WeightMatrix& a, const RationalVector& p);

StackModel make_git_model(ModelKind kind, const IntMatrix& a, const IntVector& theta);
StackModel make_lawrence_model(const IntMatrix& a, const IntVector& theta);
StackModel make_hypertoric_model(const IntMatrix& a, const IntVector& theta);
/// unstable: coordinate sets S whose vanishing locus V(S) is removed.
StackModel make_direct_model(const IntMatrix& weights, const std::vector<CoordSet>& unstable);

/// The model on the columns `cols` only (the fixed locus of a torus element).
StackModel restrict_to_columns(const StackModel& model, const IndexSet& cols);

std::string format_index_set(const IndexSet& s);  // "{1,3}" (1-based)

}  // namespace htoric
