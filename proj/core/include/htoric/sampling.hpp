#pragma once

#include <cstdint>

#include "htoric/exact.hpp"

namespace htoric {

struct RandomInstance {
  IntMatrix a;
  IntVector theta;
};

/// Seeded random (A, theta) with 1 <= d <= max_d, d <= n <= max_n, entries in
/// [-bound, bound], A of full rank and theta generic for A.
RandomInstance random_generic_instance(std::uint64_t seed, std::size_t max_d = 2, std::size_t max_n = 4,
                                       long long bound = 3);

/// Seeded random integer matrix with the given shape and entries in [-bound, bound].
IntMatrix random_matrix(std::uint64_t seed, std::size_t rows, std::size_t cols, long long bound);

}  // namespace htoric
