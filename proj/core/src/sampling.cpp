#include "htoric/sampling.hpp"

#include <random>

#include "htoric/git_model.hpp"

namespace htoric {

namespace {

long long draw(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

}  // namespace

IntMatrix random_matrix(std::uint64_t seed, std::size_t rows, std::size_t cols, long long bound) {
  std::mt19937_64 rng(seed);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = draw(rng, -bound, bound);
  return m;
}

RandomInstance random_generic_instance(std::uint64_t seed, std::size_t max_d, std::size_t max_n, long long bound) {
  std::mt19937_64 rng(seed);
  for (;;) {
    const auto d = static_cast<std::size_t>(draw(rng, 1, static_cast<long long>(max_d)));
    const auto n = static_cast<std::size_t>(draw(rng, static_cast<long long>(d), static_cast<long long>(max_n)));
    IntMatrix a(d, n);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < n; ++c) a(r, c) = draw(rng, -bound, bound);
    WeightMatrix wm(a);
    if (!wm.has_full_rank()) continue;
    for (int attempt = 0; attempt < 64; ++attempt) {
      IntVector theta(d);
      for (auto& x : theta) x = draw(rng, -bound, bound);
      if (is_trivial_character(theta)) continue;
      if (check_generic(wm, theta).generic) return RandomInstance{a, theta};
    }
  }
}

}  // namespace htoric
