#pragma once

#include "bergman/intmat.hpp"
#include "bergman/numbers.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace bergman::testing {

inline std::vector<IntMatrix2> catalog() {
  return {
      {1, 0, 0, 1},    {1, -1, 0, 1},  {4, -1, -1, 3}, {1, -2, -1, 4},
      {2, -1, -1, 2},  {3, -2, -1, 2}, {3, -1, 0, 1},  {1, -3, 0, 1},
  };
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  double real(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  // Column-primitive matrix with entries in [-bound, bound], det in [1, max_det].
  IntMatrix2 primitive_matrix(std::int64_t bound, std::int64_t max_det) {
    for (;;) {
      IntMatrix2 m(uniform(-bound, bound), uniform(-bound, bound),
                   uniform(-bound, bound), uniform(-bound, bound));
      const Integer d = det(m);
      if (d < 1 || d > max_det) continue;
      if (gcd_abs(m(0, 0), m(1, 0)) != 1 || gcd_abs(m(0, 1), m(1, 1)) != 1) continue;
      return m;
    }
  }

  // Bounded defining matrix: the adjugate of a nonnegative matrix with positive det.
  IntMatrix2 bounded_matrix(std::int64_t bound, std::int64_t max_det_a) {
    for (;;) {
      IntMatrix2 m(uniform(0, bound), uniform(0, bound), uniform(0, bound),
                   uniform(0, bound));
      if (det(m) < 1) continue;
      const IntMatrix2 b = adjugate(m);
      if (det(reduce_to_a(b)) > max_det_a) continue;
      return b;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace bergman::testing
