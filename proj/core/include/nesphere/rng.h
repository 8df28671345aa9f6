#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include <Eigen/Core>

namespace nesphere {

// All random draws in the project go through these helpers. std::mt19937_64
// has a standard-pinned output sequence; the distribution adapters in
// <random> do not, so we roll the transforms ourselves and results stay
// reproducible for a given seed.

/// Uniform double in [0, 1) with 53 random mantissa bits.
inline double uniform_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [lo, hi).
inline double uniform_double(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * uniform_double(rng);
}

/// Uniform integer in [0, n). n must be positive.
inline std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = n * (UINT64_MAX / n);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

/// Standard normal via Box-Muller.
inline double normal_double(std::mt19937_64& rng) {
  double u1;
  do {
    u1 = uniform_double(rng);
  } while (u1 <= 0.0);
  const double u2 = uniform_double(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
}

inline Eigen::VectorXd normal_vector(std::mt19937_64& rng, Eigen::Index dim) {
  Eigen::VectorXd v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = normal_double(rng);
  return v;
}

/// In-place Fisher-Yates shuffle.
template <typename T>
void shuffle_deterministic(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(uniform_index(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

/// Orthogonal matrix from the QR factorization of a seeded Gaussian matrix,
/// columns sign-fixed so the factorization (and the result) is unique.
Eigen::MatrixXd random_orthogonal(std::mt19937_64& rng, Eigen::Index dim);

}  // namespace nesphere
