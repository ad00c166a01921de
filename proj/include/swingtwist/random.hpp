#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "swingtwist/cl3.hpp"
#include "swingtwist/errors.hpp"
#include "swingtwist/quaternion.hpp"

// Deterministic input generators for validation and benchmarking. Every
// consumer derives per-item engines from a master seed via mix_seed, so
// results are reproducible and independent of iteration order.

namespace swingtwist {

using RngState = std::mt19937_64;

// splitmix64 finalizer over seed and stream index.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  std::uint64_t x = seed + 0x9E3779B97F4A7C15ull * (index + 1);
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

// Uniform on the unit 3-sphere: four independent standard normals, normalized.
inline Spinor random_unit_spinor(RngState& rng) {
  std::normal_distribution<double> gauss;
  for (;;) {
    const double a = gauss(rng);
    const double b = gauss(rng);
    const double c = gauss(rng);
    const double d = gauss(rng);
    const double n2 = a * a + b * b + c * c + d * d;
    if (n2 > 1e-12) {
      const double inv = 1.0 / std::sqrt(n2);
      return {a * inv, b * inv, c * inv, d * inv};
    }
  }
}

inline Quaternion random_unit_quaternion(RngState& rng) {
  const Spinor s = random_unit_spinor(rng);
  return {s.a, s.b, s.c, s.d};
}

inline Vector3 random_unit_vector(RngState& rng) {
  std::normal_distribution<double> gauss;
  for (;;) {
    const double x = gauss(rng);
    const double y = gauss(rng);
    const double z = gauss(rng);
    const double n2 = x * x + y * y + z * z;
    if (n2 > 1e-12) {
      const double inv = 1.0 / std::sqrt(n2);
      return {x * inv, y * inv, z * inv};
    }
  }
}

// Uniform direction, length log-uniform in [min_len, max_len].
inline Vector3 random_vector(RngState& rng, double min_len, double max_len) {
  if (!(min_len > 0.0) || !(max_len >= min_len)) {
    raise(errc::bad_config, "random_vector requires 0 < min_len <= max_len");
  }
  const Vector3 dir = random_unit_vector(rng);
  if (min_len == max_len) return dir * min_len;
  std::uniform_real_distribution<double> log_len(std::log(min_len), std::log(max_len));
  return dir * std::exp(log_len(rng));
}

// Near-degenerate spinor a * 1 + sqrt(1 - a^2) * B with the bivector dual
// perpendicular to v: probes the "rotation maps v to -v" boundary.
inline Spinor near_degenerate_spinor(RngState& rng, const Vector3& v, double scalar_part) {
  Vector3 axis;
  for (;;) {
    axis = v.cross(random_unit_vector(rng));
    const double n = axis.norm();
    if (n > 1e-6 * v.norm()) {
      axis = axis / n;
      break;
    }
  }
  const double r = std::sqrt(std::max(0.0, 1.0 - scalar_part * scalar_part));
  // bivector coefficients (b, c, d) whose dual (c, d, b) equals axis
  return {scalar_part, r * axis.z, r * axis.x, r * axis.y};
}

}  // namespace swingtwist
