#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "swingtwist/errors.hpp"

// Arithmetic core for the even/odd elements of Cl(3,0) used by the
// swing-twist decomposition: full multivectors, grade-1 vectors, unit
// even elements (spinors) and their unnormalized counterparts (pinors).
//
// Basis order is fixed as [1, e1, e2, e3, e12, e23, e31, e123]; the metric
// is Euclidean (e_i e_i = +1, e_i e_j = -e_j e_i for i != j).

namespace swingtwist {

// Tolerances. Unit checks admit ~1 ulp of growth per product; zero-length
// checks scale with the input so huge vectors are never spuriously "zero".
inline constexpr double eps_unit = 1e-9;
inline constexpr double eps_len = 1e-12;
inline constexpr double eps_num = 1e-12;
inline constexpr double eps_dec = 1e-9;   // decomposability band (Appendix-A boundary)
inline constexpr double eps_chk = 1e-9;   // brute-force decomposability predicate

// True when `len` fails the relative zero-length test len > eps_len * max(1, len).
// NaN compares false and therefore lands on the "zero" side.
inline bool below_length_eps(double len) noexcept {
  return !(len > eps_len * std::max(1.0, len));
}

// Same test expressed on a squared length, avoiding the square root.
inline bool below_length_eps_sq(double len_sq) noexcept {
  return !(len_sq > eps_len * eps_len * std::max(1.0, len_sq));
}

// ---------------------------------------------------------------------------
// Vector3: grade-1 element x e1 + y e2 + z e3
// ---------------------------------------------------------------------------

struct Vector3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vector3 operator+(const Vector3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vector3 operator-(const Vector3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vector3 operator-() const { return {-x, -y, -z}; }
  Vector3 operator*(double s) const { return {x * s, y * s, z * s}; }
  Vector3 operator/(double s) const { return {x / s, y / s, z / s}; }

  double dot(const Vector3& o) const { return x * o.x + y * o.y + z * o.z; }

  Vector3 cross(const Vector3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }

  double norm_squared() const { return x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm_squared()); }

  bool is_finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
  }
};

inline Vector3 operator*(double s, const Vector3& v) { return v * s; }

// N(v) = v / ||v||. There is no normalized zero vector.
inline Vector3 normalize_vector(const Vector3& v) {
  const double len = v.norm();
  if (below_length_eps(len)) {
    raise(errc::zero_vector, "cannot normalize a zero-length vector");
  }
  return v / len;
}

// ---------------------------------------------------------------------------
// Multivector: full 8-coefficient element of Cl(3,0)
// ---------------------------------------------------------------------------

struct Multivector {
  double s = 0.0;                            // scalar
  double v1 = 0.0, v2 = 0.0, v3 = 0.0;       // e1, e2, e3
  double b12 = 0.0, b23 = 0.0, b31 = 0.0;    // e12, e23, e31
  double t = 0.0;                            // e123

  static Multivector scalar(double value) { return {value, 0, 0, 0, 0, 0, 0, 0}; }

  static Multivector from_vector(const Vector3& v) {
    return {0, v.x, v.y, v.z, 0, 0, 0, 0};
  }

  Multivector operator+(const Multivector& o) const {
    return {s + o.s, v1 + o.v1, v2 + o.v2, v3 + o.v3,
            b12 + o.b12, b23 + o.b23, b31 + o.b31, t + o.t};
  }

  Multivector operator-(const Multivector& o) const {
    return {s - o.s, v1 - o.v1, v2 - o.v2, v3 - o.v3,
            b12 - o.b12, b23 - o.b23, b31 - o.b31, t - o.t};
  }

  Multivector operator-() const { return {-s, -v1, -v2, -v3, -b12, -b23, -b31, -t}; }

  Multivector operator*(double k) const {
    return {s * k, v1 * k, v2 * k, v3 * k, b12 * k, b23 * k, b31 * k, t * k};
  }

  Vector3 vector_part() const { return {v1, v2, v3}; }

  double max_abs() const {
    double m = std::abs(s);
    m = std::max(m, std::abs(v1));
    m = std::max(m, std::abs(v2));
    m = std::max(m, std::abs(v3));
    m = std::max(m, std::abs(b12));
    m = std::max(m, std::abs(b23));
    m = std::max(m, std::abs(b31));
    m = std::max(m, std::abs(t));
    return m;
  }

  bool is_finite() const {
    return std::isfinite(s) && std::isfinite(v1) && std::isfinite(v2) &&
           std::isfinite(v3) && std::isfinite(b12) && std::isfinite(b23) &&
           std::isfinite(b31) && std::isfinite(t);
  }
};

// Geometric product over the blade basis, expanded term by term.
inline Multivector geometric_product(const Multivector& a, const Multivector& b) {
  Multivector r;
  r.s = a.s * b.s + a.v1 * b.v1 + a.v2 * b.v2 + a.v3 * b.v3
      - a.b12 * b.b12 - a.b23 * b.b23 - a.b31 * b.b31 - a.t * b.t;
  r.v1 = a.s * b.v1 + a.v1 * b.s - a.v2 * b.b12 + a.b12 * b.v2
       + a.v3 * b.b31 - a.b31 * b.v3 - a.b23 * b.t - a.t * b.b23;
  r.v2 = a.s * b.v2 + a.v2 * b.s + a.v1 * b.b12 - a.b12 * b.v1
       - a.v3 * b.b23 + a.b23 * b.v3 - a.b31 * b.t - a.t * b.b31;
  r.v3 = a.s * b.v3 + a.v3 * b.s - a.v1 * b.b31 + a.b31 * b.v1
       + a.v2 * b.b23 - a.b23 * b.v2 - a.b12 * b.t - a.t * b.b12;
  r.b12 = a.s * b.b12 + a.b12 * b.s + a.v1 * b.v2 - a.v2 * b.v1
        - a.b23 * b.b31 + a.b31 * b.b23 + a.v3 * b.t + a.t * b.v3;
  r.b23 = a.s * b.b23 + a.b23 * b.s + a.v2 * b.v3 - a.v3 * b.v2
        + a.b12 * b.b31 - a.b31 * b.b12 + a.v1 * b.t + a.t * b.v1;
  r.b31 = a.s * b.b31 + a.b31 * b.s + a.v3 * b.v1 - a.v1 * b.v3
        + a.b23 * b.b12 - a.b12 * b.b23 + a.v2 * b.t + a.t * b.v2;
  r.t = a.s * b.t + a.t * b.s + a.v1 * b.b23 + a.b23 * b.v1
      + a.v2 * b.b31 + a.b31 * b.v2 + a.v3 * b.b12 + a.b12 * b.v3;
  return r;
}

inline Multivector operator*(const Multivector& a, const Multivector& b) {
  return geometric_product(a, b);
}

// Reversion: grades 0 and 1 fixed, grades 2 and 3 negated.
inline Multivector reverse(const Multivector& m) {
  return {m.s, m.v1, m.v2, m.v3, -m.b12, -m.b23, -m.b31, -m.t};
}

// Grade-k projection, k in {0,1,2,3}.
inline Multivector grade(const Multivector& m, int k) {
  switch (k) {
    case 0: return {m.s, 0, 0, 0, 0, 0, 0, 0};
    case 1: return {0, m.v1, m.v2, m.v3, 0, 0, 0, 0};
    case 2: return {0, 0, 0, 0, m.b12, m.b23, m.b31, 0};
    case 3: return {0, 0, 0, 0, 0, 0, 0, m.t};
    default: throw std::out_of_range("grade index must be 0, 1, 2 or 3");
  }
}

// Hodge dual of a pure bivector: star(B) = -e123 B. Inputs carrying any
// non-grade-2 content are rejected.
inline Vector3 hodge_star_bivector(const Multivector& m) {
  if (m.s != 0.0 || m.v1 != 0.0 || m.v2 != 0.0 || m.v3 != 0.0 || m.t != 0.0) {
    raise(errc::non_bivector, "hodge_star_bivector requires a pure bivector");
  }
  return {m.b23, m.b31, m.b12};
}

// ---------------------------------------------------------------------------
// Spinor: unit even element a + b e12 + c e23 + d e31
// ---------------------------------------------------------------------------

struct Spinor {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  static Spinor identity() { return {1.0, 0.0, 0.0, 0.0}; }

  double norm_squared() const { return a * a + b * b + c * c + d * d; }
  double norm() const { return std::sqrt(norm_squared()); }

  bool is_unit(double eps = eps_unit) const {
    return std::abs(norm_squared() - 1.0) <= eps;
  }

  // s~ = a - b e12 - c e23 - d e31; equals the inverse for unit spinors.
  Spinor reversed() const { return {a, -b, -c, -d}; }

  Spinor operator-() const { return {-a, -b, -c, -d}; }

  // Even-subalgebra product (closed under multiplication).
  Spinor operator*(const Spinor& o) const {
    return {a * o.a - b * o.b - c * o.c - d * o.d,
            a * o.b + b * o.a - c * o.d + d * o.c,
            a * o.c + c * o.a + b * o.d - d * o.b,
            a * o.d + d * o.a + c * o.b - b * o.c};
  }

  Multivector as_multivector() const { return {a, 0, 0, 0, b, c, d, 0}; }

  bool is_finite() const {
    return std::isfinite(a) && std::isfinite(b) && std::isfinite(c) &&
           std::isfinite(d);
  }
};

// star[s]_2 = -e123 [s]_2 = c e1 + d e2 + b e3: the axis dual of the
// spinor's bivector part.
inline Vector3 bivector_dual(const Spinor& s) { return {s.c, s.d, s.b}; }

// ---------------------------------------------------------------------------
// Pinor: even element without the unit-norm requirement
// ---------------------------------------------------------------------------

struct Pinor {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  double norm_squared() const { return a * a + b * b + c * c + d * d; }
  double norm() const { return std::sqrt(norm_squared()); }
};

// N(p) = p / sqrt(p p~).
inline Spinor normalize_pinor(const Pinor& p) {
  const double len = p.norm();
  if (below_length_eps(len)) {
    raise(errc::zero_pinor, "cannot normalize a zero-norm pinor");
  }
  const double inv = 1.0 / len;
  return {p.a * inv, p.b * inv, p.c * inv, p.d * inv};
}

// ---------------------------------------------------------------------------
// Rotation kernels
// ---------------------------------------------------------------------------

namespace detail {

inline void require_unit_spinor(const Spinor& s) {
  if (!s.is_unit()) {
    raise(errc::non_unit_spinor, "rotation requires a unit spinor");
  }
}

}  // namespace detail

// Rotated vector s v s^-1 via the coordinate expansion of the sandwich
// product. Uses only even powers of the coefficients, so s and -s produce
// bit-identical results.
inline Vector3 rotate(const Spinor& s, const Vector3& v) {
  detail::require_unit_spinor(s);
  const double a = s.a, b = s.b, c = s.c, d = s.d;
  const double aa = a * a, bb = b * b, cc = c * c, dd = d * d;
  return {
      (aa - bb + cc - dd) * v.x + 2.0 * v.y * (a * b + c * d) + 2.0 * v.z * (b * c - a * d),
      (aa - bb - cc + dd) * v.y + 2.0 * v.x * (c * d - a * b) + 2.0 * v.z * (b * d + a * c),
      (aa + bb - cc - dd) * v.z + 2.0 * v.x * (b * c + a * d) + 2.0 * v.y * (b * d - a * c),
  };
}

// Same rotation evaluated literally as s v s~ with full multivector
// products. Cross-check path for rotate(); the two must agree to eps_num.
inline Vector3 rotate_sandwich(const Spinor& s, const Vector3& v) {
  detail::require_unit_spinor(s);
  const Multivector ms = s.as_multivector();
  const Multivector r = (ms * Multivector::from_vector(v)) * reverse(ms);
  return r.vector_part();
}

// exp(e123 alpha N(v)) evaluated by its closed form
// cos(alpha) + sin(alpha) e123 N(v); unit by construction and periodic in
// alpha, so any angle is accepted.
inline Spinor exp_axis_twist(const Vector3& v, double alpha) {
  const double len = v.norm();
  if (below_length_eps(len)) {
    raise(errc::zero_vector, "exp_axis_twist requires a non-zero axis");
  }
  const double k = std::sin(alpha) / len;
  return {std::cos(alpha), k * v.z, k * v.x, k * v.y};
}

}  // namespace swingtwist
