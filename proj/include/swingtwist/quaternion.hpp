#pragma once

#include <cmath>

#include "swingtwist/cl3.hpp"
#include "swingtwist/decompose.hpp"
#include "swingtwist/errors.hpp"

// Quaternion reference decomposers used as cross-validation oracles and
// benchmark competitors: the axis-angle "direct" method (twist-after-swing)
// and Huyghe's Z-axis and general projection methods (swing-after-twist).
// These are quaternion-native on purpose; none of them touches the
// multivector machinery.

namespace swingtwist {

struct Quaternion {
  double w = 1.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  static Quaternion identity() { return {1.0, 0.0, 0.0, 0.0}; }

  double norm_squared() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm_squared()); }

  bool is_unit(double eps = eps_unit) const {
    return std::abs(norm_squared() - 1.0) <= eps;
  }

  Quaternion conjugate() const { return {w, -x, -y, -z}; }
  Quaternion operator-() const { return {-w, -x, -y, -z}; }

  // Hamilton product.
  Quaternion operator*(const Quaternion& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z,
            w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x,
            w * o.z + x * o.y - y * o.x + z * o.w};
  }

  // q v q* for unit q, expanded with two cross products.
  Vector3 rotate(const Vector3& v) const {
    const Vector3 qv{x, y, z};
    const Vector3 t = qv.cross(v) * 2.0;
    return v + t * w + qv.cross(t);
  }

  bool is_finite() const {
    return std::isfinite(w) && std::isfinite(x) && std::isfinite(y) &&
           std::isfinite(z);
  }
};

struct QuatSwingTwist {
  Quaternion swing;
  Quaternion twist;
  Representation rep = Representation::swing_after_twist;

  Quaternion compose() const {
    // SAT composes q = q_s q_t, TAS composes q = q_t q_s.
    return rep == Representation::swing_after_twist ? swing * twist : twist * swing;
  }
};

// Bridge between the quaternion algebra and the even subalgebra of Cl(3,0):
// i -> -e23, j -> -e31, k -> -e12. Under this map Hamilton products become
// spinor products and q v q* equals rotate(quat_to_spinor(q), v); validated
// by the test suite rather than assumed.
inline Spinor quat_to_spinor(const Quaternion& q) {
  if (!q.is_unit()) {
    raise(errc::non_unit_quaternion, "quat_to_spinor requires a unit quaternion");
  }
  return {q.w, -q.z, -q.x, -q.y};
}

inline Quaternion spinor_to_quat(const Spinor& s) {
  if (!s.is_unit()) {
    raise(errc::non_unit_spinor, "spinor_to_quat requires a unit spinor");
  }
  return {s.a, -s.c, -s.d, -s.b};
}

// Axis-angle decomposition (twist-after-swing): the swing is the rotation
// from v to w = q v q* about the axis v x w, the twist is recovered as
// q_t = q q_s^-1 and fixes w. Uses trigonometric and inverse-trigonometric
// calls. When w is (numerically) parallel to v the swing degenerates to the
// identity; w = -v has no decomposition.
inline QuatSwingTwist direct_method_decompose(const Quaternion& q, const Vector3& v) {
  if (!q.is_unit()) {
    raise(errc::non_unit_quaternion, "direct_method_decompose requires a unit quaternion");
  }
  const Vector3 vn = normalize_vector(v);
  const Vector3 w = q.rotate(vn);
  const Vector3 cr = vn.cross(w);
  const double cl = cr.norm();
  if (cl <= eps_dec) {
    if (vn.dot(w) > 0.0) {
      return {Quaternion::identity(), q, Representation::twist_after_swing};
    }
    raise(errc::antipodal_vectors,
          "direct_method_decompose is undefined when the rotation maps v to -v");
  }
  const Vector3 axis = cr / cl;
  const double cos_angle = std::max(-1.0, std::min(1.0, vn.dot(w)));
  const double half = 0.5 * std::acos(cos_angle);
  const double sh = std::sin(half);
  const Quaternion swing{std::cos(half), sh * axis.x, sh * axis.y, sh * axis.z};
  const Quaternion twist = q * swing.conjugate();
  return {swing, twist, Representation::twist_after_swing};
}

// Huyghe's Z-axis decomposition (swing-after-twist): closed-form split of
// q = q_s q_t with the twist about e3. Fails by division by zero when
// w^2 + z^2 vanishes; that case is reported as DegenerateTwist.
inline QuatSwingTwist huyghe_z_decompose(const Quaternion& q) {
  if (!q.is_unit()) {
    raise(errc::non_unit_quaternion, "huyghe_z_decompose requires a unit quaternion");
  }
  const double r2 = q.w * q.w + q.z * q.z;
  if (r2 <= eps_dec * eps_dec) {
    raise(errc::degenerate_twist, "huyghe_z_decompose: w^2 + z^2 vanishes");
  }
  const double r = std::sqrt(r2);
  const double wt = q.w / r;  // + sign branch, fixed for determinism
  const double zt = q.z / r;
  const Quaternion twist{wt, 0.0, 0.0, zt};
  const Quaternion swing{wt * q.w + zt * q.z, wt * q.x - zt * q.y,
                         wt * q.y + zt * q.x, 0.0};
  return {swing, twist, Representation::swing_after_twist};
}

// Huyghe's general decomposition (swing-after-twist): the twist is the
// normalized projection q_p = [w, (v . u_t) u_t] of q onto the twist axis,
// the swing is q q_t*. The unhandled w_s = 0 case of the original
// derivation surfaces as DegenerateTwist.
inline QuatSwingTwist huyghe_general_decompose(const Quaternion& q, const Vector3& twist_axis) {
  if (!q.is_unit()) {
    raise(errc::non_unit_quaternion, "huyghe_general_decompose requires a unit quaternion");
  }
  const Vector3 axis = normalize_vector(twist_axis);
  const double proj = q.x * axis.x + q.y * axis.y + q.z * axis.z;
  const double pn2 = q.w * q.w + proj * proj;
  if (pn2 <= eps_dec * eps_dec) {
    raise(errc::degenerate_twist,
          "huyghe_general_decompose: projected quaternion has zero norm");
  }
  const double inv = 1.0 / std::sqrt(pn2);
  const Quaternion twist{q.w * inv, proj * axis.x * inv, proj * axis.y * inv,
                         proj * axis.z * inv};
  const Quaternion swing = q * twist.conjugate();
  return {swing, twist, Representation::swing_after_twist};
}

}  // namespace swingtwist
