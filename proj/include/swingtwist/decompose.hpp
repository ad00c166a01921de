#pragma once

#include <cmath>
#include <string>

#include "swingtwist/cl3.hpp"
#include "swingtwist/errors.hpp"

// Swing-twist machinery: the invariant twist family of a vector, the direct
// rotation between two vectors, the combined rotation set, the twist
// projection and the full decomposition in both factor orders.
//
// Conventions used throughout:
//   * the twist factor q has its bivector dual parallel to the base vector v
//     and satisfies rotate(q, v) = v;
//   * the swing factor p is twist-free about v: v . star[p]_2 = 0;
//   * results are unique up to an overall sign; returned twists are
//     canonicalized to scalar part >= 0 (ties broken by the first positive
//     bivector coefficient in e12, e23, e31 order) and the swing inherits
//     whatever sign makes the composition reproduce the input spinor.

namespace swingtwist {

enum class Representation {
  swing_after_twist,  // s = p q: twist first, then swing
  twist_after_swing,  // s = q p: swing first, then twist
};

inline const char* representation_name(Representation rep) noexcept {
  return rep == Representation::swing_after_twist ? "sat" : "tas";
}

inline Representation parse_representation(const std::string& text) {
  if (text == "sat" || text == "SAT") return Representation::swing_after_twist;
  if (text == "tas" || text == "TAS") return Representation::twist_after_swing;
  raise(errc::bad_config, "unknown representation '" + text + "' (expected sat or tas)");
}

struct SwingTwist {
  Spinor swing;
  Spinor twist;
  Representation rep = Representation::swing_after_twist;

  // The composed spinor p q (SAT) or q p (TAS).
  Spinor compose() const {
    return rep == Representation::swing_after_twist ? swing * twist : twist * swing;
  }
};

// Intermediate scalars of the fast decomposition path, exposed for
// diagnostics and tests:
//   u     = v . star[s]_2
//   n     = ||v||^2
//   m     = a n
//   lnorm = sqrt(m^2 + u^2 n), the norm of the pinor v (v . s)
//   k, l  = cos/sin of the twist half-angle (k = m/lnorm, l = u sqrt(n)/lnorm)
struct TwistScalars {
  double k = 0.0;
  double l = 0.0;
  double u = 0.0;
  double n = 0.0;
  double m = 0.0;
  double lnorm = 0.0;
};

inline TwistScalars twist_scalars(const Vector3& v, const Spinor& s) {
  TwistScalars ts;
  ts.u = v.x * s.c + v.y * s.d + v.z * s.b;
  ts.n = v.norm_squared();
  ts.m = s.a * ts.n;
  ts.lnorm = std::sqrt(ts.m * ts.m + ts.u * ts.u * ts.n);
  if (!below_length_eps(ts.lnorm)) {
    ts.k = ts.m / ts.lnorm;
    ts.l = ts.u * std::sqrt(ts.n) / ts.lnorm;
  }
  return ts;
}

// Flips the overall sign so the scalar part is positive; when it is exactly
// zero the first nonzero bivector coefficient (e12, e23, e31 order) decides.
inline Spinor canonical_sign(const Spinor& s) {
  double lead = s.a;
  if (lead == 0.0) lead = s.b;
  if (lead == 0.0) lead = s.c;
  if (lead == 0.0) lead = s.d;
  return lead < 0.0 ? -s : s;
}

// The spinors that leave v fixed: exp(e123 alpha N(v)).
inline Spinor invariant_twist(const Vector3& v, double alpha) {
  return exp_axis_twist(v, alpha);
}

// The pair +-N(v+w)N(v) rotating v onto w; the canonical-sign member is
// returned. Requires equal lengths and w != -v.
inline Spinor direct_rotation(const Vector3& v, const Vector3& w) {
  const double lv = v.norm();
  const double lw = w.norm();
  if (below_length_eps(lv) || below_length_eps(lw)) {
    raise(errc::zero_vector, "direct_rotation requires non-zero vectors");
  }
  if (std::abs(lv - lw) > eps_unit * lv) {
    raise(errc::length_mismatch, "direct_rotation requires equal-length vectors");
  }
  const Vector3 sum = v + w;
  if (!(sum.norm() > eps_len * std::max(1.0, lv))) {
    raise(errc::antipodal_vectors, "direct_rotation is undefined for w = -v");
  }
  // (v + w) v = v.v + w.v + w ^ v, then normalize as a pinor.
  const Pinor p{sum.dot(v),
                sum.x * v.y - sum.y * v.x,
                sum.y * v.z - sum.z * v.y,
                sum.z * v.x - sum.x * v.z};
  return canonical_sign(normalize_pinor(p));
}

// Every spinor rotating v onto w, parameterized by the twist angle:
// SAT composes the v-axis twist first, TAS applies the w-axis twist last.
inline Spinor rotation_set(const Vector3& v, const Vector3& w, double alpha,
                           Representation rep) {
  const Spinor swing = direct_rotation(v, w);
  if (rep == Representation::swing_after_twist) {
    return swing * exp_axis_twist(v, alpha);
  }
  return exp_axis_twist(w, alpha) * swing;
}

// True unless the rotation maps v to -v, i.e. unless a = 0 and
// v . star[s]_2 = 0 (within the eps_dec band).
inline bool is_decomposable(const Spinor& s, const Vector3& v) {
  const double n = v.norm_squared();
  if (below_length_eps_sq(n)) {
    raise(errc::zero_vector, "is_decomposable requires a non-zero base vector");
  }
  const double u = v.x * s.c + v.y * s.d + v.z * s.b;
  return std::abs(s.a) > eps_dec || std::abs(u) > eps_dec * std::sqrt(n);
}

// Twist projection sigma_v(s) = N(v (v . s)), computed from the closed form
// N(a ||v||^2 + e123 v (v . star[s]_2)) with a single square root and no
// trigonometric calls. Canonical sign.
inline Spinor twist_projection(const Vector3& v, const Spinor& s) {
  const double n = v.norm_squared();
  if (below_length_eps_sq(n)) {
    raise(errc::zero_vector, "twist_projection requires a non-zero base vector");
  }
  const double u = v.x * s.c + v.y * s.d + v.z * s.b;
  const double m = s.a * n;
  const double l = std::sqrt(m * m + u * u * n);
  if (!(l > eps_dec * n)) {
    raise(errc::not_decomposable,
          "twist projection is undefined: the rotation maps the base vector to its negation");
  }
  const double inv = 1.0 / l;
  const double ui = u * inv;
  return canonical_sign(Spinor{m * inv, v.z * ui, v.x * ui, v.y * ui});
}

// Swing-twist decomposition of s about base vector v. The twist is the
// projection sigma_v(s); the swing is recovered by one spinor product
// (p = s q~ for SAT, p = q~ s for TAS). Trigonometry-free.
inline SwingTwist decompose(const Spinor& s, const Vector3& v, Representation rep) {
  const Spinor q = twist_projection(v, s);
  const Spinor p = rep == Representation::swing_after_twist ? s * q.reversed()
                                                            : q.reversed() * s;
  return {p, q, rep};
}

}  // namespace swingtwist
