#pragma once

#include <array>
#include <cstdint>

#include "swingtwist/cl3.hpp"
#include "swingtwist/decompose.hpp"
#include "swingtwist/quaternion.hpp"

// Independent reference implementations used only by the tests. They share
// no code with the library paths they check: blades are represented as
// bitmasks with a generic reordering-sign rule, the exponential is a plain
// power series and the twist projection is evaluated with full multivector
// products instead of the streamlined scalar recipe.

namespace oracle {

// Coefficients indexed by the basis bitmask over (e1, e2, e3):
// 000=1, 001=e1, 010=e2, 100=e3, 011=e1e2, 110=e2e3, 101=e1e3, 111=e1e2e3.
// Note mask 101 stores the ascending blade e1e3 = -e31.
using MaskCoeffs = std::array<double, 8>;

inline int popcount8(unsigned x) {
  int n = 0;
  while (x) {
    n += static_cast<int>(x & 1u);
    x >>= 1;
  }
  return n;
}

// Sign of reordering e_A e_B into the canonical ascending blade e_{A xor B}
// in a Euclidean metric: parity of the transpositions needed to interleave.
inline int reorder_sign(unsigned a, unsigned b) {
  int swaps = 0;
  a >>= 1;
  while (a != 0) {
    swaps += popcount8(a & b);
    a >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

inline MaskCoeffs to_mask(const swingtwist::Multivector& m) {
  MaskCoeffs c{};
  c[0b000] = m.s;
  c[0b001] = m.v1;
  c[0b010] = m.v2;
  c[0b100] = m.v3;
  c[0b011] = m.b12;
  c[0b110] = m.b23;
  c[0b101] = -m.b31;  // e31 = -e1e3
  c[0b111] = m.t;
  return c;
}

inline swingtwist::Multivector from_mask(const MaskCoeffs& c) {
  swingtwist::Multivector m;
  m.s = c[0b000];
  m.v1 = c[0b001];
  m.v2 = c[0b010];
  m.v3 = c[0b100];
  m.b12 = c[0b011];
  m.b23 = c[0b110];
  m.b31 = -c[0b101];
  m.t = c[0b111];
  return m;
}

inline MaskCoeffs mask_product(const MaskCoeffs& a, const MaskCoeffs& b) {
  MaskCoeffs r{};
  for (unsigned i = 0; i < 8; ++i) {
    if (a[i] == 0.0) continue;
    for (unsigned j = 0; j < 8; ++j) {
      if (b[j] == 0.0) continue;
      r[i ^ j] += reorder_sign(i, j) * a[i] * b[j];
    }
  }
  return r;
}

inline swingtwist::Multivector product(const swingtwist::Multivector& a,
                                       const swingtwist::Multivector& b) {
  return from_mask(mask_product(to_mask(a), to_mask(b)));
}

// exp(m) by its power series, truncated at k = max_terms.
inline swingtwist::Multivector exp_series(const swingtwist::Multivector& m,
                                          int max_terms = 30) {
  swingtwist::Multivector acc = swingtwist::Multivector::scalar(1.0);
  swingtwist::Multivector term = swingtwist::Multivector::scalar(1.0);
  for (int k = 1; k <= max_terms; ++k) {
    term = product(term, m) * (1.0 / k);
    acc = acc + term;
  }
  return acc;
}

// Twist projection N(v (v . s)) evaluated with generic multivector products:
// v . s = v a + e123 (v . star[s]_2) with the dot products taken as grade-0
// parts of vector products.
inline swingtwist::Spinor twist_projection(const swingtwist::Vector3& v,
                                           const swingtwist::Spinor& s) {
  using swingtwist::Multivector;
  const Multivector mv = Multivector::from_vector(v);
  const Multivector e123{0, 0, 0, 0, 0, 0, 0, 1};
  const Multivector bivector = swingtwist::grade(s.as_multivector(), 2);
  const Multivector star = product(-e123, bivector);  // grade-1 dual
  const double u = product(mv, star).s;               // v . star[s]_2
  const Multivector v_dot_s = mv * s.a + e123 * u;
  const Multivector pinor = product(mv, v_dot_s);
  const double norm = std::sqrt(product(pinor, swingtwist::reverse(pinor)).s);
  const swingtwist::Spinor q{pinor.s / norm, pinor.b12 / norm, pinor.b23 / norm,
                             pinor.b31 / norm};
  return swingtwist::canonical_sign(q);
}

inline swingtwist::SwingTwist decompose(const swingtwist::Spinor& s,
                                        const swingtwist::Vector3& v,
                                        swingtwist::Representation rep) {
  const swingtwist::Spinor q = oracle::twist_projection(v, s);
  const swingtwist::Spinor p =
      rep == swingtwist::Representation::swing_after_twist ? s * q.reversed()
                                                           : q.reversed() * s;
  return {p, q, rep};
}

// q (0, v) q* with raw Hamilton products; reference for Quaternion::rotate.
inline swingtwist::Vector3 quat_sandwich_rotate(const swingtwist::Quaternion& q,
                                                const swingtwist::Vector3& v) {
  const swingtwist::Quaternion pv{0.0, v.x, v.y, v.z};
  const swingtwist::Quaternion r = q * pv * q.conjugate();
  return {r.x, r.y, r.z};
}

}  // namespace oracle
