#pragma once

#include "eig33/mat3.hpp"

// Inline bodies of the stable invariant kernels, shared between the public
// wrappers in invariants.cpp and the eigensolver hot path.  Include this
// header only from translation units compiled with FP contraction disabled:
// the error guarantees count one rounding per written operation, and a fused
// multiply-add in an including TU would silently break them.
//
// Association in every kernel is the printed left-to-right order; the forward
// error constants of the stable kernels depend on it.

namespace eig33 {
namespace detail {

struct DiagDiff {
  double d0, d1, d2;
};

inline DiagDiff diagonal_differences(const Mat3& a) {
  return {a.e[0] - a.e[4], a.e[0] - a.e[8], a.e[4] - a.e[8]};
}

inline double i1(const Mat3& a) { return a.e[0] + a.e[4] + a.e[8]; }

inline double j2_stable(const Mat3& a, const DiagDiff& d) {
  const double offdiag = a.e[1] * a.e[3] + a.e[2] * a.e[6] + a.e[5] * a.e[7];
  const double diag = (d.d0 * d.d0 + d.d1 * d.d1 + d.d2 * d.d2) / 6.0;
  return diag + offdiag;
}

inline double j3_stable(const Mat3& a, const DiagDiff& d) {
  const double t1 = d.d1 + d.d2;
  const double t2 = d.d0 - d.d2;
  const double t3 = -d.d0 - d.d1;
  const double offdiag = a.e[1] * a.e[5] * a.e[6] + a.e[2] * a.e[3] * a.e[7];
  const double mixed =
      (a.e[1] * a.e[3] * t1 + a.e[2] * a.e[6] * t2 + a.e[5] * a.e[7] * t3) / 3.0;
  const double diag = t1 * t2 * t3 / 27.0;
  return offdiag + mixed - diag;
}

// The 14 difference polynomials of the sum-of-products discriminant.  Each
// component is exactly zero on scaled identities because every monomial
// contains an off-diagonal entry or a diagonal difference.  The weighted sum
// of r_k(A) * r_k(A^T) over the weights below is identically 4*J2^3 - 27*J3^2
// (checked symbolically), and for symmetric A every product is a square, so
// the computed discriminant is then a nonnegative sum of nonnegative terms.
struct Dx {
  double r[14];
};

inline Dx dx(double m01, double m02, double m10, double m12, double m20, double m21,
             const DiagDiff& d) {
  const double d0 = d.d0, d1 = d.d1, d2 = d.d2;
  Dx o;
  o.r[0] = m01 * m12 * m20 - m02 * m10 * m21;
  o.r[1] = -m01 * m02 * d2 + m01 * m01 * m12 - m02 * m02 * m21;
  o.r[2] = m01 * m21 * d1 - m01 * m01 * m20 + m02 * m21 * m21;
  o.r[3] = m02 * m12 * d0 + m01 * m12 * m12 - m02 * m02 * m10;
  o.r[4] = m01 * m12 * d1 - m01 * m02 * m10 + m02 * m12 * m21;
  o.r[5] = m02 * m21 * d0 - m01 * m02 * m20 + m01 * m12 * m21;
  o.r[6] = -m02 * m10 * d2 + m01 * m10 * m12 - m02 * m12 * m20;
  o.r[7] = m12 * d0 * d1 - m02 * m10 * d1 + m01 * m10 * m12 - m12 * m12 * m21;
  o.r[8] = m12 * d0 * d1 - m02 * m10 * d0 + m02 * m12 * m20 - m12 * m12 * m21;
  o.r[9] = m01 * d1 * d2 + m02 * m21 * d2 + m01 * m02 * m20 - m01 * m01 * m10;
  o.r[10] = m01 * d1 * d2 + m02 * m21 * d1 + m01 * m12 * m21 - m01 * m01 * m10;
  o.r[11] = -m02 * d0 * d2 + m01 * m12 * d0 + m02 * m12 * m21 - m02 * m02 * m20;
  o.r[12] = m02 * d0 * d2 + m01 * m12 * d2 - m01 * m02 * m10 + m02 * m02 * m20;
  o.r[13] = d0 * d1 * d2 - m01 * m10 * d0 + m02 * m20 * d1 - m12 * m21 * d2;
  return o;
}

inline constexpr double disc_weights[14] = {9, 6, 6, 6, 8, 8, 8, 2, 2, 2, 2, 2, 2, 1};

inline double disc_stable(const Mat3& a, const DiagDiff& d) {
  // dx of the transpose is dx with the off-diagonal entries mirrored; no
  // transposed copy is materialized.
  const Dx u = dx(a.e[1], a.e[2], a.e[3], a.e[5], a.e[6], a.e[7], d);
  const Dx v = dx(a.e[3], a.e[6], a.e[1], a.e[7], a.e[2], a.e[5], d);
  double acc = 0.0;
  for (int k = 0; k < 14; ++k) acc += disc_weights[k] * u.r[k] * v.r[k];
  return acc;
}

}  // namespace detail
}  // namespace eig33
