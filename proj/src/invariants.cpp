#include "eig33/invariants.hpp"

#include "invariants_impl.hpp"

namespace eig33 {

// Stable kernel bodies live in invariants_impl.hpp so the eigensolver can
// inline them; this translation unit only exports the public entry points.
// Both TUs are compiled with floating-point contraction disabled so that each
// written operation rounds exactly once.

DiagonalDifferences diagonal_differences(const Mat3& a) {
  const auto d = detail::diagonal_differences(a);
  return {d.d0, d.d1, d.d2};
}

double i1(const Mat3& a) { return detail::i1(a); }

double j2_stable(const Mat3& a) { return detail::j2_stable(a, detail::diagonal_differences(a)); }

double j2_naive(const Mat3& a) {
  const double a00 = a.e[0], a01 = a.e[1], a02 = a.e[2];
  const double a10 = a.e[3], a11 = a.e[4], a12 = a.e[5];
  const double a20 = a.e[6], a21 = a.e[7], a22 = a.e[8];
  return (a00 * a00 - a00 * a11 - a00 * a22 + 3.0 * a01 * a10 + 3.0 * a02 * a20 + a11 * a11 -
          a11 * a22 + 3.0 * a12 * a21 + a22 * a22) /
         3.0;
}

double j2_tensor(const Mat3& a) {
  const Mat3 s = dev(a);
  const Mat3 ss = matmul(s, s);
  return trace(ss) / 2.0;
}

double j3_stable(const Mat3& a) { return detail::j3_stable(a, detail::diagonal_differences(a)); }

double j3_naive(const Mat3& a) {
  const double a00 = a.e[0], a01 = a.e[1], a02 = a.e[2];
  const double a10 = a.e[3], a11 = a.e[4], a12 = a.e[5];
  const double a20 = a.e[6], a21 = a.e[7], a22 = a.e[8];
  return (2.0 * a00 * a00 * a00 - 3.0 * a00 * a00 * a11 - 3.0 * a00 * a00 * a22 +
          9.0 * a00 * a01 * a10 + 9.0 * a00 * a02 * a20 - 3.0 * a00 * a11 * a11 +
          12.0 * a00 * a11 * a22 - 18.0 * a00 * a12 * a21 - 3.0 * a00 * a22 * a22 +
          9.0 * a01 * a10 * a11 - 18.0 * a01 * a10 * a22 + 27.0 * a01 * a12 * a20 +
          27.0 * a02 * a10 * a21 - 18.0 * a02 * a11 * a20 + 9.0 * a02 * a20 * a22 +
          2.0 * a11 * a11 * a11 - 3.0 * a11 * a11 * a22 + 9.0 * a11 * a12 * a21 -
          3.0 * a11 * a22 * a22 + 9.0 * a12 * a21 * a22 + 2.0 * a22 * a22 * a22) /
         27.0;
}

double j3_tensor(const Mat3& a) { return det(dev(a)); }

double disc_stable(const Mat3& a) {
  return detail::disc_stable(a, detail::diagonal_differences(a));
}

double disc_naive(double j2, double j3) { return 4.0 * j2 * j2 * j2 - 27.0 * j3 * j3; }

Mat3 jacobian_j2(const Mat3& a) { return transpose(dev(a)); }

Mat3 jacobian_j3(const Mat3& a) { return dev(cofactor(dev(a))); }

Mat3 jacobian_disc(const Mat3& a) {
  const double j2 = j2_stable(a);
  const double j3 = j3_stable(a);
  const double c2 = 12.0 * j2 * j2;
  const double c3 = 54.0 * j3;
  const Mat3 at = transpose(a);
  const Mat3 cd = cofactor(dev(a));
  Mat3 m;
  for (std::size_t k = 0; k < 9; ++k) m.e[k] = c2 * at.e[k] - c3 * cd.e[k];
  return dev(m);
}

InvariantSet invariants(const Mat3& a, AlgorithmVariant v) {
  InvariantSet s;
  s.i1 = i1(a);
  s.variant = v;
  switch (v) {
    case AlgorithmVariant::Stable:
      s.j2 = j2_stable(a);
      s.j3 = j3_stable(a);
      s.disc = disc_stable(a);
      break;
    case AlgorithmVariant::Naive:
      s.j2 = j2_naive(a);
      s.j3 = j3_naive(a);
      s.disc = disc_naive(s.j2, s.j3);
      break;
    case AlgorithmVariant::NaiveTensor:
      s.j2 = j2_tensor(a);
      s.j3 = j3_tensor(a);
      s.disc = disc_naive(s.j2, s.j3);
      break;
  }
  return s;
}

}  // namespace eig33
