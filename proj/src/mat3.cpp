#include "eig33/mat3.hpp"

#include <cmath>

namespace eig33 {

double trace(const Mat3& a) { return a.e[0] + a.e[4] + a.e[8]; }

Mat3 dev(const Mat3& a) {
  const double m = trace(a) / 3.0;
  Mat3 s = a;
  s.e[0] = a.e[0] - m;
  s.e[4] = a.e[4] - m;
  s.e[8] = a.e[8] - m;
  return s;
}

Mat3 matmul(const Mat3& a, const Mat3& b) {
  Mat3 c;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      c(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
    }
  }
  return c;
}

Mat3 transpose(const Mat3& a) {
  return {{a.e[0], a.e[3], a.e[6], a.e[1], a.e[4], a.e[7], a.e[2], a.e[5], a.e[8]}};
}

Mat3 cofactor(const Mat3& a) {
  const double a00 = a.e[0], a01 = a.e[1], a02 = a.e[2];
  const double a10 = a.e[3], a11 = a.e[4], a12 = a.e[5];
  const double a20 = a.e[6], a21 = a.e[7], a22 = a.e[8];
  Mat3 c;
  c.e[0] = a11 * a22 - a12 * a21;
  c.e[1] = a12 * a20 - a10 * a22;
  c.e[2] = a10 * a21 - a11 * a20;
  c.e[3] = a02 * a21 - a01 * a22;
  c.e[4] = a00 * a22 - a02 * a20;
  c.e[5] = a01 * a20 - a00 * a21;
  c.e[6] = a01 * a12 - a02 * a11;
  c.e[7] = a02 * a10 - a00 * a12;
  c.e[8] = a00 * a11 - a01 * a10;
  return c;
}

double det(const Mat3& a) {
  const double a00 = a.e[0], a01 = a.e[1], a02 = a.e[2];
  const double a10 = a.e[3], a11 = a.e[4], a12 = a.e[5];
  const double a20 = a.e[6], a21 = a.e[7], a22 = a.e[8];
  return a00 * (a11 * a22 - a12 * a21) - a01 * (a10 * a22 - a12 * a20) +
         a02 * (a10 * a21 - a11 * a20);
}

Mat3 inverse_adjugate(const Mat3& a) {
  const double d = det(a);
  if (d == 0.0) throw SingularMatrix{};
  const Mat3 adj = transpose(cofactor(a));
  Mat3 inv;
  for (std::size_t k = 0; k < 9; ++k) inv.e[k] = adj.e[k] / d;
  return inv;
}

double frobenius_norm(const Mat3& a) {
  double s = 0.0;
  for (std::size_t k = 0; k < 9; ++k) s += a.e[k] * a.e[k];
  return std::sqrt(s);
}

}  // namespace eig33
