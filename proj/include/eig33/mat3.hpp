#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>

namespace eig33 {

// Unit roundoff of binary64.
inline constexpr double eps_mach = 0x1p-53;

struct SingularMatrix : std::domain_error {
  SingularMatrix() : std::domain_error("matrix is singular in double precision") {}
};

struct NotSymmetric : std::domain_error {
  NotSymmetric() : std::domain_error("matrix is not symmetric to working accuracy") {}
};

/// Real 3x3 matrix of IEEE-754 doubles, row-major storage.
///
/// Plain value type: aggregate-initialisable with nine entries
/// (a00, a01, a02, a10, ..., a22).
struct Mat3 {
  std::array<double, 9> e{};

  constexpr double& operator()(std::size_t i, std::size_t j) { return e[3 * i + j]; }
  constexpr const double& operator()(std::size_t i, std::size_t j) const { return e[3 * i + j]; }

  static constexpr Mat3 zero() { return {}; }
  static constexpr Mat3 identity() { return {{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }
  static constexpr Mat3 diagonal(double d0, double d1, double d2) {
    return {{d0, 0, 0, 0, d1, 0, 0, 0, d2}};
  }
  static constexpr Mat3 scaled_identity(double a) { return diagonal(a, a, a); }

  friend constexpr bool operator==(const Mat3&, const Mat3&) = default;
};

/// Small fixed-size column vector; holds diagonals and eigenvalue triples
/// before ordering is imposed.
struct Vec3 {
  double x0 = 0, x1 = 0, x2 = 0;

  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr Vec3 diag_of(const Mat3& a) { return {a.e[0], a.e[4], a.e[8]}; }

double trace(const Mat3& a);

/// Deviatoric part A - (trace(A)/3) I.  The diagonal shift is computed once
/// and subtracted entrywise; off-diagonal entries are copied unchanged.
Mat3 dev(const Mat3& a);

/// Product AB; each entry is a 3-term dot product accumulated left to right.
Mat3 matmul(const Mat3& a, const Mat3& b);

Mat3 transpose(const Mat3& a);

/// Cofactor matrix; every 2x2 minor is evaluated as one product minus another.
Mat3 cofactor(const Mat3& a);

/// Determinant by cofactor expansion along row 0.
double det(const Mat3& a);

/// Inverse via adjugate over determinant.  Throws SingularMatrix when the
/// determinant evaluates to zero in double precision.
Mat3 inverse_adjugate(const Mat3& a);

/// Frobenius norm: sqrt of the sum of squared entries, accumulated in row-major
/// order.
double frobenius_norm(const Mat3& a);

}  // namespace eig33
