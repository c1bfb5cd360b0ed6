#pragma once

#include "eig33/mat3.hpp"

namespace eig33 {

/// Evaluation strategy used to produce an InvariantSet.
///
/// Stable      - difference-based kernels with the compensated association
///               that keeps forward errors proportional to the invariant's
///               own scale rather than the matrix scale.
/// Naive       - textbook monomial expansions, kept for error benchmarking.
/// NaiveTensor - tensor-algebra route (deviator products and determinants),
///               numerically equivalent to Naive in error behaviour.
enum class AlgorithmVariant { Stable, Naive, NaiveTensor };

/// How the cubic discriminant is evaluated.
enum class DiscVariant { StableSOP, NaiveFromJ2J3, TensorFromJ2J3 };

struct InvariantSet {
  double i1 = 0;
  double j2 = 0;
  double j3 = 0;
  double disc = 0;
  AlgorithmVariant variant = AlgorithmVariant::Stable;
};

/// d0 = a00-a11, d1 = a00-a22, d2 = a11-a22.
/// In exact arithmetic d0 - d1 + d2 = 0; in binary64 each difference carries
/// one rounding.  All stable kernels consume the diagonal only through these
/// differences, which makes every kernel vanish identically on scaled
/// identities.
struct DiagonalDifferences {
  double d0 = 0, d1 = 0, d2 = 0;
};

DiagonalDifferences diagonal_differences(const Mat3& a);

/// First invariant: trace, summed left to right.
double i1(const Mat3& a);

// Second deviatoric invariant J2 = -I2(dev A) = tr(dev(A)^2)/2.
double j2_stable(const Mat3& a);
double j2_naive(const Mat3& a);
double j2_tensor(const Mat3& a);

// Third deviatoric invariant J3 = det(dev A).
double j3_stable(const Mat3& a);
double j3_naive(const Mat3& a);
double j3_tensor(const Mat3& a);

/// Discriminant of the characteristic cubic, Delta = 4 J2^3 - 27 J3^2,
/// evaluated as a weighted sum of 14 products of difference polynomials
/// (one factor from A, one from A^T).  No clamping: the raw signed value is
/// returned.
double disc_stable(const Mat3& a);

/// Delta from already-computed invariants: 4 j2^3 - 27 j3^2.
double disc_naive(double j2, double j3);

/// Gradient of J2 with respect to the matrix entries: dev(A)^T.
Mat3 jacobian_j2(const Mat3& a);

/// Gradient of J3: dev(cof(dev A)).
Mat3 jacobian_j3(const Mat3& a);

/// Gradient of Delta: dev(12 J2^2 A^T - 54 J3 cof(dev A)), with J2 and J3
/// taken from the stable kernels.
Mat3 jacobian_disc(const Mat3& a);

/// Convenience bundle.  The discriminant route is paired with the variant:
/// Stable -> StableSOP, Naive -> NaiveFromJ2J3 on naive invariants,
/// NaiveTensor -> NaiveFromJ2J3 on tensor invariants.
InvariantSet invariants(const Mat3& a, AlgorithmVariant v);

}  // namespace eig33
