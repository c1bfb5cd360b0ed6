#pragma once

#include <cstdint>

#include "eig33/mat3.hpp"

namespace eig33 {

/// Angle of the trigonometric eigenvalue formula, in radians within [0, pi].
struct TripleAngle {
  double phi = 0;
};

/// phi = atan2(sqrt(27 * max(disc, 0)), 27 * j3).
///
/// The two-argument arctangent lands in [0, pi] because the first argument is
/// nonnegative: phi = pi/2 on the j3 = 0 axis (disc > 0), phi = 0 for
/// disc <= 0 with j3 > 0, phi = pi for disc <= 0 with j3 < 0.  Negative
/// discriminants are clamped to zero here, which collapses the spectrum
/// estimate toward the double-root configuration.
TripleAngle triple_angle(double j3, double disc);

/// Eigenvalues in ascending order.
///
/// non_real_advisory is set when the computed discriminant is negative beyond
/// the rounding tolerance of its own evaluation, i.e. the input plausibly has
/// a complex conjugate pair; the returned reals are then the clamped
/// projection and carry no spectral meaning.
struct EigenTriple {
  double lambda1 = 0;
  double lambda2 = 0;
  double lambda3 = 0;
  bool non_real_advisory = false;
};

/// Closed-form eigenvalues of a general real 3x3 matrix via the stable
/// invariant kernels.  If fl(J2) <= 0 the triple collapses to the mean
/// (computed in shifted form so scaled identities reproduce exactly).
EigenTriple eigvals(const Mat3& a);

/// Symmetric variant.  Requires max|aij - aji| <= 4 eps_mach max|aij|
/// (throws NotSymmetric otherwise); reads only the upper triangle, mirrors it,
/// and uses squared off-diagonal entries so fl(J2) >= 0 and fl(Delta) >= 0 by
/// construction.  Never sets non_real_advisory.
EigenTriple eigvalss(const Mat3& a);

/// Same formula path fed by the naive invariant kernels; exists for error
/// benchmarking, not for production use.
EigenTriple eigvals_naive(const Mat3& a);

/// Timing kernel for the performance benchmark: evaluates eigvals n times,
/// reloading the input from memory before every evaluation so the loop cannot
/// be hoisted or collapsed, and returns the summed bit patterns of all 3n
/// eigenvalues.  Defined next to eigvals so a timing run measures the solver
/// itself rather than a per-call translation-unit boundary, matching how
/// header-only baselines inline into their loops.
std::uint64_t eigvals_checksum_loop(const Mat3& a, std::uint64_t n);

}  // namespace eig33
