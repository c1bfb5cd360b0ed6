#pragma once

#include <array>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include "eig33/mat3.hpp"

// Reference arithmetic for testing and benchmarking the double-precision
// kernels.  Everything here trades speed for being exactly right: invariants
// are computed in arbitrary-precision rationals (binary64 embeds exactly into
// Q), eigenvalue references by sign-change bisection on the characteristic
// cubic in rational arithmetic, and error bounds in big floats.  Nothing in
// this namespace is meant for production evaluation.

namespace eig33::oracle {

/// Exact rational scalar (GMP-backed).  Conversion from double is exact.
using ExactScalar = boost::multiprecision::mpq_rational;

/// Big binary float used where irrational values (square roots, references)
/// are unavoidable.  Fixed working precision: 100 decimal digits (336 bits).
using BigScalar = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<100>>;

struct ComplexSpectrum : std::domain_error {
  ComplexSpectrum() : std::domain_error("matrix has a complex conjugate eigenvalue pair") {}
};

/// 3x3 matrix over the exact rationals; mirrors the double-precision Mat3
/// operation set so reference values can be computed with zero rounding.
struct RatMat3 {
  std::array<ExactScalar, 9> e{};

  static RatMat3 from(const Mat3& a);

  ExactScalar& operator()(std::size_t i, std::size_t j) { return e[3 * i + j]; }
  const ExactScalar& operator()(std::size_t i, std::size_t j) const { return e[3 * i + j]; }
};

ExactScalar trace(const RatMat3& a);
RatMat3 dev(const RatMat3& a);
RatMat3 matmul(const RatMat3& a, const RatMat3& b);
RatMat3 transpose(const RatMat3& a);
RatMat3 cofactor(const RatMat3& a);
ExactScalar det(const RatMat3& a);
RatMat3 inverse(const RatMat3& a);  // throws SingularMatrix on exact zero determinant
ExactScalar frobenius_sq(const RatMat3& a);

struct ExactInvariants {
  ExactScalar i1, j2, j3, disc;
};

ExactInvariants invariants_exact(const RatMat3& a);
ExactInvariants invariants_exact(const Mat3& a);

/// Reference eigenvalues, ascending, each within abs_tol of the true root of
/// the characteristic cubic.  Root brackets are isolated exactly (rational
/// sign tests; multiplicities split via gcd with the derivative), then
/// narrowed by bisection.  Throws ComplexSpectrum when the exact discriminant
/// is negative.  abs_tol must be positive and at least 1e-60.
std::array<BigScalar, 3> eig_reference(const Mat3& a, double abs_tol = 1e-40);

/// Full reference spectrum, complex pairs included; used by the benchmark
/// harness where the rounded input of a nearly defective matrix may cross
/// into the complex regime.  value[] is sorted ascending by real part;
/// imag[k] is the conjugate-pair imaginary magnitude (zero for real roots).
struct SpectrumRef {
  std::array<BigScalar, 3> value;
  std::array<BigScalar, 3> imag;
  bool complex_pair = false;
};

SpectrumRef spectrum_reference(const Mat3& a, double abs_tol = 1e-40);

/// First-order forward error bounds with unit structural constant; the
/// noise scale each kernel's error is measured against.
struct BoundSet {
  double bound_j2 = 0;    // ||dev A||_F^2 eps
  double bound_j3 = 0;    // ||dev(cof(dev A))||_F ||dev A||_F eps
  double bound_disc = 0;  // ||dev(12 J2^2 A^T - 54 J3 cof(dev A))||_F ||dev A||_F eps
  double bound_eig = 0;   // kappa2 ||A||_F eps
};

BoundSet bounds(const Mat3& a, double kappa2);

/// Spectral condition number of a transform: sqrt of the ratio of the extreme
/// eigenvalues of U^T U, computed through the exact characteristic cubic of
/// the rational Gram matrix.  Throws SingularMatrix when det(U) = 0 exactly.
double kappa2(const Mat3& u);

/// Scientific-notation decimal string with the requested significant digits.
std::string decimal_string(const ExactScalar& x, unsigned digits = 42);
std::string decimal_string(const BigScalar& x, unsigned digits = 42);

}  // namespace eig33::oracle
