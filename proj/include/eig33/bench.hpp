#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "eig33/eigensolver.hpp"
#include "eig33/mat3.hpp"

// Reproduction harness for the accuracy and speed experiments: families of
// 3x3 matrices with prescribed spectra {1, 1, 1+delta} or {-1, 1, 1+delta}
// pushed through similarity transforms of increasing condition number, swept
// over a log grid of delta, with forward errors measured against the exact
// oracle and written as CSV.

namespace eig33::bench {

/// Prescribed-spectrum path: D1 = diag(1, 1, 1+delta) (triple-root limit),
/// D2 = diag(-1, 1, 1+delta) (double-root limit).
enum class PathKind { D1, D2 };

/// Similarity transform applied to the path.
///   Symm: orthogonal (kappa2 = 1), rows built from 1/sqrt(2) and 1/2.
///   U1:   entries in {-1, 1} (kappa2 = 2).
///   U2:   near-singular family; gamma controls det = -gamma
///         (kappa2 ~ 9e3 at gamma = 1e-3).
struct Transform {
  enum class Kind { Symm, U1, U2 } kind = Kind::U1;
  double gamma = 1e-3;  // read only when kind == U2; must be nonzero
};

enum class Quantity { J2, J3, Disc };

struct BenchmarkCase {
  PathKind path = PathKind::D1;
  Transform transform;
  double delta = 0;
  Mat3 matrix;
};

/// The transform matrix itself (entries rounded once to binary64).
Mat3 make_transform(const Transform& t);

/// fl(U D U^-1) with U^-1 via inverse_adjugate, association (U D) U^-1.
/// Propagates SingularMatrix when U is singular in double precision.
BenchmarkCase generate_case(PathKind path, const Transform& t, double delta);

/// 61 deltas 10^(-k/4), k = 4..64, descending from 1e-1 to 1e-16.
std::vector<double> default_delta_grid();

/// One sweep point.  err_third is the tensor-variant error in invariant
/// sweeps and the ecosystem-baseline error in eigenvalue sweeps.  exact is
/// the oracle value at >= 40 significant digits (empty in eigenvalue sweeps).
/// A point whose reference could not be produced is recorded with ok = false
/// and NaN errors; the sweep continues.
struct ErrorRecord {
  double delta = 0;
  std::string exact;
  double err_stable = 0;
  double err_naive = 0;
  double err_third = 0;
  double bound = 0;
  bool ok = true;
  std::string note;
};

/// Absolute forward errors |fl(q(A)) - q_exact(A)| of the three evaluation
/// variants of one invariant, plus the matching first-order bound.
std::vector<ErrorRecord> sweep_invariants(PathKind path, const Transform& t,
                                          const std::vector<double>& deltas, Quantity q);

/// Max-abs eigenvalue errors after ascending alignment for the stable solver,
/// the naive solver, and the ecosystem baseline, against the bisection
/// reference; bound = kappa2(U) ||A||_F eps.  When the rounded input's exact
/// spectrum has a conjugate pair, the pair's imaginary magnitude is folded
/// into the distance and the point is kept.
std::vector<ErrorRecord> sweep_eigvals(PathKind path, const Transform& t,
                                       const std::vector<double>& deltas);

enum class SweepKind { Invariants, Eigvals };

/// CSV, LF line endings.  Headers:
///   invariants: delta,exact,err_stable,err_naive,err_tensor,bound
///   eigvals:    delta,err_stable,err_naive,err_baseline,bound
/// Numeric fields are shortest round-trip decimals.
void write_sweep(const std::vector<ErrorRecord>& records, SweepKind kind, std::ostream& os);
void write_sweep(const std::vector<ErrorRecord>& records, SweepKind kind,
                 const std::string& path);

/// Wall-clock comparison on one matrix.  Total work is `iterations`
/// evaluations (>= 1e5), split into >= 10 repetition blocks; mean/std are
/// across block means, fastest is the best block.  Checksums accumulate the
/// bit patterns of every returned eigenvalue (wraparound uint64), so two runs
/// of the same build must agree bitwise.  baseline_available is false when no
/// ecosystem eigensolver was compiled in; this build always has one (Eigen),
/// so the fallback exists but cannot fire.
struct PerfResult {
  std::uint64_t iterations = 0;
  double ours_mean_ns = 0;
  double ours_std_ns = 0;
  double ours_fastest_ns = 0;
  double baseline_mean_ns = 0;
  double baseline_std_ns = 0;
  double baseline_fastest_ns = 0;
  std::uint64_t ours_checksum = 0;
  std::uint64_t baseline_checksum = 0;
  bool baseline_available = false;
};

PerfResult perf_benchmark(const BenchmarkCase& c, std::uint64_t iterations);

void write_perf_report(const PerfResult& r, std::ostream& os);

/// Eigenvalues from the ecosystem baseline (general dense solver): real parts
/// of its computed spectrum, ascending.  Exposed for the error sweeps.
EigenTriple baseline_eigvals(const Mat3& a);

/// False when the build carries no baseline solver.
bool baseline_available();

}  // namespace eig33::bench
