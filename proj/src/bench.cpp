#include "eig33/bench.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "eig33/invariants.hpp"
#include "eig33/oracle.hpp"

#if defined(EIG33_HAVE_EIGEN_BASELINE)
#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#endif

namespace eig33::bench {

namespace {

using oracle::BigScalar;
using oracle::ExactScalar;

std::string fmt(double x) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

// Forces the value to be treated as externally modifiable between timed
// evaluations, so loop-invariant code motion cannot collapse the benchmark.
template <class T>
inline void clobber(T& value) {
  asm volatile("" : "+m"(value) : : "memory");
}

std::uint64_t bits(double x) { return std::bit_cast<std::uint64_t>(x); }

double to_double(const BigScalar& x) { return x.convert_to<double>(); }

// |fl - exact| computed without intermediate rounding, then rounded once.
double abs_error(double fl_value, const ExactScalar& exact) {
  return to_double(BigScalar(abs(ExactScalar(fl_value) - exact)));
}

}  // namespace

Mat3 make_transform(const Transform& t) {
  // One rounding per entry: sqrt2 is the correctly rounded constant and
  // halving is exact, so q is the correctly rounded 1/sqrt(2).
  constexpr double q = std::numbers::sqrt2_v<double> / 2.0;
  switch (t.kind) {
    case Transform::Kind::Symm:
      return {{q, -0.5, 0.5, q, 0.5, -0.5, 0.0, q, q}};
    case Transform::Kind::U1:
      return {{1, -1, 1, 1, 1, 1, -1, -1, 1}};
    case Transform::Kind::U2:
      if (t.gamma == 0.0) throw std::invalid_argument("gamma must be nonzero");
      return {{1, 1, 1, 1, 0, 1, 2, 1, 2.0 + t.gamma}};
  }
  throw std::logic_error("unknown transform kind");
}

BenchmarkCase generate_case(PathKind path, const Transform& t, double delta) {
  const Mat3 u = make_transform(t);
  const double low = path == PathKind::D1 ? 1.0 : -1.0;
  const Mat3 d = Mat3::diagonal(low, 1.0, 1.0 + delta);
  const Mat3 uinv = inverse_adjugate(u);
  return {path, t, delta, matmul(matmul(u, d), uinv)};
}

std::vector<double> default_delta_grid() {
  std::vector<double> g;
  g.reserve(61);
  for (int k = 4; k <= 64; ++k) g.push_back(std::pow(10.0, -k / 4.0));
  return g;
}

std::vector<ErrorRecord> sweep_invariants(PathKind path, const Transform& t,
                                          const std::vector<double>& deltas, Quantity q) {
  std::vector<ErrorRecord> out;
  out.reserve(deltas.size());
  for (const double delta : deltas) {
    const BenchmarkCase c = generate_case(path, t, delta);
    const oracle::ExactInvariants ex = oracle::invariants_exact(c.matrix);
    const oracle::BoundSet bs = oracle::bounds(c.matrix, 0.0);

    ErrorRecord r;
    r.delta = delta;
    switch (q) {
      case Quantity::J2:
        r.exact = oracle::decimal_string(ex.j2);
        r.err_stable = abs_error(j2_stable(c.matrix), ex.j2);
        r.err_naive = abs_error(j2_naive(c.matrix), ex.j2);
        r.err_third = abs_error(j2_tensor(c.matrix), ex.j2);
        r.bound = bs.bound_j2;
        break;
      case Quantity::J3:
        r.exact = oracle::decimal_string(ex.j3);
        r.err_stable = abs_error(j3_stable(c.matrix), ex.j3);
        r.err_naive = abs_error(j3_naive(c.matrix), ex.j3);
        r.err_third = abs_error(j3_tensor(c.matrix), ex.j3);
        r.bound = bs.bound_j3;
        break;
      case Quantity::Disc:
        r.exact = oracle::decimal_string(ex.disc);
        r.err_stable = abs_error(disc_stable(c.matrix), ex.disc);
        r.err_naive = abs_error(disc_naive(j2_naive(c.matrix), j3_naive(c.matrix)), ex.disc);
        r.err_third = abs_error(disc_naive(j2_tensor(c.matrix), j3_tensor(c.matrix)), ex.disc);
        r.bound = bs.bound_disc;
        break;
    }
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

// Distance of a computed real triple to the reference spectrum: ascending
// alignment, conjugate-pair imaginary parts folded in quadrature.
double spectrum_error(const EigenTriple& got, const oracle::SpectrumRef& ref) {
  const double g[3] = {got.lambda1, got.lambda2, got.lambda3};
  BigScalar worst = 0;
  for (int k = 0; k < 3; ++k) {
    const BigScalar dre = BigScalar(g[k]) - ref.value[k];
    const BigScalar d2 = dre * dre + ref.imag[k] * ref.imag[k];
    if (d2 > worst) worst = d2;
  }
  return to_double(sqrt(worst));
}

}  // namespace

std::vector<ErrorRecord> sweep_eigvals(PathKind path, const Transform& t,
                                       const std::vector<double>& deltas) {
  const double kappa = oracle::kappa2(make_transform(t));
  std::vector<ErrorRecord> out;
  out.reserve(deltas.size());
  for (const double delta : deltas) {
    const BenchmarkCase c = generate_case(path, t, delta);
    ErrorRecord r;
    r.delta = delta;
    try {
      const oracle::SpectrumRef ref = oracle::spectrum_reference(c.matrix);
      r.err_stable = spectrum_error(eigvals(c.matrix), ref);
      r.err_naive = spectrum_error(eigvals_naive(c.matrix), ref);
      r.err_third = baseline_available()
                        ? spectrum_error(baseline_eigvals(c.matrix), ref)
                        : std::numeric_limits<double>::quiet_NaN();
      r.bound = oracle::bounds(c.matrix, kappa).bound_eig;
    } catch (const std::exception& e) {
      r.ok = false;
      r.note = e.what();
      r.err_stable = r.err_naive = r.err_third = std::numeric_limits<double>::quiet_NaN();
      r.bound = std::numeric_limits<double>::quiet_NaN();
    }
    out.push_back(std::move(r));
  }
  return out;
}

void write_sweep(const std::vector<ErrorRecord>& records, SweepKind kind, std::ostream& os) {
  if (kind == SweepKind::Invariants) {
    os << "delta,exact,err_stable,err_naive,err_tensor,bound\n";
    for (const auto& r : records) {
      os << fmt(r.delta) << ',' << r.exact << ',' << fmt(r.err_stable) << ',' << fmt(r.err_naive)
         << ',' << fmt(r.err_third) << ',' << fmt(r.bound) << '\n';
    }
  } else {
    os << "delta,err_stable,err_naive,err_baseline,bound\n";
    for (const auto& r : records) {
      os << fmt(r.delta) << ',' << fmt(r.err_stable) << ',' << fmt(r.err_naive) << ','
         << fmt(r.err_third) << ',' << fmt(r.bound) << '\n';
    }
  }
}

void write_sweep(const std::vector<ErrorRecord>& records, SweepKind kind,
                 const std::string& path) {
  std::ofstream f(path, std::ios::binary);  // binary: keep LF endings everywhere
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  write_sweep(records, kind, f);
  if (!f.flush()) throw std::runtime_error("write failed: " + path);
}

bool baseline_available() {
#if defined(EIG33_HAVE_EIGEN_BASELINE)
  return true;
#else
  return false;
#endif
}

EigenTriple baseline_eigvals(const Mat3& a) {
#if defined(EIG33_HAVE_EIGEN_BASELINE)
  Eigen::Matrix3d m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = a(i, j);
  Eigen::EigenSolver<Eigen::Matrix3d> es(m, /*computeEigenvectors=*/false);
  double v[3] = {es.eigenvalues()[0].real(), es.eigenvalues()[1].real(),
                 es.eigenvalues()[2].real()};
  std::sort(v, v + 3);
  return {v[0], v[1], v[2], false};
#else
  (void)a;
  throw std::runtime_error("no baseline eigensolver in this build");
#endif
}

namespace {

struct Timing {
  double mean_ns = 0, std_ns = 0, fastest_ns = 0;
};

template <class F>
Timing timed_blocks(F&& evaluate_block, std::uint64_t reps, std::uint64_t per_rep) {
  std::vector<double> block_ns(reps);
  for (std::uint64_t r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    evaluate_block(per_rep);
    const auto t1 = std::chrono::steady_clock::now();
    block_ns[r] = std::chrono::duration<double, std::nano>(t1 - t0).count() /
                  static_cast<double>(per_rep);
  }
  Timing t;
  double acc = 0;
  for (double x : block_ns) acc += x;
  t.mean_ns = acc / static_cast<double>(reps);
  double var = 0;
  for (double x : block_ns) var += (x - t.mean_ns) * (x - t.mean_ns);
  t.std_ns = std::sqrt(var / static_cast<double>(reps));
  t.fastest_ns = *std::min_element(block_ns.begin(), block_ns.end());
  return t;
}

}  // namespace

PerfResult perf_benchmark(const BenchmarkCase& c, std::uint64_t iterations) {
  if (iterations < 100000) throw std::invalid_argument("iterations must be at least 1e5");
  const std::uint64_t reps = 10;
  const std::uint64_t per_rep = iterations / reps;

  PerfResult res;
  res.iterations = reps * per_rep;
  res.baseline_available = baseline_available();

  const Mat3 a = c.matrix;
  std::uint64_t sum = 0;
  const auto ours_block = [&](std::uint64_t n) { sum += eigvals_checksum_loop(a, n); };
  // Warm-up outside the measured blocks.
  ours_block(per_rep / 10 + 1);
  sum = 0;
  const Timing ours = timed_blocks(ours_block, reps, per_rep);
  res.ours_mean_ns = ours.mean_ns;
  res.ours_std_ns = ours.std_ns;
  res.ours_fastest_ns = ours.fastest_ns;
  res.ours_checksum = sum;

#if defined(EIG33_HAVE_EIGEN_BASELINE)
  Eigen::Matrix3d m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = c.matrix(i, j);
  std::uint64_t bsum = 0;
  Eigen::EigenSolver<Eigen::Matrix3d> es;
  const auto base_block = [&](std::uint64_t n) {
    for (std::uint64_t i = 0; i < n; ++i) {
      clobber(m);
      es.compute(m, /*computeEigenvectors=*/false);
      const auto& ev = es.eigenvalues();
      bsum += bits(ev[0].real()) + bits(ev[1].real()) + bits(ev[2].real());
    }
  };
  base_block(per_rep / 10 + 1);
  bsum = 0;
  const Timing base = timed_blocks(base_block, reps, per_rep);
  res.baseline_mean_ns = base.mean_ns;
  res.baseline_std_ns = base.std_ns;
  res.baseline_fastest_ns = base.fastest_ns;
  res.baseline_checksum = bsum;
#endif
  return res;
}

void write_perf_report(const PerfResult& r, std::ostream& os) {
  os << "evaluations: " << r.iterations << "\n";
  os << "stable closed-form: mean " << fmt(r.ours_mean_ns) << " ns, std " << fmt(r.ours_std_ns)
     << " ns, fastest " << fmt(r.ours_fastest_ns) << " ns, checksum " << r.ours_checksum << "\n";
  if (r.baseline_available) {
    os << "ecosystem baseline: mean " << fmt(r.baseline_mean_ns) << " ns, std "
       << fmt(r.baseline_std_ns) << " ns, fastest " << fmt(r.baseline_fastest_ns)
       << " ns, checksum " << r.baseline_checksum << "\n";
    os << "speedup: " << fmt(r.baseline_mean_ns / r.ours_mean_ns) << "x\n";
  } else {
    os << "ecosystem baseline: unavailable in this build\n";
  }
}

}  // namespace eig33::bench
