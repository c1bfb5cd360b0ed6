#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "eig33/bench.hpp"
#include "eig33/mat3.hpp"
#include "eig33/oracle.hpp"

using namespace eig33;
using namespace eig33::bench;
namespace orc = eig33::oracle;

namespace {

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string line;
  while (std::getline(is, line)) out.push_back(line);
  return out;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string f;
  while (std::getline(is, f, ',')) out.push_back(f);
  return out;
}

}  // namespace

TEST_CASE("make_transform produces the fixed study matrices") {
  const double q = std::numbers::sqrt2 / 2.0;
  const Mat3 symm = make_transform({Transform::Kind::Symm});
  CHECK(symm == Mat3{{q, -0.5, 0.5, q, 0.5, -0.5, 0.0, q, q}});

  const Mat3 u1 = make_transform({Transform::Kind::U1});
  CHECK(u1 == Mat3{{1, -1, 1, 1, 1, 1, -1, -1, 1}});

  const Mat3 u2 = make_transform({Transform::Kind::U2, 1e-3});
  CHECK(u2 == Mat3{{1, 1, 1, 1, 0, 1, 2, 1, 2.0 + 1e-3}});
  CHECK_THROWS_AS((void)make_transform({Transform::Kind::U2, 0.0}),
                  std::invalid_argument);
}

TEST_CASE("default_delta_grid spans 16 decades in quarter-decade steps") {
  const std::vector<double> g = default_delta_grid();
  REQUIRE(g.size() == 61);
  CHECK(std::fabs(g.front() - 1e-1) <= 1e-15 * 1e-1);
  CHECK(std::fabs(g.back() - 1e-16) <= 1e-15 * 1e-16);
  for (std::size_t i = 1; i < g.size(); ++i) {
    CHECK(g[i] < g[i - 1]);
    CHECK(std::fabs(std::log10(g[i] / g[i - 1]) + 0.25) <= 1e-9);
  }
}

TEST_CASE("generate_case reproduces the near-double-root study matrix") {
  const Mat3 a = generate_case(PathKind::D2, {Transform::Kind::U1}, 1e-14).matrix;
  const double want[9] = {0.0,
                          4.9960036108132044e-15,
                          1.0000000000000049,
                          -1.0,
                          1.0000000000000049,
                          1.0000000000000049,
                          1.0,
                          4.9960036108132044e-15,
                          4.9960036108132044e-15};
  for (int k = 0; k < 9; ++k) CHECK(std::fabs(a.e[k] - want[k]) <= 1e-15);
}

TEST_CASE("generate_case spectra match the prescribed eigenvalues") {
  const auto c = generate_case(PathKind::D1, {Transform::Kind::U1}, 1e-2);
  const auto ref = orc::eig_reference(c.matrix);
  const double kappa = orc::kappa2(make_transform({Transform::Kind::U1}));
  const double tol = kappa * frobenius_norm(c.matrix) * eps_mach;
  const double mu[3] = {1.0, 1.0, 1.01};
  for (int i = 0; i < 3; ++i) {
    double best = 1e300;
    for (int j = 0; j < 3; ++j)
      best = std::fmin(best, std::fabs(ref[j].convert_to<double>() - mu[i]));
    CHECK(best <= tol);
  }
}

TEST_CASE("generate_case on the rotation corpus is bitwise symmetric") {
  for (const double delta : default_delta_grid()) {
    for (const PathKind p : {PathKind::D1, PathKind::D2}) {
      const Mat3 a = generate_case(p, {Transform::Kind::Symm}, delta).matrix;
      CHECK(a.e[1] == a.e[3]);
      CHECK(a.e[2] == a.e[6]);
      CHECK(a.e[5] == a.e[7]);
    }
  }
}

TEST_CASE("generate_case collapses below resolvable delta") {
  // At delta = 1e-16 the prescribed 1 + delta rounds to 1, so the whole case
  // rounds back to the identity and carries no signal.
  CHECK(generate_case(PathKind::D1, {Transform::Kind::Symm}, 1e-16).matrix ==
        Mat3::identity());
  CHECK(generate_case(PathKind::D1, {Transform::Kind::U1}, 1e-16).matrix ==
        Mat3::identity());
}

TEST_CASE("generate_case is deterministic") {
  const Mat3 a = generate_case(PathKind::D2, {Transform::Kind::U2, 1e-3}, 1e-7).matrix;
  const Mat3 b = generate_case(PathKind::D2, {Transform::Kind::U2, 1e-3}, 1e-7).matrix;
  CHECK(a == b);
}

TEST_CASE("invariant sweeps stay within ten times the first-order bound") {
  const std::vector<double> grid = default_delta_grid();
  for (const PathKind p : {PathKind::D1, PathKind::D2}) {
    for (const Transform::Kind tk : {Transform::Kind::Symm, Transform::Kind::U1}) {
      for (const Quantity q : {Quantity::J2, Quantity::J3, Quantity::Disc}) {
        const auto recs = sweep_invariants(p, {tk}, grid, q);
        REQUIRE(recs.size() == grid.size());
        for (const auto& r : recs) {
          CHECK(r.ok);
          CHECK(r.err_stable >= 0.0);
          CHECK(r.err_stable <= 10.0 * r.bound);
        }
      }
    }
  }
}

TEST_CASE("sweep records carry 40-digit reference values") {
  const auto recs = sweep_invariants(PathKind::D1, {Transform::Kind::Symm},
                                     default_delta_grid(), Quantity::J2);
  for (const auto& r : recs) {
    REQUIRE(!r.exact.empty());
    if (std::strtod(r.exact.c_str(), nullptr) != 0.0) CHECK(r.exact.size() >= 40);
  }
}

TEST_CASE("exact J2 scales quadratically in delta on the cluster path") {
  const auto recs = sweep_invariants(PathKind::D1, {Transform::Kind::Symm},
                                     default_delta_grid(), Quantity::J2);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (const auto& r : recs) {
    if (r.delta < 1e-8 || r.delta > 1e-4) continue;
    const double x = std::log10(r.delta);
    const double y = std::log10(std::strtod(r.exact.c_str(), nullptr));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  REQUIRE(n >= 10);
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  CHECK(std::fabs(slope - 2.0) <= 0.3);
}

TEST_CASE("eigenvalue sweep on the symmetric corpus meets its bound") {
  const auto recs =
      sweep_eigvals(PathKind::D2, {Transform::Kind::Symm}, default_delta_grid());
  REQUIRE(recs.size() == 61);
  for (const auto& r : recs) {
    CHECK(r.ok);
    CHECK(r.err_stable <= 100.0 * r.bound);
    if (baseline_available()) CHECK(std::isfinite(r.err_third));
  }
}

TEST_CASE("sweeps are deterministic") {
  const std::vector<double> grid{1e-4, 1e-8, 1e-12};
  const auto a = sweep_invariants(PathKind::D2, {Transform::Kind::U1}, grid, Quantity::Disc);
  const auto b = sweep_invariants(PathKind::D2, {Transform::Kind::U1}, grid, Quantity::Disc);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].err_stable == b[i].err_stable);
    CHECK(a[i].err_naive == b[i].err_naive);
    CHECK(a[i].err_third == b[i].err_third);
    CHECK(a[i].bound == b[i].bound);
    CHECK(a[i].exact == b[i].exact);
  }
}

TEST_CASE("write_sweep emits the documented CSV layouts") {
  std::ostringstream empty_inv;
  write_sweep({}, SweepKind::Invariants, empty_inv);
  CHECK(empty_inv.str() == "delta,exact,err_stable,err_naive,err_tensor,bound\n");

  std::ostringstream empty_eig;
  write_sweep({}, SweepKind::Eigvals, empty_eig);
  CHECK(empty_eig.str() == "delta,err_stable,err_naive,err_baseline,bound\n");

  const std::vector<double> grid{1e-6, 1e-10};
  const auto recs = sweep_invariants(PathKind::D1, {Transform::Kind::U1}, grid, Quantity::J3);
  std::ostringstream os;
  write_sweep(recs, SweepKind::Invariants, os);
  const auto lines = split_lines(os.str());
  REQUIRE(lines.size() == 3);

  // Numeric fields round-trip bitwise through the shortest decimal form.
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const auto f = split_fields(lines[i + 1]);
    REQUIRE(f.size() == 6);
    CHECK(std::strtod(f[0].c_str(), nullptr) == recs[i].delta);
    CHECK(std::strtod(f[2].c_str(), nullptr) == recs[i].err_stable);
    CHECK(std::strtod(f[3].c_str(), nullptr) == recs[i].err_naive);
    CHECK(std::strtod(f[4].c_str(), nullptr) == recs[i].err_third);
    CHECK(std::strtod(f[5].c_str(), nullptr) == recs[i].bound);
    CHECK(f[1] == recs[i].exact);
  }
}

TEST_CASE("perf_benchmark validates iteration count and repeats checksums") {
  const BenchmarkCase c = generate_case(PathKind::D2, {Transform::Kind::U1}, 1e-14);
  CHECK_THROWS_AS((void)perf_benchmark(c, 99999), std::invalid_argument);

  const PerfResult a = perf_benchmark(c, 100000);
  const PerfResult b = perf_benchmark(c, 100000);
  CHECK(a.iterations == 100000);
  CHECK(a.ours_mean_ns > 0.0);
  CHECK(a.ours_fastest_ns <= a.ours_mean_ns);
  CHECK(a.ours_checksum == b.ours_checksum);
  CHECK(a.baseline_available == baseline_available());
  if (a.baseline_available) {
    CHECK(a.baseline_checksum == b.baseline_checksum);
    CHECK(a.baseline_mean_ns > 0.0);
  }
}

TEST_CASE("write_perf_report lists one row per method") {
  const BenchmarkCase c = generate_case(PathKind::D2, {Transform::Kind::U1}, 1e-14);
  const PerfResult r = perf_benchmark(c, 100000);
  std::ostringstream os;
  write_perf_report(r, os);
  const std::string s = os.str();
  CHECK(s.find("evaluations: 100000") != std::string::npos);
  CHECK(s.find("stable closed-form:") != std::string::npos);
  CHECK(s.find("ecosystem baseline:") != std::string::npos);
  if (r.baseline_available) CHECK(s.find("speedup:") != std::string::npos);
}
