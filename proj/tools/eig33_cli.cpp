// Command-line front end: eigenvalue evaluation plus the accuracy and
// performance benchmark suites.  All file output is buffered in memory and
// written only after the computation succeeds, so a failed invocation never
// leaves a partial file behind.
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eig33/bench.hpp"
#include "eig33/eigensolver.hpp"
#include "eig33/mat3.hpp"

namespace {

using namespace eig33;
using namespace eig33::bench;

std::string shortest(double x) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << content;
  f.flush();
  if (!f) throw std::runtime_error("write failed: " + path);
}

PathKind parse_path(const std::string& s) {
  return s == "d2" ? PathKind::D2 : PathKind::D1;
}

Transform parse_transform(const std::string& s, double gamma) {
  if (s == "symm") return {Transform::Kind::Symm};
  if (s == "u2") return {Transform::Kind::U2, gamma};
  return {Transform::Kind::U1};
}

// Log-uniform descending grid from delta_max to delta_min inclusive.  With
// the default 1e-1 .. 1e-16 range and 61 points this reproduces the standard
// quarter-decade study grid.
std::vector<double> make_grid(double delta_min, double delta_max, int points) {
  std::vector<double> g;
  g.reserve(points);
  const double hi = std::log10(delta_max), lo = std::log10(delta_min);
  for (int i = 0; i < points; ++i)
    g.push_back(std::pow(10.0, hi + (lo - hi) * i / double(points - 1)));
  return g;
}

int run_eigvals(const std::string& input_file, const std::string& output) {
  std::istream* in = &std::cin;
  std::ifstream file;
  if (!input_file.empty()) {
    file.open(input_file);
    if (!file) throw std::runtime_error("cannot open input file: " + input_file);
    in = &file;
  }
  Mat3 a;
  for (double& x : a.e)
    if (!(*in >> x)) throw std::runtime_error("expected 9 whitespace-separated numbers");
  std::string extra;
  if (*in >> extra) throw std::runtime_error("trailing input after 9 numbers: " + extra);

  const EigenTriple t = eigvals(a);
  if (t.non_real_advisory)
    std::cerr << "warning: discriminant is negative beyond rounding tolerance; "
                 "the spectrum contains a complex pair and the printed values "
                 "are a real surrogate\n";
  std::string out;
  out += shortest(t.lambda1);
  out += '\n';
  out += shortest(t.lambda2);
  out += '\n';
  out += shortest(t.lambda3);
  out += '\n';
  write_output(output, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerically stable invariants and eigenvalues of 3x3 matrices"};
  app.require_subcommand(1);

  std::string path_s = "d1", transform_s = "u1", quantity_s, output, input_file;
  double gamma = 1e-3, delta_min = 1e-16, delta_max = 1e-1, perf_delta = 1e-14;
  int points = 61;
  std::uint64_t iterations = 1000000;

  CLI::App* eig = app.add_subcommand("eigvals", "eigenvalues of one matrix (9 numbers, row-major)");
  eig->add_option("file", input_file, "input file (default: stdin)");
  eig->add_option("--output", output, "output file (default: stdout)");

  const auto add_corpus_flags = [&](CLI::App* cmd, bool with_grid) {
    cmd->add_option("--path", path_s, "spectrum path")
        ->check(CLI::IsMember({"d1", "d2"}))
        ->capture_default_str();
    cmd->add_option("--transform", transform_s, "similarity transform")
        ->check(CLI::IsMember({"symm", "u1", "u2"}))
        ->capture_default_str();
    cmd->add_option("--gamma", gamma, "skew parameter, only valid with --transform u2")
        ->capture_default_str();
    cmd->add_option("--output", output, "output file (default: stdout)");
    if (with_grid) {
      cmd->add_option("--delta-min", delta_min, "smallest delta")->capture_default_str();
      cmd->add_option("--delta-max", delta_max, "largest delta")->capture_default_str();
      cmd->add_option("--points", points, "grid size")
          ->check(CLI::Range(2, 100000))
          ->capture_default_str();
    }
  };

  CLI::App* binv = app.add_subcommand("bench-invariants", "invariant error sweep (CSV)");
  add_corpus_flags(binv, true);
  binv->add_option("--quantity", quantity_s, "invariant to sweep")
      ->check(CLI::IsMember({"j2", "j3", "disc"}))
      ->required();

  CLI::App* beig = app.add_subcommand("bench-eigvals", "eigenvalue error sweep (CSV)");
  add_corpus_flags(beig, true);

  CLI::App* bperf = app.add_subcommand("bench-perf", "timing of stable vs baseline solver");
  add_corpus_flags(bperf, false);
  bperf->add_option("--delta-min", perf_delta, "delta of the evaluated case")
      ->capture_default_str();
  bperf->add_option("--iterations", iterations, "total evaluations")
      ->check(CLI::Range(std::uint64_t{100000}, std::uint64_t{10000000000}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  CLI::App* active = eig;
  if (app.got_subcommand(binv)) active = binv;
  if (app.got_subcommand(beig)) active = beig;
  if (app.got_subcommand(bperf)) active = bperf;
  if (active != eig && active->count("--gamma") > 0 && transform_s != "u2") {
    std::cerr << "usage error: --gamma is only valid with --transform u2\n";
    return 2;
  }
  if ((active == binv || active == beig) && delta_min >= delta_max) {
    std::cerr << "usage error: --delta-min must be strictly less than --delta-max\n";
    return 2;
  }

  try {
    if (active == eig) return run_eigvals(input_file, output);

    const PathKind path = parse_path(path_s);
    const Transform transform = parse_transform(transform_s, gamma);

    if (active == binv || active == beig) {
      const std::vector<double> grid = make_grid(delta_min, delta_max, points);
      std::ostringstream os;
      if (active == binv) {
        const Quantity q = quantity_s == "j2"   ? Quantity::J2
                           : quantity_s == "j3" ? Quantity::J3
                                                : Quantity::Disc;
        write_sweep(sweep_invariants(path, transform, grid, q), SweepKind::Invariants, os);
      } else {
        write_sweep(sweep_eigvals(path, transform, grid), SweepKind::Eigvals, os);
      }
      write_output(output, os.str());
      return 0;
    }

    const PerfResult r = perf_benchmark(generate_case(path, transform, perf_delta), iterations);
    std::ostringstream os;
    write_perf_report(r, os);
    write_output(output, os.str());
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
