"""End-to-end checks of the command-line tool's contract: exit codes, output
formats, and the no-partial-file guarantee.  Run as:  test_cli.py <binary>"""

import os
import subprocess
import sys
import tempfile

BIN = None


def run(args, stdin=""):
    return subprocess.run(
        [BIN] + args, input=stdin, capture_output=True, text=True, timeout=120
    )


def test_eigvals_stdin_diagonal():
    r = run(["eigvals"], stdin="1 0 0 0 2 0 0 0 3\n")
    assert r.returncode == 0, r.stderr
    assert r.stderr == ""
    values = [float(x) for x in r.stdout.splitlines()]
    assert len(values) == 3
    # The trigonometric form leaves the middle eigenvalue one ulp shy of 2,
    # so the check is tolerance-based rather than a byte-exact "1 2 3".
    for got, want in zip(values, (1.0, 2.0, 3.0)):
        assert abs(got - want) <= 1e-14, r.stdout


def test_eigvals_positional_file():
    with tempfile.TemporaryDirectory() as d:
        path = os.path.join(d, "m.txt")
        with open(path, "w") as f:
            f.write("1 0 0\n0 2 0\n0 0 3\n")
        r = run(["eigvals", path])
        assert r.returncode == 0, r.stderr
        assert run(["eigvals"], stdin="1 0 0 0 2 0 0 0 3\n").stdout == r.stdout


def test_eigvals_byte_identical_across_runs():
    stdin = "0.5 0.25 -1 0.125 -3 2 0 1 4\n"
    a = run(["eigvals"], stdin=stdin)
    b = run(["eigvals"], stdin=stdin)
    assert a.returncode == 0 and b.returncode == 0
    assert a.stdout == b.stdout
    lines = a.stdout.splitlines()
    assert len(lines) == 3
    values = [float(x) for x in lines]
    assert values == sorted(values)


def test_eigvals_complex_pair_warns_but_succeeds():
    r = run(["eigvals"], stdin="0 -1 0 1 0 0 0 0 1\n")
    assert r.returncode == 0, r.stderr
    assert "warning" in r.stderr.lower()
    assert len(r.stdout.splitlines()) == 3


def test_eigvals_malformed_input_is_runtime_error():
    r = run(["eigvals"], stdin="1 2 3 4 5 6 7 8\n")
    assert r.returncode == 1
    r = run(["eigvals"], stdin="1 2 3 4 5 6 7 8 9 10\n")
    assert r.returncode == 1
    r = run(["eigvals"], stdin="1 2 3 4 5 six 7 8 9\n")
    assert r.returncode == 1


def test_missing_subcommand_is_usage_error():
    assert run([]).returncode == 2
    assert run(["--nonsense"]).returncode == 2
    assert run(["eigvals", "--nonsense"], stdin="").returncode == 2


def test_bench_invariants_csv_and_bound_compliance():
    r = run(
        [
            "bench-invariants",
            "--path", "d1",
            "--transform", "symm",
            "--quantity", "j2",
            "--points", "5",
            "--delta-min", "1e-8",
            "--delta-max", "1e-4",
        ]
    )
    assert r.returncode == 0, r.stderr
    lines = r.stdout.splitlines()
    assert lines[0] == "delta,exact,err_stable,err_naive,err_tensor,bound"
    assert len(lines) == 6
    deltas = [float(line.split(",")[0]) for line in lines[1:]]
    assert deltas == sorted(deltas, reverse=True)
    assert abs(deltas[0] - 1e-4) < 1e-19
    for line in lines[1:]:
        f = line.split(",")
        err_stable, bound = float(f[2]), float(f[5])
        assert err_stable <= 10.0 * bound, line


def test_bench_invariants_requires_quantity():
    r = run(["bench-invariants", "--path", "d1"])
    assert r.returncode == 2
    assert "--quantity" in r.stderr


def test_usage_errors_leave_no_output_file():
    with tempfile.TemporaryDirectory() as d:
        out = os.path.join(d, "sweep.csv")
        r = run(
            ["bench-invariants", "--quantity", "j2", "--transform", "u1",
             "--gamma", "0.5", "--output", out]
        )
        assert r.returncode == 2
        assert "--gamma" in r.stderr
        assert not os.path.exists(out)

        r = run(
            ["bench-invariants", "--quantity", "j2", "--delta-min", "1e-2",
             "--delta-max", "1e-6", "--output", out]
        )
        assert r.returncode == 2
        assert "--delta-min" in r.stderr
        assert not os.path.exists(out)


def test_bench_invariants_output_file():
    with tempfile.TemporaryDirectory() as d:
        out = os.path.join(d, "sweep.csv")
        r = run(
            ["bench-invariants", "--quantity", "disc", "--path", "d2",
             "--transform", "u2", "--gamma", "1e-3", "--points", "3",
             "--delta-min", "1e-10", "--delta-max", "1e-6", "--output", out]
        )
        assert r.returncode == 0, r.stderr
        assert r.stdout == ""
        with open(out) as f:
            content = f.read()
        assert content.startswith("delta,exact,err_stable,err_naive,err_tensor,bound\n")
        assert len(content.splitlines()) == 4


def test_bench_eigvals_csv():
    r = run(
        ["bench-eigvals", "--path", "d2", "--transform", "u1", "--points", "3",
         "--delta-min", "1e-12", "--delta-max", "1e-6"]
    )
    assert r.returncode == 0, r.stderr
    lines = r.stdout.splitlines()
    assert lines[0] == "delta,err_stable,err_naive,err_baseline,bound"
    assert len(lines) == 4


def test_bench_perf_report():
    r = run(["bench-perf", "--iterations", "100000"])
    assert r.returncode == 0, r.stderr
    assert "evaluations: 100000" in r.stdout
    assert "stable closed-form:" in r.stdout
    assert "ecosystem baseline:" in r.stdout


def test_bench_perf_iteration_floor_is_usage_error():
    r = run(["bench-perf", "--iterations", "99"])
    assert r.returncode == 2
    assert "--iterations" in r.stderr


def main():
    tests = [(name, fn) for name, fn in sorted(globals().items())
             if name.startswith("test_") and callable(fn)]
    failed = 0
    for name, fn in tests:
        try:
            fn()
            print(f"[PASS] {name}")
        except AssertionError as e:
            failed += 1
            print(f"[FAIL] {name}: {e}")
        except Exception as e:  # noqa: BLE001
            failed += 1
            print(f"[FAIL] {name}: unexpected {type(e).__name__}: {e}")
    print(f"{len(tests) - failed}/{len(tests)} cli tests passed")
    return 1 if failed else 0


if __name__ == "__main__":
    if len(sys.argv) != 2:
        print("usage: test_cli.py <path-to-binary>", file=sys.stderr)
        sys.exit(2)
    BIN = sys.argv[1]
    sys.exit(main())
