"""Smoke tests of the python bindings.  Runnable standalone or under pytest."""

import sys

import eig33


def test_eigvals_diagonal():
    t = eig33.eigvals([1, 0, 0, 0, 2, 0, 0, 0, 3])
    for got, want in zip(t, (1.0, 2.0, 3.0)):
        assert abs(got - want) <= 12 * eig33.eps_mach
    assert not t.non_real_advisory


def test_nested_and_flat_inputs_agree():
    flat = eig33.eigvals([0.5, 0.25, -1, 0.125, -3, 2, 0, 1, 4])
    nested = eig33.eigvals([[0.5, 0.25, -1], [0.125, -3, 2], [0, 1, 4]])
    assert [flat[i] for i in range(3)] == [nested[i] for i in range(3)]


def test_eigvals_ascending_and_trace_consistent():
    m = [[2, 1, 0], [1, 3, -1], [0, -1, 4]]
    t = eig33.eigvalss(m)
    assert t.lambda1 <= t.lambda2 <= t.lambda3
    total = t.lambda1 + t.lambda2 + t.lambda3
    assert abs(total - 9.0) <= 100 * eig33.eps_mach * 9.0


def test_eigvalss_rejects_asymmetric():
    try:
        eig33.eigvalss([[1, 2, 0], [0, 1, 0], [0, 0, 1]])
    except ValueError:
        return
    raise AssertionError("expected ValueError for asymmetric input")


def test_complex_pair_advisory():
    t = eig33.eigvals([[0, -1, 0], [1, 0, 0], [0, 0, 1]])
    assert t.non_real_advisory


def test_invariants_scaled_identity():
    m = [7.25, 0, 0, 0, 7.25, 0, 0, 0, 7.25]
    assert eig33.j2_stable(m) == 0.0
    assert eig33.j3_stable(m) == 0.0
    assert eig33.disc_stable(m) == 0.0


def test_invariant_values():
    d = [-1, 0, 0, 0, 1, 0, 0, 0, 2]
    assert eig33.i1(d) == 2.0
    assert abs(eig33.j2_stable(d) - 7.0 / 3.0) <= 8 * eig33.eps_mach
    assert abs(eig33.j3_stable(d) + 20.0 / 27.0) <= 8 * eig33.eps_mach
    assert eig33.disc_stable(d) == 36.0
    assert abs(eig33.disc_naive(7.0 / 3.0, -20.0 / 27.0) - 36.0) <= 1e-13


def test_naive_variants_exist_and_roughly_agree():
    m = [[4, 1, 0], [1, 5, 2], [0, 2, 6]]
    assert abs(eig33.j2_naive(m) - eig33.j2_stable(m)) <= 1e-12
    assert abs(eig33.j2_tensor(m) - eig33.j2_stable(m)) <= 1e-12
    assert abs(eig33.j3_naive(m) - eig33.j3_stable(m)) <= 1e-12
    assert abs(eig33.j3_tensor(m) - eig33.j3_stable(m)) <= 1e-12
    naive = eig33.eigvals_naive(m)
    stable = eig33.eigvals(m)
    for i in range(3):
        assert abs(naive[i] - stable[i]) <= 1e-10


def test_jacobian_shape_and_values():
    g = eig33.jacobian_j2([1, 0, 0, 0, 2, 0, 0, 0, 3])
    assert g == [[-1.0, 0.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, 1.0]]
    gd = eig33.jacobian_disc([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert gd == [[0.0, 0.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, 0.0]]


def test_eps_mach():
    assert eig33.eps_mach == 2.0 ** -53


def test_bad_input_raises():
    try:
        eig33.eigvals([1, 2, 3])
    except ValueError:
        return
    raise AssertionError("expected ValueError for a 3-entry input")


def main():
    tests = [(n, f) for n, f in sorted(globals().items())
             if n.startswith("test_") and callable(f)]
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
    print(f"{len(tests) - failed}/{len(tests)} smoke tests passed")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
