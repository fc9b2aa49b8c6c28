import json
import math

import pytest

import descent_algebra as da


def test_comp_set_bijection():
    assert da.set_of_comp([2, 3, 1]) == (2, 5)
    assert da.comp_of_set(6, [2, 5]) == (2, 3, 1)
    assert da.comp_of_set(6, []) == (6,)


def test_shapes():
    assert len(da.partitions(4)) == 5
    assert da.domino_shapes(1) == [(2,), (1, 1)]
    assert da.two_quotient([2]) == ((), (1,))
    assert da.two_quotient([1, 1]) == ((1,), ())
    with pytest.raises(ValueError):
        da.two_quotient([3, 2, 1])


def test_descent_sets():
    assert da.descent_set([3, 2, 1]) == (1, 2)
    assert da.b_descent_set([-1]) == (0,)
    assert da.b_descent_set([2, -1]) == (1,)


def test_small_constants():
    a = da.a_constants(2)
    assert a[((1,), (1,), ())] == 1
    assert ((1,), (1,), (1,)) not in a
    b = da.b_constants(2)
    assert b[((1,), (1,), (1,))] == 2
    c = da.c_constants(1)
    assert c[((0,), (0,), ())] == 1


def test_class_sizes_from_a():
    n = 4
    a = da.a_constants(n)
    total = sum(v for (i, j, k), v in a.items() if i == () and j == k)
    assert total == 2 ** (n - 1)


def test_tableaux_and_characters():
    d = da.d_table(3)
    assert d[(3,)] == {(): 1}
    assert sum(sum(r.values()) ** 2 for r in d.values()) == math.factorial(3)
    assert da.kostka([2, 1], [1, 1, 1]) == 2
    assert da.chi([1, 1, 1], [2, 1]) == -1
    assert da.kronecker_g([2, 1], [2, 1], [2, 1]) == 1
    sdt = da.standard_domino_tableaux([2, 2])
    assert len(sdt) == 2


def test_polynomials():
    assert da.schur([1, 1], 1) == {}
    assert da.domino_function([1, 1], 2) == {(0, 1, 0): 1, (0, 0, 1): 1}
    h2 = da.fundamental([2], 2)
    assert h2 == {(2, 0): 1, (1, 1): 1, (0, 2): 1}


def test_verify():
    ids = {i["id"] for i in da.identities()}
    assert {"carter", "gessel", "carter-b", "triple-c"} <= ids
    for ident in ("carter", "gessel", "carter-b", "triple-c"):
        report = da.verify(ident, 2)
        assert report["status"] == "pass", report
        assert report["counterexample"] is None
    with pytest.raises(da.UsageError):
        da.verify("no-such-identity", 2)
    with pytest.raises(da.UsageError):
        da.verify("carter", 99)


def test_compute_table():
    table = json.loads(da.compute_table("d", 2))
    assert table["entries"] == {"[2]": {"{}": 1}, "[1,1]": {"{1}": 1}}
    assert da.compute_table("a", 2, "csv").startswith("I,J,K,value\n")
    with pytest.raises(da.UsageError):
        da.compute_table("a", 8)
