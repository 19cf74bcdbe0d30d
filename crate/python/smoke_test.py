"""Smoke test for the refsheaf_py extension.

Build first: pip install -e crates/py --no-build-isolation
Run: python3 python/smoke_test.py  (or pytest python/)
"""

import json

import refsheaf_py as r


def test_spectra():
    got = r.enumerate_spectra(-1, 4, 16)
    assert got == [([-4, -3, -2, -1], True)]
    assert r.enumerate_spectra(0, 4, 15) == []
    flags = dict((tuple(v), ok) for v, ok in r.enumerate_spectra(0, 4, 10))
    assert flags[(-2, -2, -1, 0)] is False


def test_euler_and_curves():
    # chi(F(l)) for c1 = 0, c2 = 4: l^3/3 + 2l^2 - l/3 + c3/2 - 6
    for l in range(-6, 7):
        want = (l**3 - l) // 3 + 2 * l * l + 8 // 2 - 6
        assert r.euler_char(0, 4, 8, l) == want
    assert r.serre_curve(0, 4, 8, 1) == (5, 0)
    assert r.serre_curve(-1, 4, 12, 1) == (4, 1)
    assert r.linked_curve(5, 0, 3, 3) == (4, -1)


def test_table_and_errors():
    t = json.loads(r.synthesize_table(-1, 4, 12, [-3, -2, -2, -1], -3, 3, ["acm"]))
    assert t["rows"]["h0"] == [0, 0, 0, 0, 1, 6, 18]
    try:
        r.synthesize_table(0, 4, 8, [-1, -1, -1, -1], -3, 3, ["h0@0=1"])
    except r.ContradictionError:
        pass
    else:
        raise AssertionError("expected a contradiction")
    try:
        r.expected_dimension(0, 5)
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")


def test_atlas_and_check():
    assert r.expected_dimension(0, 4) == 29
    recs = json.loads(r.atlas_query(c1=0, c3=12))
    assert sorted(x["label"] for x in recs) == ["R(0,4,12)_0", "R(0,4,12)_1"]
    assert r.atlas_failures() == []
    n, bad = r.check()
    assert n > 100 and bad == []


if __name__ == "__main__":
    for name, fn in list(globals().items()):
        if name.startswith("test_"):
            fn()
            print("ok", name)
