import json
import math
from fractions import Fraction

import pytest

import quatwick


def test_quat_mul_units():
    i, j, k = (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)
    assert quatwick.quat_mul(i, j) == pytest.approx(k)
    assert quatwick.quat_mul(j, i) == pytest.approx((0, 0, 0, -1))


def test_word_moments():
    assert quatwick.word_moment([[1, 1, 1, 1]], bare=True) == (0, 0, 0, 0)
    assert quatwick.word_moment([[1, -1]]) == (Fraction(4), 0, 0, 0)
    assert quatwick.word_moment([[1], [-1]]) == (Fraction(1), 0, 0, 0)
    words = [[1, 2, -1, -2]]
    assert quatwick.isserlis_moment(words)[0] == quatwick.word_moment_via_graphs(words)


def test_census():
    wigner = quatwick.census("wigner", [2])
    assert sorted(r["chi"] for r in wigner) == [1, 2]
    assert len(quatwick.census("wishart", [2])) == 3
    assert quatwick.census("wigner", [3]) == []


def test_moment_polys():
    assert quatwick.moment("wishart-quat", [1])["poly"] == "4*M*N"
    assert quatwick.moment("wishart-quat", [2])["poly"] == "16*M^2*N + 16*M*N^2 - 8*M*N"
    assert quatwick.moment("gse", [2])["poly"] == "4*N^2 - 2*N"
    assert quatwick.moment("gse", [3])["poly"] == "0"


def test_duality():
    assert quatwick.duality_check("wigner", [4])["pass"]
    report = quatwick.duality_sweep("wishart", 3, 2)
    assert report["pass"] and report["cases"] > 0


def test_mc_reproducible_and_close():
    a = quatwick.mc("gse", [2], 3, samples=20000, seed=7)
    b = quatwick.mc("gse", [2], 3, samples=20000, seed=7, threads=2)
    assert a == b
    assert abs(a["mean"] - 30) < 4 * a["std_error"]


def test_selftest():
    assert quatwick.selftest(4, 2)["failures"] == 0


def test_errors():
    with pytest.raises(ValueError):
        quatwick.moment("unitary", [2])
    code, out, err = quatwick.run_cli(["moment", "--kind", "gse", "--deg", "2", "--format", "json"])
    assert code == 0
    assert json.loads(out)["poly"] == "4*N^2 - 2*N"
