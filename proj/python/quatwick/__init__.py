"""Quaternion Wick calculus and Möbius-graph moment expansions."""

import json
from fractions import Fraction

from . import _core
from ._core import ResourceLimitError, quat_mul, run_cli

__all__ = [
    "ResourceLimitError",
    "census",
    "duality_check",
    "duality_sweep",
    "isserlis_moment",
    "mc",
    "moment",
    "quat_mul",
    "run_cli",
    "selftest",
    "word_moment",
    "word_moment_via_graphs",
]


def _quat(parts):
    return tuple(Fraction(p) for p in parts)


def word_moment(words, bare=False):
    """E(prod Re w) for words of signed ids (+k is Z_k, -k its conjugate).

    Returns the exact quaternion as four Fractions.
    """
    return _quat(_core.word_moment(words, bare))


def isserlis_moment(words, bare=False):
    """Same value as word_moment, by brute-force component expansion."""
    return _quat(_core.isserlis_moment(words, bare))


def word_moment_via_graphs(words):
    return int(_core.word_moment_via_graphs(words))


def census(kind, deg, colors=None):
    """Graph records for a degree sequence; kind is "wigner" or "wishart"."""
    text = _core.census_json(kind, list(deg), list(colors or []))
    return [json.loads(line) for line in text.splitlines() if line]


def moment(kind, deg, colors=None):
    """Exact moment polynomial; kind is gse, goe, wishart-quat or wishart-real."""
    return json.loads(_core.moment_json(kind, list(deg), list(colors or [])))


def duality_check(kind, deg, colors=None):
    return json.loads(_core.duality_check_json(kind, list(deg), list(colors or [])))


def duality_sweep(kind, max_size, color_count=1):
    return json.loads(_core.duality_sweep_json(kind, max_size, color_count))


def mc(kind, deg, n, m=None, samples=100000, seed=0, colors=None, threads=1):
    """Monte Carlo estimate: dict with mean, std_error, count, seed."""
    if isinstance(m, int):
        m = [m]
    return json.loads(
        _core.mc_json(kind, list(deg), n, list(m or []), samples, seed, list(colors or []), threads)
    )


def selftest(max_positions=6, max_ids=3):
    return json.loads(_core.selftest_json(max_positions, max_ids))
