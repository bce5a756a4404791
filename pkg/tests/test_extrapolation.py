"""Widening operators against a direct tuple-space transcription."""

from __future__ import annotations

import math
import random

import pytest

from zenokit import INF, KINDS, canonicalize, decode, extrapolate, is_lift_safe, is_order_preserving
from zenokit.model import BoundProfile

from helpers import dbm_to_pairs, random_zone_rows, ref_extrapolate


def random_profile(rng: random.Random, kind: str, nclocks: int, max_const: int = 8):
    def one():
        return None if rng.random() < 0.25 else rng.randint(0, max_const)

    clocks = tuple(f"x{i}" for i in range(1, nclocks + 1))
    if kind == "M":
        vals = tuple(one() for _ in clocks)
        return BoundProfile(kind, clocks, vals, vals)
    return BoundProfile(
        kind,
        clocks,
        tuple(one() for _ in clocks),
        tuple(one() for _ in clocks),
    )


def to_ref_bounds(p: BoundProfile):
    low = [0] + [-math.inf if v is None else v for v in p.lower]
    up = [0] + [-math.inf if v is None else v for v in p.upper]
    return low, up


def test_matches_reference_formula():
    rng = random.Random(11)
    for _ in range(400):
        dim = rng.randint(2, 5)
        z = canonicalize(random_zone_rows(rng, dim, 8))
        kind = KINDS[rng.choice(list(KINDS))]
        p = random_profile(rng, kind.profile_kind, dim - 1)
        got = extrapolate(kind, z, p)
        low, up = to_ref_bounds(p)
        want = ref_extrapolate(dbm_to_pairs(z), low, up, kind.formula == "plus")
        assert dbm_to_pairs(got) == want, (kind.name, p, z.rows())


def test_extensive_idempotent_finite_range():
    rng = random.Random(12)
    for _ in range(300):
        dim = rng.randint(2, 5)
        z = canonicalize(random_zone_rows(rng, dim, 8))
        kind = KINDS[rng.choice(list(KINDS))]
        p = random_profile(rng, kind.profile_kind, dim - 1)
        w = extrapolate(kind, z, p)
        assert w.includes(z)
        assert extrapolate(kind, w, p) == w
        maxc = max([v for v in p.lower + p.upper if v is not None], default=0)
        for i in range(dim):
            for j in range(dim):
                b = w.bound(i, j)
                if b < INF:
                    c, _ = decode(b)
                    assert abs(c) <= dim * max(maxc, 1)


def test_coarseness_chain():
    rng = random.Random(13)
    for _ in range(200):
        dim = rng.randint(2, 5)
        z = canonicalize(random_zone_rows(rng, dim, 8))
        lu = random_profile(rng, "LU", dim - 1)
        mvals = tuple(
            None if lo is None and hi is None else max(v for v in (lo, hi) if v is not None)
            for lo, hi in zip(lu.lower, lu.upper)
        )
        m = BoundProfile("M", lu.clocks, mvals, mvals)
        zm = extrapolate(KINDS["m"], z, m)
        zmp = extrapolate(KINDS["m+"], z, m)
        zlu = extrapolate(KINDS["lu"], z, lu)
        zlup = extrapolate(KINDS["lu+"], z, lu)
        assert zmp.includes(zm)
        assert zlup.includes(zlu)
        assert zlup.includes(zmp)


def test_order_preservation_where_promised():
    """x<=y survives widening for zero-able clocks with non-negative bounds.

    This mirrors the situation of relevant clocks: a zero check forces
    an upper profile bound >= 0, and the weak lower bound is floored at
    0 for them.
    """
    rng = random.Random(14)
    checked = 0
    for _ in range(1200):
        dim = rng.randint(3, 5)
        z = canonicalize(random_zone_rows(rng, dim, 6))
        for name in ("m", "m+", "lbar-u"):
            kind = KINDS[name]
            p = random_profile(rng, kind.profile_kind, dim - 1)
            w = extrapolate(kind, z, p)
            for i in range(1, dim):
                if p.lower[i - 1] is None or z.bound(0, i) != 1:
                    continue
                for j in range(1, dim):
                    if i == j or z.bound(0, j) != 1:
                        continue
                    if p.upper[j - 1] is None:
                        continue
                    if z.bound(i, j) <= 1:
                        checked += 1
                        assert w.entails(i, j, 1), (name, i, j, z.rows())
    assert checked > 50


def test_lift_safety_where_promised():
    """x>=1 survives widening when x's upper bound is at least 1."""
    rng = random.Random(15)
    checked = 0
    for _ in range(600):
        dim = rng.randint(2, 4)
        z = canonicalize(random_zone_rows(rng, dim, 6))
        for name in ("m", "m+", "l-ubar"):
            kind = KINDS[name]
            p = random_profile(rng, kind.profile_kind, dim - 1)
            w = extrapolate(kind, z, p)
            for i in range(1, dim):
                hi = p.upper[i - 1]
                if hi is None or hi < 1:
                    continue
                if z.entails(0, i, -1):  # x_i >= 1
                    checked += 1
                    assert w.entails(0, i, -1), (name, i, z.rows())
    assert checked > 50


def test_plain_lu_can_lose_order_and_lift():
    # x1 <= x2, both zero-able; no lower bounds at all under LU
    z = canonicalize(
        [
            [1, 1, 1],
            [INF, 1, 1],
            [INF, INF, 1],
        ]
    )
    p = BoundProfile("LU", ("x1", "x2"), (None, None), (0, 0))
    w = extrapolate(KINDS["lu"], z, p)
    assert not w.entails(1, 2, 1)
    # x1 >= 1 with no upper bound on x1
    z2 = canonicalize(
        [
            [1, -1, 1],
            [INF, 1, INF],
            [INF, INF, 1],
        ]
    )
    p2 = BoundProfile("LU", ("x1", "x2"), (1, None), (None, 0))
    w2 = extrapolate(KINDS["lu"], z2, p2)
    assert not w2.entails(0, 1, -1)


def test_kind_predicates():
    assert {k for k in KINDS if is_lift_safe(KINDS[k])} == {"m", "m+", "l-ubar", "l-ubar+"}
    assert {k for k in KINDS if is_order_preserving(KINDS[k])} == {"m", "m+", "lbar-u", "lbar-u+"}


def test_errors():
    z = canonicalize([[1, 1], [INF, 1]])
    p = BoundProfile("LU", ("x1",), (2,), (2,))
    with pytest.raises(ValueError):
        extrapolate(KINDS["m"], z, p)  # profile kind mismatch
    pm = BoundProfile("M", ("x1", "x2"), (2, 2), (2, 2))
    with pytest.raises(ValueError):
        extrapolate(KINDS["m"], z, pm)  # dimension mismatch
