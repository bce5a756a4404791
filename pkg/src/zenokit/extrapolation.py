"""Zone extrapolation operators parameterized by bound profiles.

Two entrywise widening formulas (plain and "+") combined with four
bound-profile kinds give the eight supported abstractions.  Both
formulas only ever loosen entries; the result is clipped back into the
non-negative orthant and re-canonicalized so graph nodes can compare
zones entrywise.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dbm import INF, Dbm, _close, njit
from .model import BoundProfile

_NEG = -INF  # stands for a -infinity bound


@dataclass(frozen=True)
class AbstractionKind:
    name: str
    formula: str  # "plain" or "plus"
    profile_kind: str  # "M", "LU", "weakL" or "weakU"


KINDS: dict[str, AbstractionKind] = {
    k.name: k
    for k in (
        AbstractionKind("m", "plain", "M"),
        AbstractionKind("m+", "plus", "M"),
        AbstractionKind("lu", "plain", "LU"),
        AbstractionKind("lu+", "plus", "LU"),
        AbstractionKind("lbar-u", "plain", "weakL"),
        AbstractionKind("lbar-u+", "plus", "weakL"),
        AbstractionKind("l-ubar", "plain", "weakU"),
        AbstractionKind("l-ubar+", "plus", "weakU"),
    )
}


def resolve_kind(name: str) -> AbstractionKind:
    try:
        return KINDS[name]
    except KeyError:
        names = ", ".join(KINDS)
        raise ValueError(f"unknown abstraction {name!r}; expected one of: {names}") from None


def is_lift_safe(kind: AbstractionKind) -> bool:
    """Kinds that preserve entailment of x>=1 for lifted clocks."""
    return kind.profile_kind in ("M", "weakU")


def is_order_preserving(kind: AbstractionKind) -> bool:
    """Kinds that preserve x<=y entailment among relevant zero-able clocks."""
    return kind.profile_kind in ("M", "weakL")


@njit(cache=True)
def _widen(src: np.ndarray, out: np.ndarray, low: np.ndarray, up: np.ndarray, plus: bool) -> None:
    n = src.shape[0]
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            b = src[i, j]
            li = low[i]
            uj = up[j]
            if b > 2 * li + 1:  # constant above L(x_i)
                out[i, j] = INF
            elif plus:
                if src[0, i] < -2 * li:  # zone already forces x_i above L(x_i)
                    out[i, j] = INF
                elif src[0, j] < -2 * uj:  # zone forces x_j above U(x_j)
                    if i != 0:
                        out[i, j] = INF
                    else:
                        v = -2 * uj
                        out[i, j] = INF if v > INF else v
            else:
                if b < -2 * uj:  # constant below -U(x_j)
                    v = -2 * uj
                    out[i, j] = INF if v > INF else v


def extrapolate(kind: AbstractionKind, z: Dbm, bounds: BoundProfile) -> Dbm:
    """Widen a canonical zone by the chosen formula and re-canonicalize."""
    if z.is_empty:
        raise ValueError("cannot extrapolate an empty zone")
    if bounds.kind != kind.profile_kind:
        raise ValueError(
            f"profile kind {bounds.kind!r} does not match abstraction {kind.name!r}"
        )
    if z.dim != len(bounds.clocks) + 1:
        raise ValueError("zone dimension does not match the profile")
    low = np.empty(z.dim, dtype=np.int64)
    up = np.empty(z.dim, dtype=np.int64)
    low[0] = up[0] = 0
    for i, (lo, hi) in enumerate(zip(bounds.lower, bounds.upper), start=1):
        low[i] = _NEG if lo is None else lo
        up[i] = _NEG if hi is None else hi
    src = z._view()
    out = src.copy()
    _widen(src, out, low, up, kind.formula == "plus")
    # keep the zone inside the non-negative orthant
    out[0, 1:] = np.minimum(out[0, 1:], 1)
    if not _close(out):
        raise AssertionError("extrapolation emptied a non-empty zone")
    return Dbm(z.dim, out.tobytes())
