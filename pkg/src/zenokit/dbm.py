"""Difference bound matrices with integer-encoded bounds.

A bound (c, <) is stored as the even integer 2c and (c, <=) as 2c + 1,
so the usual integer order coincides with bound tightness and the
strictness bit rides along for free.  INF marks an absent constraint.

Matrices are kept in canonical (all-pairs tightest) form by every
operation, which reduces zone equality, inclusion and emptiness tests
to plain array comparisons.  Row and column 0 belong to the zero clock:
entry (i, j) constrains x_i - x_j.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - kernels fall back to plain python
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(fn):
            return fn

        return wrap


INF: int = 1 << 40


def lt(c: int) -> int:
    """Encode the strict bound (c, <)."""
    return 2 * c


def leq(c: int) -> int:
    """Encode the weak bound (c, <=)."""
    return 2 * c + 1


def decode(b: int) -> tuple[int, bool]:
    """Return (constant, strict) for a finite encoded bound."""
    if b >= INF:
        raise ValueError("cannot decode the infinite bound")
    return (b >> 1, not (b & 1))


def add_bounds(a: int, b: int) -> int:
    """Compose bounds: constants add, any strict operand makes the sum strict."""
    if a >= INF or b >= INF:
        return INF
    # the & 1 trick: weak+weak keeps the odd bit, everything else drops it
    return a + b - ((a | b) & 1)


@njit(cache=True)
def _close(m: np.ndarray) -> bool:
    """In-place Floyd-Warshall; returns False when a diagonal turns negative."""
    n = m.shape[0]
    for k in range(n):
        for i in range(n):
            ik = m[i, k]
            if ik >= INF:
                continue
            for j in range(n):
                kj = m[k, j]
                if kj >= INF:
                    continue
                cand = ik + kj - ((ik | kj) & 1)
                if cand < m[i, j]:
                    m[i, j] = cand
    ok = True
    for i in range(n):
        if m[i, i] < 1:
            ok = False
        m[i, i] = 1
    return ok


@njit(cache=True)
def _tighten(m: np.ndarray, a: int, b: int) -> None:
    """Restore canonical form after entry (a, b) alone was tightened."""
    n = m.shape[0]
    ab = m[a, b]
    for i in range(n):
        ia = m[i, a]
        if ia >= INF:
            continue
        d = ia + ab - ((ia | ab) & 1)
        for j in range(n):
            bj = m[b, j]
            if bj >= INF:
                continue
            cand = d + bj - ((d | bj) & 1)
            if cand < m[i, j]:
                m[i, j] = cand


@njit(cache=True)
def _constrain(m: np.ndarray, ent: np.ndarray) -> bool:
    """Intersect with (i, j, bound) rows; returns False on emptiness."""
    for r in range(ent.shape[0]):
        a = ent[r, 0]
        b = ent[r, 1]
        v = ent[r, 2]
        if v >= m[a, b]:
            continue
        ba = m[b, a]
        if ba < INF:
            # a negative cycle through the new edge must use the old b->a path
            w = v + ba - ((v | ba) & 1)
            if w < 1:
                return False
        m[a, b] = v
        _tighten(m, a, b)
    return True


@njit(cache=True)
def _reset(m: np.ndarray, idxs: np.ndarray) -> None:
    """Set each listed clock to 0, sequentially; preserves canonical form."""
    n = m.shape[0]
    for t in range(idxs.shape[0]):
        r = idxs[t]
        for j in range(n):
            m[r, j] = m[0, j]
            m[j, r] = m[j, 0]
        m[r, r] = 1


@njit(cache=True)
def _successor(
    src: np.ndarray,
    out: np.ndarray,
    ent: np.ndarray,
    resets: np.ndarray,
    low: np.ndarray,
    up: np.ndarray,
    plus: bool,
    widen: bool,
    flags: np.ndarray,
) -> int:
    """Fused constrain + reset + up + extrapolate + close for exploration.

    Returns 0 when the guard empties the zone, 1 on success, 2 on an
    impossible widening failure.  flags receives, as clock bitmasks
    (clock i at bit i-1): [0] clocks the guarded zone pins to 0,
    [1] whether every reset clock can stay below 1, [2] clocks that can
    be 0 in the final zone.
    """
    n = src.shape[0]
    for i in range(n):
        for j in range(n):
            out[i, j] = src[i, j]
    for r in range(ent.shape[0]):
        a = ent[r, 0]
        b = ent[r, 1]
        v = ent[r, 2]
        if v >= out[a, b]:
            continue
        ba = out[b, a]
        if ba < INF:
            w = v + ba - ((v | ba) & 1)
            if w < 1:
                return 0
        out[a, b] = v
        for i in range(n):
            ia = out[i, a]
            if ia >= INF:
                continue
            d = ia + v - ((ia | v) & 1)
            for j in range(n):
                bj = out[b, j]
                if bj >= INF:
                    continue
                cand = d + bj - ((d | bj) & 1)
                if cand < out[i, j]:
                    out[i, j] = cand
    zb = 0
    for i in range(1, n):
        if out[i, 0] <= 1:
            zb |= 1 << (i - 1)
    flags[0] = zb
    sok = 1
    for t in range(resets.shape[0]):
        if out[0, resets[t]] < 0:
            sok = 0
            break
    flags[1] = sok
    for t in range(resets.shape[0]):
        r = resets[t]
        for j in range(n):
            out[r, j] = out[0, j]
            out[j, r] = out[j, 0]
        out[r, r] = 1
    for i in range(1, n):
        out[i, 0] = INF
    if widen:
        tmp = out.copy()
        for i in range(n):
            li = low[i]
            for j in range(n):
                if i == j:
                    continue
                b = tmp[i, j]
                uj = up[j]
                if b > 2 * li + 1:
                    out[i, j] = INF
                elif plus:
                    if tmp[0, i] < -2 * li:
                        out[i, j] = INF
                    elif tmp[0, j] < -2 * uj:
                        if i != 0:
                            out[i, j] = INF
                        else:
                            v2 = -2 * uj
                            out[i, j] = INF if v2 > INF else v2
                else:
                    if b < -2 * uj:
                        v2 = -2 * uj
                        out[i, j] = INF if v2 > INF else v2
        for j in range(1, n):
            if out[0, j] > 1:
                out[0, j] = 1
        if not _close(out):
            return 2
    zm = 0
    for j in range(1, n):
        if out[0, j] == 1:
            zm |= 1 << (j - 1)
    flags[2] = zm
    return 1


@dataclass(frozen=True)
class Dbm:
    """Canonical difference bound matrix; `data is None` marks the empty zone."""

    dim: int
    data: bytes | None

    # -- construction -------------------------------------------------

    @classmethod
    def empty(cls, dim: int) -> "Dbm":
        return cls(dim, None)

    @classmethod
    def point(cls, dim: int) -> "Dbm":
        """The zone where every clock equals 0."""
        m = np.full((dim, dim), 1, dtype=np.int64)
        return cls(dim, m.tobytes())

    @classmethod
    def top(cls, dim: int) -> "Dbm":
        """All clocks non-negative, otherwise unconstrained."""
        m = np.full((dim, dim), INF, dtype=np.int64)
        m[0, :] = 1
        np.fill_diagonal(m, 1)
        return cls(dim, m.tobytes())

    # -- internals -----------------------------------------------------

    def _view(self) -> np.ndarray:
        return np.frombuffer(self.data, dtype=np.int64).reshape(self.dim, self.dim)

    def _copy(self) -> np.ndarray:
        return self._view().copy()

    # -- queries ---------------------------------------------------------

    @property
    def is_empty(self) -> bool:
        return self.data is None

    def bound(self, i: int, j: int) -> int:
        """Encoded bound of entry (i, j)."""
        if self.is_empty:
            raise ValueError("the empty zone has no bounds")
        return int(self._view()[i, j])

    def rows(self) -> list[list[int]]:
        if self.is_empty:
            raise ValueError("the empty zone has no bounds")
        return self._view().tolist()

    def includes(self, other: "Dbm") -> bool:
        """True iff other is a subset of self (entrywise on canonical forms)."""
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        if other.is_empty:
            return True
        if self.is_empty:
            return False
        return bool(np.all(other._view() <= self._view()))

    def zero_clocks(self) -> frozenset[int]:
        """Clock indices that can be 0 somewhere in the zone."""
        if self.is_empty:
            raise ValueError("zero_clocks of the empty zone")
        v = self._view()
        return frozenset(j for j in range(1, self.dim) if v[0, j] == 1)

    def entails(self, i: int, j: int, b: int) -> bool:
        """True iff every valuation satisfies x_i - x_j with encoded bound b."""
        if self.is_empty:
            raise ValueError("entails on the empty zone")
        return bool(self._view()[i, j] <= b)

    def consistent_with(self, entries: Iterable[tuple[int, int, int]]) -> bool:
        """True iff adding the given difference constraints leaves the zone non-empty."""
        return not self.constrain(entries).is_empty

    # -- zone operations -------------------------------------------------

    def up(self) -> "Dbm":
        """Time-elapse closure: drop every upper bound x_i <= c."""
        if self.is_empty:
            raise ValueError("up of the empty zone")
        m = self._copy()
        m[1:, 0] = INF
        return Dbm(self.dim, m.tobytes())

    def constrain(self, entries: Iterable[tuple[int, int, int]]) -> "Dbm":
        """Intersect with difference constraints given as (i, j, encoded bound)."""
        ent = list(entries)
        if self.is_empty or not ent:
            return self
        m = self._copy()
        arr = np.array(ent, dtype=np.int64).reshape(len(ent), 3)
        if not _constrain(m, arr):
            return Dbm(self.dim, None)
        return Dbm(self.dim, m.tobytes())

    def reset(self, indices: Iterable[int]) -> "Dbm":
        """Image of the zone under setting the listed clocks to 0."""
        if self.is_empty:
            raise ValueError("reset of the empty zone")
        idxs = sorted(set(indices))
        if not idxs:
            return self
        if idxs[0] < 1 or idxs[-1] >= self.dim:
            raise ValueError("reset index out of range")
        m = self._copy()
        _reset(m, np.array(idxs, dtype=np.int64))
        return Dbm(self.dim, m.tobytes())

    # -- presentation ------------------------------------------------------

    def pretty(self, names: Sequence[str]) -> str:
        """Human-readable constraint list with 2-hop-implied entries removed."""
        if self.is_empty:
            return "false"
        if len(names) != self.dim - 1:
            raise ValueError("need one name per clock")
        v = self._view()
        n = self.dim
        kept = {
            (i, j)
            for i in range(n)
            for j in range(n)
            if i != j and v[i, j] < INF
        }
        # greedy removal: an entry implied by two surviving entries is dropped
        for i in range(n):
            for j in range(n):
                if (i, j) not in kept:
                    continue
                for k in range(n):
                    if k == i or k == j:
                        continue
                    if (
                        (i, k) in kept
                        and (k, j) in kept
                        and add_bounds(int(v[i, k]), int(v[k, j])) <= v[i, j]
                    ):
                        kept.discard((i, j))
                        break
        parts: list[str] = []
        for i in range(n):
            for j in range(n):
                if (i, j) not in kept:
                    continue
                if i == 0 and v[0, j] == 1:
                    continue  # x >= 0 is implicit for clocks
                c, strict = decode(int(v[i, j]))
                if i == 0:
                    parts.append(f"{names[j - 1]} {'>' if strict else '>='} {-c}")
                elif j == 0:
                    parts.append(f"{names[i - 1]} {'<' if strict else '<='} {c}")
                else:
                    op = "<" if strict else "<="
                    parts.append(f"{names[i - 1]} - {names[j - 1]} {op} {c}")
        return " && ".join(parts) if parts else "true"


def canonicalize(rows: Sequence[Sequence[int]] | Dbm) -> Dbm:
    """Tighten a raw encoded matrix; empty zones collapse to the empty marker."""
    if isinstance(rows, Dbm):
        if rows.is_empty:
            return rows
        m = rows._copy()
    else:
        m = np.array(rows, dtype=np.int64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("need a square matrix")
    dim = m.shape[0]
    np.fill_diagonal(m, np.minimum(m.diagonal(), 1))
    if not _close(m):
        return Dbm(dim, None)
    return Dbm(dim, m.tobytes())


def is_empty(z: Dbm) -> bool:
    return z.is_empty


def warm_up() -> None:
    """Force jit compilation of the kernels on a tiny instance."""
    z = canonicalize([[1, 1], [INF, 1]])
    z.up().constrain([(1, 0, leq(5))]).reset([1])
    src = z._view()
    out = np.empty((2, 2), dtype=np.int64)
    ent = np.array([[1, 0, leq(3)]], dtype=np.int64)
    idx = np.array([1], dtype=np.int64)
    low = np.array([0, 3], dtype=np.int64)
    flags = np.empty(3, dtype=np.int64)
    _successor(src, out, ent, idx, low, low, False, True, flags)
    _successor(src, out, ent, idx, low, low, True, False, flags)
