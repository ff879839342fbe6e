"""Maps between finite lattices and the transforms acting on them.

A `LatMap` stores one value index per domain element.  The module keeps
one implementation of each nontrivial algorithm as a batch kernel over a
(B, n) value matrix; single-map operations wrap the kernels with B = 1,
and the bulk detectors in `quantale` reuse them directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainMismatch, IndexOutOfRange, NotContinuous
from .lattice import Lattice, _frozen


@dataclass(frozen=True)
class MapClass:
    monotone: bool
    join_continuous: bool
    meet_continuous: bool


class LatMap:
    """Function between lattice carriers, as an int index array."""

    __slots__ = ("dom", "cod", "values", "_mono", "_jc", "_mc", "_key")

    def __init__(self, dom: Lattice, cod: Lattice, values):
        values = np.array(values, dtype=np.int32)
        if values.shape != (dom.n,):
            raise DomainMismatch(
                f"expected {dom.n} values, got shape {values.shape}"
            )
        if values.size and (values.min() < 0 or values.max() >= cod.n):
            raise IndexOutOfRange("value outside the codomain carrier")
        self.dom = dom
        self.cod = cod
        self.values = _frozen(values)
        self._mono: bool | None = None
        self._jc: bool | None = None
        self._mc: bool | None = None
        self._key: bytes | None = None

    def __call__(self, x: int) -> int:
        if not 0 <= x < self.dom.n:
            raise IndexOutOfRange(f"{x} outside range({self.dom.n})")
        return int(self.values[x])

    @property
    def key(self) -> bytes:
        if self._key is None:
            self._key = self.values.tobytes()
        return self._key

    def same_hom(self, other: "LatMap") -> bool:
        return self.dom == other.dom and self.cod == other.cod

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LatMap)
            and self.same_hom(other)
            and self.key == other.key
        )

    def __hash__(self) -> int:
        return hash(self.key)

    def __le__(self, other: "LatMap") -> bool:
        """Pointwise order within one homset."""
        if not isinstance(other, LatMap) or not self.same_hom(other):
            raise DomainMismatch("pointwise order needs a shared homset")
        return bool(self.cod.leq[self.values, other.values].all())

    def __repr__(self) -> str:
        return f"LatMap({self.values.tolist()})"


def latmap(dom: Lattice, cod: Lattice, values) -> LatMap:
    """Validating constructor."""
    return LatMap(dom, cod, values)


def identity(L: Lattice) -> LatMap:
    f = LatMap(L, L, np.arange(L.n, dtype=np.int32))
    f._mono = f._jc = f._mc = True
    return f


def is_monotone(f: LatMap) -> bool:
    if f._mono is None:
        v = f.values
        ok = ~f.dom.leq | f.cod.leq[v[:, None], v[None, :]]
        f._mono = bool(ok.all())
    return f._mono


def is_join_continuous(f: LatMap) -> bool:
    """Preserves the empty join and all binary joins."""
    if f._jc is None:
        v = f.values
        f._jc = bool(
            v[f.dom.bottom] == f.cod.bottom
            and (v[f.dom.join] == f.cod.join[v[:, None], v[None, :]]).all()
        )
    return f._jc


def is_meet_continuous(f: LatMap) -> bool:
    """Preserves the empty meet and all binary meets."""
    if f._mc is None:
        v = f.values
        f._mc = bool(
            v[f.dom.top] == f.cod.top
            and (v[f.dom.meet] == f.cod.meet[v[:, None], v[None, :]]).all()
        )
    return f._mc


def classify(f: LatMap) -> MapClass:
    return MapClass(is_monotone(f), is_join_continuous(f), is_meet_continuous(f))


def compose(g: LatMap, f: LatMap) -> LatMap:
    """g after f."""
    if f.cod != g.dom:
        raise DomainMismatch("compose needs f.cod == g.dom")
    return LatMap(f.dom, g.cod, g.values[f.values])


def _common_hom(fs: Sequence[LatMap]) -> tuple[Lattice, Lattice]:
    dom, cod = fs[0].dom, fs[0].cod
    for f in fs[1:]:
        if f.dom != dom or f.cod != cod:
            raise DomainMismatch("family must share one homset")
    return dom, cod


def pointwise_join(fs: Sequence[LatMap],
                   dom: Lattice | None = None,
                   cod: Lattice | None = None) -> LatMap:
    """Pointwise join; the empty family needs explicit endpoints."""
    fs = list(fs)
    if not fs:
        if dom is None or cod is None:
            raise DomainMismatch("empty family needs dom and cod")
        return LatMap(dom, cod, np.full(dom.n, cod.bottom, dtype=np.int32))
    dom, cod = _common_hom(fs)
    acc = fs[0].values
    for f in fs[1:]:
        acc = cod.join[acc, f.values]
    return LatMap(dom, cod, acc)


def pointwise_meet(fs: Sequence[LatMap],
                   dom: Lattice | None = None,
                   cod: Lattice | None = None) -> LatMap:
    """Pointwise meet; the empty family needs explicit endpoints."""
    fs = list(fs)
    if not fs:
        if dom is None or cod is None:
            raise DomainMismatch("empty family needs dom and cod")
        return LatMap(dom, cod, np.full(dom.n, cod.top, dtype=np.int32))
    dom, cod = _common_hom(fs)
    acc = fs[0].values
    for f in fs[1:]:
        acc = cod.meet[acc, f.values]
    return LatMap(dom, cod, acc)


# ---------------------------------------------------------------- kernels

_constraints_memo: dict[Lattice, tuple[np.ndarray, ...]] = {}


def _interior_constraints(L: Lattice):
    got = _constraints_memo.get(L)
    if got is not None:
        return got
    pos = {x: k for k, x in enumerate(L.poset.toposort)}
    edges = sorted(L.poset.covers, key=lambda e: -pos[e[0]])
    xs = np.asarray([e[0] for e in edges], dtype=np.int64)
    ys = np.asarray([e[1] for e in edges], dtype=np.int64)
    comp = L.leq | L.leq.T
    inc = np.argwhere(~comp)
    inc = inc[inc[:, 0] < inc[:, 1]]
    ix = inc[:, 0]
    iy = inc[:, 1]
    ij = L.join[ix, iy].astype(np.int64)
    got = (xs, ys, ix, iy, ij)
    _constraints_memo[L] = got
    return got


def _batch_interior(dom: Lattice, cod: Lattice, H: np.ndarray) -> np.ndarray:
    """Greatest pointwise-below join-continuous maps, rowwise.

    Decreasing chaotic iteration over three constraint families: bottom to
    bottom, meets along cover edges (upper element first, which closes the
    whole monotonicity order in one sweep), and value-at-join below
    join-of-values for incomparable pairs.  Fixpoints are exactly the
    join-continuous maps below the start row, so the limit is the greatest.
    """
    H = np.array(H, dtype=np.int32)
    xs, ys, ix, iy, ij = _interior_constraints(dom)
    meet, join = cod.meet, cod.join
    H[:, dom.bottom] = cod.bottom
    while True:
        before = H.copy()
        for x, y in zip(xs, ys):
            H[:, x] = meet[H[:, x], H[:, y]]
        for x, y, j in zip(ix, iy, ij):
            H[:, j] = meet[H[:, j], join[H[:, x], H[:, y]]]
        if np.array_equal(H, before):
            return H


def _batch_right_adjoint(dom: Lattice, cod: Lattice, F: np.ndarray) -> np.ndarray:
    """Rowwise y -> join of {x : F[k, x] <= y}; callers ensure rows are jc."""
    R = np.full((F.shape[0], cod.n), dom.bottom, dtype=np.int32)
    for x in range(dom.n):
        R = np.where(cod.leq[F[:, x]], dom.join[R, x], R)
    return R


def _batch_left_adjoint(dom: Lattice, cod: Lattice, G: np.ndarray) -> np.ndarray:
    """Rowwise y -> meet of {x : y <= G[k, x]}; callers ensure rows are mc."""
    out = np.full((G.shape[0], cod.n), dom.top, dtype=np.int32)
    for x in range(dom.n):
        out = np.where(cod.leq.T[G[:, x]], dom.meet[out, x], out)
    return out


def _batch_raney_join(dom: Lattice, cod: Lattice, F: np.ndarray) -> np.ndarray:
    """Rowwise x -> join of F[k, t] over t with x not<= t."""
    out = np.full(F.shape, cod.bottom, dtype=np.int32)
    for t in range(dom.n):
        mask = ~dom.leq[:, t]
        out = np.where(mask[None, :], cod.join[out, F[:, t][:, None]], out)
    return out


def _batch_raney_meet(dom: Lattice, cod: Lattice, F: np.ndarray) -> np.ndarray:
    """Rowwise x -> meet of F[k, t] over t with t not<= x."""
    out = np.full(F.shape, cod.top, dtype=np.int32)
    for t in range(dom.n):
        mask = ~dom.leq[t]
        out = np.where(mask[None, :], cod.meet[out, F[:, t][:, None]], out)
    return out


# ------------------------------------------------------------- operations

def right_adjoint(f: LatMap) -> LatMap:
    """The map g with f(x) <= y iff x <= g(y); needs f join-continuous."""
    if not is_join_continuous(f):
        raise NotContinuous("right adjoint needs a join-continuous map")
    g = LatMap(f.cod, f.dom, _batch_right_adjoint(f.dom, f.cod, f.values[None, :])[0])
    g._mono = g._mc = True
    return g


def left_adjoint(g: LatMap) -> LatMap:
    """The map f with f(x) <= y iff x <= g(y); needs g meet-continuous."""
    if not is_meet_continuous(g):
        raise NotContinuous("left adjoint needs a meet-continuous map")
    f = LatMap(g.cod, g.dom, _batch_left_adjoint(g.dom, g.cod, g.values[None, :])[0])
    f._mono = f._jc = True
    return f


def interior(f: LatMap) -> LatMap:
    """Greatest join-continuous map pointwise below f (f arbitrary)."""
    out = LatMap(f.dom, f.cod, _batch_interior(f.dom, f.cod, f.values[None, :])[0])
    out._mono = out._jc = True
    return out


def raney_join(f: LatMap) -> LatMap:
    """x -> join of f(t) over t with x not<= t; always join-continuous."""
    out = LatMap(f.dom, f.cod, _batch_raney_join(f.dom, f.cod, f.values[None, :])[0])
    out._mono = out._jc = True
    return out


def raney_meet(f: LatMap) -> LatMap:
    """x -> meet of f(t) over t with t not<= x; always meet-continuous."""
    out = LatMap(f.dom, f.cod, _batch_raney_meet(f.dom, f.cod, f.values[None, :])[0])
    out._mono = out._mc = True
    return out


_SPECIAL_ALIASES = {
    "const_c": "c",
    "annihilator_a": "a",
}


def special(L: Lattice, kind: str, x: int | None = None) -> LatMap:
    """Named endomaps.

    c(x): bottom to bottom, everything else to x.
    a(x): top on elements not below x, bottom elsewhere.
    alpha(x): top on elements above x, bottom elsewhere.
    o: t -> join of elements not above t.
    omega: t -> meet of elements not below t.
    nu(x): bottom on elements below x, identity elsewhere.
    """
    kind = _SPECIAL_ALIASES.get(kind, kind)
    n = L.n
    if kind in ("c", "a", "alpha", "nu"):
        if x is None:
            raise ValueError(f"special {kind!r} needs an element")
        if not 0 <= x < n:
            raise IndexOutOfRange(f"{x} outside range({n})")
    if kind == "c":
        vals = np.full(n, x, dtype=np.int32)
        vals[L.bottom] = L.bottom
        f = LatMap(L, L, vals)
        f._mono = f._jc = True
        return f
    if kind == "a":
        f = LatMap(L, L, np.where(L.leq[:, x], L.bottom, L.top))
        f._mono = f._jc = True
        return f
    if kind == "alpha":
        f = LatMap(L, L, np.where(L.leq[x], L.top, L.bottom))
        f._mono = f._mc = True
        return f
    if kind == "o":
        vals = [L.sup(t for t in range(n) if not L.leq[u, t]) for u in range(n)]
        f = LatMap(L, L, vals)
        f._mono = f._jc = True
        return f
    if kind == "omega":
        vals = [L.inf(t for t in range(n) if not L.leq[t, u]) for u in range(n)]
        f = LatMap(L, L, vals)
        f._mono = f._mc = True
        return f
    if kind == "nu":
        vals = np.where(L.leq[:, x], L.bottom, np.arange(n, dtype=np.int32))
        f = LatMap(L, L, vals)
        f._mono = True
        return f
    raise ValueError(f"unknown special kind {kind!r}")


def big_meet(fs: Sequence[LatMap]) -> LatMap:
    """Join-continuous infimum candidate of a family of jc maps.

    Value at x is the join, over t with x not<= t, of the family meet at
    omega(t).  Always join-continuous and below-or-at each member's
    interior lower bounds; on completely distributive domains it is the
    infimum of the family inside the jc-map lattice.
    """
    fs = list(fs)
    if not fs:
        raise DomainMismatch("big_meet needs a nonempty family")
    dom, cod = _common_hom(fs)
    for f in fs:
        if not is_join_continuous(f):
            raise NotContinuous("big_meet needs join-continuous maps")
    om = special(dom, "omega")
    core = pointwise_meet([compose(f, om) for f in fs])
    return raney_join(core)


# -------------------------------------------------------------- sampling

def all_maps_array(dom: Lattice, cod: Lattice) -> np.ndarray:
    """Every function dom -> cod as a (cod.n ** dom.n, dom.n) array."""
    n, m = dom.n, cod.n
    count = m ** n
    r = np.arange(count)
    out = np.empty((count, n), dtype=np.int32)
    for x in range(n):
        out[:, x] = (r // (m ** (n - 1 - x))) % m
    return out


def monotone_maps_array(dom: Lattice, cod: Lattice) -> np.ndarray:
    """Every monotone map dom -> cod, filtered from the full function space."""
    A = all_maps_array(dom, cod)
    ok = np.ones(len(A), dtype=bool)
    for x in range(dom.n):
        for y in range(dom.n):
            if dom.leq[x, y] and x != y:
                ok &= cod.leq[A[:, x], A[:, y]]
    return A[ok]


def sample_monotone_maps(dom: Lattice, cod: Lattice, count: int,
                         rng: np.random.RandomState) -> np.ndarray:
    """Seeded random monotone maps as a (count, dom.n) array.

    Walks a linear extension assigning each element a uniform choice from
    the up-set of the join of its lower covers' values.
    """
    order = dom.poset.toposort
    lower: dict[int, list[int]] = {x: [] for x in range(dom.n)}
    for i, j in dom.poset.covers:
        lower[j].append(i)
    ups = [np.flatnonzero(cod.leq[v]) for v in range(cod.n)]
    out = np.empty((count, dom.n), dtype=np.int32)
    for r in range(count):
        row = out[r]
        for x in order:
            lo = cod.bottom
            for c in lower[x]:
                lo = int(cod.join[lo, row[c]])
            cands = ups[lo]
            row[x] = cands[rng.randint(len(cands))]
    return out
