"""Finite complete lattices: validated construction, generators, duality.

Elements are integers 0..n-1.  The order lives in a boolean matrix
``leq`` with ``leq[i, j]`` meaning i is below j; join and meet are
integer tables.  Construction through `build_poset` relabels elements
along a stable topological order, so freshly built lattices satisfy
``leq[i, j] implies i <= j``.  Nothing downstream may rely on that:
`dual` transposes the matrix in place and breaks it on purpose.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np

from .errors import CycleDetected, IndexOutOfRange, NotALattice, TooLarge

MAX_ELEMENTS = 1 << 16


def _frozen(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


def _stable_topo(leq: np.ndarray) -> list[int]:
    # Kahn over the strict order, always popping the smallest index so the
    # result is the identity whenever the input is already sorted.
    n = leq.shape[0]
    strict = leq & ~np.eye(n, dtype=bool)
    indeg = strict.sum(axis=0)
    heap = [i for i in range(n) if indeg[i] == 0]
    heapq.heapify(heap)
    out: list[int] = []
    while heap:
        i = heapq.heappop(heap)
        out.append(i)
        for j in np.flatnonzero(strict[i]):
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(heap, int(j))
    return out


class Poset:
    """Finite poset as a reflexive, antisymmetric, transitive bool matrix."""

    def __init__(self, leq: np.ndarray):
        leq = np.array(leq, dtype=bool)
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
            raise ValueError("leq must be square")
        n = leq.shape[0]
        if not leq.diagonal().all():
            raise ValueError("leq must be reflexive")
        if (leq & leq.T & ~np.eye(n, dtype=bool)).any():
            raise ValueError("leq must be antisymmetric")
        closed = (leq.astype(np.uint8) @ leq.astype(np.uint8)) > 0
        if (closed & ~leq).any():
            raise ValueError("leq must be transitive")
        self.n = n
        self.leq = _frozen(leq)

    @cached_property
    def toposort(self) -> tuple[int, ...]:
        """A linear extension of the order (original labels)."""
        return tuple(_stable_topo(self.leq))

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """Hasse edges (lower, upper) in ascending lexicographic order."""
        strict = self.leq & ~np.eye(self.n, dtype=bool)
        via = (strict.astype(np.uint8) @ strict.astype(np.uint8)) > 0
        pairs = np.argwhere(strict & ~via).tolist()
        return tuple(sorted((int(i), int(j)) for i, j in pairs))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Poset)
            and self.n == other.n
            and bool(np.array_equal(self.leq, other.leq))
        )

    def __hash__(self) -> int:
        return hash((self.n, self.leq.tobytes()))

    def __repr__(self) -> str:
        return f"Poset(n={self.n})"


def build_poset(n: int, covers: Iterable[tuple[int, int]]) -> Poset:
    """Poset from cover pairs (lower, upper), validated and canonicalized.

    Takes the reflexive-transitive closure of the cover relation, rejects
    cycles, then relabels elements along a stable topological order.  Input
    whose labels already form a linear extension keeps them unchanged.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > MAX_ELEMENTS:
        raise TooLarge(f"{n} elements exceeds the {MAX_ELEMENTS} cap")
    leq = np.eye(n, dtype=bool)
    for i, j in covers:
        if not (0 <= i < n and 0 <= j < n):
            raise IndexOutOfRange(f"cover ({i}, {j}) outside range({n})")
        if i == j:
            raise CycleDetected(f"cover ({i}, {j}) is a self-loop")
        leq[i, j] = True
    for k in range(n):
        leq |= np.outer(leq[:, k], leq[k, :])
    sym = leq & leq.T & ~np.eye(n, dtype=bool)
    if sym.any():
        i, j = map(int, np.argwhere(sym)[0])
        raise CycleDetected(f"elements {i} and {j} lie on a common cycle")
    order = _stable_topo(leq)
    if order != list(range(n)):
        perm = np.asarray(order)
        leq = leq[np.ix_(perm, perm)]
    return Poset(leq)


class Lattice:
    """Complete finite lattice: a poset with join/meet tables and bounds."""

    def __init__(
        self,
        poset: Poset,
        join: np.ndarray,
        meet: np.ndarray,
        bottom: int,
        top: int,
        name: str | None = None,
    ):
        self.poset = poset
        self.join = _frozen(np.array(join, dtype=np.int32))
        self.meet = _frozen(np.array(meet, dtype=np.int32))
        self.bottom = int(bottom)
        self.top = int(top)
        self.name = name

    @property
    def n(self) -> int:
        return self.poset.n

    @property
    def leq(self) -> np.ndarray:
        return self.poset.leq

    def sup(self, xs: Iterable[int]) -> int:
        """Join of any finite family; the empty join is the bottom."""
        out = self.bottom
        for x in xs:
            out = int(self.join[out, x])
        return out

    def inf(self, xs: Iterable[int]) -> int:
        """Meet of any finite family; the empty meet is the top."""
        out = self.top
        for x in xs:
            out = int(self.meet[out, x])
        return out

    @cached_property
    def join_irreducibles(self) -> tuple[int, ...]:
        """Elements with exactly one lower cover, in toposort order."""
        lower = [0] * self.n
        for _, j in self.poset.covers:
            lower[j] += 1
        irr = {x for x in range(self.n) if lower[x] == 1}
        return tuple(x for x in self.poset.toposort if x in irr)

    @cached_property
    def is_distributive(self) -> bool:
        return distributivity_witness(self) is None

    def rename(self, name: str) -> "Lattice":
        """Same lattice object shape under a new name (shared arrays)."""
        return Lattice(self.poset, self.join, self.meet, self.bottom, self.top, name)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Lattice) and self.poset == other.poset

    def __hash__(self) -> int:
        return hash(self.poset)

    def __repr__(self) -> str:
        tag = self.name or "?"
        return f"Lattice({tag}, n={self.n})"


def build_lattice(p: Poset, name: str | None = None) -> Lattice:
    """Lattice over a poset, or NotALattice naming an offending pair.

    A pair has a least upper bound exactly when the set of its common upper
    bounds equals the principal up-set of one element, so a profile lookup
    finds each table entry or proves it missing.
    """
    n = p.n
    if n == 0:
        raise NotALattice("empty carrier has no bottom")
    leq = p.leq
    up_profile = {leq[i].tobytes(): i for i in range(n)}
    down_profile = {leq[:, i].tobytes(): i for i in range(n)}
    join = np.zeros((n, n), dtype=np.int32)
    meet = np.zeros((n, n), dtype=np.int32)
    for i in range(n):
        for j in range(i, n):
            k = up_profile.get((leq[i] & leq[j]).tobytes())
            if k is None:
                raise NotALattice(f"elements {i} and {j} have no join")
            join[i, j] = join[j, i] = k
            k = down_profile.get((leq[:, i] & leq[:, j]).tobytes())
            if k is None:
                raise NotALattice(f"elements {i} and {j} have no meet")
            meet[i, j] = meet[j, i] = k
    bottom = np.flatnonzero(leq.all(axis=1))
    top = np.flatnonzero(leq.all(axis=0))
    if len(bottom) != 1 or len(top) != 1:
        raise NotALattice("carrier lacks a bottom or a top")
    return Lattice(p, join, meet, int(bottom[0]), int(top[0]), name)


def dual(L: Lattice) -> Lattice:
    """Order-dual lattice: transposed order, join and meet swapped."""
    name = f"{L.name}_dual" if L.name else None
    return Lattice(Poset(L.leq.T), L.meet, L.join, L.top, L.bottom, name)


def distributivity_witness(L: Lattice) -> tuple[int, int, int] | None:
    """First (x, y, z) with x ^ (y v z) != (x ^ y) v (x ^ z), else None."""
    for x in range(L.n):
        lhs = L.meet[x][L.join]
        rhs = L.join[np.ix_(L.meet[x], L.meet[x])]
        bad = lhs != rhs
        if bad.any():
            y, z = map(int, np.argwhere(bad)[0])
            return (x, y, z)
    return None


def is_chain(L: Lattice) -> bool:
    """True iff any two elements are comparable."""
    return bool((L.leq | L.leq.T).all())


def completely_join_primes(L: Lattice) -> frozenset[int]:
    """Elements not below the join of everything not above them.

    Equivalent to the subset form: x is completely join-prime when every
    subset whose join dominates x already contains a member above x.
    """
    out = []
    for x in range(L.n):
        others = L.sup(t for t in range(L.n) if not L.leq[x, t])
        if not L.leq[x, others]:
            out.append(x)
    return frozenset(out)


def is_smooth(L: Lattice) -> bool:
    """True iff the lattice has no completely join-prime element."""
    return not completely_join_primes(L)


def downset_lattice(p: Poset, name: str | None = None) -> Lattice:
    """Lattice of down-closed subsets of p, ordered by inclusion.

    Downsets are encoded as bitmasks and listed by (popcount, value), which
    is a linear extension of inclusion.
    """
    if p.n > 12:
        raise TooLarge(f"poset has {p.n} > 12 elements")
    below = [sum(1 << j for j in range(p.n) if p.leq[j, i]) for i in range(p.n)]
    masks = []
    for m in range(1 << p.n):
        rest = m
        ok = True
        while rest:
            i = (rest & -rest).bit_length() - 1
            if below[i] & ~m:
                ok = False
                break
            rest &= rest - 1
        if ok:
            masks.append(m)
    if len(masks) > MAX_ELEMENTS:
        raise TooLarge("downset family exceeds the element cap")
    return _inclusion_lattice(masks, name)


def _inclusion_lattice(masks: list[int], name: str | None) -> Lattice:
    masks = sorted(set(masks), key=lambda m: (bin(m).count("1"), m))
    arr = np.asarray(masks, dtype=np.int64)
    leq = (arr[:, None] & ~arr[None, :]) == 0
    return build_lattice(Poset(leq), name)


@dataclass(frozen=True)
class GeneratorSpec:
    """Config for `generate`.  Unused fields stay None.

    kinds: chain(n), boolean(k), m3, n5, product(a, b),
    downsets(poset), random(seed, n).
    """

    kind: str
    n: int | None = None
    k: int | None = None
    a: int | None = None
    b: int | None = None
    seed: int | None = None
    poset: Poset | None = None


def _chain(n: int, name: str | None = None) -> Lattice:
    if n < 1:
        raise ValueError("chain needs at least one element")
    if n > 20:
        raise TooLarge(f"chain cap is 20 elements, got {n}")
    p = build_poset(n, [(i, i + 1) for i in range(n - 1)])
    return build_lattice(p, name or f"c{n}")


def _boolean(k: int, name: str | None = None) -> Lattice:
    if k < 0:
        raise ValueError("boolean needs a nonnegative exponent")
    if k > 4:
        raise TooLarge(f"boolean cap is exponent 4, got {k}")
    return _inclusion_lattice(list(range(1 << k)), name or f"b{k}")


def _product_of_chains(a: int, b: int, name: str | None = None) -> Lattice:
    if a < 1 or b < 1:
        raise ValueError("product needs chains with at least one element")
    if a > 20 or b > 20:
        raise TooLarge(f"product cap is 20 per side, got ({a}, {b})")
    pairs = sorted(itertools.product(range(a), range(b)),
                   key=lambda ij: (ij[0] + ij[1], ij[0]))
    idx = {ij: t for t, ij in enumerate(pairs)}
    covers = []
    for (i, j), t in idx.items():
        if i + 1 < a:
            covers.append((t, idx[(i + 1, j)]))
        if j + 1 < b:
            covers.append((t, idx[(i, j + 1)]))
    p = build_poset(a * b, covers)
    return build_lattice(p, name or f"c{a}xc{b}")


def _m3(name: str | None = None) -> Lattice:
    p = build_poset(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
    return build_lattice(p, name or "m3")


def _n5(name: str | None = None) -> Lattice:
    # 0 < 1 < 3 < 4 on one side, 0 < 2 < 4 on the other
    p = build_poset(5, [(0, 1), (0, 2), (1, 3), (2, 4), (3, 4)])
    return build_lattice(p, name or "n5")


def _closure_system(masks: Iterable[int], n: int) -> list[int]:
    full = (1 << n) - 1
    fam = {full}
    queue = list(masks)
    while queue:
        x = queue.pop()
        if x in fam:
            continue
        fresh = [x & y for y in fam if (x & y) not in fam and x & y != x]
        fam.add(x)
        queue.extend(fresh)
    return sorted(fam)


def _random_closure_lattice(seed: int, n: int, name: str | None = None) -> Lattice:
    if n < 1:
        raise ValueError("random lattice needs a nonempty ground set")
    if n > 12:
        raise TooLarge(f"random ground-set cap is 12, got {n}")
    rng = np.random.RandomState(seed)
    gens = [int(v) for v in rng.randint(0, 1 << n, size=n)]
    masks = _closure_system(gens, n)
    return _inclusion_lattice(masks, name or f"r{seed}_{n}")


def generate(spec: GeneratorSpec) -> Lattice:
    """Build the lattice a GeneratorSpec describes."""
    kind = spec.kind
    if kind == "chain":
        if spec.n is None:
            raise ValueError("chain needs n")
        return _chain(spec.n)
    if kind == "boolean":
        if spec.k is None:
            raise ValueError("boolean needs k")
        return _boolean(spec.k)
    if kind == "m3":
        return _m3()
    if kind == "n5":
        return _n5()
    if kind == "product":
        if spec.a is None or spec.b is None:
            raise ValueError("product needs a and b")
        return _product_of_chains(spec.a, spec.b)
    if kind == "downsets":
        if spec.poset is None:
            raise ValueError("downsets needs a poset")
        return downset_lattice(spec.poset)
    if kind == "random":
        if spec.seed is None or spec.n is None:
            raise ValueError("random needs seed and n")
        return _random_closure_lattice(spec.seed, spec.n)
    raise ValueError(f"unknown generator kind {kind!r}")


def all_posets(max_n: int) -> Iterator[Poset]:
    """All posets with 1..max_n elements, one per isomorphism class.

    Orientation search over unordered pairs with a canonical-form filter;
    fine for max_n <= 5.
    """
    for n in range(1, max_n + 1):
        seen: set[bytes] = set()
        pair_list = list(itertools.combinations(range(n), 2))
        for choice in itertools.product((0, 1, 2), repeat=len(pair_list)):
            leq = np.eye(n, dtype=bool)
            for (i, j), c in zip(pair_list, choice):
                if c == 1:
                    leq[i, j] = True
                elif c == 2:
                    leq[j, i] = True
            closed = (leq.astype(np.uint8) @ leq.astype(np.uint8)) > 0
            if (closed & ~leq).any():
                continue
            canon = min(
                leq[np.ix_(perm, perm)].tobytes()
                for perm in map(list, itertools.permutations(range(n)))
            )
            if canon in seen:
                continue
            seen.add(canon)
            yield Poset(np.frombuffer(canon, dtype=bool).reshape(n, n))
