"""The quantale of join-continuous endomaps and its quantaloid structure.

Homsets are enumerated by backtracking over join-irreducible generators;
the detectors (cyclic, central, dualizing, codualizing, involutive
axioms) run on the stacked value matrix through the batch kernels in
`maps`, with the single-map operations as their spot-checkable face.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .cd import CheckResult
from .errors import CapExceeded, DomainMismatch, NotContinuous, NotEndoHomset
from .lattice import Lattice, Poset, build_lattice
from .maps import (
    LatMap,
    _batch_interior,
    _batch_raney_join,
    _batch_right_adjoint,
    compose,
    identity,
    interior,
    is_join_continuous,
    raney_join,
    raney_meet,
    right_adjoint,
    special,
)

DEFAULT_CAP = 1 << 20


class HomsetEnumeration:
    """All join-continuous maps dom -> cod in a canonical order."""

    def __init__(self, dom: Lattice, cod: Lattice, matrix: np.ndarray):
        self.dom = dom
        self.cod = cod
        matrix = np.array(matrix, dtype=np.int32)
        matrix.flags.writeable = False
        self.matrix = matrix
        self.index: dict[bytes, int] = {
            matrix[k].tobytes(): k for k in range(len(matrix))
        }
        self._maps: list[LatMap] | None = None
        self._rho: np.ndarray | None = None

    def __len__(self) -> int:
        return len(self.matrix)

    @property
    def maps(self) -> list[LatMap]:
        if self._maps is None:
            out = []
            for row in self.matrix:
                f = LatMap(self.dom, self.cod, row)
                f._mono = f._jc = True
                out.append(f)
            self._maps = out
        return self._maps

    def __iter__(self):
        return iter(self.maps)

    @property
    def rho(self) -> np.ndarray:
        """Right adjoints of all members, stacked (B, cod.n)."""
        if self._rho is None:
            self._rho = _batch_right_adjoint(self.dom, self.cod, self.matrix)
        return self._rho

    def position(self, f: LatMap) -> int:
        if f.dom != self.dom or f.cod != self.cod:
            raise DomainMismatch("map belongs to a different homset")
        k = self.index.get(f.key)
        if k is None:
            raise ValueError("map is not join-continuous for this homset")
        return k

    def __contains__(self, f: LatMap) -> bool:
        return f.dom == self.dom and f.cod == self.cod and f.key in self.index

    def __repr__(self) -> str:
        return f"HomsetEnumeration({self.dom!r} -> {self.cod!r}, {len(self)})"


def enumerate_homset(dom: Lattice, cod: Lattice,
                     cap: int = DEFAULT_CAP) -> HomsetEnumeration:
    """Exactly the join-continuous maps dom -> cod.

    Backtracks monotone assignments on the join-irreducibles of dom along
    a linear extension, interpolates everywhere else by joins, and filters
    by binary-join preservation unless dom is distributive (where
    join-irreducibles are join-prime and interpolation is always sound).
    """
    irr = dom.join_irreducibles
    est = cod.n ** len(irr)
    if est > cap:
        raise CapExceeded(f"estimate {cod.n}^{len(irr)} exceeds cap {cap}")
    k_irr = len(irr)
    below_prev = [
        [m for m in range(k) if dom.leq[irr[m], irr[k]]] for k in range(k_irr)
    ]
    ups = [np.flatnonzero(cod.leq[v]).tolist() for v in range(cod.n)]
    assignment = np.zeros(max(k_irr, 1), dtype=np.int32)
    rows: list[np.ndarray] = []

    def rec(k: int) -> None:
        if k == k_irr:
            rows.append(assignment[:k_irr].copy())
            return
        lo = cod.bottom
        for m in below_prev[k]:
            lo = int(cod.join[lo, assignment[m]])
        for v in ups[lo]:
            assignment[k] = v
            rec(k + 1)

    rec(0)
    A = np.asarray(rows, dtype=np.int32).reshape(len(rows), k_irr)
    V = np.full((len(rows), dom.n), cod.bottom, dtype=np.int32)
    for k in range(k_irr):
        span = np.flatnonzero(dom.leq[irr[k]])
        V[:, span] = cod.join[V[:, span], A[:, k][:, None]]
    if not dom.is_distributive:
        keep = np.ones(len(V), dtype=bool)
        for start in range(0, len(V), 4096):
            W = V[start:start + 4096]
            lhs = W[:, dom.join]
            rhs = cod.join[W[:, :, None], W[:, None, :]]
            keep[start:start + 4096] = (lhs == rhs).all(axis=(1, 2))
        V = V[keep]
    return HomsetEnumeration(dom, cod, V)


@dataclass(frozen=True)
class UnitPair:
    """Composition unit and the dualizing unit of an endo homset."""

    one: LatMap
    zero: LatMap


def units(L: Lattice) -> UnitPair:
    return UnitPair(one=identity(L), zero=special(L, "o"))


def residual_left(g: LatMap, h: LatMap) -> LatMap:
    """Greatest k with g . k <= h, via the interior of adjoint-then-h."""
    if g.cod != h.cod:
        raise DomainMismatch("residual_left needs g.cod == h.cod")
    if not (is_join_continuous(g) and is_join_continuous(h)):
        raise NotContinuous("residuals live among join-continuous maps")
    return interior(compose(right_adjoint(g), h))


def residual_right(h: LatMap, f: LatMap) -> LatMap:
    """Greatest k with k . f <= h.

    Interior of y -> meet of h(x) over x with y <= f(x); a jc map k
    satisfies k . f <= h exactly when it sits below that envelope.
    """
    if h.dom != f.dom:
        raise DomainMismatch("residual_right needs h.dom == f.dom")
    if not (is_join_continuous(h) and is_join_continuous(f)):
        raise NotContinuous("residuals live among join-continuous maps")
    M, N = f.cod, h.cod
    acc = np.full(M.n, N.top, dtype=np.int32)
    for x in range(f.dom.n):
        cond = M.leq[:, f.values[x]]
        acc = np.where(cond, N.meet[acc, h.values[x]], acc)
    return interior(LatMap(M, N, acc))


def star(f: LatMap) -> LatMap:
    """The transform sending f: L -> M to a map M -> L.

    Join transform of the right adjoint; total on any pair of finite
    lattices, an involution exactly over completely distributive ones.
    """
    return raney_join(right_adjoint(f))


def dual_tensor(g: LatMap, f: LatMap) -> LatMap:
    """Co-composition g (+) f = star(star(f) . star(g)) for f: L -> M, g: M -> N.

    Also equals the join transform of meet-transform composition; both
    routes are computed and must agree on any input.
    """
    if f.cod != g.dom:
        raise DomainMismatch("dual_tensor needs f.cod == g.dom")
    via_star = star(compose(star(f), star(g)))
    via_raney = raney_join(compose(raney_meet(g), raney_meet(f)))
    assert via_star == via_raney, "dual tensor routes disagree"
    return via_star


def _require_endo(Q: HomsetEnumeration) -> Lattice:
    if Q.dom != Q.cod:
        raise NotEndoHomset("operation needs an endo homset")
    return Q.dom


def _left_residuals_into(alpha: np.ndarray, Q: HomsetEnumeration) -> np.ndarray:
    """Rows k -> values of (f_k \\ alpha)."""
    L = Q.dom
    return _batch_interior(L, L, Q.rho[:, alpha])


def _right_residuals_over(alpha: np.ndarray, F: np.ndarray,
                          L: Lattice) -> np.ndarray:
    """Rows k -> values of (alpha / f_k) for rows f_k of F."""
    acc = np.full(F.shape, L.top, dtype=np.int32)
    for x in range(L.n):
        cond = L.leq.T[F[:, x]]
        acc = np.where(cond, L.meet[acc, alpha[x]], acc)
    return _batch_interior(L, L, acc)


def is_cyclic(alpha: LatMap, Q: HomsetEnumeration) -> CheckResult:
    """Left and right residuals into alpha agree for every member."""
    t0 = time.perf_counter()
    L = _require_endo(Q)
    a = alpha.values
    left = _left_residuals_into(a, Q)
    right = _right_residuals_over(a, Q.matrix, L)
    eq = (left == right).all(axis=1)
    witness = None
    if not eq.all():
        k = int(np.flatnonzero(~eq)[0])
        witness = {
            "f": Q.matrix[k].tolist(),
            "left_residual": left[k].tolist(),
            "right_residual": right[k].tolist(),
        }
    return CheckResult("cyclic", bool(eq.all()), witness,
                       time.perf_counter() - t0)


def is_dualizing(alpha: LatMap, Q: HomsetEnumeration) -> CheckResult:
    """Residuating into alpha twice returns every member unchanged."""
    t0 = time.perf_counter()
    L = _require_endo(Q)
    a = alpha.values
    F = Q.matrix
    over = _right_residuals_over(a, F, L)          # alpha / f
    into = _left_residuals_into(a, Q)              # f \ alpha
    back1 = _batch_interior(
        L, L, _batch_right_adjoint(L, L, over)[:, a])  # (alpha/f) \ alpha
    back2 = _right_residuals_over(a, into, L)          # alpha / (f \ alpha)
    eq = ((back1 == F) & (back2 == F)).all(axis=1)
    witness = None
    if not eq.all():
        k = int(np.flatnonzero(~eq)[0])
        witness = {
            "f": F[k].tolist(),
            "left_then_right": back1[k].tolist(),
            "right_then_left": back2[k].tolist(),
        }
    return CheckResult("dualizing", bool(eq.all()), witness,
                       time.perf_counter() - t0)


def is_codualizing(beta: LatMap, Q: HomsetEnumeration) -> CheckResult:
    """Every member is recovered as beta \\ (beta . member)."""
    t0 = time.perf_counter()
    L = _require_endo(Q)
    if not is_join_continuous(beta):
        raise NotContinuous("codualizing test needs a join-continuous map")
    F = Q.matrix
    rho_b = right_adjoint(beta).values
    recovered = _batch_interior(L, L, rho_b[beta.values[F]])
    eq = (recovered == F).all(axis=1)
    witness = None
    if not eq.all():
        k = int(np.flatnonzero(~eq)[0])
        witness = {"x": F[k].tolist(), "recovered": recovered[k].tolist()}
    return CheckResult("codualizing", bool(eq.all()), witness,
                       time.perf_counter() - t0)


def cyclic_elements(Q: HomsetEnumeration) -> list[LatMap]:
    _require_endo(Q)
    return [f for f in Q.maps if is_cyclic(f, Q).holds]


def central_elements(Q: HomsetEnumeration) -> list[LatMap]:
    """Members commuting with every member under composition."""
    _require_endo(Q)
    F = Q.matrix
    out = []
    for k in range(len(F)):
        b = F[k]
        if (b[F] == F[:, b]).all():
            out.append(Q.maps[k])
    return out


def dualizing_elements(Q: HomsetEnumeration) -> list[LatMap]:
    _require_endo(Q)
    return [f for f in Q.maps if is_dualizing(f, Q).holds]


def codualizing_elements(Q: HomsetEnumeration) -> list[LatMap]:
    _require_endo(Q)
    return [f for f in Q.maps if is_codualizing(f, Q).holds]


def cyclic_dualizing_elements(Q: HomsetEnumeration) -> list[LatMap]:
    """Exhaustive search: cyclic filter first, then the dualizing test."""
    return [f for f in cyclic_elements(Q) if is_dualizing(f, Q).holds]


def _pointwise_leq(cod: Lattice, F: np.ndarray, G: np.ndarray) -> np.ndarray:
    """All-pairs pointwise order: out[i, j] iff row F_i <= row G_j."""
    return cod.leq[F[:, None, :], G[None, :, :]].all(axis=-1)


def check_involutive_axioms(L: Lattice, M: Lattice,
                            cap: int = DEFAULT_CAP,
                            rotation_cap: int = 1 << 20) -> CheckResult:
    """Involutive-quantaloid laws on the homset of jc maps L -> M.

    Verifies: the transform is an involution; the order-reversal
    biconditional f <= g iff f.g* <= zero_M iff g*.f <= zero_L; both
    residual-via-transform formulas on triangles (L,L,M) and (L,M,M);
    and the triangle rotation over Q(L,L) x Q(L,M)^2 when that triple
    count fits rotation_cap (recorded in .info["rotation_checked"]).
    """
    t0 = time.perf_counter()

    def done(holds: bool, witness=None) -> CheckResult:
        res = CheckResult("involutive_axioms", holds, witness,
                          time.perf_counter() - t0)
        res.info = info  # type: ignore[attr-defined]
        return res

    A = enumerate_homset(L, M, cap)
    FA = A.matrix
    B = len(A)
    info: dict[str, object] = {"homset_size": B, "rotation_checked": False}
    oL = special(L, "o").values
    oM = special(M, "o").values

    SA = _batch_raney_join(M, L, A.rho)               # stars, maps M -> L
    SS = _batch_raney_join(L, M, _batch_right_adjoint(M, L, SA))
    eq = (SS == FA).all(axis=1)
    if not eq.all():
        k = int(np.flatnonzero(~eq)[0])
        return done(False, {
            "law": "double_transform",
            "f": FA[k].tolist(),
            "twice": SS[k].tolist(),
        })

    LE = _pointwise_leq(M, FA, FA)                    # f_i <= f_j
    T = FA[:, SA]                                     # [i, j, y] = (f_i . s_j)(y)
    C1 = M.leq[T, oM[None, None, :]].all(axis=-1)     # f_i . s_j <= zero_M
    U = SA[:, FA]                                     # [j, i, x] = (s_j . f_i)(x)
    C2 = L.leq[U, oL[None, None, :]].all(axis=-1).T   # s_j . f_i <= zero_L
    if not ((LE == C1) & (LE == C2)).all():
        i, j = map(int, np.argwhere((LE != C1) | (LE != C2))[0])
        return done(False, {
            "law": "order_reversal",
            "f": FA[i].tolist(), "g": FA[j].tolist(),
            "leq": bool(LE[i, j]),
            "right_compose_below_zero": bool(C1[i, j]),
            "left_compose_below_zero": bool(C2[i, j]),
        })

    # g \ h == star(h* . g) over pairs g, h from Q(L, M)
    ref_left = _batch_interior(L, L, A.rho[:, FA].reshape(B * B, L.n))
    HG = U.reshape(B * B, L.n)                        # [h, g] flattened
    alt_left = _batch_raney_join(L, L, _batch_right_adjoint(L, L, HG))
    alt_left = alt_left.reshape(B, B, L.n).transpose(1, 0, 2).reshape(B * B, L.n)
    if not np.array_equal(ref_left, alt_left):
        flat = int(np.flatnonzero(
            (ref_left != alt_left).any(axis=1))[0])
        g, h = divmod(flat, B)
        return done(False, {
            "law": "left_residual_formula",
            "g": FA[g].tolist(), "h": FA[h].tolist(),
            "residual": ref_left[flat].tolist(),
            "via_transform": alt_left[flat].tolist(),
        })

    # h / f == star(f . h*) over pairs h, f from Q(L, M)
    acc = np.full((B, B, M.n), M.top, dtype=np.int32)
    for x in range(L.n):
        cond = M.leq.T[FA[:, x]]                      # [f, y] = y <= f(x)
        acc = np.where(cond[None, :, :],
                       M.meet[acc, FA[:, x][:, None, None]], acc)
    ref_right = _batch_interior(M, M, acc.reshape(B * B, M.n))
    FH = T.reshape(B * B, M.n)                        # [f, h] flattened
    alt_right = _batch_raney_join(M, M, _batch_right_adjoint(M, M, FH))
    alt_right = alt_right.reshape(B, B, M.n).transpose(1, 0, 2).reshape(B * B, M.n)
    if not np.array_equal(ref_right, alt_right):
        flat = int(np.flatnonzero(
            (ref_right != alt_right).any(axis=1))[0])
        h, f = divmod(flat, B)
        return done(False, {
            "law": "right_residual_formula",
            "h": FA[h].tolist(), "f": FA[f].tolist(),
            "residual": ref_right[flat].tolist(),
            "via_transform": alt_right[flat].tolist(),
        })

    E = enumerate_homset(L, L, cap)
    if len(E) * B * B <= rotation_cap:
        info["rotation_checked"] = True
        FE = E.matrix
        SE = _batch_raney_join(L, L, E.rho)
        WV = U.transpose(1, 0, 2)                     # [v, w, x] = (s_w . f_v)(x)
        for u in range(len(E)):
            Vu = FA[:, FE[u]]                         # [v, x] = (f_v . e_u)(x)
            P1 = _pointwise_leq(M, Vu, FA)            # e-compose below w
            P2 = L.leq[WV, SE[u][None, None, :]].all(axis=-1)
            UW = FE[u][SA]                            # [w, y] = (e_u . s_w)(y)
            P3 = L.leq[UW[None, :, :], SA[:, None, :]].all(axis=-1)
            if not ((P1 == P2) & (P1 == P3)).all():
                v, w = map(int, np.argwhere((P1 != P2) | (P1 != P3))[0])
                return done(False, {
                    "law": "triangle_rotation",
                    "f": FE[u].tolist(),
                    "g": FA[v].tolist(),
                    "h": FA[w].tolist(),
                    "compose_below": bool(P1[v, w]),
                    "rotated_left": bool(P2[v, w]),
                    "rotated_right": bool(P3[v, w]),
                })
    return done(True)


def homset_lattice(Q: HomsetEnumeration, name: str | None = None) -> Lattice:
    """The homset as a lattice under the pointwise order."""
    leq = _pointwise_leq(Q.cod, Q.matrix, Q.matrix)
    return build_lattice(Poset(leq), name)
