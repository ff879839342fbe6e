"""Law-check suite: registry of named checks over a lattice corpus.

Each check declares its applicability (carrier size, complete
distributivity, homset bounds) and runs against every corpus member,
producing a pass/fail/skip matrix.  Skips from declared applicability
are expected; a cap tripping mid-run is not, and the CLI treats those
as failures on the built-in corpus.
"""

from __future__ import annotations

import time
import zlib
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from . import cd, maps, quantale
from .errors import CapExceeded
from .lattice import (
    GeneratorSpec,
    Lattice,
    all_posets,
    downset_lattice,
    generate,
    is_chain,
)

VERSION = "0.1.0"

EXHAUSTIVE_N = 4          # full quantification up to this carrier size
SAMPLED_N = 6             # seeded sampling for carriers up to this size
SAMPLE_COUNT = 1000
PAIR_HOMSET_CAP = 1024    # quadratic homset sweeps
CENTER_HOMSET_CAP = 4096  # linear sweep with cheap per-pair work


def builtin_corpus() -> list[Lattice]:
    """Fixed, deterministically ordered and named corpus."""
    out: list[Lattice] = []
    for i in range(1, 7):
        out.append(generate(GeneratorSpec("chain", n=i)))
    for k in range(1, 4):
        out.append(generate(GeneratorSpec("boolean", k=k)))
    out.append(generate(GeneratorSpec("m3")))
    out.append(generate(GeneratorSpec("n5")))
    counts: dict[int, int] = {}
    for p in all_posets(4):
        i = counts.get(p.n, 0)
        counts[p.n] = i + 1
        out.append(downset_lattice(p, name=f"d{p.n}_{i}"))
    out.append(generate(GeneratorSpec("product", a=2, b=3)))
    for seed in range(50):
        L = generate(GeneratorSpec("random", seed=seed, n=3 + seed % 5))
        out.append(L.rename(f"r{seed:02d}"))
    names = [L.name for L in out]
    assert len(set(names)) == len(names)
    return out


class SuiteContext:
    """Per-run caches: profiles, endo homsets, seeded generators."""

    def __init__(self, seed: int = 0, cap: int = quantale.DEFAULT_CAP):
        self.seed = seed
        self.cap = cap
        self._profiles: dict[Lattice, cd.LatticeProfile] = {}
        self._homsets: dict[Lattice, quantale.HomsetEnumeration | None] = {}
        self._axioms: dict[Lattice, cd.CheckResult] = {}

    def profile(self, L: Lattice) -> cd.LatticeProfile:
        if L not in self._profiles:
            self._profiles[L] = cd.classify_lattice(L)
        return self._profiles[L]

    def estimate(self, L: Lattice) -> int:
        return L.n ** len(L.join_irreducibles)

    def homset(self, L: Lattice) -> quantale.HomsetEnumeration | None:
        if L not in self._homsets:
            if self.estimate(L) > self.cap:
                self._homsets[L] = None
            else:
                self._homsets[L] = quantale.enumerate_homset(L, L, self.cap)
        return self._homsets[L]

    def axioms(self, L: Lattice) -> cd.CheckResult:
        if L not in self._axioms:
            self._axioms[L] = quantale.check_involutive_axioms(L, L, self.cap)
        return self._axioms[L]

    def rng(self, L: Lattice, check_id: str) -> np.random.RandomState:
        tag = f"{self.seed}:{check_id}:{L.name}".encode()
        return np.random.RandomState(zlib.crc32(tag) & 0xFFFFFFFF)


@dataclass(frozen=True)
class TheoremCheck:
    """One registry entry: applicability gate plus the check body."""

    id: str
    statement: str
    applies: Callable[[SuiteContext, Lattice], str | None]
    run: Callable[[SuiteContext, Lattice], cd.CheckResult]


def _always(ctx: SuiteContext, L: Lattice) -> str | None:
    return None


def _gate(*parts: Callable[[SuiteContext, Lattice], str | None]):
    def applies(ctx: SuiteContext, L: Lattice) -> str | None:
        for p in parts:
            reason = p(ctx, L)
            if reason:
                return reason
        return None
    return applies


def _need_cd(ctx, L):
    if not ctx.profile(L).completely_distributive:
        return "needs a completely distributive carrier"
    return None


def _need_non_cd(ctx, L):
    if ctx.profile(L).completely_distributive:
        return "needs a non completely distributive carrier"
    return None


def _need_nontrivial(ctx, L):
    return None if L.n >= 2 else "needs at least two elements"


def _size_cap(k: int):
    def gate(ctx, L):
        return None if L.n <= k else f"carrier too large (n={L.n} > {k})"
    return gate


def _homset_cap(k: int):
    def gate(ctx, L):
        if ctx.estimate(L) > ctx.cap:
            return f"homset estimate {ctx.estimate(L)} beyond enumeration cap"
        Q = ctx.homset(L)
        if Q is None or len(Q) > k:
            return f"homset too large (|Q| > {k})"
        return None
    return gate


def _jc_matrix(ctx: SuiteContext, L: Lattice, check_id: str) -> np.ndarray:
    """Exhaustive jc maps for small carriers, seeded jc samples otherwise."""
    if L.n <= EXHAUSTIVE_N:
        return ctx.homset(L).matrix
    S = maps.sample_monotone_maps(L, L, SAMPLE_COUNT, ctx.rng(L, check_id))
    return maps._batch_interior(L, L, S)


def _monotone_matrix(ctx: SuiteContext, L: Lattice, check_id: str) -> np.ndarray:
    if L.n <= EXHAUSTIVE_N:
        return maps.monotone_maps_array(L, L)
    return maps.sample_monotone_maps(L, L, SAMPLE_COUNT, ctx.rng(L, check_id))


def _timed(name: str, t0: float, holds: bool, witness=None) -> cd.CheckResult:
    return cd.CheckResult(name, holds, witness, time.perf_counter() - t0)


# ------------------------------------------------------------- the checks

def _t1(ctx: SuiteContext, L: Lattice) -> cd.CheckResult:
    t0 = time.perf_counter()
    o = maps.special(L, "o")
    parts = [
        maps.compose(maps.special(L, "c", t), maps.special(L, "a", t))
        for t in range(L.n)
    ]
    got = maps.pointwise_join(parts, dom=L, cod=L)
    witness = None
    if got != o:
        witness = {"computed": got.values.tolist(), "o": o.values.tolist()}
    return _timed("T1", t0, got == o, witness)


def _t2(ctx: SuiteContext, L: Lattice) -> cd.CheckResult:
    t0 = time.perf_counter()
    o = maps.special(L, "o").values
    alphas = np.where(L.leq, L.top, L.bottom).astype(np.int32)
    got = maps._batch_interior(L, L, alphas)
    expect = np.where(L.leq[:, o].T, L.bottom, L.top).astype(np.int32)
    bad = np.flatnonzero((got != expect).any(axis=1))
    witness = None
    if len(bad):
        x = int(bad[0])
        witness = {"x": x, "interior": got[x].tolist(),
                   "annihilator_at_o(x)": expect[x].tolist()}
    return _timed("T2", t0, not len(bad), witness)


def _t3(ctx: SuiteContext, L: Lattice) -> cd.CheckResult:
    t0 = time.perf_counter()
    Q = ctx.homset(L)
    allowed = {maps.special(L, "c", L.top).key, maps.special(L, "o").key}
    extras = [f for f in quantale.cyclic_elements(Q) if f.key not in allowed]
    witness = None
    if extras:
        witness = {"cyclic_but_unexpected": extras[0].values.tolist()}
    return _timed("T3", t0, not extras, witness)


def _t4(ctx: SuiteContext, L: Lattice) -> cd.CheckResult:
    t0 = time.perf_counter()
    Q = ctx.homset(L)
    res = quantale.is_dualizing(maps.special(L, "c", L.top), Q)
    witness = {"constant_top_dualizing": True} if res.holds else None
    return _timed("T4", t0, not res.holds, witness)


def _t5(ctx: SuiteContext, L: Lattice) -> cd.CheckResult:
    t0 = time.perf_counter()
    Q = ctx.homset(L)
    o = maps.special(L, "o")
    c_top = maps.special(L, "c", L.top)
    premise = o != c_top and quantale.is_cyclic(o, Q).holds
    if premise:
        meets = cd.raney_meet_criterion(L)
        conclusion = meets.holds and L.is_distributive
        witness = None if conclusion else {
            "premise": "o cyclic and distinct from constant-top",
            "meet_criterion": meets.holds,
            "distributive": L.is_distributive,
        }
        res = _timed("T5", t0, conclusion, witness)
    else:
        res = _timed("T5", t0, True)
    res.substantive = premise  # type: ignore[attr-defined]
    return res


def _t6(ctx: SuiteContext, L: Lattice) -> cd.CheckResult:
    t0 = time.perf_counter()
    res = ctx.axioms(L)
    return _timed("T6", t0, res.holds, res.witness)


def _t6n(ctx: SuiteContext, L: Lattice) -> cd.CheckResult:
    t0 = time.perf_counter()
    res = ctx.axioms(L)
    witness = None if not res.holds else {"axioms_hold_on_non_cd": True}
    return _timed("T6n", t0, not res.holds, witness)


def _t7(ctx: SuiteContext, L: Lattice) -> cd.CheckResult:
    t0 = time.perf_counter()
    Q = ctx.homset(L)
    expect = {maps.identity(L).key, maps.special(L, "c", L.bottom).key}
    got = {f.key for f in quantale.central_elements(Q)}
    witness = None
    if got != expect:
        sample = next(iter(got.symmetric_difference(expect)))
        witness = {"difference_member": list(np.frombuffer(sample, dtype=np.int32).tolist())}
    return _timed("T7", t0, got == expect, witness)


def _t8(ctx: SuiteContext, L: Lattice) -> cd.CheckResult:
    t0 = time.perf_counter()
    F = _jc_matrix(ctx, L, "T8")
    back = maps._batch_raney_join(L, L, maps._batch_raney_meet(L, L, F))
    bad = np.flatnonzero((back != F).any(axis=1))
    witness = None
    if len(bad):
        k = int(bad[0])
        witness = {"f": F[k].tolist(), "roundtrip": back[k].tolist()}
    return _timed("T8", t0, not len(bad), witness)


def _t8n(ctx: SuiteContext, L: Lattice) -> cd.CheckResult:
    t0 = time.perf_counter()
    ident = maps.identity(L)
    back = maps.raney_join(maps.raney_meet(ident))
    witness = None if back != ident else {"roundtrip_fixed_identity": True}
    return _timed("T8n", t0, back != ident, witness)


def _t9(ctx: SuiteContext, L: Lattice) -> cd.CheckResult:
    t0 = time.perf_counter()
    F = _monotone_matrix(ctx, L, "T9")
    o = maps.special(L, "o").values
    om = maps.special(L, "omega").values
    ints = maps._batch_interior(L, L, F)
    via_omega = maps._batch_raney_join(L, L, F[:, om])
    joins = maps._batch_raney_join(L, L, F)
    via_o = maps._batch_interior(L, L, F[:, o])
    bad = np.flatnonzero(
        ((ints != via_omega) | (joins != via_o)).any(axis=1))
    witness = None
    if len(bad):
        k = int(bad[0])
        witness = {
            "f": F[k].tolist(),
            "interior": ints[k].tolist(),
            "join_transform_after_omega": via_omega[k].tolist(),
            "join_transform": joins[k].tolist(),
            "interior_after_o": via_o[k].tolist(),
        }
    return _timed("T9", t0, not len(bad), witness)


def _t9n(ctx: SuiteContext, L: Lattice) -> cd.CheckResult:
    t0 = time.perf_counter()
    ident = maps.identity(L)
    om = maps.special(L, "omega")
    via = maps.raney_join(maps.compose(ident, om))
    holds = via != maps.interior(ident)
    witness = None if holds else {"interior_formula_held_on_non_cd": True}
    return _timed("T9n", t0, holds, witness)


def _t10(ctx: SuiteContext, L: Lattice) -> cd.CheckResult:
    t0 = time.perf_counter()
    if L.n <= EXHAUSTIVE_N:
        A = maps.all_maps_array(L, L)
        Mo = maps.monotone_maps_array(L, L)
        J = ctx.homset(L).matrix
    else:
        rng = ctx.rng(L, "T10")
        down = [np.flatnonzero(L.leq[:, v]) for v in range(L.n)]
        G = np.stack([rng.randint(0, L.n, size=L.n).astype(np.int32)
                      for _ in range(SAMPLE_COUNT // 2)])
        # partner maps pointwise below G, so law 1 has real pairs to see
        Fb = np.stack([np.asarray([down[v][rng.randint(len(down[v]))] for v in row],
                                  dtype=np.int32) for row in G])
        A = np.concatenate([G, Fb])
        Mo = maps.sample_monotone_maps(L, L, SAMPLE_COUNT // 2, rng)
        J = maps._batch_interior(L, L, Mo)
    RA = maps._batch_raney_join(L, L, A)
    LE = quantale._pointwise_leq(L, A, A)
    LE_T = quantale._pointwise_leq(L, RA, RA)
    if (LE & ~LE_T).any():
        i, j = map(int, np.argwhere(LE & ~LE_T)[0])
        return _timed("T10", t0, False, {
            "law": "transform_monotone",
            "f": A[i].tolist(), "g": A[j].tolist()})
    # lax composition law: transform(m . g) <= m . transform(g), m monotone
    comp = Mo[:, A]                       # [m, g, x] = m(g(x))
    flat = comp.reshape(-1, L.n)
    lhs = maps._batch_raney_join(L, L, flat).reshape(comp.shape)
    rhs = Mo[:, RA]                       # [m, g, x] = m(transform(g)(x))
    ok = L.leq[lhs, rhs].all(axis=-1)
    if not ok.all():
        m, g = map(int, np.argwhere(~ok)[0])
        return _timed("T10", t0, False, {
            "law": "lax_composition",
            "monotone": Mo[m].tolist(), "g": A[g].tolist()})
    # exact composition law for join-continuous left factors
    compj = J[:, A].reshape(-1, L.n)
    lhsj = maps._batch_raney_join(L, L, compj).reshape(len(J), len(A), L.n)
    rhsj = J[:, RA]
    if (lhsj != rhsj).any():
        f, g = map(int, np.argwhere((lhsj != rhsj).any(axis=-1))[0])
        return _timed("T10", t0, False, {
            "law": "exact_composition",
            "jc": J[f].tolist(), "g": A[g].tolist()})
    # left adjoint of meet transform == join transform of right adjoint
    rm = maps._batch_raney_meet(L, L, J)
    lhs4 = maps._batch_left_adjoint(L, L, rm)
    rhs4 = maps._batch_raney_join(L, L, maps._batch_right_adjoint(L, L, J))
    if (lhs4 != rhs4).any():
        k = int(np.argwhere((lhs4 != rhs4).any(axis=1))[0][0])
        return _timed("T10", t0, False, {
            "law": "adjoint_bridge",
            "f": J[k].tolist(),
            "left_adjoint_of_meet_transform": lhs4[k].tolist(),
            "join_transform_of_right_adjoint": rhs4[k].tolist()})
    return _timed("T10", t0, True)


def _t11(ctx: SuiteContext, L: Lattice) -> cd.CheckResult:
    t0 = time.perf_counter()
    o = maps.special(L, "o").values
    idx = np.arange(L.n)
    mix = bool(L.leq[o, idx].all())
    comix = bool(L.leq[idx, o].all())
    chain = is_chain(L)
    smooth = ctx.profile(L).smooth
    holds = (mix == chain) and (comix == smooth)
    witness = None
    if not holds:
        witness = {"o_below_id": mix, "chain": chain,
                   "id_below_o": comix, "smooth": smooth}
    return _timed("T11", t0, holds, witness)


def _t12(ctx: SuiteContext, L: Lattice) -> cd.CheckResult:
    t0 = time.perf_counter()
    Q = ctx.homset(L)
    F = Q.matrix
    LE = quantale._pointwise_leq(L, F, F)
    for i in range(len(F)):
        fi = Q.maps[i]
        for j in range(len(F)):
            fj = Q.maps[j]
            got = maps.big_meet([fi, fj])
            via_interior = maps.interior(maps.pointwise_meet([fi, fj]))
            mask = LE[:, i] & LE[:, j]
            inf_vals = np.full(L.n, L.bottom, dtype=np.int32)
            for k in np.flatnonzero(mask):
                inf_vals = L.join[inf_vals, F[k]]
            if not (got == via_interior
                    and np.array_equal(got.values, inf_vals)):
                return _timed("T12", t0, False, {
                    "f": F[i].tolist(), "g": F[j].tolist(),
                    "big_meet": got.values.tolist(),
                    "interior_of_meet": via_interior.values.tolist(),
                    "enumerated_infimum": inf_vals.tolist()})
    return _timed("T12", t0, True)


def _t12n(ctx: SuiteContext, L: Lattice) -> cd.CheckResult:
    t0 = time.perf_counter()
    ident = maps.identity(L)
    got = maps.big_meet([ident, ident])
    via = maps.interior(maps.pointwise_meet([ident, ident]))
    holds = got != via
    witness = None if holds else {"big_meet_matched_on_non_cd": True}
    return _timed("T12n", t0, holds, witness)


def _t13(ctx: SuiteContext, L: Lattice) -> cd.CheckResult:
    t0 = time.perf_counter()
    Q = ctx.homset(L)
    oracle = L.is_distributive
    axioms = ctx.axioms(L).holds
    found = quantale.cyclic_dualizing_elements(Q)
    holds = oracle == axioms == bool(found)
    witness = None
    if not holds:
        witness = {"distributive_oracle": oracle,
                   "involutive_axioms": axioms,
                   "cyclic_dualizing_found": [f.values.tolist() for f in found]}
    return _timed("T13", t0, holds, witness)


def _t14(ctx: SuiteContext, L: Lattice) -> cd.CheckResult:
    t0 = time.perf_counter()
    res = ctx.axioms(L)
    rotation = bool(getattr(res, "info", {}).get("rotation_checked"))
    holds = res.holds and rotation
    witness = res.witness if not res.holds else (
        None if rotation else {"rotation_not_covered": True})
    return _timed("T14", t0, holds, witness)


REGISTRY: tuple[TheoremCheck, ...] = (
    TheoremCheck(
        "T1",
        "special o equals the pointwise join over t of c(t) composed after a(t)",
        _always, _t1),
    TheoremCheck(
        "T2",
        "interior of the upper indicator alpha(x) is the annihilator at o(x)",
        _always, _t2),
    TheoremCheck(
        "T3",
        "cyclic members of the endo homset all equal constant-top or special o",
        _gate(_size_cap(SAMPLED_N), _homset_cap(PAIR_HOMSET_CAP)), _t3),
    TheoremCheck(
        "T4",
        "constant-top is never dualizing on carriers with two or more elements",
        _gate(_need_nontrivial, _size_cap(SAMPLED_N),
              _homset_cap(PAIR_HOMSET_CAP)), _t4),
    TheoremCheck(
        "T5",
        "if special o is cyclic and differs from constant-top, the carrier "
        "meets the meet criterion and the distributivity oracle",
        _gate(_size_cap(SAMPLED_N), _homset_cap(PAIR_HOMSET_CAP)), _t5),
    TheoremCheck(
        "T6",
        "involutive-quantaloid axioms hold on completely distributive carriers",
        _gate(_need_cd, _homset_cap(PAIR_HOMSET_CAP)), _t6),
    TheoremCheck(
        "T6n",
        "involutive-quantaloid axioms fail on non completely distributive carriers",
        _gate(_need_non_cd, _homset_cap(PAIR_HOMSET_CAP)), _t6n),
    TheoremCheck(
        "T7",
        "the composition center is exactly the identity and constant-bottom",
        _gate(_homset_cap(CENTER_HOMSET_CAP)), _t7),
    TheoremCheck(
        "T8",
        "meet transform then join transform is the identity on jc maps over "
        "completely distributive carriers",
        _gate(_need_cd, _size_cap(SAMPLED_N)), _t8),
    TheoremCheck(
        "T8n",
        "meet transform then join transform moves the identity map on non "
        "completely distributive carriers",
        _gate(_need_non_cd,), _t8n),
    TheoremCheck(
        "T9",
        "interior equals join transform after omega, and join transform "
        "equals interior after o, for monotone maps over CD carriers",
        _gate(_need_cd, _size_cap(SAMPLED_N)), _t9),
    TheoremCheck(
        "T9n",
        "the interior-via-omega formula fails at the identity map on non "
        "completely distributive carriers",
        _gate(_need_non_cd,), _t9n),
    TheoremCheck(
        "T10",
        "join transform is order-preserving, lax over composition with a "
        "monotone left factor, exact for a jc left factor, and agrees with "
        "the left adjoint of the meet transform on jc maps",
        _gate(_size_cap(SAMPLED_N)), _t10),
    TheoremCheck(
        "T11",
        "special o sits below the identity exactly on chains and above it "
        "exactly on smooth carriers",
        _always, _t11),
    TheoremCheck(
        "T12",
        "big_meet of a pair is the interior of the pointwise meet and the "
        "enumerated homset infimum on CD carriers",
        _gate(_need_cd, _size_cap(EXHAUSTIVE_N),
              _homset_cap(PAIR_HOMSET_CAP)), _t12),
    TheoremCheck(
        "T12n",
        "big_meet differs from the interior of the pointwise meet at the "
        "identity pair on non CD carriers",
        _gate(_need_non_cd,), _t12n),
    TheoremCheck(
        "T13",
        "distributivity oracle, involutive axioms, and existence of a cyclic "
        "dualizing element agree",
        _gate(_homset_cap(PAIR_HOMSET_CAP)), _t13),
    TheoremCheck(
        "T14",
        "residual-via-transform formulas plus full triangle rotation hold on "
        "small completely distributive carriers",
        _gate(_need_cd, _size_cap(EXHAUSTIVE_N),
              _homset_cap(PAIR_HOMSET_CAP)), _t14),
)

CHECK_IDS = tuple(c.id for c in REGISTRY)


@dataclass
class Cell:
    status: str
    witness: Any = None
    reason: str | None = None
    expected: bool = True
    substantive: bool | None = None
    elapsed: float = 0.0

    def as_doc(self, timing: bool = False) -> dict:
        doc: dict[str, Any] = {"status": self.status}
        if self.witness is not None:
            doc["witness"] = self.witness
        if self.reason is not None:
            doc["reason"] = self.reason
        if self.status == "skip":
            doc["expected"] = self.expected
        if self.substantive is not None:
            doc["substantive"] = self.substantive
        if timing:
            doc["elapsed_ms"] = round(self.elapsed * 1000.0, 3)
        return doc


@dataclass
class SuiteReport:
    corpus: list[str]
    checks: list[str]
    results: dict[str, dict[str, Cell]]
    seed: int
    version: str = VERSION

    @property
    def summary(self) -> dict:
        counts = {"cells": 0, "pass": 0, "fail": 0, "skip": 0,
                  "unexpected_skip": 0, "vacuous_pass": 0}
        for row in self.results.values():
            for cell in row.values():
                counts["cells"] += 1
                counts[cell.status] = counts.get(cell.status, 0) + 1
                if cell.status == "skip" and not cell.expected:
                    counts["unexpected_skip"] += 1
                if cell.status == "pass" and cell.substantive is False:
                    counts["vacuous_pass"] += 1
        return counts

    @property
    def ok(self) -> bool:
        s = self.summary
        return s["fail"] == 0 and s["unexpected_skip"] == 0

    def as_doc(self, timing: bool = False) -> dict:
        return {
            "corpus": self.corpus,
            "checks": self.checks,
            "results": {
                check: {name: cell.as_doc(timing) for name, cell in row.items()}
                for check, row in self.results.items()
            },
            "summary": self.summary,
            "seed": self.seed,
            "version": self.version,
        }

    def render_text(self) -> str:
        width = max(len(n) for n in self.corpus) if self.corpus else 4
        cols = [c.rjust(5) for c in self.checks]
        lines = [" " * width + "".join(cols)]
        symbol = {"pass": "+", "fail": "F"}
        for name in self.corpus:
            row = []
            for check in self.checks:
                cell = self.results[check][name]
                if cell.status == "skip":
                    row.append("." if cell.expected else "!")
                elif cell.status == "pass" and cell.substantive is False:
                    row.append("v")
                else:
                    row.append(symbol[cell.status])
            lines.append(name.ljust(width) + "".join(s.rjust(5) for s in row))
        lines.append("")
        lines.append("legend: + pass, v vacuous pass, F fail, "
                     ". skip (declared), ! skip (cap hit)")
        s = self.summary
        lines.append(
            f"cells {s['cells']}: {s['pass']} pass "
            f"({s['vacuous_pass']} vacuous), {s['fail']} fail, "
            f"{s['skip']} skip ({s['unexpected_skip']} unexpected)")
        for check, row in self.results.items():
            for name, cell in row.items():
                if cell.status == "fail":
                    lines.append(f"FAIL {check} on {name}: {cell.witness}")
                elif cell.status == "skip" and not cell.expected:
                    lines.append(f"UNEXPECTED SKIP {check} on {name}: {cell.reason}")
        return "\n".join(lines) + "\n"


def run_suite(corpus: list[Lattice] | None = None,
              checks: list[str] | None = None,
              seed: int = 0,
              cap: int = quantale.DEFAULT_CAP) -> SuiteReport:
    """Run the registry (or a subset) over the corpus (builtin by default)."""
    if corpus is None:
        corpus = builtin_corpus()
    registry = list(REGISTRY)
    if checks is not None:
        unknown = set(checks) - set(CHECK_IDS)
        if unknown:
            raise ValueError(f"unknown check ids: {sorted(unknown)}")
        registry = [c for c in registry if c.id in set(checks)]
    ctx = SuiteContext(seed=seed, cap=cap)
    results: dict[str, dict[str, Cell]] = {}
    for chk in registry:
        row: dict[str, Cell] = {}
        for L in corpus:
            reason = chk.applies(ctx, L)
            if reason is not None:
                row[L.name] = Cell("skip", reason=reason)
                continue
            try:
                res = chk.run(ctx, L)
            except CapExceeded as e:
                row[L.name] = Cell("skip", reason=str(e), expected=False)
                continue
            row[L.name] = Cell(
                "pass" if res.holds else "fail",
                witness=res.witness,
                substantive=getattr(res, "substantive", None),
                elapsed=res.elapsed,
            )
        results[chk.id] = row
    return SuiteReport(
        corpus=[L.name for L in corpus],
        checks=[c.id for c in registry],
        results=results,
        seed=seed,
    )
