"""Complete-distributivity criteria, the independent oracle, profiles.

Three routes to the same verdict on a finite lattice: the two transform
criteria (join of meets-of-complements, meet of joins-of-complements)
and a plain triple-distributivity scan.  Finiteness makes them agree;
the suite and the acceptance tests quantify that agreement.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Any

import numpy as np

from . import maps
from .errors import CapExceeded
from .lattice import (
    Lattice,
    completely_join_primes,
    distributivity_witness,
    is_chain,
    is_smooth,
)


@dataclass
class CheckResult:
    """Verdict of one named check, with a replayable witness on failure."""

    name: str
    holds: bool
    witness: Any = None
    elapsed: float = 0.0

    def as_doc(self, timing: bool = False) -> dict:
        doc: dict[str, Any] = {
            "name": self.name,
            "holds": self.holds,
            "witness": self.witness,
        }
        if timing:
            doc["elapsed_ms"] = round(self.elapsed * 1000.0, 3)
        return doc


def raney_join_criterion(L: Lattice) -> CheckResult:
    """Every x equals the join over t not above x of omega(t)."""
    t0 = time.perf_counter()
    om = maps.special(L, "omega").values
    got = maps._batch_raney_join(L, L, om[None, :])[0]
    bad = np.flatnonzero(got != np.arange(L.n))
    witness = None
    if len(bad):
        x = int(bad[0])
        witness = {"x": x, "computed": int(got[x])}
    return CheckResult("raney_join_criterion", not len(bad), witness,
                       time.perf_counter() - t0)


def raney_meet_criterion(L: Lattice) -> CheckResult:
    """Every y equals the meet over t not below y of o(t)."""
    t0 = time.perf_counter()
    o = maps.special(L, "o").values
    got = maps._batch_raney_meet(L, L, o[None, :])[0]
    bad = np.flatnonzero(got != np.arange(L.n))
    witness = None
    if len(bad):
        y = int(bad[0])
        witness = {"y": y, "computed": int(got[y])}
    return CheckResult("raney_meet_criterion", not len(bad), witness,
                       time.perf_counter() - t0)


def distributive_oracle(L: Lattice) -> CheckResult:
    """Triple scan x ^ (y v z) == (x ^ y) v (x ^ z); no transform code."""
    t0 = time.perf_counter()
    w = distributivity_witness(L)
    witness = None
    if w is not None:
        x, y, z = w
        witness = {
            "x": x, "y": y, "z": z,
            "lhs": int(L.meet[x, L.join[y, z]]),
            "rhs": int(L.join[L.meet[x, y], L.meet[x, z]]),
        }
    return CheckResult("distributive_oracle", w is None, witness,
                       time.perf_counter() - t0)


def criteria_agree(L: Lattice) -> bool:
    """All three verdicts coincide (they must, on finite carriers)."""
    a = raney_join_criterion(L).holds
    b = raney_meet_criterion(L).holds
    c = distributive_oracle(L).holds
    return a == b == c


def bounded_family_cd_check(L: Lattice, max_i: int = 2, max_j: int = 2,
                            work_cap: int = 1 << 20) -> CheckResult:
    """Meet-of-joins equals join of choice-function meets, up to the bounds.

    Only full max_i x max_j matrices are enumerated: a shorter row is the
    same row with a repeated value, and a duplicated row changes neither
    side (its extra choice terms are absorbed by the join), so smaller
    shapes are covered.
    """
    t0 = time.perf_counter()
    n = L.n
    if n ** (max_i * max_j) > work_cap:
        raise CapExceeded(
            f"{n}^{max_i * max_j} families exceed the {work_cap} work cap")
    rows = list(itertools.product(range(n), repeat=max_j))
    row_join = [L.sup(r) for r in rows]
    choices = list(itertools.product(range(max_j), repeat=max_i))
    for mat in itertools.product(range(len(rows)), repeat=max_i):
        lhs = L.inf(row_join[r] for r in mat)
        rhs = L.bottom
        for psi in choices:
            term = L.inf(rows[mat[i]][psi[i]] for i in range(max_i))
            rhs = int(L.join[rhs, term])
            if rhs == lhs:
                break
        if rhs != lhs:
            witness = {
                "family": [list(rows[r]) for r in mat],
                "lhs": lhs,
                "rhs": rhs,
            }
            return CheckResult("bounded_family_cd_check", False, witness,
                               time.perf_counter() - t0)
    return CheckResult("bounded_family_cd_check", True, None,
                       time.perf_counter() - t0)


def is_spatial(L: Lattice) -> bool:
    """Every element is the join of the completely join-primes below it."""
    primes = sorted(completely_join_primes(L))
    return all(
        L.sup(p for p in primes if L.leq[p, x]) == x
        for x in range(L.n)
    )


@dataclass
class LatticeProfile:
    name: str | None
    n: int
    chain: bool
    distributive: bool
    completely_distributive: bool
    smooth: bool
    spatial: bool
    join_primes: list[int]

    def as_doc(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "chain": self.chain,
            "distributive": self.distributive,
            "completely_distributive": self.completely_distributive,
            "smooth": self.smooth,
            "spatial": self.spatial,
            "join_primes": self.join_primes,
        }


def classify_lattice(L: Lattice) -> LatticeProfile:
    """Structure profile; complete distributivity via the join criterion."""
    return LatticeProfile(
        name=L.name,
        n=L.n,
        chain=is_chain(L),
        distributive=L.is_distributive,
        completely_distributive=raney_join_criterion(L).holds,
        smooth=is_smooth(L),
        spatial=is_spatial(L),
        join_primes=sorted(completely_join_primes(L)),
    )
