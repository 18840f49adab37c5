"""Cocycle invariants as state sums over colorings."""
from __future__ import annotations

import random
from dataclasses import dataclass

from .chains import Cochain, chain_basis, coboundary, is_cocycle, kronecker
from .diagram import DiagramDatum, fundamental_cycle, presentation_of, pushforward, relabel
from .errors import DomainError
from .group_ring import GroupRingElement
from .quandle import FiniteQuandle, iter_colorings


def phi(D: DiagramDatum, X: FiniteQuandle, theta: Cochain, *, check: bool = True) -> GroupRingElement:
    """Sum over colorings ``c`` of ``t^<c_*|D|, theta>`` in Z[Z_q]."""
    if theta.degree != 3:
        raise DomainError(f"state sums need a 3-cocycle, got degree {theta.degree}")
    if check and not is_cocycle(theta, X):
        raise DomainError("theta is not a quandle 3-cocycle of the given quandle")
    return _state_sum(fundamental_cycle(D), D, X, theta)


def _state_sum(cycle, D, X, theta) -> GroupRingElement:
    weights = (kronecker(pushforward(cycle, c, X), theta) for c in iter_colorings(presentation_of(D), X))
    return GroupRingElement.from_exponents(theta.modulus, weights)


def phi_of_cycle(cycle, D: DiagramDatum, X: FiniteQuandle, theta: Cochain) -> GroupRingElement:
    """State sum of an explicitly given sheet cycle over the colorings of ``D``."""
    return _state_sum(cycle, D, X, theta)


def phi_mirror(v: GroupRingElement) -> GroupRingElement:
    """Invariant of the reversed mirror image: ``t -> t^-1``."""
    return v.mirror()


@dataclass(frozen=True)
class ProbeReport:
    trials: int
    reference: GroupRingElement
    failures: int

    @property
    def all_equal(self) -> bool:
        return self.failures == 0


def random_cochain(X: FiniteQuandle, q: int, n: int, rng: random.Random) -> Cochain:
    return Cochain(n, q, {t: rng.randrange(q) for t in chain_basis(X, n, "Q")})


def invariance_probe(D: DiagramDatum, X: FiniteQuandle, theta: Cochain, trials: int = 100,
                     seed: int = 0, cycle=None) -> ProbeReport:
    """Recompute the state sum under random sheet relabelings and coboundary shifts.

    ``cycle`` overrides the fundamental cycle (given on the original sheet
    names), which lets a test inject a broken cycle and watch the probe catch it.
    """
    rng = random.Random(seed)
    base_cycle = fundamental_cycle(D) if cycle is None else dict(cycle)
    reference = _state_sum(base_cycle, D, X, theta)
    failures = 0
    for _ in range(trials):
        names = list(D.sheets)
        fresh = [f"r{i}" for i in range(len(names))]
        rng.shuffle(fresh)
        mapping = dict(zip(names, fresh))
        D2 = relabel(D, mapping)
        cyc2 = {tuple(mapping[s] for s in k): v for k, v in base_cycle.items()}
        shift = coboundary(random_cochain(X, theta.modulus, 2, rng), X)
        if _state_sum(cyc2, D2, X, theta + shift) != reference:
            failures += 1
    return ProbeReport(trials, reference, failures)
