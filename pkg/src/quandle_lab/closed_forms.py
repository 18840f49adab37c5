"""Closed-form invariants of the twist-spun torus-knot sums F_{p,1}, F_{p,2} and F_I.

For an odd prime ``p`` write ``G_+ = sum_k t^(2k^2)`` and ``G_- = sum_k t^(-2k^2)``
in Z[t, t^-1]/(t^p - 1).  Then

    Phi_p(F_{p,1}) = p * G_+^2        (K_p # K_p)
    Phi_p(F_{p,2}) = p * G_+ * G_-    (K_p # -K_p*)

When ``p = 3 mod 4`` the constant terms are ``p`` and ``p(2p-1)``, so the
two values differ; connected sums ``F_I`` over several such primes are told
apart one prime at a time.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .group_ring import GroupRingElement

CyclicPoly = GroupRingElement


def _is_odd_prime(p: int) -> bool:
    return p > 2 and p % 2 == 1 and all(p % d for d in range(3, int(p**0.5) + 1, 2))


def _require_odd_prime(p: int):
    if not _is_odd_prime(p):
        raise DomainError(f"p must be an odd prime, got {p}")


def gauss_sum_poly(p: int, sign: int = 1) -> CyclicPoly:
    """``sum_{k=0}^{p-1} t^(sign * 2k^2)``."""
    _require_odd_prime(p)
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    return CyclicPoly.from_exponents(p, (sign * 2 * k * k for k in range(p)))


def phi_closed_form(p: int, variant: int) -> CyclicPoly:
    if variant not in (1, 2):
        raise DomainError(f"variant must be 1 or 2, got {variant}")
    plus = gauss_sum_poly(p, 1)
    other = plus if variant == 1 else gauss_sum_poly(p, -1)
    return p * (plus * other)


def constant_term(v: CyclicPoly) -> int:
    return v.constant_term()


@dataclass(frozen=True)
class Prop31Report:
    p: int
    sum_count: int
    diff_count: int
    constant_terms: tuple[int, int]

    @property
    def ok(self) -> bool:
        p = self.p
        return (
            self.sum_count == 1
            and self.diff_count == 2 * p - 1
            and self.constant_terms == (p * self.sum_count, p * self.diff_count)
            and self.constant_terms[0] != self.constant_terms[1]
        )

    def lines(self) -> list[str]:
        return [
            f"p={self.p}",
            f"pairs_sum_zero={self.sum_count}",
            f"pairs_diff_zero={self.diff_count}",
            f"constant_term_F1={self.constant_terms[0]}",
            f"constant_term_F2={self.constant_terms[1]}",
            f"distinct={'yes' if self.constant_terms[0] != self.constant_terms[1] else 'no'}",
            f"verified={'yes' if self.ok else 'no'}",
        ]


def count_square_pairs(p: int) -> tuple[int, int]:
    """Count ``(i, j)`` in ``{0..p-1}^2`` with ``2(i^2+j^2) = 0`` and with ``2(i^2-j^2) = 0`` mod p."""
    plus = minus = 0
    for i in range(p):
        for j in range(p):
            if 2 * (i * i + j * j) % p == 0:
                plus += 1
            if 2 * (i * i - j * j) % p == 0:
                minus += 1
    return plus, minus


def verify_prop31(p: int) -> Prop31Report:
    _require_odd_prime(p)
    if p % 4 != 3:
        raise DomainError(f"p must satisfy p = 3 mod 4, but {p} = {p % 4} mod 4")
    plus, minus = count_square_pairs(p)
    terms = (constant_term(phi_closed_form(p, 1)), constant_term(phi_closed_form(p, 2)))
    return Prop31Report(p, plus, minus, terms)


# ---------------------------------------------------------------------------
# connected sums F_I


@dataclass(frozen=True)
class SurfaceKnotLabel:
    """``F_I = F_{p_1,e_1} # ... # F_{p_n,e_n}``, optionally reversed-mirrored.

    ``genus`` records an extra trivial summand of that genus; it does not
    change any of the invariants computed here.
    """

    primes: tuple[int, ...]
    exponents: tuple[int, ...]
    mirror: bool = False
    genus: int = 0

    def __post_init__(self):
        object.__setattr__(self, "primes", tuple(self.primes))
        object.__setattr__(self, "exponents", tuple(self.exponents))
        if len(self.primes) != len(self.exponents):
            raise DomainError("primes and exponents must have the same length")
        if len(set(self.primes)) != len(self.primes):
            raise DomainError("primes must be pairwise distinct")
        for p in self.primes:
            _require_odd_prime(p)
        if any(e not in (1, 2) for e in self.exponents):
            raise DomainError("exponents must be 1 or 2")
        if self.genus < 0:
            raise DomainError("genus must be non-negative")

    def mirrored(self) -> "SurfaceKnotLabel":
        return SurfaceKnotLabel(self.primes, self.exponents, not self.mirror, self.genus)

    def __str__(self):
        body = " # ".join(f"F_{{{p},{e}}}" for p, e in zip(self.primes, self.exponents)) or "S^2"
        if self.genus:
            body += f" # T_{self.genus}"
        return f"-({body})*" if self.mirror else body


def phi_FI(j: int, label: SurfaceKnotLabel) -> CyclicPoly:
    """Invariant at the ``j``-th prime (1-based) of the sum ``F_I``."""
    if not 1 <= j <= len(label.primes):
        raise DomainError(f"index j={j} outside 1..{len(label.primes)}")
    v = phi_closed_form(label.primes[j - 1], label.exponents[j - 1])
    return v.mirror() if label.mirror else v


@dataclass(frozen=True)
class Verdict:
    index: int
    prime: int
    constant_terms: tuple[int, int]
    differs: bool
    differs_from_mirror: bool

    @property
    def distinguished(self) -> bool:
        return self.differs and self.differs_from_mirror

    @property
    def text(self) -> str:
        return "condition (ii') fails" if self.distinguished else "undecided"


def distinguish_pair(I, I_prime, primes) -> Verdict:
    """Compare ``F_I`` with ``F_I'`` and with ``-(F_I')*`` at the first differing prime."""
    I, I_prime, primes = tuple(I), tuple(I_prime), tuple(primes)
    if not len(I) == len(I_prime) == len(primes):
        raise DomainError("I, I' and primes must have the same length")
    if I == I_prime:
        raise DomainError("I and I' must differ")
    a = SurfaceKnotLabel(primes, I)
    b = SurfaceKnotLabel(primes, I_prime)
    j = next(k for k in range(len(I)) if I[k] != I_prime[k]) + 1
    va, vb, vb_m = phi_FI(j, a), phi_FI(j, b), phi_FI(j, b.mirrored())
    return Verdict(
        j,
        primes[j - 1],
        (constant_term(va), constant_term(vb)),
        va != vb and constant_term(va) != constant_term(vb),
        va != vb_m and constant_term(va) != constant_term(vb_m),
    )
