"""Dense elements of the group ring Z[Z_q] = Z[t, t^-1] / (t^q - 1)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import DomainError


@dataclass(frozen=True)
class GroupRingElement:
    """``sum_a coefficients[a] * t^a`` with exponents taken mod ``modulus``."""

    modulus: int
    coefficients: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coefficients)
        if self.modulus < 1:
            raise DomainError("modulus must be positive")
        if len(coeffs) != self.modulus:
            raise DomainError(f"expected {self.modulus} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def zero(cls, q: int) -> "GroupRingElement":
        return cls(q, (0,) * q)

    @classmethod
    def monomial(cls, q: int, exponent: int, coefficient: int = 1) -> "GroupRingElement":
        c = [0] * q
        c[exponent % q] = coefficient
        return cls(q, tuple(c))

    @classmethod
    def from_exponents(cls, q: int, exponents: Iterable[int]) -> "GroupRingElement":
        c = [0] * q
        for e in exponents:
            c[e % q] += 1
        return cls(q, tuple(c))

    def _same(self, other):
        if not isinstance(other, GroupRingElement) or other.modulus != self.modulus:
            raise DomainError("group ring elements must share the modulus")

    def __add__(self, other):
        self._same(other)
        return GroupRingElement(self.modulus, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other):
        self._same(other)
        return GroupRingElement(self.modulus, tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self):
        return GroupRingElement(self.modulus, tuple(-a for a in self.coefficients))

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElement(self.modulus, tuple(other * a for a in self.coefficients))
        self._same(other)
        q = self.modulus
        out = [0] * q
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    if b:
                        out[(i + j) % q] += a * b
        return GroupRingElement(q, tuple(out))

    __rmul__ = __mul__

    def __getitem__(self, exponent: int) -> int:
        return self.coefficients[exponent % self.modulus]

    def mirror(self) -> "GroupRingElement":
        """Image under ``t -> t^-1``."""
        return self.substitute(-1)

    def substitute(self, u: int) -> "GroupRingElement":
        """Image under ``t -> t^u``."""
        q = self.modulus
        out = [0] * q
        for a, c in enumerate(self.coefficients):
            out[(u * a) % q] += c
        return GroupRingElement(q, tuple(out))

    def constant_term(self) -> int:
        return self.coefficients[0]

    def mass(self) -> int:
        """Sum of coefficients (the augmentation)."""
        return sum(self.coefficients)

    def is_palindromic(self) -> bool:
        return self == self.mirror()

    def vector(self) -> str:
        return " ".join(str(c) for c in self.coefficients)

    def pretty(self) -> str:
        terms = []
        for a, c in enumerate(self.coefficients):
            if not c:
                continue
            mono = "" if a == 0 else ("t" if a == 1 else f"t^{a}")
            if a == 0:
                body = str(abs(c))
            else:
                body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
            terms.append(("-" if c < 0 else "+", body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            s += f" {sign} {body}"
        return s

    def __str__(self):
        return self.pretty()


def equal_up_to_unit(a: GroupRingElement, b: GroupRingElement) -> int | None:
    """Smallest unit ``u`` with ``a(t^u) == b``, or None."""
    from math import gcd

    a._same(b)
    for u in range(1, a.modulus + 1):
        if gcd(u, a.modulus) == 1 and a.substitute(u) == b:
            return u
    return None
