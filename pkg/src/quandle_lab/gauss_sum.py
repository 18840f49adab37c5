"""Symbolic evaluation of the multiplicative Gauss-sum invariant.

Values are known only for a few building blocks; the invariant of a
connected sum is the product of the values of its summands.

>>> sigma_value(parse_expression("ribbon:2 # spun-torus"))
8
"""
from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .errors import DomainError, StructuralError


@dataclass(frozen=True)
class RibbonGenus:
    """A ribbon surface-knot of genus ``h``; its value is ``2**h``."""

    h: int

    def __post_init__(self):
        if self.h < 0:
            raise DomainError(f"genus must be non-negative, got {self.h}")

    @property
    def value(self) -> int:
        return 2**self.h


@dataclass(frozen=True)
class SpunTorus:
    value: int = 2


@dataclass(frozen=True)
class TurnedSpunTorus:
    value: int = 0


@dataclass(frozen=True)
class Custom:
    name: str
    value: int


@dataclass(frozen=True)
class SigmaExpression:
    factors: tuple = ()

    def __add__(self, other: "SigmaExpression") -> "SigmaExpression":
        # connected sum
        return SigmaExpression(self.factors + other.factors)


def sigma_value(e: SigmaExpression) -> int:
    return prod(f.value for f in e.factors)


def parse_expression(text: str) -> SigmaExpression:
    """Parse ``"ribbon:2 # spun-torus # turned-spun-torus # custom:name=5"``."""
    factors = []
    for raw in text.split("#"):
        tok = raw.strip()
        if not tok:
            continue
        try:
            if tok.startswith("ribbon:"):
                factors.append(RibbonGenus(int(tok.split(":", 1)[1])))
            elif tok == "spun-torus":
                factors.append(SpunTorus())
            elif tok == "turned-spun-torus":
                factors.append(TurnedSpunTorus())
            elif tok.startswith("custom:"):
                name, value = tok.split(":", 1)[1].split("=")
                factors.append(Custom(name, int(value)))
            else:
                raise StructuralError(f"unknown summand {tok!r}")
        except ValueError as exc:
            if isinstance(exc, (DomainError, StructuralError)):
                raise
            raise StructuralError(f"cannot parse summand {tok!r}") from None
    return SigmaExpression(tuple(factors))


@dataclass(frozen=True)
class GenusVerdict:
    genus: int
    spun_value: int
    turned_value: int

    @property
    def distinguished(self) -> bool:
        return self.spun_value != self.turned_value

    @property
    def text(self) -> str:
        return "condition (iii') fails" if self.distinguished else "undecided"


def distinguish_genus_g_pair(g: int) -> GenusVerdict:
    """Compare ``G # T(k)`` and ``G # T~(k)`` with ``G`` ribbon of genus ``g - 1``."""
    if g < 1:
        raise DomainError(f"genus must be positive, got {g}")
    G = SigmaExpression((RibbonGenus(g - 1),))
    spun = sigma_value(G + SigmaExpression((SpunTorus(),)))
    turned = sigma_value(G + SigmaExpression((TurnedSpunTorus(),)))
    return GenusVerdict(g, spun, turned)
