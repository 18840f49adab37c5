"""Rack and quandle chain complexes, (co)homology, cocycles, Kronecker pairing.

Chains are sparse ``{tuple: coefficient}`` maps.  The boundary of an
``n``-tuple is

    d(x_1..x_n) = (-1)^(n-1) * sum_i (-1)^i [ (x_1..^x_i..x_n)
                                             - (x_1*x_i, .., x_{i-1}*x_i, x_{i+1}, .., x_n) ]

for ``n > 1`` and zero otherwise.  Theory ``"Q"`` works on the quotient by
degenerate tuples (``x_i == x_{i+1}`` for some ``i``); those are dropped
after every application of ``d``.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Mapping

import numpy as np

from .errors import BasisLimitError, ComputationError, DomainError, StructuralError
from .linalg import (
    in_row_space_mod_p,
    nullspace_mod_p,
    rank_mod_p,
    row_space_mod_p,
    smith_normal_form,
    _check_prime,
)
from .quandle import FiniteQuandle, dihedral

DEFAULT_BASIS_LIMIT = 20_000

THEORIES = ("R", "Q")


def is_degenerate(tup) -> bool:
    return any(tup[i] == tup[i + 1] for i in range(len(tup) - 1))


def _check_theory(theory):
    if theory not in THEORIES:
        raise DomainError(f"theory must be one of {THEORIES}, got {theory!r}")


@dataclass(frozen=True)
class IntChain:
    """Formal integer combination of ``degree``-tuples of quandle elements."""

    degree: int
    terms: Mapping[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for tup, c in self.terms.items():
            tup = tuple(int(x) for x in tup)
            if len(tup) != self.degree:
                raise StructuralError(f"tuple {tup} does not have length {self.degree}")
            c = int(c)
            if c:
                clean[tup] = clean.get(tup, 0) + c
        object.__setattr__(self, "terms", {k: v for k, v in sorted(clean.items()) if v})

    @classmethod
    def from_pairs(cls, degree, pairs: Iterable[tuple[tuple[int, ...], int]]):
        acc: dict = defaultdict(int)
        for tup, c in pairs:
            acc[tuple(tup)] += c
        return cls(degree, acc)

    def __add__(self, other: "IntChain") -> "IntChain":
        if self.degree != other.degree:
            raise DomainError("cannot add chains of different degree")
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc.get(k, 0) + v
        return IntChain(self.degree, acc)

    def __neg__(self):
        return IntChain(self.degree, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k: int):
        return IntChain(self.degree, {t: k * v for t, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def quandle_part(self) -> "IntChain":
        """Image in the quotient by degenerate tuples."""
        return IntChain(self.degree, {t: c for t, c in self.terms.items() if not is_degenerate(t)})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for tup, c in self.terms.items():
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else f"{abs(c)}"
            parts.append(f"{sign} {mag}({','.join(map(str, tup))})")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def _boundary_terms(tup, X: FiniteQuandle):
    """Yield ``(face, sign)`` pairs of the rack boundary of one tuple."""
    n = len(tup)
    if n <= 1:
        return
    t = X.table
    outer = -1 if (n - 1) % 2 else 1
    for i in range(1, n + 1):
        s = outer * (-1 if i % 2 else 1)
        xi = tup[i - 1]
        plain = tup[: i - 1] + tup[i:]
        acted = tuple(t[x][xi] for x in tup[: i - 1]) + tup[i:]
        yield plain, s
        yield acted, -s


def boundary(chain: IntChain, X: FiniteQuandle, theory: str = "Q") -> IntChain:
    _check_theory(theory)
    n = chain.degree
    for tup in chain.terms:
        for x in tup:
            if not 0 <= x < X.size:
                raise DomainError(f"tuple {tup} has entries outside the quandle {X.label}")
    if n <= 1:
        return IntChain(max(n - 1, 0), {})
    acc: dict = defaultdict(int)
    for tup, c in chain.terms.items():
        if theory == "Q" and is_degenerate(tup):
            continue
        for face, s in _boundary_terms(tup, X):
            if theory == "Q" and is_degenerate(face):
                continue
            acc[face] += s * c
    return IntChain(n - 1, acc)


def chain_basis(X: FiniteQuandle, n: int, theory: str = "Q", limit: int | None = None) -> list[tuple[int, ...]]:
    """Lexicographically ordered basis tuples of ``C_n`` (empty for ``n <= 0``)."""
    _check_theory(theory)
    if n <= 0:
        return []
    k = X.size
    size = k**n if theory == "R" else k * (k - 1) ** (n - 1)
    limit = DEFAULT_BASIS_LIMIT if limit is None else limit
    if size > limit:
        raise BasisLimitError(
            f"C^{theory}_{n}({X.label}) has {size} basis tuples, above the limit {limit}"
        )
    tuples = product(range(k), repeat=n)
    if theory == "R":
        return list(tuples)
    return [t for t in tuples if not is_degenerate(t)]


def boundary_matrix(X: FiniteQuandle, n: int, theory: str = "Q", limit: int | None = None) -> np.ndarray:
    """Matrix of ``d_n``: rows index ``C_{n-1}``, columns index ``C_n``."""
    if n < 1:
        raise DomainError(f"degree must be >= 1, got {n}")
    cols = chain_basis(X, n, theory, limit)
    rows = chain_basis(X, n - 1, theory, limit)
    M = np.zeros((len(rows), len(cols)), dtype=np.int64)
    if n == 1 or not cols:
        return M
    row_index = {t: i for i, t in enumerate(rows)}
    for j, tup in enumerate(cols):
        for face, s in _boundary_terms(tup, X):
            i = row_index.get(face)
            if i is not None:
                M[i, j] += s
    return M


def format_matrix_triplets(M) -> str:
    """Plain triplet text: header ``rows cols nnz`` then ``i j value`` per nonzero."""
    A = np.asarray(M)
    r, c = A.shape
    nz = list(zip(*np.nonzero(A)))
    lines = [f"{r} {c} {len(nz)}"]
    lines += [f"{i} {j} {int(A[i, j])}" for i, j in nz]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class AbelianGroupInvariants:
    rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise DomainError(f"torsion factors {self.torsion} do not form a divisibility chain")
        if any(d <= 1 for d in self.torsion):
            raise DomainError("torsion factors must exceed 1")

    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def __str__(self):
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) if parts else "0"


def homology(X: FiniteQuandle, n: int, theory: str = "Q", limit: int | None = None) -> AbelianGroupInvariants:
    """``H_n = ker d_n / im d_{n+1}`` via Smith normal forms."""
    if n < 1:
        raise DomainError(f"degree must be >= 1, got {n}")
    dim = len(chain_basis(X, n, theory, limit))
    _, rank_n = smith_normal_form(boundary_matrix(X, n, theory, limit))
    diag, rank_up = smith_normal_form(boundary_matrix(X, n + 1, theory, limit))
    free = dim - rank_n - rank_up
    return AbelianGroupInvariants(free, tuple(d for d in diag if d > 1))


# ---------------------------------------------------------------------------
# cochains


@dataclass(frozen=True)
class Cochain:
    """Quandle cochain with values in Z/``modulus``; zero on degenerate tuples."""

    degree: int
    modulus: int
    values: Mapping[tuple[int, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        if self.modulus < 1:
            raise DomainError("modulus must be positive")
        clean = {}
        for tup, v in self.values.items():
            tup = tuple(int(x) for x in tup)
            if len(tup) != self.degree:
                raise StructuralError(f"tuple {tup} does not have length {self.degree}")
            v = int(v) % self.modulus
            if v and is_degenerate(tup):
                raise DomainError(f"quandle cochain must vanish on degenerate tuple {tup}")
            if v:
                clean[tup] = v
        object.__setattr__(self, "values", dict(sorted(clean.items())))

    def __call__(self, tup) -> int:
        return self.values.get(tuple(tup), 0)

    def __add__(self, other: "Cochain") -> "Cochain":
        if (self.degree, self.modulus) != (other.degree, other.modulus):
            raise DomainError("cochains must share degree and modulus")
        acc = dict(self.values)
        for k, v in other.values.items():
            acc[k] = acc.get(k, 0) + v
        return Cochain(self.degree, self.modulus, acc)

    def __rmul__(self, k: int):
        return Cochain(self.degree, self.modulus, {t: k * v for t, v in self.values.items()})

    def __neg__(self):
        return (-1) * self

    def is_zero(self) -> bool:
        return not self.values

    def to_vector(self, basis) -> np.ndarray:
        return np.array([self(t) for t in basis], dtype=np.int64)

    @classmethod
    def from_vector(cls, degree, modulus, basis, vec):
        return cls(degree, modulus, {t: int(v) for t, v in zip(basis, vec) if int(v) % modulus})


def coboundary(phi: Cochain, X: FiniteQuandle, limit: int | None = None) -> Cochain:
    """``(d phi)(x) = phi(d x)`` on every non-degenerate ``(n+1)``-tuple."""
    n = phi.degree
    q = phi.modulus
    out = {}
    for tup in chain_basis(X, n + 1, "Q", limit):
        total = 0
        for face, s in _boundary_terms(tup, X):
            v = phi.values.get(face)
            if v:
                total += s * v
        if total % q:
            out[tup] = total % q
    return Cochain(n + 1, q, out)


def is_cocycle(theta: Cochain, X: FiniteQuandle, limit: int | None = None) -> bool:
    return coboundary(theta, X, limit).is_zero()


def kronecker(z: IntChain, theta: Cochain) -> int:
    """``<z, theta>`` in Z/q."""
    if z.degree != theta.degree:
        raise DomainError(f"degree mismatch: chain {z.degree}, cochain {theta.degree}")
    return sum(c * theta(t) for t, c in z.terms.items()) % theta.modulus


@dataclass(frozen=True)
class CocycleSpaces:
    """Bases (rows) of quandle cocycles and coboundaries over Z/q.

    Columns follow ``basis``, the non-degenerate ``degree``-tuples.
    """

    quandle: FiniteQuandle
    modulus: int
    degree: int
    basis: tuple[tuple[int, ...], ...]
    cocycles: np.ndarray
    coboundaries: np.ndarray

    @property
    def cohomology_dim(self) -> int:
        return self.cocycles.shape[0] - self.coboundaries.shape[0]

    def cochain(self, vec) -> Cochain:
        return Cochain.from_vector(self.degree, self.modulus, self.basis, vec)

    def is_cocycle_vector(self, vec) -> bool:
        return in_row_space_mod_p(vec, self.cocycles, self.modulus)

    def is_coboundary_vector(self, vec) -> bool:
        return in_row_space_mod_p(vec, self.coboundaries, self.modulus)


def solve_cocycles(X: FiniteQuandle, q: int, n: int, limit: int | None = None) -> CocycleSpaces:
    """Cocycle and coboundary bases of ``C^n_Q(X; Z_q)`` for prime ``q``."""
    _check_prime(q)
    if n < 2:
        raise DomainError(f"degree must be >= 2, got {n}")
    basis = chain_basis(X, n, "Q", limit)
    up = boundary_matrix(X, n + 1, "Q", limit)  # rows: basis
    down = boundary_matrix(X, n, "Q", limit)  # cols: basis
    # phi is a cocycle iff phi @ up == 0, i.e. up.T @ phi == 0
    if len(basis) == 0:
        empty = np.zeros((0, 0), dtype=np.int64)
        return CocycleSpaces(X, q, n, (), empty, empty)
    Z = nullspace_mod_p(up.T, q) if up.shape[1] else np.eye(len(basis), dtype=np.int64)
    # coboundaries are psi @ down for psi on (n-1)-tuples
    B = row_space_mod_p(down, q) if down.shape[0] else np.zeros((0, len(basis)), dtype=np.int64)
    return CocycleSpaces(X, q, n, tuple(basis), Z, B)


def _is_prime(p):
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def select_distinguished_cocycle(p: int, limit: int | None = None) -> Cochain:
    """A normalized 3-cocycle of R_p over Z_p representing a nonzero class.

    Takes the first solved cocycle basis vector that is not a coboundary and
    scales it so its first nonzero value (lexicographic tuple order) is 1.
    """
    if p % 2 == 0 or not _is_prime(p):
        raise DomainError(f"p must be an odd prime, got {p}")
    spaces = solve_cocycles(dihedral(p), p, 3, limit)
    for vec in spaces.cocycles:
        if not spaces.is_coboundary_vector(vec):
            lead = int(vec[np.nonzero(vec)[0][0]])
            scaled = (vec * pow(lead, -1, p)) % p
            return spaces.cochain(scaled)
    raise ComputationError(f"no nontrivial class in H^3_Q(R_{p}; Z_{p}) was found")


# ---------------------------------------------------------------------------
# text format


def format_cochain(theta: Cochain, quandle_name: str) -> str:
    lines = [f"cocycle {quandle_name} {theta.modulus} {theta.degree}"]
    lines += [" ".join(map(str, t)) + f" {v}" for t, v in theta.values.items()]
    return "\n".join(lines) + "\n"


def parse_cochain(text: str) -> tuple[str, Cochain]:
    rows = [ln.split("#", 1)[0].split() for ln in text.splitlines()]
    rows = [r for r in rows if r]
    if not rows or rows[0][0] != "cocycle" or len(rows[0]) != 4:
        raise StructuralError("expected header 'cocycle <quandle-name> <q> <n>'")
    try:
        _, name, q, n = rows[0]
        q, n = int(q), int(n)
        vals = {}
        for r in rows[1:]:
            if len(r) != n + 1:
                raise StructuralError(f"cochain line {' '.join(r)!r} needs {n} entries and a value")
            vals[tuple(int(x) for x in r[:n])] = int(r[n])
    except ValueError as exc:
        raise StructuralError(f"non-integer entry in cochain file: {exc}") from None
    return name, Cochain(n, q, vals)
