"""Finite quandles, quandle presentations and colorings.

A finite quandle on ``n`` elements is stored as its operation table,
``table[a][b] == a * b`` with elements ``0..n-1``.

>>> R3 = dihedral(3)
>>> R3(1, 0)
2
>>> check_axioms(R3.table).ok
True
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Hashable, Iterator

from .errors import DomainError, StructuralError


@dataclass(frozen=True)
class AxiomReport:
    ok: bool
    axiom: str | None = None
    witness: tuple[int, ...] = ()

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "pass"
        return f"fail {self.axiom} witness={self.witness}"


def _validate_shape(table) -> tuple[tuple[int, ...], ...]:
    try:
        rows = tuple(tuple(int(v) for v in row) for row in table)
    except (TypeError, ValueError) as exc:
        raise StructuralError(f"table is not a square integer array: {exc}") from None
    n = len(rows)
    if n == 0:
        raise StructuralError("a quandle table must have at least one row")
    for a, row in enumerate(rows):
        if len(row) != n:
            raise StructuralError(f"row {a} has length {len(row)}, expected {n}")
        for b, v in enumerate(row):
            if not 0 <= v < n:
                raise StructuralError(f"entry table[{a}][{b}] = {v} is outside 0..{n - 1}")
    return rows


def check_axioms(table) -> AxiomReport:
    """Check Q1-Q3 on an operation table.

    Returns the first violation found (Q1, then Q2, then Q3, scanning
    witnesses lexicographically).  A malformed table raises
    :class:`StructuralError` instead of producing a report.
    """
    t = _validate_shape(table)
    n = len(t)
    for a in range(n):
        if t[a][a] != a:
            return AxiomReport(False, "Q1", (a,))
    for b in range(n):
        seen: dict[int, int] = {}
        for a in range(n):
            c = t[a][b]
            if c in seen:
                # a*b and seen[c]*b collide; witness (a', a, b)
                return AxiomReport(False, "Q2", (seen[c], a, b))
            seen[c] = a
    for a, b, c in product(range(n), repeat=3):
        if t[t[a][b]][c] != t[t[a][c]][t[b][c]]:
            return AxiomReport(False, "Q3", (a, b, c))
    return AxiomReport(True)


@dataclass(frozen=True)
class FiniteQuandle:
    """A finite quandle given by its operation table.

    Construction validates the table; use :func:`check_axioms` to inspect a
    table without raising.
    """

    table: tuple[tuple[int, ...], ...]
    label: str = "X"

    def __post_init__(self):
        rows = _validate_shape(self.table)
        object.__setattr__(self, "table", rows)
        report = check_axioms(rows)
        if not report.ok:
            raise DomainError(f"table for {self.label!r} is not a quandle: {report}")

    @property
    def size(self) -> int:
        return len(self.table)

    def __len__(self):
        return len(self.table)

    def __call__(self, a: int, b: int) -> int:
        return self.table[a][b]

    @property
    def elements(self) -> range:
        return range(len(self.table))

    def right_inverse(self, a: int, b: int) -> int:
        """The unique ``c`` with ``c * b == a``."""
        for c in self.elements:
            if self.table[c][b] == a:
                return c
        raise AssertionError("unreachable for a valid quandle")


def trivial(n: int) -> FiniteQuandle:
    if n < 1:
        raise DomainError(f"trivial quandle needs n >= 1, got {n}")
    return FiniteQuandle(tuple(tuple(a for _ in range(n)) for a in range(n)), f"T{n}")


def dihedral(p: int) -> FiniteQuandle:
    """The dihedral quandle R_p on ``0..p-1`` with ``a*b = 2b - a mod p``.

    Only odd ``p`` is supported.
    """
    if p <= 0 or p % 2 == 0:
        raise DomainError(f"dihedral quandle requires a positive odd order, got p={p}")
    return FiniteQuandle(
        tuple(tuple((2 * b - a) % p for b in range(p)) for a in range(p)), f"R{p}"
    )


def alexander(n: int, t: int) -> FiniteQuandle:
    """Alexander quandle on Z_n with ``a*b = t*a + (1-t)*b``; ``t`` must be a unit mod n."""
    from math import gcd

    if n < 1 or gcd(t, n) != 1:
        raise DomainError(f"Alexander quandle needs t invertible mod n (n={n}, t={t})")
    return FiniteQuandle(
        tuple(tuple((t * a + (1 - t) * b) % n for b in range(n)) for a in range(n)),
        f"A{n},{t}",
    )


# ---------------------------------------------------------------------------
# presentations


@dataclass(frozen=True)
class QuandlePresentation:
    """Generators with relations ``s_i * s_j = s_k`` and equalities ``s_i = s_j``.

    Relation triples are ordered (behind, over, front) along a double curve.
    """

    generators: tuple[Hashable, ...]
    relations: tuple[tuple[Hashable, Hashable, Hashable], ...] = ()
    equalities: tuple[tuple[Hashable, Hashable], ...] = ()

    def __post_init__(self):
        gens = tuple(self.generators)
        rels = tuple(tuple(r) for r in self.relations)
        eqs = tuple(tuple(e) for e in self.equalities)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relations", rels)
        object.__setattr__(self, "equalities", eqs)
        if len(set(gens)) != len(gens):
            raise StructuralError("duplicate generator identifiers")
        known = set(gens)
        for r in rels:
            if len(r) != 3:
                raise StructuralError(f"relation {r} is not a triple")
            for g in r:
                if g not in known:
                    raise StructuralError(f"relation {r} refers to undeclared generator {g!r}")
        for e in eqs:
            if len(e) != 2:
                raise StructuralError(f"equality {e} is not a pair")
            for g in e:
                if g not in known:
                    raise StructuralError(f"equality {e} refers to undeclared generator {g!r}")

    def index(self, g) -> int:
        return self.generators.index(g)


@dataclass(frozen=True)
class Coloring:
    """An assignment of quandle elements to generators satisfying every relation."""

    generators: tuple[Hashable, ...]
    values: tuple[int, ...]

    @property
    def assignment(self) -> dict:
        return dict(zip(self.generators, self.values))

    def __getitem__(self, g) -> int:
        return self.values[self.generators.index(g)]

    def is_constant(self) -> bool:
        return len(set(self.values)) <= 1


def _constraints_by_position(P: QuandlePresentation):
    """For each generator position, the constraints that become checkable there.

    A constraint is attached to the largest position it mentions; when that
    position is the target of a relation or equality whose other entries
    precede it, the value is forced rather than checked.
    """
    pos = {g: i for i, g in enumerate(P.generators)}
    checks: list[list[tuple]] = [[] for _ in P.generators]
    for i, j, k in P.relations:
        a, b, c = pos[i], pos[j], pos[k]
        last = max(a, b, c)
        if c == last and a < c and b < c:
            checks[c].append(("force_rel", a, b))
        else:
            checks[last].append(("rel", a, b, c))
    for i, j in P.equalities:
        a, b = pos[i], pos[j]
        if a == b:
            continue
        lo, hi = min(a, b), max(a, b)
        checks[hi].append(("force_eq", lo))
    return checks


def iter_colorings(P: QuandlePresentation, X: FiniteQuandle) -> Iterator[Coloring]:
    """Yield colorings of ``P`` by ``X`` in lexicographic order."""
    m = len(P.generators)
    t = X.table
    n = len(t)
    checks = _constraints_by_position(P)
    values = [0] * m

    def candidates(pos):
        forced = None
        for chk in checks[pos]:
            if chk[0] == "force_rel":
                v = t[values[chk[1]]][values[chk[2]]]
            elif chk[0] == "force_eq":
                v = values[chk[1]]
            else:
                continue
            if forced is None:
                forced = v
            elif forced != v:
                return ()
        return range(n) if forced is None else (forced,)

    def consistent(pos):
        for chk in checks[pos]:
            if chk[0] == "rel":
                _, a, b, c = chk
                if t[values[a]][values[b]] != values[c]:
                    return False
        return True

    def rec(pos):
        if pos == m:
            yield Coloring(P.generators, tuple(values))
            return
        for v in candidates(pos):
            values[pos] = v
            if consistent(pos):
                yield from rec(pos + 1)

    yield from rec(0)


def enumerate_colorings(P: QuandlePresentation, X: FiniteQuandle) -> list[Coloring]:
    return list(iter_colorings(P, X))


def count_colorings(P: QuandlePresentation, X: FiniteQuandle) -> int:
    return sum(1 for _ in iter_colorings(P, X))


def _tag(prefix: str, g) -> str:
    return f"{prefix}.{g}"


def connected_sum(P1: QuandlePresentation, P2: QuandlePresentation, g1, g2) -> QuandlePresentation:
    """Presentation of a connected sum: disjoint union plus the equality ``g1 = g2``.

    Generators are renamed ``"1.<id>"`` and ``"2.<id>"``.
    """
    if g1 not in P1.generators:
        raise DomainError(f"{g1!r} is not a generator of the first presentation")
    if g2 not in P2.generators:
        raise DomainError(f"{g2!r} is not a generator of the second presentation")

    def rename(P, prefix):
        gens = tuple(_tag(prefix, g) for g in P.generators)
        rels = tuple(tuple(_tag(prefix, g) for g in r) for r in P.relations)
        eqs = tuple(tuple(_tag(prefix, g) for g in e) for e in P.equalities)
        return gens, rels, eqs

    a_gens, a_rels, a_eqs = rename(P1, "1")
    b_gens, b_rels, b_eqs = rename(P2, "2")
    return QuandlePresentation(
        a_gens + b_gens,
        a_rels + b_rels,
        a_eqs + b_eqs + ((_tag("1", g1), _tag("2", g2)),),
    )


def reverse_mirror_presentation(P: QuandlePresentation) -> QuandlePresentation:
    """Presentation of the knot quandle of the reversed mirror image.

    Reversing the orientation and taking the mirror image flips every normal
    vector and every height comparison together, so each double-curve
    relation reads the same: the presentation is returned unchanged.
    """
    return P


TREFOIL = QuandlePresentation(("a", "b", "c"), (("a", "b", "c"), ("b", "c", "a"), ("c", "a", "b")))


# ---------------------------------------------------------------------------
# text formats


def _data_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line.split()


def parse_quandle_table(text: str) -> tuple[str, list[list[int]]]:
    """Parse ``quandle <name> <n>`` followed by ``n`` rows, without checking axioms."""
    lines = list(_data_lines(text))
    if not lines or lines[0][1][0] != "quandle" or len(lines[0][1]) != 3:
        raise StructuralError("expected header 'quandle <name> <n>'")
    _, (_, name, n_text) = lines[0]
    try:
        n = int(n_text)
        rows = [[int(v) for v in words] for _, words in lines[1:]]
    except ValueError as exc:
        raise StructuralError(f"non-integer entry in quandle file: {exc}") from None
    if len(rows) != n:
        raise StructuralError(f"header declares {n} rows, found {len(rows)}")
    _validate_shape(rows)
    return name, rows


def parse_quandle(text: str) -> FiniteQuandle:
    name, rows = parse_quandle_table(text)
    return FiniteQuandle(rows, name)


def format_quandle(X: FiniteQuandle) -> str:
    out = [f"quandle {X.label} {X.size}"]
    out += [" ".join(str(v) for v in row) for row in X.table]
    return "\n".join(out) + "\n"


def parse_presentation(text: str) -> QuandlePresentation:
    gens: list[str] = []
    rels: list[tuple[str, str, str]] = []
    eqs: list[tuple[str, str]] = []
    for lineno, words in _data_lines(text):
        key, args = words[0], words[1:]
        if key == "gen" and args:
            gens.extend(args)
        elif key == "rel" and len(args) == 3:
            rels.append(tuple(args))
        elif key == "eq" and len(args) == 2:
            eqs.append(tuple(args))
        else:
            raise StructuralError(f"line {lineno}: cannot parse {' '.join(words)!r}")
    return QuandlePresentation(tuple(gens), tuple(rels), tuple(eqs))


def format_presentation(P: QuandlePresentation) -> str:
    out = ["gen " + " ".join(str(g) for g in P.generators)]
    out += ["rel " + " ".join(str(g) for g in r) for r in P.relations]
    out += ["eq " + " ".join(str(g) for g in e) for e in P.equalities]
    return "\n".join(out) + "\n"


def quandle_by_name(name: str) -> FiniteQuandle:
    """Resolve short names: ``R<p>`` dihedral, ``T<n>`` trivial, ``A<n>,<t>`` Alexander."""
    try:
        if name[0] in "Rr":
            return dihedral(int(name[1:]))
        if name[0] in "Tt":
            return trivial(int(name[1:]))
        if name[0] in "Aa":
            n, t = name[1:].split(",")
            return alexander(int(n), int(t))
    except DomainError:
        raise
    except (ValueError, IndexError):
        pass
    raise StructuralError(f"unknown quandle name {name!r} (use R<p>, T<n> or A<n>,<t>)")
