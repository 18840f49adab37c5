"""Combinatorial surface-knot diagrams and their fundamental cycles.

A diagram is described by its sheets, its double-curve relations
``(behind, over, front)`` and its triple points ``(bottom, middle, top,
sign)``.  The fundamental cycle is the signed sum of the sheet triples of
all triple points; it is checked by pushing it forward along every coloring
into a finite quandle.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from importlib import resources
from typing import Hashable, Mapping

from .chains import IntChain, boundary
from .errors import DomainError, StructuralError
from .quandle import Coloring, FiniteQuandle, QuandlePresentation, iter_colorings


@dataclass(frozen=True)
class TriplePoint:
    bottom: Hashable
    middle: Hashable
    top: Hashable
    sign: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise StructuralError(f"triple point sign must be +1 or -1, got {self.sign}")

    @property
    def sheets(self):
        return (self.bottom, self.middle, self.top)


@dataclass(frozen=True)
class DiagramDatum:
    sheets: tuple[Hashable, ...]
    relations: tuple[tuple[Hashable, Hashable, Hashable], ...] = ()
    triple_points: tuple[TriplePoint, ...] = ()
    name: str = "D"

    def __post_init__(self):
        object.__setattr__(self, "sheets", tuple(self.sheets))
        object.__setattr__(self, "relations", tuple(tuple(r) for r in self.relations))
        object.__setattr__(self, "triple_points", tuple(self.triple_points))
        known = set(self.sheets)
        if len(known) != len(self.sheets):
            raise StructuralError(f"{self.name}: duplicate sheet identifiers")
        for r in self.relations:
            if len(r) != 3 or not set(r) <= known:
                raise StructuralError(f"{self.name}: relation {r} refers to an unknown sheet")
        for tp in self.triple_points:
            if not set(tp.sheets) <= known:
                raise StructuralError(f"{self.name}: triple point {tp} refers to an unknown sheet")


# A sheet-level cycle is an IntChain-like map from sheet triples to integers.
SheetCycle = Mapping[tuple, int]


def presentation_of(D: DiagramDatum) -> QuandlePresentation:
    return QuandlePresentation(D.sheets, D.relations)


def fundamental_cycle(D: DiagramDatum) -> dict[tuple, int]:
    """Signed sum of ``(bottom, middle, top)`` over triple points, like terms merged."""
    acc: Counter = Counter()
    for tp in D.triple_points:
        acc[tp.sheets] += tp.sign
    return {k: v for k, v in sorted(acc.items(), key=lambda kv: repr(kv[0])) if v}


def negate_cycle(cycle: SheetCycle) -> dict[tuple, int]:
    return {k: -v for k, v in cycle.items()}


def pushforward(cycle: SheetCycle, c: Coloring, X: FiniteQuandle | None = None) -> IntChain:
    """Replace sheets by their colors; degenerate triples are dropped."""
    colors = c.assignment
    terms: Counter = Counter()
    for triple, coef in cycle.items():
        try:
            image = tuple(colors[s] for s in triple)
        except KeyError as exc:
            raise DomainError(f"sheet {exc.args[0]!r} is not colored") from None
        if X is not None and not all(0 <= x < X.size for x in image):
            raise DomainError(f"coloring leaves the quandle {X.label}")
        terms[image] += coef
    return IntChain(3, terms).quandle_part()


def verify_cycle(D: DiagramDatum, X: FiniteQuandle) -> bool:
    """True iff every pushed-forward fundamental cycle is a quandle 3-cycle over ``X``."""
    cycle = fundamental_cycle(D)
    for c in iter_colorings(presentation_of(D), X):
        if not boundary(pushforward(cycle, c, X), X, "Q").is_zero():
            return False
    return True


def relabel(D: DiagramDatum, mapping: Mapping) -> DiagramDatum:
    """Rename sheets by ``mapping`` (which must be injective on the sheets)."""
    m = dict(mapping)
    if len({m[s] for s in D.sheets}) != len(D.sheets):
        raise DomainError("relabeling must be injective")
    return DiagramDatum(
        tuple(m[s] for s in D.sheets),
        tuple(tuple(m[s] for s in r) for r in D.relations),
        tuple(TriplePoint(m[t.bottom], m[t.middle], m[t.top], t.sign) for t in D.triple_points),
        D.name,
    )


def mirror_datum(D: DiagramDatum) -> DiagramDatum:
    """Datum whose fundamental cycle is the negative of ``D``'s, same sheets and relations.

    This is the chain-level model of the reversed mirror image.
    """
    return DiagramDatum(
        D.sheets,
        D.relations,
        tuple(TriplePoint(t.bottom, t.middle, t.top, -t.sign) for t in D.triple_points),
        f"-{D.name}*",
    )


def connected_sum_datum(D1: DiagramDatum, D2: DiagramDatum, s1, s2) -> DiagramDatum:
    """Join two diagrams along sheets ``s1`` and ``s2``, which become one sheet.

    Sheets are renamed ``"1.<id>"`` / ``"2.<id>"``; the merged sheet keeps the
    first name.  No triple points are created by the tube.
    """
    if s1 not in D1.sheets or s2 not in D2.sheets:
        raise DomainError("connected sum needs a sheet from each diagram")
    m1 = {s: f"1.{s}" for s in D1.sheets}
    m2 = {s: f"2.{s}" for s in D2.sheets}
    m2[s2] = m1[s1]
    A, B = relabel(D1, m1), D2
    B_sheets = tuple(m2[s] for s in D2.sheets if s != s2)
    B_rels = tuple(tuple(m2[s] for s in r) for r in D2.relations)
    B_tps = tuple(TriplePoint(m2[t.bottom], m2[t.middle], m2[t.top], t.sign) for t in D2.triple_points)
    return DiagramDatum(
        A.sheets + B_sheets,
        A.relations + B_rels,
        A.triple_points + B_tps,
        f"{D1.name}#{D2.name}",
    )


# ---------------------------------------------------------------------------
# text format


def parse_diagram(text: str, name: str = "D") -> DiagramDatum:
    sheets, rels, tps = [], [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        words = raw.split("#", 1)[0].split()
        if not words:
            continue
        key, args = words[0], words[1:]
        if key == "name" and len(args) == 1:
            name = args[0]
        elif key == "sheet" and args:
            sheets.extend(args)
        elif key == "rel" and len(args) == 3:
            rels.append(tuple(args))
        elif key == "tp" and len(args) == 4 and args[3] in ("+", "-"):
            tps.append(TriplePoint(args[0], args[1], args[2], 1 if args[3] == "+" else -1))
        else:
            raise StructuralError(f"line {lineno}: cannot parse {raw.strip()!r}")
    return DiagramDatum(tuple(sheets), tuple(rels), tuple(tps), name)


def format_diagram(D: DiagramDatum) -> str:
    out = [f"name {D.name}"]
    out += [f"sheet {s}" for s in D.sheets]
    out += ["rel " + " ".join(map(str, r)) for r in D.relations]
    out += [
        f"tp {t.bottom} {t.middle} {t.top} {'+' if t.sign > 0 else '-'}" for t in D.triple_points
    ]
    return "\n".join(out) + "\n"


FIXTURES = {
    "trivial-sphere": "trivial_sphere.diagram",
    "twist-spun-trefoil": "twist_spun_trefoil.diagram",
    "twist-spun-5-1": "twist_spun_5_1.diagram",
    "twist-spun-7-1": "twist_spun_7_1.diagram",
    "bad-triple-point": "bad_triple_point.diagram",
}
POSITIVE_FIXTURES = ("trivial-sphere", "twist-spun-trefoil", "twist-spun-5-1", "twist-spun-7-1")


def load_fixture(key: str) -> DiagramDatum:
    if key not in FIXTURES:
        raise StructuralError(f"unknown fixture {key!r}; known: {', '.join(FIXTURES)}")
    text = resources.files("quandle_lab.fixtures").joinpath(FIXTURES[key]).read_text()
    return parse_diagram(text, key)
