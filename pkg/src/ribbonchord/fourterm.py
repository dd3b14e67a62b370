"""Framed four-term relations and their check on the partial-dual polynomial.

Two active chords take part in each relation: a *fixed* chord with ends
``y`` and ``y'`` and a *moving* chord, one of whose ends ``x`` sits next
to ``y``.  With ``D`` the diagram where ``x`` is immediately before ``y``,
the four terms are

    D  -  swap(D)  +  slide(swap(D))  -  slide(D)

where ``swap`` exchanges ``x`` and ``y`` and ``slide`` carries ``x`` along
the fixed band to ``y'`` (negating its sign when the fixed chord is
twisted).  In cyclic terms: ``x`` just before ``y``, just after ``y``,
then next to ``y'`` on the corresponding sides.  The relations differ only
in the framings of the active chords in the first diagram:

    T1  moving solid,  fixed solid
    T2  moving dashed, fixed solid
    T3  moving solid,  fixed dashed  (the slide makes the moving chord dashed)

Spectator chords live in an :class:`Ambient`, a diagram template with
three marker slots for ``y``, ``y'`` and the moving chord's other end.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from typing import Union

from .diagram import ChordEnd, Diagram, DiagramError, serialize, slide_tracked
from .pdpoly import Polynomial, partial_dual_polynomial
from .pdual import partial_dual
from .surface import euler_genus

MOVING, FIXED = "m", "f"
SLOT_Y, SLOT_Y2, SLOT_M = "@y1", "@y2", "@m"
SLOTS = (SLOT_Y, SLOT_Y2, SLOT_M)
MAX_SPECTATORS = 8

# relation -> (moving chord twisted, fixed chord twisted) in the first diagram
RELATIONS = {
    "T1": (False, False),
    "T2": (True, False),
    "T3": (False, True),
}

# pairs of G_{i;bb'} the T2 argument matches by slides (bits: moving, fixed)
T2_EPSILON_PAIRS = [
    ((1, "00"), (4, "00")),
    ((2, "00"), (3, "00")),
    ((2, "11"), (3, "11")),
    ((1, "10"), (2, "10")),
    ((4, "10"), (3, "10")),
    ((1, "01"), (2, "01")),
    ((3, "01"), (4, "01")),
    ((1, "11"), (4, "11")),
]

Item = Union[ChordEnd, str]


def _relation(name: str) -> str:
    key = name.upper()
    if key not in RELATIONS:
        raise ValueError(f"unknown relation {name!r}; expected one of T1, T2, T3")
    return key


@dataclass(frozen=True)
class Ambient:
    """Spectator chords plus the three slots where active ends go."""

    circles: tuple[tuple[Item, ...], ...]

    def __post_init__(self):
        circles = tuple(tuple(self._item(it) for it in circ) for circ in self.circles)
        object.__setattr__(self, "circles", circles)
        markers = [it for circ in circles for it in circ if isinstance(it, str)]
        if sorted(markers) != sorted(SLOTS):
            raise DiagramError(f"ambient needs each of {', '.join(SLOTS)} exactly once")
        spectators = self.spectators()
        if MOVING in spectators.framings() or FIXED in spectators.framings():
            raise DiagramError(f"labels {MOVING!r} and {FIXED!r} are reserved for active chords")

    @staticmethod
    def _item(it):
        if isinstance(it, str):
            if it not in SLOTS:
                raise DiagramError(f"unknown slot marker {it!r}")
            return it
        return ChordEnd(*it)

    def spectators(self) -> Diagram:
        return Diagram(tuple(tuple(it for it in circ if not isinstance(it, str))
                             for circ in self.circles))

    def fill(self, y_slot: list[ChordEnd], y2_slot: list[ChordEnd], m_slot: list[ChordEnd]) -> Diagram:
        fill = {SLOT_Y: y_slot, SLOT_Y2: y2_slot, SLOT_M: m_slot}
        circles = []
        for circ in self.circles:
            out: list[ChordEnd] = []
            for it in circ:
                out.extend(fill[it] if isinstance(it, str) else [it])
            circles.append(tuple(out))
        return Diagram(tuple(circles))

    def slot(self, marker: str) -> tuple[int, int]:
        for ci, circ in enumerate(self.circles):
            if marker in circ:
                return ci, circ.index(marker)
        raise KeyError(marker)

    def __str__(self) -> str:
        return " ; ".join("(" + ", ".join(str(it) for it in circ) + ")" for circ in self.circles)

    @classmethod
    def parse(cls, text: str) -> "Ambient":
        """Read e.g. ``"(@y1, a, @m ; -a, @y2)"``; slots are written as markers."""
        groups = re.findall(r"\(([^()]*)\)", text)
        if not groups or re.sub(r"\(([^()]*)\)|[\s;]", "", text):
            raise DiagramError(f"malformed ambient {text!r}")
        circles = []
        for g in groups:
            for part in g.split(";"):
                items = []
                for tok in (t.strip() for t in part.split(",")):
                    if not tok:
                        if part.strip():
                            raise DiagramError(f"empty item in {part!r}")
                        continue
                    if tok.startswith("@"):
                        items.append(tok)
                    elif re.fullmatch(r"-?[A-Za-z][A-Za-z0-9_]*", tok):
                        items.append(ChordEnd(tok.lstrip("-"), -1 if tok[0] == "-" else 1))
                    else:
                        raise DiagramError(f"bad ambient token {tok!r}")
                circles.append(tuple(items))
        return cls(tuple(circles))


def empty_ambient() -> Ambient:
    """One circle carrying only the active chords: x y ... x' ... y'."""
    return Ambient(((SLOT_Y, SLOT_M, SLOT_Y2),))


@dataclass(frozen=True)
class FourTermFamily:
    relation: str
    terms: tuple[tuple[int, Diagram], ...]
    ambient: Ambient | None = field(default=None, compare=False)
    # position of the moving end x in each term
    moving_end: tuple[tuple[int, int], ...] = field(default=(), compare=False)

    @property
    def active(self) -> tuple[str, str]:
        return (MOVING, FIXED)


def build_family(relation: str, ambient: Ambient) -> FourTermFamily:
    relation = _relation(relation)
    moving_twisted, fixed_twisted = RELATIONS[relation]
    x = ChordEnd(MOVING, 1)
    x_other = ChordEnd(MOVING, -1 if moving_twisted else 1)
    y = ChordEnd(FIXED, 1)
    y_other = ChordEnd(FIXED, -1 if fixed_twisted else 1)

    # the y1 slot is the only one filled with two ends, so it keeps its index
    ci, j = ambient.slot(SLOT_Y)
    d1 = ambient.fill([x, y], [y_other], [x_other])
    d2 = ambient.fill([y, x], [y_other], [x_other])
    d4, x4 = slide_tracked(d1, (ci, j), FIXED, "before")
    d3, x3 = slide_tracked(d2, (ci, j + 1), FIXED, "after")
    return FourTermFamily(relation, ((1, d1), (-1, d2), (1, d3), (-1, d4)), ambient,
                          ((ci, j), (ci, j + 1), x3, x4))


def check_family(f: FourTermFamily, mode: str = "gray") -> Polynomial:
    """Signed sum of the partial-dual polynomials of the four terms."""
    total = Polynomial()
    for coeff, d in f.terms:
        total = total + coeff * partial_dual_polynomial(d, mode=mode)
    return total


def enumerate_partial_duals_of_active(f: FourTermFamily) -> dict[tuple[int, str], Diagram]:
    """``G_{i;bb'}``: term ``i`` dualised at the moving (b) and fixed (b') chords."""
    out = {}
    for i, (_, d) in enumerate(f.terms, start=1):
        for bits in ("00", "01", "10", "11"):
            subset = [c for c, b in zip((MOVING, FIXED), bits) if b == "1"]
            out[(i, bits)] = partial_dual(d, subset).diagram
    return out


def t2_pair_violations(f: FourTermFamily) -> list[tuple]:
    """Pairs from :data:`T2_EPSILON_PAIRS` whose Euler genera differ."""
    duals = enumerate_partial_duals_of_active(f)
    bad = []
    for a, b in T2_EPSILON_PAIRS:
        ea, eb = euler_genus(duals[a]), euler_genus(duals[b])
        if ea != eb:
            bad.append((a, b, ea, eb))
    return bad


def corrupt_family(f: FourTermFamily) -> FourTermFamily | None:
    """Negative control: push the moving end of the last term one step
    further from the fixed chord, past a spectator end.  ``None`` if the
    neighbour on that side is not a spectator."""
    coeff, d = f.terms[-1]
    ci, j = f.moving_end[-1]
    circ = list(d.circles[ci])
    n = len(circ)
    if n < 3:
        return None
    away = 1 if circ[(j - 1) % n].chord == FIXED else -1
    k = (j + away) % n
    if circ[k].chord in (MOVING, FIXED):
        return None
    circ[j], circ[k] = circ[k], circ[j]
    circles = list(d.circles)
    circles[ci] = tuple(circ)
    terms = f.terms[:-1] + ((coeff, Diagram(tuple(circles))),)
    return FourTermFamily(f.relation, terms, f.ambient, f.moving_end[:-1] + ((ci, k),))


def random_ambient(max_spectators: int, circles: int, seed: int | str,
                   spectators: int | None = None) -> Ambient:
    """Seeded random ambient with up to ``max_spectators`` spectator chords.

    Spectator ends and the three slots are shuffled together and cut into
    ``circles`` (possibly empty) circles; spectator signs are random.
    """
    if not 0 <= max_spectators <= MAX_SPECTATORS:
        raise ValueError(f"max_spectators must be in 0..{MAX_SPECTATORS}")
    if circles < 1:
        raise ValueError("need at least one circle")
    rng = random.Random(seed)
    count = rng.randint(0, max_spectators) if spectators is None else spectators
    items: list[Item] = list(SLOTS)
    for k in range(count):
        label = f"s{k + 1}"
        items.append(ChordEnd(label, rng.choice((1, -1))))
        items.append(ChordEnd(label, rng.choice((1, -1))))
    rng.shuffle(items)
    cuts = sorted(rng.randint(0, len(items)) for _ in range(circles - 1))
    bounds = [0, *cuts, len(items)]
    return Ambient(tuple(tuple(items[a:b]) for a, b in zip(bounds, bounds[1:])))


# --------------------------------------------------------------------------
# batch verification


@dataclass
class Counterexample:
    relation: str
    trial: int
    ambient: str
    terms: list[str]
    residual: str

    def to_json(self) -> dict:
        return dict(self.__dict__)


@dataclass
class RelationReport:
    relation: str
    trials: int = 0
    vanished: int = 0
    counterexamples: list[Counterexample] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.vanished == self.trials

    def to_json(self) -> dict:
        return {
            "relation": self.relation,
            "trials": self.trials,
            "vanished": self.vanished,
            "ok": self.ok,
            "counterexamples": [c.to_json() for c in self.counterexamples],
        }


def trial_ambients(relation: str, trials: int, max_spectators: int, seed: int):
    """Deterministic ambients for one relation: 1-3 circles each."""
    rng = random.Random(f"{seed}:{_relation(relation)}")
    for t in range(trials):
        circles = rng.randint(1, 3)
        yield t, random_ambient(max_spectators, circles, rng.getrandbits(64))


def check_relation(relation: str, trials: int, max_spectators: int, seed: int) -> RelationReport:
    relation = _relation(relation)
    report = RelationReport(relation)
    for t, amb in trial_ambients(relation, trials, max_spectators, seed):
        fam = build_family(relation, amb)
        residual = check_family(fam)
        report.trials += 1
        if residual.is_zero():
            report.vanished += 1
        else:
            report.counterexamples.append(Counterexample(
                relation, t, str(amb), [serialize(d) for _, d in fam.terms], str(residual)))
    return report


def check_relations(relations, trials: int, max_spectators: int, seed: int) -> list[RelationReport]:
    return [check_relation(r, trials, max_spectators, seed) for r in relations]
