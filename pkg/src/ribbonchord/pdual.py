"""Partial duality G^A, built directly from its definition.

The boundary components of the spanning subgraph (V, A) become the new
vertex discs.  Each component alternates between arcs of old circles
(carrying the ends of chords outside A) and long sides of A-bands; every
A-chord reattaches along its two sides.

Signs for the reattached halves come from fixing coordinates on each
A-band: ``t`` runs from the chord's first end to its second, and the side
containing the first end's ``before`` corner is side 0.  A half emitted
while walking a side in direction of increasing ``t`` gets sign -1 on
side 0 and +1 on side 1; walking the other way flips it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .diagram import ChordEnd, Diagram, DiagramError

BEFORE, AFTER = 0, 1


@dataclass(frozen=True)
class DualResult:
    diagram: Diagram
    # per new circle: ("arc", circle, a_end_index | None, +1/-1) and
    # ("side", chord, 0/1) steps in walk order
    vertex_map: list = field(default_factory=list, compare=False)


def partial_dual(d: Diagram, chords: Iterable[str], *, trace: bool = True) -> DualResult:
    A = set(chords)
    known = set(d.framings())
    unknown = A - known
    if unknown:
        raise DiagramError(f"unknown chord(s): {', '.join(sorted(unknown))}")

    ends = [e for circ in d.circles for e in circ]
    loc = [(ci, j) for ci, circ in enumerate(d.circles) for j in range(len(circ))]
    n = len(ends)

    new_circles = []
    vmap = []

    # arcs leaving (p, AFTER) forward and (q, BEFORE) backward
    arc_after: dict[int, tuple[int, tuple]] = {}
    arc_before: dict[int, tuple[int, tuple]] = {}
    start = 0
    for ci, circ in enumerate(d.circles):
        m = len(circ)
        a_idx = [j for j in range(m) if circ[j].chord in A]
        if not a_idx:
            new_circles.append(circ)
            vmap.append([("arc", ci, None, 1)])
        else:
            for k, j in enumerate(a_idx):
                j2 = a_idx[(k + 1) % len(a_idx)]
                if j2 > j:
                    payload = circ[j + 1:j2]
                else:
                    payload = circ[j + 1:] + circ[:j2]
                p, q = start + j, start + j2
                arc_after[p] = (q, payload)
                arc_before[q] = (p, payload)
        start += m

    # side pairing on A-corners, with band coordinates
    first: dict[str, int] = {}
    side_of: dict[tuple[int, int], tuple[tuple[int, int], int, bool]] = {}
    for p in range(n):
        e = ends[p]
        if e.chord not in A:
            continue
        x = first.pop(e.chord, None)
        if x is None:
            first[e.chord] = p
            continue
        y = p
        twisted = ends[x].sign != e.sign
        y0 = (y, BEFORE) if twisted else (y, AFTER)
        y1 = (y, AFTER) if twisted else (y, BEFORE)
        # value: (other corner, side index, entering at first end)
        side_of[(x, BEFORE)] = (y0, 0, True)
        side_of[y0] = ((x, BEFORE), 0, False)
        side_of[(x, AFTER)] = (y1, 1, True)
        side_of[y1] = ((x, AFTER), 1, False)

    seen = set()
    for corner0 in side_of:
        if corner0 in seen:
            continue
        out: list[ChordEnd] = []
        steps = []
        cur = corner0
        while True:
            seen.add(cur)
            p, s = cur
            if s == AFTER:
                q, payload = arc_after[p]
                out.extend(payload)
                arrive = (q, BEFORE)
                if trace:
                    steps.append(("arc", loc[p][0], loc[p][1], 1))
            else:
                q, payload = arc_before[p]
                out.extend(-e for e in reversed(payload))
                arrive = (q, AFTER)
                if trace:
                    steps.append(("arc", loc[p][0], loc[p][1], -1))
            seen.add(arrive)
            other, side, t_inc = side_of[arrive]
            sign = 1 if side == 1 else -1
            if not t_inc:
                sign = -sign
            chord = ends[arrive[0]].chord
            out.append(ChordEnd(chord, sign))
            if trace:
                steps.append(("side", chord, side))
            cur = other
            if cur == corner0:
                break
        new_circles.append(tuple(out))
        vmap.append(steps)

    return DualResult(Diagram._trusted(tuple(new_circles)), vmap if trace else [])


def full_dual(d: Diagram) -> DualResult:
    return partial_dual(d, d.framings())
