"""Ribbon-graph semantics of a framed chord diagram.

Each chord end occupies a segment of its circle.  The two endpoints of
that segment are its *corners*: ``before`` (entered first when walking the
circle counterclockwise) and ``after``.  Two perfect matchings on corners
describe the boundary of the thickened surface:

* arcs of circle boundary join ``(x, after)`` to ``(next(x), before)``;
* the long sides of each band join ``(x, before)-(y, after)`` and
  ``(y, before)-(x, after)`` for an untwisted chord, or
  ``(x, before)-(y, before)`` and ``(x, after)-(y, after)`` for a twisted one.

Every corner has degree two in the union, so boundary components are the
cycles of the union.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .diagram import Diagram

BEFORE, AFTER = 0, 1


@dataclass(frozen=True)
class Corner:
    end: tuple[int, int]  # (circle, index)
    side: int  # BEFORE or AFTER

    def __repr__(self):
        return f"Corner({self.end[0]}:{self.end[1]}, {'after' if self.side else 'before'})"


@dataclass(frozen=True)
class CornerPairing:
    arc_pairing: dict
    side_pairing: dict

    def cycles(self) -> list[list[Corner]]:
        seen = set()
        out = []
        for start in self.arc_pairing:
            if start in seen:
                continue
            cyc = []
            cur = start
            while True:
                seen.add(cur)
                cyc.append(cur)
                nxt = self.arc_pairing[cur]
                seen.add(nxt)
                cyc.append(nxt)
                cur = self.side_pairing[nxt]
                if cur == start:
                    break
            out.append(cyc)
        return out


@dataclass(frozen=True)
class SurfaceStats:
    components: int
    vertices: int
    edges: int
    boundary: int
    euler_genus: int
    orientable: bool
    genus: int

    def to_json(self) -> dict:
        return asdict(self)


class Flat:
    """Array form of a diagram: ends numbered 0..2e-1 in reading order."""

    __slots__ = ("circle_of", "nxt", "prv", "partner", "twisted", "num_circles", "empty_circles")

    def __init__(self, d: Diagram):
        circle_of, nxt, prv = [], [], []
        first: dict[str, int] = {}
        partner: list[int] = []
        twisted: list[bool] = []
        signs = []
        p = 0
        empty = 0
        for ci, circ in enumerate(d.circles):
            n = len(circ)
            if n == 0:
                empty += 1
            for j, end in enumerate(circ):
                circle_of.append(ci)
                nxt.append(p - j + (j + 1) % n)
                prv.append(p - j + (j - 1) % n)
                partner.append(-1)
                twisted.append(False)
                signs.append(end.sign)
                q = first.pop(end.chord, None)
                if q is None:
                    first[end.chord] = p
                else:
                    partner[p], partner[q] = q, p
                    twisted[p] = twisted[q] = signs[p] != signs[q]
                p += 1
        self.circle_of = circle_of
        self.nxt = nxt
        self.prv = prv
        self.partner = partner
        self.twisted = twisted
        self.num_circles = len(d.circles)
        self.empty_circles = empty


def _positions(d: Diagram):
    return [(ci, j) for ci, circ in enumerate(d.circles) for j in range(len(circ))]


def corner_structure(d: Diagram) -> CornerPairing:
    f = Flat(d)
    pos = _positions(d)
    arc, side = {}, {}
    for p in range(len(pos)):
        a, b = Corner(pos[p], AFTER), Corner(pos[f.nxt[p]], BEFORE)
        arc[a], arc[b] = b, a
        q = f.partner[p]
        if f.twisted[p]:
            side[Corner(pos[p], BEFORE)] = Corner(pos[q], BEFORE)
            side[Corner(pos[p], AFTER)] = Corner(pos[q], AFTER)
        else:
            side[Corner(pos[p], BEFORE)] = Corner(pos[q], AFTER)
            side[Corner(pos[p], AFTER)] = Corner(pos[q], BEFORE)
    return CornerPairing(arc, side)


def _count_cycles(f: Flat) -> int:
    # corner 2p = (p, before), 2p + 1 = (p, after)
    nxt, prv, partner, twisted = f.nxt, f.prv, f.partner, f.twisted
    n = 2 * len(nxt)
    seen = bytearray(n)
    cycles = 0
    for start in range(n):
        if seen[start]:
            continue
        cycles += 1
        c = start
        while True:
            seen[c] = 1
            p = c >> 1
            # arc move
            c = 2 * nxt[p] if c & 1 else 2 * prv[p] + 1
            seen[c] = 1
            # side move
            p = c >> 1
            c = 2 * partner[p] + ((c & 1) if twisted[p] else 1 - (c & 1))
            if c == start:
                break
    return cycles


def boundary_components(d: Diagram) -> int:
    f = Flat(d)
    return _count_cycles(f) + f.empty_circles


def boundary_cycles(d: Diagram) -> list[list[Corner]]:
    """The corner cycles; empty circles are not listed (they have no corners)."""
    return corner_structure(d).cycles()


def _components(f: Flat) -> int:
    parent = list(range(f.num_circles))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    comps = f.num_circles
    for p, q in enumerate(f.partner):
        if p < q:
            a, b = find(f.circle_of[p]), find(f.circle_of[q])
            if a != b:
                parent[a] = b
                comps -= 1
    return comps


def connected_components(d: Diagram) -> int:
    return _components(Flat(d))


def _euler_genus(f: Flat) -> int:
    b = _count_cycles(f) + f.empty_circles
    return 2 * _components(f) - f.num_circles + len(f.nxt) // 2 - b


def euler_genus(d: Diagram) -> int:
    """Euler genus 2c - v + e - b of the ribbon graph, summed over components."""
    return _euler_genus(Flat(d))


def _orientable(f: Flat) -> bool:
    # flip bit per circle; a chord stays untwisted after flips iff its
    # twist equals the parity of the flips at its two ends
    flip = [None] * f.num_circles
    adj: list[list[tuple[int, bool]]] = [[] for _ in range(f.num_circles)]
    for p, q in enumerate(f.partner):
        if p < q:
            a, b = f.circle_of[p], f.circle_of[q]
            if a == b:
                if f.twisted[p]:
                    return False
            else:
                adj[a].append((b, f.twisted[p]))
                adj[b].append((a, f.twisted[p]))
    for root in range(f.num_circles):
        if flip[root] is not None:
            continue
        flip[root] = False
        stack = [root]
        while stack:
            u = stack.pop()
            for v, tw in adj[u]:
                want = flip[u] ^ tw
                if flip[v] is None:
                    flip[v] = want
                    stack.append(v)
                elif flip[v] != want:
                    return False
    return True


def is_orientable(d: Diagram) -> bool:
    return _orientable(Flat(d))


def surface_stats(d: Diagram) -> SurfaceStats:
    f = Flat(d)
    c = _components(f)
    b = _count_cycles(f) + f.empty_circles
    e = len(f.nxt) // 2
    eps = 2 * c - f.num_circles + e - b
    orientable = _orientable(f)
    return SurfaceStats(
        components=c,
        vertices=f.num_circles,
        edges=e,
        boundary=b,
        euler_genus=eps,
        orientable=orientable,
        genus=eps // 2 if orientable else eps,
    )


def boundary_components_by_walk(d: Diagram) -> int:
    """Independent boundary count by walking the surface boundary.

    State is ``(arc, direction)``: arc ``p`` runs along the circle from end
    ``p`` to the next end, and direction +1 means counterclockwise.  Each
    boundary component is visited once in each direction, so the orbit
    count is twice the number of boundary components.
    """
    ends = [(ci, j) for ci, circ in enumerate(d.circles) for j in range(len(circ))]
    index = {e: k for k, e in enumerate(ends)}

    def succ(ci, j, step):
        n = len(d.circles[ci])
        return (ci, (j + step) % n)

    def mate(ci, j):
        label = d.circles[ci][j].chord
        for cj, circ in enumerate(d.circles):
            for k, e in enumerate(circ):
                if e.chord == label and (cj, k) != (ci, j):
                    return cj, k
        raise AssertionError("unpaired chord")

    def sign(ci, j):
        return d.circles[ci][j].sign

    def step(state):
        (ci, j), direction = state
        # the end we arrive at after running along the arc
        arrive = succ(ci, j, 1) if direction > 0 else (ci, j)
        other = mate(*arrive)
        same = sign(*arrive) == sign(*other)
        out = direction if same else -direction
        # leaving the far end: forward along its own arc, or backward along
        # the arc that ends there
        if out > 0:
            return (other, 1)
        return (succ(*other, -1), -1)

    states = {(e, s) for e in ends for s in (1, -1)}
    orbits = 0
    while states:
        start = states.pop()
        orbits += 1
        cur = step(start)
        while cur != start:
            states.discard(cur)
            cur = step(cur)
    empty = sum(1 for c in d.circles if not c)
    assert orbits % 2 == 0
    return orbits // 2 + empty
