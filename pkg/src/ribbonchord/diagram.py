"""Framed chord diagrams on one or more circles.

A diagram is stored as its signed rotation: for every circle, the cyclic
sequence of half-chords met when walking the circle counterclockwise.  A
chord whose two halves carry the same sign is orientable (framing 0, a
plain band); opposite signs mean the chord is twisted (framing 1, a
half-twisted band).

Text format::

    (a, b, c, -a, -b, c, d, d)
    (a, a ; b, -b)
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence


_LABEL = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


class DiagramError(ValueError):
    """Raised for malformed diagrams or diagram text."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class ChordEnd(NamedTuple):
    chord: str
    sign: int  # +1 or -1

    def __neg__(self) -> "ChordEnd":
        return ChordEnd(self.chord, -self.sign)

    def __str__(self) -> str:
        return self.chord if self.sign > 0 else "-" + self.chord


@dataclass(frozen=True)
class Diagram:
    circles: tuple[tuple[ChordEnd, ...], ...]

    def __post_init__(self):
        circles = tuple(tuple(ChordEnd(str(c), int(s)) for c, s in circ) for circ in self.circles)
        object.__setattr__(self, "circles", circles)
        counts = Counter(end.chord for circ in circles for end in circ)
        for chord, n in counts.items():
            if not chord:
                raise DiagramError("empty chord label")
            if not _LABEL.fullmatch(chord):
                raise DiagramError(f"invalid chord label {chord!r}")
            if n != 2:
                raise DiagramError(f"chord {chord!r} occurs {n} time(s), expected 2")
        for circ in circles:
            for end in circ:
                if end.sign not in (1, -1):
                    raise DiagramError(f"bad sign {end.sign!r} on chord {end.chord!r}")

    @classmethod
    def _trusted(cls, circles) -> "Diagram":
        # skips validation; callers guarantee a well-formed tuple of tuples
        d = object.__new__(cls)
        object.__setattr__(d, "circles", circles)
        return d

    @classmethod
    def from_lists(cls, circles: Iterable[Iterable[tuple[str, int]]]) -> "Diagram":
        return cls(tuple(tuple(ChordEnd(c, s) for c, s in circ) for circ in circles))

    @property
    def num_circles(self) -> int:
        return len(self.circles)

    def chords(self) -> list[str]:
        """Chord labels in order of first occurrence."""
        seen = {}
        for circ in self.circles:
            for end in circ:
                seen.setdefault(end.chord, None)
        return list(seen)

    @property
    def num_chords(self) -> int:
        return sum(len(c) for c in self.circles) // 2

    def positions(self, chord: str) -> list[tuple[int, int]]:
        return [(i, j) for i, circ in enumerate(self.circles)
                for j, end in enumerate(circ) if end.chord == chord]

    def framing(self, chord: str) -> int:
        """0 for an orientable chord, 1 for a twisted one."""
        (i, j), (k, l) = self.positions(chord)
        return 0 if self.circles[i][j].sign == self.circles[k][l].sign else 1

    def framings(self) -> dict[str, int]:
        signs: dict[str, int] = {}
        out: dict[str, int] = {}
        for circ in self.circles:
            for end in circ:
                if end.chord in signs:
                    out[end.chord] = 0 if signs[end.chord] == end.sign else 1
                else:
                    signs[end.chord] = end.sign
        return {c: out[c] for c in signs}

    def is_twisted(self, chord: str) -> bool:
        return self.framing(chord) == 1

    def __str__(self) -> str:
        return serialize(self)


# --------------------------------------------------------------------------
# text format

_TOKEN = re.compile(r"\s*(?:(?P<punct>[();,-])|(?P<label>[A-Za-z][A-Za-z0-9_]*)|(?P<bad>\S))")


def _tokenize(text: str):
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # trailing whitespace
            break
        if m.group("bad") is not None:
            raise DiagramError(f"unexpected character {m.group('bad')!r}", m.start("bad"))
        kind = "punct" if m.group("punct") is not None else "label"
        yield kind, m.group(kind), m.start(kind)
        pos = m.end()
    yield "eof", "", len(text)


def parse(text: str) -> Diagram:
    """Parse a signed rotation such as ``"(a, b, -a, b) ; (c, c)"``.

    A ``;`` inside parentheses also starts a new circle, so
    ``"(a, a ; b, -b)"`` and ``"(a, a) ; (b, -b)"`` are the same diagram.
    """
    tokens = list(_tokenize(text))
    i = 0

    def peek(value):
        return tokens[i][0] == "punct" and tokens[i][1] == value

    def fail(what):
        kind, tok, pos = tokens[i]
        found = "end of input" if kind == "eof" else repr(tok)
        raise DiagramError(f"expected {what}, found {found}", pos)

    circles = []
    while True:
        if not peek("("):
            fail("'('")
        i += 1
        while True:
            circ = []
            if not (peek(")") or peek(";")):
                while True:
                    sign = 1
                    if peek("-"):
                        sign = -1
                        i += 1
                    if tokens[i][0] != "label":
                        fail("chord label")
                    circ.append(ChordEnd(tokens[i][1], sign))
                    i += 1
                    if not peek(","):
                        break
                    i += 1
            circles.append(tuple(circ))
            if not peek(";"):
                break
            i += 1
        if not peek(")"):
            fail("',', ';' or ')'")
        i += 1
        if tokens[i][0] == "eof":
            break
        if not peek(";"):
            fail("';' or end of input")
        i += 1
    return Diagram(tuple(circles))


def serialize(d: Diagram) -> str:
    return " ; ".join("(" + ", ".join(str(e) for e in circ) + ")" for circ in d.circles)


# --------------------------------------------------------------------------
# moves


def _inverse(seq: Sequence[ChordEnd]) -> tuple[ChordEnd, ...]:
    return tuple(-e for e in reversed(seq))


def flip_circle(d: Diagram, i: int) -> Diagram:
    """Vertex flip: reverse circle ``i`` and negate every sign on it."""
    if not 0 <= i < len(d.circles):
        raise IndexError(f"circle index {i} out of range for {len(d.circles)} circle(s)")
    circles = list(d.circles)
    circles[i] = _inverse(circles[i])
    return Diagram(tuple(circles))


def mirror(d: Diagram) -> Diagram:
    return Diagram(tuple(_inverse(c) for c in d.circles))


def relabel(d: Diagram, mapping: dict[str, str]) -> Diagram:
    return Diagram(tuple(tuple(ChordEnd(mapping.get(e.chord, e.chord), e.sign) for e in circ)
                         for circ in d.circles))


def negate_chord(d: Diagram, chord: str) -> Diagram:
    """Reverse both half-chord signs of ``chord`` (an equivalence)."""
    return Diagram(tuple(tuple(-e if e.chord == chord else e for e in circ)
                         for circ in d.circles))


def _slide_target(d, pos, chord, side=None, wrong=False):
    ci, j = pos
    if not 0 <= ci < len(d.circles) or not 0 <= j < len(d.circles[ci]):
        raise DiagramError(f"no chord end at position {ci}:{j}")
    circ = d.circles[ci]
    x = circ[j]
    if x.chord == chord:
        raise DiagramError("cannot slide a chord end along its own chord")
    if chord not in d.framings():
        raise DiagramError(f"unknown chord {chord!r}")
    n = len(circ)
    nxt, prv = (j + 1) % n, (j - 1) % n
    if side not in (None, "before", "after"):
        raise DiagramError(f"side must be 'before' or 'after', not {side!r}")
    if circ[nxt].chord == chord and side != "after":
        y, before = (ci, nxt), True
    elif circ[prv].chord == chord and side != "before":
        y, before = (ci, prv), False
    else:
        raise DiagramError(f"end at {ci}:{j} is not adjacent to an end of chord {chord!r}")
    other = [p for p in d.positions(chord) if p != y][0]
    twisted = d.is_twisted(chord)
    # orientable: stay on the same band side, which lands on the opposite
    # side of the far end; twisted: the band side crosses over.
    insert_after = before != twisted
    if wrong:
        insert_after = not insert_after
    return x, other, insert_after, twisted


def slide(d: Diagram, pos: tuple[int, int], chord: str, side: str | None = None,
          *, _wrong: bool = False) -> Diagram:
    """Slide the chord end at ``pos`` along the band of ``chord``.

    The end must be cyclically adjacent to one end of ``chord``; it is
    moved next to the other end.  Sliding over a twisted chord negates the
    sign of the moved end.  ``side`` says whether the end sits immediately
    ``"before"`` or ``"after"`` the end of ``chord`` it slides from; it is
    only needed when both neighbours belong to ``chord``, and defaults to
    ``"before"`` then.  ``_wrong`` selects the mirror-image insertion side
    and exists only as a negative control for tests.
    """
    return slide_tracked(d, pos, chord, side, _wrong=_wrong)[0]


def slide_tracked(d: Diagram, pos: tuple[int, int], chord: str, side: str | None = None,
                  *, _wrong: bool = False) -> tuple[Diagram, tuple[int, int]]:
    """Like :func:`slide`, also returning the moved end's new position."""
    x, (oc, oj), insert_after, twisted = _slide_target(d, pos, chord, side, _wrong)
    ci, j = pos
    moved = -x if twisted else x
    circles = [list(c) for c in d.circles]
    del circles[ci][j]
    k = oj - 1 if (oc == ci and oj > j) else oj
    if insert_after:
        k += 1
    circles[oc].insert(k, moved)
    return Diagram(tuple(tuple(c) for c in circles)), (oc, k)


# --------------------------------------------------------------------------
# canonical form


def label_name(i: int) -> str:
    """0 -> 'a', 25 -> 'z', 26 -> 'aa', ..."""
    s = ""
    i += 1
    while i:
        i, r = divmod(i - 1, 26)
        s = chr(ord("a") + r) + s
    return s


def _circle_variants(circ):
    seqs = [circ, _inverse(circ)] if circ else [circ]
    out = []
    for s in seqs:
        for r in range(max(1, len(s))):
            out.append(s[r:] + s[:r])
    return out


def _encode(seq, names, first_sign):
    """Encode one circle under a partial relabelling; returns (key, names, first_sign)."""
    names = dict(names)
    first_sign = dict(first_sign)
    key = []
    for e in seq:
        if e.chord not in names:
            names[e.chord] = len(names)
            first_sign[e.chord] = e.sign
            key.append((names[e.chord], 0))
        else:
            key.append((names[e.chord], 0 if e.sign == first_sign[e.chord] else 1))
    return (len(seq), tuple(key)), names, first_sign


def canonical_diagram(d: Diagram) -> Diagram:
    """Representative of the class of ``d`` under rotations, circle flips,
    circle reordering, relabelling and per-chord sign reversal.

    Circles are fixed greedily: at each step every remaining circle in
    every rotation and orientation is encoded against the labels assigned
    so far, and all minimal candidates are kept.  Because the order key is
    lexicographic over circles, this yields the same minimum as a full
    search over circle orders.
    """
    states = [((), {}, {}, tuple(range(len(d.circles))))]
    while states[0][3]:
        best = None
        nxt = []
        for key, names, fs, remaining in states:
            for idx in remaining:
                for var in _circle_variants(d.circles[idx]):
                    k, n2, f2 = _encode(var, names, fs)
                    if best is None or k < best:
                        best, nxt = k, []
                    if k == best:
                        rest = tuple(r for r in remaining if r != idx)
                        nxt.append((key + (k,), n2, f2, rest))
        # states with identical labelled prefixes are interchangeable
        dedup = {}
        for st in nxt:
            dedup.setdefault((tuple(sorted(st[1].items())), tuple(sorted(st[2].items())), st[3]), st)
        states = list(dedup.values())
    key = states[0][0]
    circles = tuple(tuple(ChordEnd(label_name(c), -1 if s else 1) for c, s in circ)
                    for _, circ in key)
    return Diagram(circles)


def canonical_form(d: Diagram) -> str:
    return serialize(canonical_diagram(d))


def equivalent(d1: Diagram, d2: Diagram) -> bool:
    return canonical_form(d1) == canonical_form(d2)
