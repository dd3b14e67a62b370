"""The partial-dual polynomial and exact integer polynomials in ``z``."""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Mapping

from .diagram import Diagram
from .pdual import partial_dual
from .surface import Flat, _euler_genus, connected_components

DEFAULT_CAP = 20


class CapExceeded(ValueError):
    pass


class Polynomial:
    """Integer polynomial in z; immutable, zero coefficients never stored."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for k, c in items:
            k, c = int(k), int(c)
            if k < 0:
                raise ValueError(f"negative exponent {k}")
            acc[k] = acc.get(k, 0) + c
        self._coeffs = {k: acc[k] for k in sorted(acc) if acc[k]}

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._coeffs)

    def __getitem__(self, k: int) -> int:
        return self._coeffs.get(k, 0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def degree(self) -> int:
        return max(self._coeffs, default=-1)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial({0: other})
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(tuple(self._coeffs.items()))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return add(self, other)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return add(self, scale(other, -1))

    def __neg__(self) -> "Polynomial":
        return scale(self, -1)

    def __mul__(self, k: int) -> "Polynomial":
        return scale(self, k)

    __rmul__ = __mul__

    def __call__(self, x: int) -> int:
        return evaluate(self, x)

    def __str__(self) -> str:
        return to_text(self)

    def __repr__(self) -> str:
        return f"Polynomial({self._coeffs!r})"

    def to_json(self) -> dict:
        return {"coeffs": {str(k): c for k, c in self._coeffs.items()}}

    @classmethod
    def from_json(cls, obj: dict) -> "Polynomial":
        return cls({int(k): c for k, c in obj["coeffs"].items()})


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return Polynomial(list(p._coeffs.items()) + list(q._coeffs.items()))


def scale(p: Polynomial, k: int) -> Polynomial:
    return Polynomial({e: k * c for e, c in p._coeffs.items()})


def evaluate(p: Polynomial, x: int) -> int:
    return sum(c * x ** e for e, c in p._coeffs.items())


def to_text(p: Polynomial) -> str:
    """``"2 + 2*z^2"``; ascending powers, ``"0"`` for the zero polynomial."""
    if not p._coeffs:
        return "0"
    out = ""
    for e, c in p._coeffs.items():
        mono = str(abs(c)) if e == 0 else f"{abs(c)}*z" if e == 1 else f"{abs(c)}*z^{e}"
        if not out:
            out = mono if c > 0 else "-" + mono
        else:
            out += (" + " if c > 0 else " - ") + mono
    return out


# --------------------------------------------------------------------------
# partial-dual polynomial


def _check_cap(d: Diagram, cap: int | None) -> list[str]:
    chords = d.chords()
    cap = DEFAULT_CAP if cap is None else cap
    if len(chords) > cap:
        raise CapExceeded(f"{len(chords)} chords exceeds the cap of {cap} "
                          f"(2^{len(chords)} partial duals)")
    return chords


def _naive_range(d: Diagram, chords: list[str], lo: int, hi: int) -> Counter:
    tally: Counter = Counter()
    for mask in range(lo, hi):
        subset = [c for i, c in enumerate(chords) if mask >> i & 1]
        dual = partial_dual(d, subset, trace=False).diagram
        tally[_euler_genus(Flat(dual))] += 1
    return tally


def _encode(d: Diagram, chords: list[str]) -> list[tuple[int, ...]]:
    index = {c: i + 1 for i, c in enumerate(chords)}
    return [tuple(index[e.chord] * e.sign for e in circ) for circ in d.circles]


def _dual_one(circles: list[tuple[int, ...]], k: int) -> None:
    """Partial dual in place at chord ``k`` of an int-encoded diagram.

    Ends are encoded as ``+-k``.  This is the single-chord case of
    :func:`ribbonchord.pdual.partial_dual` written out per case.
    """
    found = [i for i, circ in enumerate(circles) if k in circ or -k in circ]
    if len(found) == 1:
        ci = found[0]
        circ = circles[ci]
        i, j = [t for t, v in enumerate(circ) if v == k or v == -k]
        inner, outer = circ[i + 1:j], circ[j + 1:] + circ[:i]
        outer_inv = tuple(-v for v in reversed(outer))
        if circ[i] == circ[j]:
            circles[ci] = outer_inv + (k,)
            circles.append(inner + (-k,))
        else:
            circles[ci] = outer_inv + (-k,) + inner + (k,)
    else:
        cx, cy = found
        x, y = circles[cx], circles[cy]
        i = x.index(k) if k in x else x.index(-k)
        j = y.index(k) if k in y else y.index(-k)
        p_inv = tuple(-v for v in reversed(x[i + 1:] + x[:i]))
        q = y[j + 1:] + y[:j]
        if x[i] == y[j]:
            q = tuple(-v for v in reversed(q))
        circles[cx] = p_inv + (k,) + q + (k,)
        del circles[cy]


def _gray_range(d: Diagram, chords: list[str], lo: int, hi: int) -> Counter:
    """Walk Gray codes lo..hi-1, dualising one chord per step.

    Both D^A and its complement D^(E-A) are carried along; the boundary
    components of D^A are the vertices of its full dual D^(E-A), and
    partial duality keeps the number of connected components, so
    eps(D^A) = 2c + e - v(D^A) - v(D^(E-A)).
    """
    tally: Counter = Counter()
    if lo >= hi:
        return tally
    e = len(chords)
    c = connected_components(d)
    full = (1 << e) - 1
    g = lo ^ (lo >> 1)
    cur = _encode(partial_dual(d, [ch for i, ch in enumerate(chords) if g >> i & 1],
                               trace=False).diagram, chords)
    comp = _encode(partial_dual(d, [ch for i, ch in enumerate(chords) if (full ^ g) >> i & 1],
                                trace=False).diagram, chords)
    base = 2 * c + e
    tally[base - len(cur) - len(comp)] += 1
    for i in range(lo + 1, hi):
        k = (i & -i).bit_length()
        _dual_one(cur, k)
        _dual_one(comp, k)
        tally[base - len(cur) - len(comp)] += 1
    return tally


_MODES = {"naive": _naive_range, "gray": _gray_range}


def _run_chunk(args):
    mode, d, chords, lo, hi = args
    return _MODES[mode](d, chords, lo, hi)


def partial_dual_polynomial(d: Diagram, *, cap: int | None = None, mode: str = "gray",
                            workers: int = 1) -> Polynomial:
    """Sum of z^eps(D^A) over all chord subsets A.

    ``mode="naive"`` builds every partial dual from ``d``; ``mode="gray"``
    steps through subsets in Gray-code order, dualising one chord at a time.
    With ``workers > 1`` the subset range is split into chunks evaluated in
    separate processes; the tally is order-independent.
    """
    if mode not in _MODES:
        raise ValueError(f"unknown mode {mode!r}")
    chords = _check_cap(d, cap)
    total = 1 << len(chords)
    if workers <= 1 or total < 1024:
        tally = _MODES[mode](d, chords, 0, total)
    else:
        step = -(-total // (4 * workers))
        jobs = [(mode, d, chords, lo, min(lo + step, total)) for lo in range(0, total, step)]
        tally = Counter()
        with ProcessPoolExecutor(workers) as pool:
            for part in pool.map(_run_chunk, jobs):
                tally.update(part)
    return Polynomial(tally)
