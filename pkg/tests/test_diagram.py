import pytest
from hypothesis import given, settings

from gen import diagrams, random_diagrams
from ribbonchord.diagram import (ChordEnd, Diagram, DiagramError, canonical_diagram,
                                 canonical_form, flip_circle, label_name, mirror,
                                 negate_chord, parse, relabel, serialize, slide,
                                 slide_tracked)
from ribbonchord.surface import boundary_components, euler_genus

MIXED = "(a, b, c, -a, -b, c, d, d)"


def test_parse_mixed_framings():
    d = parse(MIXED)
    assert d.num_circles == 1
    assert d.num_chords == 4
    assert d.framings() == {"a": 1, "b": 1, "c": 0, "d": 0}


def test_parse_empty_circle():
    d = parse("()")
    assert d.circles == ((),)
    assert d.num_chords == 0


def test_parse_two_circles():
    d = parse("(a, a ; b, -b)")
    assert d.circles == ((ChordEnd("a", 1), ChordEnd("a", 1)), (ChordEnd("b", 1), ChordEnd("b", -1)))
    assert d.framings() == {"a": 0, "b": 1}
    assert parse("(a, a) ; (b, -b)") == d


@pytest.mark.parametrize("text", ["(a,a)", "  ( a ,  a )  ", "(a,\ta)\n"])
def test_parse_whitespace(text):
    assert parse(text) == parse("(a, a)")


@pytest.mark.parametrize("text, pos", [
    ("(a, a", 5),
    ("a, a)", 0),
    ("(a, 1a)", 4),
    ("(a,, a)", 3),
    ("(a, a) (b, b)", 7),
    ("(a, a) ;", 8),
    ("(a, --a)", 5),
])
def test_parse_syntax_errors_report_position(text, pos):
    with pytest.raises(DiagramError) as info:
        parse(text)
    assert info.value.position == pos


@pytest.mark.parametrize("text", ["(a)", "(a, a, a)", "(a ; b, b)"])
def test_parse_rejects_bad_multiplicity(text):
    with pytest.raises(DiagramError, match="occurs"):
        parse(text)


@pytest.mark.parametrize("label", ["", "1a", "a b", "-a"])
def test_bad_labels_rejected(label):
    with pytest.raises(DiagramError):
        Diagram(((ChordEnd(label, 1), ChordEnd(label, 1)),))


def test_serialize():
    assert serialize(Diagram.from_lists([[("a", 1), ("a", 1)]])) == "(a, a)"
    assert serialize(Diagram.from_lists([[("a", 1), ("a", -1)]])) == "(a, -a)"
    assert serialize(parse("(a ; a)")) == "(a) ; (a)"
    assert serialize(parse(MIXED)) == MIXED


def test_mixed_round_trip():
    d = parse(MIXED)
    assert parse(serialize(d)) == d
    canon = canonical_form(d)
    assert canonical_form(parse(canon)) == canon


@given(diagrams())
def test_parse_serialize_identity(d):
    assert parse(serialize(d)) == d


@given(diagrams())
def test_canonical_is_a_fixed_point(d):
    c = canonical_diagram(d)
    assert canonical_diagram(c) == c
    assert serialize(c) == canonical_form(d)


def test_canonical_examples():
    assert canonical_form(parse("(b, b, a, a)")) == canonical_form(parse("(a, a, b, b)"))
    assert canonical_form(parse("(-a, -a)")) == canonical_form(parse("(a, a)"))
    assert canonical_form(parse("(a, -a)")) != canonical_form(parse("(a, a)"))
    # empty circles first
    assert canonical_form(parse("(a, a ; )")).startswith("()")


@settings(max_examples=200)
@given(diagrams(max_chords=5, max_circles=3))
def test_canonical_quotients_all_equivalences(d):
    canon = canonical_form(d)
    assert canonical_form(mirror(d)) == canon
    for i in range(d.num_circles):
        assert canonical_form(flip_circle(d, i)) == canon
    rotated = Diagram(tuple(c[1:] + c[:1] for c in d.circles))
    assert canonical_form(rotated) == canon
    assert canonical_form(Diagram(tuple(reversed(d.circles)))) == canon
    mapping = {c: f"q{i}" for i, c in enumerate(reversed(d.chords()))}
    assert canonical_form(relabel(d, mapping)) == canon
    for c in d.chords():
        assert canonical_form(negate_chord(d, c)) == canon


def test_canonical_distinguishes_inequivalent():
    # same chord counts, different surfaces
    assert canonical_form(parse("(a, b, a, b)")) != canonical_form(parse("(a, a, b, b)"))
    # framing across circles is a flip class invariant only up to cycles
    assert canonical_form(parse("(a, b ; a, b)")) != canonical_form(parse("(a, b ; a, -b)"))


def test_label_names():
    assert [label_name(i) for i in (0, 1, 25, 26, 27, 701, 702)] == \
        ["a", "b", "z", "aa", "ab", "zz", "aaa"]


# --- flips and mirror -----------------------------------------------------

def test_flip_loops_keep_framing():
    d = parse("(a, b, a, b)")
    f = flip_circle(d, 0)
    assert serialize(f) == "(-b, -a, -b, -a)"
    assert f.framings() == d.framings()
    assert canonical_form(f) == canonical_form(d)


def test_flip_toggles_chords_between_circles():
    d = parse("(a, b ; -a, b)")
    f = flip_circle(d, 1)
    assert serialize(f) == "(a, b) ; (-b, a)"
    assert d.framings() == {"a": 1, "b": 0}
    assert f.framings() == {"a": 0, "b": 1}
    assert euler_genus(f) == euler_genus(d)


def test_flip_empty_circle_is_identity():
    d = parse("(a, a ; )")
    assert flip_circle(d, 1) == d


def test_flip_index_out_of_range():
    with pytest.raises(IndexError):
        flip_circle(parse("(a, a)"), 1)


@given(diagrams())
def test_flip_and_mirror_are_involutions(d):
    assert mirror(mirror(d)) == d
    for i in range(d.num_circles):
        assert flip_circle(flip_circle(d, i), i) == d
        assert flip_circle(d, i).num_chords == d.num_chords


def test_mirror_examples():
    assert canonical_form(mirror(parse("(a, -a)"))) == canonical_form(parse("(a, -a)"))
    d = parse(MIXED)
    m = mirror(d)
    assert m != d
    assert euler_genus(m) == euler_genus(d)


# --- slides ---------------------------------------------------------------

def test_slide_over_orientable():
    d = parse("(a, a, b, b)")
    s = slide(d, (0, 1), "b")
    assert serialize(s) == "(a, b, b, a)"
    assert canonical_form(s) == canonical_form(d)
    assert euler_genus(s) == euler_genus(d)


def test_slide_over_twisted():
    d = parse("(a, b, a, -b)")
    s = slide(d, (0, 2), "b", "after")
    assert serialize(s) == "(a, b, -b, -a)"
    assert s.framing("a") == 1
    assert euler_genus(s) == euler_genus(d) == 2


def test_slide_negative_control():
    d = parse("(a, b, a, -b)")
    wrong = slide(d, (0, 2), "b", "after", _wrong=True)
    assert euler_genus(wrong) != euler_genus(d)


def test_slide_four_cases():
    # x before y / after y, over orientable / twisted chord b
    assert serialize(slide(parse("(a, b, c, b, a, c)"), (0, 0), "b")) == "(b, c, b, a, a, c)"
    assert serialize(slide(parse("(b, a, c, b, a, c)"), (0, 1), "b")) == "(b, c, a, b, a, c)"
    assert serialize(slide(parse("(a, b, c, -b, a, c)"), (0, 0), "b")) == "(b, c, -a, -b, a, c)"
    assert serialize(slide(parse("(b, a, c, -b, a, c)"), (0, 1), "b")) == "(b, c, -b, -a, a, c)"


def test_slide_across_circles():
    d = parse("(a, b ; a, b)")
    s, pos = slide_tracked(d, (0, 0), "b")
    assert serialize(s) == "(b) ; (a, b, a)"
    assert pos == (1, 2)
    assert euler_genus(s) == euler_genus(d)


@pytest.mark.parametrize("pos, chord", [((0, 0), "a"), ((0, 0), "b"), ((0, 6), "b"), ((1, 0), "b"), ((0, 0), "zz")])
def test_slide_errors(pos, chord):
    with pytest.raises(DiagramError):
        slide(parse("(a, a, b, c, b, c)"), pos, chord)


def legal_slides(d):
    for ci, circ in enumerate(d.circles):
        n = len(circ)
        for j, x in enumerate(circ):
            for side, k in (("before", (j + 1) % n), ("after", (j - 1) % n)):
                c2 = circ[k].chord
                if n > 1 and c2 != x.chord:
                    yield (ci, j), c2, side


@settings(max_examples=200)
@given(diagrams(max_chords=5))
def test_slides_preserve_surface(d):
    for pos, c2, side in legal_slides(d):
        s = slide(d, pos, c2, side)
        assert euler_genus(s) == euler_genus(d)
        assert boundary_components(s) == boundary_components(d)
        assert s.num_chords == d.num_chords
        moved = d.circles[pos[0]][pos[1]].chord
        for c, fr in d.framings().items():
            if c != moved:
                assert s.framing(c) == fr


def test_wrong_slide_breaks_invariance_somewhere():
    broke = 0
    for d in random_diagrams(50, seed=3, max_chords=5):
        for pos, c2, side in legal_slides(d):
            if euler_genus(slide(d, pos, c2, side, _wrong=True)) != euler_genus(d):
                broke += 1
    assert broke > 0
