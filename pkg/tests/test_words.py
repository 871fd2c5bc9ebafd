import pytest
from hypothesis import given

from conftest import words
from surfclass.words import (
    Letter,
    PolygonSet,
    SurfaceType,
    ValidationError,
    Word,
    WordSyntaxError,
    canonical_word,
    classify_by_invariants,
    complex_euler,
    complex_is_orientable,
    edge_count,
    euler_characteristic,
    glue_polygons,
    is_orientable,
    mint_fresh,
    parse_polygon_file,
    parse_word,
    validate,
    vertex_cycle_count,
)


# ---------------------------------------------------------------------------
# parsing


def test_parse_spaced_tokens():
    w = parse_word("a b a' b'")
    assert w.letters == (
        Letter("a", 1), Letter("b", 1), Letter("a", -1), Letter("b", -1)
    )


def test_parse_caret_exponent():
    assert parse_word("a b a^-1 b^-1") == parse_word("a b a' b'")


def test_parse_compact():
    assert parse_word("aba'b'") == parse_word("a b a' b'")
    assert parse_word("aabb").letters == (
        Letter("a", 1), Letter("a", 1), Letter("b", 1), Letter("b", 1)
    )


def test_parse_multichar_symbols():
    w = parse_word("a1 b1 a1' b1'")
    assert w.letters[0] == Letter("a1", 1)
    assert w.letters[2] == Letter("a1", -1)


def test_parse_error_position():
    with pytest.raises(WordSyntaxError) as exc:
        parse_word("a b ?")
    assert exc.value.position == 5


def test_parse_rejects_empty():
    with pytest.raises(WordSyntaxError):
        parse_word("   ")


def test_render_round_trip():
    for text in ("a b a' b'", "a a b b", "x y' x y"):
        assert parse_word(parse_word(text).render()) == parse_word(text)


# ---------------------------------------------------------------------------
# cyclic identity


def test_cyclic_equality_and_hash():
    w1 = parse_word("a b a' b'")
    w2 = parse_word("b a' b' a")
    assert w1 == w2
    assert hash(w1) == hash(w2)
    assert w1 != parse_word("a b a b")


def test_reflect_is_not_cyclic_equal():
    w = parse_word("a b c a' c' b'")
    assert w != w.reflected()


# ---------------------------------------------------------------------------
# validation


def test_validate_messages():
    with pytest.raises(ValidationError, match="symbol a occurs once"):
        validate(parse_word("a b b"))
    with pytest.raises(ValidationError, match="symbol a occurs 3 times"):
        validate(parse_word("a a a b b"))


def test_validate_passes():
    validate(parse_word("a a'"))


def test_mint_fresh():
    assert mint_fresh(frozenset()) == "a"
    assert mint_fresh(frozenset("ab")) == "c"
    import string
    everything = frozenset(string.ascii_lowercase)
    assert mint_fresh(everything) == "a1"


# ---------------------------------------------------------------------------
# invariants: the corner-tracing vertex count is the load-bearing oracle


VERTEX_GOLDENS = [
    ("a b a' b'", 1),
    ("a a'", 2),
    ("a a", 1),
    ("a b a b", 2),
    ("a a b b", 1),
    ("a b c a' b' c'", 2),
    ("a b b' a'", 3),
]


@pytest.mark.parametrize("text,v", VERTEX_GOLDENS)
def test_vertex_cycle_count(text, v):
    assert vertex_cycle_count(parse_word(text)) == v


def test_euler_characteristic():
    assert euler_characteristic(parse_word("a a'")) == 2
    assert euler_characteristic(parse_word("a b a' b'")) == 0
    assert euler_characteristic(parse_word("a a")) == 1
    assert edge_count(parse_word("a b a' b'")) == 2


def test_orientability():
    assert is_orientable(parse_word("a b a' b'"))
    assert not is_orientable(parse_word("a a b b"))
    assert not is_orientable(parse_word("a b a b"))


CLASSIFY_GOLDENS = [
    ("a a'", SurfaceType.sphere()),
    ("a b b' a'", SurfaceType.sphere()),
    ("a b a' b'", SurfaceType.orientable_genus(1)),
    ("a a", SurfaceType.non_orientable(1)),
    ("a b a b", SurfaceType.non_orientable(1)),
    ("a a b b", SurfaceType.non_orientable(2)),
    ("a b a b'", SurfaceType.non_orientable(2)),
    ("a b c a' b' c'", SurfaceType.orientable_genus(1)),
    ("a1 b1 a1' b1' a2 b2 a2' b2'", SurfaceType.orientable_genus(2)),
]


@pytest.mark.parametrize("text,expected", CLASSIFY_GOLDENS)
def test_classify_by_invariants(text, expected):
    assert classify_by_invariants(parse_word(text)) == expected


@given(words())
def test_classify_always_consistent(w):
    t = classify_by_invariants(w)
    assert t.euler == euler_characteristic(w)
    assert t.orientable == is_orientable(w)


# ---------------------------------------------------------------------------
# types and canonical words


def test_type_construction_guards():
    with pytest.raises(ValidationError):
        SurfaceType.orientable_genus(-1)
    with pytest.raises(ValidationError):
        SurfaceType.non_orientable(0)


def test_describe_strings():
    assert SurfaceType.orientable_genus(1).describe() == "orientable genus 1 (torus), χ=0"
    assert (
        SurfaceType.non_orientable(2).describe()
        == "non-orientable, 2 cross-caps (Klein bottle), χ=0"
    )
    assert (
        SurfaceType.non_orientable(1).describe()
        == "non-orientable, 1 cross-cap (projective plane), χ=1"
    )
    assert SurfaceType.sphere().describe() == "sphere, χ=2"


def test_canonical_words():
    assert canonical_word(SurfaceType.sphere()).render() == "a1 a1'"
    assert canonical_word(SurfaceType.non_orientable(2)).render() == "a1 a1 a2 a2"
    assert canonical_word(SurfaceType.orientable_genus(2)).render() == (
        "a1 b1 a1' b1' a2 b2 a2' b2'"
    )
    for t in (
        SurfaceType.sphere(),
        SurfaceType.orientable_genus(3),
        SurfaceType.non_orientable(5),
    ):
        assert classify_by_invariants(canonical_word(t)) == t


# ---------------------------------------------------------------------------
# polygon sets


def test_parse_polygon_file():
    polys = parse_polygon_file("# two triangles\na b c\n\na' b' c'\n")
    assert len(polys.polygons) == 2


def test_parse_polygon_file_reports_line():
    with pytest.raises(WordSyntaxError, match="line 2"):
        parse_polygon_file("a b c\na ?\n")


def test_polygon_set_validation():
    with pytest.raises(ValidationError, match="symbol c occurs once"):
        glue_polygons(parse_polygon_file("a b c\na' b'\n"))


def test_complex_euler_and_orientability():
    pillow = parse_polygon_file("a b c\na' c' b'\n")
    assert complex_euler(pillow) == 2
    assert complex_is_orientable(pillow)
    torus_pair = parse_polygon_file("a b c\na' b' c'\n")
    assert complex_euler(torus_pair) == 0
    assert complex_is_orientable(torus_pair)
    # two bigons read the same way around glue to a sphere
    assert complex_is_orientable(parse_polygon_file("a b\na b\n"))
    # flipping one edge makes the projective plane
    cross = parse_polygon_file("a b\na b'\n")
    assert not complex_is_orientable(cross)
    assert complex_euler(cross) == 1


def test_glue_pillow_is_sphere():
    merged = glue_polygons(parse_polygon_file("a b c\na' c' b'\n"))
    assert classify_by_invariants(merged) == SurfaceType.sphere()


def test_glue_two_bigon_halves():
    merged = glue_polygons(parse_polygon_file("a b\na' b'\n"))
    assert classify_by_invariants(merged) == SurfaceType.sphere()


def test_glue_same_orientation_triangles_is_torus():
    # both triangles read the same way around: the complex has chi 0, and
    # the merged word is a torus, not a sphere
    merged = glue_polygons(parse_polygon_file("a b c\na' b' c'\n"))
    assert classify_by_invariants(merged) == SurfaceType.orientable_genus(1)
    assert euler_characteristic(merged) == 0


def test_glue_preserves_complex_euler():
    for text in ("a b c\na' c' b'\n", "a b c\na' b' c'\n", "a b\na' b'\n"):
        polys = parse_polygon_file(text)
        merged = glue_polygons(polys)
        assert euler_characteristic(merged) == complex_euler(polys)


def test_glue_single_polygon_passthrough():
    w = parse_word("a b a' b'")
    assert glue_polygons(PolygonSet((w,))) == w


def test_glue_disconnected_rejected():
    with pytest.raises(ValidationError, match="disconnected"):
        glue_polygons(parse_polygon_file("a a'\nb b'\n"))


def test_glue_deterministic():
    text = "a b c\nc' d e\ne' a' f\nf d' b'\n"
    first = glue_polygons(parse_polygon_file(text))
    for _ in range(3):
        assert glue_polygons(parse_polygon_file(text)) == first
