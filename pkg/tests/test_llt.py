import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from specfock.fock import FockVector, apply_f
from specfock.laurent import ONE, bar, parse_poly, q
from specfock.llt import (
    bridge_checks,
    canonical_basis,
    eq5_checks,
    erdmann_checks,
    erdmann_multiplicity,
    erdmann_support,
    first_approximation,
    ladder,
    ladder_sequence,
    one_wall_support,
    render_alcove_picture,
    sl2_step,
    tilting_character,
    tilting_characters,
    wall_exponent,
)
from specfock.partitions import Partition, dominates, format_partition, partitions_of

from . import oracles as O

# canonical columns produced by tests/oracles.canonical, frozen
FROZEN = {
    (4, 2): {
        "4": {"4": "1", "3,1": "q", "2,1,1": "q", "1,1,1,1": "q^2"},
        "3,1": {"3,1": "1", "2,2": "q", "2,1,1": "q^2"},
    },
    (5, 3): {
        "5": {"5": "1", "2,2,1": "q"},
        "4,1": {"4,1": "1", "3,2": "q"},
        "3,2": {"3,2": "1", "1,1,1,1,1": "q"},
        "3,1,1": {"3,1,1": "1"},
        "2,2,1": {"2,2,1": "1", "2,1,1,1": "q"},
    },
    (6, 2): {
        "6": {"6": "1", "5,1": "q", "4,1,1": "q", "3,1,1,1": "q^2", "2,1,1,1,1": "q^2", "1,1,1,1,1,1": "q^3"},
        "5,1": {"5,1": "1", "4,2": "q", "4,1,1": "q^2", "3,1,1,1": "q", "2,2,1,1": "q^2", "2,1,1,1,1": "q^3"},
        "4,2": {"4,2": "1", "3,3": "q", "4,1,1": "q", "3,1,1,1": "q^2", "2,2,2": "q^2", "2,2,1,1": "q^3"},
        "3,2,1": {"3,2,1": "1"},
    },
}


def col_dict(col):
    return {format_partition(mu): str(c) for mu, c in col.entries}


def test_ladders():
    assert ladder(1, 1, 3) == 0
    assert ladder(2, 1, 3) == 1 and ladder(1, 2, 3) == 2
    # (3,1) at l=3 sits on the same ladder as (1,2)
    assert ladder(3, 1, 3) == ladder(1, 2, 3)
    for l in (2, 3, 4):
        for n in range(7):
            for lam in partitions_of(n):
                assert ladder_sequence(lam, l) == O.ladder_word(tuple(lam), l)


def test_first_approximation_examples():
    for l in (2, 3, 5):
        assert first_approximation(Partition((1,)), l) == FockVector.basis(Partition((1,)))
    a = first_approximation(Partition((2,)), 2)
    assert a == apply_f(apply_f(FockVector.basis(Partition()), 0, 2), 1, 2)
    assert a == FockVector.basis(Partition((2,))) + FockVector.basis(Partition((1, 1))).scale(q)
    assert first_approximation(Partition((2, 1)), 2)[Partition((2, 1))] == ONE


def test_canonical_examples():
    G = canonical_basis(2, 2)
    assert col_dict(G.column((2,))) == {"2": "1", "1,1": "q"}
    for l in (2, 3, 7):
        assert col_dict(canonical_basis(1, l).column((1,))) == {"1": "1"}
    G3 = canonical_basis(3, 3)
    assert col_dict(G3.column((3,))) == {"3": "1", "2,1": "q"}
    assert col_dict(G3.column((2, 1))) == {"2,1": "1", "1,1,1": "q"}
    assert canonical_basis(0, 3).labels() == [Partition()]


@pytest.mark.parametrize("key", sorted(FROZEN))
def test_frozen_columns(key):
    G = canonical_basis(*key)
    assert {format_partition(c.label): col_dict(c) for c in G.columns} == FROZEN[key]


@pytest.mark.parametrize("n,l", [(n, l) for l in (2, 3, 4) for n in range(8)])
def test_canonical_matches_oracle(n, l):
    ref = O.canonical(n, l)
    for col in canonical_basis(n, l).columns:
        assert {tuple(mu): c.terms for mu, c in col.entries} == ref[tuple(col.label)]


@pytest.mark.parametrize("n,l", [(n, l) for l in (2, 3, 5) for n in range(9)])
def test_unitriangular_and_positive(n, l):
    for col in canonical_basis(n, l).columns:
        assert col.entry(col.label) == ONE
        for mu, c in col.entries:
            if mu != col.label:
                assert dominates(col.label, mu) and mu != col.label
                assert c.min_exp() >= 1


def test_left_convention_twist():
    # the relation that holds: G^left = q^{-weight} G^right
    assert all(r.passed for r in eq5_checks(7, (2, 3), sign=-1))


def test_matrix_serializations():
    G = canonical_basis(3, 3)
    doc = G.to_dict()
    assert list(doc) == ["n", "l", "columns"]
    assert doc["columns"][0]["entries"][1] == {"partition": "2,1", "poly": "q"}
    assert G.to_csv().splitlines()[0] == "partition,3,\"2,1\""
    assert G.to_latex().count(r"\\") == 4
    for col in G.columns:
        for _, c in col.entries:
            assert parse_poly(str(c)) == c


def test_erdmann_examples():
    assert set(erdmann_support(37, 3)) == {37, 33, 19, 15}
    assert set(erdmann_support(7, 3)) == {7, 3}
    for m in range(40):
        assert erdmann_multiplicity(m, m, 5) == 1
    assert erdmann_multiplicity(7, 6, 3) == 0
    with pytest.raises(ValueError):
        erdmann_multiplicity(5, 3, 2)


def test_wall_exponents():
    # quantum: Steinberg weight gets q, a weight one past the wall gets q^-1
    assert wall_exponent(4, 5, "quantum") == 1
    assert wall_exponent(5, 5, "quantum") == -1
    # modified: the p^a wall gives q^a
    assert wall_exponent(8, 3, "modified") == 2
    assert wall_exponent(26, 3, "modified") == 3
    assert wall_exponent(9, 3, "modified") == -2


def test_sl2_step_examples():
    l = 5
    v = FockVector.basis(Partition((9, 5)))  # m = 4 = -1 mod 5
    out = sl2_step(v, 9 % l, l, "quantum")
    assert out == FockVector.basis(Partition((10, 5))) + FockVector.basis(Partition((9, 6))).scale(q)
    v = FockVector.basis(Partition((10, 5)))  # m = 5 = 0 mod 5
    out = sl2_step(v, 4, l, "quantum")
    assert out == FockVector.basis(Partition((10, 6))).scale(q**-1)


def test_picture_characters():
    t7 = tilting_character(7, 3, "modified")
    assert t7.entries == {7: ONE, 3: q}
    t37 = tilting_character(37, 3, "modified")
    assert t37.entries == {37: ONE, 33: q**2, 19: q, 15: q**3}
    for p in (3, 5, 7):
        for m in range(p - 1):
            for mode in ("quantum", "modified"):
                assert tilting_character(m, p, mode).entries == {m: ONE}


def test_subtraction_events_recorded():
    t = tilting_character(37, 3, "modified")
    assert all(bar(e.gamma) == e.gamma for e in t.events)
    assert tilting_character(2, 3).events == ()


@pytest.mark.parametrize("p", [3, 5, 7])
def test_modified_matches_donkin_at_one(p):
    chars = tilting_characters(250, p, "modified")
    for m, t in chars.items():
        assert t.at_one() == dict(O.donkin_tilting(m, p))
        assert t.at_one() == erdmann_support(m, p)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([2, 3, 5, 7]), st.integers(0, 200))
def test_quantum_one_wall(l, m):
    assert tilting_character(m, l, "quantum").at_one() == one_wall_support(m, l)


@pytest.mark.parametrize("mode", ["quantum", "modified"])
def test_tilting_positivity(mode):
    for t in tilting_characters(120, 3, mode).values():
        assert t.entries[t.m] == ONE
        assert all(c.min_exp() >= 1 for s, c in t.entries.items() if s != t.m)


def test_mode_validation():
    with pytest.raises(ValueError):
        tilting_character(5, 2, "modified")
    with pytest.raises(ValueError):
        tilting_character(5, 9, "modified")
    with pytest.raises(ValueError):
        tilting_character(5, 3, "classical")
    assert tilting_character(5, 2, "quantum").m == 5


def test_check_producers():
    assert all(r.passed for r in erdmann_checks(3, 60))
    assert all(r.passed for r in bridge_checks(6, (2, 3)))
    # (1), (2), (3), (2,1), (4), (3,1)
    assert len(bridge_checks(4, (2,))) == 6


def test_text_picture():
    pic = render_alcove_picture(tilting_character(37, 3, "modified"), "text")
    lines = pic.splitlines()
    assert [ln.split()[0] for ln in lines[1:4]] == ["p^3", "p^2", "p"]
    dots = next(ln for ln in lines if ln.strip().startswith("."))
    assert dots.count("o") == 4
    assert "entries:" in pic and "  15: q^3" in pic
    single = render_alcove_picture(tilting_character(1, 3), "text")
    assert single.count(" o") == 1


def test_svg_picture():
    svg = render_alcove_picture(tilting_character(37, 3, "modified"), "svg")
    assert svg.startswith("<svg") and svg.rstrip().endswith("</svg>")
    assert svg.count("<circle") == 4
    assert 'data-weight="33" data-label="q^2"' in svg
    with pytest.raises(ValueError):
        render_alcove_picture(tilting_character(3, 3), "png")


def test_tilting_serializations():
    t = tilting_character(37, 3, "modified")
    assert list(t.to_dict()) == ["p", "mode", "m", "entries"]
    assert t.to_csv().splitlines() == ["weight,poly", "37,1", "33,q^2", "19,q", "15,q^3"]
    assert t.to_latex().startswith("$T(37) = \\Delta(37)")
