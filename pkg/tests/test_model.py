"""Model layer: permutation algebra, braid words, matchings, tangles."""

from __future__ import annotations

import itertools

import pytest

from triplanekit.model import (
    BraidWord,
    Coloring,
    Matching,
    Perm3,
    Tangle,
    TriPlaneDiagram,
    TrisectionParams,
    PatchKind,
    as_transposition,
    compose,
    IDENTITY_PERM,
    induced_matching,
    standard_matching,
)

# Independent oracle: the 6 bijections of {1,2,3} as dicts, composed by lookup.
_ALL_MAPS = [dict(zip((1, 2, 3), img)) for img in itertools.permutations((1, 2, 3))]


def _compose_maps(p: dict, q: dict) -> dict:
    return {x: p[q[x]] for x in (1, 2, 3)}


def _as_perm(m: dict) -> Perm3:
    return Perm3((m[1], m[2], m[3]))


def test_compose_matches_cayley_table_oracle():
    for p in _ALL_MAPS:
        for q in _ALL_MAPS:
            assert compose(_as_perm(p), _as_perm(q)) == _as_perm(_compose_maps(p, q))


def test_compose_associative_and_identity_neutral_exhaustive():
    perms = [_as_perm(m) for m in _ALL_MAPS]
    for p in perms:
        assert compose(IDENTITY_PERM, p) == p == compose(p, IDENTITY_PERM)
    for p, q, r in itertools.product(perms, repeat=3):
        assert compose(compose(p, q), r) == compose(p, compose(q, r))


def test_transposition_convention():
    assert as_transposition(1) == Perm3((1, 3, 2))
    assert as_transposition(2) == Perm3((3, 2, 1))
    assert as_transposition(3) == Perm3((2, 1, 3))
    for c in (1, 2, 3):
        t = as_transposition(c)
        assert t.is_transposition()
        assert t(c) == c
        assert compose(t, t) == IDENTITY_PERM


def test_transposition_composed_with_swap_is_three_cycle():
    # (1 2) then-after (2 3): sends 1 -> 2, 2 -> 3, 3 -> 1.
    got = compose(as_transposition(3), as_transposition(1))
    assert got == Perm3((2, 3, 1))


def test_conjugation_of_transpositions():
    for a in (1, 2, 3):
        for b in (1, 2, 3):
            ta, tb = as_transposition(a), as_transposition(b)
            conj = compose(compose(ta, tb), ta)
            assert conj.is_transposition()
            assert (conj == tb) == (a == b)


def test_braidword_validation():
    with pytest.raises(ValueError):
        BraidWord(4, (0,))
    with pytest.raises(ValueError):
        BraidWord(4, (4,))
    with pytest.raises(ValueError):
        BraidWord(0, ())
    w = BraidWord(4, (1, -3))
    assert len(w) == 2


def test_braidword_concat_and_reverse_inverse():
    w = BraidWord(4, (1, 2, -3))
    assert w.reverse_inverse().word == (3, -2, -1)
    assert w.concat(w.reverse_inverse()).strands == 4
    with pytest.raises(ValueError):
        w.concat(BraidWord(6, ()))


def test_braidword_permutation():
    assert BraidWord(4, ()).permutation() == (1, 2, 3, 4)
    assert BraidWord(4, (2,)).permutation() == (1, 3, 2, 4)
    # signs do not affect the underlying permutation
    assert BraidWord(4, (-2,)).permutation() == BraidWord(4, (2,)).permutation()
    # word read bottom-up: strand 1 is carried across by the successive swaps
    assert BraidWord(4, (1, 2, 3)).permutation() == (4, 1, 2, 3)
    assert BraidWord(4, (3, 2, 1)).permutation() == (2, 3, 4, 1)


def test_matching_normalization_and_validation():
    m = Matching(4, ((4, 1), (3, 2)))
    assert m.pairs == ((1, 4), (2, 3))
    assert m.partner(4) == 1 and m.partner(2) == 3
    with pytest.raises(ValueError):
        Matching(4, ((1, 2), (2, 3)))
    with pytest.raises(ValueError):
        Matching(3, ((1, 2),))


def test_induced_matching_identity_and_one_crossing():
    assert induced_matching(Tangle.identity(3)) == standard_matching(3)
    t = Tangle.from_word(2, [2])
    assert induced_matching(t).pairs == ((1, 3), (2, 4))


def test_induced_matching_cancellation_invariance():
    base = Tangle.from_word(3, [2, -4, 1])
    m = induced_matching(base)
    for e in range(1, 6):
        for s in (e, -e):
            extended = Tangle.from_word(3, list(base.braid.word) + [s, -s])
            assert induced_matching(extended) == m


def test_induced_matching_depends_only_on_permutation(rng):
    groups: dict[tuple, Matching] = {}
    for _ in range(400):
        length = rng.randrange(0, 5)
        word = tuple(
            rng.choice((1, -1)) * rng.randrange(1, 4) for _ in range(length)
        )
        t = Tangle.from_word(2, word)
        key = t.braid.permutation()
        m = induced_matching(t)
        assert groups.setdefault(key, m) == m


def test_tangle_and_diagram_validation():
    with pytest.raises(ValueError):
        Tangle(2, BraidWord(3, ()))
    t2 = Tangle.identity(2)
    t3 = Tangle.identity(3)
    with pytest.raises(ValueError):
        TriPlaneDiagram(2, (t2, t2, t3), (PatchKind.DISKS,) * 3)


def test_coloring_validation():
    with pytest.raises(ValueError):
        Coloring((1, 4), (1, 1, 1, 1))
    with pytest.raises(ValueError):
        Coloring((1, 2), (1, 1, 2))
    c = Coloring((1, 2), (1, 1, 2, 2))
    assert c.bottom == (1, 2)


def test_trisection_params_validation():
    p = TrisectionParams(3, 1, 0, 2)
    assert p.ks == (1, 0, 2)
    with pytest.raises(ValueError):
        TrisectionParams(3, -1, 0, 0)
