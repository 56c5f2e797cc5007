import itertools

import pytest

from gradedpi.algebra.grading import (
    GradingTuple,
    build_grading,
    canonical_form,
    coarsening_model,
    difference_profile,
    hat_map,
    is_isomorphic,
    is_model_coarsening,
    is_strong,
    is_weakly_isomorphic,
    one_dimensional_components,
    pattern_matrix,
    reduce_distinct,
)
from gradedpi.algebra.group import GroupDescriptor
from gradedpi.algebra.monomial import DegreeWord, is_identity
from gradedpi.algebra.pattern import PatternMatrix
from gradedpi.errors import (
    DescriptorMismatchError,
    NotInSupportError,
    RepeatedEntriesError,
    TorsionError,
)

from helpers import Z, grading, zmod


def test_build_grading_over_z():
    g = grading(Z, 0, 1, 2)
    assert g.support == {Z.element(x) for x in range(-2, 3)}
    assert g.component(Z.element(1)) == ((1, 2), (2, 3))
    assert g.component(Z.element(7)) == ()
    assert g.distinct_entries


def test_build_grading_over_z5_covers_group():
    g = grading(zmod(5), 0, 1, 2)
    assert len(g.support) == 5


def test_components_of_0235():
    g = grading(Z, 0, 2, 3, 5)
    assert g.component(Z.element(1)) == ((2, 3),)
    assert g.dim(Z.element(2)) == 2
    assert set(g.component(Z.element(2))) == {(1, 2), (3, 4)}


@pytest.mark.parametrize(
    ("values", "g", "entries"),
    [
        ((0, 1, 2), 1, [(1, 2), (2, 3)]),
        ((0, 1, 2), 5, []),
    ],
)
def test_pattern_matrix_over_z(values, g, entries):
    assert pattern_matrix(grading(Z, *values), Z.element(g)).entries() == entries


def test_pattern_matrix_over_z5():
    d = zmod(5)
    assert pattern_matrix(grading(d, 0, 1, 2), d.element(2)).entries() == [(1, 3)]


def test_pattern_matrix_rejects_foreign_element():
    with pytest.raises(DescriptorMismatchError):
        pattern_matrix(grading(Z, 0, 1), zmod(5).element(1))


def test_grading_invariants():
    for d, values in [
        (Z, (0, 2, 3, 5)),
        (zmod(7), (0, 1, 3, 6)),
        (GroupDescriptor(1, (2,)), ((0, 0), (1, 1), (1, 0))),
        (Z, (0, 0, 1, 4)),
    ]:
        g = grading(d, *values)
        n = g.n
        assert d.zero in g.support
        assert sum(g.dim(x) for x in g.support) == n * n
        positions = [p for x in g.support for p in g.component(x)]
        assert sorted(positions) == sorted(itertools.product(range(1, n + 1), repeat=2))
        for x in g.support:
            assert g.dim(x) == g.dim(-x)
            assert g.patterns[x].transpose() == g.patterns[-x]
            assert g.patterns[x].popcount() == g.dim(x)
        assert (g.dim(d.zero) == n) == g.distinct_entries
        if g.distinct_entries:
            assert pattern_matrix(g, d.zero) == PatternMatrix.identity(n)


@pytest.mark.parametrize(
    ("values", "g", "expected"),
    [
        ((0, 1, 2), 1, {1: 2, 2: 3}),
        ((0, 1, 2), 2, {1: 3}),
        ((0, 2, 3, 5), 3, {1: 3, 2: 4}),
    ],
)
def test_hat_map(values, g, expected):
    assert hat_map(grading(Z, *values), Z.element(g)) == expected


def test_hat_map_errors():
    with pytest.raises(RepeatedEntriesError):
        hat_map(grading(Z, 0, 0, 1), Z.element(1))
    with pytest.raises(NotInSupportError):
        hat_map(grading(Z, 0, 1, 2), Z.element(4))


@pytest.mark.parametrize(
    ("values", "reduced"),
    [((0, 0, 1), (0, 1)), ((0, 1, 2), (0, 1, 2)), ((4, 4, 4), (4,)), ((2, 0, 2, 1, 0), (2, 0, 1))],
)
def test_reduce_distinct(values, reduced):
    g = grading(Z, *values)
    r = reduce_distinct(g)
    assert r.tuple == GradingTuple.of(Z, *reduced)
    assert r.distinct_entries
    assert r.support == g.support


def test_reduce_distinct_keeps_identity_verdicts():
    g = grading(zmod(6), 0, 3, 3, 1, 0)
    r = reduce_distinct(g)
    for k in range(1, 4):
        for letters in itertools.product(sorted(g.support, key=lambda x: x.coords), repeat=k):
            w = DegreeWord(g.descriptor, letters)
            assert is_identity(g, w) == is_identity(r, w)


def test_canonical_form_examples():
    assert canonical_form(GradingTuple.of(Z, 3, 1, 2)) == GradingTuple.of(Z, 0, 1, 2)
    assert is_isomorphic(GradingTuple.of(Z, 7, 12, 17), GradingTuple.of(Z, 0, 5, 10))


def test_mirror_tuples_are_only_weakly_isomorphic():
    a, b = GradingTuple.of(Z, 0, 1, 3), GradingTuple.of(Z, 0, 2, 3)
    assert not is_isomorphic(a, b)
    assert is_weakly_isomorphic(a, b)
    c, d = GradingTuple.of(Z, 0, 1, 2), GradingTuple.of(Z, 0, 2, 4)
    assert not is_isomorphic(c, d)
    assert not is_weakly_isomorphic(c, d)


def test_weak_isomorphism_over_cyclic_group():
    d = zmod(7)
    assert is_weakly_isomorphic(GradingTuple.of(d, 0, 1, 2), GradingTuple.of(d, 0, 3, 6))
    assert not is_isomorphic(GradingTuple.of(d, 0, 1, 2), GradingTuple.of(d, 0, 3, 6))


def test_canonical_form_is_invariant():
    for n in range(1, 5):
        for values in itertools.combinations(range(6), n):
            t = GradingTuple.of(Z, *values)
            c = canonical_form(t)
            assert canonical_form(c) == c
            assert c.entries[0] == Z.zero
            for perm in itertools.permutations(values):
                for shift in (-3, 4):
                    moved = GradingTuple.of(Z, *(x + shift for x in perm))
                    assert canonical_form(moved) == c


def test_canonical_form_over_torsion_group():
    d = zmod(5)
    t = GradingTuple.of(d, 4, 1, 3)
    c = canonical_form(t)
    assert canonical_form(t.translate(d.element(2))) == c
    assert is_isomorphic(t, t.translate(d.element(3)))


def test_isomorphic_tuples_share_differences():
    t1 = GradingTuple.of(Z, 2, 9, 5, 4)
    t2 = GradingTuple.of(Z, -1, 2, 6, 1)
    assert is_isomorphic(t1, t2)
    diffs = [sorted((b - a).coords for a in t.entries for b in t.entries) for t in (t1, t2)]
    assert diffs[0] == diffs[1]


@pytest.mark.parametrize(
    ("values", "steps", "palindromic"),
    [((0, 1, 3, 4), (1, 2, 1), True), ((0, 1, 2, 4), (1, 1, 2), False), ((0, 1, 2), (1, 1), True)],
)
def test_difference_profile(values, steps, palindromic):
    profile = difference_profile(grading(Z, *values))
    assert profile.steps == tuple(Z.element(x) for x in steps)
    assert profile.palindromic == palindromic


def test_difference_profile_sorts_and_validates():
    assert difference_profile(grading(Z, 4, 0, 3, 1)).steps == tuple(
        Z.element(x) for x in (1, 2, 1)
    )
    with pytest.raises(TorsionError):
        difference_profile(grading(zmod(5), 0, 1))
    with pytest.raises(RepeatedEntriesError):
        difference_profile(grading(Z, 0, 0, 1))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
def test_coarsening_model(n: int):
    t = coarsening_model(n)
    assert t.n == n
    assert t.descriptor == GroupDescriptor(n // 2)
    g = build_grading(t)
    assert g.distinct_entries
    assert is_model_coarsening(g)


def test_coarsening_model_shape():
    t = coarsening_model(4)
    assert t.to_json() == [[0, 0], [1, 0], [1, 1], [2, 1]]


def test_one_dimensional_components():
    g = grading(Z, 0, 1, 3)
    assert one_dimensional_components(g) == [Z.element(x) for x in (-3, -2, -1, 1, 2, 3)]
    assert one_dimensional_components(grading(Z, 0, 1, 2)) == [Z.element(-2), Z.element(2)]


def test_is_strong():
    for n in range(2, 6):
        assert is_strong(grading(zmod(n), *range(n)))
        assert not is_strong(grading(Z, *range(n)))
    # support is all of Z_5, but R_2 R_2 = 0 while R_4 is not
    assert not is_strong(grading(zmod(5), 0, 1, 2))


def test_reduction_keeps_verdicts_on_random_tuples(rng):
    checked = 0
    while checked < 20:
        d = rng.choice([Z, zmod(5)])
        values = [rng.randrange(4) for _ in range(rng.randint(2, 5))]
        if len(set(values)) == len(values):
            continue
        g = grading(d, *values)
        r = reduce_distinct(g)
        for k in range(1, 5):
            for letters in itertools.product(g.support_order, repeat=k):
                w = DegreeWord(d, letters)
                assert is_identity(g, w) == is_identity(r, w)
        checked += 1
