import random

import pytest

from gradedpi.algebra.group import (
    GroupDescriptor,
    add,
    lex_less,
    lex_sorted,
    neg,
    parse_group,
    word_sum,
)
from gradedpi.errors import (
    DescriptorMismatchError,
    GradedPIError,
    GroupSyntaxError,
    TorsionError,
)

Z = GroupDescriptor(1)
Z5 = GroupDescriptor(0, (5,))
Z_Z3 = GroupDescriptor(1, (3,))


@pytest.mark.parametrize(
    ("spec", "free_rank", "moduli"),
    [
        ("Z", 1, ()),
        ("Z_5", 0, (5,)),
        ("Z^2 x Z_3", 2, (3,)),
        ("Z^2xZ_3", 2, (3,)),
        ("Z_2 x Z x Z_4", 1, (2, 4)),
    ],
)
def test_parse_group(spec: str, free_rank: int, moduli: tuple[int, ...]):
    d = parse_group(spec)
    assert d.free_rank == free_rank
    assert d.moduli == moduli


@pytest.mark.parametrize(
    ("spec", "token"),
    [("Z_1", "Z_1"), ("Z^0", "Z^0"), ("Z x Q", "Q"), ("", "")],
)
def test_parse_group_reports_token(spec: str, token: str):
    with pytest.raises(GroupSyntaxError) as e:
        parse_group(spec)
    assert e.value.token == token
    assert isinstance(e.value, GradedPIError)


def test_descriptor_properties():
    assert Z.torsion_free()
    assert not Z5.torsion_free()
    assert not Z5.has_order_2_element()
    assert GroupDescriptor(0, (3, 4)).has_order_2_element()
    assert Z5.finite and Z5.order == 5
    assert not Z.finite and Z.order is None
    assert str(GroupDescriptor(2, (3,))) == "Z^2 x Z_3"
    assert parse_group(str(GroupDescriptor(2, (3,)))) == GroupDescriptor(2, (3,))


def test_descriptor_rejects_small_modulus():
    with pytest.raises(GradedPIError):
        GroupDescriptor(0, (1,))


def test_arithmetic_examples():
    assert add(Z5.element(2), Z5.element(2)) == Z5.element(4)
    assert neg(Z.element(3)) == Z.element(-3)
    assert add(Z_Z3.element(1, 2), Z_Z3.element(0, 2)) == Z_Z3.element(1, 1)
    assert Z5.element(7).coords == (2,)
    assert Z5.element(-1).coords == (4,)
    assert 3 * Z5.element(2) == Z5.element(1)


def test_mixed_descriptors_rejected():
    with pytest.raises(DescriptorMismatchError):
        add(Z.element(1), Z5.element(1))


@pytest.mark.parametrize(
    ("d", "letters", "total"),
    [(Z, (1, 1, 1), 3), (Z5, (2, 2), 4), (Z, (2, -1, -1), 0)],
)
def test_word_sum(d: GroupDescriptor, letters: tuple[int, ...], total: int):
    assert word_sum(d.element(x) for x in letters) == d.element(total)


def test_word_sum_empty():
    with pytest.raises(GradedPIError):
        word_sum([])


def test_lex_less():
    z2 = GroupDescriptor(2)
    assert lex_less(Z.element(0), Z.element(3))
    assert lex_less(z2.element(1, 5), z2.element(2, 0))
    assert not lex_less(Z.element(2), Z.element(2))
    with pytest.raises(TorsionError):
        lex_less(Z5.element(1), Z5.element(2))


def test_lex_order_is_translation_invariant(rng: random.Random):
    z2 = GroupDescriptor(2)
    for _ in range(200):
        a, b, c = (z2.element(rng.randint(-9, 9), rng.randint(-9, 9)) for _ in range(3))
        assert lex_less(a, b) == lex_less(a + c, b + c)


def test_group_laws(rng: random.Random):
    d = GroupDescriptor(1, (4, 6))
    for _ in range(100):
        a, b, c = (
            d.element(rng.randint(-20, 20), rng.randrange(12), rng.randrange(12))
            for _ in range(3)
        )
        assert a + neg(a) == d.zero
        assert a + b == b + a
        assert (a + b) + c == a + (b + c)
        letters = [a, b, c, a]
        for i in range(1, len(letters)):
            assert word_sum(letters) == word_sum(letters[:i]) + word_sum(letters[i:])


def test_parse_elements():
    d = GroupDescriptor(1, (3,))
    assert d.parse_elements("(0,0),(1,2)") == (d.element(0, 0), d.element(1, 2))
    assert Z.parse_element("(3)") == Z.parse_element("3") == Z.element(3)
    assert Z.parse_elements("0, -2,5") == (Z.element(0), Z.element(-2), Z.element(5))
    with pytest.raises(GroupSyntaxError):
        d.parse_elements("1,2")
    with pytest.raises(GroupSyntaxError):
        Z.parse_elements("0,a")


def test_element_json_round_trip():
    d = GroupDescriptor(1, (3,))
    x = d.element(-4, 2)
    assert x.to_json() == [-4, 2]
    assert d.element_from_json(x.to_json()) == x
    assert Z.element(7).to_json() == 7
    assert lex_sorted([Z.element(3), Z.element(-1), Z.element(0)]) == [
        Z.element(-1),
        Z.element(0),
        Z.element(3),
    ]


def test_finite_group_elements():
    assert len(list(GroupDescriptor(0, (2, 3)).elements())) == 6
    with pytest.raises(GradedPIError):
        list(Z.elements())


def test_automorphism_multipliers():
    assert Z.automorphism_multipliers() == (1, -1)
    assert GroupDescriptor(0, (8,)).automorphism_multipliers() == (1, 3, 5, 7)
    with pytest.raises(GradedPIError):
        GroupDescriptor(2).automorphism_multipliers()
