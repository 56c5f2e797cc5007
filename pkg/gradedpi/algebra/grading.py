from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from ..errors import (
    DescriptorMismatchError,
    GradedPIError,
    NotInSupportError,
    RepeatedEntriesError,
    TorsionError,
)
from .group import (
    GroupDescriptor,
    GroupElement,
    format_elements,
    lex_sorted,
)
from .pattern import PatternMatrix

IndexPair = tuple[int, int]


@dataclass(frozen=True)
class GradingTuple:
    descriptor: GroupDescriptor
    entries: tuple[GroupElement, ...]

    def __post_init__(self):
        if not self.entries:
            raise GradedPIError("A grading tuple needs at least one entry")
        for x in self.entries:
            if x.descriptor != self.descriptor:
                raise DescriptorMismatchError(
                    f"Entry {x} belongs to {x.descriptor}, not {self.descriptor}",
                )

    @classmethod
    def parse(cls, descriptor: GroupDescriptor, text: str) -> "GradingTuple":
        return cls(descriptor, descriptor.parse_elements(text))

    @classmethod
    def of(cls, descriptor: GroupDescriptor, *values: int | Sequence[int]) -> "GradingTuple":
        return cls(descriptor, tuple(descriptor.element_from_json(v) for v in values))

    @property
    def n(self) -> int:
        return len(self.entries)

    def translate(self, c: GroupElement) -> "GradingTuple":
        return GradingTuple(self.descriptor, tuple(x + c for x in self.entries))

    def to_json(self) -> list[int | list[int]]:
        return [x.to_json() for x in self.entries]

    def __str__(self) -> str:
        return format_elements(self.entries)


class ElementaryGrading:
    """
    Elementary grading on M_n induced by a tuple, e_pq homogeneous of degree
    g_q - g_p. Immutable once built.
    """

    def __init__(
        self,
        tuple_: GradingTuple,
        components: dict[GroupElement, tuple[IndexPair, ...]],
    ):
        self.tuple = tuple_
        self._components = components
        self.support: frozenset[GroupElement] = frozenset(components)
        self.patterns: dict[GroupElement, PatternMatrix] = {
            g: PatternMatrix.from_pairs(tuple_.n, pairs)
            for g, pairs in components.items()
        }
        assert all(
            self.patterns[g].popcount() == len(pairs) for g, pairs in components.items()
        )
        self.distinct_entries = len(set(tuple_.entries)) == tuple_.n

    @property
    def descriptor(self) -> GroupDescriptor:
        return self.tuple.descriptor

    @property
    def n(self) -> int:
        return self.tuple.n

    @property
    def entries(self) -> tuple[GroupElement, ...]:
        return self.tuple.entries

    @cached_property
    def support_order(self) -> tuple[GroupElement, ...]:
        return tuple(lex_sorted(self.support))

    @cached_property
    def nonzero_support(self) -> tuple[GroupElement, ...]:
        return tuple(x for x in self.support_order if not x.is_zero)

    def component(self, g: GroupElement) -> tuple[IndexPair, ...]:
        return self._components.get(g, ())

    @property
    def components(self) -> dict[GroupElement, tuple[IndexPair, ...]]:
        return dict(self._components)

    def dim(self, g: GroupElement) -> int:
        return len(self.component(g))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ElementaryGrading) and self.tuple == other.tuple

    def __hash__(self) -> int:
        return hash(self.tuple)

    def __repr__(self) -> str:
        return f"ElementaryGrading({self.descriptor}, ({self.tuple}))"


def build_grading(tuple_: GradingTuple) -> ElementaryGrading:
    pairs: dict[GroupElement, list[IndexPair]] = {}
    entries = tuple_.entries
    for p, gp in enumerate(entries, 1):
        for q, gq in enumerate(entries, 1):
            pairs.setdefault(gq - gp, []).append((p, q))
    return ElementaryGrading(tuple_, {g: tuple(v) for g, v in pairs.items()})


def ensure_in_group(grading: ElementaryGrading, g: GroupElement):
    if g.descriptor != grading.descriptor:
        raise DescriptorMismatchError(
            f"Element {g} of {g.descriptor} used with a grading by {grading.descriptor}",
        )


def ensure_distinct(grading: ElementaryGrading):
    if not grading.distinct_entries:
        raise RepeatedEntriesError(
            f"Tuple ({grading.tuple}) has repeated entries, reduce it first",
        )


def ensure_torsion_free(grading: ElementaryGrading):
    if not grading.descriptor.torsion_free():
        raise TorsionError(
            f"Group {grading.descriptor} has torsion and carries no linear order",
        )


def pattern_matrix(grading: ElementaryGrading, g: GroupElement) -> PatternMatrix:
    ensure_in_group(grading, g)
    return grading.patterns.get(g) or PatternMatrix.zero(grading.n)


def hat_map(grading: ElementaryGrading, g: GroupElement) -> dict[int, int]:
    ensure_in_group(grading, g)
    ensure_distinct(grading)
    if g not in grading.support:
        raise NotInSupportError(f"{g} is not in the support")
    return dict(grading.component(g))


def reduce_distinct(grading: ElementaryGrading) -> ElementaryGrading:
    if grading.distinct_entries:
        return grading
    firsts = tuple(dict.fromkeys(grading.entries))
    return build_grading(GradingTuple(grading.descriptor, firsts))


def _free_nonnegative(x: GroupElement) -> bool:
    return x.free_part >= (0,) * len(x.free_part)


def canonical_form(tuple_: GradingTuple) -> GradingTuple:
    """
    Least translate sort(entries - g_i) among those whose free parts are all
    lexicographically non-negative. Over Z this is the ascending tuple
    starting at 0.
    """
    candidates = (
        tuple(lex_sorted(x - base for x in tuple_.entries)) for base in tuple_.entries
    )
    best = min(
        (c for c in candidates if all(_free_nonnegative(x) for x in c)),
        key=lambda c: [x.coords for x in c],
    )
    return GradingTuple(tuple_.descriptor, best)


def is_isomorphic(t1: GradingTuple, t2: GradingTuple) -> bool:
    if t1.descriptor != t2.descriptor:
        raise DescriptorMismatchError(
            f"Tuples over different groups: {t1.descriptor} and {t2.descriptor}",
        )
    return t1.n == t2.n and canonical_form(t1) == canonical_form(t2)


def apply_multiplier(tuple_: GradingTuple, u: int) -> GradingTuple:
    return GradingTuple(tuple_.descriptor, tuple(u * x for x in tuple_.entries))


def is_weakly_isomorphic(t1: GradingTuple, t2: GradingTuple) -> bool:
    """Isomorphic up to an automorphism of Z or Z_m"""
    if t1.descriptor != t2.descriptor:
        raise DescriptorMismatchError(
            f"Tuples over different groups: {t1.descriptor} and {t2.descriptor}",
        )
    if t1.n != t2.n:
        return False
    target = canonical_form(t2)
    return any(
        canonical_form(apply_multiplier(t1, u)) == target
        for u in t1.descriptor.automorphism_multipliers()
    )


class DifferenceProfile(NamedTuple):
    steps: tuple[GroupElement, ...]
    palindromic: bool


def difference_profile(grading: ElementaryGrading) -> DifferenceProfile:
    ensure_torsion_free(grading)
    ensure_distinct(grading)
    ordered = lex_sorted(grading.entries)
    steps = tuple(b - a for a, b in zip(ordered, ordered[1:]))
    return DifferenceProfile(steps, steps == steps[::-1])


def coarsening_model(n: int) -> GradingTuple:
    """The Z^(n // 2) tuple whose coarsenings are the palindromic profiles"""
    if n < 2:
        raise GradedPIError(f"The coarsening model needs n >= 2, got {n}")
    half = n // 2
    descriptor = GroupDescriptor(half)
    units = [descriptor.element(*(int(i == k) for i in range(half))) for k in range(half)]
    steps = [units[t] if t < half else units[n - 2 - t] for t in range(n - 1)]
    entries = [descriptor.zero]
    for d in steps:
        entries.append(entries[-1] + d)
    return GradingTuple(descriptor, tuple(entries))


def is_model_coarsening(grading: ElementaryGrading) -> bool:
    return difference_profile(grading).palindromic


def one_dimensional_components(grading: ElementaryGrading) -> list[GroupElement]:
    return [g for g in grading.support_order if grading.dim(g) == 1]


def is_strong(grading: ElementaryGrading) -> bool:
    """R_g R_h = R_(g+h) for all g, h in the group"""
    d = grading.descriptor
    if not d.finite or len(grading.support) != d.order:
        # some R_g is zero while R_(g + (-g)) = R_0 is not
        return False
    return all(
        grading.patterns[g] @ grading.patterns[h] == grading.patterns[g + h]
        for g in grading.support_order
        for h in grading.support_order
    )
