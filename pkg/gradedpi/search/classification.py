import itertools
from dataclasses import dataclass, field
from typing import NamedTuple

from loguru import logger

from ..algebra.grading import (
    ElementaryGrading,
    GradingTuple,
    build_grading,
    difference_profile,
    ensure_distinct,
    ensure_torsion_free,
    is_isomorphic,
)
from ..algebra.group import GroupDescriptor
from ..config import config
from ..consts import CLASSIFY_MAX_N, CLASSIFY_MIN_N, FAMILY_SIZES, FamilyKindType
from ..errors import CriteriaDisagreementError, GradedPIError, UnsupportedSizeError
from ..utils import fan_out
from .enumeration import is_almost_nondegenerate

Z = GroupDescriptor(1)


class CanonicalZCriteria(NamedTuple):
    support_size: bool
    progression: bool
    full_component: bool

    @property
    def coherent(self) -> bool:
        return len(set(self)) == 1


def canonical_z_criteria(grading: ElementaryGrading) -> CanonicalZCriteria:
    ensure_torsion_free(grading)
    ensure_distinct(grading)
    n = grading.n
    steps = difference_profile(grading).steps
    return CanonicalZCriteria(
        support_size=len(grading.support) == 2 * n - 1,
        progression=len(set(steps)) <= 1,
        # vacuous for n = 1, there is no nonzero degree
        full_component=n == 1 or any(grading.dim(g) == n - 1 for g in grading.nonzero_support),
    )


def equiv_canonical_Z(grading: ElementaryGrading) -> bool:  # noqa: N802
    """Whether the grading is equivalent to the canonical Z-grading"""
    criteria = canonical_z_criteria(grading)
    if config.check_coherence and not criteria.coherent:
        raise CriteriaDisagreementError(
            f"Criteria disagree on ({grading.tuple}): {criteria._asdict()}",
        )
    return criteria.progression


def family_tuple(n: int, a: int, b: int) -> tuple[int, ...]:
    if n == 4:
        return (0, a, a + b, 2 * a + b)
    if n == 5:
        return (0, a, a + b, a + 2 * b, 2 * a + 2 * b)
    raise UnsupportedSizeError(f"Families are known for n in {FAMILY_SIZES}, got {n}")


def family_predicate(n: int, a: int, b: int) -> bool:
    if n == 4:
        return a != 2 * b and 2 * a != b
    if n == 5:
        return a != 2 * b and b != 2 * a and a != 3 * b and a != 4 * b
    raise UnsupportedSizeError(f"Families are known for n in {FAMILY_SIZES}, got {n}")


class FamilyVerdict(NamedTuple):
    grading_tuple: GradingTuple
    predicted: bool


def family_verdict(n: int, a: int, b: int) -> FamilyVerdict:
    if a < 1 or b < 1:
        raise GradedPIError(f"Family parameters must be positive, got a={a}, b={b}")
    return FamilyVerdict(GradingTuple.of(Z, *family_tuple(n, a, b)), family_predicate(n, a, b))


@dataclass(frozen=True)
class FamilyMatch:
    kind: FamilyKindType
    a: int | None = None
    b: int | None = None


def match_family(values: tuple[int, ...]) -> FamilyMatch:
    """Which known almost non-degenerate family a canonical Z-tuple belongs to"""
    n = len(values)
    tuple_ = GradingTuple.of(Z, *values)
    if equiv_canonical_Z(build_grading(tuple_)):
        return FamilyMatch("canonical-Z", values[1] if n > 1 else None)
    if n in FAMILY_SIZES:
        a, b = values[1], values[2] - values[1]
        if (
            b >= 1
            and family_predicate(n, a, b)
            and is_isomorphic(tuple_, GradingTuple.of(Z, *family_tuple(n, a, b)))
        ):
            return FamilyMatch("family-n4" if n == 4 else "family-n5", a, b)
    return FamilyMatch("unmatched")


@dataclass
class ClassificationResult:
    n: int
    bound: int
    survivors: list[tuple[int, ...]] = field(default_factory=list)
    matches: list[FamilyMatch] = field(default_factory=list)
    pruned: int = 0
    examined: int = 0

    @property
    def unmatched(self) -> list[tuple[int, ...]]:
        return [t for t, m in zip(self.survivors, self.matches) if m.kind == "unmatched"]

    def family(self, kind: FamilyKindType) -> list[tuple[tuple[int, ...], FamilyMatch]]:
        return [(t, m) for t, m in zip(self.survivors, self.matches) if m.kind == kind]


class SliceResult(NamedTuple):
    survivors: list[tuple[int, ...]]
    pruned: int
    examined: int


def _classify_slice(args: tuple[int, int, int, bool]) -> SliceResult:
    """Ascending tuples (0, g2, ...) with last entry <= bound, for a fixed g2"""
    n, bound, g2, prune = args
    survivors: list[tuple[int, ...]] = []
    pruned = examined = 0
    for rest in itertools.combinations(range(g2 + 1, bound + 1), n - 2):
        values = (0, g2, *rest)
        grading = build_grading(GradingTuple.of(Z, *values))
        # almost non-degenerate tuples of these sizes are coarsenings of the model
        if prune and not difference_profile(grading).palindromic:
            pruned += 1
            continue
        examined += 1
        if is_almost_nondegenerate(grading):
            survivors.append(values)
    return SliceResult(survivors, pruned, examined)


def classify_almost_nondeg(
    n: int,
    bound: int,
    prune: bool | None = None,
    workers: int | None = None,
) -> ClassificationResult:
    if not CLASSIFY_MIN_N <= n <= CLASSIFY_MAX_N:
        raise UnsupportedSizeError(
            f"Classification covers {CLASSIFY_MIN_N} <= n <= {CLASSIFY_MAX_N}, got {n}",
        )
    if bound < n - 1:
        raise GradedPIError(f"Entry bound must be at least n - 1 = {n - 1}, got {bound}")
    prune = config.classify_prune if prune is None else prune

    jobs = [(n, bound, g2, prune) for g2 in range(1, bound - n + 3)]
    result = ClassificationResult(n, bound)
    for part in fan_out(_classify_slice, jobs, workers):
        result.survivors.extend(part.survivors)
        result.pruned += part.pruned
        result.examined += part.examined
    result.matches = [match_family(t) for t in result.survivors]

    logger.info(
        f"n={n}, B={bound}: {result.examined} examined, {result.pruned} pruned"
        f", {len(result.survivors)} survivor(s), {len(result.unmatched)} unmatched",
    )
    return result
