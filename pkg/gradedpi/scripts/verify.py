import itertools
import sys
from collections.abc import Callable

from cookit.loguru import warning_suppress
from loguru import logger

from ..algebra.grading import GradingTuple, build_grading, difference_profile
from ..algebra.group import GroupDescriptor
from ..algebra.monomial import DegreeWord, classify_word, eval_word
from ..config import setup_logging
from ..search.classification import (
    canonical_z_criteria,
    classify_almost_nondeg,
    family_verdict,
)
from ..search.enumeration import (
    enumerate_minimal_identities,
    is_almost_nondegenerate,
)
from ..utils.operation import OpInfo, OpIt, format_op

Z = GroupDescriptor(1)

theorem_checks: dict[str, Callable[[], bool]] = {}


def theorem_check(name: str):
    def deco(func: Callable[[], bool]) -> Callable[[], bool]:
        theorem_checks[name] = func
        return func

    return deco


@theorem_check("canonical Z-gradings are almost non-degenerate")
def _() -> bool:
    for n in range(2, 6):
        grading = build_grading(GradingTuple.of(Z, *range(n)))
        if enumerate_minimal_identities(grading, n) or not is_almost_nondegenerate(grading):
            return False
    return True


@theorem_check("R_1^n = 0 is the shortest identity of the Z_(n+1)-grading")
def _() -> bool:
    for n in range(3, 6):
        d = GroupDescriptor(0, (n + 1,))
        grading = build_grading(GradingTuple.of(d, *range(n)))
        found = enumerate_minimal_identities(grading, n)
        ones = DegreeWord.of(d, *([1] * n))
        if ones not in found.identities or any(len(w) < n for w in found):
            return False
        for k in range(1, n):
            for w in itertools.product(grading.nonzero_support, repeat=k):
                if eval_word(grading, DegreeWord(d, w)).popcount() < n - k:
                    return False
    return True


@theorem_check("(n-1, n-1) is a non-trivial identity over Z_(2n-1)")
def _() -> bool:
    for n in range(3, 6):
        d = GroupDescriptor(0, (2 * n - 1,))
        grading = build_grading(GradingTuple.of(d, *range(n)))
        report = classify_word(grading, DegreeWord.of(d, n - 1, n - 1))
        if not report.is_identity or report.is_trivial or is_almost_nondegenerate(grading):
            return False
    return True


def _family_agrees(n: int, top: int) -> bool:
    for a, b in itertools.product(range(1, top + 1), repeat=2):
        tuple_, predicted = family_verdict(n, a, b)
        if bool(is_almost_nondegenerate(build_grading(tuple_))) != predicted:
            logger.warning(f"n={n}, a={a}, b={b}: prediction {predicted} disagrees")
            return False
    return True


@theorem_check("n = 4 family predictions")
def _() -> bool:
    return _family_agrees(4, 10) and not classify_almost_nondeg(4, 12).unmatched


@theorem_check("n = 5: only progressions are almost non-degenerate")
def _() -> bool:
    disagreements = 0
    for a, b in itertools.product(range(1, 9), repeat=2):
        tuple_, predicted = family_verdict(5, a, b)
        grading = build_grading(tuple_)
        if bool(is_almost_nondegenerate(grading)) != (a == b):
            return False
        if a == b or not predicted:
            continue
        report = classify_word(grading, DegreeWord.of(Z, -a - 2 * b, b, a))
        if not report.is_identity or report.is_trivial:
            return False
        disagreements += 1
    logger.warning(
        f"Family predicate holds only for a = b: {disagreements} predicted pair(s)"
        " carry the non-trivial identity (-a-2b, b, a)",
    )
    return not classify_almost_nondeg(5, 15).unmatched


@theorem_check("canonical Z criteria agree and imply almost non-degeneracy")
def _() -> bool:
    for n in range(1, 7):
        for rest in itertools.combinations(range(1, 13), n - 1):
            grading = build_grading(GradingTuple.of(Z, 0, *rest))
            criteria = canonical_z_criteria(grading)
            if not criteria.coherent:
                return False
            if criteria.progression and not is_almost_nondegenerate(grading):
                return False
    return True


@theorem_check("survivors have palindromic profiles, pruning changes nothing")
def _() -> bool:
    for n, bound in ((4, 12), (5, 15)):
        pruned = classify_almost_nondeg(n, bound, prune=True)
        full = classify_almost_nondeg(n, bound, prune=False)
        if pruned.survivors != full.survivors:
            return False
        for t in full.survivors:
            if not difference_profile(build_grading(GradingTuple.of(Z, *t))).palindromic:
                return False
    return True


def run_checks() -> OpInfo[str]:
    op = OpInfo[str]()
    for name, func in theorem_checks.items():
        logger.info(f"Checking: {name}")
        try:
            passed = func()
        except Exception as e:
            op.failed.append(OpIt(name, exc=e))
            with warning_suppress(f"Check `{name}` raised"):
                raise
        else:
            op.check(name, passed)
            if passed:
                logger.success(f"Passed: {name}")
            else:
                logger.warning(f"Failed: {name}")
    return op


def main():
    setup_logging("INFO")
    op = run_checks()
    for x in format_op(op).splitlines():
        logger.info(x)
    sys.exit(1 if op.failed else 0)
