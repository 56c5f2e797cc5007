import itertools
import random

from gradedpi.algebra.grading import ElementaryGrading, GradingTuple, build_grading
from gradedpi.algebra.group import GroupDescriptor
from gradedpi.algebra.monomial import DegreeWord

Z = GroupDescriptor(1)


def zmod(m: int) -> GroupDescriptor:
    return GroupDescriptor(0, (m,))


def grading(d: GroupDescriptor, *values) -> ElementaryGrading:
    return build_grading(GradingTuple.of(d, *values))


def word(d: GroupDescriptor, *values) -> DegreeWord:
    return DegreeWord.of(d, *values)


def matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def elementary(n: int, p: int, q: int) -> list[list[int]]:
    return [[int(i == p - 1 and j == q - 1) for j in range(n)] for i in range(n)]


def substitution_is_identity(g: ElementaryGrading, w: DegreeWord) -> bool:
    """Substitute every choice of homogeneous elementary matrices into x_1 ... x_k"""
    choices = [g.component(h) for h in w]
    for pairs in itertools.product(*choices):
        product = elementary(g.n, *pairs[0])
        for p, q in pairs[1:]:
            product = matmul(product, elementary(g.n, p, q))
        if any(any(row) for row in product):
            return False
    return True


def random_grading(rng: random.Random, d: GroupDescriptor, n: int, top: int = 12) -> ElementaryGrading:
    """Distinct entries drawn from [0, top) per coordinate"""
    while True:
        entries = {tuple(rng.randrange(top) for _ in range(d.rank)) for _ in range(n)}
        if len(entries) == n:
            values = [d.element(*x) for x in sorted(entries)]
            if len(set(values)) == n:
                return build_grading(GradingTuple(d, tuple(values)))
