import itertools
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
from functools import lru_cache
from typing import NamedTuple

from loguru import logger

from ..algebra.grading import (
    ElementaryGrading,
    GradingTuple,
    build_grading,
    one_dimensional_components,
    reduce_distinct,
)
from ..algebra.group import GroupDescriptor, GroupElement
from ..algebra.monomial import (
    DegreeWord,
    GeneratorTrie,
    classify_word,
    match_consequence,
)
from ..algebra.pattern import PatternMatrix
from ..config import config
from ..errors import GradedPIError
from ..utils import fan_out

LetterPath = tuple[int, ...]


@dataclass(frozen=True)
class SearchTables:
    """
    Precomputed alphabet for word searches over a grading.

    Letters are the nonzero support in ascending order. Suffix sums are kept as
    bitmasks over support indices, `plus[i][j]` is the index of
    support[i] + support[j] or -1 when the sum leaves the support.
    """

    letters: tuple[GroupElement, ...]
    letter_slots: tuple[int, ...]
    patterns: tuple[PatternMatrix, ...]
    plus: tuple[tuple[int, ...], ...]

    def extend_suffixes(self, suffixes: int, letter: int) -> int | None:
        """Suffix sum mask after appending `letter`, None if the word turns trivial"""
        a = self.letter_slots[letter]
        out = 1 << a
        while suffixes:
            low = suffixes & -suffixes
            s = self.plus[low.bit_length() - 1][a]
            if s < 0:
                return None
            out |= 1 << s
            suffixes ^= low
        return out

    def word(self, descriptor: GroupDescriptor, path: LetterPath) -> DegreeWord:
        return DegreeWord(descriptor, tuple(self.letters[i] for i in path))


@lru_cache(maxsize=64)
def search_tables(grading: ElementaryGrading) -> SearchTables:
    support = grading.support_order
    slot = {g: i for i, g in enumerate(support)}
    zero = grading.descriptor.zero
    # 0-letters are skipped, M_0 is the identity pattern
    assert not grading.distinct_entries or grading.patterns[zero] == PatternMatrix.identity(
        grading.n,
    )
    letters = grading.nonzero_support
    plus = tuple(tuple(slot.get(a + b, -1) for b in support) for a in support)
    return SearchTables(
        letters=letters,
        letter_slots=tuple(slot[x] for x in letters),
        patterns=tuple(grading.patterns[x] for x in letters),
        plus=plus,
    )


@dataclass
class MinimalIdentitySet:
    grading: ElementaryGrading
    max_len: int
    identities: list[DegreeWord] = field(default_factory=list)

    def __bool__(self) -> bool:
        return bool(self.identities)

    def __iter__(self) -> Iterator[DegreeWord]:
        return iter(self.identities)


def _identity_continuations(
    tables: SearchTables,
    first: int,
    max_len: int,
) -> list[LetterPath]:
    """
    Letter paths starting with `first` that reach a zero product at their last
    letter while every contiguous sum stays in the support.
    """
    memo: dict[tuple[PatternMatrix, int, int], tuple[LetterPath, ...]] = {}

    def grow(product: PatternMatrix, suffixes: int, remaining: int) -> tuple[LetterPath, ...]:
        key = (product, suffixes, remaining)
        if (cached := memo.get(key)) is not None:
            return cached
        found: list[LetterPath] = []
        for i, m in enumerate(tables.patterns):
            if (suff := tables.extend_suffixes(suffixes, i)) is None:
                continue
            nxt = product @ m
            if not nxt:
                found.append((i,))
            elif remaining > 1:
                found.extend((i, *rest) for rest in grow(nxt, suff, remaining - 1))
        memo[key] = res = tuple(found)
        return res

    head = tables.patterns[first]
    suffixes = 1 << tables.letter_slots[first]
    if max_len == 1:
        return []
    paths = [(first, *rest) for rest in grow(head, suffixes, max_len - 1)]
    logger.debug(
        f"First letter {tables.letters[first]}: {len(paths)} identity word(s)"
        f", {len(memo)} shared state(s)",
    )
    return paths


def _enumerate_worker(args: tuple[GradingTuple, int, int]) -> list[LetterPath]:
    tuple_, first, max_len = args
    return _identity_continuations(search_tables(build_grading(tuple_)), first, max_len)


def filter_minimal(words: Sequence[DegreeWord]) -> list[DegreeWord]:
    """Drop words that are block consequences of shorter kept words"""
    trie = GeneratorTrie()
    kept: list[DegreeWord] = []
    for w in sorted(words, key=lambda x: x.sort_key):
        if match_consequence(w, trie) is None:
            kept.append(w)
            trie.add(w)
    return kept


def enumerate_minimal_identities(
    grading: ElementaryGrading,
    max_len: int,
    workers: int | None = None,
) -> MinimalIdentitySet:
    """
    Minimal non-trivial monomial identities of length at most `max_len`.

    Depth-first over letters of the nonzero support. A branch stops at the
    first zero product (extensions are consequences) or as soon as a
    contiguous sum leaves the support (superwords of trivial words are
    trivial).
    """
    if max_len < 1:
        raise GradedPIError(f"max_len must be at least 1, got {max_len}")
    grading = reduce_distinct(grading)
    tables = search_tables(grading)

    jobs = [(grading.tuple, i, max_len) for i in range(len(tables.letters))]
    found = [
        tables.word(grading.descriptor, path)
        for paths in fan_out(_enumerate_worker, jobs, workers)
        for path in paths
    ]
    identities = filter_minimal(found)
    logger.info(
        f"Grading ({grading.tuple}): {len(found)} first-hit identities"
        f", {len(identities)} minimal up to length {max_len}",
    )
    return MinimalIdentitySet(grading, max_len, identities)


def exhaustive_minimal_identities(
    grading: ElementaryGrading,
    max_len: int,
) -> MinimalIdentitySet:
    """Same result as the pruned search, by classifying every word"""
    if max_len < 1:
        raise GradedPIError(f"max_len must be at least 1, got {max_len}")
    grading = reduce_distinct(grading)
    letters = grading.nonzero_support
    words = [
        DegreeWord(grading.descriptor, w)
        for k in range(1, max_len + 1)
        for w in itertools.product(letters, repeat=k)
    ]
    nontrivial = [
        w
        for w in words
        if (r := classify_word(grading, w)).is_identity and not r.is_trivial
    ]
    return MinimalIdentitySet(grading, max_len, filter_minimal(nontrivial))


class AlmostNondegVerdict(NamedTuple):
    value: bool
    witness: DegreeWord | None = None

    def __bool__(self) -> bool:
        return self.value


def shortest_nontrivial_identity(
    grading: ElementaryGrading,
    max_len: int,
) -> DegreeWord | None:
    """
    Breadth-first by length over distinct (product, suffix sums) states.

    Each state keeps the lexicographically least word reaching it, so the
    first hit is the shortest and then least non-trivial identity.
    """
    tables = search_tables(grading)
    level: dict[tuple[PatternMatrix, int], LetterPath] = {
        (PatternMatrix.identity(grading.n), 0): (),
    }
    for length in range(1, max_len + 1):
        nxt_level: dict[tuple[PatternMatrix, int], LetterPath] = {}
        for (product, suffixes), path in level.items():
            for i, m in enumerate(tables.patterns):
                if (suff := tables.extend_suffixes(suffixes, i)) is None:
                    continue
                nxt = product @ m
                if not nxt:
                    return tables.word(grading.descriptor, (*path, i))
                nxt_level.setdefault((nxt, suff), (*path, i))
        logger.debug(f"Length {length}: {len(nxt_level)} live state(s)")
        if not nxt_level:
            break
        level = nxt_level
    return None


def is_almost_nondegenerate(grading: ElementaryGrading) -> AlmostNondegVerdict:
    reduced = reduce_distinct(grading)
    witness = shortest_nontrivial_identity(reduced, reduced.n)
    return AlmostNondegVerdict(witness is None, witness)


@dataclass(frozen=True)
class NondegVerdict:
    value: bool
    reason: str
    witness: DegreeWord | None = None

    def __bool__(self) -> bool:
        return self.value


def is_nondegenerate(grading: ElementaryGrading) -> NondegVerdict:
    d = grading.descriptor
    if not d.finite:
        return NondegVerdict(False, "infinite group, support is finite")
    if len(grading.support) != d.order:
        return NondegVerdict(False, "support is a proper subset of the group")
    if not (almost := is_almost_nondegenerate(grading)):
        return NondegVerdict(False, "non-trivial monomial identity", almost.witness)
    return NondegVerdict(True, "support is the whole group, no non-trivial identity")


def length_two_identities(grading: ElementaryGrading) -> list[DegreeWord]:
    letters = grading.nonzero_support
    words = (DegreeWord(grading.descriptor, w) for w in itertools.product(letters, repeat=2))
    return [
        w
        for w in words
        if (r := classify_word(grading, w)).is_identity and not r.is_trivial
    ]


class CoarseningHypotheses(NamedTuple):
    one_dimensional: bool
    no_length_two: bool

    @property
    def hold(self) -> bool:
        return self.one_dimensional and self.no_length_two


def coarsening_hypotheses(grading: ElementaryGrading) -> CoarseningHypotheses:
    return CoarseningHypotheses(
        bool(one_dimensional_components(grading)),
        not length_two_identities(grading),
    )


@dataclass(frozen=True)
class GoodSequenceVerdict:
    values: tuple[int, ...]
    max_len: int
    good_up_to_L: bool  # noqa: N815
    violation: tuple[int, ...] | None = None


def good_sequence_violation(
    grading: ElementaryGrading,
    max_len: int,
) -> DegreeWord | None:
    """
    Shortest, then least, word with zero product, every contiguous sum in the
    support and both one-letter truncations nonzero.
    """
    tables = search_tables(grading)
    identity = PatternMatrix.identity(grading.n)
    # (product, suffix sums, product without the first letter)
    level: dict[tuple[PatternMatrix, int, PatternMatrix], LetterPath] = {}
    for i, m in enumerate(tables.patterns):
        if m:
            level.setdefault((m, 1 << tables.letter_slots[i], identity), (i,))

    for length in range(2, max_len + 1):
        nxt_level: dict[tuple[PatternMatrix, int, PatternMatrix], LetterPath] = {}
        for (product, suffixes, tail), path in level.items():
            for i, m in enumerate(tables.patterns):
                if (suff := tables.extend_suffixes(suffixes, i)) is None:
                    continue
                nxt_tail = tail @ m
                if not (nxt := product @ m):
                    if nxt_tail:
                        return tables.word(grading.descriptor, (*path, i))
                    continue
                nxt_level.setdefault((nxt, suff, nxt_tail), (*path, i))
        logger.debug(f"Length {length}: {len(nxt_level)} live state(s)")
        if not nxt_level:
            break
        level = nxt_level
    return None


def is_good_sequence(
    values: Sequence[int],
    max_len: int | None = None,
) -> GoodSequenceVerdict:
    values = tuple(values)
    if max_len is None:
        max_len = config.goodseq_length_factor * len(values)
    if max_len < 2:
        raise GradedPIError(f"Good sequence search needs L >= 2, got {max_len}")
    descriptor = GroupDescriptor(1)
    grading = build_grading(GradingTuple.of(descriptor, *values))
    violation = good_sequence_violation(grading, max_len)
    return GoodSequenceVerdict(
        values,
        max_len,
        violation is None,
        None if violation is None else tuple(x.coords[0] for x in violation),
    )
