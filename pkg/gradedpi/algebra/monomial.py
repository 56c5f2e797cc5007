from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from itertools import accumulate

from ..errors import DescriptorMismatchError, GradedPIError, NotAnIdentityError
from .grading import ElementaryGrading
from .group import GroupDescriptor, GroupElement, format_elements, word_sum
from .pattern import PatternMatrix


@dataclass(frozen=True)
class DegreeWord:
    """Degree profile (h_1, ..., h_k) of a multilinear monomial x_1 ... x_k"""

    descriptor: GroupDescriptor
    letters: tuple[GroupElement, ...]

    def __post_init__(self):
        if not self.letters:
            raise GradedPIError("A degree word needs at least one letter")
        for x in self.letters:
            if x.descriptor != self.descriptor:
                raise DescriptorMismatchError(
                    f"Letter {x} belongs to {x.descriptor}, not {self.descriptor}",
                )

    @classmethod
    def parse(cls, descriptor: GroupDescriptor, text: str) -> "DegreeWord":
        return cls(descriptor, descriptor.parse_elements(text))

    @classmethod
    def of(cls, descriptor: GroupDescriptor, *values: int | Sequence[int]) -> "DegreeWord":
        return cls(descriptor, tuple(descriptor.element_from_json(v) for v in values))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[GroupElement]:
        return iter(self.letters)

    def __getitem__(self, i: int) -> GroupElement:
        return self.letters[i]

    @property
    def total(self) -> GroupElement:
        return word_sum(self.letters)

    @property
    def sort_key(self) -> tuple[int, tuple[tuple[int, ...], ...]]:
        return len(self.letters), tuple(x.coords for x in self.letters)

    def drop_first(self) -> "DegreeWord":
        return DegreeWord(self.descriptor, self.letters[1:])

    def drop_last(self) -> "DegreeWord":
        return DegreeWord(self.descriptor, self.letters[:-1])

    def to_json(self) -> list[int | list[int]]:
        return [x.to_json() for x in self.letters]

    def __str__(self) -> str:
        return format_elements(self.letters)


@dataclass(frozen=True)
class NonIdentityChain:
    """Indices i_0, ..., i_k with e_(i_0 i_1) ... e_(i_(k-1) i_k) != 0, 1-based"""

    indices: tuple[int, ...]


@dataclass(frozen=True)
class TrivialInterval:
    """Letters start..end (1-based, inclusive) sum to a degree outside the support"""

    start: int
    end: int
    total: GroupElement


Witness = NonIdentityChain | TrivialInterval


@dataclass(frozen=True)
class IdentityReport:
    word: DegreeWord
    is_identity: bool
    is_trivial: bool
    witness: Witness | None = None

    @property
    def verdict(self) -> str:
        if self.is_trivial:
            return "trivial identity"
        if self.is_identity:
            return "non-trivial identity"
        return "not an identity"


@dataclass(frozen=True)
class ConsequenceWitness:
    """
    Letters p..q of the word split at `boundaries` (b_0 = p - 1 < ... < b_l = q)
    into blocks whose sums spell `generator`.
    """

    p: int
    q: int
    boundaries: tuple[int, ...]
    generator: DegreeWord


def _ensure_word(grading: ElementaryGrading, word: DegreeWord):
    if word.descriptor != grading.descriptor:
        raise DescriptorMismatchError(
            f"Word over {word.descriptor} used with a grading by {grading.descriptor}",
        )


def eval_word(grading: ElementaryGrading, word: DegreeWord) -> PatternMatrix:
    _ensure_word(grading, word)
    zero = PatternMatrix.zero(grading.n)
    it = iter(word)
    product = grading.patterns.get(next(it), zero)
    for h in it:
        if not product:
            break
        product = product @ grading.patterns.get(h, zero)
    return product


def is_identity(grading: ElementaryGrading, word: DegreeWord) -> bool:
    return not eval_word(grading, word)


def find_trivial_interval(
    grading: ElementaryGrading,
    word: DegreeWord,
) -> TrivialInterval | None:
    """Shortest contiguous subword with sum outside the support, leftmost first"""
    _ensure_word(grading, word)
    prefix = [grading.descriptor.zero, *accumulate(word.letters)]
    k = len(word)
    for length in range(1, k + 1):
        for start in range(1, k - length + 2):
            end = start + length - 1
            total = prefix[end] - prefix[start - 1]
            if total not in grading.support:
                return TrivialInterval(start, end, total)
    return None


def _chain(grading: ElementaryGrading, word: DegreeWord) -> NonIdentityChain:
    n = grading.n
    zero = PatternMatrix.zero(n)
    mats = [grading.patterns.get(h, zero) for h in word]

    # suffixes[t] = M_(h_(t+1)) ... M_(h_k), suffixes[k] = identity
    suffixes = [PatternMatrix.identity(n)]
    for m in reversed(mats):
        suffixes.append(m @ suffixes[-1])
    suffixes.reverse()

    row = next(p for p in range(n) if suffixes[0].rows[p])
    indices = [row + 1]
    for t, m in enumerate(mats):
        rest = suffixes[t + 1]
        cols = m.rows[row]
        row = next(q for q in range(n) if cols >> q & 1 and rest.rows[q])
        indices.append(row + 1)
    return NonIdentityChain(tuple(indices))


def classify_word(grading: ElementaryGrading, word: DegreeWord) -> IdentityReport:
    identity = is_identity(grading, word)
    if interval := find_trivial_interval(grading, word):
        assert identity, f"trivial word {word} evaluated to a nonzero product"
        return IdentityReport(word, True, True, interval)
    if not identity:
        return IdentityReport(word, False, False, _chain(grading, word))
    return IdentityReport(word, True, False, None)


@dataclass
class GeneratorTrie:
    """Prefix tree over generator words, letters are group elements"""

    children: list[dict[GroupElement, int]] = field(default_factory=lambda: [{}])
    terminal: list[DegreeWord | None] = field(default_factory=lambda: [None])

    @classmethod
    def build(cls, generators: Iterable[DegreeWord]) -> "GeneratorTrie":
        trie = cls()
        for g in generators:
            trie.add(g)
        return trie

    def add(self, word: DegreeWord):
        node = 0
        for h in word:
            if (nxt := self.children[node].get(h)) is None:
                nxt = len(self.children)
                self.children[node][h] = nxt
                self.children.append({})
                self.terminal.append(None)
            node = nxt
        if self.terminal[node] is None:
            self.terminal[node] = word

    def __len__(self) -> int:
        return sum(1 for x in self.terminal if x is not None)


def match_consequence(word: DegreeWord, trie: GeneratorTrie) -> ConsequenceWitness | None:
    """
    Search block splittings of contiguous subwords against the trie.

    States are (next letter position, trie node); a state that failed once
    fails for every start position.
    """
    letters = word.letters
    k = len(letters)
    prefix = [word.descriptor.zero, *accumulate(letters)]
    dead: set[tuple[int, int]] = set()

    def walk(pos: int, node: int, bounds: list[int]) -> list[int] | None:
        if (pos, node) in dead:
            return None
        edges = trie.children[node]
        for end in range(pos + 1, k + 1):
            nxt = edges.get(prefix[end] - prefix[pos])
            if nxt is None:
                continue
            bounds.append(end)
            if trie.terminal[nxt] is not None:
                return bounds
            if found := walk(end, nxt, bounds):
                return found
            bounds.pop()
        dead.add((pos, node))
        return None

    for start in range(k):
        if bounds := walk(start, 0, [start]):
            end_node = 0
            for a, b in zip(bounds, bounds[1:]):
                end_node = trie.children[end_node][prefix[b] - prefix[a]]
            generator = trie.terminal[end_node]
            assert generator is not None
            return ConsequenceWitness(start + 1, bounds[-1], tuple(bounds), generator)
    return None


def is_consequence(
    grading: ElementaryGrading,
    word: DegreeWord,
    generators: Iterable[DegreeWord],
    allow_trivial: bool = False,
) -> ConsequenceWitness | TrivialInterval | None:
    generators = list(generators)
    if not is_identity(grading, word):
        raise NotAnIdentityError(f"Word ({word}) is not an identity")
    for g in generators:
        if not is_identity(grading, g):
            raise NotAnIdentityError(f"Generator ({g}) is not an identity")

    if allow_trivial and (interval := find_trivial_interval(grading, word)):
        return interval
    return match_consequence(word, GeneratorTrie.build(generators))


def nonzero_rows(m: PatternMatrix) -> int:
    return m.nonzero_rows()
