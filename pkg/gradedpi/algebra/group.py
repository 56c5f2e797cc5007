import itertools
import math
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property, reduce

from ..consts import (
    GROUP_FACTOR_REGEX,
    GROUP_FACTOR_SEP_REGEX,
    INT_REGEX,
    PAREN_ELEMENT_REGEX,
)
from ..errors import DescriptorMismatchError, GradedPIError, GroupSyntaxError, TorsionError


@dataclass(frozen=True)
class GroupDescriptor:
    """Z^free_rank x Z_m1 x ... x Z_ms, elements stored free part first."""

    free_rank: int = 0
    moduli: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise GradedPIError(f"Free rank must be non-negative, got {self.free_rank}")
        for m in self.moduli:
            if m < 2:
                raise GradedPIError(f"Modulus must be at least 2, got {m}")

    @property
    def rank(self) -> int:
        return self.free_rank + len(self.moduli)

    def torsion_free(self) -> bool:
        return not self.moduli

    def has_order_2_element(self) -> bool:
        return any(m % 2 == 0 for m in self.moduli)

    @property
    def finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | None:
        if not self.finite:
            return None
        return math.prod(self.moduli)

    def reduce(self, coords: Iterable[int]) -> tuple[int, ...]:
        coords = tuple(coords)
        if len(coords) != self.rank:
            raise DescriptorMismatchError(
                f"Expected {self.rank} coordinate(s) for {self}, got {len(coords)}",
            )
        free = coords[: self.free_rank]
        torsion = tuple(t % m for t, m in zip(coords[self.free_rank :], self.moduli))
        return (*free, *torsion)

    def element(self, *coords: int) -> "GroupElement":
        return GroupElement(self, self.reduce(coords))

    @cached_property
    def zero(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.rank)

    def elements(self) -> Iterator["GroupElement"]:
        if not self.finite:
            raise GradedPIError(f"Cannot list the elements of infinite group {self}")
        for coords in itertools.product(*(range(m) for m in self.moduli)):
            yield GroupElement(self, coords)

    def automorphism_multipliers(self) -> tuple[int, ...]:
        """Multipliers u with x -> u*x an automorphism, for rank one groups only"""
        if self.free_rank == 1 and not self.moduli:
            return (1, -1)
        if self.free_rank == 0 and len(self.moduli) == 1:
            (m,) = self.moduli
            return tuple(u for u in range(1, m) if math.gcd(u, m) == 1)
        raise GradedPIError(
            f"Automorphisms are only enumerated for Z and Z_m, not for {self}",
        )

    def parse_element(self, text: str) -> "GroupElement":
        text = text.strip()
        if m := PAREN_ELEMENT_REGEX.fullmatch(text):
            parts = [x.strip() for x in m["body"].split(",")] if m["body"] else []
        else:
            parts = [text]
        if not all(INT_REGEX.fullmatch(x) for x in parts):
            raise GroupSyntaxError("Invalid group element", text)
        if len(parts) != self.rank:
            raise GroupSyntaxError(
                f"Group {self} expects {self.rank} coordinate(s) per element",
                text,
            )
        return self.element(*(int(x) for x in parts))

    def parse_elements(self, text: str) -> tuple["GroupElement", ...]:
        text = text.strip()
        if not text:
            raise GroupSyntaxError("Empty element list", text)
        if "(" not in text:
            return tuple(self.parse_element(x) for x in text.split(","))
        rest = PAREN_ELEMENT_REGEX.sub("", text)
        if rest.replace(",", "").strip():
            raise GroupSyntaxError("Unexpected text between elements", rest.strip())
        return tuple(
            self.parse_element(m.group(0)) for m in PAREN_ELEMENT_REGEX.finditer(text)
        )

    def element_from_json(self, value: int | Sequence[int]) -> "GroupElement":
        if isinstance(value, int):
            return self.element(value)
        return self.element(*value)

    def __str__(self) -> str:
        if not self.rank:
            return "0"
        factors: list[str] = []
        if self.free_rank == 1:
            factors.append("Z")
        elif self.free_rank > 1:
            factors.append(f"Z^{self.free_rank}")
        factors.extend(f"Z_{m}" for m in self.moduli)
        return " x ".join(factors)


@dataclass(frozen=True)
class GroupElement:
    descriptor: GroupDescriptor
    coords: tuple[int, ...]

    @property
    def free_part(self) -> tuple[int, ...]:
        return self.coords[: self.descriptor.free_rank]

    @property
    def torsion_part(self) -> tuple[int, ...]:
        return self.coords[self.descriptor.free_rank :]

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: "GroupElement") -> "GroupElement":
        return add(self, other)

    def __neg__(self) -> "GroupElement":
        return neg(self)

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return add(self, neg(other))

    def __mul__(self, k: int) -> "GroupElement":
        return scale(self, k)

    __rmul__ = __mul__

    def to_json(self) -> int | list[int]:
        if self.descriptor.rank == 1:
            return self.coords[0]
        return list(self.coords)

    def __str__(self) -> str:
        if self.descriptor.rank == 1:
            return str(self.coords[0])
        return f"({','.join(str(x) for x in self.coords)})"


def parse_group(spec: str) -> GroupDescriptor:
    spec = spec.strip()
    if not spec:
        raise GroupSyntaxError("Empty group spec", spec)

    free_rank = 0
    moduli: list[int] = []
    for token in GROUP_FACTOR_SEP_REGEX.split(spec):
        if not (m := GROUP_FACTOR_REGEX.fullmatch(token)):
            raise GroupSyntaxError("Invalid group factor", token)
        if (rank := m["rank"]) is not None:
            if int(rank) < 1:
                raise GroupSyntaxError("Free rank exponent must be at least 1", token)
            free_rank += int(rank)
        elif (modulus := m["modulus"]) is not None:
            if int(modulus) < 2:
                raise GroupSyntaxError("Cyclic factor order must be at least 2", token)
            moduli.append(int(modulus))
        else:
            free_rank += 1

    # free coordinates always come first, moduli keep their written order
    return GroupDescriptor(free_rank, tuple(moduli))


def ensure_same_descriptor(*elements: GroupElement) -> GroupDescriptor:
    descriptor = elements[0].descriptor
    for x in elements[1:]:
        if x.descriptor != descriptor:
            raise DescriptorMismatchError(
                f"Elements of different groups: {descriptor} and {x.descriptor}",
            )
    return descriptor


def add(a: GroupElement, b: GroupElement) -> GroupElement:
    d = ensure_same_descriptor(a, b)
    return GroupElement(d, d.reduce(x + y for x, y in zip(a.coords, b.coords)))


def neg(a: GroupElement) -> GroupElement:
    return GroupElement(a.descriptor, a.descriptor.reduce(-x for x in a.coords))


def scale(a: GroupElement, k: int) -> GroupElement:
    return GroupElement(a.descriptor, a.descriptor.reduce(k * x for x in a.coords))


def word_sum(word: Iterable[GroupElement]) -> GroupElement:
    letters = tuple(word)
    if not letters:
        raise GradedPIError("Cannot sum an empty word")
    ensure_same_descriptor(*letters)
    return reduce(add, letters)


def lex_less(a: GroupElement, b: GroupElement) -> bool:
    d = ensure_same_descriptor(a, b)
    if not d.torsion_free():
        raise TorsionError(f"Group {d} has torsion and carries no linear order")
    return a.free_part < b.free_part


def lex_sorted(elements: Iterable[GroupElement]) -> list[GroupElement]:
    return sorted(elements, key=lambda x: x.coords)


def format_elements(elements: Iterable[GroupElement]) -> str:
    return ",".join(str(x) for x in elements)
