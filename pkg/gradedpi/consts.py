import re
from typing import Literal, TypeAlias

NAME = "gradedpi"
DESCRIPTION = "Graded monomial identities of elementary gradings on matrix algebras"

SubcommandType: TypeAlias = Literal[
    "analyze", "check", "enumerate", "classify", "goodseq", "reduce",
]  # fmt: skip
WitnessKindType: TypeAlias = Literal["chain", "interval", "none"]
FamilyKindType: TypeAlias = Literal["canonical-Z", "family-n4", "family-n5", "unmatched"]

GROUP_FACTOR_SEP_REGEX = re.compile(r"\s*x\s*")
GROUP_FACTOR_REGEX = re.compile(
    r"Z(?:\^(?P<rank>[+-]?\d+)|_(?P<modulus>[+-]?\d+))?",
)
INT_REGEX = re.compile(r"[+-]?\d+")
PAREN_ELEMENT_REGEX = re.compile(r"\(\s*(?P<body>[^()]*?)\s*\)")

CLASSIFY_MIN_N = 2
CLASSIFY_MAX_N = 5
FAMILY_SIZES = (4, 5)
