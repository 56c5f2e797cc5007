from collections.abc import Callable
from typing import Any, TypeAlias

from cookit import TypeDecoCollector
from pydantic import BaseModel, ConfigDict, Field

from ..algebra.grading import ElementaryGrading, GradingTuple
from ..algebra.monomial import (
    DegreeWord,
    IdentityReport,
    NonIdentityChain,
    TrivialInterval,
)
from ..consts import WitnessKindType
from .classification import ClassificationResult
from .enumeration import AlmostNondegVerdict, GoodSequenceVerdict, MinimalIdentitySet

ElementJSON: TypeAlias = int | list[int]
WordJSON: TypeAlias = list[ElementJSON]

WitnessDumper = Callable[[Any], tuple[WitnessKindType, dict[str, Any]]]
witness_dumper = TypeDecoCollector[Any, WitnessDumper]()


@witness_dumper(NonIdentityChain)
def _(w: NonIdentityChain):
    return "chain", {"indices": list(w.indices)}


@witness_dumper(TrivialInterval)
def _(w: TrivialInterval):
    return "interval", {"start": w.start, "end": w.end, "total": w.total.to_json()}


def dump_witness(w: object | None) -> tuple[WitnessKindType, dict[str, Any] | None]:
    if w is None:
        return "none", None
    dumper = witness_dumper.get_from_type_or_instance(w, None)
    if dumper is None:
        raise TypeError(f"No JSON form for witness {w!r}")
    return dumper(w)


def word_json(word: DegreeWord | None) -> WordJSON | None:
    return None if word is None else word.to_json()


class GradingModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    group: str
    tuple_: WordJSON = Field(alias="tuple")

    @classmethod
    def of(cls, value: GradingTuple | ElementaryGrading) -> "GradingModel":
        tuple_ = value.tuple if isinstance(value, ElementaryGrading) else value
        return cls(group=str(tuple_.descriptor), tuple_=tuple_.to_json())


class CheckReport(BaseModel):
    grading: GradingModel
    word: WordJSON
    identity: bool
    trivial: bool
    verdict: str
    witness_kind: WitnessKindType
    witness: dict[str, Any] | None

    @classmethod
    def of(cls, grading: ElementaryGrading, report: IdentityReport) -> "CheckReport":
        kind, witness = dump_witness(report.witness)
        return cls(
            grading=GradingModel.of(grading),
            word=report.word.to_json(),
            identity=report.is_identity,
            trivial=report.is_trivial,
            verdict=report.verdict,
            witness_kind=kind,
            witness=witness,
        )


class EnumerateReport(BaseModel):
    grading: GradingModel
    reduced: GradingModel
    max_len: int
    minimal_identities: list[WordJSON]
    almost_nondegenerate: bool
    witness: WordJSON | None

    @classmethod
    def of(
        cls,
        grading: ElementaryGrading,
        found: MinimalIdentitySet,
        verdict: AlmostNondegVerdict,
    ) -> "EnumerateReport":
        return cls(
            grading=GradingModel.of(grading),
            reduced=GradingModel.of(found.grading),
            max_len=found.max_len,
            minimal_identities=[w.to_json() for w in found],
            almost_nondegenerate=verdict.value,
            witness=word_json(verdict.witness),
        )


class FamilyEntry(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    tuple_: list[int] = Field(alias="tuple")
    a: int | None = None
    b: int | None = None


class ClassifyReport(BaseModel):
    n: int
    bound: int
    prune: bool
    survivors: list[list[int]]
    families: dict[str, list[FamilyEntry]]
    unmatched: list[list[int]]
    pruned: int
    examined: int

    @classmethod
    def of(cls, result: ClassificationResult, prune: bool) -> "ClassifyReport":
        families: dict[str, list[FamilyEntry]] = {}
        for t, m in zip(result.survivors, result.matches):
            families.setdefault(m.kind, []).append(
                FamilyEntry(tuple_=list(t), a=m.a, b=m.b),
            )
        return cls(
            n=result.n,
            bound=result.bound,
            prune=prune,
            survivors=[list(t) for t in result.survivors],
            families=families,
            unmatched=[list(t) for t in result.unmatched],
            pruned=result.pruned,
            examined=result.examined,
        )


class GoodSequenceReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    tuple_: list[int] = Field(alias="tuple")
    max_len: int
    good_up_to_L: bool  # noqa: N815
    violation: list[int] | None

    @classmethod
    def of(cls, verdict: GoodSequenceVerdict) -> "GoodSequenceReport":
        return cls(
            tuple_=list(verdict.values),
            max_len=verdict.max_len,
            good_up_to_L=verdict.good_up_to_L,
            violation=None if verdict.violation is None else list(verdict.violation),
        )


class ReduceReport(BaseModel):
    grading: GradingModel
    reduced: GradingModel
    canonical_form: WordJSON
    reduced_canonical_form: WordJSON


class DifferenceProfileModel(BaseModel):
    steps: WordJSON
    palindromic: bool


class CoarseningModel(BaseModel):
    one_dimensional: list[ElementJSON]
    length_two_identities: list[WordJSON]
    hypotheses_hold: bool
    model_coarsening: bool | None


class ComparisonModel(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    tuple_: WordJSON = Field(alias="tuple")
    isomorphic: bool
    weakly_isomorphic: bool | None


class ChecksModel(BaseModel):
    passed: list[str] = Field(default_factory=list)
    failed: list[str] = Field(default_factory=list)
    skipped: list[str] = Field(default_factory=list)


class AnalyzeReport(BaseModel):
    grading: GradingModel
    n: int
    distinct_entries: bool
    support: list[ElementJSON]
    components: dict[str, list[list[int]]]
    dimensions: dict[str, int]
    canonical_form: WordJSON
    difference_profile: DifferenceProfileModel | None
    equiv_canonical_Z: bool | None  # noqa: N815
    strong: bool
    almost_nondegenerate: bool
    almost_witness: WordJSON | None
    nondegenerate: bool
    nondegenerate_reason: str
    nondegenerate_witness: WordJSON | None
    coarsening: CoarseningModel
    checks: ChecksModel
    comparison: ComparisonModel | None = None
