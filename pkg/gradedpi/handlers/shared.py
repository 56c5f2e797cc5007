from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Any, NamedTuple

from arclet.alconna import Alconna, Args, Arparma, CommandMeta, Option, store_true
from cookit.pyd import model_validator, type_validate_python
from loguru import logger
from pydantic import BaseModel, Field, ValidationError

from ..algebra.grading import ElementaryGrading, GradingTuple, build_grading
from ..algebra.group import GroupDescriptor, parse_group
from ..algebra.monomial import DegreeWord
from ..consts import DESCRIPTION, NAME, SubcommandType
from ..draw import write_grading_dot
from ..errors import GradedPIError

alc = Alconna(
    NAME,
    meta=CommandMeta(
        description=DESCRIPTION,
        usage=f"{NAME} <subcommand> [--group SPEC] [--tuple CSV] [options]",
        example=f"{NAME} check --group Z_5 --tuple 0,1,2 --word 2,2",
    ),
)

WORD_REQUIRED: set[SubcommandType] = {"check"}
TUPLE_REQUIRED: set[SubcommandType] = {"analyze", "check", "enumerate", "goodseq", "reduce"}
N_REQUIRED: set[SubcommandType] = {"classify"}


def tuple_options() -> list[Option]:
    return [
        Option(
            "--group",
            Args["group", str],
            help_text="Grading group, e.g. Z, Z_5, Z^2xZ_3 (no spaces), default Z",
        ),
        Option(
            "--tuple",
            Args["entries", str],
            help_text="Grading tuple, e.g. 0,2,3,5 or (0,0),(1,2)",
        ),
        Option("--dot", Args["dot", str], help_text="Also write the grading digraph as DOT"),
    ]


def common_options() -> list[Option]:
    return [
        Option("--strict", action=store_true, help_text="Exit 1 when a check fails"),
        Option("--pretty", action=store_true, help_text="Indent the JSON output"),
        Option("--config", Args["config", str], help_text="JSON config file"),
    ]


class Command(BaseModel):
    subcommand: SubcommandType
    group: str = "Z"
    entries: str | None = None
    word: str | None = None
    compare: str | None = None
    max_len: int | None = Field(None, ge=1)
    bound: int | None = Field(None, ge=1)
    L: int | None = Field(None, ge=1)
    n: int | None = Field(None, ge=1)
    strict: bool = False
    pretty: bool = False
    dot: Path | None = None
    config: Path | None = None

    @model_validator(mode="after")
    def _validate_required(cls, values: dict[str, Any]) -> dict[str, Any]:  # noqa: N805
        sub = values["subcommand"]
        if (values.get("word") is not None) != (sub in WORD_REQUIRED):
            raise ValueError("--word is required by `check` and only accepted there")
        if sub in TUPLE_REQUIRED and values.get("entries") is None:
            raise ValueError(f"`{sub}` requires --tuple")
        if sub in N_REQUIRED and values.get("n") is None:
            raise ValueError(f"`{sub}` requires --n")
        return values

    @property
    def descriptor(self) -> GroupDescriptor:
        return parse_group(self.group)

    def grading_tuple(self) -> GradingTuple:
        if self.entries is None:
            raise GradedPIError(f"`{self.subcommand}` needs a tuple")
        return GradingTuple.parse(self.descriptor, self.entries)

    def grading(self) -> ElementaryGrading:
        return build_grading(self.grading_tuple())

    def compare_tuple(self) -> GradingTuple | None:
        if self.compare is None:
            return None
        return GradingTuple.parse(self.descriptor, self.compare)

    def degree_word(self) -> DegreeWord:
        if self.word is None:
            raise GradedPIError(f"`{self.subcommand}` needs a word")
        return DegreeWord.parse(self.descriptor, self.word)


class HandlerResult(NamedTuple):
    report: BaseModel
    failed: bool = False


Handler = Callable[[Command], HandlerResult]
handlers: dict[SubcommandType, Handler] = {}


def handler(name: SubcommandType) -> Callable[[Handler], Handler]:
    def deco(func: Handler) -> Handler:
        handlers[name] = func
        return func

    return deco


def parse_command(argv: Sequence[str]) -> Command:
    arp: Arparma = alc.parse([NAME, *argv])
    if not arp.matched:
        raise GradedPIError(f"Invalid arguments: {arp.error_info}")
    if not arp.subcommands:
        raise GradedPIError(f"Expected one of: {', '.join(sorted(handlers))}")

    sub = next(iter(arp.subcommands))
    options = arp.subcommands[sub].options
    data: dict[str, Any] = {
        k: v for k, v in arp.all_matched_args.items() if v is not None
    }
    data.update(
        subcommand=sub,
        strict="strict" in options,
        pretty="pretty" in options,
    )
    logger.debug(f"Parsed command: {data}")
    try:
        return type_validate_python(Command, data)
    except ValidationError as e:
        raise GradedPIError(f"Invalid arguments: {e}") from e


def maybe_write_dot(cmd: Command, grading: ElementaryGrading):
    if cmd.dot is None:
        return
    write_grading_dot(grading, cmd.dot)
    logger.info(f"Wrote grading digraph to {cmd.dot}")
