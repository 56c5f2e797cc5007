from arclet.alconna import Args, Option

from ..algebra.grading import build_grading
from ..algebra.group import GroupDescriptor
from ..errors import GradedPIError
from ..search.enumeration import is_good_sequence
from ..search.models import GoodSequenceReport
from .shared import (
    Command,
    HandlerResult,
    alc,
    common_options,
    handler,
    maybe_write_dot,
    tuple_options,
)

alc.subcommand(
    "goodseq",
    *tuple_options(),
    Option("--L", Args["L", int], help_text="Longest word searched, default 2n"),
    *common_options(),
    help_text="Bounded search for a violation of the good sequence property",
)


@handler("goodseq")
def _(cmd: Command) -> HandlerResult:
    tuple_ = cmd.grading_tuple()
    if tuple_.descriptor != GroupDescriptor(1):
        raise GradedPIError(f"Good sequences are integer tuples, got group {tuple_.descriptor}")
    maybe_write_dot(cmd, build_grading(tuple_))
    verdict = is_good_sequence([x.coords[0] for x in tuple_.entries], cmd.L)
    return HandlerResult(GoodSequenceReport.of(verdict))
