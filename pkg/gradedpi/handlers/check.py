from arclet.alconna import Args, Option

from ..algebra.monomial import classify_word
from ..search.models import CheckReport
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
    "check",
    *tuple_options(),
    Option("--word", Args["word", str], help_text="Degree word, e.g. 2,2,1"),
    *common_options(),
    help_text="Decide whether a degree word is a (trivial) monomial identity",
)


@handler("check")
def _(cmd: Command) -> HandlerResult:
    grading = cmd.grading()
    maybe_write_dot(cmd, grading)
    report = classify_word(grading, cmd.degree_word())
    return HandlerResult(CheckReport.of(grading, report))
