from ..algebra.grading import canonical_form, reduce_distinct
from ..search.models import GradingModel, ReduceReport
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
    "reduce",
    *tuple_options(),
    *common_options(),
    help_text="Drop repeated entries, print canonical forms",
)


@handler("reduce")
def _(cmd: Command) -> HandlerResult:
    grading = cmd.grading()
    reduced = reduce_distinct(grading)
    maybe_write_dot(cmd, reduced)
    return HandlerResult(
        ReduceReport(
            grading=GradingModel.of(grading),
            reduced=GradingModel.of(reduced),
            canonical_form=canonical_form(grading.tuple).to_json(),
            reduced_canonical_form=canonical_form(reduced.tuple).to_json(),
        ),
    )
