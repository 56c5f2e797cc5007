from arclet.alconna import Args, Option

from ..algebra.grading import reduce_distinct
from ..search.enumeration import enumerate_minimal_identities, is_almost_nondegenerate
from ..search.models import EnumerateReport
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
    "enumerate",
    *tuple_options(),
    Option(
        "--max-len",
        Args["max_len", int],
        help_text="Longest word searched, default the reduced size n",
    ),
    *common_options(),
    help_text="List minimal non-trivial monomial identities",
)


@handler("enumerate")
def _(cmd: Command) -> HandlerResult:
    grading = cmd.grading()
    maybe_write_dot(cmd, grading)
    max_len = cmd.max_len or reduce_distinct(grading).n
    found = enumerate_minimal_identities(grading, max_len)
    verdict = is_almost_nondegenerate(grading)
    return HandlerResult(EnumerateReport.of(grading, found, verdict))
