from arclet.alconna import Args, Option

from ..config import config
from ..search.classification import classify_almost_nondeg
from ..search.models import ClassifyReport
from .shared import Command, HandlerResult, alc, common_options, handler

alc.subcommand(
    "classify",
    Option("--n", Args["n", int], help_text="Matrix size, 2 to 5"),
    Option(
        "--bound",
        Args["bound", int],
        help_text="Largest entry searched, default 2n + 2",
    ),
    *common_options(),
    help_text="Classify almost non-degenerate Z-gradings with bounded entries",
)


@handler("classify")
def _(cmd: Command) -> HandlerResult:
    n = cmd.n
    assert n is not None
    bound = cmd.bound or 2 * n + config.classify_bound_offset
    result = classify_almost_nondeg(n, bound)
    return HandlerResult(
        ClassifyReport.of(result, config.classify_prune),
        failed=bool(result.unmatched),
    )
