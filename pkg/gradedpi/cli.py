import sys
from collections.abc import Sequence
from typing import NamedTuple

from loguru import logger

from .config import config, load_config, setup_logging, use_config
from .errors import CriteriaDisagreementError, GradedPIError
from .handlers import load_handlers
from .handlers.shared import alc, handlers, parse_command
from .utils import dump_report, format_error

load_handlers()


class DispatchResult(NamedTuple):
    code: int
    text: str
    is_error: bool = False


def run(argv: Sequence[str]) -> DispatchResult:
    if not argv or argv[0] in ("-h", "--help"):
        return DispatchResult(0, alc.get_help())

    try:
        cmd = parse_command(argv)
        new_config = load_config(cmd.config) if cmd.config else config
    except GradedPIError as e:
        return DispatchResult(2, format_error(e), True)

    with use_config(new_config.model_copy()):
        try:
            result = handlers[cmd.subcommand](cmd)
        except CriteriaDisagreementError as e:
            logger.opt(exception=e).error("Criteria disagreement, this is a bug")
            return DispatchResult(1, format_error(e), True)
        except GradedPIError as e:
            return DispatchResult(2, format_error(e), True)
        text = dump_report(result.report, pretty=cmd.pretty)

    if result.failed:
        logger.warning(f"`{cmd.subcommand}` reported a failed check")
    return DispatchResult(1 if cmd.strict and result.failed else 0, text)


def dispatch(argv: Sequence[str]) -> tuple[int, str]:
    code, text, _ = run(argv)
    return code, text


def main():
    setup_logging()
    code, text, is_error = run(sys.argv[1:])
    print(text, file=sys.stderr if is_error else sys.stdout)
    sys.exit(code)
