import json
from collections.abc import Callable, Iterable
from concurrent.futures import ProcessPoolExecutor
from typing import TypeVar

from cookit.pyd import type_dump_python

from ..config import config

T = TypeVar("T")
R = TypeVar("R")


def format_error(e: BaseException):
    return f"{type(e).__name__}: {e}"


def dump_report(data: object, pretty: bool = False) -> str:
    """Byte-stable JSON, keys sorted, compact unless `pretty`"""
    return json.dumps(
        type_dump_python(data, by_alias=True),
        indent=config.json_indent if pretty else None,
        separators=None if pretty else (",", ":"),
        ensure_ascii=False,
        sort_keys=True,
    )


def fan_out(
    func: Callable[[T], R],
    items: Iterable[T],
    workers: int | None = None,
) -> list[R]:
    """Map in worker processes, results in input order. One worker maps inline."""
    items = list(items)
    workers = config.workers if workers is None else workers
    if workers <= 1 or len(items) <= 1:
        return [func(x) for x in items]
    with ProcessPoolExecutor(max_workers=min(workers, len(items))) as pool:
        return list(pool.map(func, items))
