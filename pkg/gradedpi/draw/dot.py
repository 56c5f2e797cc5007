from collections.abc import Iterator
from pathlib import Path

from ..algebra.grading import ElementaryGrading


def gv_quote(s: str) -> str:
    return '"{}"'.format(s.replace('"', r"\""))


def grading_dot(grading: ElementaryGrading, name: str = "grading") -> Iterator[str]:
    """
    Labeled digraph of the grading as DOT lines: vertex v_p for each entry,
    arrow v_p -> v_q labeled by the degree g_q - g_p of e_pq.

    Arrows of degree 0 are left out.
    """
    yield f"digraph {gv_quote(name)} {{\n"
    yield "  rankdir=LR;\n"
    for p, g in enumerate(grading.entries, 1):
        yield f"  v{p} [label={gv_quote(f'v{p}: {g}')}];\n"
    for g in grading.nonzero_support:
        for p, q in grading.component(g):
            yield f"  v{p} -> v{q} [label={gv_quote(str(g))}];\n"
    yield "}\n"


def write_grading_dot(grading: ElementaryGrading, path: Path, name: str = "grading"):
    with path.open("w", encoding="u8") as f:
        f.writelines(grading_dot(grading, name))
