import pytest

from gradedpi.algebra.monomial import classify_word
from gradedpi.config import ConfigModel, config, use_config
from gradedpi.handlers.analyze import structural_checks
from gradedpi.search.enumeration import enumerate_minimal_identities
from gradedpi.search.models import dump_witness
from gradedpi.utils import dump_report, fan_out
from gradedpi.utils.operation import OpInfo, OpIt, format_op

from helpers import Z, grading, word, zmod


def test_format_op():
    assert format_op(OpInfo[str]()) == "Nothing was checked"
    op = OpInfo[str]()
    assert op.check("support contains 0", True)
    assert not op.check("M_0 is the identity pattern", False, "mismatch")
    op.skipped.append(OpIt("canonical Z criteria agree", exc=ValueError("nope")))
    assert format_op(op).splitlines() == [
        "Passed (1):",
        "  - support contains 0",
        "Skipped (1):",
        "  - canonical Z criteria agree: ValueError: nope",
        "Failed (1):",
        "  - M_0 is the identity pattern: mismatch",
    ]


@pytest.mark.parametrize(
    ("d", "values"),
    [(Z, (0, 1, 2)), (Z, (0, 2, 3, 5)), (Z, (0, 0, 1)), (zmod(5), (0, 1, 2)), (zmod(4), (0, 1, 3, 3))],
)
def test_structural_checks_pass(d, values):
    op = structural_checks(grading(d, *values))
    assert not op.failed, format_op(op)
    assert op.succeed


def test_witness_json():
    g = grading(Z, 0, 1, 2)
    assert dump_witness(classify_word(g, word(Z, 1, 1)).witness) == ("chain", {"indices": [1, 2, 3]})
    assert dump_witness(classify_word(g, word(Z, 2, 1)).witness) == (
        "interval",
        {"start": 1, "end": 2, "total": 3},
    )
    assert dump_witness(None) == ("none", None)


def test_dump_report_sorts_keys():
    found = enumerate_minimal_identities(grading(Z, 0, 2, 3, 5), 2)
    assert dump_report({"b": [1], "a": found.max_len}) == '{"a":2,"b":[1]}'


def test_use_config_restores():
    assert config.workers == 1
    with use_config(ConfigModel.model_validate({"gradedpi_workers": 3})) as c:
        assert c is config
        assert config.workers == 3
    assert config.workers == 1


def test_config_log_level_is_uppercased():
    assert ConfigModel.model_validate({"gradedpi_log_level": "debug"}).log_level == "DEBUG"


def _square(x: int) -> int:
    return x * x


def test_fan_out_keeps_order():
    assert fan_out(_square, range(6), workers=1) == [0, 1, 4, 9, 16, 25]
    assert fan_out(_square, range(6), workers=2) == [0, 1, 4, 9, 16, 25]


def test_use_config_reapplies_log_level(monkeypatch: pytest.MonkeyPatch):
    from gradedpi import config as config_module

    levels: list[str] = []
    monkeypatch.setattr(
        config_module,
        "setup_logging",
        lambda level=None: levels.append(level or config.log_level),
    )
    with use_config(config.model_copy(update={"log_level": "DEBUG"})):
        assert levels == ["DEBUG"]
    assert levels == ["DEBUG", "WARNING"]

    with use_config(config.model_copy(update={"workers": 2})):
        pass
    assert levels == ["DEBUG", "WARNING"]
