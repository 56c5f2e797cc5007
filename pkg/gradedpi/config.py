import sys
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import Literal

from cookit.pyd import field_validator, model_with_alias_generator, type_validate_json
from loguru import logger
from pydantic import BaseModel, Field, ValidationError

from .errors import GradedPIError

LogLevelType = Literal["TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR"]


@model_with_alias_generator(lambda x: f"gradedpi_{x}")
class ConfigModel(BaseModel):
    workers: int = Field(1, ge=1)

    classify_prune: bool = True
    check_coherence: bool = True

    goodseq_length_factor: int = Field(2, ge=1)
    classify_bound_offset: int = Field(2, ge=0)

    json_indent: int = Field(2, ge=0)
    log_level: LogLevelType = "WARNING"

    @field_validator("log_level", mode="before")
    def _validate_upper_log_level(cls, v: str) -> str:  # noqa: N805
        return str(v).upper()


config: ConfigModel = ConfigModel()


def load_config(path: Path) -> ConfigModel:
    try:
        text = path.read_text("u8")
    except OSError as e:
        raise GradedPIError(f"Cannot read config file {path}: {e}") from e
    try:
        return type_validate_json(ConfigModel, text)
    except ValidationError as e:
        raise GradedPIError(f"Invalid config file {path}: {e}") from e


@contextmanager
def use_config(new: ConfigModel) -> Iterator[ConfigModel]:
    """Swap field values of the shared `config` in place, restore on exit"""
    old = config.model_copy()
    relog = new.log_level != old.log_level
    for k in ConfigModel.model_fields:
        setattr(config, k, getattr(new, k))
    if relog:
        setup_logging()
    try:
        yield config
    finally:
        for k in ConfigModel.model_fields:
            setattr(config, k, getattr(old, k))
        if relog:
            setup_logging()


def setup_logging(level: str | None = None):
    logger.remove()
    logger.add(sys.stderr, level=level or config.log_level)
