from .consts import DESCRIPTION as DESCRIPTION, NAME as NAME

__version__ = "0.1.0"
