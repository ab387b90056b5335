"""
Run configuration for the command line.

Environment (read from .env when present):
    RHOREP_THREADS     worker threads for verify-all (default min(4, cpu count))
    RHOREP_LOG_LEVEL   default log level (default WARNING)
"""

import os
from enum import Enum
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, model_validator

load_dotenv()


class Command(Enum):
    DIMS = "dims"
    MATRICES = "matrices"
    TWIST = "twist"
    SPLIT_CHECK = "split-check"
    GENERIC = "generic"
    HECKE = "hecke"
    VERIFY_ALL = "verify-all"


class RepKind(Enum):
    """Representations a braid word can be evaluated on."""
    V = "V"
    W = "W"
    N = "N"
    N20 = "N20"
    N21 = "N21"
    SR = "SR"


class HeckeCheck(Enum):
    MINPOLY = "minpoly"
    ORDER = "order"
    QUOTIENT42 = "quotient42"


class OutputFormat(Enum):
    JSON = "json"
    TABLE = "table"


# Commands that build W_{n,l} or N_{n,l} and so need 0 <= l < r
NEEDS_L_BELOW_R = {Command.MATRICES, Command.TWIST, Command.SPLIT_CHECK}


def default_threads() -> int:
    value = os.getenv("RHOREP_THREADS")
    if value:
        return max(1, int(value))
    return min(4, os.cpu_count() or 1)


def default_log_level() -> str:
    return os.getenv("RHOREP_LOG_LEVEL", "WARNING").upper()


class RunConfig(BaseModel):
    command: Command
    n: int = 3
    l: int = 0
    r: int = 4
    rep: RepKind = RepKind.V
    word: Optional[str] = None
    output: Optional[str] = None
    float_check: bool = False
    max_n: int = 4
    max_r: int = 5
    threads: int = 1
    check: HeckeCheck = HeckeCheck.MINPOLY
    specialize: Optional[int] = None
    output_format: OutputFormat = OutputFormat.JSON

    @model_validator(mode="after")
    def check_ranges(self) -> "RunConfig":
        if self.command is Command.VERIFY_ALL:
            if self.max_n < 2 or self.max_r < 3:
                raise ValueError("verify-all needs --max-n >= 2 and --max-r >= 3")
            if self.threads < 1:
                raise ValueError("--threads must be positive")
            return self
        if self.command is Command.HECKE and self.check is HeckeCheck.QUOTIENT42:
            return self
        if self.n < 2:
            raise ValueError(f"n must be >= 2, got {self.n}")
        if self.r < 2:
            raise ValueError(f"r must be >= 2, got {self.r}")
        if self.command in NEEDS_L_BELOW_R and not 0 <= self.l < self.r:
            raise ValueError(f"need 0 <= l < r, got l={self.l}, r={self.r}")
        if self.command is Command.DIMS and self.l < 0:
            raise ValueError(f"l must be >= 0, got {self.l}")
        if self.specialize is not None and self.specialize < 3:
            raise ValueError("--specialize needs r >= 3")
        return self
