"""Typed result records returned by the check functions and serialized by the CLI."""

from typing import Any, Optional, TypedDict


class TwistReport(TypedDict):
    n: int
    l: int
    r: int
    lprime: Optional[int]
    scalar_exponent: int
    dim_N: int
    nilpotent_rank: int
    nilpotent_nonzero: bool
    nilpotent_square_zero: bool
    scalar_on_W: bool
    power_r_identity_on_W: bool
    matches_formula: bool


class CSRReport(TypedDict):
    n: int
    l: int
    r: int
    j: int
    lprime: Optional[int]
    case: str
    dim_W: int
    dim_C: int
    dim_S: int
    dim_R: int
    s_in_W: bool
    s_action_matches: Optional[bool]
    matches_case: bool
    s_basis: list


class SplitReport(TypedDict):
    rep: str
    n: int
    r: int
    split: bool
    certificate: dict[str, Any]


class CheckResult(TypedDict):
    check: str
    params: dict[str, Any]
    passed: bool
    detail: dict[str, Any]


class VerifyReport(TypedDict):
    passed: bool
    total: int
    failed: int
    results: list[CheckResult]
