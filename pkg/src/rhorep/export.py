"""
JSON encodings for exact values.

    CycNum    {"r": r, "coeffs": ["p/q", ...]}      ascending powers of zeta_{4r}
    LPoly3    [[a, b, c, coeff], ...]                q^a s^b t^c, sorted
    LRat      {"num": LPoly3, "den": LPoly3}
    RepMatrix {"rows": m, "cols": n, "entries": [[...], ...]}   row-major
    complex   [re, im]
"""

import json
import os
import tempfile
from fractions import Fraction
from typing import Any, Optional

import click
import numpy as np

from .algebra import CycNum, LPoly3, LRat, RepMatrix


def _fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def encode(value: Any) -> Any:
    """Recursively turn exact values into JSON-ready structures."""
    if isinstance(value, CycNum):
        return {"r": value.field.r, "coeffs": [_fraction(c) for c in value.coeffs]}
    if isinstance(value, LPoly3):
        return [[a, b, c, coeff] for (a, b, c), coeff in value.items()]
    if isinstance(value, LRat):
        return {"num": encode(value.num), "den": encode(value.den)}
    if isinstance(value, RepMatrix):
        return {"rows": value.nrows, "cols": value.ncols, "entries": [[encode(x) for x in row] for row in value.to_lists()]}
    if isinstance(value, np.ndarray):
        return [encode(x) for x in value.tolist()]
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, Fraction):
        return _fraction(value)
    if isinstance(value, dict):
        return {_key(k): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(x) for x in value]
    if hasattr(value, "value") and hasattr(value, "name"):
        return value.value
    return value


def _key(key: Any) -> str:
    if isinstance(key, tuple):
        return ",".join(map(str, key))
    return str(key)


def dumps(doc: Any) -> str:
    return json.dumps(encode(doc), sort_keys=True, indent=2)


def write_document(doc: Any, output: Optional[str] = None) -> str:
    """Write to stdout when output is None or '-', otherwise atomically replace the target file."""
    text = dumps(doc) + "\n"
    if output in (None, "-"):
        click.echo(text, nl=False)
        return text
    directory = os.path.dirname(os.path.abspath(output))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".rhorep-", suffix=".json")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, output)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return text
