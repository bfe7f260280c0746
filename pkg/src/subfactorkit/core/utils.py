import json
import re
from fractions import Fraction

import numpy as np
from django.core.serializers.json import DjangoJSONEncoder

from .exceptions import MalformedInput


def format_rational(value):
    """Render a rational as "p/q" (integers keep the "/1" off)."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return "%d/%d" % (value.numerator, value.denominator)


def parse_rational(text):
    """
    Parse "p/q", an integer, or a finite decimal into an exact Fraction.

    Binary floats are refused: they would smuggle rounding into exact
    arithmetic.
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int) and not isinstance(text, bool):
        return Fraction(text)
    if not isinstance(text, str):
        raise MalformedInput("expected a rational string like '7/4', got %r" % (text,))
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise MalformedInput("not a rational number: %r" % text)


_RANGE = re.compile(r"^\s*(-?\d+)\s*(?:\.\.\s*(-?\d+))?\s*$")


def parse_range(text):
    """Parse "a..b" (inclusive) or a single integer into a range."""
    match = _RANGE.match(str(text))
    if not match:
        raise MalformedInput("not a range: %r (expected 'a..b')" % text)
    start = int(match.group(1))
    stop = int(match.group(2)) if match.group(2) is not None else start
    if stop < start:
        raise MalformedInput("empty range: %r" % text)
    return range(start, stop + 1)


class ReportEncoder(DjangoJSONEncoder):
    """
    JSON encoder for reports: rationals as "p/q" strings, numpy scalars as
    Python numbers, complex numbers as [re, im] pairs.
    """

    def default(self, o):
        if isinstance(o, Fraction):
            return format_rational(o)
        if isinstance(o, np.bool_):
            return bool(o)
        if isinstance(o, np.integer):
            return int(o)
        if isinstance(o, np.floating):
            return float(o)
        if isinstance(o, (complex, np.complexfloating)):
            return [float(o.real), float(o.imag)]
        if isinstance(o, np.ndarray):
            return o.tolist()
        if hasattr(o, "as_dict"):
            return o.as_dict()
        return super().default(o)


def object_to_json(obj, indent=None):
    """
    Given an object, returns a deterministic JSON serialization of it:
    sorted keys, fixed indentation, trailing newline.
    """
    if indent is None:
        from subfactorkit.conf import settings

        indent = settings.JSON_INDENT
    return (
        json.dumps(
            obj,
            cls=ReportEncoder,
            sort_keys=True,
            indent=indent,
            ensure_ascii=False,
        )
        + "\n"
    )


def load_json(path):
    try:
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as e:
        raise MalformedInput("cannot read %s: %s" % (path, e))
    except json.JSONDecodeError as e:
        raise MalformedInput("%s is not valid JSON: %s" % (path, e))
