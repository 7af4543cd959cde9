"""Parsing and formatting of SI-suffixed quantities ("4.76mm", "7GHz", "86us")."""

from __future__ import annotations

import re

_PREFIXES = {
    "y": 1e-24, "z": 1e-21, "a": 1e-18, "f": 1e-15, "p": 1e-12,
    "n": 1e-9, "u": 1e-6, "µ": 1e-6, "m": 1e-3, "c": 1e-2,
    "": 1.0, "k": 1e3, "M": 1e6, "G": 1e9, "T": 1e12,
}

# Base units accepted on the command line.  Dimension checking is the
# caller's job; this only resolves the numeric scale.
_BASE_UNITS = ("Hz", "ohm", "Ohm", "s", "m", "K", "V", "W", "dB")

_QUANTITY_RE = re.compile(
    r"^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)\s*([a-zA-Zµ]*)\s*$"
)


class UnitError(ValueError):
    """Raised when a quantity string cannot be parsed."""


def parse_quantity(text: str | float, expect: str | None = None) -> float:
    """Parse a number with an optional SI-prefixed unit suffix.

    ``parse_quantity("4.76mm")`` -> 4.76e-3, ``parse_quantity("7GHz")`` -> 7e9.
    Bare numbers pass through unchanged.  When ``expect`` is given (e.g.
    ``"Hz"``), a suffixed value must end with that unit.
    """
    if isinstance(text, (int, float)):
        return float(text)
    match = _QUANTITY_RE.match(text)
    if not match:
        raise UnitError(f"cannot parse quantity {text!r}")
    value = float(match.group(1))
    suffix = match.group(2)
    if not suffix:
        return value
    for unit in _BASE_UNITS:
        if suffix.endswith(unit):
            prefix = suffix[: -len(unit)]
            if prefix not in _PREFIXES:
                raise UnitError(f"unknown SI prefix {prefix!r} in {text!r}")
            if expect is not None and unit.lower() != expect.lower():
                raise UnitError(f"expected a quantity in {expect}, got {text!r}")
            return value * _PREFIXES[prefix]
    raise UnitError(f"unknown unit suffix {suffix!r} in {text!r}")


def format_si(value: float, unit: str = "", digits: int = 4) -> str:
    """Format a value with an SI prefix, e.g. ``format_si(3.69e10, "Hz")``."""
    if value == 0:
        return f"0 {unit}".strip()
    import math

    exponent = int(math.floor(math.log10(abs(value)) / 3) * 3)
    exponent = min(max(exponent, -24), 12)
    for prefix, scale in _PREFIXES.items():
        if prefix in ("µ", "c"):
            continue
        if abs(scale - 10.0**exponent) < 1e-30:
            return f"{value / scale:.{digits}g} {prefix}{unit}".strip()
    return f"{value:.{digits}g} {unit}".strip()
