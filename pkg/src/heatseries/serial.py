"""Deterministic number formatting shared by the serializers.

Every float written to CSV or JSON goes through f17, which prints 17
significant digits; that round-trips doubles exactly, so identical inputs
produce byte-identical files.
"""


def f17(value: float) -> str:
    return format(float(value), ".17g")


def opt17(value) -> str:
    """Empty string for None, f17 otherwise (CSV optional cells)."""
    return "" if value is None else f17(value)


def json_opt17(value) -> str:
    """JSON literal: null for None, 17-digit number otherwise."""
    return "null" if value is None else f17(value)
