"""Pell-Narayana sequence, periods mod m and orbit lengths in finite groups.

Thin re-export of the compiled core. Exact terms come back as Python ints;
group specs are strings like "Q8", "Z:3xZ:4", "D:6", "poly:2,5,2".
"""

from ._core import (
    group_elements,
    length,
    orbit,
    period,
    period_all,
    period_prime_power,
    term,
    term_mod,
    verify,
)

__all__ = [
    "group_elements",
    "length",
    "orbit",
    "period",
    "period_all",
    "period_prime_power",
    "term",
    "term_mod",
    "verify",
]
