"""Exact, series and asymptotic evaluation of the partition function p(n)."""

from decimal import Decimal
from fractions import Fraction

from . import _core
from ._core import (
    CacheGapError,
    CacheIoError,
    CacheParseError,
    CertificationError,
    farey,
    ford_chords,
    p_exact,
    p_oracle_dp,
    p_series,
    partition_table,
    pentagonal,
    relative_error_table,
    verify_eta,
    verify_F_transform,
)

__all__ = [
    "CacheGapError",
    "CacheIoError",
    "CacheParseError",
    "CertificationError",
    "a_k",
    "bessel_i_3_2",
    "dedekind_sum",
    "farey",
    "ford_chords",
    "l_n",
    "p_exact",
    "p_oracle_dp",
    "p_series",
    "partition_table",
    "pentagonal",
    "relative_error_table",
    "verify_eta",
    "verify_F_transform",
]


def dedekind_sum(h: int, k: int) -> Fraction:
    num, den = _core.dedekind_sum(h, k)
    return Fraction(num, den)


def a_k(k: int, n: int, prec: int = 128) -> Decimal:
    return Decimal(_core.a_k(k, n, prec))


def l_n(n: int, prec: int = 128) -> Decimal:
    return Decimal(_core.l_n(n, prec))


def bessel_i_3_2(x, prec: int = 128):
    """I_{3/2}(x) as (series, closed form); the closed form is None at x = 0."""
    series, closed = _core.bessel_i_3_2(str(x), prec)
    return Decimal(series), None if closed is None else Decimal(closed)
