"""Tabulated descent polynomials for the first stages of class k >= 1.

Every entry is (p-1)/2 (q+1) times an inner polynomial whose coefficients are
rational expressions in p and t.  Entries are kept exactly as printed, so some
of them disagree with the brute-force oracle, and some intervals overlap or
leave gaps.  ``compare_initial_tables`` in the eulerian module reports which.

Floors are written relative to 2k: delta 2, 4, 6, 8 are V floors (offsets
below p^k, windows j^k_t) and delta 3, 5, 7 are W floors (offsets below
p^(k+1), windows j^(k+1)_t).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Fr
from typing import Callable, Iterable

from .core import j_number, repunit
from .poly import IntPolynomial


class NoTabulatedForm(LookupError):
    """No printed entry covers the requested offset."""


class NonIntegralEntry(ArithmeticError):
    """A printed entry evaluates to a polynomial with fractional coefficients."""


Interval = Callable[[int, int, int], tuple[int, int]]
Inner = Callable[[int, int], list[Fr]]


@dataclass(frozen=True)
class TableEntry:
    key: str
    delta: int
    k_rule: Callable[[int], bool]
    t_values: Callable[[int], Iterable[int]]
    interval: Interval
    inner: Inner
    sign: int = 1

    def polynomial(self, p: int, t: int) -> IntPolynomial:
        """sign * (p-1)/2 * (q+1) * inner, checked to be integral."""
        inner = self.inner(p, t)
        prod = [Fr(0)] * (len(inner) + 1)
        for i, c in enumerate(inner):
            prod[i] += c
            prod[i + 1] += c
        scaled = [self.sign * Fr(p - 1, 2) * c for c in prod]
        if any(c.denominator != 1 for c in scaled):
            raise NonIntegralEntry(f"entry {self.key} is not integral at p={p}, t={t}")
        return IntPolynomial(int(c) for c in scaled)


def _h(p: int) -> int:
    return (p - 1) // 2


def _no_t(p: int) -> Iterable[int]:
    return (0,)


def _t_range(lo: Callable[[int], int], hi: Callable[[int], int]) -> Callable[[int], Iterable[int]]:
    return lambda p: range(lo(p), hi(p) + 1)


def _jv(p: int, k: int, t: int) -> int:
    return j_number(p, k, t)


def _jw(p: int, k: int, t: int) -> int:
    return j_number(p, k + 1, t)


def _any(k: int) -> bool:
    return k >= 1


def _k1(k: int) -> bool:
    return k == 1


def _kgt1(k: int) -> bool:
    return k > 1


def _k2(k: int) -> bool:
    return k == 2


def _kgt2(k: int) -> bool:
    return k > 2


def _h2(*xs) -> list[Fr]:
    return [Fr(x, 2) for x in xs]


def _d8(*xs) -> list[Fr]:
    return [Fr(x, 8) for x in xs]


def _d24(*xs) -> list[Fr]:
    return [Fr(x, 24) for x in xs]


ENTRIES: list[TableEntry] = []


def _add(*args, **kw) -> None:
    ENTRIES.append(TableEntry(*args, **kw))


# floor 2k+2 and 2k+3: the seed
_add("2k+2", 2, _any, _no_t, lambda p, k, t: (0, p**k - 1), lambda p, t: [Fr(1)])
_add("2k+3", 3, _any, _no_t, lambda p, k, t: (0, p ** (k + 1) - 1), lambda p, t: [Fr(1)])

# floor 2k+4, split at p^k (p-1)/2 as printed
_add("2k+4/low", 4, _any, _no_t, lambda p, k, t: (0, p**k * (p - 1) // 2 - 1), lambda p, t: _h2(p - 1, p + 1))
_add("2k+4/high", 4, _any, _no_t, lambda p, k, t: (p**k * (p - 1) // 2, p**k - 1), lambda p, t: _h2(p + 1, p - 1))

# floor 2k+5 (W, windows j^{k+1})
_add("2k+5/j0", 5, _any, _no_t, lambda p, k, t: (0, 0), lambda p, t: _h2(p - 1, p + 1))
_add(
    "2k+5/low-t",
    5,
    _any,
    _t_range(lambda p: 1, lambda p: (p - 3) // 2),
    lambda p, k, t: (_jw(p, k, t - 1) + 1, _jw(p, k, t)),
    lambda p, t: _h2(p - (2 * t + 1), p + 2 * t + 1),
)
_add(
    "2k+5/below-mid",
    5,
    _any,
    _no_t,
    lambda p, k, t: (_jw(p, k, (p - 3) // 2) + 1, _jw(p, k, _h(p)) - _h(p) - 1),
    lambda p, t: [Fr(0), Fr(p)],
)
_add(
    "2k+5/mid",
    5,
    _any,
    _no_t,
    lambda p, k, t: (_jw(p, k, _h(p)) - _h(p), _jw(p, k, _h(p))),
    lambda p, t: [Fr(1), Fr(p - 1)],
)
_add(
    "2k+5/above-mid",
    5,
    _any,
    _no_t,
    lambda p, k, t: (_jw(p, k, _h(p)) + 1, _jw(p, k, _h(p) + 1)),
    lambda p, t: [Fr(0), Fr(p)],
)
_add(
    "2k+5/high-t",
    5,
    _any,
    _t_range(_h, lambda p: p - 1),
    lambda p, k, t: (_jw(p, k, t - 1) + 1, _jw(p, k, t)),
    lambda p, t: [Fr(3 * p - 2 * t + 1, 2), Fr(0), Fr(-(p - 2 * t + 1), 2)],
)

# floor 2k+6 (V), k = 1
_add(
    "2k+6/k1/low-t",
    6,
    _k1,
    _t_range(lambda p: 0, lambda p: (p - 3) // 2),
    lambda p, k, t: (t, t),
    lambda p, t: [Fr(0)] + _h2(p * p - 2 * t + 1, p * p + 2 * t - 1),
)
_add(
    "2k+6/k1/mid",
    6,
    _k1,
    _no_t,
    lambda p, k, t: (_h(p), _h(p)),
    lambda p, t: [Fr(1)] + _h2(p * p + p - 2, p * p - p),
)
_add(
    "2k+6/k1/high-t",
    6,
    _k1,
    _t_range(lambda p: (p + 1) // 2, lambda p: p - 1),
    lambda p, k, t: (t, t),
    lambda p, t: [Fr(0)] + _h2(p * p - 2 * t + 1 + 2 * p, p * p + 2 * t - 1 - 2 * p),
)

# floor 2k+6 (V), k > 1
_add("2k+6/k>1/j0", 6, _kgt1, _no_t, lambda p, k, t: (0, 0), lambda p, t: [Fr(0)] + _h2(p * p - 1, p * p + 1))
_add(
    "2k+6/k>1/low-t",
    6,
    _kgt1,
    _t_range(lambda p: 1, lambda p: (p - 3) // 2),
    lambda p, k, t: (_jv(p, k, t - 1) + 1, _jv(p, k, t)),
    lambda p, t: [Fr(0)] + _h2(p * p - 2 * t - 1, p * p + 2 * t + 1),
)
_add(
    "2k+6/k>1/below-mid",
    6,
    _kgt1,
    _no_t,
    lambda p, k, t: (_jv(p, k, (p - 3) // 2) + 1, _jv(p, k, _h(p)) - _h(p) - 1),
    lambda p, t: [Fr(0)] + _h2(p * (p - 1), p * (p + 1)),
)
_add(
    "2k+6/k>1/near-mid",
    6,
    _kgt1,
    _no_t,
    lambda p, k, t: (_jv(p, k, _h(p)) - _h(p), _jv(p, k, _h(p)) - 1),
    lambda p, t: [Fr(0)] + _h2(p * p - p + 2, p * p + p - 2),
)
_add(
    "2k+6/k>1/mid",
    6,
    _kgt1,
    _no_t,
    lambda p, k, t: (_jv(p, k, _h(p)), _jv(p, k, _h(p))),
    lambda p, t: [Fr(1)] + _h2(p * p + p - 2, p * p - p),
)
_add(
    "2k+6/k>1/high-t",
    6,
    _kgt1,
    _t_range(_h, lambda p: p - 1),
    lambda p, k, t: (_jv(p, k, t - 1) + 1, _jv(p, k, t)),
    lambda p, t: [Fr(0)] + _h2(p * p - 2 * t + 2 * p + 1, p * p + 2 * t - 2 * p - 1),
)


# floor 2k+7 (W); the two t >= (p+1)/2 families carry a leading minus sign
def _neg7(a_const: int, b_const: Callable[[int], int]) -> Inner:
    def inner(p: int, t: int) -> list[Fr]:
        a = Fr(p * p + t * t - (3 * p + 4) * t + 4 * p + a_const, 2)
        b = Fr(-2 * t * t + (4 * p + 6) * t + b_const(p), 2)
        c = Fr((t - 2) * (t - p), 2)
        # -(a q^3 - b q^2 + c q)
        return [Fr(0), -c, b, -a]

    return inner


_NEG7_A = _neg7(3, lambda p: -3 * (p + 1) ** 2)
_NEG7_B = _neg7(1, lambda p: -3 * p * p - 6 * p - 1)

_add("2k+7/k1/j0", 7, _k1, _no_t, lambda p, k, t: (0, 0), lambda p, t: [Fr(0)] + _h2(p * p + 1, p * p - 1))
_add(
    "2k+7/k1/low-open",
    7,
    _k1,
    _t_range(lambda p: 1, _h),
    lambda p, k, t: (_jw(p, k, t - 1) + 1, _jw(p, k, t) - t - 1),
    lambda p, t: [Fr(0)]
    + _h2(p * p - (p + 4) * t - t * t + 3, p * p + 2 * t * t + 3 * t - 3, (p - 2) * t - t * t),
)
_add(
    "2k+7/k1/low-closed",
    7,
    _k1,
    _t_range(lambda p: 1, lambda p: (p - 3) // 2),
    lambda p, k, t: (_jw(p, k, t) - t, _jw(p, k, t)),
    lambda p, t: [Fr(0)]
    + _h2(p * p - (p + 4) * t - t * t + 1, p * p + 2 * t * t + 3 * t - 1, (p - 2) * t - t * t),
)
_add(
    "2k+7/k1/mid",
    7,
    _k1,
    _no_t,
    lambda p, k, t: (_jw(p, k, _h(p)) - _h(p), _jw(p, k, _h(p))),
    lambda p, t: [Fr(1)] + _d8(p * p + 4 * p - 5, 6 * p * p - 6, p * p - 4 * p + 3),
)
_add(
    "2k+7/k1/above-mid",
    7,
    _k1,
    _no_t,
    lambda p, k, t: (_jw(p, k, _h(p)) + 1, _jw(p, k, _h(p) + 1) - (p + 1) // 2 - 1),
    lambda p, t: [Fr(0)] + _d8(p * p + 4 * p - 11, 6 * p * p + 8 * p - 14, p * p - 4 * p + 3),
)
_add(
    "2k+7/k1/high-open",
    7,
    _k1,
    _t_range(lambda p: (p + 3) // 2, lambda p: p - 1),
    lambda p, k, t: (_jw(p, k, t - 1) + 1, _jw(p, k, t) - t - 1),
    _NEG7_A,
)
_add(
    "2k+7/k1/high-closed",
    7,
    _k1,
    _t_range(lambda p: (p + 1) // 2, lambda p: p - 1),
    lambda p, k, t: (_jw(p, k, t) - t, _jw(p, k, t)),
    _NEG7_B,
)

_add("2k+7/k>1/j0", 7, _kgt1, _no_t, lambda p, k, t: (0, 0), lambda p, t: [Fr(0)] + _h2(p * p - 1, p * p + 1))
_add(
    "2k+7/k>1/low-open",
    7,
    _kgt1,
    _t_range(lambda p: 1, _h),
    lambda p, k, t: (_jw(p, k, t - 1) + 1, _jw(p, k, t) - t - 1),
    lambda p, t: [Fr(0)]
    + _h2(p * p + 1 - (p + 4) * t - t * t, p * p + 2 * t * t + 6 * t - 1, (p - 2) * t - t * t),
)
_add(
    "2k+7/k>1/low-closed",
    7,
    _kgt1,
    _t_range(lambda p: 1, lambda p: (p - 3) // 2),
    lambda p, k, t: (_jw(p, k, t) - t, _jw(p, k, t)),
    lambda p, t: [Fr(0)]
    + _h2(p * p - 1 - (p + 4) * t - t * t, (p - 1) ** 2 + 2 * t * t + 6 * t, (p - 2) * t - t * t),
)
_add(
    "2k+7/k>1/below-mid",
    7,
    _kgt1,
    _no_t,
    lambda p, k, t: (_jw(p, k, _h(p)) - p * (p - 1) // 2, _jw(p, k, _h(p)) - _h(p) - 1),
    lambda p, t: [Fr(0)] + _d8(p * p - 4 * p + 11, 6 * p * p - 8 * p + 14, p * p - 4 * p + 3),
)
_add(
    "2k+7/k>1/mid",
    7,
    _kgt1,
    _no_t,
    lambda p, k, t: (_jw(p, k, _h(p)) - _h(p), _jw(p, k, _h(p))),
    lambda p, t: [Fr(1)] + _d8(p * p + 4 * p - 5, 6 * p * p - 6, p * p - 4 * p + 3),
)
_add(
    "2k+7/k>1/above-mid",
    7,
    _kgt1,
    _no_t,
    lambda p, k, t: (_jw(p, k, _h(p)) + 1, _jw(p, k, _h(p) + 1) - (p + 1) // 2 - 1),
    lambda p, t: [Fr(0)] + _d8(p * p - 4 * p + 11, 6 * p * p + 8 * p - 14, p * p - 4 * p + 3),
)
_add(
    "2k+7/k>1/high-open",
    7,
    _kgt1,
    _t_range(lambda p: (p + 3) // 2, lambda p: p - 1),
    lambda p, k, t: (_jw(p, k, t - 1) + 1, _jw(p, k, t) - t - 1),
    _NEG7_A,
)
_add(
    "2k+7/k>1/high-closed",
    7,
    _kgt1,
    _t_range(lambda p: (p + 1) // 2, lambda p: p - 1),
    lambda p, k, t: (_jw(p, k, t) - t, _jw(p, k, t)),
    _NEG7_B,
)


# floor 2k+8 (V); inner polynomials have no constant term except at the centre
def _q8(c1: int, c2: int, c3: int, c4: int, c0: int = 0) -> list[Fr]:
    return [Fr(c0)] + _d24(c1, c2, c3, c4)


def _base4(p: int) -> int:
    return p**3 - 3 * p * p - p + 3


_add(
    "2k+8/k1/low-t",
    8,
    _k1,
    _t_range(lambda p: 0, lambda p: (p - 3) // 2),
    lambda p, k, t: (t, t),
    lambda p, t: _q8(
        p**3 - 3 * p * p - p + 27,
        11 * p**3 + 3 * p * p + 37 * p - 51 - 12 * t * (t + 2),
        11 * p**3 + 3 * p * p - 35 * p + 21 + 24 * t * (t + 2),
        _base4(p) + 12 * t * (p - 2) - 12 * t * t,
    ),
)
_add(
    "2k+8/k1/mid",
    8,
    _k1,
    _no_t,
    lambda p, k, t: (_h(p), _h(p)),
    lambda p, t: _q8(
        p**3 + 11 * p - 12,
        11 * p**3 + 9 * p * p + 25 * p - 45,
        11 * p**3 - 6 * p * p - 35 * p + 30,
        _base4(p),
        c0=1,
    ),
)
_add(
    "2k+8/k1/high-t",
    8,
    _k1,
    _t_range(lambda p: (p + 1) // 2, lambda p: p - 1),
    lambda p, k, t: (t, t),
    lambda p, t: _q8(
        p**3 - 3 * p * p - 25 * p + 27 - 12 * t * (t - 2) + 12 * t * p,
        11 * p**3 + 27 * p * p + 85 * p - 51 + 24 * t * (t - 2) - 48 * t * p,
        11 * p**3 - 21 * p * p - 59 * p + 21 - 12 * t * (t - 2) + 36 * t * p,
        _base4(p),
    ),
)

# k = 2: offsets written directly in p
_add(
    "2k+8/k2/j0",
    8,
    _k2,
    _no_t,
    lambda p, k, t: (0, 0),
    lambda p, t: _q8(_base4(p), 11 * p**3 + 3 * p * p + p + 9, 11 * p**3 + 3 * p * p + p - 15, _base4(p)),
)
_add(
    "2k+8/k2/low-open",
    8,
    _k2,
    _t_range(lambda p: 1, _h),
    lambda p, k, t: ((t - 1) * (p + 1) + 1, t * p - 1),
    lambda p, t: _q8(
        _base4(p),
        11 * p**3 + 3 * p * p + p + 33 - 12 * t * (t + p + 2),
        11 * p**3 + 3 * p * p + p - 39 + 24 * t * (t + 3),
        _base4(p) - 12 * t * (t - p + 2),
    ),
)
_add(
    "2k+8/k2/low-closed",
    8,
    _k2,
    _t_range(lambda p: 1, lambda p: (p - 3) // 2),
    lambda p, k, t: (t * p, t * (p + 1)),
    lambda p, t: _q8(
        _base4(p),
        11 * p**3 + 3 * p * p + p + 9 - 12 * t * (t + p + 2),
        11 * p**3 + 3 * p * p + p - 15 + 24 * t * (t + 3),
        _base4(p) - 12 * t * (t - p + 2),
    ),
)
_add(
    "2k+8/k2/near-mid",
    8,
    _k2,
    _no_t,
    lambda p, k, t: (_h(p) * p, _h(p) * (p + 1) - 1),
    lambda p, t: _q8(
        p**3 - 3 * p * p - p + 27,
        11 * p**3 - 6 * p * p + 13 * p - 18,
        11 * p**3 + 9 * p * p + p - 21,
        p**3 - 13 * p + 12,
    ),
)
_add(
    "2k+8/k2/mid",
    8,
    _k2,
    _no_t,
    lambda p, k, t: (_h(p) * (p + 1), _h(p) * (p + 1)),
    lambda p, t: _q8(
        p**3 + 11 * p - 12,
        11 * p**3 + 9 * p * p + p - 21,
        11 * p**3 - 6 * p * p - 11 * p + 6,
        _base4(p),
        c0=1,
    ),
)
_add(
    "2k+8/k2/above-mid",
    8,
    _k2,
    _no_t,
    lambda p, k, t: (_h(p) * (p + 1) + 1, (p + 1) // 2 * p - 1),
    lambda p, t: _q8(
        p**3 - 13 * p + 36,
        11 * p**3 + 9 * p * p + 25 * p - 45,
        11 * p**3 - 6 * p * p - 11 * p + 6,
        _base4(p),
    ),
)
_add(
    "2k+8/k2/high-open",
    8,
    _k2,
    _t_range(lambda p: (p + 3) // 2, lambda p: p - 1),
    lambda p, k, t: ((t - 1) * (p + 1) + 1, t * p - 1),
    lambda p, t: _q8(
        p**3 - 3 * p * p - 25 * p + 3 - 12 * t * (t - p - 2),
        11 * p**3 + 27 * p * p + 73 * p + 33 + 24 * t * (t - 2 * p - 3),
        11 * p**3 - 21 * p * p - 47 * p - 39 - 12 * t * (t - 3 * p - 4),
        _base4(p),
    ),
)
_add(
    "2k+8/k2/high-closed",
    8,
    _k2,
    _t_range(lambda p: (p + 1) // 2, lambda p: p - 1),
    lambda p, k, t: (t * p, t * (p + 1)),
    lambda p, t: _q8(
        p**3 - 3 * p * p - 25 * p + 3 - 12 * t * (t - p - 2),
        11 * p**3 + 27 * p * p + 73 * p + 9 + 24 * t * (t - 2 * p - 3),
        11 * p**3 - 21 * p * p - 47 * p - 15 - 12 * t * (t - 3 * p - 4),
        _base4(p),
    ),
)


# k > 2: offsets written with partial repunits S_a = p^a + ... + p^(k-1)
def _S(p: int, k: int, a: int) -> int:
    return repunit(p, a, k - 1)


_add(
    "2k+8/k>2/j0",
    8,
    _kgt2,
    _no_t,
    lambda p, k, t: (0, 0),
    lambda p, t: _q8(_base4(p), 11 * p**3 + 3 * p * p + p - 15, 11 * p**3 + 3 * p * p + p + 9, _base4(p)),
)
_add(
    "2k+8/k>2/low-open",
    8,
    _kgt2,
    _t_range(lambda p: 1, _h),
    lambda p, k, t: ((t - 1) * _S(p, k, 0) + 1, (t - 1) * _S(p, k, 1) + p - 1),
    lambda p, t: _q8(
        _base4(p),
        11 * p**3 + 3 * p * p + p + 9 - 12 * t * (t + p + 2),
        11 * p**3 + 3 * p * p + p - 15 + 24 * t * (t + 3),
        _base4(p) - 12 * t * (t - p + 2),
    ),
)
_add(
    "2k+8/k>2/low-closed",
    8,
    _kgt2,
    _t_range(lambda p: 1, lambda p: (p - 3) // 2),
    lambda p, k, t: ((t - 1) * _S(p, k, 1) + p, t * _S(p, k, 0)),
    lambda p, t: _q8(
        _base4(p),
        11 * p**3 + 3 * p * p + p - 15 - 12 * t * (t + p + 2),
        11 * p**3 + 3 * p * p + p + 9 + 24 * t * (t + 3),
        _base4(p) - 12 * t * (t - p + 2),
    ),
)
_add(
    "2k+8/k>2/below-mid",
    8,
    _kgt2,
    _no_t,
    lambda p, k, t: ((p - 3) // 2 * _S(p, k, 1) + p, _h(p) * _S(p, k, 2) - 1),
    lambda p, t: _q8(
        _base4(p),
        11 * p**3 - 6 * p * p - 11 * p + 6,
        11 * p**3 + 9 * p * p + 25 * p - 21,
        p**3 - 13 * p + 12,
    ),
)
_add(
    "2k+8/k>2/below-mid-2",
    8,
    _kgt2,
    _no_t,
    lambda p, k, t: (_h(p) * _S(p, k, 2) + p, _h(p) * _S(p, k, 1) - 1),
    lambda p, t: _q8(
        _base4(p),
        11 * p**3 - 6 * p * p - 11 * p + 30,
        11 * p**3 + 9 * p * p + 25 * p - 45,
        p**3 - 13 * p + 12,
    ),
)
_add(
    "2k+8/k>2/near-mid",
    8,
    _kgt2,
    _no_t,
    lambda p, k, t: (_h(p) * _S(p, k, 1), _h(p) * _S(p, k, 0) - 1),
    lambda p, t: _q8(
        p**3 - 3 * p * p - p + 27,
        11 * p**3 - 6 * p * p + 13 * p - 18,
        11 * p**3 + 9 * p * p + p - 21,
        p**3 - 13 * p + 12,
    ),
)
_add(
    "2k+8/k>2/mid",
    8,
    _kgt2,
    _no_t,
    lambda p, k, t: (_h(p) * _S(p, k, 0), _h(p) * _S(p, k, 0)),
    lambda p, t: _q8(
        p**3 + 11 * p - 12,
        11 * p**3 + 9 * p * p + p - 21,
        11 * p**3 - 6 * p * p - 11 * p + 6,
        _base4(p),
        c0=1,
    ),
)
_add(
    "2k+8/k>2/above-mid",
    8,
    _kgt2,
    _no_t,
    lambda p, k, t: (_h(p) * _S(p, k, 0) + 1, _h(p) * _S(p, k, 1) + p - 1),
    lambda p, t: _q8(
        p**3 - 13 * p + 36,
        11 * p**3 + 9 * p * p + 25 * p - 45,
        11 * p**3 - 6 * p * p - 11 * p + 6,
        _base4(p),
    ),
)
_add(
    "2k+8/k>2/high-open",
    8,
    _kgt2,
    _t_range(lambda p: (p + 3) // 2, lambda p: p - 1),
    lambda p, k, t: ((t - 1) * _S(p, k, 0) + 1, (t - 1) * _S(p, k, 1) + p - 1),
    lambda p, t: _q8(
        p**3 - 3 * p * p - 25 * p + 3 - 12 * t * (t - p - 2),
        11 * p**3 + 27 * p * p + 73 * p + 33 + 24 * t * (t - 2 * p - 3),
        11 * p**3 - 21 * p * p - 47 * p - 39 - 12 * t * (t - 3 * p - 4),
        _base4(p),
    ),
)
_add(
    "2k+8/k>2/high-closed",
    8,
    _kgt2,
    _t_range(lambda p: (p + 1) // 2, lambda p: p - 1),
    lambda p, k, t: ((t - 1) * _S(p, k, 1) + p, t * _S(p, k, 0)),
    lambda p, t: _q8(
        p**3 - 3 * p * p - 25 * p + 3 - 12 * t * (t - p - 2),
        11 * p**3 + 27 * p * p + 73 * p + 9 + 24 * t * (t - 2 * p - 3),
        11 * p**3 - 21 * p * p - 47 * p - 15 - 12 * t * (t - 3 * p - 4),
        _base4(p),
    ),
)


def offset_range(p: int, k: int, delta: int) -> int:
    return p**k if delta % 2 == 0 else p ** (k + 1)


def table_entries(p: int, k: int, delta: int) -> list[tuple[TableEntry, int, int, int]]:
    """Entries for (p, k, floor 2k+delta) as (entry, t, lo, hi), empty intervals dropped."""
    out = []
    for e in ENTRIES:
        if e.delta != delta or not e.k_rule(k):
            continue
        for t in e.t_values(p):
            lo, hi = e.interval(p, k, t)
            if lo <= hi:
                out.append((e, t, lo, hi))
    return out


def matching_entries(p: int, k: int, floor: int, l: int) -> list[tuple[TableEntry, int]]:
    delta = floor - 2 * k
    return [(e, t) for e, t, lo, hi in table_entries(p, k, delta) if lo <= l <= hi]


def initial_closed_form(p: int, k: int, floor: int, l: int) -> IntPolynomial:
    """The printed polynomial for the first entry whose interval holds l."""
    if k < 1:
        raise ValueError("the tables cover k >= 1")
    delta = floor - 2 * k
    if not 2 <= delta <= 8:
        raise ValueError(f"floor {floor} is outside 2k+2 .. 2k+8")
    if not 0 <= l < offset_range(p, k, delta):
        raise ValueError(f"l={l} outside [0, {offset_range(p, k, delta)})")
    hits = matching_entries(p, k, floor, l)
    if not hits:
        raise NoTabulatedForm(f"no printed entry for p={p}, k={k}, floor={floor}, l={l}")
    e, t = hits[0]
    return e.polynomial(p, t)
