"""Rational generating functions for M along a fixed offset, and the two-step recurrence.

The coefficient of x^n is M at stage s = n + k + 2.  Every generating function
here has the shape

    (p-1)/2 * ( N/(1-px) + (2p^(k+1) - 2px)/(1-px)^2 )

with a class-dependent constant N, stored as a single fraction over (1-px)^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import j_window, repunit
from .fibonacci import IntervalClass, fib_recursive
from .diagram import DiagramParams
from .poly import IntPolynomial

FORMS = ("printed", "corrected")


@dataclass(frozen=True)
class RationalSeries:
    """(scale_num / scale_den) * numerator(x) / denominator(x)."""

    numerator: IntPolynomial
    denominator: IntPolynomial
    scale_num: int = 1
    scale_den: int = 1

    def __post_init__(self) -> None:
        if self.denominator.coefficient(0) == 0:
            raise ValueError("denominator must have a nonzero constant term")
        if self.scale_den == 0:
            raise ValueError("scale_den must be nonzero")

    def render(self, var: str = "x") -> str:
        scale = Fraction(self.scale_num, self.scale_den)
        return f"({scale}) * ({self.numerator.render(var, ascending=True)}) / ({self.denominator.render(var, ascending=True)})"


def series_coefficients(f: RationalSeries, n_terms: int) -> list[int]:
    """First n_terms power-series coefficients; each must be an integer after scaling."""
    if n_terms < 0:
        raise ValueError("n_terms must be nonnegative")
    d = f.denominator.coeffs
    raw: list[Fraction] = []
    for n in range(n_terms):
        acc = Fraction(f.numerator.coefficient(n))
        for i in range(1, min(n, len(d) - 1) + 1):
            acc -= d[i] * raw[n - i]
        raw.append(acc / d[0])
    scale = Fraction(f.scale_num, f.scale_den)
    out = []
    for n, c in enumerate(raw):
        v = c * scale
        if v.denominator != 1:
            raise ArithmeticError(f"coefficient {n} is not an integer: {v}")
        out.append(int(v))
    return out


def standard_series(p: int, k: int, n_const: int) -> RationalSeries:
    """(p-1)/2 * (N/(1-px) + (2p^(k+1) - 2px)/(1-px)^2) over the common denominator."""
    one_minus_px = IntPolynomial((1, -p))
    num = IntPolynomial((n_const,)) * one_minus_px + IntPolynomial((2 * p ** (k + 1), -2 * p))
    return RationalSeries(num, one_minus_px * one_minus_px, p - 1, 2)


def class_constant(p: int, k: int, cls: IntervalClass | int | None = None) -> int:
    """The constant N for the class, as printed in the generating-function statements."""
    h = (p - 1) // 2
    if k == 0:
        if cls is not None:
            raise ValueError("k=0 has a single class")
        return -1
    if k == 1:
        if not isinstance(cls, int) or not 0 <= cls <= p - 1:
            raise ValueError("k=1 classes are keyed by t in [0, p-1]")
        t = cls
        return 2 * p * p + 2 * t - 1 if t < h else 2 * p * p + 2 * t - 2 * p - 1
    if not isinstance(cls, IntervalClass):
        raise ValueError("k >= 2 needs an IntervalClass from the frozen structure")
    base = 2 * k * p ** (k + 1) - 1
    s0 = repunit(p, 0, k - 1)
    s1 = repunit(p, 1, k - 1)
    t, i = cls.t, cls.i_or_iprime
    if cls.kind == "a":
        return base
    if cls.kind == "b":
        if not 0 <= i <= k - 2:
            raise ValueError(f"class b needs 0 <= i <= k-2, got {i}")
        lead = 2 * t * s0 if t <= h else (2 * t - 2 * p) * s0
        return base + lead - 2 * repunit(p, 0, k - i - 2)
    if cls.kind == "c":
        if t == h:
            raise ValueError("class c excludes t = (p-1)/2")
        return base + (2 * t * s0 if t < h else (2 * t - 2 * p) * s0)
    if cls.kind == "d":
        # the statement allows i' = 0, but no interval of the frozen structure carries it
        if not 1 <= i <= k - 1:
            raise ValueError(f"class d needs 1 <= i' <= k-1, got {i}")
        return base - 1 + p**k - 2 * s1 + 2 * repunit(p, k - i + 1, k - 1)
    if cls.kind == "e":
        return base - 1 - p**k - 2 * s1
    raise ValueError(f"class {cls.kind!r} has no generating function")


def genfun_for_class(p: int, k: int, cls: IntervalClass | int | None = None) -> RationalSeries:
    return standard_series(p, k, class_constant(p, k, cls))


@dataclass(frozen=True)
class RecurrenceRow:
    s: int
    lhs: int
    rhs: int
    b_s: int
    regime: str

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def to_dict(self) -> dict:
        return {"s": self.s, "lhs": self.lhs, "rhs": self.rhs, "b_s": self.b_s, "regime": self.regime, "pass": self.passed}


def _regime(p: int, k: int, l: int) -> tuple[bool, int, str]:
    """(low, t, label): low selects the p^2 + p + t constant."""
    h = (p - 1) // 2
    if k == 1:
        return l < h, l, f"t={l}"
    t, exact = j_window(p, k, l)
    if exact and t == h:
        # neither printed case lists l = j_h; the t >= (p+1)/2 constant is used
        return False, t, "t=(p-1)/2 exact"
    return (t <= h and not exact) or (exact and t < h), t, f"t={t}{' exact' if exact else ''}"


def recurrence_b(p: int, k: int, l: int, s: int, form: str = "printed") -> int:
    if form not in FORMS:
        raise ValueError(f"unknown form {form!r}")
    if k == 0:
        return 2 * p ** (s - 1) * (p - 1) * ((p * p - 1) // 2)
    low, t, _ = _regime(p, k, l)
    b = p ** (s - 1) * (p - 1) * (p * p + (p if low else 0) + t)
    if form == "corrected" and k >= 2:
        b += p ** (s - 2) * (p - 1) * j_window(p, k, l // p)[0]
    return b


def recurrence_check(p: int, k: int, l: int, s_max: int, form: str = "printed") -> list[RecurrenceRow]:
    """Check M_{s+2}(l) against the two-step recurrence for k+2 <= s <= s_max."""
    if not 0 <= l < p**k:
        raise ValueError(f"l={l} outside [0, {p**k})")
    tables = fib_recursive(DiagramParams(p, 2 * (k + s_max + 2)), k)
    m = {t.stage: t.by_l for t in tables}
    rows = []
    for s in range(k + 2, s_max + 1):
        b = recurrence_b(p, k, l, s, form)
        if k == 0:
            rhs = p * m[s][0] + (p - 1) * m[s + 1][0] + b
            label = "k=0"
        else:
            a2 = l // p**2 if k >= 2 else 0
            a1 = l // p if k >= 2 else 0
            step = p ** (k - 1)
            rhs = sum(m[s][a2 + step * t2] for t2 in range(p)) + sum(m[s + 1][a1 + step * t1] for t1 in range(1, p)) + b
            label = _regime(p, k, l)[2]
        rows.append(RecurrenceRow(s, m[s + 2][l], rhs, b, label))
    return rows
