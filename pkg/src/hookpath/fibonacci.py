"""Descent totals M (the Fibonacci-type numbers) on even-floor class-k vertices.

Sources, in order of trust:
  * ``fib_bruteforce``: sum of des over enumerated paths;
  * ``fib_dp``: F'(1) from the state DP in ``eulerian`` (same comparisons, aggregated);
  * ``fib_recursive``: the stage-to-stage update, with the corrected constants
    ("adjudicated") or the constants as printed ("printed");
  * ``fib_closed_form``: the per-interval closed forms.

Stage s of class k lives on floor 2(k+s).  The table for p=5, k=2, s=3 as printed
in the worked example is kept in ``EXAMPLE_P5_K2_S3`` for the discrepancy report.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .core import j_window, repunit
from .diagram import DiagramParams, VertexLabel
from .eulerian import eulerian_bruteforce, eulerian_dp
from .paths import enumerate_paths
from .stats import des

VARIANTS = ("adjudicated", "printed")

# (lo, hi, value) exactly as listed in the worked example; note hi=25 is out of range
EXAMPLE_P5_K2_S3 = ((0, 0, 202), (1, 6, 206), (7, 9, 210), (10, 11, 206), (12, 12, 186), (13, 19, 190), (20, 25, 194))
EXAMPLE_P5_K2_S4_L10 = 1526


@dataclass(frozen=True)
class FibTable:
    class_k: int
    floor: int
    by_l: dict[int, int] = field(hash=False)

    @property
    def stage(self) -> int:
        return self.floor // 2 - self.class_k

    def rows(self) -> list[dict]:
        return [{"floor": self.floor, "k": self.class_k, "s": self.stage, "l": l, "M": m} for l, m in sorted(self.by_l.items())]


def fib_bruteforce(v: VertexLabel) -> int:
    return sum(des(path) for path in enumerate_paths(v))


@lru_cache(maxsize=None)
def _fib_dp(p: int, k: int, s: int) -> tuple[int, ...]:
    polys = eulerian_dp(p, k, 2 * (k + s))
    return tuple(polys[l].derivative().eval(1) for l in range(p**k))


def fib_dp(p: int, k: int, s: int) -> dict[int, int]:
    """M for every offset at stage s, from the state DP."""
    if s < 1:
        raise ValueError("stages start at 1")
    return dict(enumerate(_fib_dp(p, k, s)))


def derivative_identity_check(v: VertexLabel) -> bool:
    return eulerian_bruteforce(v).derivative().eval(1) == fib_bruteforce(v)


def _seed_stage2(p: int, k: int, l: int) -> int:
    h = (p - 1) // 2
    return h * (2 * p + 1) if 2 * l < p**k - 1 else h * (2 * p - 1)


def _printed_b(p: int, k: int, l: int) -> int:
    # the five printed cases; B equals t outside the band of width (p-1)/2 around (p^k-1)/2
    h = (p - 1) // 2
    mid = (p**k - 1) // 2
    t, _ = j_window(p, k, l)
    if l < mid - h or l > mid + h:
        return t
    if l <= mid:
        return h
    return (p + 1) // 2


def recursive_step(p: int, k: int, s: int, prev: dict[int, int], variant: str = "adjudicated") -> dict[int, int]:
    """Stage s+1 from stage s (s >= 2, k >= 1)."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    h = (p - 1) // 2
    q = p**k
    out = {}
    for l in range(q):
        preds = sum(prev[l // p + p ** (k - 1) * tp] for tp in range(p))
        a = (p + 1) // 2 if 2 * l < q - 1 else h
        b = j_window(p, k, l)[0] if variant == "adjudicated" else _printed_b(p, k, l)
        out[l] = preds + p ** (s - 1) * (p - 1) * a + p ** (s - 2) * (p - 1) * (p * (p - 1) // 2 + b)
    return out


def fib_recursive(
    params: DiagramParams, k: int, up_to_floor: int | None = None, variant: str = "adjudicated"
) -> list[FibTable]:
    """Tables for floors 2k+2, 2k+4, ... without enumerating paths."""
    p = params.p
    top = params.max_floor if up_to_floor is None else up_to_floor
    if top > params.max_floor:
        raise ValueError("up_to_floor exceeds max_floor")
    h = (p - 1) // 2
    q = p**k
    tables: list[FibTable] = []
    s = 1
    cur = {l: h for l in range(q)}
    while 2 * (k + s) <= top:
        tables.append(FibTable(k, 2 * (k + s), dict(cur)))
        if s == 1:
            cur = {l: _seed_stage2(p, k, l) for l in range(q)}
        elif k == 0:
            # M_{s+1} = p M_s + p^(s-1) (p-1)^2
            cur = {0: p * cur[0] + p ** (s - 1) * (p - 1) ** 2}
        else:
            cur = recursive_step(p, k, s, cur, variant)
        s += 1
    return tables


@dataclass(frozen=True)
class IntervalClass:
    kind: str
    t: int | None
    i_or_iprime: int | None
    lo: int
    hi: int

    def __contains__(self, l: int) -> bool:
        return self.lo <= l <= self.hi

    @property
    def label(self) -> str:
        parts = [self.kind]
        if self.t is not None:
            parts.append(f"t={self.t}")
        if self.i_or_iprime is not None:
            parts.append(f"i={self.i_or_iprime}")
        return ",".join(parts)


def _S(p: int, a: int, b: int) -> int:
    return repunit(p, a, b)


def interval_classes(p: int, k: int, s: int, structure: str | None = None) -> list[IntervalClass]:
    """Classes of offsets with equal M at stage s (k >= 2, s >= 3).

    ``structure`` is "growing" (the (a)-(f) families, used for s < k+2) or
    "frozen" (the kp families, used for s >= k+2); by default it follows s.
    """
    if k < 2 or s < 3:
        raise ValueError("interval classes are defined for k >= 2, s >= 3")
    if structure is None:
        structure = "growing" if s < k + 2 else "frozen"
    h = (p - 1) // 2
    out = [IntervalClass("a", None, None, 0, 0)]
    if structure == "growing":
        for i in range(s - 3):
            for t in range(1, p):
                out.append(IntervalClass("b", t, i, (t - 1) * _S(p, i, k - 1) + p**i, (t - 1) * _S(p, i + 1, k - 1) + p ** (i + 1) - 1))
        for t in range(1, p):
            if t != h:
                out.append(IntervalClass("c", t, None, (t - 1) * _S(p, s - 3, k - 1) + p ** (s - 3), t * _S(p, 0, k - 1)))
        out.append(IntervalClass("d", None, None, (h - 1) * _S(p, s - 3, k - 1) + p ** (s - 3), h * _S(p, s - 2, k - 1) - 1))
        for ip in range(1, s - 1):
            out.append(IntervalClass("e", None, ip, h * _S(p, ip, k - 1), h * _S(p, ip - 1, k - 1) - 1))
        out.append(IntervalClass("f", None, None, h * _S(p, 0, k - 1), h * _S(p, 0, k - 1)))
    elif structure == "frozen":
        for i in range(k - 1):
            for t in range(1, p):
                out.append(IntervalClass("b", t, i, (t - 1) * _S(p, i, k - 1) + p**i, (t - 1) * _S(p, i + 1, k - 1) + p ** (i + 1) - 1))
        for t in range(1, p):
            if t != h:
                out.append(IntervalClass("c", t, None, t * p ** (k - 1), t * _S(p, 0, k - 1)))
        for ip in range(1, k):
            out.append(IntervalClass("d", None, ip, h * _S(p, ip, k - 1), h * _S(p, ip - 1, k - 1) - 1))
        out.append(IntervalClass("e", None, None, h * _S(p, 0, k - 1), h * _S(p, 0, k - 1)))
    else:
        raise ValueError(f"unknown structure {structure!r}")
    return out


def is_partition(classes: list[IntervalClass], size: int) -> bool:
    cover = [0] * size
    for c in classes:
        if c.lo < 0 or c.hi >= size:
            return False
        for l in range(c.lo, c.hi + 1):
            cover[l] += 1
    return all(x == 1 for x in cover)


def classify(p: int, k: int, s: int, l: int, structure: str | None = None) -> IntervalClass:
    if not 0 <= l < p**k:
        raise ValueError(f"l={l} outside [0, {p**k})")
    for c in interval_classes(p, k, s, structure):
        if l in c:
            return c
    raise LookupError(f"l={l} is in no interval class at p={p}, k={k}, s={s}")


def frozen_constant(p: int, k: int, c: IntervalClass) -> int:
    """The class-dependent constant C in M = p^(s-2-k) (p-1)/2 (2(s-1)p^(k+1) - 2(s-k) + 3 + C)."""
    h = (p - 1) // 2
    S0 = _S(p, 0, k - 1)
    if c.kind == "a":
        return 0
    if c.kind == "b":
        lead = 2 * c.t * S0 if c.t <= h else (2 * c.t - 2 * p) * S0
        return lead - 2 * _S(p, 0, k - c.i_or_iprime - 2)
    if c.kind == "c":
        return 2 * c.t * S0 if c.t < h else (2 * c.t - 2 * p) * S0
    if c.kind == "d":
        return -(p**k) - 2 * _S(p, 1, k - 1) + 2 * _S(p, k - c.i_or_iprime + 1, k) - 1
    if c.kind == "e":
        return -(p**k) - 2 * _S(p, 1, k - 1) - 1
    raise ValueError(f"class {c.kind} has no frozen constant")


def _growing_value(p: int, s: int, c: IntervalClass) -> int:
    h = (p - 1) // 2
    base = 2 * (s - 1) * p ** (s - 1)
    t, i = c.t, c.i_or_iprime
    if c.kind == "a":
        v = base + 1
    elif c.kind == "b":
        tail = 2 * _S(p, 0, s - i - 4)
        v = base + 1 + 2 * t * _S(p, 0, s - 3) - tail if t <= h else base - 1 + (2 * t - 2 * p) * _S(p, 0, s - 3) - tail
    elif c.kind == "c":
        v = base + 1 + 2 * t * _S(p, 0, s - 3) if t < h else base - 1 + (2 * t - 2 * p) * _S(p, 0, s - 3)
    elif c.kind == "d":
        v = base + p ** (s - 2)
    elif c.kind == "e":
        v = base - 2 - p ** (s - 2) - 2 * _S(p, 1, s - 3) + 2 * _S(p, s - i - 1, s - 2)
    else:
        v = base - 2 - p ** (s - 2) - 2 * _S(p, 1, s - 3)
    return h * v


def closed_form_case(p: int, k: int, s: int, l: int) -> str:
    """Name of the closed-form case that covers (k, s, l)."""
    if k == 0:
        return "k=0"
    if k == 1:
        t = l
        return f"k=1,t={t}"
    if s <= 2:
        return f"seed s={s}"
    regime = "growing" if s < k + 2 else "frozen"
    return f"{regime}:{classify(p, k, s, l).label}"


def fib_closed_form(p: int, k: int, s: int, l: int) -> int:
    """M from the closed forms; the interval classes pick the case for k >= 2."""
    if s < 1:
        raise ValueError("stages start at 1")
    if not 0 <= l < p**k:
        raise ValueError(f"l={l} outside [0, {p**k})")
    h = (p - 1) // 2
    if s == 1:
        return h
    if k == 0:
        return h * (2 * (s - 1) * p ** (s - 1) - (2 * s - 3) * p ** (s - 2))
    if s == 2:
        return _seed_stage2(p, k, l)
    if k == 1:
        t = l
        extra = 0 if t < h else -2 * p
        return p ** (s - 3) * h * (2 * (s - 1) * p * p + 2 * t + extra - (2 * s - 5))
    c = classify(p, k, s, l)
    if s < k + 2:
        return _growing_value(p, s, c)
    base = 2 * (s - 1) * p ** (k + 1) - 2 * (s - k) + 3
    return p ** (s - 2 - k) * h * (base + frozen_constant(p, k, c))


@dataclass(frozen=True)
class Discrepancy:
    p: int
    k: int
    s: int
    l: int
    oracle: int
    closed_form: int | None
    formula_case: str

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "k": self.k,
            "s": self.s,
            "l": self.l,
            "oracle": self.oracle,
            "closed_form": self.closed_form,
            "formula_case": self.formula_case,
        }


def closed_form_discrepancies(p: int, k: int, s: int) -> list[Discrepancy]:
    """Offsets where the closed form disagrees with the DP oracle (or has no case)."""
    truth = fib_dp(p, k, s)
    out = []
    for l, m in truth.items():
        try:
            case = closed_form_case(p, k, s, l)
            value = fib_closed_form(p, k, s, l)
        except LookupError as exc:
            out.append(Discrepancy(p, k, s, l, m, None, f"unclassified: {exc}"))
            continue
        if value != m:
            out.append(Discrepancy(p, k, s, l, m, value, case))
    return out


def example_discrepancies() -> list[Discrepancy]:
    """Cells of the printed p=5, k=2, s=3 example that disagree with the oracle."""
    truth = fib_dp(5, 2, 3)
    out = []
    for lo, hi, value in EXAMPLE_P5_K2_S3:
        for l in range(lo, hi + 1):
            oracle = truth.get(l)
            if oracle is None:
                out.append(Discrepancy(5, 2, 3, l, -1, value, "example: offset out of range"))
            elif oracle != value:
                out.append(Discrepancy(5, 2, 3, l, oracle, value, f"example: [{lo}..{hi}]"))
    return out
