"""Descent polynomials F(q) = sum over paths of q^des, three ways.

* ``eulerian_bruteforce`` enumerates paths and compares blocks.
* ``eulerian_dp`` aggregates the same raw block comparisons over states
  (V offset with its incoming t, or W offset), so it reaches large floors.
* ``eulerian_inductive`` builds each floor from the one two below using the
  descent rules only (no block comparisons).

``initial_closed_form`` returns the tabulated polynomials for the first
stages; the data lives in ``initial_tables``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .diagram import DiagramParams, VertexLabel
from .initial_tables import (  # noqa: F401
    NonIntegralEntry,
    NoTabulatedForm,
    initial_closed_form,
    matching_entries,
    table_entries,
)
from .paths import enumerate_paths
from .poly import ONE, ZERO, IntPolynomial
from .stats import des, descent_at_even

THRESHOLDS = ("adjudicated", "printed")


@dataclass(frozen=True)
class FloorPolynomials:
    floor: int
    class_k: int
    by_l: dict[int, IntPolynomial] = field(hash=False)

    def rows(self) -> list[dict]:
        return [
            {"floor": self.floor, "k": self.class_k, "l": l, "coeffs": poly.to_json()}
            for l, poly in sorted(self.by_l.items())
        ]


def eulerian_bruteforce(v: VertexLabel) -> IntPolynomial:
    counts: dict[int, int] = {}
    for path in enumerate_paths(v):
        d = des(path)
        counts[d] = counts.get(d, 0) + 1
    if not counts:
        return ZERO
    return IntPolynomial(counts.get(i, 0) for i in range(max(counts) + 1))


@lru_cache(maxsize=None)
def _dp_states(p: int, k: int, s: int):
    """State tables after stage s.

    Returns (V, W): V maps (l, t) -> polynomial for paths entering V offset l
    through predecessor t; W maps offset -> polynomial on the W floor of stage s
    (empty for s = 1).
    """
    q = p**k
    h = (p - 1) // 2
    if s == 1:
        seed = {(l, t): (IntPolynomial((0, 1)) if t < h else ONE) for l in range(q) for t in range(p - 1)}
        return seed, {}
    prev_v, _ = _dp_states(p, k, s - 1)
    w: dict[int, IntPolynomial] = {}
    for (l, t), poly in prev_v.items():
        for beta in range(p):
            n = (p - 1) * l + beta
            # B^{2s-2} = (q t, ...) against B^{2s-1} = (q(p-1) - n, n); position 2 is exempt
            fire = s - 1 >= 2 and q * t > q * (p - 1) - n
            key = p * l + beta
            w[key] = w.get(key, ZERO) + (poly.shift() if fire else poly)
    v: dict[tuple[int, int], IntPolynomial] = {}
    for lp, poly in w.items():
        a, beta = divmod(lp, p)
        m = q * (p - 1) - ((p - 1) * a + beta)
        t, l = divmod(lp, q)
        v[(l, t)] = poly.shift() if m > q * t else poly
    return v, w


def eulerian_dp(p: int, k: int, floor: int) -> dict[int, IntPolynomial]:
    """Polynomials for every class-k vertex on a floor, keyed by offset."""
    if floor < 2 * k + 2:
        raise ValueError("class-k vertices start on floor 2k+2")
    q = p**k
    rel = floor - 2 * k
    if rel % 2 == 0:
        states, _ = _dp_states(p, k, rel // 2)
        out = {l: ZERO for l in range(q)}
        for (l, _t), poly in states.items():
            out[l] = out[l] + poly
        return out
    s = (rel + 1) // 2
    if s == 1:
        raise ValueError("no class-k vertex on floor 2k+1")
    _, w = _dp_states(p, k, s)
    return dict(sorted(w.items()))


def odd_exponent(p: int, k: int, l: int, t_prime: int, threshold: str = "adjudicated") -> int:
    """1 when the path entering V offset l via t' has a descent at 2s-1.

    The adjudicated split is 2l < p^k - 1; the printed method uses l < p^k (p-1)/2.
    """
    h = (p - 1) // 2
    if threshold == "adjudicated":
        below = 2 * l < p**k - 1
    elif threshold == "printed":
        below = 2 * l < p**k * (p - 1)
    else:
        raise ValueError(f"unknown threshold {threshold!r}")
    last = h if below else h - 1
    return 1 if t_prime <= last else 0


def eulerian_inductive(
    params: DiagramParams, k: int, up_to_floor: int | None = None, threshold: str = "adjudicated"
) -> list[FloorPolynomials]:
    """Floor tables from 2k+2 up to ``up_to_floor`` using only the descent rules."""
    p = params.p
    top = params.max_floor if up_to_floor is None else up_to_floor
    if top > params.max_floor:
        raise ValueError("up_to_floor exceeds max_floor")
    q = p**k
    h = (p - 1) // 2
    seed = IntPolynomial((h, h))
    floors: list[FloorPolynomials] = []
    if top < 2 * k + 2:
        return floors
    floors.append(FloorPolynomials(2 * k + 2, k, {l: seed for l in range(q)}))
    if top < 2 * k + 3:
        return floors
    w_prev = {lp: seed for lp in range(q * p)}
    floors.append(FloorPolynomials(2 * k + 3, k, dict(w_prev)))
    s = 2
    while True:
        f_even = 2 * (k + s)
        if f_even > top:
            break
        v_polys = {}
        for l in range(q):
            acc = ZERO
            for tp in range(p):
                acc = acc + w_prev[l + q * tp].shift(odd_exponent(p, k, l, tp, threshold))
            v_polys[l] = acc
        floors.append(FloorPolynomials(f_even, k, v_polys))
        if f_even + 1 > top:
            break
        w_next = {}
        for l in range(q):
            for beta in range(p):
                acc = ZERO
                for tp in range(p):
                    e = odd_exponent(p, k, l, tp, threshold) + (1 if descent_at_even(p, k, l, beta, tp) else 0)
                    acc = acc + w_prev[l + q * tp].shift(e)
                w_next[p * l + beta] = acc
        floors.append(FloorPolynomials(f_even + 1, k, w_next))
        w_prev = w_next
        s += 1
    return floors


@dataclass(frozen=True)
class TableCheck:
    p: int
    k: int
    floor: int
    l: int
    status: str  # match, mismatch, non-integral, uncovered
    entries: tuple[str, ...]
    oracle: IntPolynomial
    printed: IntPolynomial | None

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "k": self.k,
            "floor": self.floor,
            "l": self.l,
            "status": self.status,
            "entries": list(self.entries),
            "oracle": self.oracle.to_json(),
            "printed": None if self.printed is None else self.printed.to_json(),
        }


def compare_initial_tables(p: int, k: int, floor: int) -> list[TableCheck]:
    """Check every printed initial-stage entry on a floor against the state DP."""
    oracle = eulerian_dp(p, k, floor)
    out = []
    for l, truth in sorted(oracle.items()):
        hits = matching_entries(p, k, floor, l)
        keys = tuple(f"{e.key}@t={t}" for e, t in hits)
        if not hits:
            out.append(TableCheck(p, k, floor, l, "uncovered", keys, truth, None))
            continue
        try:
            printed = initial_closed_form(p, k, floor, l)
        except NonIntegralEntry:
            out.append(TableCheck(p, k, floor, l, "non-integral", keys, truth, None))
            continue
        status = "match" if printed == truth else "mismatch"
        out.append(TableCheck(p, k, floor, l, status, keys, truth, printed))
    return out
