"""Descents, inversions and signs of paths, plus rule-based descent predictions.

Conventions for the first two blocks, which have different sizes from the rest:
  * position 1 is a descent exactly when B^2 has t < (p-1)/2;
  * position 2 is never compared.
From position 3 on, B^i > B^j means m_i > m_j and n_i < n_j.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import j_window
from .diagram import VertexLabel
from .paths import BlockAt, Path, blocks_of, enumerate_paths, walk


@dataclass(frozen=True)
class DescentProfile:
    descent_set: frozenset[int]
    des: int
    inv: int
    sign: int


def block_greater(a: BlockAt, b: BlockAt) -> bool:
    if a.position <= 2 or b.position <= 2:
        raise ValueError("positions 1 and 2 follow the first-block conventions, not the block order")
    if a.position >= b.position:
        raise ValueError("first block must come earlier")
    return a.block.horiz > b.block.horiz and a.block.vert < b.block.vert


def _first_position_fires(path: Path, blocks: list[BlockAt]) -> bool:
    if not blocks:
        return False
    t2 = blocks[0].block.horiz // path.p**path.class_k
    return t2 < (path.p - 1) // 2


def descent_set(path: Path) -> frozenset[int]:
    blocks = blocks_of(path)
    out = {1} if _first_position_fires(path, blocks) else set()
    tail = [b for b in blocks if b.position >= 3]
    for a, b in zip(tail, tail[1:]):
        if block_greater(a, b):
            out.add(a.position)
    return frozenset(out)


def inversion_set(path: Path) -> frozenset[tuple[int, int]]:
    """Pairs (i, j) with B^i > B^j, both positions >= 3.

    The position-1 convention contributes the pair (1, 2) when it fires.
    """
    blocks = blocks_of(path)
    out = {(1, 2)} if _first_position_fires(path, blocks) else set()
    tail = [b for b in blocks if b.position >= 3]
    for a, b in combinations(tail, 2):
        if block_greater(a, b):
            out.add((a.position, b.position))
    return frozenset(out)


def profile(path: Path) -> DescentProfile:
    ds = descent_set(path)
    inv = len(inversion_set(path))
    return DescentProfile(ds, len(ds), inv, -1 if inv % 2 else 1)


def des(path: Path) -> int:
    return len(descent_set(path))


def sign_balance(v: VertexLabel) -> int:
    """Sum of (-1)^inv over every path ending at v."""
    return sum(-1 if len(inversion_set(path)) % 2 else 1 for path in enumerate_paths(v))


def first_stage_descent_total(v: VertexLabel) -> tuple[int, set[int]]:
    """Total descents over paths into a stage-1 vertex, and the set of per-path values."""
    values = [des(path) for path in enumerate_paths(v)]
    return sum(values), set(values)


def predicted_descents_special(p: int, k: int, t: int, s: int) -> tuple[bool, bool]:
    """Descents at 2s-1 and 2s on the path that uses the same t at every step."""
    if not 0 <= t <= p - 1:
        raise ValueError(f"t={t} outside [0, {p - 1}]")
    if s < 2:
        raise ValueError("the rule covers stages s >= 2")
    h = (p - 1) // 2
    if t < h:
        return True, False
    if t == h:
        return False, False
    return False, True


def descent_at_odd(p: int, k: int, l: int, t_prime: int) -> bool:
    """Descent at 2s-1 for a path entering V offset l through the t' predecessor."""
    h = (p - 1) // 2
    if t_prime < h:
        return True
    if t_prime == h:
        return 2 * l < p**k - 1
    return False


def descent_at_even(p: int, k: int, l: int, beta_prime: int, t_prime: int) -> bool:
    """Descent at 2s for a path through V offset l (entered via t') leaving by beta'."""
    if k == 0:
        return t_prime >= p - beta_prime
    t, exact = j_window(p, k, l)
    if exact and beta_prime > t:
        return t_prime >= p - 1 - t
    return t_prime >= p - t


def predicted_descents_general(
    p: int, k: int, l: int, beta_prime: int, t_prime: int, t_class: int | None = None
) -> tuple[bool, bool]:
    """Rule-based descents at 2s-1 and 2s (stage s >= 2) for the path
    ... -> W(l + p^k t') -> V(l) -> W(p l + beta').

    For k >= 1 the 2s rule depends on the window j^k_{t-1} < l <= j^k_t; for
    k = 0 it is t' >= p - beta'.  ``t_class``, when given, must match the window.
    """
    if not 0 <= t_prime <= p - 1 or not 0 <= beta_prime <= p - 1:
        raise ValueError("t' and beta' must lie in [0, p-1]")
    if not 0 <= l < p**k:
        raise ValueError(f"l={l} outside [0, {p**k})")
    if t_class is not None and k >= 1 and j_window(p, k, l)[0] != t_class:
        raise ValueError(f"l={l} is not in window t={t_class}")
    return descent_at_odd(p, k, l, t_prime), descent_at_even(p, k, l, beta_prime, t_prime)


def raw_descents_around(path: Path, s: int) -> tuple[bool, bool]:
    """Raw block comparisons at 2s-1 and 2s for a path long enough to reach 2s+1."""
    ds = descent_set(path)
    return (2 * s - 1) in ds, (2 * s) in ds


def path_rule_parameters(path: Path, s: int) -> tuple[int, int, int]:
    """(l, beta', t') for stage s of a path reaching position 2s+1."""
    p, q = path.p, path.p**path.class_k
    blocks = {b.position: b.block for b in blocks_of(path)}
    t_prime = blocks[2 * s].horiz // q
    # n_{2s+1} = (p-1) l + beta', with l the V offset reached after B^{2s}
    steps = walk(p, path.class_k, path.start_index, path.m_seq[: 2 * s - 1])
    l = steps[-1][1].l_index
    beta_prime = blocks[2 * s + 1].vert - (p - 1) * l
    return l, beta_prime, t_prime
