"""Compressed paths (standard p-Young tableaux) ending at a vertex.

A class-k path starts at the class -1 vertex on floor 2k+1 with index
``start_index``.  The prefix below that vertex is unique, so the prefix is
recorded only through ``start_index`` and every compressed path stands for
exactly one full path from floor 1.  After the start come the blocks
B^2, ..., B^d, one per floor, and only their horizontal parts are stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .core import Block, HookPartition, add_block
from .diagram import VertexLabel, minus_vertex, predecessors, v_vertex, w_vertex


class InconsistentPathError(ValueError):
    pass


@dataclass(frozen=True)
class BlockAt:
    """A block together with its position along the path (position 1 is the prefix)."""

    position: int
    block: Block


@dataclass(frozen=True)
class Path:
    p: int
    class_k: int
    start_index: int
    m_seq: tuple[int, ...]
    end: VertexLabel

    @property
    def length(self) -> int:
        """Index of the last block; 1 when the path stops at the start vertex."""
        return len(self.m_seq) + 1

    def to_dict(self) -> dict:
        return {"start": self.start_index, "m": list(self.m_seq), "end": self.end.to_dict()}


def start_vertex(p: int, k: int, i: int) -> VertexLabel:
    return minus_vertex(p, 2 * k + 1, i)


def walk(p: int, k: int, start_index: int, m_seq: tuple[int, ...]) -> list[tuple[Block, VertexLabel]]:
    """Follow the diagram from the start vertex, one block per entry of m_seq."""
    q = p**k
    if not 0 <= start_index < q * (p - 1):
        raise InconsistentPathError(f"start index {start_index} out of range")
    steps: list[tuple[Block, VertexLabel]] = []
    t2, l = divmod(start_index, q)
    for pos, m in enumerate(m_seq, start=2):
        if pos == 2:
            if m != q * t2:
                raise InconsistentPathError(f"m_2={m} does not match start index {start_index}")
            steps.append((Block(m, q * (p - 2 - t2)), v_vertex(p, k, 1, l)))
            continue
        s = pos // 2
        if pos % 2 == 1:
            n = q * (p - 1) - m
            # n = (p-1) l + beta with 0 <= beta <= p-1
            if n < 0 or not (0 <= n - (p - 1) * l <= p - 1):
                raise InconsistentPathError(f"m_{pos}={m} is not a legal odd-position block")
            beta = n - (p - 1) * l
            l = p * l + beta
            steps.append((Block(m, n), w_vertex(p, k, s + 1, l)))
        else:
            t, rem = divmod(m, q)
            if rem or not 0 <= t <= p - 1 or l // q != t:
                raise InconsistentPathError(f"m_{pos}={m} is not a legal even-position block")
            l = l % q
            steps.append((Block(m, q * (p - 1 - t)), v_vertex(p, k, s, l)))
    return steps


def blocks_of(path: Path) -> list[BlockAt]:
    """B^2, ..., B^d with both parts, checked against the end vertex."""
    steps = walk(path.p, path.class_k, path.start_index, path.m_seq)
    last = steps[-1][1] if steps else start_vertex(path.p, path.class_k, path.start_index)
    if (last.floor, last.class_k, last.l_index) != (path.end.floor, path.end.class_k, path.end.l_index):
        if not (path.end.class_k == -1 and not steps and last.index == path.end.index):
            raise InconsistentPathError("path does not reach its end vertex")
    return [BlockAt(pos, b) for pos, (b, _) in enumerate(steps, start=2)]


def rewalk(path: Path) -> HookPartition:
    """Re-add every block to the start hook."""
    hook = start_vertex(path.p, path.class_k, path.start_index).hook
    for ba in blocks_of(path):
        hook = add_block(hook, ba.block)
    return hook


def _class_minus_k(v: VertexLabel) -> int:
    # class -1 vertices on floors 2k+1 and 2k+2 hang off the class-k start
    return (v.floor - 1) // 2


def enumerate_paths(v: VertexLabel) -> Iterator[Path]:
    """Every compressed path ending at v.

    Order: depth first from the end, ascending t at each step; at the
    bottom this is ascending start index.
    """
    p = v.p
    if v.class_k == -1:
        yield Path(p, _class_minus_k(v), v.index, (), v)
        return
    k = v.class_k

    def back(u: VertexLabel, suffix: tuple[int, ...]) -> Iterator[tuple[int, tuple[int, ...]]]:
        preds = predecessors(u)
        if u.is_even and u.stage_s == 1:
            for w, b in preds:
                yield w.index, (b.horiz,) + suffix
            return
        for w, b in preds:
            yield from back(w, (b.horiz,) + suffix)

    for start, m_seq in back(v, ()):
        yield Path(p, k, start, m_seq, v)


@lru_cache(maxsize=None)
def _count_table(p: int, k: int, floor: int) -> tuple[int, ...]:
    """Path counts for every class-k vertex on a floor, built floor by floor."""
    q = p**k
    if floor == 2 * k + 1:
        return (1,) * (q * (p - 1))
    below = _count_table(p, k, floor - 1)
    if floor == 2 * k + 2:
        return tuple(sum(below[q * t + l] for t in range(p - 1)) for l in range(q))
    if floor % 2 == 0:
        return tuple(sum(below[l + q * t] for t in range(p)) for l in range(q))
    return tuple(below[lp // p] for lp in range(q * p))


def count_paths(v: VertexLabel) -> int:
    """Number of compressed paths ending at v, by dynamic programming."""
    if v.class_k == -1:
        return 1
    return _count_table(v.p, v.class_k, v.floor)[v.l_index]


@lru_cache(maxsize=None)
def prestage_multiplicity(p: int, floor: int, i: int) -> int:
    """Number of full paths from floor 1 to the class -1 vertex (floor, i)."""
    if floor == 1:
        return 1
    v = minus_vertex(p, floor, i)
    return sum(prestage_multiplicity(p, u.floor, u.index) for u, _ in predecessors(v))


def count_paths_weighted(v: VertexLabel) -> int:
    """Full paths from floor 1: each compressed path weighted by its prefix multiplicity."""
    if v.class_k == -1:
        return prestage_multiplicity(v.p, v.floor, v.index)
    k = v.class_k
    return sum(prestage_multiplicity(v.p, 2 * k + 1, path.start_index) for path in enumerate_paths(v))


def expected_count(p: int, k: int, s: int, even: bool = True) -> int:
    """(p-1) p^(s-1) on V vertices of stage s, (p-1) p^(s-2) on W vertices."""
    return (p - 1) * p ** (s - 1) if even else (p - 1) * p ** (s - 2)


__all__ = [
    "BlockAt",
    "InconsistentPathError",
    "Path",
    "blocks_of",
    "count_paths",
    "count_paths_weighted",
    "enumerate_paths",
    "expected_count",
    "prestage_multiplicity",
    "rewalk",
    "start_vertex",
]
