"""Vertices and edges of the p-Bratteli diagram of hook partitions.

Floor 2r holds V_{-1} (the column-free prefix class) and V_k for 0 <= k <= r-1.
Floor 2r-1 holds W_{-1} and W_k for 0 <= k <= r-2.  A class-k vertex on floor
2r or 2r-1 has stage s = r - k.  Every vertex stands for the hook
(size - index, 1^index).
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import EMPTY_BLOCK, Block, HookPartition, add_block, is_odd_prime


class InvalidPrimeError(ValueError):
    def __init__(self, p):
        super().__init__("p must be an odd prime")
        self.p = p


def x_offset(p: int, k: int, s: int) -> int:
    """x^s_k = p^k (s p - (s + 1))."""
    return p**k * (s * p - (s + 1))


@dataclass(frozen=True)
class DiagramParams:
    p: int
    max_floor: int

    def __post_init__(self) -> None:
        if not is_odd_prime(self.p):
            raise InvalidPrimeError(self.p)
        if self.max_floor < 1:
            raise ValueError("max_floor must be positive")


@dataclass(frozen=True)
class VertexLabel:
    """One vertex: floor, class, size, index, stage and offset inside its subset.

    For class -1, ``stage_s`` is 0 and ``l_index`` equals ``index``.
    """

    p: int
    floor: int
    class_k: int
    size: int
    index: int
    stage_s: int
    l_index: int

    @property
    def hook(self) -> HookPartition:
        return HookPartition.from_size_index(self.size, self.index)

    @property
    def is_even(self) -> bool:
        return self.floor % 2 == 0

    @property
    def pre_stage(self) -> bool:
        """Class -1 vertices form the prefix that paths of every class share."""
        return self.class_k == -1

    def name(self) -> str:
        kind = "V" if self.is_even else "W"
        return f"{kind}[floor={self.floor},k={self.class_k},l={self.l_index}]"

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "floor": self.floor,
            "k": self.class_k,
            "s": self.stage_s,
            "l": self.l_index,
            "size": self.size,
            "index": self.index,
            "hook": str(self.hook),
        }


@dataclass(frozen=True)
class Edge:
    lower: VertexLabel
    upper: VertexLabel
    block: Block


def minus_vertex(p: int, floor: int, i: int) -> VertexLabel:
    r = (floor + 1) // 2
    size = p ** (r - 1) * (p - 1)
    if not 0 <= i < size:
        raise ValueError(f"class -1 index {i} out of range on floor {floor}")
    return VertexLabel(p, floor, -1, size, i, 0, i)


def v_vertex(p: int, k: int, s: int, l: int) -> VertexLabel:
    """V^{2(k+s)}_k with offset l, 0 <= l < p^k."""
    if k < 0 or s < 1 or not 0 <= l < p**k:
        raise ValueError(f"no V vertex for k={k}, s={s}, l={l}")
    size = p**k * (2 * s * p - (2 * s + 1))
    return VertexLabel(p, 2 * (k + s), k, size, x_offset(p, k, s) + l, s, l)


def w_vertex(p: int, k: int, s: int, l: int) -> VertexLabel:
    """W^{2(k+s)-1}_k with offset l, 0 <= l < p^(k+1), stage s >= 2."""
    if k < 0 or s < 2 or not 0 <= l < p ** (k + 1):
        raise ValueError(f"no W vertex for k={k}, s={s}, l={l}")
    size = p**k * ((2 * s - 1) * p - 2 * s)
    # x^s_k - p^k (p - 1) equals x^{s-1}_k
    index = x_offset(p, k, s) - p**k * (p - 1) + l
    return VertexLabel(p, 2 * (k + s) - 1, k, size, index, s, l)


def class_vertex(p: int, floor: int, k: int, l: int) -> VertexLabel:
    """Resolve (floor, class, offset) to a vertex label."""
    if k == -1:
        return minus_vertex(p, floor, l)
    r = (floor + 1) // 2
    s = r - k
    return v_vertex(p, k, s, l) if floor % 2 == 0 else w_vertex(p, k, s, l)


def classes_on_floor(floor: int) -> list[int]:
    """Class labels on a floor in the diagram's arrangement: -1, then descending k."""
    r = (floor + 1) // 2
    top = r - 1 if floor % 2 == 0 else r - 2
    return [-1] + list(range(top, -1, -1))


def subset_size(p: int, floor: int, k: int) -> int:
    r = (floor + 1) // 2
    if k == -1:
        return p ** (r - 1) * (p - 1)
    return p**k if floor % 2 == 0 else p ** (k + 1)


def subset(p: int, floor: int, k: int) -> list[VertexLabel]:
    """One subset, most dominant hook first (descending index)."""
    n = subset_size(p, floor, k)
    return [class_vertex(p, floor, k, l) for l in reversed(range(n))]


def _check_floor(params: DiagramParams, floor: int) -> None:
    if not 1 <= floor <= params.max_floor:
        raise ValueError(f"floor {floor} outside [1, {params.max_floor}]")


def vertices_on_floor(params: DiagramParams, floor: int) -> list[VertexLabel]:
    _check_floor(params, floor)
    out: list[VertexLabel] = []
    for k in classes_on_floor(floor):
        out.extend(subset(params.p, floor, k))
    return out


def _edges_up(p: int, v: VertexLabel) -> list[Edge]:
    """All edges leaving v towards floor v.floor + 1."""
    out = []
    up = v.floor + 1
    if v.class_k == -1:
        if v.floor % 2 == 1:
            r = (v.floor + 1) // 2
            out.append(Edge(v, minus_vertex(p, up, v.index), EMPTY_BLOCK))
            q = p ** (r - 1)
            t, l = divmod(v.index, q)
            out.append(Edge(v, v_vertex(p, r - 1, 1, l), Block(q * t, q * (p - 2 - t))))
        else:
            r = v.floor // 2
            q = p ** (r - 1)
            for t in range(p):
                n = v.index * (p - 1) + t
                out.append(Edge(v, minus_vertex(p, up, p * v.index + t), Block(q * (p - 1) ** 2 - n, n)))
        return out
    k, s, l = v.class_k, v.stage_s, v.l_index
    q = p**k
    if v.is_even:
        for beta in range(p):
            n = (p - 1) * l + beta
            out.append(Edge(v, w_vertex(p, k, s + 1, p * l + beta), Block(q * (p - 1) - n, n)))
    else:
        t, low = divmod(l, q)
        out.append(Edge(v, v_vertex(p, k, s, low), Block(q * t, q * (p - 1 - t))))
    return out


def edges_between(params: DiagramParams, lower_floor: int) -> list[Edge]:
    """Every edge from lower_floor to lower_floor + 1."""
    _check_floor(params, lower_floor)
    _check_floor(params, lower_floor + 1)
    out = []
    for v in vertices_on_floor(params, lower_floor):
        out.extend(_edges_up(params.p, v))
    return out


def successors(v: VertexLabel) -> list[tuple[VertexLabel, Block]]:
    return [(e.upper, e.block) for e in _edges_up(v.p, v)]


def predecessors(v: VertexLabel) -> list[tuple[VertexLabel, Block]]:
    """Lower endpoints of all edges into v, with their blocks."""
    p = v.p
    if v.floor < 2:
        raise ValueError("floor-1 vertices have no predecessors")
    down = v.floor - 1
    if v.class_k == -1:
        if v.is_even:
            return [(minus_vertex(p, down, v.index), EMPTY_BLOCK)]
        r = (v.floor + 1) // 2
        q = p ** (r - 2)
        i, t = divmod(v.index, p)
        n = i * (p - 1) + t
        return [(minus_vertex(p, down, i), Block(q * (p - 1) ** 2 - n, n))]
    k, s, l = v.class_k, v.stage_s, v.l_index
    q = p**k
    if v.is_even:
        if s == 1:
            return [
                (minus_vertex(p, down, q * t + l), Block(q * t, q * (p - 2 - t)))
                for t in range(p - 1)
            ]
        return [(w_vertex(p, k, s, l + q * t), Block(q * t, q * (p - 1 - t))) for t in range(p)]
    a, beta = divmod(l, p)
    n = (p - 1) * a + beta
    return [(v_vertex(p, k, s - 1, a), Block(q * (p - 1) - n, n))]


def edge_is_consistent(e: Edge) -> bool:
    return e.upper.floor == e.lower.floor + 1 and add_block(e.lower.hook, e.block) == e.upper.hook
