"""Hook partitions, growth blocks, dominance order and base-p index helpers."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate, zip_longest


class IncomparableError(ValueError):
    """Raised when two partitions of different size are compared."""


@dataclass(frozen=True, order=True)
class HookPartition:
    """The hook (arm, 1^leg): one row of ``arm`` boxes plus ``leg`` boxes below it."""

    arm: int
    leg: int = 0

    def __post_init__(self) -> None:
        if self.arm < 0 or self.leg < 0:
            raise ValueError("arm and leg must be nonnegative")
        if self.arm == 0 and self.leg > 0:
            raise ValueError("a nonempty hook needs a first row")

    @classmethod
    def from_size_index(cls, size: int, index: int) -> "HookPartition":
        """Build (size - index, 1^index)."""
        if size == 0 and index == 0:
            return cls(0, 0)
        if not 0 <= index < size:
            raise ValueError(f"index {index} out of range for size {size}")
        return cls(size - index, index)

    @property
    def size(self) -> int:
        return self.arm + self.leg

    @property
    def parts(self) -> tuple[int, ...]:
        if self.arm == 0:
            return ()
        return (self.arm,) + (1,) * self.leg

    def __str__(self) -> str:
        if self.arm == 0:
            return "()"
        if self.leg == 0:
            return f"({self.arm})"
        return f"({self.arm},1^{self.leg})"


@dataclass(frozen=True)
class Block:
    """B_{m,n}: ``horiz`` boxes added to the first row, ``vert`` boxes to the column."""

    horiz: int
    vert: int

    def __post_init__(self) -> None:
        if self.horiz < 0 or self.vert < 0:
            raise ValueError("block parts must be nonnegative")

    @property
    def size(self) -> int:
        return self.horiz + self.vert

    def to_list(self) -> list[int]:
        return [self.horiz, self.vert]


EMPTY_BLOCK = Block(0, 0)


@dataclass(frozen=True)
class IndexSplit:
    """l = alpha * p + beta with 0 <= beta < p."""

    alpha: int
    beta: int

    def value(self, p: int) -> int:
        return self.alpha * p + self.beta


def dominates(lhs, rhs) -> bool:
    """Dominance order on partitions of equal size.

    Accepts HookPartition values or plain part sequences.
    """
    a = lhs.parts if isinstance(lhs, HookPartition) else tuple(lhs)
    b = rhs.parts if isinstance(rhs, HookPartition) else tuple(rhs)
    if sum(a) != sum(b):
        raise IncomparableError(f"sizes differ: {sum(a)} vs {sum(b)}")
    pairs = zip_longest(a, b, fillvalue=0)
    return all(x >= y for x, y in accumulate(pairs, lambda s, ab: (s[0] + ab[0], s[1] + ab[1])))


def add_block(base: HookPartition, b: Block) -> HookPartition:
    return HookPartition(base.arm + b.horiz, base.leg + b.vert)


def remove_block(top: HookPartition, b: Block) -> HookPartition:
    return HookPartition(top.arm - b.horiz, top.leg - b.vert)


def repunit(p: int, lo: int, hi: int) -> int:
    """Sum of p**i for lo <= i <= hi (zero when the range is empty)."""
    if hi < lo:
        return 0
    lo = max(lo, 0)
    return (p ** (hi + 1) - p**lo) // (p - 1)


def j_number(p: int, k: int, t: int) -> int:
    """j^k_t = t * (1 + p + ... + p^(k-1)).

    Defined for k >= 1; k = 0 returns 0, which is the empty sum.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if not 0 <= t <= p - 1:
        raise ValueError(f"t={t} outside [0, {p - 1}]")
    return t * (p**k - 1) // (p - 1)


def split_base_p(l: int, p: int) -> IndexSplit:
    alpha, beta = divmod(l, p)
    return IndexSplit(alpha, beta)


def j_window(p: int, k: int, l: int) -> tuple[int, bool]:
    """Locate l among the j^k_t values.

    Returns (t, True) when l == j^k_t and (t, False) when j^k_{t-1} < l < j^k_t.
    The last window is closed at p^k - 1, which equals j^k_{p-1}.
    """
    if k < 1:
        if l != 0:
            raise ValueError("class 0 has the single index 0")
        return 0, True
    if not 0 <= l < p**k:
        raise ValueError(f"l={l} outside [0, {p**k})")
    step = (p**k - 1) // (p - 1)
    t, rem = divmod(l, step)
    if rem == 0:
        return t, True
    return t + 1, False


def is_odd_prime(p: int) -> bool:
    if not isinstance(p, int) or p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True
