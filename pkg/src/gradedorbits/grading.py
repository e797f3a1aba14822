"""Index sets, boxes of the staircase diagram and the duality involution.

Boxes are stored as signed ``(i, j, k)`` triples so that every formula can be
written directly in terms of the grading indices.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple


class Family(enum.Enum):
    EVEN_SP = "even-sp"
    EVEN_SO = "even-so"
    ODD_SP = "odd-sp"
    ODD_O = "odd-o"
    ODD_SO = "odd-so-special"

    @property
    def is_even(self) -> bool:
        """True when the index set consists of odd integers (even cardinality)."""
        return self in (Family.EVEN_SP, Family.EVEN_SO)

    @property
    def eps(self) -> int:
        return -1 if self in (Family.EVEN_SP, Family.ODD_SP) else 1


class Box(NamedTuple):
    i: int
    j: int
    k: int = 0

    def __str__(self) -> str:
        return f"b({self.i},{self.j},{self.k})"


class GradingError(ValueError):
    pass


@dataclass(frozen=True)
class GradingSpec:
    family: Family
    m: int

    def __post_init__(self):
        if isinstance(self.family, str):
            object.__setattr__(self, "family", Family(self.family))
        if not isinstance(self.m, int) or self.m < 1:
            raise GradingError(f"m must be a positive integer, got {self.m!r}")
        if not self.family.is_even and self.m == 1:
            # the odd index set would be {0}
            raise GradingError("odd families need m >= 2 (index set of size 1)")

    @property
    def is_even(self) -> bool:
        return self.family.is_even

    @property
    def eps(self) -> int:
        return self.family.eps

    @property
    def mu_max(self) -> int:
        return 1 if (self.is_even and self.eps == 1) or (not self.is_even and self.eps == -1) else 0

    @cached_property
    def indices(self) -> tuple[int, ...]:
        top = 2 * self.m - 1 if self.is_even else 2 * self.m - 2
        return tuple(range(top, -top - 1, -2))

    @cached_property
    def index_set(self) -> frozenset[int]:
        return frozenset(self.indices)

    @property
    def positive_indices(self) -> tuple[int, ...]:
        """Indices listed as in the dimension-vector wire format (0 included for odd families)."""
        return tuple(i for i in self.indices if i >= 0)

    def mu(self, i: int, j: int) -> int:
        return self.mu_max if i + j == 0 else 0

    def check_box(self, b: Box) -> None:
        i, j, k = b
        if i not in self.index_set or j not in self.index_set or i < j:
            raise GradingError(f"{b} is outside the diagram for {self.family.value}, m={self.m}")
        if not 0 <= k <= self.mu(i, j):
            raise GradingError(f"{b} has an invalid copy index")

    @cached_property
    def boxes(self) -> tuple[Box, ...]:
        return tuple(
            Box(i, j, k)
            for i in self.indices
            for j in reversed(self.indices)
            if j <= i
            for k in range(self.mu(i, j) + 1)
        )

    @cached_property
    def box_position(self) -> dict[Box, int]:
        return {b: n for n, b in enumerate(self.boxes)}

    @cached_property
    def orbits(self) -> tuple[tuple[Box, ...], ...]:
        """The <tau>-orbits, each listed representative first, in canonical box order."""
        out = []
        for b in self.boxes:
            if canonical(self, b) == b:
                t = tau(self, b)
                out.append((b,) if t == b else (b, t))
        return tuple(out)

    @cached_property
    def orbit_of(self) -> dict[Box, int]:
        return {b: n for n, orb in enumerate(self.orbits) for b in orb}


def interval_indices(spec: GradingSpec) -> list[int]:
    return list(spec.indices)


def enumerate_boxes(spec: GradingSpec) -> list[Box]:
    return list(spec.boxes)


def tau(spec: GradingSpec, b: Box) -> Box:
    spec.check_box(b)
    i, j, k = b
    if i + j != 0:
        return Box(-j, -i, k)
    if spec.mu_max == 0:
        return b
    return Box(i, j, 1 - k)


def canonical(spec: GradingSpec, b: Box) -> Box:
    """Orbit representative: the member with i + j >= 0, and k = 0 on the diagonal."""
    t = tau(spec, b)
    if b.i + b.j > 0:
        return b
    if b.i + b.j < 0:
        return t
    return b if b.k == 0 else t


def tau_orbits(spec: GradingSpec) -> list[tuple[Box, ...]]:
    return list(spec.orbits)


def position(b: Box) -> int:
    """+1 above the principal diagonal, 0 on it, -1 below."""
    s = b.i + b.j
    return (s > 0) - (s < 0)


def supp(spec: GradingSpec, b: Box) -> list[int]:
    """Support of a box, descending."""
    spec.check_box(b)
    return [n for n in spec.indices if b.j <= n <= b.i]


def supp_top(spec: GradingSpec, b: Box) -> list[int]:
    s = supp(spec, b)
    if len(s) % 2:
        raise GradingError(f"top half undefined: {b} has odd support size {len(s)}")
    return [n for n in s if 2 * n >= b.i + b.j + 2]


def lambda_of(b: Box) -> int:
    return (b.i + b.j) // 2


def h_coeff(spec: GradingSpec, b: Box, ip: int) -> int:
    s = supp(spec, b)
    if ip not in s:
        raise GradingError(f"{ip} is not in the support of {b}")
    below = sum(1 for n in spec.indices if b.j <= n <= ip)
    above = sum(1 for n in spec.indices if ip <= n <= b.i)
    return below - above


def f_coeff(spec: GradingSpec, b: Box, ip: int) -> int:
    if ip not in supp(spec, b):
        raise GradingError(f"{ip} is not in the support of {b}")
    idx = spec.indices
    return sum(
        1
        for a in idx
        if ip <= a <= b.i
        for c in idx
        if b.j < c <= ip and a >= c
    )


def orbit_count(spec: GradingSpec) -> int:
    """Closed-form number of <tau>-orbits."""
    return spec.m * (spec.m + 1) if spec.is_even else spec.m * spec.m
