"""Coefficient functions, symmetric tableaux and rank tableaux.

A coefficient function assigns a multiplicity to each <tau>-orbit of boxes.
The symmetric tableau and the rank tableau are two further encodings of the
same data; the maps between the three are bijections.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping

from .grading import Box, GradingError, GradingSpec, Family, canonical, supp


class TableauError(ValueError):
    pass


@dataclass(frozen=True)
class DimensionVector:
    spec: GradingSpec
    entries: tuple[tuple[int, int], ...]  # (index, dim) pairs, descending index

    @classmethod
    def from_positive(cls, spec: GradingSpec, values: Iterable[int]) -> "DimensionVector":
        """Build from the positive side, listed with the largest index first."""
        values = [int(v) for v in values]
        pos = spec.positive_indices
        if len(values) != len(pos):
            raise TableauError(
                f"{spec.family.value} with m={spec.m} needs {len(pos)} dimensions "
                f"(for indices {', '.join(map(str, pos))}), got {len(values)}"
            )
        if any(v < 0 for v in values):
            raise TableauError("dimensions must be non-negative")
        d = dict(zip(pos, values))
        if spec.family is Family.ODD_SP and d[0] % 2:
            raise TableauError("the degree-0 dimension must be even in the odd symplectic family")
        return cls(spec, tuple((i, d[abs(i)]) for i in spec.indices))

    @cached_property
    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.as_dict.get(i, 0)

    @property
    def positive(self) -> list[int]:
        return [self[i] for i in self.spec.positive_indices]

    @property
    def total(self) -> int:
        return sum(v for _, v in self.entries)


@dataclass(frozen=True)
class CoefficientFunction:
    spec: GradingSpec
    values: tuple[int, ...]  # aligned with spec.orbits

    def __post_init__(self):
        if len(self.values) != len(self.spec.orbits):
            raise TableauError("coefficient vector has the wrong length")
        if any(v < 0 for v in self.values):
            raise TableauError("coefficients must be non-negative")

    @classmethod
    def from_boxes(cls, spec: GradingSpec, data: Mapping[Box, int]) -> "CoefficientFunction":
        """Build from box values; any member of an orbit may be named."""
        vals = [0] * len(spec.orbits)
        seen: dict[int, int] = {}
        for b, v in data.items():
            b = Box(*b)
            n = spec.orbit_of.get(b)
            if n is None:
                spec.check_box(b)
            if n in seen and seen[n] != v:
                raise TableauError(f"conflicting values on the orbit of {b}")
            seen[n] = v
            vals[n] = v
        return cls(spec, tuple(vals))

    @classmethod
    def zero(cls, spec: GradingSpec) -> "CoefficientFunction":
        return cls(spec, (0,) * len(spec.orbits))

    def __call__(self, b: Box) -> int:
        return self.values[self.spec.orbit_of[Box(*b)]]

    def support_boxes(self) -> list[Box]:
        """Every box of the diagram with a nonzero value, in canonical order."""
        return [b for b in self.spec.boxes if self(b) > 0]

    def is_zero(self) -> bool:
        return not any(self.values)

    def as_box_dict(self) -> dict[Box, int]:
        return {orb[0]: v for orb, v in zip(self.spec.orbits, self.values) if v}


def dimension_vector(c: CoefficientFunction) -> DimensionVector:
    spec = c.spec
    d = {i: 0 for i in spec.indices}
    for b in c.support_boxes():
        for i in supp(spec, b):
            d[i] += c(b)
    return DimensionVector(spec, tuple((i, d[i]) for i in spec.indices))


# --- symmetric tableaux ------------------------------------------------------


def _cells(spec: GradingSpec) -> list[tuple[int, int]]:
    return [(i, j) for i in spec.indices for j in reversed(spec.indices) if j <= i]


@dataclass(frozen=True)
class SymmetricTableau:
    spec: GradingSpec
    entries: tuple[tuple[tuple[int, int], int], ...]

    @classmethod
    def from_dict(cls, spec: GradingSpec, data: Mapping[tuple[int, int], int]) -> "SymmetricTableau":
        for (i, j) in data:
            if i not in spec.index_set or j not in spec.index_set or i < j:
                raise TableauError(f"cell ({i},{j}) is outside the diagram")
        t = cls(spec, tuple((cell, int(data.get(cell, 0))) for cell in _cells(spec)))
        t.validate()
        return t

    @cached_property
    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.entries)

    def __getitem__(self, cell: tuple[int, int]) -> int:
        return self.as_dict.get(cell, 0)

    def validate(self) -> None:
        for (i, j), v in self.entries:
            if v < 0:
                raise TableauError(f"negative entry at ({i},{j})")
            if self[(-j, -i)] != v:
                raise TableauError(f"entries at ({i},{j}) and ({-j},{-i}) differ")
            if i + j == 0 and self.spec.mu_max == 1 and v % 2:
                raise TableauError(f"diagonal entry at ({i},{j}) must be even")

    def rows(self) -> list[tuple[int, list[int]]]:
        return [(i, [self[(i, j)] for j in reversed(self.spec.indices) if j <= i]) for i in self.spec.indices]

    def sort_key(self) -> tuple[int, ...]:
        return tuple(v for _, v in self.entries)

    def to_json(self) -> dict:
        return tableau_json(self.spec, self.as_dict)


@dataclass(frozen=True)
class RankTableau:
    spec: GradingSpec
    entries: tuple[tuple[tuple[int, int], int], ...]

    @classmethod
    def from_dict(cls, spec: GradingSpec, data: Mapping[tuple[int, int], int]) -> "RankTableau":
        return cls(spec, tuple((cell, int(data.get(cell, 0))) for cell in _cells(spec)))

    @cached_property
    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(self.entries)

    def __getitem__(self, cell: tuple[int, int]) -> int:
        return self.as_dict.get(cell, 0)

    def leq(self, other: "RankTableau") -> bool:
        return all(v <= other[cell] for cell, v in self.entries)

    def to_json(self) -> dict:
        return tableau_json(self.spec, self.as_dict)


def to_tableau(c: CoefficientFunction) -> SymmetricTableau:
    spec = c.spec
    data = {}
    for i, j in _cells(spec):
        v = c(Box(i, j, 0))
        if i + j == 0 and spec.mu_max == 1:
            v += c(Box(i, j, 1))
        data[(i, j)] = v
    return SymmetricTableau(spec, tuple(data.items()))


def from_tableau(t: SymmetricTableau) -> CoefficientFunction:
    t.validate()
    spec = t.spec
    data = {}
    for orb in spec.orbits:
        b = orb[0]
        v = t[(b.i, b.j)]
        if b.i + b.j == 0 and spec.mu_max == 1:
            v //= 2
        data[b] = v
    return CoefficientFunction.from_boxes(spec, data)


def theta(t: SymmetricTableau) -> RankTableau:
    spec = t.spec
    data = {}
    for i, j in _cells(spec):
        data[(i, j)] = sum(t[(u, v)] for u, v in _cells(spec) if u >= i and j >= v)
    return RankTableau(spec, tuple(data.items()))


def theta_inv(r: RankTableau) -> SymmetricTableau:
    spec = r.spec
    data = {}
    for i, j in _cells(spec):
        v = r[(i, j)] - r[(i + 2, j)] - r[(i, j - 2)] + r[(i + 2, j - 2)]
        if v < 0:
            raise TableauError(f"rank tableau has a negative second difference at ({i},{j})")
        data[(i, j)] = v
    for (i, j), v in r.entries:
        if r[(-j, -i)] != v:
            raise TableauError(f"rank tableau is not symmetric at ({i},{j})")
    return SymmetricTableau.from_dict(spec, data)


# --- enumeration ------------------------------------------------------------


def _orbit_profiles(spec: GradingSpec) -> list[dict[int, int]]:
    """For each orbit, how many of its boxes contain each index."""
    out = []
    for orb in spec.orbits:
        prof: dict[int, int] = {}
        for b in orb:
            for i in supp(spec, b):
                prof[i] = prof.get(i, 0) + 1
        out.append(prof)
    return out


def iter_coefficients(spec: GradingSpec, delta: DimensionVector) -> Iterator[CoefficientFunction]:
    if delta.spec != spec:
        raise TableauError("dimension vector belongs to another grading")
    profiles = _orbit_profiles(spec)
    n = len(profiles)
    # indices still coverable by orbits from position p onwards
    coverable = [set() for _ in range(n + 1)]
    for p in range(n - 1, -1, -1):
        coverable[p] = coverable[p + 1] | set(profiles[p])
    residual = dict(delta.as_dict)
    chosen = [0] * n

    def rec(p: int) -> Iterator[CoefficientFunction]:
        if p == n:
            if not any(residual.values()):
                yield CoefficientFunction(spec, tuple(chosen))
            return
        if any(v and i not in coverable[p] for i, v in residual.items()):
            return
        prof = profiles[p]
        top = min(residual[i] // w for i, w in prof.items())
        for v in range(top + 1):
            chosen[p] = v
            for i, w in prof.items():
                residual[i] -= v * w
            yield from rec(p + 1)
            for i, w in prof.items():
                residual[i] += v * w
        chosen[p] = 0

    yield from rec(0)


def enumerate_coefficients(spec: GradingSpec, delta: DimensionVector) -> list[CoefficientFunction]:
    return list(iter_coefficients(spec, delta))


def quiver_decomposition(spec: GradingSpec, orbit: Iterable[Box]) -> list[tuple[int, int]]:
    """One interval ``(low, high)`` per box of the orbit."""
    out = []
    for b in orbit:
        s = supp(spec, Box(*b))
        out.append((s[-1], s[0]))
    return sorted(out, reverse=True)


# --- serialisation ----------------------------------------------------------


def tableau_json(spec: GradingSpec, entries: Mapping[tuple[int, int], int]) -> dict:
    return {
        "family": spec.family.value,
        "m": spec.m,
        "entries": [[i, j, int(entries.get((i, j), 0))] for i, j in _cells(spec)],
    }


def parse_tableau_json(data: dict | str) -> SymmetricTableau:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        spec = GradingSpec(Family(data["family"]), int(data["m"]))
        cells: dict[tuple[int, int], int] = {}
        for row in data["entries"]:
            i, j, v = (int(x) for x in row)
            if (i, j) in cells and cells[(i, j)] != v:
                raise TableauError(f"cell ({i},{j}) given twice")
            cells[(i, j)] = v
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, (TableauError, GradingError)):
            raise
        raise TableauError(f"malformed tableau document: {exc}") from exc
    # entries may list only one of each mirrored pair
    full = dict(cells)
    for (i, j), v in cells.items():
        full.setdefault((-j, -i), v)
    return SymmetricTableau.from_dict(spec, full)
