"""Orbit classification: enumeration, dimension, Jordan type, closure order, parity."""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable

from .grading import Box, Family, GradingSpec, lambda_of, position, supp, supp_top, tau
from .tableaux import (
    CoefficientFunction,
    DimensionVector,
    RankTableau,
    SymmetricTableau,
    TableauError,
    dimension_vector,
    iter_coefficients,
    theta,
    to_tableau,
)


class OrbitError(ValueError):
    pass


class Partition(tuple):
    """Multiset of positive integers kept in descending order."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = sorted((int(p) for p in parts), reverse=True)
        if any(p <= 0 for p in parts):
            raise ValueError("partition parts must be positive")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def multiplicities(self) -> list[tuple[int, int]]:
        """(part, multiplicity) with parts ascending."""
        return sorted(Counter(self).items())

    @property
    def totally_even(self) -> bool:
        return all(p % 2 == 0 and a % 2 == 0 for p, a in self.multiplicities())

    def __str__(self) -> str:
        if not self:
            return "0"
        return " ".join(f"{p}^{a}" for p, a in self.multiplicities())


class SplitTag(enum.Enum):
    NONE = "none"
    PRIME = "prime"
    DOUBLEPRIME = "doubleprime"


def dim_g2(spec: GradingSpec, delta: DimensionVector) -> int:
    d = delta
    if spec.is_even:
        out = (d[1] - spec.eps) * d[1] // 2
        return out + sum(d[i] * d[i + 2] for i in spec.indices if 1 <= i < 2 * spec.m - 1)
    return sum(d[i] * d[i + 2] for i in spec.indices if 0 <= i < 2 * spec.m - 2)


def dim_g0(spec: GradingSpec, delta: DimensionVector) -> int:
    out = sum(delta[i] ** 2 for i in spec.indices if i > 0)
    if not spec.is_even:
        out += delta[0] * (delta[0] - spec.eps) // 2
    return out


def splits(spec: GradingSpec, c: CoefficientFunction) -> bool:
    if spec.family is not Family.ODD_SO:
        raise OrbitError("splitting is only defined for the special orthogonal odd family")
    return all(c(Box(i, -i, 0)) == 0 for i in spec.indices if i >= 0)


def _formula_even(spec: GradingSpec, c: CoefficientFunction) -> Fraction:
    eps = spec.eps
    top = 2 * spec.m - 1
    delta = dimension_vector(c)
    boxes = c.support_boxes()
    sup = {b: set(supp(spec, b)) for b in boxes}
    lam = {b: lambda_of(b) for b in boxes}
    total = Fraction(sum(delta[i] ** 2 for i in spec.indices if i > 0))
    for b in boxes:
        for bp in boxes:
            cc = c(b) * c(bp)
            if lam[b] >= lam[bp]:
                total -= cc * sum(1 for i in sup[b] & sup[bp] if i > 0)
                total += cc * sum(1 for i in sup[b] if 0 < i < top and i + 2 in sup[bp])
            if tau(spec, b) != bp and 1 in sup[bp] and -1 in sup[b] and lam[bp] <= lam[b]:
                total += Fraction(cc, 2)
    for b in boxes:
        if -1 in sup[b] and lam[b] >= 0:
            total += Fraction(c(b) * (c(b) - 1), 2)
            total += Fraction((1 - eps) * c(b), 2)
    return total


def _formula_odd(spec: GradingSpec, c: CoefficientFunction) -> Fraction:
    eps = spec.eps
    top = 2 * spec.m - 2
    delta = dimension_vector(c)
    boxes = c.support_boxes()
    sup = {b: set(supp(spec, b)) for b in boxes}
    lam = {b: lambda_of(b) for b in boxes}
    total = Fraction(delta[0] * (delta[0] - eps), 2)
    total += sum(delta[i] ** 2 for i in spec.indices if i > 0)
    for b in boxes:
        for bp in boxes:
            if lam[b] < lam[bp]:
                continue
            cc = c(b) * c(bp)
            total += cc * sum(1 for i in sup[b] if 0 <= i < top and i + 2 in sup[bp])
            total -= cc * sum(1 for i in sup[b] & sup[bp] if i > 0)
            if 0 in sup[b] and 0 in sup[bp] and b != tau(spec, bp):
                total -= Fraction(cc, 2)
    for b in boxes:
        if 0 in sup[b] and lam[b] >= lambda_of(tau(spec, b)):
            total -= Fraction(c(b) * (c(b) - eps), 2)
    return total


def formula_dimension(spec: GradingSpec, c: CoefficientFunction) -> int:
    val = _formula_even(spec, c) if spec.is_even else _formula_odd(spec, c)
    if val.denominator != 1:
        raise OrbitError(f"dimension formula produced a non-integer {val}")
    return int(val)


def jordan_partition(spec: GradingSpec, c: CoefficientFunction) -> Partition:
    parts = []
    for b in c.support_boxes():
        parts += [len(supp(spec, b))] * c(b)
    return Partition(parts)


def xi_value(spec: GradingSpec, c: CoefficientFunction, split: SplitTag = SplitTag.NONE) -> int:
    """The integer whose residue mod 2 is the parity (the two halves differ by one)."""
    total = 0
    for b in c.support_boxes():
        total += c(b) * sum(1 for i in supp_top(spec, b) if i < 0)
    if not spec.is_even:
        total += sum(c(b) for b in c.support_boxes() if position(b) < 0 and 0 in supp_top(spec, b))
        if split is SplitTag.DOUBLEPRIME:
            total -= 1
    return total


@dataclass(frozen=True)
class Orbit:
    spec: GradingSpec
    coeffs: CoefficientFunction
    split: SplitTag = SplitTag.NONE

    def __post_init__(self):
        if self.split is not SplitTag.NONE and not (
            self.spec.family is Family.ODD_SO and splits(self.spec, self.coeffs)
        ):
            raise OrbitError("split tag on an orbit that does not split")

    @cached_property
    def tableau(self) -> SymmetricTableau:
        return to_tableau(self.coeffs)

    @cached_property
    def rank_tableau(self) -> RankTableau:
        return theta(self.tableau)

    @cached_property
    def dimension(self) -> int:
        return formula_dimension(self.spec, self.coeffs)

    @cached_property
    def jordan(self) -> Partition:
        return jordan_partition(self.spec, self.coeffs)

    @cached_property
    def delta(self) -> DimensionVector:
        return dimension_vector(self.coeffs)

    @property
    def parity_defined(self) -> bool:
        return self.spec.family in (Family.EVEN_SO, Family.ODD_SO) and self.jordan.totally_even

    @property
    def parity(self) -> str:
        return "undefined" if not self.parity_defined else parity(self)

    def sort_key(self):
        # dimension descending, then tableau entries in reverse lexicographic order
        return (-self.dimension, tuple(-v for v in self.tableau.sort_key()), list(SplitTag).index(self.split))


def enumerate_orbits(spec: GradingSpec, delta: DimensionVector) -> list[Orbit]:
    if spec.family is Family.ODD_SO and delta[0] < 1:
        raise OrbitError("the special orthogonal odd family needs a nonzero degree-0 space")
    out = []
    for c in iter_coefficients(spec, delta):
        if spec.family is Family.ODD_SO and splits(spec, c):
            out.append(Orbit(spec, c, SplitTag.PRIME))
            out.append(Orbit(spec, c, SplitTag.DOUBLEPRIME))
        else:
            out.append(Orbit(spec, c))
    out.sort(key=Orbit.sort_key)
    return out


def orbit_dimension(o: Orbit) -> int:
    return o.dimension


def jordan_type(o: Orbit) -> Partition:
    return o.jordan


def _check_same(o1: Orbit, o2: Orbit) -> None:
    if o1.spec != o2.spec or o1.delta != o2.delta:
        raise OrbitError("orbits belong to different gradings or dimension vectors")


def closure_leq(o1: Orbit, o2: Orbit) -> bool | None:
    """Tableau order; ``None`` between the two halves of one split orbit (not known)."""
    _check_same(o1, o2)
    if o1.coeffs == o2.coeffs and o1.split != o2.split:
        return None
    return o1.rank_tableau.leq(o2.rank_tableau)


@dataclass(frozen=True)
class HasseDiagram:
    orbits: tuple[Orbit, ...]
    edges: tuple[tuple[int, int], ...]      # (lower, upper) covering pairs
    unknown: tuple[tuple[int, int], ...]    # halves of a split orbit


def hasse_edges(spec: GradingSpec, delta: DimensionVector) -> HasseDiagram:
    orbits = enumerate_orbits(spec, delta)
    # order on distinct coefficient functions, then expand to split halves
    classes: list[CoefficientFunction] = []
    members: dict[CoefficientFunction, list[int]] = {}
    for n, o in enumerate(orbits):
        if o.coeffs not in members:
            classes.append(o.coeffs)
            members[o.coeffs] = []
        members[o.coeffs].append(n)
    ranks = {c: theta(to_tableau(c)) for c in classes}

    def lt(a, b):
        return a != b and ranks[a].leq(ranks[b])

    edges = []
    for a in classes:
        for b in classes:
            if lt(a, b) and not any(lt(a, x) and lt(x, b) for x in classes):
                edges += [(p, q) for p in members[a] for q in members[b]]
    unknown = [tuple(v) for v in members.values() if len(v) == 2]
    return HasseDiagram(tuple(orbits), tuple(sorted(edges)), tuple(unknown))


def _off_parity_boxes_empty(spec: GradingSpec, c: CoefficientFunction) -> bool:
    n = len(spec.indices) % 2
    return all(lambda_of(b) % 2 == n for b in c.support_boxes())


def parity(o: Orbit) -> str:
    if o.spec.family not in (Family.EVEN_SO, Family.ODD_SO):
        raise OrbitError("parity is defined only for the special orthogonal families")
    if not o.jordan.totally_even:
        raise OrbitError(f"parity needs a totally even Jordan type, got {o.jordan}")
    if not _off_parity_boxes_empty(o.spec, o.coeffs):
        raise OrbitError("totally even type but a box with lambda of the wrong parity is occupied")
    return "even" if xi_value(o.spec, o.coeffs, o.split) % 2 == 0 else "odd"


def g_conjugate(o1: Orbit, o2: Orbit) -> bool:
    _check_same(o1, o2)
    if o1.jordan != o2.jordan:
        return False
    if o1.spec.family in (Family.EVEN_SO, Family.ODD_SO) and o1.jordan.totally_even:
        return parity(o1) == parity(o2)
    return True


def orbit_name_map(orbits: Iterable[Orbit]) -> list[str]:
    """Display names O_d^k, k counting orbits of equal dimension in output order."""
    seen: Counter = Counter()
    assigned: dict[CoefficientFunction, int] = {}
    names = []
    for o in orbits:
        if o.coeffs not in assigned:
            seen[o.dimension] += 1
            assigned[o.coeffs] = seen[o.dimension]
        prefix = {SplitTag.PRIME: "'", SplitTag.DOUBLEPRIME: "''"}.get(o.split, "")
        names.append(f"{prefix}O_{o.dimension}^{assigned[o.coeffs]}")
    return names
