"""Exhaustive cross-check of the closed forms against the matrix oracles."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterator

from . import jmrealize as jm
from .grading import Family, GradingSpec, GradingError
from .levi import lambda_profile, levi_blocks, local_system_count, symbols_for_orbit, tiling_identity
from .orbits import Orbit, SplitTag, dim_g0, dim_g2, enumerate_orbits, xi_value
from .tableaux import DimensionVector, from_tableau, theta, theta_inv

Mutator = Callable[[jm.JMTriple], jm.JMTriple]


@dataclass
class Failure:
    family: str
    m: int
    delta: list[int]
    tableau: dict
    split: str
    problem: str

    def reproducer(self) -> str:
        return (
            f"family={self.family} m={self.m} delta={','.join(map(str, self.delta))} "
            f"split={self.split}: {self.problem}\n  tableau: {self.tableau}"
        )


@dataclass
class SweepResult:
    orbits_checked: int = 0
    gradings_checked: int = 0
    failures: list[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def iter_gradings(max_m: int, max_total_dim: int) -> Iterator[tuple[GradingSpec, DimensionVector]]:
    """Every grading with all graded pieces nonzero, smallest total dimension first."""
    found = []
    for fam in Family:
        for m in range(1, max_m + 1):
            try:
                spec = GradingSpec(fam, m)
            except GradingError:
                continue
            for pos in product(range(1, max_total_dim + 1), repeat=m):
                total = 2 * sum(pos) - (0 if spec.is_even else pos[-1])
                if total > max_total_dim:
                    continue
                if fam is Family.ODD_SP and pos[-1] % 2:
                    continue
                found.append((total, list(Family).index(fam), m, pos, spec))
    for total, _, m, pos, spec in sorted(found, key=lambda x: x[:4]):
        yield spec, DimensionVector.from_positive(spec, pos)


def check_orbit(o: Orbit, mutate: Mutator | None = None) -> list[str]:
    spec, c = o.spec, o.coeffs
    problems = []
    split = o.split.value
    t = jm.build_jm(spec, c, split)
    if mutate is not None:
        t = mutate(t)
    rep = jm.verify_jm(t)
    problems += rep.failures
    if jm.orbit_dimension_by_eigenvalues(t) != o.dimension:
        problems.append("closed-form dimension differs from the ad(H) eigenvalue count")
    if jm.orbit_dimension_by_centralizer(t) != o.dimension:
        problems.append("closed-form dimension differs from the centralizer count")
    if jm.g0_dimension(t) != dim_g0(spec, o.delta):
        problems.append("degree-0 subalgebra has the wrong dimension")
    if jm.jordan_from_ranks(t) != list(o.jordan):
        problems.append("Jordan type differs from the rank-drop partition")
    if jm.rank_tableau_from_matrices(t) != o.rank_tableau:
        problems.append("rank tableau differs from the matrix ranks")
    if from_tableau(o.tableau) != c or theta_inv(theta(o.tableau)) != o.tableau:
        problems.append("tableau round trip failed")
    if not jm.check_isometry(spec, c, split):
        problems.append("base change is not an isometry")
    if spec.is_even and not jm.is_permutation(jm.base_change(spec, c)):
        problems.append("even-case base change is not a permutation")
    if o.parity_defined:
        iso = jm.isotropic_subspace(t)
        if not iso.ok:
            problems.append("E-image isotropic subspace differs from the top-half span")
        elif jm.isotropic_parity_count(t, iso.labels) % 2 != xi_value(spec, c, o.split) % 2:
            problems.append("isotropic label count disagrees with the parity invariant")
    if o.split is not SplitTag.NONE and o.delta[0] % 2:
        problems.append("split orbit with odd degree-0 dimension")
    if not c.is_zero():
        if not tiling_identity(c):
            problems.append("Levi blocks do not tile V")
        last = levi_blocks(c)[-1]
        if last.kind == "Sp" and last.size % 2:
            problems.append("symplectic Levi factor of odd size")
        if sum(last.partition) != last.size:
            problems.append("restricted partition does not fill its factor")
        lambda_profile(c)
    if len(symbols_for_orbit(o)) != local_system_count(o):
        problems.append("symbol count differs from the local-system count")
    return problems


def check_grading(spec: GradingSpec, delta: DimensionVector, mutate: Mutator | None = None,
                  result: SweepResult | None = None) -> SweepResult:
    result = result if result is not None else SweepResult()
    orbits = enumerate_orbits(spec, delta)
    result.gradings_checked += 1

    def fail(o, msg):
        result.failures.append(Failure(spec.family.value, spec.m, delta.positive,
                                       o.tableau.to_json() if o else {}, o.split.value if o else "none", msg))

    if orbits and max(o.dimension for o in orbits) != dim_g2(spec, delta):
        fail(None, "largest orbit is not dense in the degree-2 piece")
    ranks = {}
    for o in orbits:
        key = tuple(v for _, v in o.rank_tableau.entries)
        if ranks.setdefault(key, o.coeffs) != o.coeffs:
            fail(o, "two coefficient functions share a rank tableau")
    for o in orbits:
        result.orbits_checked += 1
        for msg in check_orbit(o, mutate):
            fail(o, msg)
    return result


def run_sweep(max_m: int, max_total_dim: int, mutate: Mutator | None = None,
              stop_at_first: bool = True) -> SweepResult:
    result = SweepResult()
    for spec, delta in iter_gradings(max_m, max_total_dim):
        check_grading(spec, delta, mutate, result)
        if stop_at_first and result.failures:
            break
    return result
