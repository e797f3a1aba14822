"""Levi factorisation, local-system counts and symbols attached to an orbit."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .grading import Box, lambda_of, supp
from .orbits import Orbit, Partition
from .tableaux import CoefficientFunction, dimension_vector


class LeviError(ValueError):
    pass


@dataclass(frozen=True)
class LambdaProfile:
    values: tuple[int, ...]
    sizes: tuple[int, ...]   # n_1, ..., n_{l'}

    @property
    def ell(self) -> int:
        return len(self.values)

    @property
    def ell_prime(self) -> int:
        return (self.ell + 1) // 2


@dataclass(frozen=True)
class LeviFactor:
    kind: str   # "GL", "SO" or "Sp"
    size: int
    partition: Partition

    def __str__(self) -> str:
        return f"{self.kind}({self.size})"

    def to_json(self) -> dict:
        return {"kind": self.kind, "size": self.size, "partition": str(self.partition)}


@dataclass(frozen=True)
class Symbol:
    top: tuple[int, ...]
    bottom: tuple[int, ...]
    verified: bool = True
    trivial: bool = False

    @property
    def defect(self) -> int:
        return len(self.top) - len(self.bottom)

    def to_json(self) -> dict:
        if self.trivial:
            return {"trivial": True}
        out = {"symbol": [list(self.top), list(self.bottom)], "defect": self.defect}
        if not self.verified:
            out["unverified"] = True
        return out

    def __str__(self) -> str:
        if self.trivial:
            return "trivial"
        fmt = lambda xs: "{" + ",".join(map(str, xs)) + "}"
        return f"({fmt(self.top)},{fmt(self.bottom)})"


TRIVIAL = Symbol((), (), trivial=True)


def _occupied(c: CoefficientFunction) -> list[Box]:
    if c.is_zero():
        raise LeviError("the zero coefficient function has no lambda profile")
    return c.support_boxes()


def lambda_profile(c: CoefficientFunction) -> LambdaProfile:
    spec = c.spec
    boxes = _occupied(c)
    values = tuple(sorted({lambda_of(b) for b in boxes}))
    ellp = (len(values) + 1) // 2
    sizes = tuple(
        sum(c(b) * len(supp(spec, b)) for b in boxes if lambda_of(b) == lam)
        for lam in values[:ellp]
    )
    return LambdaProfile(values, sizes)


def levi_blocks(c: CoefficientFunction) -> list[LeviFactor]:
    spec = c.spec
    prof = lambda_profile(c)
    boxes = c.support_boxes()
    out = []
    for r, (lam, n) in enumerate(zip(prof.values, prof.sizes)):
        parts = [len(supp(spec, b)) for b in boxes if lambda_of(b) == lam for _ in range(c(b))]
        last = r == prof.ell_prime - 1
        kind = "GL"
        if last and prof.ell % 2:
            kind = "SO" if spec.eps == 1 else "Sp"
        out.append(LeviFactor(kind, n, Partition(parts)))
    return out


def levi_string(c: CoefficientFunction) -> str:
    return " x ".join(str(f) for f in levi_blocks(c))


def tiling_identity(c: CoefficientFunction) -> bool:
    """The blocks and their mirrors tile V."""
    prof = lambda_profile(c)
    n = list(prof.sizes)
    total = 2 * sum(n[:-1]) + (2 * n[-1] if prof.ell % 2 == 0 else n[-1])
    return total == dimension_vector(c).total


def local_system_count(o: Orbit) -> int:
    spec, c = o.spec, o.coeffs
    if c.is_zero():
        return 1
    zero_boxes = [b for b in c.support_boxes() if lambda_of(b) == 0]
    if not zero_boxes:
        return 1
    if spec.is_even == (spec.eps == 1):
        return 1
    if spec.is_even:
        return 2 ** len(zero_boxes)
    return 2 ** (len(zero_boxes) - 1)


# --- symbols -------------------------------------------------------------------

# symplectic shapes whose symbol lists are pinned by golden data
_SP_CHECKED = {(4, 2), (4,), (2,)}


def _runs(values: list[int]) -> list[list[int]]:
    """Entries x_i = value_i + (i - 1), grouped into runs of equal values."""
    entries = [v + n for n, v in enumerate(values)]
    runs: list[list[int]] = []
    for n, v in enumerate(values):
        if n and values[n - 1] == v:
            runs[-1].append(entries[n])
        else:
            runs.append([entries[n]])
    return runs


def _distribute(runs: list[list[int]], fixed_top: tuple[int, ...] = ()) -> list[tuple[tuple, tuple]]:
    """Each run alternates between the rows; choose which row each run starts in."""
    out = []
    for starts in product((0, 1), repeat=len(runs)):
        rows = ([*fixed_top], [])
        for run, st in zip(runs, starts):
            for n, x in enumerate(run):
                rows[(st + n) % 2].append(x)
        out.append((tuple(sorted(rows[0])), tuple(sorted(rows[1]))))
    return out


def _sp_symbols(parts: Partition) -> list[Symbol]:
    halves = sorted(p // 2 for p in parts)
    pad = len(halves) % 2 == 0
    runs = _runs([0] * pad + halves)
    fixed = ()
    if pad:
        # the padding entry is always 0 and always sits in the top row
        fixed, runs = (runs[0][0],), runs[1:]
    pairs = sorted(set(_distribute(runs, fixed)), key=lambda tb: (-len(tb[0]), tb))
    checked = tuple(parts) in _SP_CHECKED or set(parts) == {2}
    return [Symbol(t, b, verified=checked or len(t) >= len(b)) for t, b in pairs]


def _so_odd_symbols(parts: Partition) -> list[Symbol]:
    """Unordered symbols: keep the representative with defect >= 0 (smaller top on ties)."""
    runs = _runs(sorted((p - 1) // 2 for p in parts))
    reps = set()
    for t, b in _distribute(runs):
        if len(t) < len(b) or (len(t) == len(b) and b < t):
            t, b = b, t
        reps.add((t, b))
    return [Symbol(t, b) for t, b in sorted(reps, key=lambda tb: (len(tb[1]) - len(tb[0]), tb))]


def _so_even_symbols(parts: Partition) -> list[Symbol]:
    units = sorted(p // 2 for p in parts)[::2]
    row = tuple(2 * a - 1 + 2 * n for n, a in enumerate(units))
    return [Symbol(row, row, verified=set(parts) == {2})]


def symbols_for_orbit(o: Orbit) -> list[Symbol]:
    """Symbols labelling the local systems, read off the last Levi factor."""
    if o.coeffs.is_zero():
        return [TRIVIAL]
    last = levi_blocks(o.coeffs)[-1]
    parts = last.partition
    if last.kind == "GL":
        return [TRIVIAL]
    if last.kind == "Sp":
        if all(p % 2 == 0 for p in parts):
            return _sp_symbols(parts)
        return [TRIVIAL]
    if all(p % 2 for p in parts):
        return _so_odd_symbols(parts)
    if all(p % 2 == 0 for p in parts):
        return _so_even_symbols(parts)
    raise LeviError(f"unexpected mixed-parity partition {parts} on an orthogonal factor")
