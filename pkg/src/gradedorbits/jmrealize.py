"""Explicit Jacobson-Morozov triples on the labelled basis of V(c).

Everything is exact: E, H, F and the Gram matrix have integer entries; only
the base change to the standard basis in the odd orthogonal families needs
square roots of 2 and -2, handled by :class:`Scalar`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import NamedTuple, Sequence

from . import linalg
from .grading import Box, Family, GradingSpec, f_coeff, h_coeff, lambda_of, position, supp, supp_top, tau
from .tableaux import CoefficientFunction, RankTableau, dimension_vector


class JMError(ValueError):
    pass


# --- the field Q(sqrt2, sqrt-2) ---------------------------------------------


class Scalar:
    """a + b*s + c*t + d*st with s^2 = 2, t^2 = -2."""

    __slots__ = ("coords",)

    def __init__(self, a=0, b=0, c=0, d=0):
        # ints and Fractions mix exactly; avoid coercing on every operation
        self.coords = (a, b, c, d)

    @classmethod
    def lift(cls, x) -> "Scalar":
        return x if isinstance(x, Scalar) else cls(x)

    def __add__(self, other):
        o = Scalar.lift(other).coords
        return Scalar(*(x + y for x, y in zip(self.coords, o)))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(*(-x for x in self.coords))

    def __sub__(self, other):
        return self + (-Scalar.lift(other))

    def __rsub__(self, other):
        return Scalar.lift(other) - self

    def __mul__(self, other):
        a1, b1, c1, d1 = self.coords
        a2, b2, c2, d2 = Scalar.lift(other).coords
        # s*s = 2, t*t = -2, (st)^2 = -4, s*st = 2t, t*st = -2s
        return Scalar(
            a1 * a2 + 2 * b1 * b2 - 2 * c1 * c2 - 4 * d1 * d2,
            a1 * b2 + b1 * a2 - 2 * c1 * d2 - 2 * d1 * c2,
            a1 * c2 + c1 * a2 + 2 * b1 * d2 + 2 * d1 * b2,
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        )

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Scalar)):
            return self.coords == Scalar.lift(other).coords
        return NotImplemented

    def __hash__(self):
        return hash(self.coords)

    def __bool__(self):
        return any(self.coords)

    def __repr__(self):
        return f"Scalar{tuple(str(x) for x in self.coords)}"

    def to_json(self) -> list[str]:
        return [str(x) for x in self.coords]


SQRT2 = Scalar(0, 1)
SQRT_MINUS2 = Scalar(0, 0, 1)
INV_SQRT2 = Scalar(0, Fraction(1, 2))
INV_SQRT_MINUS2 = Scalar(0, 0, Fraction(-1, 2))


# --- labelled bases -----------------------------------------------------------


class BasisLabel(NamedTuple):
    box: Box
    copy: int
    degree: int

    def __str__(self) -> str:
        return f"v[{self.degree}]^{self.copy}{self.box}"


class StdLabel(NamedTuple):
    degree: int
    index: int

    def __str__(self) -> str:
        return f"u[{self.degree},{self.index}]"


def basis_labels(c: CoefficientFunction) -> list[BasisLabel]:
    spec = c.spec
    return [
        BasisLabel(b, s, i)
        for b in c.support_boxes()
        for s in range(1, c(b) + 1)
        for i in supp(spec, b)
    ]


@dataclass(frozen=True)
class GradedMatrix:
    row_labels: tuple
    col_labels: tuple
    rows: tuple[tuple, ...]
    degree: int

    @classmethod
    def build(cls, row_labels, col_labels, rows, degree) -> "GradedMatrix":
        return cls(tuple(row_labels), tuple(col_labels), tuple(tuple(r) for r in rows), degree)

    @property
    def matrix(self) -> list[list]:
        return [list(r) for r in self.rows]

    def to_json(self) -> dict:
        def enc(x):
            return Scalar.lift(x).to_json()

        return {
            "degree": self.degree,
            "rows": [str(l) for l in self.row_labels],
            "cols": [str(l) for l in self.col_labels],
            "entries": [[enc(x) for x in r] for r in self.rows],
        }


@dataclass(frozen=True)
class JMTriple:
    spec: GradingSpec
    coeffs: CoefficientFunction
    labels: tuple[BasisLabel, ...]
    E: GradedMatrix
    H: GradedMatrix
    F: GradedMatrix
    gram: GradedMatrix
    doubleprime: bool = False

    @cached_property
    def index(self) -> dict[BasisLabel, int]:
        return {l: n for n, l in enumerate(self.labels)}

    @property
    def dim(self) -> int:
        return len(self.labels)


# --- coefficient tables -----------------------------------------------------


def _e_sign(spec: GradingSpec, b: Box, i: int) -> int:
    """Coefficient of v_{i+2}(b) in E v_i(b); 0 at the top of the support."""
    s = supp(spec, b)
    if i == s[0]:
        return 0
    eps, pos = spec.eps, position(b)
    if spec.is_even:
        if not (1 in s and -1 in s) or i != -1:
            return 1 if i > 0 else -1
        if pos < 0:
            return 1
        if pos > 0:
            return -eps
        return (-eps) ** b.k
    if 0 not in s or i != 0:
        return 1 if i > 0 else -1
    if pos < 0:
        return eps
    if pos > 0:
        return 1
    return eps ** b.k


def _f_coeff(spec: GradingSpec, b: Box, i: int) -> int:
    """Coefficient of v_{i-2}(b) in F v_i(b); 0 at the bottom of the support."""
    s = supp(spec, b)
    if i == s[-1]:
        return 0
    f = f_coeff(spec, b, i)
    eps, pos = spec.eps, position(b)
    if spec.is_even:
        if not (1 in s and -1 in s) or i != 1:
            return f if i > 0 else -f
        if pos < 0:
            return f
        if pos > 0:
            return -eps * f
        return (-eps) ** b.k * f
    if 0 not in s or i != 2:
        return f if i > 2 or (i > 0 and 0 not in s) else -f
    if pos < 0:
        return eps * f
    if pos > 0:
        return f
    return eps ** b.k * f


def _gram_value(spec: GradingSpec, b: Box, i: int) -> int:
    """<v_i(b), v_{-i}(tau b)> for a single copy."""
    if i > 0:
        return 1
    if i < 0:
        return spec.eps
    pos = position(b)
    if pos > 0:
        return 1
    if pos < 0:
        return spec.eps
    if tau(spec, b) != b:
        return spec.eps ** b.k
    return 1


def gram_matrix(spec: GradingSpec, c: CoefficientFunction) -> GradedMatrix:
    labels = basis_labels(c)
    idx = {l: n for n, l in enumerate(labels)}
    g = linalg.zeros(len(labels))
    for n, l in enumerate(labels):
        dual = BasisLabel(tau(spec, l.box), l.copy, -l.degree)
        g[n][idx[dual]] = _gram_value(spec, l.box, l.degree)
    return GradedMatrix.build(labels, labels, g, 0)


def canonical_swap_box(c: CoefficientFunction) -> Box:
    """Representative b' of the orbit swapped by the split construction.

    Above-diagonal boxes with 0 in the support and c > 0; maximal lambda, ties by
    canonical box order.
    """
    spec = c.spec
    cands = [
        b for b in c.support_boxes()
        if position(b) > 0 and b.i >= 0 >= b.j
    ]
    if not cands:
        raise JMError("no above-diagonal box through degree 0 carries a nonzero coefficient")
    top = max(lambda_of(b) for b in cands)
    return min((b for b in cands if lambda_of(b) == top), key=spec.box_position.__getitem__)


def swap_matrix(c: CoefficientFunction) -> GradedMatrix:
    """The degree-0 isometry exchanging the last copies of v_0(b') and v_0(tau b')."""
    spec = c.spec
    labels = basis_labels(c)
    idx = {l: n for n, l in enumerate(labels)}
    b = canonical_swap_box(c)
    top = c(b)
    x, y = idx[BasisLabel(b, top, 0)], idx[BasisLabel(tau(spec, b), top, 0)]
    s = linalg.identity(len(labels))
    s[x][x] = s[y][y] = 0
    s[x][y] = s[y][x] = 1
    return GradedMatrix.build(labels, labels, s, 0)


def build_jm(spec: GradingSpec, c: CoefficientFunction, split: str = "none") -> JMTriple:
    """Assemble (E, H, F) box by box; ``split`` is 'none', 'prime' or 'doubleprime'."""
    from .orbits import splits  # local import: orbits depends on this module

    if c.spec != spec:
        raise JMError("coefficient function belongs to another grading")
    if split not in ("none", "prime", "doubleprime"):
        raise JMError(f"unknown split tag {split!r}")
    if split != "none" and not (spec.family is Family.ODD_SO and splits(spec, c)):
        raise JMError("split tags apply only to splitting orbits of the special orthogonal odd family")
    labels = basis_labels(c)
    idx = {l: n for n, l in enumerate(labels)}
    n = len(labels)
    e, h, f = linalg.zeros(n), linalg.zeros(n), linalg.zeros(n)
    for col, l in enumerate(labels):
        b, s, i = l
        h[col][col] = h_coeff(spec, b, i)
        a = _e_sign(spec, b, i)
        if a:
            e[idx[BasisLabel(b, s, i + 2)]][col] = a
        a = _f_coeff(spec, b, i)
        if a:
            f[idx[BasisLabel(b, s, i - 2)]][col] = a
    gram = gram_matrix(spec, c)
    if split == "doubleprime":
        sw = swap_matrix(c).matrix
        e = linalg.matmul(linalg.matmul(sw, e), sw)
        h = linalg.matmul(linalg.matmul(sw, h), sw)
        f = linalg.matmul(linalg.matmul(sw, f), sw)
    return JMTriple(
        spec, c, tuple(labels),
        GradedMatrix.build(labels, labels, e, 2),
        GradedMatrix.build(labels, labels, h, 0),
        GradedMatrix.build(labels, labels, f, -2),
        gram,
        split == "doubleprime",
    )


# --- verification -------------------------------------------------------------


@dataclass
class VerifyReport:
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def first(self) -> str | None:
        return self.failures[0] if self.failures else None

    def __str__(self) -> str:
        return "ok" if self.ok else "; ".join(self.failures)


def _bracket(a, b):
    return linalg.add(linalg.matmul(a, b), linalg.matmul(b, a), -1)


def verify_jm(t: JMTriple) -> VerifyReport:
    rep = VerifyReport()
    E, H, F, G = t.E.matrix, t.H.matrix, t.F.matrix, t.gram.matrix
    deg = [l.degree for l in t.labels]
    for name, m, d in (("E", E, 2), ("H", H, 0), ("F", F, -2)):
        if any(x and deg[r] != deg[q] + d for r, row in enumerate(m) for q, x in enumerate(row)):
            rep.failures.append(f"{name} is not homogeneous of degree {d}")
    if _bracket(H, E) != linalg.scalar_mul(E, 2):
        rep.failures.append("[H,E] != 2E")
    if _bracket(H, F) != linalg.scalar_mul(F, -2):
        rep.failures.append("[H,F] != -2F")
    if _bracket(E, F) != H:
        rep.failures.append("[E,F] != H")
    if linalg.transpose(G) != linalg.scalar_mul(G, t.spec.eps):
        rep.failures.append("Gram matrix has the wrong symmetry")
    if linalg.rank(G) != len(G):
        rep.failures.append("Gram matrix is degenerate")
    for name, m in (("E", E), ("H", H), ("F", F)):
        lhs = linalg.add(linalg.matmul(linalg.transpose(m), G), linalg.matmul(G, m))
        if not linalg.is_zero(lhs):
            rep.failures.append(f"{name} is not compatible with the form")
    if sum(H[a][a] for a in range(len(H))) != 0:
        rep.failures.append("trace(H) != 0")
    return rep


# --- standard basis and base change -------------------------------------------


def standard_labels(spec: GradingSpec, delta) -> list[StdLabel]:
    out = []
    for i in spec.indices:
        if i == 0 and spec.family is Family.ODD_SP:
            half = delta[0] // 2
            out += [StdLabel(0, r) for r in range(1, half + 1)]
            out += [StdLabel(0, -r) for r in range(1, half + 1)]
        else:
            out += [StdLabel(i, r) for r in range(1, delta[i] + 1)]
    return out


def standard_gram(spec: GradingSpec, delta) -> GradedMatrix:
    labels = standard_labels(spec, delta)
    idx = {l: n for n, l in enumerate(labels)}
    g = linalg.zeros(len(labels))
    d0 = delta[0] if 0 in spec.index_set else 0
    for n, (i, r) in enumerate(labels):
        if i != 0:
            g[n][idx[StdLabel(-i, r)]] = 1 if i > 0 else spec.eps
        elif spec.family is Family.ODD_SP:
            g[n][idx[StdLabel(0, -r)]] = 1 if r > 0 else spec.eps
        else:
            g[n][idx[StdLabel(0, d0 + 1 - r)]] = 1
    return GradedMatrix.build(labels, labels, g, 0)


def _fill_order(c: CoefficientFunction, boxes: Sequence[Box]) -> list[Box]:
    pos = c.spec.box_position
    return sorted(boxes, key=lambda b: (-c(b), pos[b]))


def base_change(spec: GradingSpec, c: CoefficientFunction, split: str = "none") -> GradedMatrix:
    """T_c: columns are the images of the labelled basis in standard coordinates."""
    delta = dimension_vector(c)
    labels = basis_labels(c)
    std = standard_labels(spec, delta)
    sidx = {l: n for n, l in enumerate(std)}
    image: dict[BasisLabel, dict[StdLabel, object]] = {}
    support = c.support_boxes()
    for i in spec.indices:
        if i <= 0:
            continue
        j = 0
        for b in _fill_order(c, [b for b in support if b.j <= i <= b.i]):
            tb = tau(spec, b)
            for s in range(1, c(b) + 1):
                j += 1
                image[BasisLabel(b, s, i)] = {StdLabel(i, j): 1}
                image[BasisLabel(tb, s, -i)] = {StdLabel(-i, j): 1}
    if 0 in spec.index_set:
        through0 = [b for b in support if b.j <= 0 <= b.i]
        if spec.family is Family.ODD_SP:
            reps = [b for b in through0 if position(b) > 0 or (position(b) == 0 and b.k == 0)]
            j = 0
            for b in _fill_order(c, reps):
                tb = tau(spec, b)
                for s in range(1, c(b) + 1):
                    j += 1
                    image[BasisLabel(b, s, 0)] = {StdLabel(0, j): 1}
                    image[BasisLabel(tb, s, 0)] = {StdLabel(0, -j): 1}
        else:
            d0 = delta[0]
            upper = _fill_order(c, [b for b in through0 if position(b) > 0])
            selfdual = _fill_order(c, [b for b in through0 if position(b) == 0])
            j = 0
            for b in upper:
                tb = tau(spec, b)
                for s in range(1, c(b) + 1):
                    j += 1
                    image[BasisLabel(b, s, 0)] = {StdLabel(0, j): 1}
                    image[BasisLabel(tb, s, 0)] = {StdLabel(0, d0 + 1 - j): 1}
            d3 = j
            d2 = sum(c(b) for b in selfdual)
            for b in selfdual:
                for s in range(1, c(b) + 1):
                    j += 1
                    t = j - d3
                    mirror = d0 + 1 - j
                    if d2 % 2 and 2 * t == d2 + 1:
                        image[BasisLabel(b, s, 0)] = {StdLabel(0, j): 1}
                    elif 2 * t <= d2:
                        image[BasisLabel(b, s, 0)] = {StdLabel(0, j): INV_SQRT2, StdLabel(0, mirror): INV_SQRT2}
                    else:
                        image[BasisLabel(b, s, 0)] = {StdLabel(0, j): INV_SQRT_MINUS2, StdLabel(0, mirror): -INV_SQRT_MINUS2}
    rows = [[Scalar(0) for _ in labels] for _ in std]
    for col, l in enumerate(labels):
        for u, x in image[l].items():
            rows[sidx[u]][col] = Scalar.lift(x)
    if split == "doubleprime":
        sw = swap_matrix(c).matrix
        rows = linalg.matmul(rows, sw)
    return GradedMatrix.build(std, labels, rows, 0)


def check_isometry(spec: GradingSpec, c: CoefficientFunction, split: str = "none") -> bool:
    """<T u, T v> equals <u, v>_c on every pair of basis vectors."""
    t = base_change(spec, c, split).matrix
    gs = standard_gram(spec, dimension_vector(c)).matrix
    gc = gram_matrix(spec, c).matrix
    n = len(gc)
    if len(t) != n:
        return False
    cols = [{u: t[u][a] for u in range(n) if t[u][a]} for a in range(n)]
    grow = [[(v, x) for v, x in enumerate(r) if x] for r in gs]
    for a in range(n):
        for b in range(n):
            val = Scalar(0)
            for u, x in cols[a].items():
                for v, g in grow[u]:
                    y = cols[b].get(v)
                    if y is not None:
                        val = val + x * g * y
            if val != Scalar.lift(gc[a][b]):
                return False
    return True


def is_permutation(m: GradedMatrix) -> bool:
    rows = m.matrix
    for r in rows:
        if sorted(Scalar.lift(x) != 0 for x in r).count(True) != 1:
            return False
    cols = linalg.transpose(rows)
    return all(
        sum(1 for x in col if x) == 1 and all(Scalar.lift(x) in (Scalar(0), Scalar(1)) for x in col)
        for col in cols
    )


# --- matrix oracles -------------------------------------------------------------


def _block(m, rows: Sequence[int], cols: Sequence[int]):
    return [[m[r][q] for q in cols] for r in rows]


def rank_tableau_from_matrices(t: JMTriple) -> RankTableau:
    spec = t.spec
    by_deg = {i: [n for n, l in enumerate(t.labels) if l.degree == i] for i in spec.indices}
    E = t.E.matrix
    powers = [linalg.identity(t.dim)]
    data = {}
    for i in spec.indices:
        for j in reversed(spec.indices):
            if j > i:
                continue
            k = (i - j) // 2
            while len(powers) <= k:
                powers.append(linalg.matmul(powers[-1], E))
            rows, cols = by_deg[i], by_deg[j]
            data[(i, j)] = linalg.rank(_block(powers[k], rows, cols)) if rows and cols else 0
    return RankTableau.from_dict(spec, data)


def jordan_from_ranks(t: JMTriple) -> list[int]:
    """Partition of E recovered from the ranks of its powers, descending."""
    n = t.dim
    ranks = [n]
    p = linalg.identity(n)
    while ranks[-1]:
        p = linalg.matmul(p, t.E.matrix)
        ranks.append(linalg.rank(p))
    ranks += [0, 0]
    parts = []
    for k in range(1, len(ranks) - 1):
        parts += [k] * (ranks[k - 1] - 2 * ranks[k] + ranks[k + 1])
    return sorted(parts, reverse=True)


def _skew_solutions(t: JMTriple, shift: int, eigen: int, commute_with_e: bool = False) -> int:
    """dim of {X : deg shift, ad H eigenvalue, X^T G + G X = 0 [, [X,E] = 0]}."""
    labels = t.labels
    H = t.H.matrix
    hv = [H[a][a] for a in range(t.dim)]
    G = t.gram.matrix
    var = {}
    for a, la in enumerate(labels):
        for b, lb in enumerate(labels):
            if la.degree - lb.degree == shift and hv[a] - hv[b] == eigen:
                var[(a, b)] = len(var)
    if not var:
        return 0
    gnz = {a: [(q, x) for q, x in enumerate(G[a]) if x] for a in range(t.dim)}
    gcol = {q: [(p, G[p][q]) for p in range(t.dim) if G[p][q]] for q in range(t.dim)}
    eqs: dict[tuple, dict[int, int]] = {}

    def put(key, v, x):
        row = eqs.setdefault(key, {})
        row[v] = row.get(v, 0) + x

    for (a, b), v in var.items():
        for q, x in gnz[a]:          # (X^T G)_{b q} += X_ab G_aq
            put(("f", b, q), v, x)
        for p, x in gcol[a]:         # (G X)_{p b} += G_pa X_ab
            put(("f", p, b), v, x)
    if commute_with_e:
        E = t.E.matrix
        ecol = {a: [(r, E[r][a]) for r in range(t.dim) if E[r][a]] for a in range(t.dim)}
        for (a, b), v in var.items():
            for q, x in enumerate(E[b]):  # (X E)_{a q} += X_ab E_bq
                if x:
                    put(("c", a, q), v, x)
            for r, x in ecol[a]:          # (E X)_{r b} += E_ra X_ab
                put(("c", r, b), v, -x)
    rows = [[row.get(v, 0) for v in range(len(var))] for row in eqs.values() if any(row.values())]
    return len(var) - linalg.rank(rows)


def _eigen_range(t: JMTriple) -> range:
    hv = [t.H.matrix[a][a] for a in range(t.dim)]
    if not hv:
        return range(0)
    span = max(hv) - min(hv)
    return range(-span, span + 1)


def g0_dimension(t: JMTriple) -> int:
    return sum(_skew_solutions(t, 0, e) for e in _eigen_range(t))


def orbit_dimension_by_eigenvalues(t: JMTriple) -> int:
    """dim g_0 - dim p_0 + dim p_2, counted through ad(H) eigenspaces."""
    er = _eigen_range(t)
    g0 = sum(_skew_solutions(t, 0, e) for e in er)
    p0 = sum(_skew_solutions(t, 0, e) for e in er if e >= 0)
    p2 = sum(_skew_solutions(t, 2, e) for e in er if e >= 2)
    return g0 - p0 + p2


def orbit_dimension_by_centralizer(t: JMTriple) -> int:
    """dim g_0 minus the dimension of the centralizer of E in g_0."""
    er = _eigen_range(t)
    g0 = sum(_skew_solutions(t, 0, e) for e in er)
    z = sum(_skew_solutions(t, 0, e, commute_with_e=True) for e in er)
    return g0 - z


# --- isotropic subspace -------------------------------------------------------------


@dataclass(frozen=True)
class IsotropicReport:
    labels: tuple[BasisLabel, ...]
    dimension: int
    matches_top_half: bool
    isotropic: bool
    half_dimension: bool

    @property
    def ok(self) -> bool:
        return self.matches_top_half and self.isotropic and self.half_dimension


def expected_isotropic_labels(t: JMTriple) -> list[BasisLabel]:
    spec, c = t.spec, t.coeffs
    out = [l for l in t.labels if l.degree in supp_top(spec, l.box)]
    if t.doubleprime:
        b = canonical_swap_box(c)
        top = c(b)
        out.remove(BasisLabel(tau(spec, b), top, 0))
        out.append(BasisLabel(b, top, 0))
    return out


def isotropic_subspace(t: JMTriple) -> IsotropicReport:
    """Compute the sum of E^k[ker E^2k] and compare it with the top-half label span."""
    from .orbits import Partition

    parts = jordan_from_ranks(t)
    if not Partition(parts).totally_even:
        raise JMError("the isotropic subspace check needs a totally even Jordan type")
    n = t.dim
    E = t.E.matrix
    vectors = []
    ek = linalg.identity(n)
    k = 0
    while True:
        k += 1
        ek = linalg.matmul(ek, E)
        if linalg.is_zero(ek):
            break
        e2k = linalg.matmul(ek, ek)
        for v in linalg.nullspace(e2k, n):
            w = linalg.apply(ek, v)
            if any(w):
                vectors.append(w)
    dim = linalg.span_rank(vectors)
    expected = expected_isotropic_labels(t)
    unit = {l: [int(l == m) for m in t.labels] for l in t.labels}
    exp_vecs = [unit[l] for l in expected]
    same = dim == len(expected) == linalg.span_rank(vectors + exp_vecs)
    in_l = tuple(l for l in t.labels if linalg.span_rank(vectors + [unit[l]]) == dim)
    G = t.gram.matrix
    iso = all(
        not sum((x * G[a][b] * y for a, x in enumerate(v) if x for b, y in enumerate(w) if y), 0)
        for v in vectors for w in vectors
    )
    return IsotropicReport(in_l, dim, same, iso, 2 * dim == n)


def isotropic_parity_count(t: JMTriple, labels: Sequence[BasisLabel]) -> int:
    """Negative-degree labels, plus degree-0 labels on below-diagonal boxes (odd case)."""
    neg = sum(1 for l in labels if l.degree < 0)
    if not t.spec.is_even:
        neg += sum(1 for l in labels if l.degree == 0 and position(l.box) < 0)
    return neg


def dump_matrices(t: JMTriple) -> dict:
    legend = {str(n): str(l) for n, l in enumerate(t.labels)}
    out = {
        "legend": legend,
        "scalar_basis": ["1", "sqrt(2)", "sqrt(-2)", "sqrt(2)*sqrt(-2)"],
        "E": t.E.to_json(),
        "H": t.H.to_json(),
        "F": t.F.to_json(),
        "gram": t.gram.to_json(),
    }
    split = "doubleprime" if t.doubleprime else "none"
    out["T"] = base_change(t.spec, t.coeffs, split).to_json()
    return out
