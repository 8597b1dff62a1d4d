"""Bar frameworks: rational point configurations on a graph, their Gale
matrices and equilibrium stresses.

A framework pairs a connected graph with one point per vertex; the points
must affinely span the ambient space. The extended configuration matrix
stacks each point over a row of ones; its kernel (the Gale space) carries
all stress matrices: S is a stress exactly when it is symmetric, kills the
extended configuration, and vanishes on non-edges.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .exactmat import (
    DimensionMismatch,
    Matrix,
    SingularMatrix,
    has_generic_rank_profile,
    inverse,
    null_space_basis,
    psd_check,
    rank,
)
from .graphs import Graph, Ordering, gen_ktree

DEFAULT_POSITION_CAP = 200_000


class FrameworkError(Exception):
    pass


class DegenerateSpan(FrameworkError):
    """The points do not affinely span the ambient space."""


class NoGaleMatrix(FrameworkError):
    """Simplex frameworks (n = dim + 1) have a trivial Gale space."""


class NotEquilibrium(FrameworkError):
    pass


class InvalidStressMatrix(FrameworkError):
    pass


class ReconstructionFailure(FrameworkError):
    pass


class PatternViolation(FrameworkError):
    """A candidate stress is nonzero at the 1-based non-edge (i, j)."""

    def __init__(self, i: int, j: int):
        super().__init__(f"nonzero entry at non-edge ({i},{j})")
        self.pair = (i, j)


class GraphMismatch(FrameworkError):
    pass


class SizeMismatch(FrameworkError):
    pass


class SizeCapExceededError(FrameworkError):
    pass


def _coerce_point(p, dim: int | None) -> tuple[Fraction, ...]:
    pt = tuple(Fraction(x) if not isinstance(x, float) else _reject_float(x) for x in p)
    if dim is not None and len(pt) != dim:
        raise DimensionMismatch(f"point {pt} has {len(pt)} coordinates, expected {dim}")
    return pt


def _reject_float(x):
    raise TypeError("float coordinates are not allowed; use Fraction, int or string")


class Framework:
    """A connected graph together with one rational point per vertex."""

    __slots__ = ("graph", "dim", "points")

    def __init__(self, graph: Graph, dim: int, points: Sequence[Sequence]):
        if dim < 1:
            raise FrameworkError("ambient dimension must be at least 1")
        if len(points) != graph.n:
            raise FrameworkError(f"{len(points)} points for {graph.n} vertices")
        self.graph = graph
        self.dim = dim
        self.points = tuple(_coerce_point(p, dim) for p in points)
        if graph.n < dim + 1:
            raise DegenerateSpan(f"{graph.n} points cannot affinely span dimension {dim}")
        if not graph.is_connected():
            raise FrameworkError("framework graph must be connected")
        if rank(extended_config_matrix(self)) != dim + 1:
            raise DegenerateSpan("points do not affinely span the ambient space")

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def rbar(self) -> int:
        """Dimension of the Gale space: n - dim - 1."""
        return self.n - self.dim - 1

    def point(self, v: int) -> tuple[Fraction, ...]:
        return self.points[v - 1]

    def __eq__(self, other):
        return (isinstance(other, Framework) and self.graph == other.graph
                and self.dim == other.dim and self.points == other.points)

    def __hash__(self):
        return hash((self.graph, self.dim, self.points))

    def __repr__(self):
        return f"Framework(n={self.n}, dim={self.dim})"


def extended_config_matrix(fw: Framework) -> Matrix:
    """(dim+1) x n matrix whose column v is the point of v over a 1."""
    cols = [list(p) + [Fraction(1)] for p in fw.points]
    return Matrix.from_columns(cols)


def affinely_independent(points: Sequence[Sequence]) -> bool:
    """Whether the points are affinely independent (no dimension assumed)."""
    pts = [tuple(Fraction(x) if not isinstance(x, float) else _reject_float(x) for x in p)
           for p in points]
    if not pts:
        return True
    d = len(pts[0])
    for p in pts:
        if len(p) != d:
            raise DimensionMismatch("points of differing dimension")
    stacked = Matrix.from_columns([list(p) + [Fraction(1)] for p in pts])
    return rank(stacked) == len(pts)


def is_general_position(fw: Framework, cap: int = DEFAULT_POSITION_CAP
                        ) -> tuple[bool, tuple[int, ...] | None]:
    """Check that every dim+1 points are affinely independent.

    Subsets are scanned lexicographically and the first violator is
    returned. Raises SizeCapExceededError when there are more than ``cap``
    subsets to examine.
    """
    k = fw.dim + 1
    total = math.comb(fw.n, k)
    if total > cap:
        raise SizeCapExceededError(f"{total} subsets exceed the cap of {cap}")
    for subset in itertools.combinations(range(1, fw.n + 1), k):
        if not affinely_independent([fw.point(v) for v in subset]):
            return False, subset
    return True, None


@dataclass(frozen=True)
class GaleMatrix:
    """n x rbar matrix whose columns span the kernel of the extended
    configuration matrix. Row v corresponds to vertex v."""

    matrix: Matrix

    @property
    def n(self) -> int:
        return self.matrix.rows

    @property
    def rbar(self) -> int:
        return self.matrix.cols


def gale_matrix(fw: Framework) -> GaleMatrix:
    """Canonical Gale matrix: the RREF kernel basis of the extended
    configuration matrix. Raises NoGaleMatrix for simplex frameworks."""
    if fw.rbar == 0:
        raise NoGaleMatrix("simplex framework has no Gale matrix")
    basis = null_space_basis(extended_config_matrix(fw))
    assert basis.cols == fw.rbar
    return GaleMatrix(basis)


class StressWeights:
    """Scalar weights on the edges of a graph, keyed by unordered pair."""

    __slots__ = ("weights",)

    def __init__(self, weights: Mapping[tuple[int, int], object]):
        norm = {}
        for (u, v), w in weights.items():
            if u == v:
                raise FrameworkError(f"loop weight at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in norm:
                raise FrameworkError(f"duplicate weight for edge {key}")
            norm[key] = Fraction(w) if not isinstance(w, float) else _reject_float(w)
        self.weights = norm

    def __getitem__(self, pair: tuple[int, int]) -> Fraction:
        u, v = pair
        return self.weights[(min(u, v), max(u, v))]

    def items(self):
        return sorted(self.weights.items())

    def __eq__(self, other):
        return isinstance(other, StressWeights) and self.weights == other.weights

    def __repr__(self):
        return f"StressWeights({dict(self.items())})"


def _check_weight_support(fw: Framework, omega: StressWeights) -> None:
    if set(omega.weights) != set(fw.graph.edges):
        raise FrameworkError("weights must be defined exactly on the edge set")


def verify_equilibrium_stress(fw: Framework, omega: StressWeights
                              ) -> tuple[bool, int | None]:
    """Check the per-vertex balance sum of w_ij (p_i - p_j) over edges at i.

    Returns (True, None) or (False, first violating vertex).
    """
    _check_weight_support(fw, omega)
    for i in range(1, fw.n + 1):
        pi = fw.point(i)
        total = [Fraction(0)] * fw.dim
        for j in fw.graph.neighbors(i):
            w = omega[(i, j)]
            pj = fw.point(j)
            for c in range(fw.dim):
                total[c] += w * (pi[c] - pj[c])
        if any(x != 0 for x in total):
            return False, i
    return True, None


@dataclass(frozen=True)
class StressMatrix:
    """Symmetric n x n matrix that kills the extended configuration and
    vanishes on non-edges; diagonal entries are the incident weight sums."""

    matrix: Matrix

    @property
    def n(self) -> int:
        return self.matrix.rows


def stress_from_omega(fw: Framework, omega: StressWeights) -> StressMatrix:
    """Assemble the stress matrix of equilibrium edge weights.

    Off-diagonal entries are the negated weights on edges and zero
    elsewhere; each diagonal entry is the sum of weights at that vertex.
    Raises NotEquilibrium when the weights do not balance.
    """
    ok, vertex = verify_equilibrium_stress(fw, omega)
    if not ok:
        raise NotEquilibrium(f"weights do not balance at vertex {vertex}")
    n = fw.n
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n + 1):
        for j in fw.graph.neighbors(i):
            w = omega[(i, j)]
            rows[i - 1][j - 1] = -w
            rows[i - 1][i - 1] += w
    return StressMatrix(Matrix(rows))


def omega_from_stress(fw: Framework, s: StressMatrix) -> StressWeights:
    """Read the edge weights back off a valid stress matrix."""
    report = validate_stress_matrix(fw, s.matrix)
    if not report.is_stress_matrix:
        raise InvalidStressMatrix(f"not a stress matrix: {report.failures()}")
    return StressWeights({(u, v): -s.matrix[u - 1, v - 1] for u, v in fw.graph.edges})


@dataclass(frozen=True)
class StressReport:
    """Independent verdicts on each stress-matrix clause; nothing
    short-circuits, so a failed clause never hides another."""

    symmetric: bool
    pattern_ok: bool
    kernel_ok: bool
    rank: int
    generic_rank_profile: bool
    psd: bool

    @property
    def is_stress_matrix(self) -> bool:
        return self.symmetric and self.pattern_ok and self.kernel_ok

    def failures(self) -> list[str]:
        out = []
        if not self.symmetric:
            out.append("not symmetric")
        if not self.pattern_ok:
            out.append("nonzero on a non-edge")
        if not self.kernel_ok:
            out.append("does not kill the extended configuration")
        return out


def validate_stress_matrix(fw: Framework, s: Matrix) -> StressReport:
    """Evaluate every stress-matrix clause on an arbitrary square matrix."""
    n = fw.n
    if (s.rows, s.cols) != (n, n):
        raise DimensionMismatch(f"stress must be {n}x{n}, got {s.rows}x{s.cols}")
    symmetric = s.is_symmetric
    pattern_ok = all(
        s[i - 1, j - 1] == 0 and s[j - 1, i - 1] == 0
        for i in range(1, n + 1) for j in range(i + 1, n + 1)
        if not fw.graph.has_edge(i, j))
    kernel_ok = (extended_config_matrix(fw) * s).is_zero
    rk = rank(s)
    if symmetric:
        grp, _ = has_generic_rank_profile(s)
        psd = psd_check(s).is_psd
    else:
        grp = False
        psd = False
    return StressReport(symmetric, pattern_ok, kernel_ok, rk, grp, psd)


def psi_from_stress(fw: Framework, z: GaleMatrix, s: StressMatrix) -> Matrix:
    """The rbar x rbar matrix Psi with S = Z Psi Z^T.

    Computed through the Gram inverse of Z; the factorization is verified
    exactly and ReconstructionFailure is raised when it does not hold.
    """
    zm = z.matrix
    if zm.rows != fw.n or s.matrix.rows != fw.n:
        raise DimensionMismatch("Gale matrix and stress must match the framework size")
    gram = zm.transpose() * zm
    try:
        ginv = inverse(gram)
    except SingularMatrix:
        raise ReconstructionFailure("Gale matrix does not have full column rank") from None
    psi = ginv * (zm.transpose() * s.matrix * zm) * ginv
    if zm * psi * zm.transpose() != s.matrix:
        raise ReconstructionFailure("stress does not factor through this Gale matrix")
    return psi


def stress_from_psi(fw: Framework, z: GaleMatrix, psi: Matrix) -> StressMatrix:
    """Build Z Psi Z^T and accept it only if it vanishes on non-edges.

    The first (lexicographic) nonzero non-edge entry raises
    PatternViolation(i, j).
    """
    zm = z.matrix
    if not psi.is_symmetric:
        raise InvalidStressMatrix("Psi must be symmetric")
    if psi.rows != zm.cols:
        raise DimensionMismatch("Psi size does not match the Gale matrix")
    s = zm * psi * zm.transpose()
    n = fw.n
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if not fw.graph.has_edge(i, j) and s[i - 1, j - 1] != 0:
                raise PatternViolation(i, j)
    return StressMatrix(s)


def is_unit_triangular_gale(z: Matrix, graph: Graph, peo: Ordering
                            ) -> tuple[bool, tuple[int, int] | None]:
    """Check the triangular Gale shape relative to an elimination ordering.

    In position space the matrix must have unit diagonal, zeros above the
    diagonal, and zeros at (i, j) with i > j whenever the vertices in
    positions i and j are not adjacent. Returns the first violating
    position pair on failure.
    """
    n = graph.n
    if z.rows != n:
        raise DimensionMismatch(f"Gale matrix has {z.rows} rows for {n} vertices")
    if len(peo) != n:
        raise DimensionMismatch("ordering length does not match the graph")
    for i in range(1, n + 1):
        vi = peo.vertex_at(i)
        for j in range(1, z.cols + 1):
            e = z[vi - 1, j - 1]
            if i == j:
                if e != 1:
                    return False, (i, j)
            elif i < j:
                if e != 0:
                    return False, (i, j)
            else:
                vj = peo.vertex_at(j)
                if not graph.has_edge(vi, vj) and e != 0:
                    return False, (i, j)
    return True, None


def _sq_dist(p: Sequence[Fraction], q: Sequence[Fraction]) -> Fraction:
    return sum((a - b) ** 2 for a, b in zip(p, q))


def frameworks_equivalent(a: Framework, b: Framework) -> bool:
    """Same squared length on every edge. The graphs must agree; ambient
    dimensions may differ."""
    if a.graph != b.graph:
        raise GraphMismatch("equivalence requires identical graphs")
    return all(_sq_dist(a.point(u), a.point(v)) == _sq_dist(b.point(u), b.point(v))
               for u, v in a.graph.edges)


def frameworks_congruent(a: Framework, b: Framework) -> bool:
    """Same squared distance on every vertex pair, adjacent or not."""
    if a.n != b.n:
        raise SizeMismatch("congruence requires the same vertex count")
    return all(_sq_dist(a.point(u), a.point(v)) == _sq_dist(b.point(u), b.point(v))
               for u in range(1, a.n + 1) for v in range(u + 1, a.n + 1))


def random_general_position_framework(n: int, dim: int, seed: int,
                                      coord_bound: int | None = None) -> Framework:
    """Seeded (dim+1)-tree framework with integer points in general position.

    Coordinates are drawn uniformly from a box and resampled until every
    dim+1 points are affinely independent; the box widens on each retry.
    Deterministic for a fixed (n, dim, seed).
    """
    g = gen_ktree(n, dim + 1, seed)
    rng = random.Random(f"{n}/{dim}/{seed}/points")
    base = coord_bound if coord_bound is not None else max(10, 4 * n)
    for attempt in range(500):
        bound = base + attempt * base
        pts = [[rng.randint(-bound, bound) for _ in range(dim)] for _ in range(n)]
        try:
            fw = Framework(g, dim, pts)
        except DegenerateSpan:
            continue
        ok, _ = is_general_position(fw)
        if ok:
            return fw
    raise FrameworkError("could not sample a general-position configuration")
