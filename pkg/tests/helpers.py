"""Shared generators for randomized tests.

These build inputs with the library's own constructors (that part is not
under test here); the properties asserted about the outputs are always
checked against oracles or frozen values.
"""

from fractions import Fraction

from chordalrig import (
    Framework,
    Graph,
    Matrix,
    chordal_connectivity,
    has_generic_rank_profile,
    is_chordal,
    is_general_position,
)


def rand_fraction(rng, lo=-5, hi=5, max_den=4):
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def random_symmetric_matrix(rng, n, lo=-5, hi=5, max_den=4):
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            x = rand_fraction(rng, lo, hi, max_den)
            rows[i][j] = rows[j][i] = x
    return Matrix(rows)


def chordal_pattern_matrix(rng, g):
    """Symmetric matrix vanishing exactly off the edges/diagonal of g,
    resampled until it has generic rank profile. Vertex v maps to row v."""
    n = g.n
    while True:
        rows = [[Fraction(0)] * n for _ in range(n)]
        for v in range(1, n + 1):
            rows[v - 1][v - 1] = rand_fraction(rng)
        for u, v in g.edges:
            x = rand_fraction(rng)
            rows[u - 1][v - 1] = rows[v - 1][u - 1] = x
        m = Matrix(rows)
        ok, _ = has_generic_rank_profile(m)
        if ok:
            return m


def sample_points(g, dim, rng, base_bound=40):
    """Integer coordinates rejection-sampled to general position."""
    for attempt in range(300):
        bound = base_bound * (1 + attempt)
        pts = [[rng.randint(-bound, bound) for _ in range(dim)] for _ in range(g.n)]
        try:
            fw = Framework(g, dim, pts)
        except Exception:
            continue
        if is_general_position(fw)[0]:
            return fw
    raise RuntimeError("sampling failed to reach general position")


def thin_to_low_connectivity(g, r, rng):
    """Delete edges, keeping the graph connected and chordal, until the
    connectivity drops to r or below."""
    while True:
        chord = is_chordal(g)
        assert chord.chordal
        if chordal_connectivity(g, chord.peo) <= r:
            return g
        candidates = []
        for e in g.edges:
            rest = [f for f in g.edges if f != e]
            h = Graph(g.n, rest)
            if h.is_connected() and is_chordal(h).chordal:
                candidates.append(e)
        assert candidates, "no chordality-preserving deletion available"
        u, v = candidates[rng.randrange(len(candidates))]
        g = Graph(g.n, [f for f in g.edges if f != (u, v)])


def sq_dist(p, q):
    return sum((a - b) ** 2 for a, b in zip(p, q))


def equivalent_by_hand(a, b):
    return all(sq_dist(a.point(u), a.point(v)) == sq_dist(b.point(u), b.point(v))
               for u, v in a.graph.edges)


def congruent_by_hand(a, b):
    return all(sq_dist(a.point(u), a.point(v)) == sq_dist(b.point(u), b.point(v))
               for u in range(1, a.n + 1) for v in range(u + 1, a.n + 1))
