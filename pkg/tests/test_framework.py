import random
from fractions import Fraction

import pytest

from chordalrig.exactmat import DimensionMismatch, Matrix, determinant, inverse, rank
from chordalrig.framework import (
    DegenerateSpan,
    Framework,
    FrameworkError,
    GaleMatrix,
    GraphMismatch,
    InvalidStressMatrix,
    NoGaleMatrix,
    NotEquilibrium,
    PatternViolation,
    ReconstructionFailure,
    SizeCapExceededError,
    SizeMismatch,
    StressMatrix,
    StressWeights,
    affinely_independent,
    extended_config_matrix,
    frameworks_congruent,
    frameworks_equivalent,
    gale_matrix,
    is_general_position,
    is_unit_triangular_gale,
    omega_from_stress,
    psi_from_stress,
    random_general_position_framework,
    stress_from_omega,
    stress_from_psi,
    validate_stress_matrix,
    verify_equilibrium_stress,
)
from chordalrig.graphs import Graph, Ordering, is_chordal

F = Fraction


def hexagon_omega(hexagon):
    s = hexagon.stress
    return StressWeights({(u, v): -s[u - 1, v - 1] for u, v in hexagon.fw.graph.edges})


class TestFramework:
    def test_float_coordinates_rejected(self):
        with pytest.raises(TypeError):
            Framework(Graph.path(2), 1, [(0.5,), (1,)])

    def test_point_count_checked(self):
        with pytest.raises(FrameworkError):
            Framework(Graph.path(3), 1, [(0,), (1,)])

    def test_dimension_positive(self):
        with pytest.raises(FrameworkError):
            Framework(Graph.path(2), 0, [(), ()])

    def test_connected_required(self):
        with pytest.raises(FrameworkError):
            Framework(Graph(3, [(1, 2)]), 1, [(0,), (1,), (2,)])

    def test_affine_span_required(self):
        with pytest.raises(DegenerateSpan):
            Framework(Graph.complete(3), 2, [(0, 0), (1, 0), (2, 0)])
        with pytest.raises(DegenerateSpan):
            Framework(Graph.complete(2), 2, [(0, 0), (1, 0)])

    def test_string_coordinates(self):
        fw = Framework(Graph.path(2), 1, [("1/2",), ("3",)])
        assert fw.point(1) == (F(1, 2),)

    def test_rbar(self, hexagon, k3_line):
        assert hexagon.fw.rbar == 3
        assert k3_line.rbar == 1


class TestExtendedConfig:
    def test_hexagon(self, hexagon):
        assert extended_config_matrix(hexagon.fw) == Matrix([
            [-2, -1, -1, 1, 1, 2],
            [0, -1, 1, -1, 1, 0],
            [1, 1, 1, 1, 1, 1],
        ])

    def test_k3_line(self, k3_line):
        assert extended_config_matrix(k3_line) == Matrix([[0, 1, 2], [1, 1, 1]])

    def test_full_row_rank(self, hexagon):
        assert rank(extended_config_matrix(hexagon.fw)) == 3


class TestAffinelyIndependent:
    def test_two_distinct_points(self):
        assert affinely_independent([(0,), (1,)])

    def test_collinear_trio(self):
        assert not affinely_independent([(-60, 0), (-40, 0), (-20, 0)])

    def test_hexagon_trio(self):
        assert affinely_independent([(-2, 0), (-1, -1), (-1, 1)])

    def test_empty(self):
        assert affinely_independent([])

    def test_ragged_rejected(self):
        with pytest.raises(DimensionMismatch):
            affinely_independent([(0, 1), (1,)])


class TestGeneralPosition:
    def test_hexagon(self, hexagon):
        assert is_general_position(hexagon.fw) == (True, None)

    def test_collinear_witness(self, k5_minus_edge):
        ok, witness = is_general_position(k5_minus_edge)
        assert not ok
        assert witness == (1, 2, 3)

    def test_k3_line(self, k3_line):
        assert is_general_position(k3_line) == (True, None)

    def test_cap(self, hexagon):
        with pytest.raises(SizeCapExceededError):
            is_general_position(hexagon.fw, cap=5)


class TestGaleMatrix:
    def test_k3_line_exact(self, k3_line):
        z = gale_matrix(k3_line)
        assert z.matrix == Matrix([[1], [-2], [1]])
        assert (z.n, z.rbar) == (3, 1)

    def test_hexagon_kernel_and_change_of_basis(self, hexagon):
        z = gale_matrix(hexagon.fw)
        p = extended_config_matrix(hexagon.fw)
        assert (p * z.matrix).is_zero
        assert rank(z.matrix) == 3
        # the frozen unit-triangular Gale matrix is a right-multiple of it
        b = z.matrix
        q = inverse(b.transpose() * b) * (b.transpose() * hexagon.gale)
        assert b * q == hexagon.gale
        assert determinant(q) != 0

    def test_simplex_rejected(self):
        fw = Framework(Graph.complete(3), 2, [(0, 0), (1, 0), (0, 1)])
        with pytest.raises(NoGaleMatrix):
            gale_matrix(fw)


class TestStressWeights:
    def test_key_normalization(self):
        w = StressWeights({(2, 1): F(3)})
        assert w[(1, 2)] == 3 and w[(2, 1)] == 3

    def test_duplicate_rejected(self):
        with pytest.raises(FrameworkError):
            StressWeights({(1, 2): 1, (2, 1): 1})

    def test_loop_rejected(self):
        with pytest.raises(FrameworkError):
            StressWeights({(1, 1): 1})

    def test_float_rejected(self):
        with pytest.raises(TypeError):
            StressWeights({(1, 2): 0.5})


class TestEquilibrium:
    def test_hexagon_omega_balances(self, hexagon):
        assert verify_equilibrium_stress(hexagon.fw, hexagon_omega(hexagon)) == (True, None)

    def test_zero_weights_balance(self, hexagon):
        zero = StressWeights({e: 0 for e in hexagon.fw.graph.edges})
        assert verify_equilibrium_stress(hexagon.fw, zero) == (True, None)

    def test_unbalanced_single_force(self, k3_line):
        w = StressWeights({(1, 2): 1, (1, 3): 0, (2, 3): 0})
        assert verify_equilibrium_stress(k3_line, w) == (False, 1)

    def test_support_must_match_edges(self, k3_line):
        with pytest.raises(FrameworkError):
            verify_equilibrium_stress(k3_line, StressWeights({(1, 2): 1}))


class TestStressConversions:
    def test_hexagon_assembles_frozen_stress(self, hexagon):
        s = stress_from_omega(hexagon.fw, hexagon_omega(hexagon))
        assert s.matrix == hexagon.stress

    def test_zero_omega(self, hexagon):
        zero = StressWeights({e: 0 for e in hexagon.fw.graph.edges})
        assert stress_from_omega(hexagon.fw, zero).matrix == Matrix.zeros(6, 6)

    def test_k3_line_psd_stress(self, k3_line):
        w = StressWeights({(1, 2): 2, (2, 3): 2, (1, 3): -1})
        s = stress_from_omega(k3_line, w)
        assert s.matrix == Matrix([[1, -2, 1], [-2, 4, -2], [1, -2, 1]])

    def test_not_equilibrium_raises(self, k3_line):
        with pytest.raises(NotEquilibrium):
            stress_from_omega(k3_line, StressWeights({(1, 2): 1, (1, 3): 0, (2, 3): 0}))

    def test_round_trip(self, hexagon):
        omega = hexagon_omega(hexagon)
        s = stress_from_omega(hexagon.fw, omega)
        assert omega_from_stress(hexagon.fw, s) == omega

    def test_omega_from_invalid_stress(self, hexagon):
        broken = Matrix([[1 if (i, j) in ((0, 4), (4, 0)) else 0
                          for j in range(6)] for i in range(6)])
        with pytest.raises(InvalidStressMatrix):
            omega_from_stress(hexagon.fw, StressMatrix(broken))


class TestValidateStress:
    def test_hexagon_indefinite(self, hexagon):
        rep = validate_stress_matrix(hexagon.fw, hexagon.stress)
        assert rep.symmetric and rep.pattern_ok and rep.kernel_ok
        assert rep.rank == 3 and rep.generic_rank_profile
        assert not rep.psd
        assert rep.is_stress_matrix
        assert rep.failures() == []

    def test_hexagon_psd(self, hexagon):
        rep = validate_stress_matrix(hexagon.fw, hexagon.psd)
        assert rep.is_stress_matrix and rep.psd and rep.rank == 3

    def test_zero_matrix(self, hexagon):
        rep = validate_stress_matrix(hexagon.fw, Matrix.zeros(6, 6))
        assert rep.is_stress_matrix and rep.psd and rep.rank == 0

    def test_no_short_circuit(self, hexagon):
        asym = Matrix([[1 if (i, j) == (0, 1) else 0
                        for j in range(6)] for i in range(6)])
        rep = validate_stress_matrix(hexagon.fw, asym)
        assert not rep.symmetric and not rep.is_stress_matrix
        assert "not symmetric" in rep.failures()

    def test_size_checked(self, hexagon):
        with pytest.raises(DimensionMismatch):
            validate_stress_matrix(hexagon.fw, Matrix.zeros(5, 5))

    def test_kernel_holds_for_random_equilibrium_stresses(self, hexagon):
        rng = random.Random(2)
        z = GaleMatrix(hexagon.gale)
        for _ in range(10):
            psi = Matrix([[rng.randint(-5, 5) if i == j else 0 for j in range(3)]
                          for i in range(3)])
            s = stress_from_psi(hexagon.fw, z, psi)
            rep = validate_stress_matrix(hexagon.fw, s.matrix)
            assert rep.kernel_ok and rep.is_stress_matrix


class TestPsiFactorization:
    def test_identity_psi_for_gram_stress(self, hexagon):
        z = GaleMatrix(hexagon.gale)
        psi = psi_from_stress(hexagon.fw, z, StressMatrix(hexagon.psd))
        assert psi == Matrix.identity(3)

    def test_indefinite_stress_factors(self, hexagon):
        z = GaleMatrix(hexagon.gale)
        psi = psi_from_stress(hexagon.fw, z, StressMatrix(hexagon.stress))
        assert psi.is_symmetric
        assert determinant(psi) != 0
        assert z.matrix * psi * z.matrix.transpose() == hexagon.stress

    def test_zero_stress(self, hexagon):
        z = GaleMatrix(hexagon.gale)
        psi = psi_from_stress(hexagon.fw, z, StressMatrix(Matrix.zeros(6, 6)))
        assert psi == Matrix.zeros(3, 3)

    def test_non_stress_rejected(self, hexagon):
        z = GaleMatrix(hexagon.gale)
        not_stress = Matrix.identity(6)
        with pytest.raises(ReconstructionFailure):
            psi_from_stress(hexagon.fw, z, StressMatrix(not_stress))

    def test_rref_basis_also_factors(self, hexagon):
        z = gale_matrix(hexagon.fw)
        psi = psi_from_stress(hexagon.fw, z, StressMatrix(hexagon.stress))
        assert z.matrix * psi * z.matrix.transpose() == hexagon.stress


class TestStressFromPsi:
    def test_identity_psi_gram(self, hexagon):
        z = GaleMatrix(hexagon.gale)
        s = stress_from_psi(hexagon.fw, z, Matrix.identity(3))
        assert s.matrix == hexagon.psd

    def test_zero_psi(self, hexagon):
        z = GaleMatrix(hexagon.gale)
        assert stress_from_psi(hexagon.fw, z, Matrix.zeros(3, 3)).matrix.is_zero

    def test_rref_basis_violates_pattern(self, hexagon):
        z = gale_matrix(hexagon.fw)
        with pytest.raises(PatternViolation) as err:
            stress_from_psi(hexagon.fw, z, Matrix.identity(3))
        i, j = err.value.pair
        assert (i, j) in hexagon.non_edges

    def test_asymmetric_psi_rejected(self, hexagon):
        z = GaleMatrix(hexagon.gale)
        with pytest.raises(InvalidStressMatrix):
            stress_from_psi(hexagon.fw, z, Matrix([[0, 1], [0, 0]]))


class TestUnitTriangularShape:
    def test_frozen_gale(self, hexagon):
        ok, spot = is_unit_triangular_gale(
            hexagon.gale, hexagon.fw.graph, Ordering.identity(6))
        assert ok and spot is None

    def test_k3_vector(self, k3_line):
        assert is_unit_triangular_gale(
            Matrix([[1], [-2], [1]]), k3_line.graph, Ordering.identity(3)) == (True, None)

    def test_above_diagonal_violation(self, hexagon):
        bad = Matrix([[1 if (i, j) in ((0, 1),) else hexagon.gale[i, j]
                       for j in range(3)] for i in range(6)])
        ok, spot = is_unit_triangular_gale(bad, hexagon.fw.graph, Ordering.identity(6))
        assert not ok and spot == (1, 2)

    def test_rref_basis_fails(self, hexagon):
        z = gale_matrix(hexagon.fw)
        ok, _ = is_unit_triangular_gale(z.matrix, hexagon.fw.graph, Ordering.identity(6))
        assert not ok

    def test_row_count_checked(self, hexagon):
        with pytest.raises(DimensionMismatch):
            is_unit_triangular_gale(Matrix.identity(3), hexagon.fw.graph,
                                    Ordering.identity(6))


class TestEquivalenceCongruence:
    def test_self(self, hexagon):
        assert frameworks_equivalent(hexagon.fw, hexagon.fw)
        assert frameworks_congruent(hexagon.fw, hexagon.fw)

    def test_folded_path(self):
        a = Framework(Graph.path(3), 1, [(0,), (1,), (2,)])
        b = Framework(Graph.path(3), 1, [(0,), (1,), (0,)])
        assert frameworks_equivalent(a, b)
        assert not frameworks_congruent(a, b)

    def test_graph_mismatch(self, k3_line, path3_line):
        with pytest.raises(GraphMismatch):
            frameworks_equivalent(k3_line, path3_line)

    def test_size_mismatch(self, k3_line):
        other = Framework(Graph.path(2), 1, [(0,), (1,)])
        with pytest.raises(SizeMismatch):
            frameworks_congruent(k3_line, other)

    def test_cross_dimension_equivalence(self):
        a = Framework(Graph.path(3), 1, [(0,), (1,), (2,)])
        b = Framework(Graph.path(3), 2, [(0, 0), (1, 0), (1, 1)])
        assert frameworks_equivalent(a, b)

    def test_congruent_implies_equivalent(self):
        rng = random.Random(13)
        for _ in range(5):
            fw = random_general_position_framework(6, 2, rng.randrange(1000))
            shift = [(x + 3, y - 2) for x, y in fw.points]
            moved = Framework(fw.graph, 2, shift)
            assert frameworks_congruent(fw, moved)
            assert frameworks_equivalent(fw, moved)


class TestRandomFramework:
    def test_deterministic(self):
        assert random_general_position_framework(7, 2, 5) == \
            random_general_position_framework(7, 2, 5)

    def test_properties(self):
        for seed in range(5):
            fw = random_general_position_framework(8, 2, seed)
            assert is_chordal(fw.graph).chordal
            assert is_general_position(fw) == (True, None)
            assert all(x.denominator == 1 for p in fw.points for x in p)

    def test_line_case(self):
        fw = random_general_position_framework(5, 1, 3)
        assert fw.dim == 1 and fw.n == 5
        assert is_general_position(fw) == (True, None)
