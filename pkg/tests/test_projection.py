import random
from fractions import Fraction as F

import pytest

from linfiso.canonical import canonical_family, subspace_from_annihilator
from linfiso.decide import decide_isometric
from linfiso.errors import ContractError
from linfiso.linalg import IndexSet, Matrix, op_norm_inf
from linfiso.lp import verify_certificate
from linfiso.projection import (
    good_index_set,
    minimal_projection_program,
    projection_constant,
    projection_norm,
    verify_norm_gap,
)
from oracles import hyperplane_projection_constant

ANCHOR = subspace_from_annihilator([1, 1, 1])


def random_spec(rng, ambient, codim, bound=5):
    from linfiso.errors import InvalidBasisError

    while True:
        rows = [
            [F(rng.randint(-bound, bound)) for _ in range(codim)]
            for _ in range(ambient)
        ]
        try:
            return subspace_from_annihilator(rows)
        except InvalidBasisError:
            continue


class TestProjectionConstant:
    def test_anchor_value(self):
        result = projection_constant(ANCHOR)
        assert result.constant == F(4, 3)

    def test_anchor_right_inverse_is_uniform(self):
        # (1/3, 1/3, 1/3) is the unique minimizer for this functional
        result = projection_constant(ANCHOR)
        assert result.right_inverse == Matrix([[F(1, 3)], [F(1, 3)], [F(1, 3)]])

    def test_certificate_attached_and_valid(self):
        result = projection_constant(ANCHOR)
        assert verify_certificate(result.program, result.certificate)

    def test_isometric_instances_reach_one(self):
        assert projection_constant(subspace_from_annihilator([1, 1])).constant == 1
        assert projection_constant(subspace_from_annihilator([1, 1, 2])).constant == 1

    def test_matches_sign_pattern_oracle(self):
        # the enumeration oracle is exponential in the ambient dimension,
        # so the live comparison stays at 3
        rng = random.Random(11811)
        seen_nontrivial = 0
        while seen_nontrivial < 4:
            spec = random_spec(rng, 3, 1, bound=3)
            value = hyperplane_projection_constant(
                list(spec.annihilator.column(0))
            )
            result = projection_constant(spec)
            assert result.constant == value
            if value > 1:
                seen_nontrivial += 1

    def test_uniform_functional_values(self):
        # frozen outputs of hyperplane_projection_constant for the
        # all-ones functionals (the four-dimensional run is too slow to
        # repeat inline)
        assert projection_constant(ANCHOR).constant == F(4, 3)
        four = subspace_from_annihilator([1, 1, 1, 1])
        assert projection_constant(four).constant == F(3, 2)

    def test_projection_matrix_consistency(self):
        rng = random.Random(11812)
        for _ in range(8):
            ambient = rng.randint(3, 5)
            codim = rng.randint(1, 2)
            spec = random_spec(rng, ambient, codim)
            result = projection_constant(spec)
            p, y, f = result.projection, result.right_inverse, spec.annihilator
            assert result.constant >= 1
            assert op_norm_inf(p) == result.constant
            assert p @ p == p
            # vanishes against the annihilator and fixes the subspace
            assert f.transpose() @ p == Matrix.zeros(codim, ambient)
            for col in spec.spanning_columns():
                out = p @ Matrix.column_vector(col)
                assert tuple(out[i, 0] for i in range(ambient)) == col
            assert f.transpose() @ y == Matrix.identity(codim)

    def test_program_shape(self):
        prog = minimal_projection_program(ANCHOR)
        n, m = 3, 1
        assert len(prog.objective) == n * m + n * n + 1
        # one equality block, two entrywise blocks, one row-sum block
        assert len(prog.rows) == m * m + 2 * n * n + n


class TestProjectionNorm:
    def test_suboptimal_candidate(self):
        # projection along e_1: norm 2, strictly above the constant 4/3
        p = Matrix([[0, -1, -1], [0, 1, 0], [0, 0, 1]])
        assert projection_norm(ANCHOR, p) == F(2)

    def test_optimal_candidate_matches_constant(self):
        result = projection_constant(ANCHOR)
        assert projection_norm(ANCHOR, result.projection) == F(4, 3)

    def test_shape_contract(self):
        with pytest.raises(ContractError):
            projection_norm(ANCHOR, Matrix.identity(2))

    def test_idempotence_contract(self):
        with pytest.raises(ContractError):
            projection_norm(ANCHOR, Matrix.identity(3).scaled(F(1, 2)))

    def test_range_contract(self):
        # idempotent, but its range is not the subspace
        p = Matrix([[1, 0, 0], [0, 1, 0], [0, 0, 0]])
        with pytest.raises(ContractError):
            projection_norm(ANCHOR, p)


class TestGoodIndexSet:
    def test_anchor_set(self):
        result = projection_constant(ANCHOR)
        assert good_index_set(ANCHOR, result.right_inverse).members == (1,)

    def test_right_inverse_contract(self):
        with pytest.raises(ContractError):
            good_index_set(ANCHOR, Matrix([[1], [0], [0]]).scaled(F(2)))

    def test_block_is_invertible(self):
        rng = random.Random(606)
        for _ in range(8):
            ambient = rng.randint(3, 5)
            codim = rng.randint(1, 2)
            spec = random_spec(rng, ambient, codim)
            result = projection_constant(spec)
            chosen = good_index_set(spec, result.right_inverse)
            block = result.right_inverse.take_rows(chosen)
            f_block = spec.annihilator.take_rows(chosen)
            from linfiso.linalg import det

            assert det(block) != 0
            assert det(f_block) != 0


class TestNormGap:
    def test_anchor_holds_with_equality(self):
        result = projection_constant(ANCHOR)
        report = verify_norm_gap(ANCHOR, result)
        assert report.index_set.members == (1,)
        assert report.amplification == F(3)
        assert report.excess == F(2)
        assert report.bound == F(2)
        assert report.holds

    def test_explicit_set_override(self):
        result = projection_constant(ANCHOR)
        report = verify_norm_gap(ANCHOR, result, IndexSet((2,), 3))
        assert report.index_set.members == (2,)
        assert report.holds

    def test_isometric_case_bounds_norms_by_two(self):
        spec = subspace_from_annihilator([1, 1, 2])
        result = projection_constant(spec)
        report = verify_norm_gap(spec, result)
        # constant 1 forces excess <= 1, i.e. every norm at most 2
        assert result.constant == 1
        assert report.bound == 1
        assert report.excess <= 1
        fam = canonical_family(spec, report.index_set)
        assert all(v <= 2 for v in fam.norms().values())

    def test_holds_on_random_instances(self):
        rng = random.Random(607)
        for _ in range(10):
            ambient = rng.randint(3, 5)
            codim = rng.randint(1, 2)
            spec = random_spec(rng, ambient, codim)
            result = projection_constant(spec)
            report = verify_norm_gap(spec, result)
            assert report.holds
            assert report.excess >= 0
            assert report.amplification >= 0

    def test_gap_links_constant_and_verdict(self):
        rng = random.Random(608)
        for _ in range(10):
            ambient = rng.randint(3, 5)
            spec = random_spec(rng, ambient, 1)
            result = projection_constant(spec)
            verdict = decide_isometric(spec).verdict
            assert (result.constant == 1) == verdict
