import dataclasses

import numpy as np
import pytest

from chebsig.cheb import Domain
from chebsig.conditioning import (
    Basis,
    BasisMatrix,
    NumericallySingularError,
    build_basis_matrix,
    clenshaw_curtis_weights,
    condition_number,
    conditioning_sweep,
    singular_values,
)

UNIT = Domain(-1.0, 1.0)


class TestWeights:
    def test_three_point_rule(self):
        assert np.allclose(clenshaw_curtis_weights(2), [1 / 3, 4 / 3, 1 / 3])

    def test_integrates_polynomials_exactly(self):
        w = clenshaw_curtis_weights(16)
        from chebsig.cheb import cheb_points_second_kind

        x = cheb_points_second_kind(16).points
        assert np.sum(w) == pytest.approx(2.0, rel=1e-14)
        assert np.sum(w * x ** 2) == pytest.approx(2 / 3, rel=1e-13)
        assert np.sum(w * x ** 8) == pytest.approx(2 / 9, rel=1e-13)


class TestBuildBasisMatrix:
    def test_constant_column_norm(self):
        m = build_basis_matrix(Basis.CHEBYSHEV, UNIT, 0, 64)
        assert np.sum(m.entries[:, 0] ** 2) == pytest.approx(2.0, abs=1e-10)

    def test_linear_monomial_column_norm(self):
        m = build_basis_matrix(Basis.MONOMIAL, UNIT, 1, 64)
        assert np.sum(m.entries[:, 1] ** 2) == pytest.approx(2 / 3, abs=1e-10)

    def test_resolution_guard(self):
        with pytest.raises(ValueError):
            build_basis_matrix(Basis.CHEBYSHEV, UNIT, 10, 43)


class TestSingularValues:
    def test_embedded_diagonal(self):
        m = BasisMatrix(Basis.MONOMIAL, UNIT, 1, 2, np.diag([3.0, 1.0]))
        assert np.allclose(singular_values(m), [3.0, 1.0])

    def test_reference_extremes(self):
        sv = singular_values(build_basis_matrix(Basis.CHEBYSHEV, UNIT, 10))
        assert sv[0] == pytest.approx(1.5238, rel=1e-2)
        assert sv[-1] == pytest.approx(0.4104, rel=1e-2)

    def test_reference_full_listing(self):
        listing = [
            1.523832995601609, 1.226785409090009, 1.225285973614859,
            1.145821182000790, 1.141511078719328, 1.004939431619162,
            0.998319547384275, 0.787441811713346, 0.782619113084012,
            0.414600480581676, 0.410444421159920,
        ]
        sv = singular_values(build_basis_matrix(Basis.CHEBYSHEV, UNIT, 10))
        assert np.max(np.abs(sv - listing)) < 1e-10

    def test_frobenius_identity(self):
        rng = np.random.default_rng(6)
        entries = rng.standard_normal((64, 5))
        m = BasisMatrix(Basis.MONOMIAL, UNIT, 4, 64, entries)
        sv = singular_values(m)
        assert np.sum(sv ** 2) == pytest.approx(
            np.sum(entries ** 2), rel=1e-10
        )


class TestConditionNumber:
    def test_chebyshev_basis(self):
        cond = condition_number(build_basis_matrix(Basis.CHEBYSHEV, UNIT, 10))
        assert cond == pytest.approx(3.7126, rel=1e-2)

    def test_monomials_symmetric_interval(self):
        cond = condition_number(build_basis_matrix(Basis.MONOMIAL, UNIT, 10))
        assert cond == pytest.approx(3.073e3, rel=2e-2)

    def test_monomials_unit_interval(self):
        cond = condition_number(
            build_basis_matrix(Basis.MONOMIAL, Domain(0.0, 1.0), 10)
        )
        assert cond == pytest.approx(2.2871e7, rel=5e-2)

    def test_numerically_singular_rejected(self):
        entries = np.zeros((8, 2))
        entries[:, 0] = 1.0
        entries[:, 1] = 1.0 + 1e-15
        m = BasisMatrix(Basis.MONOMIAL, UNIT, 1, 8, entries)
        with pytest.raises(NumericallySingularError):
            condition_number(m)

    def test_scaling_invariance(self):
        m = build_basis_matrix(Basis.CHEBYSHEV, UNIT, 10)
        scaled = dataclasses.replace(m, entries=m.entries * 17.5)
        a, b = condition_number(m), condition_number(scaled)
        assert abs(a - b) < 1e-12 * a


class TestConditioningSweep:
    def test_degree_zero_is_one(self):
        for basis in Basis:
            assert conditioning_sweep(basis, UNIT, 0)[0] == pytest.approx(1.0)

    def test_chebyshev_stays_small(self):
        sweep = conditioning_sweep(Basis.CHEBYSHEV, UNIT, 10)
        assert np.all(sweep >= 1.0)
        assert np.all(sweep <= 4.0)

    def test_monomial_growth(self):
        sweep = conditioning_sweep(Basis.MONOMIAL, UNIT, 10)
        assert np.all(np.diff(sweep) >= 0)
        assert sweep[-1] == pytest.approx(3.073e3, rel=2e-2)

    def test_unit_interval_monomials_worse(self):
        sym = conditioning_sweep(Basis.MONOMIAL, UNIT, 10)
        unit = conditioning_sweep(Basis.MONOMIAL, Domain(0.0, 1.0), 10)
        assert unit[0] == pytest.approx(sym[0])
        assert np.all(unit[1:] > sym[1:])

    def test_grid_refinement_stability(self):
        for basis in Basis:
            coarse = conditioning_sweep(basis, UNIT, 10, grid_size=512)
            fine = conditioning_sweep(basis, UNIT, 10, grid_size=1024)
            assert np.max(np.abs(fine - coarse) / fine) < 1e-3
