from fractions import Fraction

import numpy as np
from django.test import SimpleTestCase

from subfactorkit.core.exceptions import DimensionCapExceeded
from subfactorkit.core.exceptions import Infeasible
from subfactorkit.core.exceptions import NotFound
from subfactorkit.core.exceptions import ParameterOutOfRange
from subfactorkit.projection_sums import RankProfile
from subfactorkit.projection_sums import solve_sum
from subfactorkit.projection_sums.solver import polish

from ..base import MatrixAssertionsMixin


class SolverTests(MatrixAssertionsMixin, SimpleTestCase):
    def test_three_projections_in_dimension_two(self):
        result = solve_sum(3, Fraction(3, 2), 2, seed=0)
        self.assertLess(result.residuals["sum"], 1e-8)
        self.assertLess(result.max_residual, 1e-8)
        self.assertEqual(result.info["construction"], "solver")
        self.assertEqual(result.info["ranks"], [1, 1, 1])
        self.assertEqual(result.ranks(), [1, 1, 1])

    def test_interval_value(self):
        result = solve_sum(4, 2, 3, seed=1)
        self.assertLess(result.max_residual, 1e-8)

    def test_grid_value_without_a_closed_form(self):
        result = solve_sum(4, Fraction(7, 4), 16, seed=0, restarts=50)
        self.assertLess(result.max_residual, 1e-8)
        self.assertEqual(sum(result.ranks()), 28)
        self.assertEqual(result.dim, 16)

    def test_seeded_runs_repeat(self):
        first = solve_sum(3, Fraction(3, 2), 2, seed=5)
        second = solve_sum(3, Fraction(3, 2), 2, seed=5, workers=3)
        self.assertEqual(first.info["restart"], second.info["restart"])
        for p, q in zip(first.projections, second.projections):
            self.assertMatrixEqual(p, q)

    def test_infeasible(self):
        with self.assertRaises(Infeasible):
            solve_sum(4, Fraction(1, 2), 2)

    def test_restart_budget(self):
        with self.assertRaises(ParameterOutOfRange):
            solve_sum(3, Fraction(3, 2), 2, restarts=0)

    def test_cap(self):
        with self.assertRaises(DimensionCapExceeded):
            solve_sum(4, 2, 3, cap=2)

    def test_not_found(self):
        # rank 2 in dimension 2 is the identity, and 1 + p is never (3/2) 1
        profile = RankProfile(ranks=(2, 1, 0), dim=2, beta=Fraction(3, 2))
        with self.assertRaises(NotFound) as cm:
            solve_sum(3, Fraction(3, 2), 2, profile=profile, restarts=2, max_iterations=20)
        self.assertGreater(cm.exception.best_residual, 0.4)

    def test_profile_must_match(self):
        profile = RankProfile(ranks=(1, 1, 1), dim=2, beta=Fraction(3, 2))
        with self.assertRaises(ParameterOutOfRange):
            solve_sum(3, 1, 2, profile=profile)

    def test_polish_keeps_projections(self):
        rng = np.random.default_rng(3)
        angles = 2 * np.pi * np.arange(3) / 3 + 0.01 * rng.standard_normal(3)
        projections = []
        for angle in angles:
            v = np.array([np.cos(angle / 2), np.sin(angle / 2)], dtype=np.complex128)
            projections.append(np.outer(v, v.conj()))
        target = 1.5 * np.eye(2)
        start = np.linalg.norm(sum(projections) - target, 2)
        polished, residual = polish(projections, target, steps=20)
        self.assertLess(residual, start)
        for p in polished:
            self.assertMatrixEqual(p @ p, p, tol=1e-10)
