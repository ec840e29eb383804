#!/usr/bin/env python

"""
Unit Tests for budget.py module.
"""

from unittest import main, TestCase

from shapecompiler.dataset.budget import entropy_budget, budget_levels
from shapecompiler.definitions.config import BudgetPolicy


class BudgetTests(TestCase):
    def setUp(self):
        self.policy = BudgetPolicy()

    def test_linear(self):
        self.assertEqual(entropy_budget(5.0, self.policy), 550)
        self.assertEqual(entropy_budget(3.0, self.policy), 100)
        self.assertEqual(entropy_budget(7.0, self.policy), 1000)

    def test_clamped(self):
        self.assertEqual(entropy_budget(0.0, self.policy), 100)
        self.assertEqual(entropy_budget(8.0, self.policy), 1000)

    def test_monotone(self):
        budgets = [entropy_budget(h / 10.0, self.policy) for h in range(0, 81)]
        self.assertEqual(budgets, sorted(budgets))

    def test_levels(self):
        levels = [10, 30, 50, 100, 500, 1000]
        self.assertEqual(budget_levels(levels, 550), [10, 30, 50, 100, 500, 550])
        self.assertEqual(budget_levels(levels, 100), [10, 30, 50, 100])
        self.assertEqual(budget_levels([10, 30], 5), [5])


if __name__ == '__main__':
    main()
