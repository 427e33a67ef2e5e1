import itertools
import math

import numpy as np
from django.test import SimpleTestCase

from maxsub.bruteforce import brute_force_opt
from maxsub.exceptions import SizeGuardError
from maxsub.objectives import (
    Instance, ObjectiveKind, coverage_diversity_value, cut_value, facility_diversity_value,
)

from .helpers import handle_for, path_graph, random_cut, random_similarity


class BruteForceTests(SimpleTestCase):

    def test_path_graph(self):
        cert = brute_force_opt(handle_for(path_graph(), 1), 1)
        self.assertEqual(cert.opt_set.elements, (1,))
        self.assertEqual(cert.opt_value, 2.0)
        self.assertEqual(cert.enumerated, 4)

    def test_single_element_has_zero_optimum(self):
        cert = brute_force_opt(handle_for(Instance(ObjectiveKind.CUT, [[0]]), 1), 1)
        self.assertEqual(cert.opt_value, 0.0)
        self.assertEqual(cert.opt_set.elements, ())

    def test_size_guard(self):
        gen = np.random.default_rng(0)
        with self.assertRaises(SizeGuardError):
            brute_force_opt(handle_for(random_cut(25, gen), 2), 2)

    def test_matches_reverse_order_enumeration(self):
        gen = np.random.default_rng(4)
        values = {
            ObjectiveKind.CUT: cut_value,
            ObjectiveKind.COVERAGE: coverage_diversity_value,
            ObjectiveKind.FACILITY: facility_diversity_value,
        }
        kinds = list(values)
        k = 3
        for index in range(50):
            kind = kinds[index % 3]
            n = int(gen.integers(6, 13))
            if kind is ObjectiveKind.CUT:
                inst = random_cut(n, gen)
            else:
                inst = random_similarity(kind, n, gen)
            value = values[kind]
            expected = max(value(inst, combo)
                           for size in reversed(range(k + 1))
                           for combo in reversed(list(itertools.combinations(range(n), size))))
            cert = brute_force_opt(handle_for(inst, k), k)
            with self.subTest(index=index, kind=kind, n=n):
                self.assertAlmostEqual(cert.opt_value, expected, delta=1e-9)
                self.assertAlmostEqual(value(inst, cert.opt_set), expected, delta=1e-9)
                self.assertEqual(cert.enumerated, sum(math.comb(n, size) for size in range(k + 1)))

    def test_ties_prefer_smallest_tuple(self):
        cert = brute_force_opt(handle_for(Instance(ObjectiveKind.CUT, [[0, 1], [1, 0]]), 1), 1)
        self.assertEqual(cert.opt_set.elements, (0,))
