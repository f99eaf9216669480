#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Test file for the hereditary module
"""
from unittest import TestCase

import numpy as np

from helpers import random_process
from orderproc.exceptions import NotAMember
from orderproc.hereditary import HereditaryFamily, cover_witnesses, covers, h, member, truncate
from orderproc.order_process import (EMPTY, OrderProcess, evaluate, join, leq, shift_minus, time_grid)
from orderproc.relation_core import D, join as relation_join


def _random_family(rng, size=None):
    size = int(rng.integers(0, 4)) if size is None else size
    return HereditaryFamily(tuple(random_process(rng, window=5) for _ in range(size)))


def _random_member(rng, fam):
    """
    h(fam), possibly delayed by a random multiple of 0.25
    """
    top = h(fam)
    if not top:
        return EMPTY
    return shift_minus(top, float(rng.integers(1, 4)) / 4) if rng.random() < 0.5 else top


class TestH(TestCase):

    def test_examples(self):
        self.assertEqual(h(HereditaryFamily()), EMPTY)
        fam = HereditaryFamily((OrderProcess({(1, 2): 1.0}), OrderProcess({(2, 3): 2.0})))
        self.assertEqual(h(fam), OrderProcess({(1, 2): 1.0, (2, 3): 2.0, (1, 3): 2.0}))
        z = OrderProcess({(1, 2): 0.5})
        self.assertEqual(h(HereditaryFamily((z,))), z)

    def test_pointwise_join_of_generators(self):
        rng = np.random.default_rng(300)
        for _ in range(100):
            fam = _random_family(rng, size=3)
            top = h(fam)
            for t in time_grid(*fam.generators):
                expected = D
                for gen in fam.generators:
                    expected = relation_join(expected, evaluate(gen, t))
                self.assertEqual(evaluate(top, t), expected)


class TestMember(TestCase):
    rng = np.random.default_rng(400)

    def test_examples(self):
        fam = HereditaryFamily((OrderProcess({(1, 2): 1.0}),))
        self.assertTrue(member(EMPTY, fam))
        self.assertTrue(member(OrderProcess({(1, 2): 2.0}), fam))
        self.assertFalse(member(OrderProcess({(1, 2): 0.5}), fam))
        self.assertIn(OrderProcess({(1, 2): 1.0}), fam)

    def test_generators_are_members(self):
        for _ in range(100):
            fam = _random_family(self.rng)
            for gen in fam.generators:
                self.assertTrue(member(gen, fam))

    def test_left_hereditary_sub_semigroup(self):
        for _ in range(500):
            fam = _random_family(self.rng)
            y, z = random_process(self.rng, window=5), random_process(self.rng, window=5)
            if member(y, fam) and member(z, fam):
                self.assertTrue(member(join(y, z), fam))
            if member(z, fam) and leq(y, z):
                self.assertTrue(member(y, fam))
            inside = _random_member(self.rng, fam)
            self.assertTrue(member(inside, fam))
            self.assertTrue(member(shift_minus(inside, 0.5), fam))

    def test_truncated_family_is_sub_family(self):
        for _ in range(100):
            fam = _random_family(self.rng)
            for gen in truncate(fam, 0.5).generators:
                self.assertTrue(member(gen, fam))


class TestCoverWitnesses(TestCase):
    rng = np.random.default_rng(500)

    def test_empty(self):
        self.assertEqual(cover_witnesses(EMPTY, HereditaryFamily(), 0.1), [])

    def test_single_pair(self):
        z = OrderProcess({(1, 2): 1.0})
        fam = HereditaryFamily((OrderProcess({(1, 2): 0.5}),))
        witnesses = cover_witnesses(z, fam, 0.25)
        self.assertEqual(witnesses, [OrderProcess({(1, 2): 1.25})])
        for t in time_grid(z, *witnesses):
            self.assertLessEqual(evaluate(z, t).pairs, evaluate(witnesses[0], t + 0.25).pairs)

    def test_two_pairs_two_steps(self):
        fam = HereditaryFamily((OrderProcess({(1, 2): 0.5, (3, 4): 0.25}),))
        z = OrderProcess({(1, 2): 1.0, (3, 4): 2.0})
        witnesses = cover_witnesses(z, fam, 0.5)
        self.assertEqual(len(witnesses), 2)
        for w in witnesses:
            self.assertEqual(len(set(w.times.values())), 1)
            self.assertTrue(member(w, fam))
        self.assertTrue(covers(z, witnesses, 0.5))

    def test_not_a_member(self):
        with self.assertRaises(NotAMember):
            cover_witnesses(OrderProcess({(1, 2): 0.5}), HereditaryFamily(), 0.1)

    def test_random_covering(self):
        for _ in range(100):
            fam = _random_family(self.rng, size=int(self.rng.integers(1, 4)))
            z = _random_member(self.rng, fam)
            eps = float(self.rng.choice([0.05, 0.25, 1.0]))
            witnesses = cover_witnesses(z, fam, eps)
            self.assertEqual(len(witnesses), len(z))
            for w in witnesses:
                self.assertTrue(member(w, fam))
            self.assertTrue(covers(z, witnesses, eps))
