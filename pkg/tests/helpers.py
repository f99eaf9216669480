#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Random instances shared by the tests
"""

import itertools

import numpy as np

from orderproc.order_process import OrderProcess, minimax_closure
from orderproc.relation_core import PartialOrder, transitive_closure


def random_process(rng: np.random.Generator, window: int = 6, max_support: int = 6,
                   density: float = 0.4, grid_times: bool = True) -> OrderProcess:
    """
    Minimax closure of random edges among at most `max_support` elements of the
    window. Grid times (multiples of 0.25) produce ties on purpose.
    """
    size = int(rng.integers(2, max(2, min(window, max_support)) + 1))
    nodes = [int(m) for m in rng.choice(window, size=size, replace=False)]
    raw = {}
    for j, k in itertools.permutations(nodes, 2):
        if rng.random() < density:
            raw[(j, k)] = float(rng.integers(0, 12)) / 4 if grid_times else float(rng.uniform(0, 3))
    return minimax_closure(raw)


def random_order(rng: np.random.Generator, window: int = 6, density: float = 0.2) -> PartialOrder:
    raw = [(j, k) for j, k in itertools.permutations(range(window), 2) if rng.random() < density]
    return transitive_closure(raw)


def violates_max_triangle(batch: np.ndarray) -> bool:
    """
    Vectorised max-triangle check over a batch of (n, n) time matrices
    """
    window = batch.shape[-1]
    through = np.maximum(batch[:, :, :, None], batch[:, None, :, :])  # [s, j, k, l]
    direct = batch[:, :, None, :]  # [s, j, ., l]
    j, k, l = np.meshgrid(np.arange(window), np.arange(window), np.arange(window), indexing='ij')
    distinct = (j != k) & (k != l) & (j != l)
    return bool(((direct > through) & distinct[None]).any())
