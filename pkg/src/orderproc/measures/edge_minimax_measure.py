#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Edge Minimax Measure

Every ordered pair of the window gets an i.i.d. exponential raw time R(j, k);
the process is the minimax-path closure of R, so (j, k) switches as soon as
some chain of raw edges from j to k has switched completely.
"""

import math
from typing import Optional

import numpy as np

from orderproc.exceptions import InvalidModel, NoClosedForm
from orderproc.measures.abstract_measure import AbstractMeasure
from orderproc.order_process import OrderProcess, minimax_closure_matrix
from orderproc.phi import PhiEstimate
from orderproc.utils import _load_config


class EdgeMinimaxMeasure(AbstractMeasure):
    model_name = 'edge_minimax'
    config_schema = {
        'n': {
            'type': int,
            'description': "Window size: the ground elements are 0, ..., n-1",
            'options': None,
            'default': 4,
        },
        'rate': {
            'type': float,
            'description': "Rate of the exponential raw time of every ordered pair",
            'options': None,
            'default': 1.0,
        },
        'max_exact_states': {
            'type': int,
            'description': "Largest number of threshold cells the exact evaluator may enumerate",
            'options': None,
            'default': 500_000,
        },
    }

    def __init__(self, model_config: dict = None):
        super(EdgeMinimaxMeasure, self).__init__(model_config)
        self.rate = _load_config('rate', self.model_config, self.config_schema)
        if not self.rate > 0:
            raise InvalidModel(f"`rate` must be positive, got {self.rate}")
        self.max_exact_states = _load_config('max_exact_states', self.model_config, self.config_schema)
        self._diag = np.arange(self.window)

    def sample_batch(self, rng: np.random.Generator, size: int) -> np.ndarray:
        raw = rng.exponential(1.0 / self.rate, size=(size, self.window, self.window))
        raw[:, self._diag, self._diag] = np.inf
        closed = minimax_closure_matrix(raw)
        closed[:, self._diag, self._diag] = np.inf
        return closed

    def _cdf(self, t: float) -> float:
        return -math.expm1(-self.rate * t)

    def phi_exact(self, z: OrderProcess) -> PhiEstimate:
        """
        Enumerates, for every raw edge, which gap between consecutive thresholds of
        Z its raw time falls into. Pair (j, k) of Z with threshold t is in place
        iff j reaches k through edges whose raw time is <= t.
        """
        self._check_window(z)
        pairs = z.items()
        if not pairs:
            return PhiEstimate(1.0)
        thresholds = sorted({t for _, t in pairs})
        cells = len(thresholds) + 1
        edges = [(a, b) for a in range(self.window) for b in range(self.window) if a != b]
        states = cells ** len(edges)
        if states > self.max_exact_states:
            raise NoClosedForm(f"exact edge_minimax evaluation needs {states} states, "
                               f"above the cap of {self.max_exact_states}")
        cdf = [self._cdf(t) for t in thresholds]
        probabilities = np.array([cdf[0]] + [b - a for a, b in zip(cdf, cdf[1:])] + [1.0 - cdf[-1]])

        cell_of_edge = np.indices((cells,) * len(edges), dtype=np.int8).reshape(len(edges), -1).T
        counts = np.stack([(cell_of_edge == c).sum(axis=1) for c in range(cells)], axis=1)
        # product in fixed cell order: relabelled states get bit-identical weights
        weights = np.prod(probabilities[None, :] ** counts, axis=1)

        source = np.array([a for a, _ in edges])
        target = np.array([b for _, b in edges])
        hits = np.ones(states, dtype=bool)
        for level, t in enumerate(thresholds):
            adjacency = np.zeros((states, self.window, self.window), dtype=bool)
            adjacency[:, source, target] = cell_of_edge <= level
            for k in range(self.window):
                adjacency |= adjacency[:, :, k:k + 1] & adjacency[:, k:k + 1, :]
            for (j, k), s in pairs:
                if s == t:
                    hits &= adjacency[:, j, k]
        return PhiEstimate(min(1.0, math.fsum(weights[hits])))

    def continuity_bound(self, z: OrderProcess, eps: float) -> Optional[float]:
        return len(z) * self.window * (self.window - 1) * self.rate * eps
