#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Mixture Measure

Finite convex combination of measures on a common window
"""

import math
from typing import List, Optional, Tuple

import numpy as np

from orderproc.exceptions import InvalidModel
from orderproc.measures.abstract_measure import AbstractMeasure
from orderproc.order_process import OrderProcess
from orderproc.phi import PhiEstimate
from orderproc.utils import _load_config

WEIGHT_TOLERANCE = 1e-12


class MixtureMeasure(AbstractMeasure):
    model_name = 'mixture'
    config_schema = {
        'n': {
            'type': int,
            'description': "Window size; defaults to the common window of the components",
            'options': None,
            'default': None,
        },
        'components': {
            'type': list,
            'description': "List of (weight, measure) pairs, positive weights summing to 1",
            'options': None,
            'default': [],
        },
    }

    def __init__(self, model_config: dict = None):
        super(MixtureMeasure, self).__init__(model_config)
        components: List[Tuple[float, AbstractMeasure]] = \
            [(float(w), m) for w, m in _load_config('components', self.model_config, self.config_schema)]
        if not components:
            raise InvalidModel("a mixture needs at least one component")
        weights = [w for w, _ in components]
        if any(w <= 0 for w in weights):
            raise InvalidModel(f"mixture weights must be positive, got {weights}")
        if abs(math.fsum(weights) - 1.0) > WEIGHT_TOLERANCE:
            raise InvalidModel(f"mixture weights must sum to 1, got {math.fsum(weights)}")
        windows = {m.window for _, m in components}
        if self.window is None and len(windows) == 1:
            self.window = windows.pop()
        elif windows != {self.window}:
            raise InvalidModel(f"components live on windows {sorted(windows)}, expected {self.window}")
        self.components = components
        self.weights = np.array(weights)

    def sample_batch(self, rng: np.random.Generator, size: int) -> np.ndarray:
        chosen = rng.choice(len(self.components), size=size, p=self.weights / self.weights.sum())
        batch = np.empty((size, self.window, self.window))
        for index, (_, measure) in enumerate(self.components):
            picked = chosen == index
            if picked.any():
                batch[picked] = measure.sample_batch(rng, int(picked.sum()))
        return batch

    def phi_exact(self, z: OrderProcess) -> PhiEstimate:
        self._check_window(z)
        value = math.fsum(w * m.phi_exact(z).value for w, m in self.components)
        return PhiEstimate(min(1.0, value))

    def continuity_bound(self, z: OrderProcess, eps: float) -> Optional[float]:
        bounds = [m.continuity_bound(z, eps) for _, m in self.components]
        if any(b is None for b in bounds):
            return None
        return max(bounds)
