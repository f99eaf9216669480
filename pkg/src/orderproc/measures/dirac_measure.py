#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Dirac Measure

Point mass at a fixed process
"""

import numpy as np

from orderproc.exceptions import InvalidModel, SupportOutOfWindow
from orderproc.measures.abstract_measure import AbstractMeasure
from orderproc.order_process import OrderProcess, in_q, support, validate
from orderproc.phi import PhiEstimate
from orderproc.utils import _load_config


class DiracMeasure(AbstractMeasure):
    model_name = 'dirac'
    config_schema = {
        'n': {
            'type': int,
            'description': "Window size: the ground elements are 0, ..., n-1",
            'options': None,
            'default': 6,
        },
        'z': {
            'type': OrderProcess,
            'description': "The process carrying all the mass",
            'options': None,
            'default': OrderProcess(),
        },
    }

    def __init__(self, model_config: dict = None):
        super(DiracMeasure, self).__init__(model_config)
        z = _load_config('z', self.model_config, self.config_schema)
        if not isinstance(z, OrderProcess):
            raise InvalidModel(f"`z` must be an OrderProcess, got {type(z).__name__}")
        self.z = validate(z.times)
        try:
            self._check_window(self.z)
        except SupportOutOfWindow as e:
            raise InvalidModel(str(e))
        self._matrix = self.z.to_matrix(self.window)

    def sample_batch(self, rng: np.random.Generator, size: int) -> np.ndarray:
        return np.broadcast_to(self._matrix, (size, self.window, self.window)).copy()

    def phi_exact(self, z: OrderProcess) -> PhiEstimate:
        self._check_window(z)
        return PhiEstimate(1.0 if in_q(self.z, z) else 0.0)
