#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
API that the probability models on order processes should follow
"""

from abc import ABC, abstractmethod
from typing import Optional

import numpy as np

from orderproc.exceptions import InvalidModel, NoClosedForm, SupportOutOfWindow
from orderproc.order_process import OrderProcess, q_box, support, validate
from orderproc.phi import PhiEstimate
from orderproc.utils import _load_config


class AbstractMeasure(ABC):
    """
    Abstract measure class.

    A measure lives on the window {0, ..., n-1} and draws batches of dense time
    matrices: shape (size, n, n), `inf` for absent pairs and on the diagonal.
    """
    model_name = None
    config_schema = {}

    def __init__(self, model_config: dict = None):
        self.model_config = dict(model_config or {})
        unknown = set(self.model_config) - set(self.config_schema)
        if unknown:
            raise InvalidModel(f"unknown keys for `{self.model_name}`: {sorted(unknown)}")
        self.window = _load_config('n', self.model_config, self.config_schema)
        if self.window is not None and self.window < 1:
            raise InvalidModel(f"window size must be >= 1, got {self.window}")

    @abstractmethod
    def sample_batch(self, rng: np.random.Generator, size: int) -> np.ndarray:
        """
        Draws `size` independent processes

        :param rng: numpy random generator
        :param size: number of samples

        :return: array of shape (size, window, window)
        """
        pass

    def sample(self, seed: int) -> OrderProcess:
        """
        One process, a deterministic function of the seed

        :param seed: integer seed

        :return: validated OrderProcess
        """
        matrix = self.sample_batch(np.random.default_rng(seed), 1)[0]
        return validate(OrderProcess.from_matrix(matrix).times)

    def phi_exact(self, z: OrderProcess) -> PhiEstimate:
        raise NoClosedForm(f"`{self.model_name}` has no exact evaluator for this configuration")

    def continuity_bound(self, z: OrderProcess, eps: float) -> Optional[float]:
        """
        Upper bound on φ(shift_minus(z, eps)) - φ(z); None when the model gives none
        """
        return None

    def _check_window(self, z: OrderProcess):
        outside = sorted(m for m in support(z) if m >= self.window)
        if outside:
            raise SupportOutOfWindow(f"elements {outside} are outside the window of size {self.window}")

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.model_config})"


def _blank(size: int, window: int) -> np.ndarray:
    return np.full((size, window, window), np.inf)


def in_q_batch(batch: np.ndarray, z: OrderProcess) -> np.ndarray:
    """
    Vectorised :func:`orderproc.order_process.in_q` over a batch of time matrices

    :param batch: (size, n, n) time matrices
    :param z: test process

    :return: boolean array of shape (size,)
    """
    window = batch.shape[-1]
    hits = np.ones(batch.shape[0], dtype=bool)
    for (j, k), (low, high) in q_box(z).items():
        if j >= window or k >= window:
            return np.zeros(batch.shape[0], dtype=bool)
        hits &= (batch[:, j, k] >= low) & (batch[:, j, k] <= high)
    return hits
