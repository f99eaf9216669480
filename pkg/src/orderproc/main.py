#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
orderproc: algebra and probability of order processes.

Order processes are increasing, left-continuous families of partial orders,
stored as switching-time maps. This module is the entry point to the
probability side: model registry, sampling, exact and Monte Carlo values of
φ(Z) = μ(Q_Z).
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Union

import numpy as np

from orderproc.configs import AVAILABLE_MODELS, CHECKS_CONFIGS
from orderproc.measures.abstract_measure import AbstractMeasure, in_q_batch
from orderproc.order_process import OrderProcess
from orderproc.phi import PhiEstimate
from orderproc.utils import split_evenly

logger = logging.getLogger(__name__)


class OrderProc:
    """
    OrderProc class

    Example usage:
    ```python
    model = OrderProc.create_model('completion', {'n': 6, 'dist': 'uniform:0,1'})
    z = validate({(1, 2): 0.5})
    OrderProc.phi_exact(model, z)            # PhiEstimate(value=0.25, ...)
    OrderProc.estimate_phi(model, z, n=100_000, seed=7)
    ```
    """

    @staticmethod
    def available_models() -> list:
        """
        Returns the supported model kinds

        :return: list of available models
        """
        return list(AVAILABLE_MODELS.keys())

    @staticmethod
    def model_info(model: str) -> dict:
        return {'description': AVAILABLE_MODELS[model]['description']}

    @staticmethod
    def config_schema(model: str) -> dict:
        """
        Returns the configs associated with a model kind

        :param model: model name

        :return: dict of configs
        """
        return AVAILABLE_MODELS[model]['config_schema']

    @staticmethod
    def create_model(model_name: str, model_config: dict = None) -> AbstractMeasure:
        """
        Returns a model instance

        :param model_name: the name of the model
        :param model_config: the configuration dict

        :return: the model instance
        """
        return AVAILABLE_MODELS[model_name]['class'](model_config or {})

    @staticmethod
    def _model(model: Union[AbstractMeasure, str], model_config: dict = None) -> AbstractMeasure:
        if isinstance(model, str):
            return OrderProc.create_model(model, model_config)
        return model

    @staticmethod
    def sample(model: Union[AbstractMeasure, str], seed: int, model_config: dict = None) -> OrderProcess:
        return OrderProc._model(model, model_config).sample(seed)

    @staticmethod
    def phi_exact(model: Union[AbstractMeasure, str], z: OrderProcess, model_config: dict = None) -> PhiEstimate:
        """
        Closed-form φ(z) = μ(Q_z)

        :param model: model instance or name
        :param z: test process
        :param model_config: model configs' dict, when `model` is a name

        :return: exact PhiEstimate
        """
        return OrderProc._model(model, model_config).phi_exact(z)

    @staticmethod
    def estimate_phi(model: Union[AbstractMeasure, str],
                     z: OrderProcess,
                     n: int,
                     seed: int,
                     streams: int = 1,
                     workers: int = 1,
                     chunk_size: int = None) -> PhiEstimate:
        """
        Monte Carlo estimate of φ(z): the fraction of `n` samples lying in Q_z.

        The samples are split over `streams` independent generators seeded from
        `numpy.random.SeedSequence(seed).spawn(streams)`; the result depends on
        (model, z, n, seed, streams) only, whatever the number of `workers`.

        :param model: model instance or name
        :param z: test process
        :param n: number of samples
        :param seed: integer seed
        :param streams: number of random streams
        :param workers: threads running the streams
        :param chunk_size: samples drawn at once per stream

        :return: PhiEstimate with binomial standard error
        """
        if n < 1:
            raise ValueError(f"n must be >= 1, got {n}")
        if streams < 1:
            raise ValueError(f"streams must be >= 1, got {streams}")
        if workers < 1:
            raise ValueError(f"workers must be >= 1, got {workers}")
        measure = OrderProc._model(model)
        if chunk_size is None:
            chunk_size = CHECKS_CONFIGS['chunk_size']['default']
        children = np.random.SeedSequence(seed).spawn(streams)
        counts = split_evenly(n, streams)

        def run_stream(index: int) -> int:
            rng = np.random.default_rng(children[index])
            hits, remaining = 0, counts[index]
            while remaining > 0:
                size = min(chunk_size, remaining)
                hits += int(in_q_batch(measure.sample_batch(rng, size), z).sum())
                remaining -= size
            return hits

        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                hits = sum(pool.map(run_stream, range(streams)))
        else:
            hits = sum(run_stream(i) for i in range(streams))
        logger.debug(f"estimate_phi: {hits}/{n} hits for {z}")
        return PhiEstimate.from_hits(hits, n)

    @staticmethod
    def exact_evaluator(model: AbstractMeasure) -> Callable[[OrderProcess], PhiEstimate]:
        return model.phi_exact

    @staticmethod
    def mc_evaluator(model: AbstractMeasure, n: int, seed: int, streams: int = 1,
                     workers: int = 1) -> Callable[[OrderProcess], PhiEstimate]:
        """
        Monte Carlo evaluator reusing the same seed for every test process, so all
        values come from one empirical measure (common random numbers)
        """
        def evaluate(z: OrderProcess) -> PhiEstimate:
            return OrderProc.estimate_phi(model, z, n, seed, streams=streams, workers=workers)
        return evaluate
