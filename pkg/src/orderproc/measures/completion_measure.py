#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Completion Measure

Jobs 0, ..., n-1 run with i.i.d. random durations. A job starts once all the
jobs it depends on are finished, so its completion time is
C_m = max(C_p for p required before m) + duration_m. The pair (j, k) of the
base relation switches when both jobs are done: f(j, k) = max(C_j, C_k).
With the `full` base every pair is related and C_m is the duration itself.
"""

import logging
import math
from typing import List, Optional, Tuple

import networkx as nx
import numpy as np

from orderproc.exceptions import InvalidModel, NoClosedForm
from orderproc.measures.abstract_measure import AbstractMeasure, _blank
from orderproc.measures.distributions import parse_duration
from orderproc.order_process import OrderProcess, support
from orderproc.phi import PhiEstimate
from orderproc.utils import _load_config

logger = logging.getLogger(__name__)


class CompletionMeasure(AbstractMeasure):
    model_name = 'completion'
    config_schema = {
        'n': {
            'type': int,
            'description': "Number of jobs; the ground elements are 0, ..., n-1",
            'options': None,
            'default': 6,
        },
        'dist': {
            'type': str,
            'description': "Duration distribution, `uniform:a,b` or `exp:rate`",
            'options': None,
            'default': 'uniform:0,1',
        },
        'base': {
            'type': str,
            'description': "`full` relates every pair of jobs; `dag` uses the precedence edges in `dag_edges` "
                           "(with their transitive closure)",
            'options': ['full', 'dag'],
            'default': 'full',
        },
        'dag_edges': {
            'type': list,
            'description': "Precedence edges (j, k): job j must finish before job k starts",
            'options': None,
            'default': [],
        },
        'permute': {
            'type': bool,
            'description': "Relabel the jobs by a uniform random permutation in every sample",
            'options': None,
            'default': False,
        },
    }

    def __init__(self, model_config: dict = None):
        super(CompletionMeasure, self).__init__(model_config)
        self.duration = parse_duration(_load_config('dist', self.model_config, self.config_schema))
        self.base = _load_config('base', self.model_config, self.config_schema)
        self.permute = _load_config('permute', self.model_config, self.config_schema)
        self.dag = self._build_dag(_load_config('dag_edges', self.model_config, self.config_schema))
        self._order = list(nx.topological_sort(self.dag))
        self._predecessors = {m: sorted(self.dag.predecessors(m)) for m in self._order}
        closed = nx.transitive_closure_dag(self.dag)
        self._related: List[Tuple[int, int]] = sorted(closed.edges)
        logger.debug(f"completion model: base={self.base}, {len(self._related)} related pairs on {self.window} jobs")

    def _build_dag(self, edges) -> nx.DiGraph:
        dag = nx.DiGraph()
        dag.add_nodes_from(range(self.window))
        if self.base == 'full':
            if edges:
                raise InvalidModel("`dag_edges` is only used with `base=dag`")
            return dag
        for j, k in edges:
            if not (0 <= j < self.window and 0 <= k < self.window) or j == k:
                raise InvalidModel(f"precedence edge ({j},{k}) is not inside the window of size {self.window}")
            dag.add_edge(int(j), int(k))
        if not nx.is_directed_acyclic_graph(dag):
            raise InvalidModel(f"precedence edges contain a cycle: {nx.find_cycle(dag)}")
        return dag

    def completion_times(self, rng: np.random.Generator, size: int) -> np.ndarray:
        """
        Draws completion times of all jobs

        :param rng: numpy random generator
        :param size: number of independent runs

        :return: array of shape (size, n)
        """
        durations = np.asarray(self.duration.rvs((size, self.window), rng), dtype=float)
        if self.base == 'full':
            return durations
        completion = np.zeros_like(durations)
        for m in self._order:
            start = np.zeros(size)
            for p in self._predecessors[m]:
                start = np.maximum(start, completion[:, p])
            completion[:, m] = start + durations[:, m]
        return completion

    def sample_batch(self, rng: np.random.Generator, size: int) -> np.ndarray:
        completion = self.completion_times(rng, size)
        if self.base == 'full':
            batch = np.maximum(completion[:, :, None], completion[:, None, :])
            idx = np.arange(self.window)
            batch[:, idx, idx] = np.inf
        else:
            batch = _blank(size, self.window)
            for j, k in self._related:
                batch[:, j, k] = np.maximum(completion[:, j], completion[:, k])
        if self.permute:
            labels = rng.permuted(np.tile(np.arange(self.window), (size, 1)), axis=1)
            relabelled = np.empty_like(batch)
            relabelled[np.arange(size)[:, None, None], labels[:, :, None], labels[:, None, :]] = batch
            batch = relabelled
        return batch

    def phi_exact(self, z: OrderProcess) -> PhiEstimate:
        """
        With the full base, Y ∈ Q_Z iff C_m <= b_m for every m in the support of Z,
        b_m being the earliest switching time of Z at a pair incident to m. The C_m
        are independent, so φ(Z) = ∏ F(b_m).
        """
        self._check_window(z)
        if self.base != 'full':
            raise NoClosedForm("the completion model has a closed form only with `base=full`")
        bounds = {}
        for (j, k), t in z.items():
            bounds[j] = min(bounds.get(j, math.inf), t)
            bounds[k] = min(bounds.get(k, math.inf), t)
        factors = sorted(self.duration.cdf(b) for b in bounds.values())
        return PhiEstimate(math.prod(factors))

    def continuity_bound(self, z: OrderProcess, eps: float) -> Optional[float]:
        if self.base == 'full':
            return len(support(z)) * eps * self.duration.max_density
        return 2 * len(z) * eps * self.duration.max_density
