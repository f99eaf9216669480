#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Order processes with finite support, encoded by switching times.

A process Y maps t ∈ [0, ∞) to a partial order. It is stored as the map
f(j, k) = inf{t : (j, k) ∈ Y(t)}; pairs absent from the map switch at ∞.
Left-continuity fixes the threshold as strict: (j, k) ∈ Y(t) iff f(j, k) < t.
Transitivity of every Y(t) is the max-triangle constraint
f(j, l) <= max(f(j, k), f(k, l)).
"""

import itertools
import math
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Set

import numpy as np

from orderproc.exceptions import ConstraintViolation
from orderproc.relation_core import Element, Pair, PartialOrder

INF = math.inf


class OrderProcess:
    """
    Immutable switching-time map of a finite-support order process.

    The constructor trusts its input; use :func:`validate` for untrusted maps
    and :func:`minimax_closure` to build the smallest valid process from raw edges.
    """
    __slots__ = ('_times', '_hash')

    def __init__(self, times: Mapping[Pair, float] = None):
        self._times = {(int(j), int(k)): float(t) for (j, k), t in (times or {}).items()}
        self._hash = None

    @property
    def times(self) -> Mapping[Pair, float]:
        return MappingProxyType(self._times)

    def __getitem__(self, pair: Pair) -> float:
        return self._times.get(pair, INF)

    def __contains__(self, pair: Pair) -> bool:
        return pair in self._times

    def __iter__(self):
        return iter(sorted(self._times))

    def __len__(self) -> int:
        return len(self._times)

    def __eq__(self, other) -> bool:
        if not isinstance(other, OrderProcess):
            return NotImplemented
        return self._times == other._times

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._times.items()))
        return self._hash

    def __repr__(self) -> str:
        body = ', '.join(f"({j},{k})->{t!r}" for (j, k), t in sorted(self._times.items()))
        return f"OrderProcess({{{body}}})"

    def __or__(self, other: 'OrderProcess') -> 'OrderProcess':
        return join(self, other)

    def __le__(self, other: 'OrderProcess') -> bool:
        return leq(self, other)

    def eval(self, t: float) -> PartialOrder:
        return evaluate(self, t)

    def items(self):
        return sorted(self._times.items())

    def switching_times(self) -> List[float]:
        return sorted(set(self._times.values()))

    def to_matrix(self, window: int) -> np.ndarray:
        """
        Dense (window, window) time matrix, `inf` for absent pairs and the diagonal

        :param window: size of the ground window {0, ..., window-1}

        :return: numpy array
        """
        matrix = np.full((window, window), INF)
        for (j, k), t in self._times.items():
            matrix[j, k] = t
        return matrix

    @classmethod
    def from_matrix(cls, matrix: np.ndarray) -> 'OrderProcess':
        rows, cols = np.nonzero(np.isfinite(matrix))
        return cls({(int(j), int(k)): float(matrix[j, k]) for j, k in zip(rows, cols) if j != k})


EMPTY = OrderProcess()


def validate(times: Mapping[Pair, float]) -> OrderProcess:
    """
    Checks a raw switching-time map and wraps it.

    Triples are scanned in sorted order of (j, k) then l, so the reported triple is
    the first failing one in that order.

    :param times: map from ordered pairs (j != k) to finite nonnegative times

    :return: the validated process
    """
    for (j, k), t in times.items():
        if j == k:
            raise ValueError(f"diagonal pair ({j},{k}) has no switching time")
        if not (0.0 <= t < INF):
            raise ValueError(f"switching time of ({j},{k}) must be finite and >= 0, got {t}")
    successors: Dict[Element, List[Element]] = {}
    for j, k in times:
        successors.setdefault(j, []).append(k)
    for j, k in sorted(times):
        for l in sorted(successors.get(k, ())):
            if l == j:
                continue
            if times.get((j, l), INF) > max(times[(j, k)], times[(k, l)]):
                raise ConstraintViolation(j, k, l)
    return OrderProcess(times)


def minimax_closure(raw: Mapping[Pair, float]) -> OrderProcess:
    """
    Smallest valid process whose times are <= those of `raw`: every pair gets the
    minimum over directed paths of the maximum edge time (bottleneck path value).

    :param raw: map from ordered pairs to times, not necessarily max-triangle

    :return: the closed process
    """
    raw = {pair: t for pair, t in raw.items() if pair[0] != pair[1]}
    if not raw:
        return EMPTY
    nodes = sorted({m for pair in raw for m in pair})
    index = {m: i for i, m in enumerate(nodes)}
    matrix = np.full((len(nodes), len(nodes)), INF)
    for (j, k), t in raw.items():
        matrix[index[j], index[k]] = min(matrix[index[j], index[k]], t)
    matrix = minimax_closure_matrix(matrix)
    return OrderProcess({(nodes[a], nodes[b]): matrix[a, b]
                         for a, b in zip(*np.nonzero(np.isfinite(matrix))) if a != b})


def minimax_closure_matrix(matrix: np.ndarray) -> np.ndarray:
    """
    Floyd-Warshall with (min, max) in place of (min, +). Works on a single
    (N, N) matrix or a batch (..., N, N). The diagonal of the result is meaningless.

    :param matrix: edge times, `inf` for missing edges

    :return: closed matrix (new array)
    """
    closed = np.array(matrix, dtype=float, copy=True)
    for k in range(closed.shape[-1]):
        through_k = np.maximum(closed[..., :, k:k + 1], closed[..., k:k + 1, :])
        np.minimum(closed, through_k, out=closed)
    return closed


def evaluate(y: OrderProcess, t: float) -> PartialOrder:
    """
    The partial order Y(t) = {(j, k) : f(j, k) < t} ∪ D

    :param y: process
    :param t: finite time >= 0

    :return: partial order at time t
    """
    return PartialOrder(frozenset(pair for pair, s in y.times.items() if s < t))


def join(y: OrderProcess, z: OrderProcess) -> OrderProcess:
    """
    Pointwise join (Y ∨ Z)(t) = Y(t) ∨ Z(t), computed as bottleneck paths over the
    merged edges with weight min(f_y, f_z)

    :param y: process
    :param z: process

    :return: the joined process
    """
    if not z:
        return y
    if not y:
        return z
    merged = dict(y.times)
    for pair, t in z.times.items():
        merged[pair] = min(merged.get(pair, INF), t)
    return minimax_closure(merged)


def join_all(processes: Iterable[OrderProcess]) -> OrderProcess:
    merged: Dict[Pair, float] = {}
    for process in processes:
        for pair, t in process.times.items():
            merged[pair] = min(merged.get(pair, INF), t)
    return minimax_closure(merged)


def leq(y: OrderProcess, z: OrderProcess) -> bool:
    """
    Y <= Z iff Y ∨ Z = Z, i.e. every pair of Y switches in Z no later than in Y

    :param y: process
    :param z: process

    :return: bool
    """
    return all(z[pair] <= t for pair, t in y.times.items())


def in_q(y: OrderProcess, z: OrderProcess) -> bool:
    """
    Membership of `y` in Q_Z = {Y : Z <= Y}

    :param y: candidate process
    :param z: the finite-support test process

    :return: bool
    """
    return leq(z, y)


def q_box(z: OrderProcess) -> Dict[Pair, tuple]:
    """
    Q_Z as a box of projections: the switching time of each pair of Z has to lie in [0, t]

    :param z: test process

    :return: dict pair -> (0.0, t)
    """
    return {pair: (0.0, t) for pair, t in z.items()}


def shift_minus(z: OrderProcess, eps: float) -> OrderProcess:
    """
    Z_{-eps}: t ↦ Z(t - eps), every switching time delayed by `eps`
    """
    if eps <= 0:
        raise ValueError(f"eps must be positive, got {eps}")
    return OrderProcess({pair: t + eps for pair, t in z.times.items()})


def shift_plus(z: OrderProcess, eps: float) -> OrderProcess:
    """
    Z_{+eps}: t ↦ Z(t + eps), every switching time advanced by `eps`, clamped at 0
    """
    if eps <= 0:
        raise ValueError(f"eps must be positive, got {eps}")
    return OrderProcess({pair: max(t - eps, 0.0) for pair, t in z.times.items()})


def truncate_below(z: OrderProcess, eps: float) -> OrderProcess:
    """
    Replaces the process by D on [0, eps]; equals shift_minus(shift_plus(z, eps), eps)
    """
    if eps <= 0:
        raise ValueError(f"eps must be positive, got {eps}")
    return OrderProcess({pair: max(t, eps) for pair, t in z.times.items()})


def support(y: OrderProcess) -> Set[Element]:
    return {m for pair in y.times for m in pair}


def permute(y: OrderProcess, sigma: Mapping[Element, Element]) -> OrderProcess:
    """
    Time-pointwise action of a finite-support permutation; unmapped elements stay fixed

    :param y: process
    :param sigma: bijection as a mapping

    :return: relabelled process
    """
    return OrderProcess({(sigma.get(j, j), sigma.get(k, k)): t for (j, k), t in y.times.items()})


def absorbing(window: int) -> OrderProcess:
    """
    All ordered pairs of {0, ..., window-1} switching at time 0
    """
    return OrderProcess({(j, k): 0.0 for j, k in itertools.permutations(range(window), 2)})


def time_grid(*processes: OrderProcess, extra: Iterable[float] = ()) -> List[float]:
    """
    Evaluation grid on which step processes can be compared exactly: every
    switching time t together with t ± δ, where δ is a quarter of the smallest
    gap between distinct times (0.25 if there are fewer than two), plus 0.

    :param processes: processes whose switching times enter the grid
    :param extra: additional times

    :return: sorted list of nonnegative times
    """
    times = sorted({t for p in processes for t in p.switching_times()} | set(extra) | {0.0})
    gaps = [b - a for a, b in zip(times, times[1:])]
    delta = min(gaps) / 4 if gaps else 0.25
    grid = set()
    for t in times:
        grid.update((t, t + delta))
        if t - delta >= 0:
            grid.add(t - delta)
    return sorted(grid)
