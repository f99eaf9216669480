#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Values of φ(Z) = μ(Q_Z) and the evaluator protocol used by the checkers
"""

import math
from dataclasses import dataclass
from typing import Callable, Union

from orderproc.order_process import OrderProcess


@dataclass(frozen=True)
class PhiEstimate:
    """
    φ(Z) either computed exactly (`stderr` 0) or estimated from `n` samples
    """
    value: float
    stderr: float = 0.0
    n: int = 0
    exact: bool = True

    def __post_init__(self):
        if not 0.0 <= self.value <= 1.0:
            raise ValueError(f"phi value out of [0, 1]: {self.value}")
        if self.exact and self.stderr != 0.0:
            raise ValueError("exact estimates carry no standard error")

    @classmethod
    def from_hits(cls, hits: int, n: int) -> 'PhiEstimate':
        value = hits / n
        return cls(value=value, stderr=math.sqrt(value * (1.0 - value) / n), n=n, exact=False)


Evaluator = Callable[[OrderProcess], Union[PhiEstimate, float]]


def as_estimate(value: Union[PhiEstimate, float]) -> PhiEstimate:
    """
    Plain floats returned by user evaluators count as exact values
    """
    if isinstance(value, PhiEstimate):
        return value
    return PhiEstimate(value=float(value))


def tolerance(*estimates: PhiEstimate, sigmas: float = 4.0, exact_slack: float = 1e-12) -> float:
    """
    Allowed gap when comparing the given estimates: `sigmas` times the propagated
    standard error, or the rounding slack when all of them are exact

    :param estimates: the compared values
    :param sigmas: stderr multiplier
    :param exact_slack: allowance for floating-point rounding between exact values

    :return: nonnegative tolerance
    """
    if all(e.exact for e in estimates):
        return exact_slack
    return sigmas * math.sqrt(sum(e.stderr ** 2 for e in estimates))
