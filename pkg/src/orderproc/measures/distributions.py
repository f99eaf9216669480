#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Duration distributions written as `uniform:a,b` or `exp:rate`
"""

from dataclasses import dataclass

from scipy import stats

from orderproc.exceptions import InvalidModel


@dataclass(frozen=True)
class Duration:
    """
    A frozen scipy distribution together with a bound on its density
    """
    spec: str
    dist: object
    max_density: float

    def cdf(self, t: float) -> float:
        return float(self.dist.cdf(t))

    def rvs(self, size, rng):
        return self.dist.rvs(size=size, random_state=rng)


def parse_duration(spec: str) -> Duration:
    """
    Parses a duration spec

    :param spec: `uniform:a,b` with 0 <= a < b, or `exp:rate` with rate > 0

    :return: Duration
    """
    kind, _, params = spec.partition(':')
    try:
        values = [float(v) for v in params.split(',')] if params else []
    except ValueError:
        raise InvalidModel(f"bad duration parameters in {spec!r}")
    if kind == 'uniform':
        if len(values) != 2 or not 0 <= values[0] < values[1]:
            raise InvalidModel(f"uniform durations need 0 <= a < b, got {spec!r}")
        a, b = values
        return Duration(spec, stats.uniform(loc=a, scale=b - a), 1.0 / (b - a))
    if kind == 'exp':
        if len(values) != 1 or not values[0] > 0:
            raise InvalidModel(f"exponential durations need a positive rate, got {spec!r}")
        rate, = values
        return Duration(spec, stats.expon(scale=1.0 / rate), rate)
    raise InvalidModel(f"unknown duration distribution {kind!r}, expected `uniform` or `exp`")
