#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Left-hereditary sub-semigroups generated by finitely many processes.

The smallest join-closed, downward-closed family containing generators G is
{Z : Z <= ⋁G}, so membership reduces to a single order test against h(G).
"""

import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Sequence, Tuple

from orderproc.exceptions import NotAMember
from orderproc.order_process import (EMPTY, OrderProcess, evaluate, join_all, leq, time_grid,
                                     truncate_below)
from orderproc.relation_core import join as relation_join, leq as relation_leq, D

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HereditaryFamily:
    generators: Tuple[OrderProcess, ...] = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, 'generators', tuple(self.generators))

    def __contains__(self, z: OrderProcess) -> bool:
        return member(z, self)


def h(fam: HereditaryFamily) -> OrderProcess:
    """
    h(I) = ⋁_{Z ∈ I} Z, the largest element of the family

    :param fam: family

    :return: join of the generators
    """
    if not fam.generators:
        return EMPTY
    return join_all(fam.generators)


def member(z: OrderProcess, fam: HereditaryFamily) -> bool:
    return leq(z, h(fam))


def cover_witnesses(z: OrderProcess, fam: HereditaryFamily, eps: float) -> List[OrderProcess]:
    """
    Finitely many members whose join, taken eps later, dominates `z` at every time.

    For each pair (j, k) of `z` with switching time t0, the witness is D on
    [0, t0 + eps] and afterwards the partial order h(fam)(t0 + eps); in the
    encoding, every pair of h(fam) switching before t0 + eps gets time t0 + eps.

    :param z: a member of `fam`
    :param fam: the family
    :param eps: positive time slack

    :return: one witness per pair of `z`, in sorted pair order
    """
    if eps <= 0:
        raise ValueError(f"eps must be positive, got {eps}")
    top = h(fam)
    if not leq(z, top):
        raise NotAMember(f"{z} is not below the family join {top}")
    witnesses = []
    for pair, t0 in z.items():
        switch = t0 + eps
        witnesses.append(OrderProcess({p: switch for p, t in top.times.items() if t < switch}))
    logger.debug(f"{len(witnesses)} cover witnesses at eps={eps}")
    return witnesses


def covers(z: OrderProcess, witnesses: Sequence[OrderProcess], eps: float, grid: Iterable[float] = None) -> bool:
    """
    Checks Z(t) <= ⋁ W(t + eps) over the witnesses for every grid time

    :param z: covered process
    :param witnesses: output of :func:`cover_witnesses`
    :param eps: the slack used to build them
    :param grid: evaluation times, defaults to :func:`time_grid` of all processes involved

    :return: bool
    """
    if grid is None:
        grid = time_grid(z, *witnesses, extra=[t - eps for w in witnesses for t in w.times.values() if t >= eps])
    for t in grid:
        covering = D
        for w in witnesses:
            covering = relation_join(covering, evaluate(w, t + eps))
        if not relation_leq(evaluate(z, t), covering):
            logger.debug(f"covering fails at t={t}")
            return False
    return True


def truncate(fam: HereditaryFamily, eps: float) -> HereditaryFamily:
    """
    The family with every generator replaced by D on [0, eps]; a sub-family of `fam`
    """
    return HereditaryFamily(tuple(truncate_below(gen, eps) for gen in fam.generators))
