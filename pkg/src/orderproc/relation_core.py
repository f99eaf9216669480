#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Finite-support partial orders on the natural numbers.

A partial order here is a reflexive, transitive relation which need not be
anti-symmetric. Only the non-diagonal part is stored; the diagonal `D` is
always implied.
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Mapping, Set, Tuple

import networkx as nx

Element = int
Pair = Tuple[Element, Element]


@dataclass(frozen=True)
class PartialOrder:
    """
    Reflexive transitive relation given by its finite non-diagonal pairs.

    Build values with :func:`transitive_closure`; the constructor does not close `pairs`.
    """
    pairs: FrozenSet[Pair] = frozenset()

    def __or__(self, other: 'PartialOrder') -> 'PartialOrder':
        return join(self, other)

    def __le__(self, other: 'PartialOrder') -> bool:
        return leq(self, other)

    def __contains__(self, pair: Pair) -> bool:
        j, k = pair
        return j == k or pair in self.pairs

    def __len__(self) -> int:
        return len(self.pairs)

    def __repr__(self) -> str:
        return f"PartialOrder({sorted(self.pairs)})"


D = PartialOrder()


def transitive_closure(raw: Iterable[Pair]) -> PartialOrder:
    """
    Smallest partial order containing `raw`. Diagonal entries in `raw` are dropped.

    :param raw: finite collection of ordered pairs

    :return: the closed partial order
    """
    graph = nx.DiGraph()
    graph.add_edges_from((j, k) for j, k in raw if j != k)
    closed = nx.transitive_closure(graph, reflexive=False)
    return PartialOrder(frozenset((j, k) for j, k in closed.edges if j != k))


def join(a: PartialOrder, b: PartialOrder) -> PartialOrder:
    """
    The semigroup operation: closure of the union

    :param a: partial order
    :param b: partial order

    :return: a ∨ b
    """
    if leq(a, b):
        return b
    if leq(b, a):
        return a
    return transitive_closure(a.pairs | b.pairs)


def leq(a: PartialOrder, b: PartialOrder) -> bool:
    return a.pairs <= b.pairs


def support(v: PartialOrder) -> Set[Element]:
    """
    Elements incident to some non-diagonal pair

    :param v: partial order

    :return: set of elements
    """
    return {m for pair in v.pairs for m in pair}


def is_transitive(pairs: Iterable[Pair]) -> bool:
    pairs = {(j, k) for j, k in pairs if j != k}
    successors = {}
    for j, k in pairs:
        successors.setdefault(j, set()).add(k)
    return all((j, l) in pairs
               for j, k in pairs
               for l in successors.get(k, ())
               if l != j)


def permute(v: PartialOrder, sigma: Mapping[Element, Element]) -> PartialOrder:
    """
    Relabels the ground set; elements missing from `sigma` stay fixed

    :param v: partial order
    :param sigma: finite-support bijection given as a mapping

    :return: the relabelled partial order
    """
    return PartialOrder(frozenset((sigma.get(j, j), sigma.get(k, k)) for j, k in v.pairs))
