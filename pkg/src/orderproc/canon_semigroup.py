#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Isomorphy classes of finite-support order processes.

Two processes are isomorphic when a relabelling of the ground set maps one
onto the other. The classes form the abelian, non-idempotent semigroup
(T, +), where the sum of two classes is the class of the join of
representatives with disjoint supports.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from orderproc.configs import CHECKS_CONFIGS
from orderproc.exceptions import SupportTooLarge
from orderproc.order_process import EMPTY, OrderProcess, permute, support
from orderproc.phi import Evaluator, PhiEstimate, as_estimate, tolerance
from orderproc.relation_core import Element

logger = logging.getLogger(__name__)

Permutation = Mapping[Element, Element]
CanonicalKey = Tuple[Tuple[int, int, float], ...]


@dataclass(frozen=True)
class IsoClass:
    """
    An element of T, held through its canonical representative whose support
    is {0, ..., s-1}
    """
    rep: OrderProcess

    @property
    def size(self) -> int:
        return len(support(self.rep))

    def __add__(self, other: 'IsoClass') -> 'IsoClass':
        return add(self, other)


def _key(z: OrderProcess, relabel: Mapping[Element, int]) -> CanonicalKey:
    return tuple(sorted((relabel[j], relabel[k], t) for (j, k), t in z.times.items()))


def canonical_key(z: OrderProcess, max_support: int = None) -> CanonicalKey:
    """
    Lexicographically least sorted (j, k, t) list over all relabellings of the
    support onto {0, ..., s-1}

    :param z: process
    :param max_support: brute-force bound, defaults to `CHECKS_CONFIGS['max_canon_support']`

    :return: the key as a tuple of triples
    """
    if max_support is None:
        max_support = CHECKS_CONFIGS['max_canon_support']['default']
    elements = sorted(support(z))
    if len(elements) > max_support:
        raise SupportTooLarge(f"support of size {len(elements)} exceeds the canonicalization bound {max_support}")
    best: Optional[CanonicalKey] = None
    for labels in itertools.permutations(range(len(elements))):
        key = _key(z, dict(zip(elements, labels)))
        if best is None or key < best:
            best = key
    return best if best is not None else ()


def g(z: OrderProcess, max_support: int = None) -> IsoClass:
    """
    The isomorphy class of `z`

    :param z: process
    :param max_support: brute-force bound on the support size

    :return: IsoClass with canonical representative
    """
    return IsoClass(OrderProcess({(j, k): t for j, k, t in canonical_key(z, max_support)}))


D_CLASS = IsoClass(EMPTY)


def add(a: IsoClass, b: IsoClass, max_support: int = None) -> IsoClass:
    """
    a + b: relabel `b` away from `a`'s support and take the class of the union.
    No closure is needed since no path crosses between disjoint supports.

    :param a: class
    :param b: class

    :return: the class of the disjoint join
    """
    offset = a.size
    times = dict(a.rep.times)
    times.update({(j + offset, k + offset): t for (j, k), t in b.rep.times.items()})
    return g(OrderProcess(times), max_support)


def isomorphic(y: OrderProcess, z: OrderProcess) -> bool:
    """
    Brute-force isomorphism test over all bijections between the supports
    """
    ys, zs = sorted(support(y)), sorted(support(z))
    if len(ys) != len(zs) or len(y) != len(z):
        return False
    target = dict(z.times)
    for image in itertools.permutations(zs):
        if dict(permute(y, dict(zip(ys, image))).times) == target:
            return True
    return False


def find_non_invariance(phi: Evaluator,
                        samples: Iterable[OrderProcess],
                        perms: Sequence[Permutation],
                        sigmas: float = 4.0) -> Optional[Tuple[OrderProcess, Permutation, PhiEstimate, PhiEstimate]]:
    """
    Searches for (z, σ) with φ(σ·z) != φ(z) beyond tolerance

    :param phi: evaluator
    :param samples: test processes
    :param perms: permutations of the ground set
    :param sigmas: stderr multiplier for Monte Carlo evaluators

    :return: (z, σ, φ(z), φ(σ·z)) for the first witness, None if φ looks invariant
    """
    for z in samples:
        base = as_estimate(phi(z))
        for sigma in perms:
            moved = as_estimate(phi(permute(z, sigma)))
            if base.exact and moved.exact:
                equal = base.value == moved.value
            else:
                equal = abs(base.value - moved.value) <= tolerance(base, moved, sigmas=sigmas)
            if not equal:
                logger.debug(f"phi not invariant: {z} under {dict(sigma)}: {base.value} vs {moved.value}")
                return z, sigma, base, moved
    return None


def factorizes_over_g(phi: Evaluator, samples: Iterable[OrderProcess], perms: Sequence[Permutation]) -> bool:
    """
    Whether φ depends on the isomorphy class only, on the sampled (z, σ)
    """
    return find_non_invariance(phi, samples, perms) is None


def random_permutation(elements: Sequence[Element], rng) -> Dict[Element, Element]:
    """
    Uniform random bijection of `elements` onto themselves

    :param elements: the moved elements
    :param rng: numpy Generator

    :return: the permutation as a dict
    """
    elements = list(elements)
    return dict(zip(elements, (elements[i] for i in rng.permutation(len(elements)))))


def transposition(a: Element, b: Element) -> Dict[Element, Element]:
    return {a: b, b: a}


def classes(processes: Iterable[OrderProcess], max_support: int = None) -> List[IsoClass]:
    return [g(z, max_support) for z in processes]
