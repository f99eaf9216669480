#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Checkers for the properties that characterize φ(Z) = μ(Q_Z): monotone
decrease, positive definiteness with respect to ∨, continuity from below,
exchangeability (invariance under relabelling) and the product rule on
disjoint supports that singles out extreme exchangeable measures.

Every checker accepts exact and Monte Carlo evaluators. Exact values are
compared up to a rounding slack; estimates up to a multiple of their
standard error.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from orderproc.canon_semigroup import Permutation, find_non_invariance
from orderproc.configs import CHECKS_CONFIGS
from orderproc.exceptions import PreconditionViolation
from orderproc.order_process import OrderProcess, join, join_all, leq, shift_minus, support
from orderproc.phi import Evaluator, PhiEstimate, as_estimate, tolerance

logger = logging.getLogger(__name__)


def _default(name: str):
    return CHECKS_CONFIGS[name]['default']


@dataclass
class CheckReport:
    """
    Outcome of a check. `witness` names the offending input when the check fails
    """
    name: str
    passed: bool
    gap: float = 0.0
    witness: Optional[str] = None
    lines: List[str] = field(default_factory=list)
    values: List[float] = field(default_factory=list)

    def log(self) -> 'CheckReport':
        if self.passed:
            logger.info(f"check {self.name} passed, gap={self.gap!r}")
        else:
            logger.warning(f"check {self.name} failed, gap={self.gap!r}, witness={self.witness}")
        return self

    def render(self) -> str:
        status = 'PASS' if self.passed else 'FAIL'
        summary = f"{status} {self.name} gap={self.gap!r}"
        if self.witness is not None:
            summary += f" witness={self.witness}"
        return '\n'.join(self.lines + [summary])

    def __bool__(self) -> bool:
        return self.passed


class _Cached:
    """
    Memoizes an evaluator on the processes it has seen
    """

    def __init__(self, phi: Evaluator):
        self.phi = phi
        self.values: Dict[OrderProcess, PhiEstimate] = {}

    def __call__(self, z: OrderProcess) -> PhiEstimate:
        if z not in self.values:
            self.values[z] = as_estimate(self.phi(z))
        return self.values[z]


def check_monotone(phi: Evaluator,
                   pairs: Sequence[Tuple[OrderProcess, OrderProcess]],
                   sigmas: float = None) -> CheckReport:
    """
    Z1 <= Z2 gives Q_{Z2} ⊆ Q_{Z1}, hence φ(Z1) >= φ(Z2)

    :param phi: evaluator
    :param pairs: ordered pairs (z1, z2) with z1 <= z2
    :param sigmas: stderr multiplier for estimates

    :return: CheckReport
    """
    sigmas = _default('sigmas') if sigmas is None else sigmas
    phi = _Cached(phi)
    report = CheckReport('monotone', True)
    for z1, z2 in pairs:
        if not leq(z1, z2):
            raise PreconditionViolation(f"{z1} is not <= {z2}")
        e1, e2 = phi(z1), phi(z2)
        excess = e2.value - e1.value
        report.gap = max(report.gap, excess)
        if report.passed and excess > tolerance(e1, e2, sigmas=sigmas, exact_slack=_default('exact_slack')):
            report.passed = False
            report.witness = f"{z1} <= {z2}"
    report.lines.append(f"VALUE pairs {len(pairs)}")
    return report.log()


def check_positive_definite(phi: Evaluator,
                            zs: Sequence[OrderProcess],
                            tol: float = 1e-9,
                            sigmas: float = None) -> CheckReport:
    """
    Builds A[i][k] = φ(zs[i] ∨ zs[k]) and checks that it is symmetric with
    smallest eigenvalue >= -tol. For estimates, tol grows to
    sigmas * (largest stderr) * len(zs).

    :param phi: evaluator
    :param zs: between 1 and `max_pd_size` processes
    :param tol: eigenvalue tolerance
    :param sigmas: per-row stderr multiplier for estimates

    :return: CheckReport
    """
    sigmas = _default('pd_sigmas') if sigmas is None else sigmas
    size = len(zs)
    if not 1 <= size <= _default('max_pd_size'):
        raise PreconditionViolation(f"need between 1 and {_default('max_pd_size')} processes, got {size}")
    phi = _Cached(phi)
    estimates = [[phi(join(zs[i], zs[k])) for k in range(size)] for i in range(size)]
    matrix = np.array([[e.value for e in row] for row in estimates])
    if not all(e.exact for row in estimates for e in row):
        tol = max(tol, sigmas * max(e.stderr for row in estimates for e in row) * size)
    asymmetry = float(np.max(np.abs(matrix - matrix.T)))
    smallest = float(np.min(np.linalg.eigvalsh((matrix + matrix.T) / 2)))
    report = CheckReport('pd', asymmetry <= tol and smallest >= -tol, gap=max(0.0, -smallest))
    report.lines.append(f"VALUE min_eigenvalue {smallest!r}")
    report.lines.append(f"VALUE tolerance {tol!r}")
    if not report.passed:
        report.witness = 'asymmetric matrix' if asymmetry > tol else f"min_eigenvalue={smallest!r}"
    return report.log()


def _product_gap(phi: _Cached, zs: Sequence[OrderProcess], sigmas: float) -> Tuple[float, float]:
    joint = phi(join_all(zs))
    parts = [phi(z) for z in zs]
    product = math.prod(e.value for e in parts)
    gap = abs(joint.value - product)
    if joint.exact and all(e.exact for e in parts):
        return gap, _default('exact_slack')
    # delta method for the product of the marginal estimates
    variance = joint.stderr ** 2
    for i, e in enumerate(parts):
        others = math.prod(p.value for j, p in enumerate(parts) if j != i)
        variance += (others * e.stderr) ** 2
    return gap, sigmas * math.sqrt(variance)


def check_independent_family(phi: Evaluator,
                             families: Sequence[Sequence[OrderProcess]],
                             sigmas: float = None,
                             name: str = 'indep') -> CheckReport:
    """
    Product rule φ(Z1 ∨ ... ∨ Zm) = φ(Z1)···φ(Zm) for pairwise disjoint supports,
    i.e. independence of Q_{Z1}, ..., Q_{Zm}. A failure certifies that the
    measure is not extreme.

    :param phi: evaluator
    :param families: lists of processes with pairwise disjoint supports
    :param sigmas: stderr multiplier for estimates

    :return: CheckReport
    """
    sigmas = _default('sigmas') if sigmas is None else sigmas
    phi = _Cached(phi)
    report = CheckReport(name, True)
    for zs in families:
        seen = set()
        for z in zs:
            if seen & support(z):
                raise PreconditionViolation(f"supports overlap on {sorted(seen & support(z))}")
            seen |= support(z)
        gap, allowed = _product_gap(phi, zs, sigmas)
        if gap > report.gap:
            report.gap = gap
        if gap > allowed and report.passed:
            report.passed = False
            report.witness = ' , '.join(repr(z) for z in zs)
            report.lines.append(f"VALUE joint {phi(join_all(zs)).value!r}")
            report.lines.append(f"VALUE product {math.prod(phi(z).value for z in zs)!r}")
    return report.log()


def check_independent(phi: Evaluator,
                      pairs: Sequence[Tuple[OrderProcess, OrderProcess]],
                      sigmas: float = None) -> CheckReport:
    return check_independent_family(phi, [(z1, z2) for z1, z2 in pairs], sigmas=sigmas)


def check_below_continuity(phi: Evaluator,
                           z: OrderProcess,
                           eps_seq: Sequence[float],
                           bound: float = None,
                           sigmas: float = None) -> CheckReport:
    """
    φ(Z_{-ε}) decreases to φ(Z) as ε ↓ 0.

    :param phi: evaluator
    :param z: test process
    :param eps_seq: strictly decreasing positive shifts
    :param bound: allowed final gap at the last ε (a model continuity bound), 0 if None
    :param sigmas: stderr multiplier for estimates

    :return: CheckReport
    """
    sigmas = _default('sigmas') if sigmas is None else sigmas
    if not eps_seq or any(e <= 0 for e in eps_seq) or any(b >= a for a, b in zip(eps_seq, eps_seq[1:])):
        raise PreconditionViolation(f"eps_seq must be positive and strictly decreasing, got {list(eps_seq)}")
    phi = _Cached(phi)
    slack = _default('exact_slack')
    values = [phi(shift_minus(z, eps)) for eps in eps_seq]
    target = phi(z)
    report = CheckReport('cont', True, values=[e.value for e in values])
    for eps, e in zip(eps_seq, values):
        report.lines.append(f"VALUE eps={eps!r} phi={e.value!r}")
    for previous, current in zip(values, values[1:]):
        if current.value > previous.value + tolerance(previous, current, sigmas=sigmas, exact_slack=slack):
            report.passed = False
            report.witness = f"phi increased from {previous.value!r} to {current.value!r}"
            break
    report.gap = abs(values[-1].value - target.value)
    allowed = (bound or 0.0) + tolerance(values[-1], target, sigmas=sigmas, exact_slack=slack)
    report.lines.append(f"VALUE phi(z)={target.value!r} bound={allowed!r}")
    if report.passed and report.gap > allowed:
        report.passed = False
        report.witness = f"eps={eps_seq[-1]!r}"
    return report.log()


def check_exchangeable(phi: Evaluator,
                       samples: Sequence[OrderProcess],
                       perms: Sequence[Permutation],
                       sigmas: float = None) -> CheckReport:
    """
    φ(σ·z) = φ(z) on every sampled (z, σ): φ factorizes over the isomorphy class map
    """
    sigmas = _default('sigmas') if sigmas is None else sigmas
    found = find_non_invariance(phi, samples, perms, sigmas=sigmas)
    report = CheckReport('exch', found is None)
    report.lines.append(f"VALUE cases {len(samples) * len(perms)}")
    if found is not None:
        z, sigma, base, moved = found
        report.gap = abs(base.value - moved.value)
        report.witness = f"{z} sigma={dict(sorted(sigma.items()))}"
    return report.log()


def convergence_diag(phis: Sequence[Evaluator],
                     limit: Evaluator,
                     test_zs: Sequence[OrderProcess],
                     tol: float = 1e-2,
                     sigmas: float = None) -> CheckReport:
    """
    sup over the test processes of |φ_n(z) - φ(z)| for every n. Passes when the
    sequence of gaps is nonincreasing up to the comparison slack and its last
    entry is within `tol`.

    Boundary sets of Q_z are assumed null, which holds for continuous durations.

    :param phis: evaluators of the sequence of measures
    :param limit: evaluator of the limit measure
    :param test_zs: test grid of processes
    :param tol: required final gap

    :return: CheckReport, one VALUE line per n
    """
    sigmas = _default('sigmas') if sigmas is None else sigmas
    limit = _Cached(limit)
    gaps, slacks = [], []
    report = CheckReport('converge', True)
    for n, phi in enumerate(phis, start=1):
        gap, slack = 0.0, 0.0
        for z in test_zs:
            e, target = as_estimate(phi(z)), limit(z)
            gap = max(gap, abs(e.value - target.value))
            slack = max(slack, tolerance(e, target, sigmas=sigmas, exact_slack=_default('exact_slack')))
        gaps.append(gap)
        slacks.append(slack)
        report.lines.append(f"VALUE n={n} gap={gap!r}")
    for n in range(1, len(gaps)):
        if gaps[n] > gaps[n - 1] + max(slacks[n], slacks[n - 1]):
            report.passed = False
            report.witness = f"gap increased at n={n + 1}"
            break
    report.values = gaps
    report.gap = gaps[-1] if gaps else 0.0
    if report.passed and report.gap > tol + (slacks[-1] if slacks else 0.0):
        report.passed = False
        report.witness = f"final gap above {tol!r}"
    return report.log()
