#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Configurations file
"""

from orderproc.measures.completion_measure import CompletionMeasure
from orderproc.measures.dirac_measure import DiracMeasure
from orderproc.measures.edge_minimax_measure import EdgeMinimaxMeasure
from orderproc.measures.mixture_measure import MixtureMeasure

AVAILABLE_MODELS = {
    'dirac': {
        'class': DiracMeasure,
        'description': 'Point mass at one fixed order process. φ(Z) is 1 if the process lies in Q_Z, else 0.',
        'config_schema': DiracMeasure.config_schema,
    },
    'completion': {
        'class': CompletionMeasure,
        'description': 'Job network with i.i.d. random durations: a pair of jobs is ordered from the moment both '
                       'are completed. With the full base relation φ has a product closed form and the measure is '
                       'exchangeable and extreme; a precedence DAG without `permute` is not exchangeable.',
        'config_schema': CompletionMeasure.config_schema,
    },
    'edge_minimax': {
        'class': EdgeMinimaxMeasure,
        'description': 'i.i.d. exponential raw times on all ordered pairs of the window, closed under minimax '
                       'paths. Exchangeable; exact φ by enumeration on small windows.',
        'config_schema': EdgeMinimaxMeasure.config_schema,
    },
    'mixture': {
        'class': MixtureMeasure,
        'description': 'Finite convex combination of measures on a common window. Mixtures of distinct extreme '
                       'measures break the product rule on disjoint supports.',
        'config_schema': MixtureMeasure.config_schema,
    },
}

CHECKS_CONFIGS = {
    'sigmas': {
        'type': float,
        'description': "Standard errors allowed in single Monte Carlo comparisons",
        'options': None,
        'default': 4.0,
    },
    'pd_sigmas': {
        'type': float,
        'description': "Per-row standard errors allowed on the smallest eigenvalue of a Monte Carlo φ matrix",
        'options': None,
        'default': 6.0,
    },
    'max_pd_size': {
        'type': int,
        'description': "Largest number of test processes in a positive definiteness matrix",
        'options': None,
        'default': 8,
    },
    'max_canon_support': {
        'type': int,
        'description': "Largest support canonicalized by brute force over all relabellings",
        'options': None,
        'default': 9,
    },
    'exact_slack': {
        'type': float,
        'description': "Rounding allowance between values of exact evaluators",
        'options': None,
        'default': 1e-12,
    },
    'chunk_size': {
        'type': int,
        'description': "Samples drawn at once by the Monte Carlo estimator",
        'options': None,
        'default': 20_000,
    },
}
