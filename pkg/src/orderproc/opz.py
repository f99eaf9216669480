#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Text formats

OPZ (order process) files::

    # comment
    opz 1
    e 1 2 0.5
    e 2 3 0.7
    e 1 3 0.7

one `e j k t` line per present pair, absent pairs switch at ∞.

DAG files hold `d j k` lines: job j must finish before job k starts.

Model configs are flat `key=value` lines, see :func:`load_model_config`.
"""

import logging
import math
import pathlib
from typing import Dict, List, Tuple, Union

from orderproc.exceptions import InvalidModel, ParseError
from orderproc.order_process import OrderProcess, minimax_closure, validate
from orderproc.relation_core import Pair

logger = logging.getLogger(__name__)

OPZ_VERSION = 1
MODES = ('strict', 'close')

PathLike = Union[str, pathlib.Path]


def _lines(text: str):
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split('#', 1)[0].strip()
        if line:
            yield number, line.split()


def _natural(token: str, number: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(number, f"expected a natural number, got {token!r}")
    if value < 0:
        raise ParseError(number, f"expected a natural number, got {token!r}")
    return value


def _time(token: str, number: int) -> float:
    try:
        value = float(token)
    except ValueError:
        raise ParseError(number, f"expected a decimal time, got {token!r}")
    if not math.isfinite(value) or value < 0:
        raise ParseError(number, f"times must be finite and >= 0, got {token!r}")
    return value


def parse_edges(text: str) -> Dict[Pair, float]:
    """
    Reads the raw edges of an OPZ document without checking the max-triangle constraint

    :param text: document text

    :return: map pair -> time
    """
    edges: Dict[Pair, float] = {}
    header_seen = False
    for number, tokens in _lines(text):
        if not header_seen:
            if tokens != ['opz', str(OPZ_VERSION)]:
                raise ParseError(number, f"expected header `opz {OPZ_VERSION}`")
            header_seen = True
            continue
        if tokens[0] != 'e' or len(tokens) != 4:
            raise ParseError(number, "expected `e j k t`")
        j, k = _natural(tokens[1], number), _natural(tokens[2], number)
        if j == k:
            raise ParseError(number, f"diagonal pair ({j},{k})")
        if (j, k) in edges:
            raise ParseError(number, f"duplicate pair ({j},{k})")
        edges[(j, k)] = _time(tokens[3], number)
    if not header_seen:
        raise ParseError(1, f"missing header `opz {OPZ_VERSION}`")
    return edges


def loads_opz(text: str, mode: str = 'strict') -> OrderProcess:
    """
    Parses an OPZ document

    :param text: document text
    :param mode: `strict` validates the max-triangle constraint, `close` returns the
                 minimax closure of the edges

    :return: OrderProcess
    """
    if mode not in MODES:
        raise ValueError(f"mode should be one of {MODES}, got {mode!r}")
    edges = parse_edges(text)
    if mode == 'strict':
        return validate(edges)
    return minimax_closure(edges)


def load_opz(path: PathLike, mode: str = 'strict') -> OrderProcess:
    return loads_opz(pathlib.Path(path).read_text(encoding='utf-8'), mode)


def dumps_opz(z: OrderProcess, comment: str = None) -> str:
    """
    Serializes a process, edges sorted by (j, k), shortest round-tripping decimals

    :param z: process
    :param comment: optional leading comment line

    :return: document text
    """
    lines = [f"# {comment}"] if comment else []
    lines.append(f"opz {OPZ_VERSION}")
    lines.extend(f"e {j} {k} {t!r}" for (j, k), t in z.items())
    return '\n'.join(lines) + '\n'


def save_opz(z: OrderProcess, path: PathLike, comment: str = None) -> None:
    pathlib.Path(path).write_text(dumps_opz(z, comment), encoding='utf-8')


def loads_dag(text: str) -> List[Tuple[int, int]]:
    edges = []
    for number, tokens in _lines(text):
        if tokens[0] != 'd' or len(tokens) != 3:
            raise ParseError(number, "expected `d j k`")
        j, k = _natural(tokens[1], number), _natural(tokens[2], number)
        if j == k:
            raise ParseError(number, f"job {j} cannot precede itself")
        edges.append((j, k))
    return edges


def load_dag(path: PathLike) -> List[Tuple[int, int]]:
    return loads_dag(pathlib.Path(path).read_text(encoding='utf-8'))


def parse_model_config(text: str) -> Dict[str, str]:
    """
    Reads `key=value` lines

    :param text: config text

    :return: dict of raw string values
    """
    config = {}
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition('=')
        if not sep:
            raise ParseError(number, "expected `key=value`")
        key, value = key.strip(), value.strip()
        if key in config:
            raise ParseError(number, f"duplicate key {key!r}")
        config[key] = value
    return config


def load_model_config(path: PathLike):
    """
    Builds a measure from a ModelConfig file. Keys:

    * `model`: dirac | completion | edge_minimax | mixture
    * `n`: window size
    * `dist`: `uniform:a,b` or `exp:rate` (completion)
    * `base`: `full` or `dag:<path>` (completion)
    * `permute`: on | off (completion)
    * `rate`: raw edge rate (edge_minimax)
    * `z`: path of an OPZ file (dirac)
    * `mix`: `weight:path,weight:path,...` (mixture)

    Relative paths are resolved against the config file's folder.

    :param path: config file
    :return: the measure instance
    """
    from orderproc.main import OrderProc

    path = pathlib.Path(path)
    folder = path.parent
    config = parse_model_config(path.read_text(encoding='utf-8'))
    kind = config.pop('model', None)
    if kind not in OrderProc.available_models():
        raise InvalidModel(f"`model` should be one of {OrderProc.available_models()}, got {kind!r}")
    if kind == 'completion' and config.get('base', 'full').startswith('dag:'):
        config['dag_edges'] = load_dag(folder / config['base'][len('dag:'):])
        config['base'] = 'dag'
    if kind == 'dirac' and 'z' in config:
        config['z'] = load_opz(folder / config['z'])
    if kind == 'mixture':
        components = []
        for item in filter(None, (part.strip() for part in config.pop('mix', '').split(','))):
            weight, sep, component = item.partition(':')
            if not sep:
                raise InvalidModel(f"mixture entries are `weight:path`, got {item!r}")
            try:
                weight = float(weight)
            except ValueError:
                raise InvalidModel(f"bad mixture weight {weight!r}")
            components.append((weight, load_model_config(folder / component)))
        config['components'] = components
    logger.debug(f"model config {path}: {kind} {config}")
    return OrderProc.create_model(kind, config)
