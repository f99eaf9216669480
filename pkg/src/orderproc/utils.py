#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Utility functions
"""

from typing import Any

from orderproc.exceptions import InvalidModel


def _load_config(config_name, model_config, config_schema):
    """
    Helper function to load default values if `config_name` is not specified.
    Values given as text (ModelConfig files) are coerced to the schema type.

    :param config_name: the name of the config
    :param model_config: configuration provided to the model
    :param config_schema: the schema of the configuration

    :return: config value
    """
    if config_name not in model_config:
        return config_schema[config_name]['default']
    value = model_config[config_name]
    if isinstance(value, str):
        return _coerce(config_name, value, config_schema[config_name])
    return value


def _coerce(config_name: str, value: str, config: dict) -> Any:
    config_type = config['type']
    try:
        if config_type == int:
            value = int(value)
        elif config_type == float:
            value = float(value)
        elif config_type == bool:
            if value.lower() not in ('on', 'off', 'true', 'false', '1', '0'):
                raise ValueError(value)
            value = value.lower() in ('on', 'true', '1')
    except ValueError:
        raise InvalidModel(f"`{config_name}` expects {config_type.__name__}, got {value!r}")
    if config['options'] is not None and value not in config['options']:
        raise InvalidModel(f"`{config_name}` should be one of {config['options']}, got {value!r}")
    return value


def split_evenly(total: int, parts: int) -> list:
    """
    Splits `total` into `parts` integers differing by at most one, larger ones first

    :param total: the quantity to split
    :param parts: number of parts

    :return: list of part sizes
    """
    base, extra = divmod(total, parts)
    return [base + (1 if i < extra else 0) for i in range(parts)]
