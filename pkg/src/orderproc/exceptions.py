#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Errors raised by orderproc
"""


class OrderProcError(Exception):
    """
    Base class of every error raised by the package
    """


class ConstraintViolation(OrderProcError):
    """
    A time map breaks the max-triangle constraint on the triple (j, k, l)
    """

    def __init__(self, j: int, k: int, l: int):
        self.j, self.k, self.l = j, k, l
        super().__init__(f"ConstraintViolation({j},{k},{l})")


class SupportTooLarge(OrderProcError):
    pass


class NotAMember(OrderProcError):
    pass


class InvalidModel(OrderProcError):
    pass


class NoClosedForm(OrderProcError):
    pass


class SupportOutOfWindow(OrderProcError):
    pass


class PreconditionViolation(OrderProcError):
    pass


class ParseError(OrderProcError):
    """
    Malformed input text; `line` is 1-based
    """

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"ParseError(line {line}): {message}")
