#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Test file for the opz module
"""
import pathlib
import tempfile
from unittest import TestCase

import numpy as np

from helpers import random_process
from orderproc.exceptions import ConstraintViolation, InvalidModel, ParseError
from orderproc.measures.completion_measure import CompletionMeasure
from orderproc.measures.mixture_measure import MixtureMeasure
from orderproc.opz import (dumps_opz, load_model_config, load_opz, loads_dag, loads_opz, parse_model_config,
                           save_opz)
from orderproc.order_process import EMPTY, OrderProcess, validate


class TestLoadOpz(TestCase):

    def test_strict(self):
        self.assertEqual(loads_opz("opz 1\ne 1 2 0.5\n"), OrderProcess({(1, 2): 0.5}))
        self.assertEqual(loads_opz("# nothing\nopz 1\n"), EMPTY)

    def test_strict_rejects_missing_pair(self):
        with self.assertRaises(ConstraintViolation) as raised:
            loads_opz("opz 1\ne 1 2 0.5\ne 2 3 0.7\n")
        self.assertEqual((raised.exception.j, raised.exception.k, raised.exception.l), (1, 2, 3))

    def test_close(self):
        z = loads_opz("opz 1\ne 1 2 0.5\ne 2 3 0.7\n", mode='close')
        self.assertEqual(z, OrderProcess({(1, 2): 0.5, (2, 3): 0.7, (1, 3): 0.7}))

    def test_comments_and_blank_lines(self):
        text = "# produced by hand\n\nopz 1   # version\ne 0 1 1e-3\n\n"
        self.assertEqual(loads_opz(text), OrderProcess({(0, 1): 0.001}))

    def test_parse_errors(self):
        bad = {
            "e 1 2 0.5\n": 1,
            "opz 2\n": 1,
            "": 1,
            "opz 1\ne 1 2\n": 2,
            "opz 1\nf 1 2 0.5\n": 2,
            "opz 1\ne 1 1 0.5\n": 2,
            "opz 1\ne -1 2 0.5\n": 2,
            "opz 1\ne a 2 0.5\n": 2,
            "opz 1\ne 1 2 -0.5\n": 2,
            "opz 1\ne 1 2 inf\n": 2,
            "opz 1\ne 1 2 zero\n": 2,
            "opz 1\ne 1 2 0.5\ne 1 2 0.7\n": 3,
        }
        for text, line in bad.items():
            with self.assertRaises(ParseError, msg=repr(text)) as raised:
                loads_opz(text)
            self.assertEqual(raised.exception.line, line)

    def test_unknown_mode(self):
        with self.assertRaises(ValueError):
            loads_opz("opz 1\n", mode='lenient')

    def test_strict_accepts_exactly_valid_encodings(self):
        rng = np.random.default_rng(20)
        for _ in range(300):
            z = random_process(rng)
            if not z:
                continue
            times = dict(z.times)
            pair = list(times)[int(rng.integers(len(times)))]
            if rng.random() < 0.5:
                times[pair] = float(rng.integers(0, 12)) / 4
            else:
                del times[pair]
            text = dumps_opz(OrderProcess(times))
            try:
                expected = validate(times)
            except ConstraintViolation:
                with self.assertRaises(ConstraintViolation):
                    loads_opz(text)
            else:
                self.assertEqual(loads_opz(text), expected)


class TestDumpOpz(TestCase):

    def test_sorted_edges(self):
        z = OrderProcess({(2, 1): 0.25, (0, 3): 1.5, (0, 1): 0.1})
        self.assertEqual(dumps_opz(z, comment='three edges'),
                         "# three edges\nopz 1\ne 0 1 0.1\ne 0 3 1.5\ne 2 1 0.25\n")

    def test_round_trip(self):
        rng = np.random.default_rng(21)
        for _ in range(1000):
            z = random_process(rng, window=8, max_support=8, grid_times=False)
            self.assertEqual(loads_opz(dumps_opz(z)), z)

    def test_files(self):
        z = OrderProcess({(1, 2): 1 / 3, (2, 1): 2 / 3})
        with tempfile.TemporaryDirectory() as folder:
            path = pathlib.Path(folder) / 'z.opz'
            save_opz(z, path)
            self.assertEqual(load_opz(path), z)
            self.assertEqual(load_opz(str(path), mode='close'), z)


class TestModelConfig(TestCase):

    def setUp(self):
        self._folder = tempfile.TemporaryDirectory()
        self.folder = pathlib.Path(self._folder.name)

    def tearDown(self):
        self._folder.cleanup()

    def _write(self, name, text):
        path = self.folder / name
        path.write_text(text, encoding='utf-8')
        return path

    def test_parse(self):
        self.assertEqual(parse_model_config("# model\nmodel = completion\nn=3\n"), {'model': 'completion', 'n': '3'})
        with self.assertRaises(ParseError):
            parse_model_config("model=completion\nmodel=dirac\n")
        with self.assertRaises(ParseError):
            parse_model_config("model completion\n")

    def test_dag(self):
        self.assertEqual(loads_dag("# chain\nd 0 1\nd 1 2\n"), [(0, 1), (1, 2)])
        with self.assertRaises(ParseError):
            loads_dag("d 0 0\n")
        with self.assertRaises(ParseError):
            loads_dag("e 0 1 0.5\n")

    def test_completion(self):
        model = load_model_config(self._write('u.cfg', "model=completion\nn=4\ndist=uniform:0,2\npermute=on\n"))
        self.assertIsInstance(model, CompletionMeasure)
        self.assertEqual((model.window, model.permute, model.duration.spec), (4, True, 'uniform:0,2'))

    def test_completion_with_dag(self):
        self._write('chain.dag', "d 0 1\nd 1 2\n")
        model = load_model_config(self._write('dag.cfg', "model=completion\nn=3\nbase=dag:chain.dag\n"))
        self.assertEqual(model.base, 'dag')
        self.assertEqual(set(model.sample(0).times), {(0, 1), (1, 2), (0, 2)})

    def test_dirac(self):
        self._write('z.opz', "opz 1\ne 0 1 0.5\n")
        model = load_model_config(self._write('d.cfg', "model=dirac\nn=2\nz=z.opz\n"))
        self.assertEqual(model.sample(3), OrderProcess({(0, 1): 0.5}))

    def test_mixture(self):
        self._write('u1.cfg', "model=completion\ndist=uniform:0,1\n")
        self._write('u2.cfg', "model=completion\ndist=uniform:0,2\n")
        model = load_model_config(self._write('mix.cfg', "model=mixture\nmix=0.5:u1.cfg, 0.5:u2.cfg\n"))
        self.assertIsInstance(model, MixtureMeasure)
        self.assertEqual(model.phi_exact(OrderProcess({(1, 2): 0.5})).value, 0.15625)

    def test_invalid(self):
        bad = [
            "n=3\n",
            "model=gaussian\n",
            "model=completion\nn=three\n",
            "model=completion\nrate=2\n",
            "model=mixture\nmix=u1.cfg\n",
            "model=mixture\nmix=half:u1.cfg\n",
        ]
        for text in bad:
            with self.assertRaises(InvalidModel, msg=text):
                load_model_config(self._write('bad.cfg', text))
