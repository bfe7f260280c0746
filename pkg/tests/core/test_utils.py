import json
from fractions import Fraction

import numpy as np
from django.test import SimpleTestCase
from hypothesis import given
from hypothesis import strategies as st

from subfactorkit.core.exceptions import MalformedInput
from subfactorkit.core.utils import format_rational
from subfactorkit.core.utils import object_to_json
from subfactorkit.core.utils import parse_range
from subfactorkit.core.utils import parse_rational


class RationalTests(SimpleTestCase):
    def test_format(self):
        self.assertEqual(format_rational(Fraction(7, 4)), "7/4")
        self.assertEqual(format_rational(Fraction(6, 3)), "2")
        self.assertEqual(format_rational(0), "0")

    def test_parse(self):
        self.assertEqual(parse_rational("7/4"), Fraction(7, 4))
        self.assertEqual(parse_rational(" 3 "), Fraction(3))
        self.assertEqual(parse_rational("0.25"), Fraction(1, 4))
        self.assertEqual(parse_rational(5), Fraction(5))

    def test_parse_refuses_floats_and_garbage(self):
        for value in (0.5, True, None, "seven", "1/0"):
            with self.subTest(value=value):
                with self.assertRaises(MalformedInput):
                    parse_rational(value)

    @given(st.fractions())
    def test_format_then_parse(self, value):
        self.assertEqual(parse_rational(format_rational(value)), value)


class RangeTests(SimpleTestCase):
    def test_ranges(self):
        self.assertEqual(list(parse_range("1..5")), [1, 2, 3, 4, 5])
        self.assertEqual(list(parse_range("3")), [3])
        self.assertEqual(list(parse_range("0 .. 2")), [0, 1, 2])

    def test_bad_ranges(self):
        for text in ("5..1", "a..b", "1-3", ""):
            with self.subTest(text=text):
                with self.assertRaises(MalformedInput):
                    parse_range(text)


class JSONTests(SimpleTestCase):
    def test_object_to_json(self):
        text = object_to_json(
            {"b": Fraction(7, 4), "a": np.float64(1.5), "c": np.bool_(True), "z": 1j}
        )
        self.assertTrue(text.endswith("\n"))
        self.assertLess(text.index('"a"'), text.index('"b"'))
        self.assertEqual(
            json.loads(text), {"a": 1.5, "b": "7/4", "c": True, "z": [0.0, 1.0]}
        )

    def test_deterministic(self):
        document = {"x": [Fraction(1, 3), 2], "y": {"q": 1, "p": 2}}
        self.assertEqual(object_to_json(document), object_to_json(dict(document)))
