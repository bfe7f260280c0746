from fractions import Fraction

from django.test import SimpleTestCase

from subfactorkit.core.exceptions import MalformedInput
from subfactorkit.core.grids import registry
from subfactorkit.core.grids.base import BaseGrid
from subfactorkit.lambda_sets import known_families
from subfactorkit.lambda_sets import LambdaFamilyElement


class HalvesGrid(BaseGrid):
    slug = "halves"
    aliases = ("halves_alias",)
    families = ("halves",)
    min_order = 5

    @property
    def index(self):
        return Fraction(self.n)

    def halves(self):
        return [
            LambdaFamilyElement(
                value=Fraction(1, 2),
                family="halves",
                index=self.index,
                provenance="test grid",
            )
        ]


class RegistryTests(SimpleTestCase):
    def tearDown(self):
        registry._cache.pop(HalvesGrid.slug, None)
        registry._aliases.pop("halves_alias", None)
        super().tearDown()

    def test_builtin_grids(self):
        self.assertEqual(
            {"spin", "vertex", "onb"} - set(registry.get_grids()), set()
        )
        spin = registry.get_grid("spin:6")
        self.assertEqual(spin.index, 6)
        self.assertEqual(spin.label, "spin:6")
        self.assertEqual(registry.get_grid("vertex:3").index, 9)

    def test_alias(self):
        grid = registry.get_grid("unitary_onb:4")
        self.assertEqual(grid.slug, "onb")
        self.assertEqual(grid.index, 4)

    def test_bad_model_strings(self):
        for model in ("bogus:3", "spin", "spin:a", "spin:2,3", "spin:0"):
            with self.subTest(model=model):
                with self.assertRaises(MalformedInput):
                    registry.get_grid(model)

    def test_register_custom_grid(self):
        registry.register(HalvesGrid)
        grid = registry.get_grid("halves_alias:6")
        self.assertIsInstance(grid, HalvesGrid)
        values = [e.value for e in known_families(grid)]
        self.assertEqual(values, [Fraction(1, 2)])
        with self.assertRaises(MalformedInput):
            registry.get_grid("halves:4")

    def test_duplicate_slug(self):
        registry.register(HalvesGrid)
        with self.assertRaises(Exception):
            registry.register(HalvesGrid)
