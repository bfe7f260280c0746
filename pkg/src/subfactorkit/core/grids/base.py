"""Base class for grid models.

Create a subfactorkit_grids.py in an installed app with a class that inherits
from BaseGrid and register it with subfactorkit.core.grids.registry.register.
A grid names a family of finite-dimensional commuting squares whose limit
inclusion has a known index; ``known_families`` asks the grid for each family
listed in ``families``.
"""
from subfactorkit.core.exceptions import MalformedInput


class BaseGrid:

    """Grid models should inherit from this"""

    # Must fill in!
    slug = None

    # Optional
    aliases = ()
    # Family names in emission order. Each name needs a method of the same
    # name returning a list of LambdaFamilyElement.
    families = ()
    # Smallest accepted order
    min_order = 1

    def __init__(self, n):
        if n < self.min_order:
            raise MalformedInput(
                "%s models need order >= %d, got %d" % (self.slug, self.min_order, n)
            )
        self.n = n

    @classmethod
    def from_params(cls, params):
        try:
            (n,) = [int(value) for value in params]
        except ValueError:
            raise MalformedInput(
                "%s expects a single integer order, got %r" % (cls.slug, ",".join(params))
            )
        return cls(n)

    @property
    def index(self):
        raise NotImplementedError

    @property
    def label(self):
        return "%s:%d" % (self.slug, self.n)

    def build(self, family):
        return getattr(self, family)()

    def orbit_seeds(self, elements):
        """Elements that seed Popa chains. Defaults to none."""
        return []

    def __repr__(self):
        return "<%s %s>" % (self.__class__.__name__, self.label)
