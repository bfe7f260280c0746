from importlib import import_module

from subfactorkit.core.exceptions import MalformedInput

_cache = {}
_aliases = {}


def register(GridClass):
    """
    Register a grid class under its slug and aliases.
    """
    if GridClass.slug in _cache:
        raise Exception("Grid slug already registered: %s" % GridClass.slug)
    _cache[GridClass.slug] = GridClass
    for alias in GridClass.aliases:
        _aliases[alias] = GridClass.slug
    return GridClass


def get_grids():
    """Get loaded grid classes, loading the built-in ones on first use."""
    if not _cache:
        # Outside a configured project the app registry may not be ready.
        import_module("subfactorkit.subfactorkit_grids")
    return _cache


def get_grid(model):
    """
    Parse a model string such as ``spin:6``, ``vertex:3`` or ``onb:4`` and
    return the grid instance.
    """
    slug, __, params = str(model).partition(":")
    grids = get_grids()
    slug = _aliases.get(slug, slug)
    if slug not in grids or not params:
        raise MalformedInput(
            "unknown model %r; expected one of %s followed by :<order>"
            % (model, ", ".join(sorted(grids)))
        )
    return grids[slug].from_params(params.split(","))
