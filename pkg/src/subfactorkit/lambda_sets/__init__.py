"""Relative dimension sets in exact rational arithmetic. Decimals are for display only."""
from .bands import band_contains  # noqa
from .bands import band_edges  # noqa
from .bands import decimal_string  # noqa
from .bands import BandSpec  # noqa
from .elements import LambdaFamilyElement  # noqa
from .families import known_families  # noqa
from .families import seeded_orbits  # noqa
from .ladders import beta_m  # noqa
from .ladders import grid_dimension_exponent  # noqa
from .ladders import lambda_ladder  # noqa
from .ladders import phi4_closed_form  # noqa
from .ladders import phi4_iterate  # noqa
from .ladders import phi_map  # noqa
from .ladders import sigma_membership  # noqa
from .orbits import gamma_sequence  # noqa
from .orbits import popa_map  # noqa
from .orbits import popa_orbit  # noqa
from .orbits import zeta_matrix  # noqa
