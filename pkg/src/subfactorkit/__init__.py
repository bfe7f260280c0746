# subfactorkit: finite-dimensional constructions around subfactor bases,
# commuting squares and relative dimension sets.
#
# This package is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
VERSION = (0, 3, 0)
__version__ = ".".join(str(part) for part in VERSION)
