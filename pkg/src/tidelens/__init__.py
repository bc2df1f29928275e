"""tidelens: interactive coastal sea-level-rise exploration.

Feed it a DEM (ESRI ASCII grid), a sea-level projection curve, and a set
of points of interest; it computes hydrologically connected flood masks
for every year of the 2021-2100 timeline, builds terrain/ocean meshes,
renders reports, and serves it all over HTTP for the browser viewer.
"""

from .errors import TidelensError

__version__ = "0.1.0"

__all__ = ["TidelensError", "__version__"]
