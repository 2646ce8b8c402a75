"""Planar and r-outerplanar supports of hypergraphs, twin-class kernels and
separator sequences of triangulated disks."""

from .hypergraph import Hypergraph
from .plane_graph import PlaneGraph

__version__ = "0.1.0"

__all__ = ["Hypergraph", "PlaneGraph", "__version__"]
