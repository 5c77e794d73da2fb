"""Self-injective cluster-tilted algebras of Dynkin type, computed exhaustively."""

__version__ = "0.1.0"

from .dynkin import DynkinType, QuiverSpec, build_dynkin  # noqa: E402
from .cluster import ClusterCategory, CObject, Module, ShiftedProj, cluster_category  # noqa: E402

__all__ = ["DynkinType", "QuiverSpec", "build_dynkin", "ClusterCategory", "CObject", "Module",
           "ShiftedProj", "cluster_category", "__version__"]
