"""Edge-intersection hypergraphs: iteration, closed-form laws and 3-uniform tree realizations."""

from ._core import *  # noqa: F401,F403
from ._core import EihgError, UnrealizableTreeError, Hypergraph, Digraph  # noqa: F401
