"""Combinatorics of partitions, symbols and Springer data behind the wave
front sets of the representations pi(lam+, eps+, lam-, eps-) of odd special
orthogonal p-adic groups.

The submodules ``springer`` and ``wavefront`` share their names with their
main functions; import those functions from the submodules.
"""

from .duality import dual, orth_collapse, sp_closure
from .partitions import Partition, PartitionClass
from .springer import SignedPartition, springer_inv
from .wavefront import QuadrupleBP, lambda_max, lambda_min, t_lambda_min, table_5_3

__version__ = "0.1.0"

__all__ = [
    "Partition", "PartitionClass", "SignedPartition", "QuadrupleBP",
    "dual", "sp_closure", "orth_collapse", "springer_inv",
    "lambda_max", "lambda_min", "t_lambda_min", "table_5_3",
]
