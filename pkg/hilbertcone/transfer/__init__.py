"""Package entry point for hilbertcone.transfer."""

from hilbertcone.transfer.holder_cone import (cone_membership,
                                              contraction_constants,
                                              holder_cone_distance,
                                              interpolation_excess)
from hilbertcone.transfer.operator import (TransferOperator, apply_operator,
                                           leading_eigenfunction)
from hilbertcone.transfer.space import (AffineMap, DiscreteSpace, IndexMap,
                                        IteratedFunctionSystem)
