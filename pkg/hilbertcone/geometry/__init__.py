"""Package entry point for hilbertcone.geometry."""

from hilbertcone.geometry.domain import (ChordEndpoints, PolytopalDomain,
                                         birkhoff_distance,
                                         boundary_intersections,
                                         cross_ratio_distance)
