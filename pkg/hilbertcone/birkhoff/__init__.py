"""Package entry point for hilbertcone.birkhoff."""

from hilbertcone.birkhoff.contraction import (PositiveLinearMap,
                                              contraction_ratio,
                                              directed_contraction,
                                              empirical_contraction,
                                              power_map_bound,
                                              projective_diameter)
from hilbertcone.birkhoff.power_iteration import power_iteration
