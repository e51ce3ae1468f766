"""Package entry point for hilbertcone.dynamics."""

from hilbertcone.dynamics.bounds import period_bound, possible_periods
from hilbertcone.dynamics.maps import (CallableMap, MinMaxMap,
                                       minmax_example_map)
from hilbertcone.dynamics.orbits import (OrbitRecord, detect_periodic_orbit,
                                         gromov_product, iterate_orbit,
                                         omega_limit_estimate)
