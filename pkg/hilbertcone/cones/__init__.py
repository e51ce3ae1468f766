"""Package entry point for hilbertcone.cones."""

from hilbertcone.cones.cones import (FacetCone, LorentzCone, Orthant,
                                     PolyhedralCone, PSDCone, SimplicialCone)
from hilbertcone.cones.factory import cone_from_model
from hilbertcone.cones.metrics import (distance, funk_weak_metric,
                                       hilbert_distance, order_bounds,
                                       orthant_distances,
                                       same_part, thompson_distance)
from hilbertcone.cones.polytopes import homogenize
