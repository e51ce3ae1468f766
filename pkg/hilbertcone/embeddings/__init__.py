"""Package entry point for hilbertcone.embeddings."""

from hilbertcone.embeddings.isometries import (EmbeddedPoint, log_map,
                                               polytope_embedding,
                                               simplex_isometry)
from hilbertcone.embeddings.norms import (h_norm, h_unit_ball, sup_norm,
                                          variation_norm)
