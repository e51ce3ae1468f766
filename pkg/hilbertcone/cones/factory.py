"""Construct cones from validated cone documents."""

from hilbertcone.cone_abc import Cone
from hilbertcone.cones.cones import (LorentzCone, Orthant, PolyhedralCone,
                                     PSDCone, SimplicialCone)
from hilbertcone.cones.polytopes import homogenize_model
from hilbertcone.models import (ConeModel, LorentzModel, OrthantModel,
                                PolyhedralModel, PolytopeModel, PSDModel,
                                SimplicialModel)


def cone_from_model(model: ConeModel) -> Cone:
    """Build a Cone from one of the cone document models.

    A polytope document yields the cone over the polytope at height 1.
    """
    match model:
        case OrthantModel(dim=dim):
            return Orthant(dim)
        case SimplicialModel(basis=basis):
            return SimplicialCone(basis)
        case PolyhedralModel(psi=psi, witness=witness):
            return PolyhedralCone(psi, witness=witness)
        case PSDModel(dim=dim):
            return PSDCone(dim)
        case LorentzModel(dim=dim):
            return LorentzCone(dim)
        case PolytopeModel():
            return homogenize_model(model)
        case _:
            raise TypeError(f"Unsupported cone document: {model!r}")
