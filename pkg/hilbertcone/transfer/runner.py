"""Runner for the transfer command."""

import math
from typing import Any

from loguru import logger

from hilbertcone.models import HolderConeParams, RunConfig, RunnerOutput, TransferInput
from hilbertcone.transfer.holder_cone import cone_membership
from hilbertcone.transfer.operator import leading_eigenfunction
from hilbertcone.transfer.space import IteratedFunctionSystem


def transfer_runner(data: dict[str, Any], config: RunConfig) -> RunnerOutput:
    """Leading eigenpair of a transfer operator; the table holds the residual curve."""
    document = TransferInput(**data)
    ifs = IteratedFunctionSystem.from_model(document.ifs)
    logger.info(f"Running the transfer operator of {len(ifs.maps)} maps on {ifs.space!r}.")

    outcome = leading_eigenfunction(ifs, document.M2, tol=config.tol, max_iter=config.max_iter)
    kappa = math.tanh(outcome.constants.d2_diameter_bound / 4)
    membership = cone_membership(outcome.vector, HolderConeParams(M=document.M2, lam=ifs.lam), ifs.space)

    result = {
        "eigenvalue": outcome.eigenvalue,
        "residual": outcome.residual,
        "iterations": len(outcome.residual_history) - 1,
        "constants": outcome.constants.model_dump(),
        "contraction_bound": kappa,
        "in_cone": membership.member,
        "vector": outcome.vector,
        "hilbert_residuals": outcome.hilbert_residuals,
    }
    first = outcome.residual_history[0]
    table = [
        {"iteration": k, "residual": r, "bound": kappa ** k * first}
        for k, r in enumerate(outcome.residual_history)
    ]
    return RunnerOutput(result=result, table=table)
