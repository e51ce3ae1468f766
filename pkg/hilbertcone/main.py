"""Public entry point for the hilbertcone script."""

import argparse
import json
import sys
from collections.abc import Callable
from pathlib import Path
from types import SimpleNamespace
from typing import Any, TextIO

import pandas as pd
from loguru import logger
from pydantic import ValidationError

from hilbertcone import __version__
from hilbertcone.birkhoff.runner import diam_runner, power_runner
from hilbertcone.cones.runner import dist_runner
from hilbertcone.config import settings
from hilbertcone.dynamics.runner import bounds_runner, orbit_runner
from hilbertcone.embeddings.runner import embed_runner
from hilbertcone.exceptions import (InputException, NumericalException,
                                    SchemaException)
from hilbertcone.models import RunConfig, RunnerOutput
from hilbertcone.transfer.runner import transfer_runner
from hilbertcone.utils.utils import decode_extended, encode_extended

EXIT_OK, EXIT_INPUT, EXIT_NUMERICAL = 0, 1, 2

runners = SimpleNamespace()

runners.dist = dist_runner
runners.diam = diam_runner
runners.power = power_runner
runners.embed = embed_runner
runners.orbit = orbit_runner
runners.transfer = transfer_runner
runners.bounds = bounds_runner


def configure_logging(level: str) -> None:
    """Route loguru output to stderr at the given level."""
    logger.remove()
    logger.add(sys.stderr, level=level)


def _header(config: RunConfig) -> dict[str, Any]:
    return {
        "command": config.command,
        "seed": config.seed,
        "tol": config.tol,
        "max_iter": config.max_iter,
        "version": __version__,
    }


def _write_json(output: RunnerOutput, config: RunConfig, handle: TextIO) -> None:
    document = {"header": _header(config), "result": output.result}
    json.dump(encode_extended(document), handle, indent=2)
    handle.write("\n")


def _write_csv(output: RunnerOutput, config: RunConfig, handle: TextIO) -> None:
    if output.table is None:
        raise SchemaException(f"Command '{config.command}' has no tabular output; use --format json.")
    handle.write(f"# command={config.command} seed={config.seed} tol={config.tol}\n")
    pd.DataFrame(output.table).to_csv(handle, index=False)


def write_output(output: RunnerOutput, config: RunConfig) -> None:
    writer: Callable = _write_csv if config.format == "csv" else _write_json
    if config.output_path is None:
        writer(output, config, sys.stdout)
        return
    with open(config.output_path, "w") as f:
        writer(output, config, f)
    logger.info(f"Wrote {config.format} artifact to '{config.output_path}'.")


def _log_validation_error(error: ValidationError) -> None:
    for detail in error.errors():
        location = ".".join(str(part) for part in detail["loc"]) or "<root>"
        logger.error(f"{location}: {detail['msg']}")


def run(config: RunConfig) -> int:
    """Run one command and write its artifact; return the exit status."""
    try:
        with open(config.input_path) as f:
            data = decode_extended(json.load(f))
    except OSError as error:
        logger.error(f"Cannot read '{config.input_path}': {error}")
        return EXIT_INPUT
    except json.JSONDecodeError as error:
        logger.error(f"{config.input_path}:{error.lineno}:{error.colno}: {error.msg}")
        return EXIT_INPUT

    runner: Callable = getattr(runners, config.command)
    try:
        output = runner(data, config)
        write_output(output, config)
    except ValidationError as error:
        _log_validation_error(error)
        return EXIT_INPUT
    except InputException as error:
        logger.error(f"{type(error).__name__}: {error}")
        return EXIT_INPUT
    except NumericalException as error:
        logger.error(f"{type(error).__name__}: {error}")
        return EXIT_NUMERICAL
    except ArithmeticError as error:
        logger.error(f"Numerical failure: {type(error).__name__}: {error}")
        return EXIT_NUMERICAL
    return EXIT_OK


parser = argparse.ArgumentParser(
    prog="hilbertcone",
    description="Hilbert and Thompson metrics on cones, Birkhoff contraction and related dynamics.",
)
_common = argparse.ArgumentParser(add_help=False)
_common.add_argument("--input", required=True, type=Path, help="JSON input document.")
_common.add_argument("--output", type=Path, help="Artifact path; stdout if omitted.")
_common.add_argument("--seed", type=int)
_common.add_argument("--tol", type=float)
_common.add_argument("--max-iter", type=int)
_common.add_argument("--format", choices=["json", "csv"], default="json")
_common.add_argument("--verbose", action="store_true", help="Log at DEBUG level.")

_commands = parser.add_subparsers(dest="command", required=True)
for _name in runners.__dict__.keys():
    _commands.add_parser(_name, parents=[_common], help=getattr(runners, _name).__doc__)


def main(argv: list[str] | None = None) -> int:
    args = parser.parse_args(argv)
    configure_logging("DEBUG" if args.verbose else settings.log_level)

    try:
        config = RunConfig(
            command=args.command,
            input_path=args.input,
            output_path=args.output,
            seed=args.seed,
            tol=args.tol,
            max_iter=args.max_iter,
            format=args.format,
        )
    except ValidationError as error:
        _log_validation_error(error)
        return EXIT_INPUT
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
