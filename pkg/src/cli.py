"""
Command-line front end.

Every subcommand reads one JSON document (a path, or '-' for stdin), runs one toolkit
pipeline and prints the result. Exit status is 0 on success, 1 when a theorem check fails
(the witness is printed) and 2 on malformed input or flags.
"""

from typing import Any, Callable, Dict, Optional

import click
import pydantic

from .config.constants import EXIT_CHECK_FAILED, EXIT_INPUT_ERROR, SERVER_VERSION
from .config.run_config import RunConfig
from .formatting import ReportFormatter
from .toolkit import SheafToolkit
from .utils.errors import CheckFailure, ConfigurationError, InputError, SheafToolkitError
from .utils.logging import get_logger, setup_logging
from .utils.validation import FUNCTOR_KINDS, InputValidator

logger = get_logger(__name__)

SELF_TEST_MODULES = {
    "mobius": "poset",
    "euler": "poset",
    "predicates": "poset",
    "check-g": "presheaf",
    "decompose": "presheaf",
    "cech": "cech",
    "nerve": "nerve",
    "compare": "nerve",
    "verify-homotopy": "nerve",
    "marginal": "marginal",
    "surjectivity": "marginal",
    "oracle": "marginal",
}


def _read_document(path: Optional[str]) -> Any:
    if path is None:
        raise InputError("No input document given")
    if path == "-":
        return InputValidator.parse_json(click.get_text_stream("stdin").read(), "stdin")
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as e:
        raise InputError(f"Cannot read {path}: {e.strerror}")
    return InputValidator.parse_json(text, path)


def _parse_cover_flag(value: Optional[str]) -> Any:
    if value is None or value in ("canonical", "maximal"):
        return value
    return InputValidator.parse_json(value, "--cover")


def _emit_error(error: SheafToolkitError, output_format: str) -> None:
    click.echo(ReportFormatter.render(error.to_dict(), output_format, "error"), err=True)


COMMON_OPTIONS = (
    click.option("--field", "field_", default="rat", show_default=True, help="Coefficient field: rat or fp:<p>"),
    click.option("--max-degree", type=int, default=None, help="Highest cochain degree (default depends on the command)"),
    click.option("--mode", type=click.Choice(["full", "alt"]), default="alt", show_default=True,
                 help="Full ordered tuples or alternating/nondegenerate cochains"),
    click.option("--format", "output_format", type=click.Choice(["json", "table"]), default="json",
                 show_default=True),
    click.option("--seed", type=int, default=0, show_default=True, help="Seed for the built-in corpora"),
    click.option("--self-test", is_flag=True, help="Run this command's invariant suite instead"),
    click.option("--log-level", default="WARNING", show_default=True),
)


def common_options(func: Callable) -> Callable:
    """Flags shared by every subcommand."""
    for option in reversed(COMMON_OPTIONS):
        func = option(func)
    return func


def run_command(command: str, input_path: Optional[str], options: Dict[str, Any],
                action: Callable[[SheafToolkit, RunConfig, Any], Dict[str, Any]]) -> None:
    """
    Validate flags into a RunConfig, run the action and exit with the matching status.

    Args:
        command: Subcommand name
        input_path: Input document path, '-' for stdin
        options: The shared flags as parsed by click
        action: Called with the toolkit, the config and the parsed document
    """
    output_format = options.get("output_format", "json")
    try:
        config = RunConfig(
            command=command,
            input_path=input_path,
            field=options["field_"],
            max_degree=options["max_degree"],
            mode=options["mode"],
            output_format=output_format,
            seed=options["seed"],
            self_test=options["self_test"],
            log_level=options["log_level"],
        )
    except pydantic.ValidationError as e:
        problems = "; ".join(f"{'.'.join(str(x) for x in err['loc'])}: {err['msg']}" for err in e.errors())
        _emit_error(ConfigurationError(f"Invalid flags: {problems}"), output_format)
        raise SystemExit(EXIT_INPUT_ERROR)

    setup_logging(config.log_level)
    toolkit = SheafToolkit(config.field_spec, config.max_degree, config.seed)
    try:
        if config.self_test:
            result = toolkit.self_test(SELF_TEST_MODULES.get(command, "all"))
        else:
            result = action(toolkit, config, _read_document(input_path))
    except CheckFailure as e:
        logger.error(f"{command}: {e.message}")
        click.echo(ReportFormatter.render(e.to_dict(), config.output_format, "check failed"))
        raise SystemExit(EXIT_CHECK_FAILED)
    except SheafToolkitError as e:
        logger.error(f"{command}: {e.message}")
        _emit_error(e, config.output_format)
        raise SystemExit(EXIT_INPUT_ERROR)
    click.echo(ReportFormatter.render(result, config.output_format, command))


@click.group()
@click.version_option(version=SERVER_VERSION, prog_name="sheaf-toolkit")
def cli():
    """Sheaf cohomology of finite posets and hypergraphs."""


input_argument = click.argument("input_path", required=False, type=click.Path(dir_okay=False, allow_dash=True))


@cli.command()
@input_argument
@common_options
def mobius(input_path, **options):
    """Möbius function table of a poset or hypergraph."""
    run_command("mobius", input_path, options, lambda tk, cfg, doc: tk.mobius(doc))


@cli.command()
@input_argument
@common_options
def euler(input_path, **options):
    """Euler characteristic, checked three ways."""
    run_command("euler", input_path, options, lambda tk, cfg, doc: tk.euler(doc))


@cli.command()
@input_argument
@common_options
def predicates(input_path, **options):
    """Structural predicates, components and final elements."""
    run_command("predicates", input_path, options, lambda tk, cfg, doc: tk.predicates(doc))


@cli.command("check-g")
@input_argument
@common_options
def check_g(input_path, **options):
    """Sum-intersection condition G of an injective presheaf."""
    run_command("check-g", input_path, options, lambda tk, cfg, doc: tk.check_g(doc))


@cli.command()
@input_argument
@common_options
def decompose(input_path, **options):
    """Interaction decomposition of an injective presheaf."""
    run_command("decompose", input_path, options, lambda tk, cfg, doc: tk.decompose(doc))


@cli.command()
@input_argument
@common_options
@click.option("--cover", default=None, help="canonical, maximal, or a JSON list of element lists")
@click.option("--subset", default=None, help="Comma-separated elements of a sub-open for relative cohomology")
@click.option("--functor", "functor_kind", type=click.Choice(FUNCTOR_KINDS), default="free_copresheaf",
              show_default=True, help="Construction used when the document is a bare hypergraph")
@click.option("--export", is_flag=True, help="Include the cochain complex in the output")
def cech(input_path, cover, subset, functor_kind, export, **options):
    """Čech cohomology on a cover of the Alexandrov space."""

    def action(tk: SheafToolkit, cfg: RunConfig, doc: Any) -> Dict[str, Any]:
        labels = [s.strip() for s in subset.split(",") if s.strip()] if subset else None
        return tk.cech(doc, cfg.cech_mode, _parse_cover_flag(cover), labels, export, functor_kind)

    run_command("cech", input_path, options, action)


@cli.command()
@input_argument
@common_options
def nerve(input_path, **options):
    """Cohomology of the category-nerve complex."""
    run_command("nerve", input_path, options, lambda tk, cfg, doc: tk.nerve(doc, cfg.nerve_mode))


@cli.command()
@input_argument
@common_options
def compare(input_path, **options):
    """Čech against nerve cohomology through the comparison map."""
    run_command("compare", input_path, options, lambda tk, cfg, doc: tk.compare(doc, cfg.cech_mode))


@cli.command("verify-homotopy")
@input_argument
@common_options
@click.option("--cover", default=None, help="canonical, maximal (default), or a JSON list of element lists")
def verify_homotopy(input_path, cover, **options):
    """Homotopy identities between the covering and category nerves."""
    run_command("verify-homotopy", input_path, options,
                lambda tk, cfg, doc: tk.verify_homotopy(doc, _parse_cover_flag(cover)))


@cli.command()
@input_argument
@common_options
@click.option("--oracle", "with_oracle", is_flag=True, help="Cross-check H^0 by brute force")
def marginal(input_path, with_oracle, **options):
    """Pseudomarginal dimension, index and Euler characteristics of a hypergraph."""
    run_command("marginal", input_path, options, lambda tk, cfg, doc: tk.marginal(doc, with_oracle))


@cli.command()
@input_argument
@click.argument("large_path", required=False, type=click.Path(dir_okay=False, allow_dash=True))
@common_options
@click.option("--vertex-map", default=None, help="JSON object mapping small vertices to large ones")
def surjectivity(input_path, large_path, vertex_map, **options):
    """Restriction of pseudomarginals along a hypergraph inclusion."""

    def action(tk: SheafToolkit, cfg: RunConfig, doc: Any) -> Dict[str, Any]:
        vmap = InputValidator.parse_json(vertex_map, "--vertex-map") if vertex_map else None
        return tk.surjectivity(doc, _read_document(large_path), vmap)

    run_command("surjectivity", input_path, options, action)


@cli.command()
@input_argument
@common_options
def oracle(input_path, **options):
    """Brute-force H^0 against the section pipeline."""
    run_command("oracle", input_path, options, lambda tk, cfg, doc: tk.oracle(doc))


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
