import click
from app.settings import settings
from app.core.group import (
    commutation_relations_hold,
    extension_cocycle,
    freeness_check,
    reflection_relations_hold,
)
from app.core.matrices import read_matrix


@click.group("group")
def command():
    """Checks on the fundamental group of a real Bott manifold."""


@command.command("verify")
@click.option("--matrix", "path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--bound", type=click.IntRange(min=1), default=settings.FREENESS_BOUND, show_default=True)
def verify(path: str, bound: int):
    """Relations, freeness and the extension cocycle of Gamma(A)."""
    matrix = read_matrix(path)
    checks = [
        ("relations", commutation_relations_hold(matrix)),
        ("reflections", reflection_relations_hold(matrix)),
        (f"freeness (bound {bound})", freeness_check(matrix, bound)),
    ]
    extension_cocycle(matrix)
    checks.append(("cocycle", True))
    for name, ok in checks:
        click.echo(f"{name}: {'ok' if ok else 'FAILED'}")
    failed = [name for name, ok in checks if not ok]
    if failed:
        raise click.ClickException(f"failed checks: {', '.join(failed)}")
