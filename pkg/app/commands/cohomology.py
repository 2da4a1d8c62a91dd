from typing import Optional
import click
from app.settings import settings
from app.core.cohomology import h2_of_character
from app.models.cohomology import SignCharacter
from app.utils.render import render_divisors, render_json


@click.command("cohomology")
@click.option("--rank", required=True, type=click.IntRange(1, settings.COHOMOLOGY_EXTENDED_RANK))
@click.option("--char", "mask", type=click.IntRange(min=0), default=None, help="Character mask.")
@click.option("--format", "fmt", type=click.Choice(["table", "json"]), default="table")
@click.option("--extended", is_flag=True, help="Allow the rank 4 complex.")
def command(rank: int, mask: Optional[int], fmt: str, extended: bool):
    """H^2 of (Z_2)^RANK with coefficients twisted by sign characters."""
    if mask is not None and mask >> rank:
        raise click.BadParameter(f"mask must be below {1 << rank}", param_hint="--char")
    characters = SignCharacter.all(rank) if mask is None else [SignCharacter(rank, mask)]
    results = [(phi, h2_of_character(rank, phi, extended)) for phi in characters]
    if fmt == "json":
        click.echo(render_json([{"mask": phi.mask, "h2": divisors} for phi, divisors in results]))
        return
    for phi, divisors in results:
        click.echo(f"{phi}: {render_divisors(divisors)}")
