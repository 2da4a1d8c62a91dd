import click
from app.core.matrices import (
    format_matrix,
    is_orientable,
    normal_form,
    orientation_class,
    permutation_orbit,
    read_matrix,
    type_signature,
)
from app.utils.render import render_json


@click.command("invariants")
@click.option("--matrix", "path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "fmt", type=click.Choice(["table", "json"]), default="table")
def command(path: str, fmt: str):
    """Type, orientability, normal form and orbit size of a matrix file."""
    matrix = read_matrix(path)
    normal, sigma = normal_form(matrix)
    result = {
        "dim": matrix.n,
        "key": matrix.key_string,
        "type": type_signature(matrix).__json__(),
        "orientable": is_orientable(matrix),
        "w1": format(orientation_class(matrix), f"0{matrix.n}b")[::-1],
        "normal_form": normal.key_string,
        "permutation": sigma.__json__(),
        "orbit_size": len(permutation_orbit(matrix)),
    }
    if fmt == "json":
        click.echo(render_json(result))
        return
    click.echo(f"type: {type_signature(matrix)}")
    click.echo(f"orientable: {'true' if result['orientable'] else 'false'}")
    click.echo(f"w1: {result['w1']}")
    click.echo(f"normal form (permutation {[i + 1 for i in sigma.image]}):")
    click.echo(format_matrix(normal), nl=False)
    click.echo(f"orbit size: {result['orbit_size']}")
