import click
from app.core.matrices import read_matrix
from app.core.ring import is_isomorphism, isomorphism_between


@click.command("iso")
@click.option("--a", "path_a", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--b", "path_b", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--emit-p", is_flag=True, help="Print the witness P row-major.")
@click.option("--brute-force", is_flag=True, help="Search all of GL(n; Z/2).")
def command(path_a: str, path_b: str, emit_p: bool, brute_force: bool):
    """Decide whether the Z/2 cohomology rings of two matrices are isomorphic."""
    a, b = read_matrix(path_a), read_matrix(path_b)
    if a.n != b.n:
        click.echo("not isomorphic")
        return
    p = isomorphism_between(a, b, brute_force=brute_force)
    if p is None:
        click.echo("not isomorphic")
        return
    if not is_isomorphism(a, b, p):
        raise click.ClickException(f"witness {p.bits} does not respect the relations")
    click.echo("isomorphic")
    if emit_p:
        click.echo(p.bits)
