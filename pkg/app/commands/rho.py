import click
from app.core.group import build_rho, check_extension_identities
from app.core.errors import ExtensionIdentityError
from app.core.matrices import normal_form, read_matrix
from app.core.ring import find_isomorphism
from app.utils.render import render_json


@click.command("rho")
@click.option("--a", "path_a", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--b", "path_b", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "fmt", type=click.Choice(["table", "json"]), default="table")
@click.option("--full-cube", is_flag=True, help="Check T on every lattice point of {0,1}^n.")
def command(path_a: str, path_b: str, fmt: str, full_cube: bool):
    """Build the monomorphism Gamma(B) -> Gamma(A) from a ring isomorphism."""
    a, _ = normal_form(read_matrix(path_a))
    b, _ = normal_form(read_matrix(path_b))
    if a.n != b.n:
        raise click.ClickException("matrices have different sizes")
    p = find_isomorphism(a, b)
    if p is None:
        raise click.ClickException("the cohomology rings are not isomorphic")
    rho = build_rho(a, b, p)
    verdict = check_extension_identities(rho, full_cube=full_cube)
    if fmt == "json":
        click.echo(render_json({"rho": rho.__json__(), "identities": verdict.__json__()}))
    else:
        n = rho.n
        click.echo(f"P: {rho.p.bits}")
        for r, word in enumerate(rho.images):
            click.echo(f"rho(t{r + 1}) = {word}")
        click.echo(f"det Q: {rho.det_q} ({'onto' if rho.is_onto else 'proper subgroup'})")
        click.echo("lambda:")
        for alpha, vector in enumerate(rho.lambdas):
            bits = format(alpha, f"0{n}b")[::-1]
            click.echo(f"  {bits}: {' '.join(str(v) for v in vector)}")
        for name, ok in verdict.checks.items():
            click.echo(f"{name}: {'ok' if ok else 'FAILED'}")
    if not verdict.holds:
        raise ExtensionIdentityError(
            "identities failed: " + ", ".join(k for k, ok in verdict.checks.items() if not ok)
        )
