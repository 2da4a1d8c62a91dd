import sys
import click
from logging import DEBUG, getLogger
from typing import List, Optional
from app import logger, __version__
from app.commands import commands
from app.core.errors import BottError


class BottGroup(click.Group):
    """Reports domain errors as click errors (exit code 1)"""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except BottError as e:
            logger.debug("Command failed", exc_info=True)
            raise click.ClickException(str(e)) from e


@click.group(cls=BottGroup)
@click.version_option(__version__, prog_name="bott")
@click.option("--verbose", is_flag=True, help="Log at DEBUG level.")
def cli(verbose: bool):
    """Exact computations on real Bott manifolds."""
    if verbose:
        getLogger().setLevel(DEBUG)


for command in commands:
    cli.add_command(command)


def execute(argv: Optional[List[str]] = None) -> int:
    """Runs the CLI and returns its exit code"""
    try:
        result = cli.main(args=argv, prog_name="bott", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return 1
    return result if isinstance(result, int) else 0


if __name__ == "__main__":
    sys.exit(execute())
