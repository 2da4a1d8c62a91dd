import click
from app import logger
from app.settings import settings
from app.core.cache import load_report, store_report
from app.core.classifier import classify_dimension
from app.utils.render import render_report


@click.command("classify")
@click.option("--dim", required=True, type=click.IntRange(1, settings.MAX_DIM))
@click.option("--format", "fmt", type=click.Choice(["table", "json"]), default="table")
@click.option("--threads", type=click.IntRange(min=0), default=settings.THREADS, show_default=True)
@click.option("--cache-dir", type=click.Path(file_okay=False), default=settings.CACHE_DIR)
@click.option("--no-cache", is_flag=True, help="Recompute and do not store the result.")
def command(dim: int, fmt: str, threads: int, cache_dir: str, no_cache: bool):
    """Partition every Bott matrix of size DIM into diffeomorphism classes."""
    report = None if no_cache else load_report(dim, cache_dir)
    if report is None:
        report = classify_dimension(dim, threads=threads)
        if not no_cache:
            try:
                store_report(report, cache_dir)
            except OSError as e:
                logger.warning("Could not write the cache: %s", e)
    click.echo(render_report(report, fmt))
