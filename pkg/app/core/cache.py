import os
import ujson
from app import logger, __version__
from tempfile import NamedTemporaryFile
from typing import Optional
from app.models.report import ClassReport


def cache_path(dim: int, cache_dir: str, version: str = __version__) -> str:
    return os.path.join(cache_dir, f"classify-{dim}-{version}.json")


def load_report(dim: int, cache_dir: str) -> Optional[ClassReport]:
    """Returns the cached classification of ``dim`` or None when missing or stale"""
    path = cache_path(dim, cache_dir)
    if not os.path.isfile(path):
        return None
    try:
        with open(path, "r", encoding="utf-8") as r:
            data = ujson.load(r)
    except (OSError, ValueError) as e:
        logger.warning("Ignoring unreadable cache file %s: %s", path, e)
        return None
    if data.get("tool_version") != __version__ or data.get("dim") != dim:
        logger.info("Ignoring stale cache file %s", path)
        return None
    logger.debug("Loaded classification of size %s from %s", dim, path)
    return ClassReport.from_json(data)


def store_report(report: ClassReport, cache_dir: str) -> str:
    """Writes the report atomically and returns its path"""
    if not os.path.isdir(cache_dir):
        os.makedirs(cache_dir)
    path = cache_path(report.dim, cache_dir, report.tool_version)
    with NamedTemporaryFile(
        "w", encoding="utf-8", dir=cache_dir, suffix=".tmp", delete=False
    ) as w:
        ujson.dump(report.__json__(), w)
        tmp = w.name
    os.replace(tmp, path)
    logger.debug("Stored classification of size %s in %s", report.dim, path)
    return path
