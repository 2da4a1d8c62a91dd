__all__ = ["commands"]

import os.path
from app import logger
from pkgutil import iter_modules
from typing import List
import click


attr = "command"
module = "app.commands.{}"
commands: List[click.Command] = []
pkgpath = os.path.dirname(__file__)


for _, mod, _ in iter_modules([pkgpath]):
    try:
        imported_command = getattr(__import__(module.format(mod), fromlist=[attr]), attr)
    except AttributeError:
        logger.warning("%s does not have a %s object", module.format(mod), attr)
        logger.warning("Skipping %s", module.format(mod))
        continue
    commands.append(imported_command)
    logger.debug("command %s was added", mod)
