__license__ = "MIT"
__status__ = "Development"
__version__ = "1.0.0"
__email__ = "contact@bott-engine.dev"
__copyright__ = "Copyright 2026, Bott Engine"
__authors__ = ["Bott Engine contributors"]
__credits__ = ["Bott Engine contributors"]

import os.path
from os import makedirs
from .settings import settings
from logging.handlers import TimedRotatingFileHandler
from logging import INFO, DEBUG, WARNING, StreamHandler, getLogger, basicConfig


handlers = [StreamHandler()]
if settings.LOG_TO_FILE:
    if not os.path.isdir(settings.LOG_DIR):
        makedirs(settings.LOG_DIR)
    handler = TimedRotatingFileHandler(
        os.path.join(settings.LOG_DIR, "bott.log"), when="m", interval=60, backupCount=5
    )
    handler.namer = lambda name: name.replace(".log", "") + ".log"
    handlers.append(handler)

basicConfig(
    level=DEBUG if settings.DEVELOPMENT else INFO,
    datefmt="%Y/%m/%d %H:%M:%S",
    format="[%(asctime)s][%(name)s][%(levelname)s] ==> %(message)s",
    handlers=handlers,
)
getLogger("numpy").setLevel(WARNING)
getLogger("sympy").setLevel(WARNING)
logger = getLogger(__name__)
