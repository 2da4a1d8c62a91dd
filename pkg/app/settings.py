from os import getenv
from dotenv import load_dotenv
try:
    from pydantic import BaseSettings
except ImportError:  # pydantic >= 2 ships the v1 API under pydantic.v1
    from pydantic.v1 import BaseSettings


load_dotenv()


class _Settings(BaseSettings):
    DEVELOPMENT: bool = getenv("BOTT_DEV", "").lower() == "true"

    LOG_DIR: str = getenv("BOTT_LOG_DIR", "logs")
    LOG_TO_FILE: bool = getenv("BOTT_LOG_TO_FILE", "true").lower() == "true"

    CACHE_DIR: str = getenv("BOTT_CACHE_DIR", ".cache/bott")
    THREADS: int = int(getenv("BOTT_THREADS", "1"))

    MAX_DIM: int = 8
    CLASSIFY_MAX_DIM: int = int(getenv("BOTT_CLASSIFY_MAX_DIM", "5"))
    BRUTE_FORCE_MAX_DIM: int = 4
    COHOMOLOGY_MAX_RANK: int = 3
    COHOMOLOGY_EXTENDED_RANK: int = 4
    FREENESS_BOUND: int = int(getenv("BOTT_FREENESS_BOUND", "2"))
    RING_CACHE_SIZE: int = int(getenv("BOTT_RING_CACHE_SIZE", "65536"))


settings = _Settings()
