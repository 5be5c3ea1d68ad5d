import os
import logging
from dataclasses import dataclass
from dotenv import load_dotenv

# Configure logging
logger = logging.getLogger(__name__)

# Load environment variables
load_dotenv()

DEFAULT_SEARCH_LIMIT = 10
DEFAULT_CENSUS_BUDGET = 10_000_000
DEFAULT_ORACLE_BUDGET = 100_000_000
DEFAULT_DATABASE_URL = "sqlite:///cgraph_census.db"
DEFAULT_LOG_LEVEL = "WARNING"


@dataclass(frozen=True)
class Settings:
    search_limit: int
    census_budget: int
    oracle_budget: int
    database_url: str
    log_level: str


def _int_from_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.error(f"{name}={raw!r} is not an integer, using {default}")
        return default
    if value < 1:
        logger.error(f"{name}={value} must be positive, using {default}")
        return default
    return value


def get_settings() -> Settings:
    """Read the declared CGRAPH_* variables (environment or .env file)."""
    return Settings(
        search_limit=_int_from_env("CGRAPH_SEARCH_LIMIT", DEFAULT_SEARCH_LIMIT),
        census_budget=_int_from_env("CGRAPH_CENSUS_BUDGET", DEFAULT_CENSUS_BUDGET),
        oracle_budget=_int_from_env("CGRAPH_ORACLE_BUDGET", DEFAULT_ORACLE_BUDGET),
        database_url=os.getenv("CGRAPH_DATABASE_URL") or DEFAULT_DATABASE_URL,
        log_level=(os.getenv("CGRAPH_LOG_LEVEL") or DEFAULT_LOG_LEVEL).upper(),
    )
