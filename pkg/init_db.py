import logging
from typing import Optional

from config import get_settings
from database import cached_census, get_db_context, init_db, list_census_runs
from field import make_modulus
from utils import configure_logging

# Configure logging
logger = logging.getLogger(__name__)

# (vertex count, modulus) pairs seeded into a fresh store
DEFAULT_CENSUSES = [(3, 2), (3, 3), (4, 2), (4, 3), (5, 2)]


def seed_censuses(url: Optional[str] = None) -> None:
    for n, p in DEFAULT_CENSUSES:
        try:
            codes = cached_census(n, make_modulus(p), url)
            logger.info(f"Census n={n} p={p}: {len(codes)} classes")
        except Exception as e:
            logger.error(f"Error seeding census n={n} p={p}: {str(e)}")


# Main initialization function
def initialize_database(url: Optional[str] = None) -> None:
    """Create the census tables and seed the small censuses."""
    try:
        init_db(url)
        seed_censuses(url)
        with get_db_context(url) as db:
            runs = list_census_runs(db)
        logger.info(f"Census store ready with {len(runs)} censuses")
    except Exception as e:
        logger.error(f"Error initializing census store: {str(e)}")
        raise


if __name__ == "__main__":
    settings = get_settings()
    configure_logging("INFO")
    initialize_database(settings.database_url)
