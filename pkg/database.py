import json
import logging
from contextlib import contextmanager
from functools import lru_cache
from typing import Iterator, List, Optional

from sqlalchemy import create_engine
from sqlalchemy.engine import Engine
from sqlalchemy.orm import Session, sessionmaker

from config import get_settings
from field import Modulus
from iso import CanonicalCode, census_codes
from models import Base, CensusClass, CensusRun

# Configure logging
logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def get_engine(url: str) -> Engine:
    """One engine per database URL, created on first use."""
    logger.info(f"Opening census store at {url}")
    return create_engine(url)


def new_session(url: Optional[str] = None) -> Session:
    url = url or get_settings().database_url
    factory = sessionmaker(autocommit=False, autoflush=False, bind=get_engine(url))
    return factory()


@contextmanager
def get_db_context(url: Optional[str] = None) -> Iterator[Session]:
    """
    Get a database session as a context manager.
    Usage:
        with get_db_context() as db:
            # use db here
    """
    db = new_session(url)
    try:
        yield db
    finally:
        db.close()


def init_db(url: Optional[str] = None) -> None:
    """Create the census tables if they don't exist."""
    url = url or get_settings().database_url
    logger.info("Creating census tables if they don't exist...")
    Base.metadata.create_all(bind=get_engine(url))


def load_census(db: Session, n: int, modulus: Modulus) -> Optional[List[CanonicalCode]]:
    run = db.query(CensusRun).filter_by(vertex_count=n, modulus=modulus.p).first()
    if run is None:
        return None
    codes = sorted(CanonicalCode.from_text(modulus.p, n, row.code) for row in run.classes)
    if len(codes) != run.class_count:
        logger.error(f"census n={n} p={modulus.p} stored {len(codes)} of {run.class_count} classes")
        return None
    return codes


def save_census(db: Session, n: int, modulus: Modulus, codes: List[CanonicalCode]) -> CensusRun:
    """Store (or replace) the census for (n, p)."""
    existing = db.query(CensusRun).filter_by(vertex_count=n, modulus=modulus.p).first()
    if existing is not None:
        logger.info(f"Replacing stored census n={n} p={modulus.p}")
        db.delete(existing)
        db.flush()
    run = CensusRun(
        vertex_count=n,
        modulus=modulus.p,
        labeled_count=modulus.p ** (n * (n - 1) // 2),
        class_count=len(codes),
    )
    run.classes = [
        CensusClass(
            code=str(code),
            edge_count=code.edge_count,
            color_counts=json.dumps(list(code.color_counts())),
        )
        for code in codes
    ]
    db.add(run)
    try:
        db.commit()
    except Exception as e:
        db.rollback()
        logger.error(f"Error storing census n={n} p={modulus.p}: {str(e)}")
        raise
    return run


def cached_census(n: int, modulus: Modulus, url: Optional[str] = None) -> List[CanonicalCode]:
    """Census codes from the store, computing and storing them on a miss."""
    init_db(url)
    with get_db_context(url) as db:
        codes = load_census(db, n, modulus)
        if codes is not None:
            logger.info(f"Loaded census n={n} p={modulus.p} from the store")
            return codes
        codes = census_codes(n, modulus)
        save_census(db, n, modulus, codes)
        return codes


def list_census_runs(db: Session) -> List[CensusRun]:
    return db.query(CensusRun).order_by(CensusRun.vertex_count, CensusRun.modulus).all()
