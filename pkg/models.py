from sqlalchemy import Column, Integer, String, ForeignKey, DateTime, Text, UniqueConstraint
from sqlalchemy.orm import declarative_base, relationship
from datetime import datetime, timezone

Base = declarative_base()


class CensusRun(Base):
    __tablename__ = "census_runs"
    __table_args__ = (UniqueConstraint("vertex_count", "modulus", name="uq_census_size"),)

    id = Column(Integer, primary_key=True, index=True)
    vertex_count = Column(Integer, nullable=False)
    modulus = Column(Integer, nullable=False)
    labeled_count = Column(Integer, nullable=False)  # p ** C(n, 2)
    class_count = Column(Integer, nullable=False)
    created_at = Column(DateTime, default=lambda: datetime.now(timezone.utc))

    classes = relationship("CensusClass", back_populates="run", cascade="all, delete-orphan")


class CensusClass(Base):
    __tablename__ = "census_classes"

    id = Column(Integer, primary_key=True, index=True)
    run_id = Column(Integer, ForeignKey("census_runs.id", ondelete="CASCADE"), index=True)
    code = Column(String(512), nullable=False)
    edge_count = Column(Integer, nullable=False)
    color_counts = Column(Text)  # JSON list, edges per color 1..p-1

    run = relationship("CensusRun", back_populates="classes")
