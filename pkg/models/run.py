"""
Run ledger models: one RunRecord per verify / hamilton invocation, one CheckRecord per check.
"""
from sqlalchemy import Column, Integer, String, Text, DateTime, ForeignKey, Boolean, Float, Enum
from sqlalchemy.orm import relationship
import datetime
import enum

from models.base import Base


class RunStatus(enum.Enum):
    """Overall outcome of a recorded run"""
    PASSED = "passed"
    FAILED = "failed"
    SKIPPED = "skipped"
    UNKNOWN = "unknown"


class RunRecord(Base):
    """A single recorded command run."""
    __tablename__ = 'runs'

    runID = Column(Integer, primary_key=True)
    createdAt = Column(DateTime, default=datetime.datetime.utcnow)

    command = Column(String, nullable=False)  # verify, hamilton
    parameters = Column(Text, nullable=True)  # JSON of the run parameters
    status = Column(Enum(RunStatus), default=RunStatus.UNKNOWN)
    exitCode = Column(Integer, default=0)
    elapsedSeconds = Column(Float, nullable=True)
    systemVersion = Column(String, nullable=True)

    checks = relationship("CheckRecord", back_populates="run", cascade="all, delete-orphan",
                          order_by="CheckRecord.position")

    @property
    def checkSummary(self) -> str:
        """Space-separated name:status pairs in run order."""
        return " ".join(f"{c.name}:{c.status_word}" for c in self.checks)

    def __repr__(self):
        return f"<RunRecord(ID={self.runID}, command='{self.command}', status={self.status})>"


class CheckRecord(Base):
    """Outcome of one named check inside a run."""
    __tablename__ = 'checks'

    checkID = Column(Integer, primary_key=True)
    runID = Column(Integer, ForeignKey('runs.runID'), nullable=False)
    position = Column(Integer, default=0)

    name = Column(String, nullable=False)
    passed = Column(Boolean, default=False)
    skipped = Column(Boolean, default=False)
    detail = Column(Text, nullable=True)
    counters = Column(Text, nullable=True)  # JSON

    run = relationship("RunRecord", back_populates="checks")

    @property
    def status_word(self) -> str:
        if self.skipped:
            return "skipped"
        return "pass" if self.passed else "fail"
