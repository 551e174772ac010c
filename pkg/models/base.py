"""
Base model for SQLAlchemy ORM - run ledger database.
"""
from sqlalchemy.orm import declarative_base

Base = declarative_base()
