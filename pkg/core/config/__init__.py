"""
Configuration and report documents.

Provides:
- NormConfig: JSON norm description, validated into a NormSpec
- ReportDocument and friends: stable JSON output of the command line tool
"""
from core.config.loader import load_norm_config, load_table, parse_norm_config
from core.config.reports import (
    EmbeddingDocument,
    EnergyDocument,
    ReportDocument,
    embedding_document,
    energy_document,
    report_document,
)
from core.config.schemas import NormConfig

__all__ = [
    "EmbeddingDocument",
    "EnergyDocument",
    "NormConfig",
    "ReportDocument",
    "embedding_document",
    "energy_document",
    "load_norm_config",
    "load_table",
    "parse_norm_config",
    "report_document",
]
