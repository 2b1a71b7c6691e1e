"""The platform shell: persistence, search indexing, roles, HTTP API and CLI."""

from .config import ServiceConfig, load_config, load_tokens
from .indexer import DocKind, IndexStats, SearchIndex, tokenize
from .repository import (
    AUTH_MATRIX,
    ArgumentRecord,
    Case,
    ExportFormat,
    Operation,
    Page,
    Repository,
    SortOrder,
    authorize,
)

__all__ = [
    "AUTH_MATRIX",
    "ArgumentRecord",
    "Case",
    "DocKind",
    "ExportFormat",
    "IndexStats",
    "Operation",
    "Page",
    "Repository",
    "SearchIndex",
    "ServiceConfig",
    "SortOrder",
    "authorize",
    "load_config",
    "load_tokens",
    "tokenize",
]
