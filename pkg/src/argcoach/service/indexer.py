"""In-memory inverted index over cases and arguments.

Tokens are case-folded word characters. Search is AND-semantics over the
query tokens; hits rank by total match count, ties by recency. The index is
derived data: it is rebuilt from the persistent store at any time.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple

_WORD = re.compile(r"\w+")


def tokenize(text: str) -> list[str]:
    return _WORD.findall(text.casefold())


class DocKind(Enum):
    CASE = "case"
    ARGUMENT = "argument"


class SearchHit(NamedTuple):
    kind: DocKind
    doc_id: str
    score: int


@dataclass(frozen=True)
class IndexStats:
    cases: int
    arguments: int
    tokens: int

    @property
    def documents(self) -> int:
        return self.cases + self.arguments


@dataclass
class SearchIndex:
    # token -> (kind, id) -> occurrence count
    _postings: dict[str, dict[tuple[DocKind, str], int]] = field(default_factory=dict)
    _recency: dict[tuple[DocKind, str], int] = field(default_factory=dict)

    def add_document(self, kind: DocKind, doc_id: str, text: str, recency: int) -> None:
        key = (kind, doc_id)
        self._recency[key] = recency
        for token in tokenize(text):
            bucket = self._postings.setdefault(token, {})
            bucket[key] = bucket.get(key, 0) + 1

    def clear(self) -> None:
        self._postings.clear()
        self._recency.clear()

    def token_count(self) -> int:
        return len(self._postings)

    def search(self, query: str) -> list[SearchHit]:
        tokens = tokenize(query)
        if not tokens:
            return []
        candidates: dict[tuple[DocKind, str], int] | None = None
        for token in tokens:
            bucket = self._postings.get(token)
            if not bucket:
                return []
            if candidates is None:
                candidates = dict(bucket)
            else:
                candidates = {
                    key: count + bucket[key]
                    for key, count in candidates.items()
                    if key in bucket
                }
            if not candidates:
                return []
        assert candidates is not None
        ranked = sorted(
            candidates.items(),
            key=lambda item: (-item[1], -self._recency.get(item[0], 0)),
        )
        return [SearchHit(kind, doc_id, score) for (kind, doc_id), score in ranked]
