"""Star ratings with separate community and moderator aggregation.

Scores are integers 1..5. A rater re-rating an argument replaces their prior
score; community and moderator dimensions never blend.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field
from datetime import datetime, timezone
from decimal import ROUND_HALF_UP, Decimal
from enum import Enum
from typing import NamedTuple, Protocol

from .errors import BadStars, NotRatable, SelfRating, UnknownArgument, UnknownCase
from .roles import MODERATING_ROLES, UserRole

_CENT = Decimal("0.01")


class Dimension(Enum):
    COMMUNITY = "community"
    MODERATOR = "moderator"


def dimension_for_role(role: UserRole) -> Dimension:
    return Dimension.MODERATOR if role in MODERATING_ROLES else Dimension.COMMUNITY


@dataclass(frozen=True)
class Rating:
    argument_ref: str
    rater_ref: str
    stars: int
    dimension: Dimension
    comment: str | None = None
    rated_at: datetime = field(default_factory=lambda: datetime.now(timezone.utc))


@dataclass(frozen=True)
class RatingSummary:
    argument_ref: str
    community_count: int
    community_mean: Decimal | None
    moderator_count: int
    moderator_mean: Decimal | None


@dataclass(frozen=True)
class ArgumentMeta:
    """What the ledger needs to know about a rating target."""

    case_ref: str
    author_ref: str
    published: bool
    order: int  # publication order within the platform; earlier is smaller


class ArgumentCatalog(Protocol):
    """Lookup surface the owning store provides to the ledger."""

    def argument_meta(self, argument_ref: str) -> ArgumentMeta | None: ...

    def case_arguments(self, case_ref: str) -> list[str] | None:
        """Argument ids of a case in publication order; None for unknown cases."""
        ...


class RankedArgument(NamedTuple):
    argument_ref: str
    mean: Decimal
    count: int


def _mean(stars: list[int]) -> Decimal:
    """Arithmetic mean rounded half-up to two decimals."""
    return (Decimal(sum(stars)) / Decimal(len(stars))).quantize(_CENT, rounding=ROUND_HALF_UP)


class RatingLedger:
    """All ratings, keyed per (argument, rater) so replacement is atomic."""

    def __init__(self, catalog: ArgumentCatalog):
        self._catalog = catalog
        self._ratings: dict[tuple[str, str], Rating] = {}
        self._lock = threading.Lock()

    def submit(
        self,
        argument_ref: str,
        rater_ref: str,
        role: UserRole,
        stars: int,
        comment: str | None = None,
    ) -> Rating:
        """Store (or replace) one rater's score for one argument."""
        if not isinstance(stars, int) or isinstance(stars, bool) or not 1 <= stars <= 5:
            raise BadStars(f"stars must be an integer in [1, 5], got {stars!r}")
        meta = self._catalog.argument_meta(argument_ref)
        if meta is None:
            raise UnknownArgument(f"no argument {argument_ref!r}")
        if not meta.published:
            raise NotRatable(f"argument {argument_ref!r} is not published")
        if meta.author_ref == rater_ref:
            raise SelfRating("authors cannot rate their own arguments")
        rating = Rating(
            argument_ref=argument_ref,
            rater_ref=rater_ref,
            stars=stars,
            dimension=dimension_for_role(role),
            comment=comment,
        )
        with self._lock:
            self._ratings[(argument_ref, rater_ref)] = rating
        return rating

    def _stars_by_dimension(self, argument_ref: str) -> dict[Dimension, list[int]]:
        buckets: dict[Dimension, list[int]] = {d: [] for d in Dimension}
        for rating in self._ratings.values():
            if rating.argument_ref == argument_ref:
                buckets[rating.dimension].append(rating.stars)
        return buckets

    def aggregate(self, argument_ref: str) -> RatingSummary:
        """Per-dimension count and mean; a dimension with no ratings has no mean."""
        if self._catalog.argument_meta(argument_ref) is None:
            raise UnknownArgument(f"no argument {argument_ref!r}")
        with self._lock:
            buckets = self._stars_by_dimension(argument_ref)
        community = buckets[Dimension.COMMUNITY]
        moderator = buckets[Dimension.MODERATOR]
        return RatingSummary(
            argument_ref=argument_ref,
            community_count=len(community),
            community_mean=_mean(community) if community else None,
            moderator_count=len(moderator),
            moderator_mean=_mean(moderator) if moderator else None,
        )

    def top_arguments(self, case_ref: str, dimension: Dimension, k: int) -> list[RankedArgument]:
        """The case's rated arguments, best mean first; ties favor more ratings,
        then earlier publication."""
        if k < 1:
            raise ValueError("k must be at least 1")
        members = self._catalog.case_arguments(case_ref)
        if members is None:
            raise UnknownCase(f"no case {case_ref!r}")
        ranked: list[tuple[Decimal, int, int, RankedArgument]] = []
        with self._lock:
            for order, argument_ref in enumerate(members):
                stars = [
                    r.stars for r in self._ratings.values()
                    if r.argument_ref == argument_ref and r.dimension == dimension
                ]
                if not stars:
                    continue
                entry = RankedArgument(argument_ref, _mean(stars), len(stars))
                ranked.append((entry.mean, entry.count, -order, entry))
        ranked.sort(key=lambda item: (item[0], item[1], item[2]), reverse=True)
        return [entry for *_sort_key, entry in ranked[:k]]

    def ratings_for(self, argument_ref: str) -> list[Rating]:
        with self._lock:
            return [r for r in self._ratings.values() if r.argument_ref == argument_ref]

    def snapshot(self) -> list[Rating]:
        """All stored ratings, for persistence."""
        with self._lock:
            return list(self._ratings.values())

    def restore(self, ratings: list[Rating]) -> None:
        with self._lock:
            self._ratings = {(r.argument_ref, r.rater_ref): r for r in ratings}


class InMemoryCatalog:
    """Dict-backed catalog, for tests and standalone engine use."""

    def __init__(self):
        self._meta: dict[str, ArgumentMeta] = {}
        self._cases: dict[str, list[str]] = {}

    def add_case(self, case_ref: str) -> None:
        self._cases.setdefault(case_ref, [])

    def add_argument(self, argument_ref: str, case_ref: str, author_ref: str,
                     published: bool = True) -> None:
        self.add_case(case_ref)
        self._meta[argument_ref] = ArgumentMeta(
            case_ref=case_ref,
            author_ref=author_ref,
            published=published,
            order=len(self._meta),
        )
        self._cases[case_ref].append(argument_ref)

    def argument_meta(self, argument_ref: str) -> ArgumentMeta | None:
        return self._meta.get(argument_ref)

    def case_arguments(self, case_ref: str) -> list[str] | None:
        return self._cases.get(case_ref)
