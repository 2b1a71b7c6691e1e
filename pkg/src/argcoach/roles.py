"""User roles shared by the rating engine and the platform service."""

from enum import Enum


class UserRole(Enum):
    STUDENT = "student"
    MODERATOR = "moderator"
    MANAGER = "manager"


#: Roles whose ratings land in the moderator dimension.
MODERATING_ROLES = frozenset({UserRole.MODERATOR, UserRole.MANAGER})
