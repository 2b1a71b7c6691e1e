"""Service configuration: one JSON file, overridable per key by environment
variables (ARGCOACH_PORT, ARGCOACH_DATA_DIR, ARGCOACH_LOCALE_ASSETS,
ARGCOACH_TOKEN_FILE, ARGCOACH_DEFAULT_LOCALE, ARGCOACH_SCHEMES_DIR,
ARGCOACH_HOST)."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping

from ..errors import ParseError
from ..roles import UserRole

_ENV_KEYS = {
    "host": "ARGCOACH_HOST",
    "port": "ARGCOACH_PORT",
    "data_dir": "ARGCOACH_DATA_DIR",
    "locale_assets": "ARGCOACH_LOCALE_ASSETS",
    "token_file": "ARGCOACH_TOKEN_FILE",
    "default_locale": "ARGCOACH_DEFAULT_LOCALE",
    "schemes_dir": "ARGCOACH_SCHEMES_DIR",
}


@dataclass(frozen=True)
class ServiceConfig:
    data_dir: Path = Path("argcoach-data")
    host: str = "127.0.0.1"
    port: int = 8765
    locale_assets: Path | None = None   # None -> shipped bundle
    token_file: Path | None = None
    default_locale: str = "en"
    schemes_dir: Path | None = None     # extra scheme sets overlaying shipped ones


def load_config(path: str | Path | None = None,
                env: Mapping[str, str] | None = None) -> ServiceConfig:
    env = os.environ if env is None else env
    values: dict = {}
    if path is not None:
        raw = Path(path).read_text(encoding="utf-8")
        try:
            data = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad config file: {exc.msg}",
                             line=exc.lineno, offset=exc.pos) from exc
        if not isinstance(data, dict):
            raise ParseError("config file must hold a JSON object")
        unknown = set(data) - set(_ENV_KEYS)
        if unknown:
            raise ParseError(f"unknown config keys: {sorted(unknown)}")
        values.update(data)
    for key, env_key in _ENV_KEYS.items():
        if env_key in env:
            values[key] = env[env_key]

    def path_or_none(key: str) -> Path | None:
        return Path(values[key]) if values.get(key) else None

    return ServiceConfig(
        data_dir=Path(values.get("data_dir", "argcoach-data")),
        host=str(values.get("host", "127.0.0.1")),
        port=int(values.get("port", 8765)),
        locale_assets=path_or_none("locale_assets"),
        token_file=path_or_none("token_file"),
        default_locale=str(values.get("default_locale", "en")),
        schemes_dir=path_or_none("schemes_dir"),
    )


def load_tokens(path: str | Path) -> dict[str, tuple[str, UserRole]]:
    """Static token table: {token: {"user": id, "role": name}}."""
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad token file: {exc.msg}",
                         line=exc.lineno, offset=exc.pos) from exc
    if not isinstance(data, dict):
        raise ParseError("token file must hold a JSON object")
    table: dict[str, tuple[str, UserRole]] = {}
    for token, entry in data.items():
        if not isinstance(entry, dict) or "user" not in entry or "role" not in entry:
            raise ParseError(f"token {token!r} needs 'user' and 'role'")
        try:
            role = UserRole(entry["role"])
        except ValueError:
            raise ParseError(f"token {token!r} has unknown role {entry['role']!r}") from None
        table[token] = (str(entry["user"]), role)
    return table
