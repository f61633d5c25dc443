# Copyright (C) 2024 Callum Dickinson
#
# nary-invariants is free software: you can redistribute it and/or modify it under the terms of
# the GNU General Public License as published by the Free Software Foundation,
# either version 3 of the License, or (at your option) any later version.
#
# nary-invariants is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY;
# without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.
# See the GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License along with nary-invariants.
# If not, see <https://www.gnu.org/licenses/>.


"""
Versioned JSON cache of truncated Poincaré series.
"""

from __future__ import annotations

from contextlib import contextmanager
from logging import getLogger
from typing import TYPE_CHECKING, Dict, List, Optional

import json5  # type: ignore[import]

from pydantic import BaseModel, ValidationError

from .exceptions import CacheError, CacheLockError
from .types import SeriesTruncation

if TYPE_CHECKING:
    from pathlib import Path
    from typing import Iterator

    from typing_extensions import Self


logger = getLogger(__name__)

SCHEMA_VERSION = 1
"""
Version of the cache file layout. Files with any other version are ignored and rewritten.
"""


class CacheEntry(BaseModel):
    """
    Stored coefficient prefix of one Poincaré series.
    """

    n: int
    d: int
    max_degree: int
    coefficients: List[str]


class CacheFile(BaseModel):
    """
    Cache file contents, keyed by `"n,d"`.
    """

    schema_version: int = SCHEMA_VERSION
    entries: Dict[str, CacheEntry] = {}


def _key(n: int, d: int) -> str:
    return f"{n},{d}"


def _entry_problem(key: str, entry: CacheEntry) -> Optional[str]:
    if key != _key(entry.n, entry.d):
        return f"holds the series for n={entry.n} d={entry.d}"
    if len(entry.coefficients) != entry.max_degree + 1:
        return (
            f"{len(entry.coefficients)} coefficients stored "
            f"for max_degree {entry.max_degree}"
        )
    if not all(value.isdecimal() for value in entry.coefficients):
        return "coefficients are not all non-negative integers"
    return None


class SeriesCache:
    """
    Exclusive-access store of truncated Poincaré series in a JSON file.

    The file may only be read or written inside the `locked` context, which holds
    a `<path>.lock` marker file for its whole duration.

    ```python
    cache = SeriesCache(Path("series.json"))
    with cache.locked():
        series = cache.lookup(3, 3, 12)
        if series is None:
            series = series_truncated(3, 3, 12)
            cache.store(series)
    ```
    """

    def __init__(self, path: Path) -> None:
        self.path = path
        self._contents: Optional[CacheFile] = None

    @property
    def lock_path(self) -> Path:
        return self.path.with_name(f"{self.path.name}.lock")

    @contextmanager
    def locked(self) -> Iterator[Self]:
        """
        Hold the cache lock, failing immediately if another process holds it.

        Raises:
            CacheLockError: If the lock file already exists.
        """

        self.path.parent.mkdir(parents=True, exist_ok=True)
        try:
            self.lock_path.touch(exist_ok=False)
        except FileExistsError:
            raise CacheLockError(
                f"Cache file '{self.path}' is locked by another process "
                f"(remove '{self.lock_path}' if no other process is running)",
            ) from None
        try:
            self._contents = self._read()
            yield self
        finally:
            self._contents = None
            self.lock_path.unlink()

    def _read(self) -> CacheFile:
        if not self.path.exists():
            return CacheFile()
        try:
            raw = json5.loads(self.path.read_text(encoding="utf-8"))
        except ValueError as err:
            logger.warning("Ignoring unreadable cache file '%s': %s", self.path, err)
            return CacheFile()
        if not isinstance(raw, dict) or raw.get("schema_version") != SCHEMA_VERSION:
            logger.warning(
                "Ignoring cache file '%s' with unsupported schema version %s",
                self.path,
                repr(raw.get("schema_version") if isinstance(raw, dict) else None),
            )
            return CacheFile()
        try:
            contents = CacheFile.model_validate(raw)
        except ValidationError as err:
            logger.warning("Ignoring invalid cache file '%s': %s", self.path, err)
            return CacheFile()
        for key, entry in list(contents.entries.items()):
            problem = _entry_problem(key, entry)
            if problem:
                logger.warning(
                    "Ignoring inconsistent cache entry '%s' in '%s': %s",
                    key,
                    self.path,
                    problem,
                )
                del contents.entries[key]
        return contents

    @property
    def contents(self) -> CacheFile:
        if self._contents is None:
            raise CacheError("The cache may only be accessed while it is locked")
        return self._contents

    def lookup(self, n: int, d: int, max_degree: int) -> Optional[SeriesTruncation]:
        """
        Return the series up to `max_degree` if a long enough prefix is stored.
        """

        entry = self.contents.entries.get(_key(n, d))
        if entry is None or entry.max_degree < max_degree:
            logger.debug("Cache miss for n=%i d=%i max_degree=%i", n, d, max_degree)
            return None
        try:
            series = SeriesTruncation(
                n=n,
                d=d,
                max_degree=max_degree,
                coefficients=tuple(int(value) for value in entry.coefficients[: max_degree + 1]),
            )
        except ValueError as err:
            logger.warning("Ignoring unusable cache entry '%s': %s", _key(n, d), err)
            del self.contents.entries[_key(n, d)]
            return None
        logger.info("Cache hit for n=%i d=%i (stored up to degree %i)", n, d, entry.max_degree)
        return series

    def store(self, series: SeriesTruncation) -> None:
        """
        Store a series, unless a longer prefix of it is already stored, and write the file.
        """

        key = _key(series.n, series.d)
        existing = self.contents.entries.get(key)
        if existing is not None and existing.max_degree >= series.max_degree:
            return
        self.contents.entries[key] = CacheEntry(
            n=series.n,
            d=series.d,
            max_degree=series.max_degree,
            coefficients=[str(value) for value in series.coefficients],
        )
        self.path.write_text(f"{self.contents.model_dump_json(indent=2)}\n", encoding="utf-8")
        logger.info(
            "Stored n=%i d=%i up to degree %i in cache file '%s'",
            series.n,
            series.d,
            series.max_degree,
            self.path,
        )
