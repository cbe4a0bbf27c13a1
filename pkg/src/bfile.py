"""
OEIS b-files: parsing, download and a plain-file cache.

A b-file is plain text, one "index value" pair per line. The cache keeps one
file per sequence id holding the body exactly as it was fetched, so a cached
read and a fresh download parse identically.
"""
import os
import re
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

import requests
from loguru import logger

try:
    from .config import DEFAULT_CONFIG, allow_big_int_text, resolve_path
    from .numtheory import lcm_bar, lcm_upto
except ImportError:
    from config import DEFAULT_CONFIG, allow_big_int_text, resolve_path
    from numtheory import lcm_bar, lcm_upto

SEQUENCE_ID = re.compile(r"^A\d{6}$")

# Sequence id -> exact oracle for a(n)
SUPPORTED: Dict[str, Callable[[int], int]] = {
    "A003418": lcm_upto,
    "A048671": lcm_bar,
}


class BFileError(Exception):
    """Parse, network or cache failure at the b-file boundary."""


@dataclass
class BFile:
    sequence_id: str
    entries: List[Tuple[int, int]] = field(default_factory=list)

    def __post_init__(self):
        if not SEQUENCE_ID.match(self.sequence_id):
            raise ValueError(f"sequence id must look like A000000, got {self.sequence_id!r}")
        for (i, _), (j, _) in zip(self.entries, self.entries[1:]):
            if j <= i:
                raise BFileError(f"{self.sequence_id}: index {j} does not follow {i}")

    def upto(self, last_index: int) -> List[Tuple[int, int]]:
        return [(i, v) for i, v in self.entries if i <= last_index]

    def as_dict(self) -> Dict[int, int]:
        return dict(self.entries)


@dataclass
class Mismatch:
    index: int
    expected: int
    found: Optional[int]


def parse_bfile(sequence_id: str, text: str) -> BFile:
    """Lines "index value"; blank lines and '#' comments are skipped."""
    allow_big_int_text()
    entries = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) < 2:
            raise BFileError(f"{sequence_id} line {lineno}: expected 'index value', got {raw!r}")
        try:
            entries.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise BFileError(f"{sequence_id} line {lineno}: non-integer field in {raw!r}")
    return BFile(sequence_id, entries)


def bfile_url(sequence_id: str, base_url: str) -> str:
    return f"{base_url.rstrip('/')}/{sequence_id}/b{sequence_id[1:]}.txt"


class BFileStore:
    """Loads b-files from the bundled fixtures, the disk cache or the network."""

    def __init__(self, config: Optional[dict] = None):
        config = config or DEFAULT_CONFIG
        self.base_url = config.get("OEIS_BASE_URL", DEFAULT_CONFIG["OEIS_BASE_URL"])
        self.cache_dir = resolve_path(config.get("CACHE_DIR", DEFAULT_CONFIG["CACHE_DIR"]))
        self.fixture_dir = resolve_path(config.get("FIXTURE_DIR", DEFAULT_CONFIG["FIXTURE_DIR"]))
        self.timeout = float(config.get("HTTP_TIMEOUT", DEFAULT_CONFIG["HTTP_TIMEOUT"]))

    def _cache_path(self, sequence_id: str) -> str:
        return os.path.join(self.cache_dir, f"{sequence_id}.txt")

    def _fixture_path(self, sequence_id: str) -> str:
        return os.path.join(self.fixture_dir, f"{sequence_id}.txt")

    def load_fixture(self, sequence_id: str) -> BFile:
        path = self._fixture_path(sequence_id)
        if not os.path.exists(path):
            raise BFileError(f"no bundled fixture for {sequence_id} at {path}")
        with open(path, "r") as f:
            return parse_bfile(sequence_id, f.read())

    def fetch(self, sequence_id: str) -> bytes:
        """Raw response body; decoding is left to the caller so the cache stays byte-exact."""
        url = bfile_url(sequence_id, self.base_url)
        logger.debug(f"GET {url}")
        try:
            response = requests.get(url, timeout=self.timeout)
            response.raise_for_status()
        except requests.RequestException as e:
            raise BFileError(f"could not fetch {sequence_id} from {url}: {e}")
        return response.content

    def load(self, sequence_id: str, offline: bool = False, refresh: bool = False) -> BFile:
        """Fixture when offline; otherwise cache unless refresh, then network."""
        if offline:
            return self.load_fixture(sequence_id)
        path = self._cache_path(sequence_id)
        if not refresh and os.path.exists(path):
            logger.debug(f"cache hit for {sequence_id}: {path}")
            with open(path, "rb") as f:
                return parse_bfile(sequence_id, _decode(sequence_id, f.read()))
        logger.debug(f"cache miss for {sequence_id}")
        body = self.fetch(sequence_id)
        bfile = parse_bfile(sequence_id, _decode(sequence_id, body))
        try:
            os.makedirs(self.cache_dir, exist_ok=True)
            with open(path, "wb") as f:
                f.write(body)
        except OSError as e:
            logger.warning(f"could not cache {sequence_id} at {path}: {e}")
        return bfile


def _decode(sequence_id: str, body: bytes) -> str:
    try:
        return body.decode("utf-8")
    except UnicodeDecodeError as e:
        raise BFileError(f"{sequence_id}: b-file is not UTF-8 text ({e})")


def cross_check(bfile: BFile, upto: int) -> Tuple[int, List[Mismatch]]:
    """Compare every entry with index <= upto against the exact oracle."""
    if bfile.sequence_id not in SUPPORTED:
        raise BFileError(f"no oracle for {bfile.sequence_id}")
    oracle = SUPPORTED[bfile.sequence_id]
    checked, mismatches = 0, []
    for index, value in bfile.upto(upto):
        expected = oracle(index)
        checked += 1
        if value != expected:
            mismatches.append(Mismatch(index, expected, value))
    return checked, mismatches
