import hashlib
import json
import os
import tempfile
from typing import Dict, Optional

from algebra.polyring import H, Polynomial, from_json, to_json
from algebra.symfunc import Partition, partition_key
from utils.log import log_debug, log_warning
from utils.settings import get_settings


def compute_hash(content: str) -> str:
    return hashlib.sha256(content.encode("utf-8")).hexdigest()


def resolve_cache_dir(override: Optional[str] = None) -> Optional[str]:
    """The cache directory from --cache-dir, else QKSCHUR_CACHE_DIR; None keeps everything in memory."""
    path = override or get_settings().cache_dir
    if not path:
        return None
    try:
        os.makedirs(path, exist_ok=True)
    except OSError as e:
        log_warning("k-Schur cache disabled, cannot use %s: %s", path, e)
        return None
    return path


def cache_filename(n: int, degree: int) -> str:
    return f"kschur-n{n}-d{degree}.json"


def _parse_key(key: str) -> Partition:
    inner = key.strip()[1:-1]
    return tuple(int(p) for p in inner.split(",") if p.strip())


class KSchurCache:
    """
    Advisory on-disk store for k-Schur tables, one JSON file per (n, degree).

    A missing, unreadable or tampered file is treated as a miss. Writes go
    to a temporary file in the same directory and are moved into place with
    os.replace, so readers never see a partial file.
    """

    def __init__(self, directory: str):
        self.directory = directory

    def path(self, n: int, degree: int) -> str:
        return os.path.join(self.directory, cache_filename(n, degree))

    def load(self, n: int, degree: int) -> Optional[Dict[Partition, Polynomial]]:
        path = self.path(n, degree)
        if not os.path.exists(path):
            return None
        try:
            with open(path, "r", encoding="utf-8") as f:
                payload = json.load(f)
            table = payload["table"]
            if compute_hash(json.dumps(table, sort_keys=True)) != payload.get("sha256"):
                log_warning("ignoring %s: checksum mismatch", path)
                return None
            alphabet = H(n)
            out = {_parse_key(key): from_json(value, alphabet) for key, value in table.items()}
        except (OSError, ValueError, KeyError, TypeError) as e:
            log_warning("ignoring unreadable cache file %s: %s", path, e)
            return None
        log_debug("loaded %d k-Schur entries from %s", len(out), path)
        return out

    def save(self, n: int, degree: int, table: Dict[Partition, Polynomial]) -> None:
        serial = {partition_key(la): to_json(p) for la, p in sorted(table.items(), reverse=True)}
        payload = {
            "n": n,
            "degree": degree,
            "table": serial,
            "sha256": compute_hash(json.dumps(serial, sort_keys=True)),
        }
        fd, tmp = tempfile.mkstemp(prefix=".kschur-", suffix=".json", dir=self.directory)
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as f:
                json.dump(payload, f, indent=1, sort_keys=True)
            os.replace(tmp, self.path(n, degree))
        except OSError as e:
            log_warning("could not write k-Schur cache %s: %s", self.path(n, degree), e)
            if os.path.exists(tmp):
                os.remove(tmp)
            return
        log_debug("saved %d k-Schur entries to %s", len(table), self.path(n, degree))


def get_cache_client(override: Optional[str] = None) -> Optional[KSchurCache]:
    directory = resolve_cache_dir(override)
    return KSchurCache(directory) if directory else None
