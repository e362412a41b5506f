"""Small shared helpers: canonical JSON, hashing, CSV writing."""

from __future__ import annotations

import hashlib
import json


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def sha256_hex(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def config_hash(obj) -> str:
    return sha256_hex(canonical_json(obj).encode("utf-8"))
