"""Deterministic JSON text and digests for reports and golden files."""

import json
from hashlib import blake2b


def canonicalize_json(obj) -> str:
    """Keys sorted, no insignificant whitespace, UTF-8 kept as is."""
    return json.dumps(obj, separators=(",", ":"), sort_keys=True, ensure_ascii=False)


def digest_of_canonical(json_str: str) -> str:
    # blake2b 16-byte digest (128-bit) as hex
    h = blake2b(digest_size=16)
    h.update(json_str.encode("utf-8"))
    return h.hexdigest()


def canonical_digest(obj) -> str:
    return digest_of_canonical(canonicalize_json(obj))


def dump_jsonl(records) -> str:
    """One canonical JSON object per line, trailing newline included."""
    return "".join(canonicalize_json(r) + "\n" for r in records)
