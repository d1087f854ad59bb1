"""Canonical JSON serialization shared by the CLI and the HTTP service.

Both surfaces emit exactly this byte sequence for the same document, so
parity is byte equality, not structural equality.
"""

from __future__ import annotations

import json


def canonical_json(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":"), allow_nan=False)
