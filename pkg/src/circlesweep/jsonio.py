"""Canonical JSON emission: sorted keys, 17-significant-digit floats.

Byte-identical across emit -> parse -> emit round trips, so golden-file
tests and CLI/service parity checks are stable.
"""
from __future__ import annotations

import json
import math


def _fmt_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError(f"non-finite float in canonical JSON: {x!r}")
    return format(x, ".17g")


def _ser(obj) -> str:
    if obj is None or obj is True or obj is False:
        return json.dumps(obj)
    if isinstance(obj, bool):  # pragma: no cover - caught above
        return json.dumps(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return _fmt_float(obj)
    if isinstance(obj, str):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, dict):
        items = sorted(obj.items(), key=lambda kv: kv[0])
        inner = ",".join(f"{json.dumps(k, ensure_ascii=False)}:{_ser(v)}" for k, v in items)
        return "{" + inner + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(_ser(v) for v in obj) + "]"
    raise TypeError(f"cannot canonically serialize {type(obj)!r}")


def canonical_json(obj) -> str:
    return _ser(obj)


def canonical_json_bytes(obj) -> bytes:
    return canonical_json(obj).encode("utf-8")
