"""JSON wire formats for set and sequence families.

Set families::

    {"n": 4, "sets": [[1, 2], [2, 3, 4]]}

Sequence families (the presence of ``"m"`` selects this form)::

    {"m": 3, "n": 2, "seqs": [[1, 2], [3, 1]]}

Members are written in ascending mask / index order, so serialising a
parsed canonical document reproduces it byte for byte.
"""

from __future__ import annotations

import json
import os
from typing import Union

from .seqfam import SeqFamily, encode
from .setfam import SetFamily, elems_of, mask_of

Family = Union[SetFamily, SeqFamily]


class ParseError(ValueError):
    """Raised for malformed family documents."""


def to_obj(F: Family) -> dict:
    if isinstance(F, SeqFamily):
        return {"m": F.m, "n": F.n, "seqs": [list(x) for x in F.seqs()]}
    return {"n": F.n, "sets": [elems_of(s) for s in F.members]}


def dumps(F: Family) -> str:
    return json.dumps(to_obj(F))


def _int(obj: dict, key: str, where: str) -> int:
    if key not in obj:
        raise ParseError(f"{where}: missing key {key!r}")
    v = obj[key]
    if not isinstance(v, int) or isinstance(v, bool):
        raise ParseError(f"{where}: {key!r} must be an integer, got {v!r}")
    return v


def _list(obj: dict, key: str, where: str) -> list:
    v = obj.get(key)
    if not isinstance(v, list):
        raise ParseError(f"{where}: {key!r} must be a list")
    return v


def from_obj(obj, where: str = "<family>") -> Family:
    if not isinstance(obj, dict):
        raise ParseError(f"{where}: expected a JSON object")
    n = _int(obj, "n", where)
    if "m" in obj:
        m = _int(obj, "m", where)
        if m < 2 or n < 1:
            raise ParseError(f"{where}: need m >= 2 and n >= 1")
        seen = set()
        for pos, x in enumerate(_list(obj, "seqs", where)):
            if not isinstance(x, list) or len(x) != n:
                raise ParseError(f"{where}: seqs[{pos}] must be a list of length {n}")
            for v in x:
                if not isinstance(v, int) or isinstance(v, bool) or not 1 <= v <= m:
                    raise ParseError(f"{where}: seqs[{pos}]: symbol {v!r} outside [1, {m}]")
            idx = encode(m, x)
            if idx in seen:
                raise ParseError(f"{where}: duplicate sequence {x}")
            seen.add(idx)
        return SeqFamily(m, n, seen)
    if not 1 <= n <= 24:
        raise ParseError(f"{where}: n={n} outside 1..24")
    seen = set()
    for pos, s in enumerate(_list(obj, "sets", where)):
        if not isinstance(s, list):
            raise ParseError(f"{where}: sets[{pos}] must be a list")
        for e in s:
            if not isinstance(e, int) or isinstance(e, bool):
                raise ParseError(f"{where}: sets[{pos}]: element {e!r} is not an integer")
            if e > n:
                raise ParseError(f"{where}: element {e} exceeds n={n}")
            if e < 1:
                raise ParseError(f"{where}: element {e} is below 1")
        if len(set(s)) != len(s):
            raise ParseError(f"{where}: sets[{pos}] repeats an element")
        mask = mask_of(s)
        if mask in seen:
            raise ParseError(f"{where}: duplicate set {sorted(s)}")
        seen.add(mask)
    return SetFamily(n, seen)


def loads(text: str, where: str = "<family>") -> Family:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"{where}: malformed JSON at line {e.lineno} column {e.colno}: {e.msg}") from None
    return from_obj(obj, where)


def parse_family(source: str | os.PathLike) -> Family:
    """Parse a family from a path or from JSON text."""
    if isinstance(source, str) and source.lstrip().startswith("{"):
        return loads(source)
    try:
        with open(source) as fh:
            text = fh.read()
    except OSError as e:
        raise ParseError(f"{source}: {e.strerror}") from None
    return loads(text, str(source))
