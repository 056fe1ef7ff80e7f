"""Text grammar for partitions and bipartitions.

    PARTITION   := "-" | int ("," int)*      (weakly decreasing, positive)
    BIPARTITION := PARTITION "|" PARTITION
"""
from __future__ import annotations

from .combinatorics import Bipartition, Partition


class ParseError(ValueError):
    def __init__(self, message: str, position: int | None = None):
        super().__init__(message if position is None else f"{message} (at position {position})")
        self.position = position


class MonotonicityError(ParseError):
    pass


def _parse_partition_at(text: str, offset: int) -> Partition:
    body = text.strip()
    lead = offset + (len(text) - len(text.lstrip()))
    if body == "-" or body == "":
        if body == "":
            raise ParseError("empty partition; write '-' for the empty partition", lead)
        return Partition()
    parts = []
    pos = lead
    for k, chunk in enumerate(body.split(",")):
        token = chunk.strip()
        if not token.isdigit():
            raise ParseError(f"expected a positive integer, got {token!r}", pos)
        value = int(token)
        if value == 0:
            raise ParseError("parts must be positive", pos)
        if parts and value > parts[-1]:
            raise MonotonicityError(f"part {k + 1} ({value}) exceeds the previous part ({parts[-1]})", pos)
        parts.append(value)
        pos += len(chunk) + 1
    return Partition(parts)


def parse_partition(text: str) -> Partition:
    return _parse_partition_at(text, 0)


def parse_bipartition(text: str) -> Bipartition:
    if text.count("|") != 1:
        raise ParseError(f"a bipartition needs exactly one '|': {text!r}", text.find("|") if "|" in text else len(text))
    left, right = text.split("|")
    return Bipartition(_parse_partition_at(left, 0), _parse_partition_at(right, len(left) + 1))
