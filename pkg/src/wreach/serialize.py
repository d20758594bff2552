"""Binary persistence for label indexes.

Fixed little-endian layout so files move between platforms:

    magic "WKRI" | version u16 | variant u8 | |V| u64
    hop count u64 | hop vertex ids u32...
    cover bitmap, ceil(|V|/8) bytes (GWKRI/LWKRI only)
    per vertex: entry count u32, then (hop_rank u32, lo u32, hi u32, dist u32)
    LWKRI only: adjacency offsets (|V|+1) u64, then (neighbor u32, weight u32)
    crc32 u32 over everything above

The EMPTY interval of self-entries is stored as lo = hi = 0xFFFFFFFF; the
numeric pair (0, 0) stays available for genuine weight-0 edges.
"""

from __future__ import annotations

import struct
import zlib
from typing import BinaryIO

from .cover import CoverSet
from .labeling import LabelIndex, Variant

MAGIC = b"WKRI"
FORMAT_VERSION = 1
_EMPTY_SENTINEL = 0xFFFFFFFF
_MAX_WEIGHT = _EMPTY_SENTINEL - 1


class IndexFormatError(ValueError):
    """Unreadable index file: bad magic/version, truncation, or checksum failure."""


def _header(index) -> bytearray:
    out = bytearray()
    out += MAGIC
    out += struct.pack("<HBQ", FORMAT_VERSION, index.variant.value, index.vertex_count)
    out += struct.pack("<Q", len(index.hops))
    out += struct.pack(f"<{len(index.hops)}I", *index.hops)
    if index.variant is not Variant.WKRI:
        if index.cover is None:
            raise ValueError("cover-based index is missing its cover set")
        bitmap = bytearray((index.vertex_count + 7) // 8)
        for v, member in enumerate(index.cover.membership):
            if member:
                bitmap[v >> 3] |= 1 << (v & 7)
        out += bitmap
    return out


def _adjacency_block(adjacency) -> bytes:
    offsets = [0]
    flat: list[int] = []
    for lst in adjacency:
        for y, w in lst:
            if w > _MAX_WEIGHT:
                raise ValueError(f"edge weight {w} does not fit the on-disk format")
            flat.append(y)
            flat.append(w)
        offsets.append(len(flat) // 2)
    block = struct.pack(f"<{len(offsets)}Q", *offsets)
    if flat:
        block += struct.pack(f"<{len(flat)}I", *flat)
    return block


def serialize(index) -> bytes:
    """Encode a label index (packed-list or array-backed) to bytes."""
    if hasattr(index, "offsets"):
        return _serialize_arrays(index)

    out = _header(index)
    for entries in index.entries:
        out += struct.pack("<I", len(entries))
        for r, lo, hi, d in entries:
            if d == 0:
                lo = hi = _EMPTY_SENTINEL
            elif not 0 <= lo <= hi <= _MAX_WEIGHT:
                raise ValueError(f"interval [{lo}, {hi}] does not fit the on-disk format")
            out += struct.pack("<4I", r, lo, hi, d)

    if index.variant is Variant.LWKRI:
        if index.adjacency is None:
            raise ValueError("LWKRI index is missing its embedded adjacency")
        out += _adjacency_block(index.adjacency)

    out += struct.pack("<I", zlib.crc32(bytes(out)) & 0xFFFFFFFF)
    return bytes(out)


def _serialize_arrays(index) -> bytes:
    """Byte-identical encoding straight from flat arrays (large indexes)."""
    import numpy as np

    out = _header(index)
    n = index.vertex_count
    counts = np.diff(index.offsets).astype(np.uint32)
    total = int(index.offsets[-1])
    body = np.empty(n + 4 * total, dtype=np.uint32)
    # Interleave per-vertex counts with their entry quadruples.
    pos = np.asarray(index.offsets[:-1]) * 4 + np.arange(n)
    body[pos] = counts
    mask = np.ones(n + 4 * total, dtype=bool)
    mask[pos] = False
    quads = np.empty((total, 4), dtype=np.uint32)
    quads[:, 0] = index.ent_rank
    quads[:, 1] = index.ent_lo
    quads[:, 2] = index.ent_hi
    quads[:, 3] = index.ent_k
    selfs = index.ent_k == 0
    quads[selfs, 1] = _EMPTY_SENTINEL
    quads[selfs, 2] = _EMPTY_SENTINEL
    body[mask] = quads.reshape(-1)
    out += body.astype("<u4").tobytes()

    if index.variant is Variant.LWKRI:
        if index.csr is None:
            raise ValueError("LWKRI index is missing its embedded adjacency")
        adj_off, adj_v, adj_w = index.csr
        out += np.asarray(adj_off).astype("<u8").tobytes()
        pairs = np.empty((len(adj_v), 2), dtype=np.uint32)
        pairs[:, 0] = adj_v
        pairs[:, 1] = adj_w
        out += pairs.astype("<u4").reshape(-1).tobytes()

    out += struct.pack("<I", zlib.crc32(bytes(out)) & 0xFFFFFFFF)
    return bytes(out)


class _Reader:
    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def take(self, fmt: str):
        size = struct.calcsize(fmt)
        if self.pos + size > len(self.data):
            raise IndexFormatError("truncated index file")
        vals = struct.unpack_from(fmt, self.data, self.pos)
        self.pos += size
        return vals

    def take_bytes(self, size: int) -> bytes:
        if self.pos + size > len(self.data):
            raise IndexFormatError("truncated index file")
        chunk = self.data[self.pos : self.pos + size]
        self.pos += size
        return chunk


def deserialize(data: bytes) -> LabelIndex:
    if len(data) < 4 + struct.calcsize("<I"):
        raise IndexFormatError("truncated index file")
    body, (stored_crc,) = data[:-4], struct.unpack("<I", data[-4:])
    if zlib.crc32(body) & 0xFFFFFFFF != stored_crc:
        raise IndexFormatError("checksum mismatch: index file is corrupted")

    r = _Reader(body)
    if r.take_bytes(4) != MAGIC:
        raise IndexFormatError("not an index file (bad magic)")
    version, variant_code, n = r.take("<HBQ")
    if version != FORMAT_VERSION:
        raise IndexFormatError(f"unsupported format version {version}")
    try:
        variant = Variant(variant_code)
    except ValueError:
        raise IndexFormatError(f"unknown index variant code {variant_code}") from None

    (hop_count,) = r.take("<Q")
    hops = r.take(f"<{hop_count}I") if hop_count else ()
    rank = [-1] * n
    for i, v in enumerate(hops):
        if v >= n:
            raise IndexFormatError(f"hop vertex {v} out of range")
        rank[v] = i

    cover = None
    if variant is not Variant.WKRI:
        bitmap = r.take_bytes((n + 7) // 8)
        membership = tuple(bool(bitmap[v >> 3] & (1 << (v & 7))) for v in range(n))
        cover = CoverSet(tuple(hops), membership)
        if sorted(hops) != sorted(v for v in range(n) if membership[v]):
            raise IndexFormatError("cover bitmap disagrees with the hop list")

    entries: list[list[tuple[int, int, int, int]]] = []
    for _u in range(n):
        (count,) = r.take("<I")
        lst = []
        for _ in range(count):
            hr, lo, hi, d = r.take("<4I")
            if d == 0:
                if lo != _EMPTY_SENTINEL:
                    raise IndexFormatError("zero-length entry without the EMPTY marker")
                lo = hi = 0
            lst.append((hr, lo, hi, d))
        entries.append(lst)

    adjacency = None
    if variant is Variant.LWKRI:
        offsets = r.take(f"<{n + 1}Q")
        pair_count = offsets[-1]
        flat = r.take(f"<{2 * pair_count}I") if pair_count else ()
        adjacency = [
            [(flat[2 * i], flat[2 * i + 1]) for i in range(offsets[u], offsets[u + 1])]
            for u in range(n)
        ]

    if r.pos != len(body):
        raise IndexFormatError("trailing bytes after index payload")

    return LabelIndex(
        variant=variant,
        vertex_count=n,
        hops=tuple(hops),
        rank=tuple(rank),
        entries=entries,
        cover=cover,
        adjacency=adjacency,
    )


def write_index(index: LabelIndex, sink: BinaryIO) -> int:
    blob = serialize(index)
    sink.write(blob)
    return len(blob)


def read_index(source: BinaryIO) -> LabelIndex:
    return deserialize(source.read())
