"""Serialization of truth tables and address-then-lookup evaluation against storage.

Text documents::

    mvlf 1
    radix 3 arity 2
    a b c
    c a b a a c c c b

Binary layout (little-endian)::

    b'ATLF' | version u8 | radix u32 | arity u32 | symbol-block length u32
    | symbols, each followed by NUL | r^n payload bytes, one value-index each
"""

from __future__ import annotations

import io
import logging
import os
import struct
from collections.abc import Sequence
from enum import StrEnum
from pathlib import Path
from typing import BinaryIO, Self

from returns.pipeline import is_successful
from returns.result import Failure, Result, Success, safe

from mvlogic.composer import check_budget
from mvlogic.errors import (
    ArityMismatchError,
    FormatError,
    LengthMismatchError,
    MvLogicError,
    ParseError,
    TableIOError,
    TruncatedPayloadError,
    UnsupportedRadixError,
)
from mvlogic.mvcore import Alphabet, ArgTuple, TruthTable, address


logger = logging.getLogger('mvlogic.tablestore')

TEXT_MAGIC = 'mvlf 1'
MAGIC = b'ATLF'
VERSION = 1
HEADER = struct.Struct('<4sBIII')
MAX_BINARY_RADIX = 255


class VectorOrder(StrEnum):
    TABLE = 'table'  # ascending addresses
    PAPER = 'paper'  # descending addresses, as the bracket notation prints them


class TableFormat(StrEnum):
    TEXT = 'text'
    BINARY = 'binary'
    VECTOR = 'vector'


# Text


def emit_text(f: TruthTable) -> str:
    return '\n'.join([
        TEXT_MAGIC,
        f'radix {f.radix} arity {f.arity}',
        ' '.join(f.alphabet.symbols),
        ' '.join(f.symbols()),
        '',
    ])


def parse_text(doc: str) -> TruthTable:
    lines = doc.splitlines()
    if not lines or lines[0].strip() != TEXT_MAGIC:
        raise ParseError(1, f'expected {TEXT_MAGIC!r}')

    header = lines[1].split() if len(lines) > 1 else []
    if len(header) != 4 or header[0] != 'radix' or header[2] != 'arity':
        raise ParseError(2, "expected 'radix <r> arity <n>'")
    try:
        radix, arity = int(header[1]), int(header[3])
    except ValueError:
        raise ParseError(2, 'radix and arity must be integers') from None
    if arity < 0:
        raise ParseError(2, 'arity must be nonnegative')

    symbols = lines[2].split() if len(lines) > 2 else []
    if len(symbols) != radix:
        raise ParseError(3, f'declared radix {radix} but {len(symbols)} symbols are listed')
    try:
        alphabet = Alphabet(symbols=tuple(symbols))
    except MvLogicError as e:
        raise ParseError(3, str(e)) from e

    tokens = ' '.join(lines[3:]).split()
    expected = check_budget(radix, arity)
    if len(tokens) != expected:
        raise LengthMismatchError(expected, len(tokens))
    return TruthTable(alphabet=alphabet, arity=arity, values=alphabet.encode(tokens))


# Vector lines


def emit_vector_line(f: TruthTable, order: VectorOrder = VectorOrder.TABLE) -> str:
    symbols = f.symbols()
    if order is VectorOrder.PAPER:
        symbols.reverse()
    return '[' + ' '.join(symbols) + ']'


def _arity_for_length(length: int, r: int) -> int:
    n, size = 0, 1
    while size < length:
        size *= r
        n += 1
    if size != length:
        raise LengthMismatchError(size, length)
    return n


def parse_vector_line(
    text: str, alphabet: Alphabet, order: VectorOrder = VectorOrder.TABLE
) -> TruthTable:
    body = text.strip()
    if not (body.startswith('[') and body.endswith(']')):
        raise ParseError(1, 'a vector line is enclosed in brackets')
    tokens = body[1:-1].split()
    if order is VectorOrder.PAPER:
        tokens.reverse()
    arity = _arity_for_length(len(tokens), alphabet.radix)
    return TruthTable(alphabet=alphabet, arity=arity, values=alphabet.encode(tokens))


# Binary


def _symbol_block(alphabet: Alphabet) -> bytes:
    return b''.join(s.encode('utf-8') + b'\0' for s in alphabet.symbols)


def write_binary(f: TruthTable, sink: BinaryIO) -> int:
    if f.radix > MAX_BINARY_RADIX:
        raise UnsupportedRadixError(f'radix {f.radix} does not fit one byte per value')
    block = _symbol_block(f.alphabet)
    data = HEADER.pack(MAGIC, VERSION, f.radix, f.arity, len(block)) + block + bytes(f.values)
    try:
        sink.write(data)
    except OSError as e:
        raise TableIOError(f'cannot write table: {e}') from e
    return len(data)


def dump_binary(f: TruthTable) -> bytes:
    buffer = io.BytesIO()
    write_binary(f, buffer)
    return buffer.getvalue()


def _parse_header(head: bytes) -> tuple[int, int, int]:
    if len(head) < HEADER.size:
        raise FormatError(f'header is {len(head)} bytes, expected {HEADER.size}')
    magic, version, radix, arity, block_length = HEADER.unpack(head[: HEADER.size])
    if magic != MAGIC:
        raise FormatError(f'bad magic {magic!r}')
    if version != VERSION:
        raise FormatError(f'unsupported version {version}')
    return radix, arity, block_length


def _parse_symbols(block: bytes, radix: int) -> Alphabet:
    if not block.endswith(b'\0'):
        raise FormatError('symbol block is not NUL-terminated')
    try:
        symbols = tuple(s.decode('utf-8') for s in block[:-1].split(b'\0'))
    except UnicodeDecodeError as e:
        raise FormatError(f'symbol block is not UTF-8: {e}') from e
    if len(symbols) != radix:
        raise FormatError(f'declared radix {radix} but {len(symbols)} symbols are stored')
    try:
        return Alphabet(symbols=symbols)
    except MvLogicError as e:
        raise FormatError(str(e)) from e


def read_binary(source: BinaryIO) -> TruthTable:
    try:
        radix, arity, block_length = _parse_header(source.read(HEADER.size))
        block = source.read(block_length)
        if len(block) != block_length:
            raise FormatError('symbol block is truncated')
        alphabet = _parse_symbols(block, radix)
        size = check_budget(radix, arity)
        payload = source.read(size)
    except OSError as e:
        raise TableIOError(f'cannot read table: {e}') from e
    if len(payload) != size:
        raise TruncatedPayloadError(f'payload has {len(payload)} of {size} bytes')
    if any(v >= radix for v in payload):
        raise FormatError('payload holds a value-index outside the alphabet')
    return TruthTable(alphabet=alphabet, arity=arity, values=tuple(payload))


def load_binary(data: bytes) -> TruthTable:
    return read_binary(io.BytesIO(data))


class StoredTable:
    """A binary table on disk, evaluated one payload byte at a time.

    Reads are positioned (pread), so one open handle serves concurrent readers.
    """

    def __init__(self, path: Path, fd: int, alphabet: Alphabet, arity: int, payload_offset: int):
        self.path = path
        self.alphabet = alphabet
        self.arity = arity
        self.payload_offset = payload_offset
        self._fd = fd

    @classmethod
    def open(cls, path: str | os.PathLike[str]) -> StoredTable:
        path = Path(path)
        try:
            fd = os.open(path, os.O_RDONLY)
        except OSError as e:
            raise TableIOError(f'cannot open {path}: {e}') from e
        try:
            radix, arity, block_length = _parse_header(os.pread(fd, HEADER.size, 0))
            block = os.pread(fd, block_length, HEADER.size)
            if len(block) != block_length:
                raise FormatError('symbol block is truncated')
            alphabet = _parse_symbols(block, radix)
        except BaseException:
            os.close(fd)
            raise
        logger.debug(f'Opened {path}: radix {radix}, arity {arity}')
        return cls(path, fd, alphabet, arity, HEADER.size + block_length)

    @property
    def radix(self) -> int:
        return self.alphabet.radix

    @property
    def size(self) -> int:
        return self.radix**self.arity

    def read_value(self, k: int) -> int:
        byte = os.pread(self._fd, 1, self.payload_offset + k)
        if not byte:
            raise TruncatedPayloadError(f'{self.path} has no payload byte at address {k}')
        if byte[0] >= self.radix:
            raise FormatError(f'{self.path} holds value-index {byte[0]} at address {k}')
        return byte[0]

    def evaluate(self, t: ArgTuple) -> int:
        if len(t) != self.arity:
            raise ArityMismatchError(self.arity, len(t))
        return self.read_value(address(t, self.radix))

    def verify(self) -> None:
        """Check the file length and every payload byte."""
        check_budget(self.radix, self.arity)
        length = os.fstat(self._fd).st_size
        expected = self.payload_offset + self.size
        if length < expected:
            raise TruncatedPayloadError(f'{self.path} is {length} bytes, expected {expected}')
        if length > expected:
            raise FormatError(f'{self.path} has {length - expected} trailing bytes')
        payload = os.pread(self._fd, self.size, self.payload_offset)
        if any(v >= self.radix for v in payload):
            raise FormatError('payload holds a value-index outside the alphabet')

    def load(self) -> TruthTable:
        self.verify()
        payload = os.pread(self._fd, self.size, self.payload_offset)
        return TruthTable(alphabet=self.alphabet, arity=self.arity, values=tuple(payload))

    def close(self) -> None:
        if self._fd >= 0:
            os.close(self._fd)
            self._fd = -1

    def __enter__(self) -> Self:
        return self

    def __exit__(self, *exc_info) -> None:
        self.close()


def stored_evaluate(s: StoredTable, t: ArgTuple) -> int:
    return s.evaluate(t)


# Files


def detect_format(data: bytes) -> TableFormat:
    if data.startswith(MAGIC):
        return TableFormat.BINARY
    head = data.lstrip()
    if head.startswith(b'mvlf'):
        return TableFormat.TEXT
    if head.startswith(b'['):
        return TableFormat.VECTOR
    raise FormatError('not a text, binary or vector-line table')


def load_table(
    path: str | os.PathLike[str],
    alphabet: Alphabet | None = None,
    order: VectorOrder = VectorOrder.TABLE,
) -> TruthTable:
    """Read a table in any supported format; bare vector lines need an alphabet."""
    try:
        data = Path(path).read_bytes()
    except OSError as e:
        raise TableIOError(f'cannot read {path}: {e}') from e
    fmt = detect_format(data)
    logger.debug(f'Loading {path} as {fmt}')
    if fmt is TableFormat.BINARY:
        return load_binary(data)
    try:
        text = data.decode('utf-8')
    except UnicodeDecodeError as e:
        raise FormatError(f'{path} is not UTF-8 text') from e
    if fmt is TableFormat.TEXT:
        return parse_text(text)
    if alphabet is None:
        raise FormatError(f'{path} is a bare vector line; an alphabet must be supplied')
    return parse_vector_line(text, alphabet, order)


@safe(exceptions=(MvLogicError, OSError))
def load_table_safe(
    path: str | os.PathLike[str],
    alphabet: Alphabet | None = None,
    order: VectorOrder = VectorOrder.TABLE,
) -> TruthTable:
    return load_table(path, alphabet, order)


def load_tables_safe(paths: Sequence[str | os.PathLike[str]]) -> Result[list[TruthTable], Exception]:
    tables: list[TruthTable] = []
    for path in paths:
        result = load_table_safe(path)
        if not is_successful(result):
            return Failure(result.failure())
        tables.append(result.unwrap())
    return Success(tables)


def encode_table(
    f: TruthTable, fmt: TableFormat, order: VectorOrder = VectorOrder.TABLE
) -> bytes:
    match fmt:
        case TableFormat.TEXT:
            return emit_text(f).encode('utf-8')
        case TableFormat.BINARY:
            return dump_binary(f)
        case TableFormat.VECTOR:
            return (emit_vector_line(f, order) + '\n').encode('utf-8')


def save_table(
    f: TruthTable,
    path: str | os.PathLike[str],
    fmt: TableFormat = TableFormat.TEXT,
    order: VectorOrder = VectorOrder.TABLE,
) -> int:
    data = encode_table(f, fmt, order)
    try:
        Path(path).write_bytes(data)
    except OSError as e:
        raise TableIOError(f'cannot write {path}: {e}') from e
    return len(data)
