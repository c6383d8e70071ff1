"""FASTQ parsing/writing and the toolkit's tabular interchange formats.

FASTQ records are the usual 4-line blocks (``@id``, bases, ``+``,
qualities) with ``\\n`` terminators.  Qualities are Phred+33 with scores
capped at Q60: every character must fall in ``'!'``..``']'`` so that a
parsed record always satisfies the in-memory invariant (scores 0..60).
Parsing streams record by record, so memory stays bounded per record
even on multi-GB files.
"""

from dataclasses import dataclass, field
from io import BytesIO
from typing import Iterator, List, Optional

import numpy as np

from .errors import (
    FormatError,
    HeaderMismatch,
    InvalidCharacter,
    MalformedRecord,
    NonNumericFeature,
    QualityOutOfRange,
    RowArity,
)
from .varfeat import N_FEATURES, VariantRecord

PHRED_OFFSET = 33
PHRED_MAX = 60

_VALID_BASE = np.zeros(256, dtype=bool)
for _b in b"ACGTN":
    _VALID_BASE[_b] = True


@dataclass
class SeqRecord:
    """One read: identifier, bases over {A,C,G,T,N}, Phred quality vector."""

    id: str
    bases: str
    quals: np.ndarray

    def __post_init__(self):
        self.quals = np.asarray(self.quals, dtype=np.int16)
        if len(self.bases) != len(self.quals):
            raise MalformedRecord(
                f"read {self.id!r}: {len(self.bases)} bases vs "
                f"{len(self.quals)} quality scores"
            )

    def __len__(self) -> int:
        return len(self.bases)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SeqRecord)
            and self.id == other.id
            and self.bases == other.bases
            and np.array_equal(self.quals, other.quals)
        )


@dataclass
class ReadSet:
    """Ordered, immutable-by-convention collection of reads."""

    records: List[SeqRecord] = field(default_factory=list)
    source_tag: str = ""

    def __post_init__(self):
        ids = set()
        for rec in self.records:
            if rec.id in ids:
                raise MalformedRecord(f"duplicate read id {rec.id!r}")
            ids.add(rec.id)

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self) -> Iterator[SeqRecord]:
        return iter(self.records)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ReadSet)
            and self.records == other.records
        )

    def total_bases(self) -> int:
        return sum(len(r) for r in self.records)


def _as_stream(stream):
    if isinstance(stream, (bytes, bytearray)):
        return BytesIO(bytes(stream))
    return stream


def iter_fastq(stream) -> Iterator[SeqRecord]:
    """Stream SeqRecords from a binary FASTQ source.

    Raises MalformedRecord / InvalidCharacter with 1-based line numbers.
    """
    fh = _as_stream(stream)
    lineno = 0
    while True:
        header = fh.readline()
        if header == b"":
            return
        lineno += 1
        header = header.rstrip(b"\n")
        if not header.startswith(b"@"):
            raise MalformedRecord("expected '@' header", line=lineno)
        block = [fh.readline() for _ in range(3)]
        if block[-1] == b"":
            raise MalformedRecord(
                "truncated record (line count not a multiple of 4)",
                line=lineno,
            )
        bases_raw, plus, quals_raw = (ln.rstrip(b"\n") for ln in block)
        if not plus.startswith(b"+"):
            raise MalformedRecord("missing '+' separator line", line=lineno + 2)
        bases_raw = bases_raw.upper()
        arr = np.frombuffer(bases_raw, dtype=np.uint8)
        if not _VALID_BASE[arr].all():
            bad = bases_raw[int(np.argmin(_VALID_BASE[arr]))]
            raise InvalidCharacter(
                f"base {chr(bad)!r} outside {{A,C,G,T,N}}", line=lineno + 1
            )
        q = np.frombuffer(quals_raw, dtype=np.uint8)
        if q.size and (int(q.min()) < PHRED_OFFSET or int(q.max()) > ord("}")):
            raise InvalidCharacter(
                "quality character outside '!'..'}'", line=lineno + 3
            )
        if q.size and int(q.max()) > PHRED_OFFSET + PHRED_MAX:
            raise InvalidCharacter(
                f"quality above the Q{PHRED_MAX} cap", line=lineno + 3
            )
        if len(bases_raw) != len(quals_raw):
            raise MalformedRecord(
                "base and quality strings differ in length", line=lineno + 3
            )
        yield SeqRecord(
            id=header[1:].decode("ascii", errors="replace"),
            bases=bases_raw.decode("ascii"),
            quals=(q.astype(np.int16) - PHRED_OFFSET),
        )
        lineno += 3


def parse_fastq(stream, source_tag: str = "") -> ReadSet:
    """Parse a FASTQ byte stream into a ReadSet (see iter_fastq)."""
    return ReadSet(records=list(iter_fastq(stream)), source_tag=source_tag)


def write_fastq(reads: ReadSet, stream) -> int:
    """Write Phred+33 FASTQ; returns the number of bytes written.

    Raises QualityOutOfRange for scores outside 0..60.
    """
    out = stream
    n = 0
    for rec in reads:
        q = rec.quals
        if q.size and (int(q.min()) < 0 or int(q.max()) > PHRED_MAX):
            raise QualityOutOfRange(
                f"read {rec.id!r}: quality outside 0..{PHRED_MAX}"
            )
        qbytes = (q.astype(np.uint8) + PHRED_OFFSET).tobytes()
        chunk = b"@%s\n%s\n+\n%s\n" % (
            rec.id.encode("ascii"),
            rec.bases.encode("ascii"),
            qbytes,
        )
        out.write(chunk)
        n += len(chunk)
    return n


def fastq_bytes(reads: ReadSet) -> bytes:
    buf = BytesIO()
    write_fastq(reads, buf)
    return buf.getvalue()


# --- variant table (TSV) ---------------------------------------------------

VARIANT_SCHEMA = "variants/1"
_VTYPES = ("SNP", "INS", "DEL", "SV")
_FIXED_COLS = ["chrom", "pos", "ref", "alt", "vtype", "label"]
_FEATURE_COLS = [f"f{i:02d}" for i in range(1, N_FEATURES + 1)]


def read_variant_table(stream) -> List[VariantRecord]:
    """Read the tab-separated variant table.

    Columns: chrom, pos, ref, alt, vtype{SNP|INS|DEL|SV}, label{0|1|?},
    f01..f63; any extra trailing columns are kept as opaque annotations.
    """
    fh = _as_stream(stream)
    header = None
    lineno = 0
    records: List[VariantRecord] = []
    expected = _FIXED_COLS + _FEATURE_COLS
    for raw in fh:
        lineno += 1
        line = raw.decode("utf-8").rstrip("\n")
        if not line or line.startswith("#"):
            continue
        cells = line.split("\t")
        if header is None:
            header = cells
            if header[: len(expected)] != expected:
                raise HeaderMismatch(
                    f"line {lineno}: header must start with "
                    f"{' '.join(expected[:6])} f01..f{N_FEATURES}"
                )
            continue
        if len(cells) != len(header):
            raise RowArityError(lineno, len(cells), len(header))
        chrom, pos, ref, alt, vtype, label = cells[:6]
        if vtype not in _VTYPES:
            raise FormatError(f"line {lineno}: unknown vtype {vtype!r}")
        if label not in ("0", "1", "?"):
            raise FormatError(f"line {lineno}: label must be 0, 1 or ?")
        feats = np.empty(N_FEATURES, dtype=np.float64)
        for i, cell in enumerate(cells[6 : 6 + N_FEATURES]):
            try:
                feats[i] = float(cell)
            except ValueError:
                raise NonNumericFeature(
                    f"line {lineno}: column f{i + 1:02d} value {cell!r}"
                ) from None
        annotations = dict(zip(header[6 + N_FEATURES :], cells[6 + N_FEATURES :]))
        records.append(
            VariantRecord(
                chrom=chrom,
                pos=int(pos),
                ref=ref,
                alt=alt,
                vtype=vtype,
                label=None if label == "?" else int(label),
                features=feats,
                annotations=annotations,
            )
        )
    if header is None:
        raise HeaderMismatch("empty file: no header row")
    return records


def RowArityError(lineno: int, got: int, want: int):
    from .errors import RowArity

    return RowArity(f"line {lineno}: {got} columns, expected {want}")


def write_variant_table(records: List[VariantRecord], stream) -> None:
    fh = stream
    fh.write(f"#schema={VARIANT_SCHEMA}\n".encode())
    fh.write(("\t".join(_FIXED_COLS + _FEATURE_COLS) + "\n").encode())
    for rec in records:
        label = "?" if rec.label is None else str(rec.label)
        feats = rec.features
        if feats is None:
            feats = np.zeros(N_FEATURES)
        cells = [rec.chrom, str(rec.pos), rec.ref, rec.alt, rec.vtype, label]
        cells += [repr(float(v)) for v in feats]
        fh.write(("\t".join(cells) + "\n").encode())


# --- two-line reference text ------------------------------------------------

def write_reference_text(name: str, sequence: str, stream) -> None:
    """Diff-friendly two-line ``>name\\nSEQ`` form, no wrapping."""
    stream.write(f">{name}\n{sequence}\n".encode())


def read_reference_text(stream):
    fh = _as_stream(stream)
    header = fh.readline().rstrip(b"\n")
    if not header.startswith(b">"):
        raise FormatError("reference text must start with '>'")
    seq = fh.readline().rstrip(b"\n").decode("ascii")
    return header[1:].decode("ascii"), seq
