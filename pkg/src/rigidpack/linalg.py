"""Exact linear algebra over a fixed prime field.

Everything downstream (rigidity rank queries, matroid partition) reduces to
row elimination over GF(PRIME).  The modulus is the Mersenne prime 2^61 - 1,
the largest prime below 2^61, so a random specialization of an m-row generic
matrix loses rank with probability at most m / PRIME (Schwartz-Zippel), far
below 2^-40 at the scales this package handles.

Rows live in two representations:

* plain lists of ints in [0, PRIME) -- the readable reference form;
* "packed" form, a single big integer holding one row entry per fixed-width
  slot.  Row operations then become one scalar multiply and one add on a
  CPython big int, which runs in C and is several times faster than looping
  over list entries.  Elimination only ever *adds* multiples of canonical
  rows (coefficients are negated mod PRIME first), so slot values stay
  nonnegative and bounded; SLOT_BITS leaves room for ~2^70 accumulated
  updates before slots could overflow into each other.

`RowBasis` is the incremental eliminator used everywhere: rows are inserted
one at a time and reduced against the rows already kept, which is exactly
the shape greedy independence testing and matroid augmentation need.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

PRIME = (1 << 61) - 1

SLOT_BITS = 192
_SLOT_BYTES = SLOT_BITS // 8
_SLOT_MASK = (1 << SLOT_BITS) - 1


def pack_row(entries: Sequence[int]) -> int:
    """Pack field entries (each < 2^SLOT_BITS) into one big integer."""
    return int.from_bytes(
        b"".join(e.to_bytes(_SLOT_BYTES, "little") for e in entries), "little"
    )


def unpack_row(packed: int, width: int) -> list[int]:
    raw = packed.to_bytes(width * _SLOT_BYTES, "little")
    return [
        int.from_bytes(raw[i * _SLOT_BYTES : (i + 1) * _SLOT_BYTES], "little")
        for i in range(width)
    ]


def slot_value(packed: int, index: int) -> int:
    return (packed >> (SLOT_BITS * index)) & _SLOT_MASK


class RowBasis:
    """Incremental row-echelon basis over GF(PRIME) with packed rows.

    Rows are inserted in arrival order; each kept row is reduced against all
    earlier kept rows, normalized to a leading 1, and appended.  The stack
    therefore satisfies: row j is zero at the pivot slot of every earlier
    row, so reducing a query row against the stack in order clears each
    pivot exactly once.

    With ``track_width`` > 0, every row carries that many extra slots, one
    per potential member id, holding the coefficients that express the kept
    row in terms of the raw rows inserted so far ([A | I] elimination).
    A query row that reduces to zero then yields its fundamental circuit by
    reading the tracking slots.
    """

    __slots__ = ("ncols", "track_width", "width", "pivots", "rows", "members",
                 "index_of", "version")

    def __init__(self, ncols: int, track_width: int = 0):
        self.ncols = ncols
        self.track_width = track_width
        self.width = ncols + track_width
        self.pivots: list[int] = []
        self.rows: list[int] = []
        self.members: list[int] = []
        self.index_of: dict[int, int] = {}
        self.version = 0

    def __len__(self) -> int:
        return len(self.rows)

    def _prepare(self, entries: Sequence[int], member: int | None) -> int:
        digits = list(entries) + [0] * self.track_width
        if member is not None:
            if not 0 <= member < self.track_width:
                raise ValueError(f"member id {member} outside tracking range")
            digits[self.ncols + member] = 1
        return pack_row(digits)

    def _reduce(self, work: int) -> int:
        for piv, row in zip(self.pivots, self.rows):
            v = ((work >> (SLOT_BITS * piv)) & _SLOT_MASK) % PRIME
            if v:
                work += (PRIME - v) * row
        return work

    def _canonical_digits(self, work: int) -> list[int]:
        return [d % PRIME for d in unpack_row(work, self.width)]

    def insert(self, entries: Sequence[int], member: int | None = None) -> bool:
        """Reduce and keep the row if independent; returns False on dependence."""
        digits = self._canonical_digits(self._reduce(self._prepare(entries, member)))
        pivot = -1
        for i in range(self.ncols):
            if digits[i]:
                pivot = i
                break
        if pivot < 0:
            return False
        inv = pow(digits[pivot], PRIME - 2, PRIME)
        row = pack_row([d * inv % PRIME for d in digits])
        if member is not None:
            self.index_of[member] = len(self.rows)
        self.members.append(-1 if member is None else member)
        self.pivots.append(pivot)
        self.rows.append(row)
        self.version += 1
        return True

    def residue(self, entries: Sequence[int]) -> list[int]:
        """Canonical reduced row (structural slots only); all-zero iff dependent."""
        work = self._reduce(self._prepare(entries, None))
        return [d % PRIME for d in unpack_row(work & ((1 << (SLOT_BITS * self.ncols)) - 1),
                                              self.ncols)]

    def circuit(self, entries: Sequence[int]) -> set[int] | None:
        """Members with nonzero coefficient in the expansion of a dependent row.

        Returns None when the row is independent of the basis.  Only valid
        with tracking enabled.
        """
        if not self.track_width:
            raise ValueError("circuit queries need track_width > 0")
        digits = self._canonical_digits(self._reduce(self._prepare(entries, None)))
        if any(digits[: self.ncols]):
            return None
        return {i - self.ncols for i in range(self.ncols, self.width) if digits[i]}

    def remove(self, member: int, row_provider) -> None:
        """Drop a member row, repairing the stack.

        Rows whose tracking coefficients do not involve the removed member
        stay, in order (after repairs such rows can sit on either side of
        the removed position); the rest are re-inserted from their raw
        entries via ``row_provider``.  If the cheap repair ever leaves a
        row dependent, the whole stack is rebuilt from raw rows, which can
        only fail if the member set itself is dependent.
        """
        if not self.track_width:
            raise ValueError("removal needs track_width > 0")
        k = self.index_of.pop(member)
        slot = SLOT_BITS * (self.ncols + member)
        kept: list[tuple[int, int, int]] = []
        redo: list[int] = []
        for j, (m, pv, row) in enumerate(zip(self.members, self.pivots, self.rows)):
            if j == k:
                continue
            if (row >> slot) & _SLOT_MASK:
                redo.append(m)
            else:
                kept.append((m, pv, row))
        survivors = [m for m, _, _ in kept] + redo
        self.pivots = [pv for _, pv, _ in kept]
        self.rows = [row for _, _, row in kept]
        self.members = [m for m, _, _ in kept]
        self.index_of = {m: i for i, m in enumerate(self.members)}
        self.version += 1
        if all(self.insert(row_provider(m), m) for m in redo):
            return
        # slow path: rebuild everything from raw rows
        self.pivots, self.rows, self.members, self.index_of = [], [], [], {}
        self.version += 1
        for m in sorted(survivors):
            if not self.insert(row_provider(m), m):
                raise ArithmeticError("member set dependent while rebuilding basis")

    def _row_pivot(self, row: int) -> int:
        for i in range(self.ncols):
            if (row >> (SLOT_BITS * i)) & _SLOT_MASK:
                return i
        raise ArithmeticError("kept row has no pivot")


@dataclass(frozen=True)
class DenseMatrix:
    """Row-major matrix of field entries (ints in [0, PRIME))."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int | None = None) -> "DenseMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        flat = []
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
            flat.extend(e % PRIME for e in r)
        return cls(len(rows), cols, tuple(flat))

    def row(self, i: int) -> list[int]:
        if not 0 <= i < self.rows:
            raise IndexError(f"row index {i} out of range")
        return list(self.entries[i * self.cols : (i + 1) * self.cols])


def rank(matrix: DenseMatrix) -> int:
    """Rank of the matrix over GF(PRIME)."""
    basis = RowBasis(matrix.cols)
    for i in range(matrix.rows):
        basis.insert(matrix.row(i))
    return len(basis)


def rank_of_rows(matrix: DenseMatrix, row_indices: Iterable[int]) -> int:
    """Rank of the submatrix formed by the selected rows (repeats allowed)."""
    basis = RowBasis(matrix.cols)
    for i in row_indices:
        basis.insert(matrix.row(i))
    return len(basis)
