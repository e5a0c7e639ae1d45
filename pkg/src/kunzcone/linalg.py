"""Fraction-free linear algebra over the rationals via integer rows.

Everything here works on integer vectors and stays in integers: rows are
cleared against each other by cross-multiplication and re-normalized by
their gcd, so rank and rowspace-membership queries are exact.  The sizes
involved (moduli up to a few dozen) make this comfortably fast without
any external dependency.
"""

from __future__ import annotations

from math import gcd


def _normalize(row: list[int]) -> list[int]:
    """Divide by the gcd and make the leading nonzero entry positive."""
    g = 0
    for v in row:
        g = gcd(g, v)
    if g == 0:
        return row
    row = [v // g for v in row]
    for v in row:
        if v != 0:
            if v < 0:
                row = [-u for u in row]
            break
    return row


class IntegerEchelon:
    """Incremental row-echelon basis of an integer row space.

    Rows are kept normalized (gcd 1, positive pivot) and indexed by pivot
    column, so adding a row and testing membership are both O(rank * n).
    """

    def __init__(self, width: int):
        if width < 1:
            raise ValueError("width must be positive")
        self.width = width
        # pivot column -> normalized row with that pivot
        self._rows: dict[int, list[int]] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _reduce(self, row) -> list[int]:
        """Clear ``row`` against the stored basis; returns the residue."""
        row = list(row)
        if len(row) != self.width:
            raise ValueError(f"expected width {self.width}, got {len(row)}")
        for col in sorted(self._rows):
            if row[col] == 0:
                continue
            base = self._rows[col]
            a, b = base[col], row[col]
            row = [a * r - b * s for r, s in zip(row, base)]
        return _normalize(row)

    def add(self, row) -> bool:
        """Insert a row; True if it enlarged the span."""
        residue = self._reduce(row)
        for col, v in enumerate(residue):
            if v != 0:
                self._rows[col] = residue
                return True
        return False

    def contains(self, row) -> bool:
        """Whether ``row`` lies in the rational span of the inserted rows."""
        return all(v == 0 for v in self._reduce(row))


def integer_rank(rows, width: int) -> int:
    """Rank over Q of a collection of integer rows of the given width."""
    ech = IntegerEchelon(width)
    for row in rows:
        ech.add(row)
    return ech.rank
