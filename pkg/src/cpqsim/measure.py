"""Queue state as a finite point measure on [0, 1].

The customers present at any instant are a multiset of atoms, one per
customer, located at the customer's priority level and tagged with its
arrival sequence number.  The same state answers counting queries (how many
atoms lie in an interval, or strictly above a level) and scheduling queries
(which atom is served next).
"""

from __future__ import annotations

from array import array
from bisect import bisect_left, bisect_right
from dataclasses import dataclass


@dataclass(frozen=True)
class Interval:
    """Subinterval of [0, 1] with explicit endpoint openness."""

    lo: float
    hi: float
    lo_open: bool = False
    hi_open: bool = False

    def __post_init__(self):
        if not (0.0 <= self.lo <= self.hi <= 1.0):
            raise ValueError(f"malformed interval: lo={self.lo!r} hi={self.hi!r}")

    @classmethod
    def closed(cls, lo: float, hi: float) -> "Interval":
        return cls(lo, hi)

    @classmethod
    def open(cls, lo: float, hi: float) -> "Interval":
        return cls(lo, hi, lo_open=True, hi_open=True)

    @classmethod
    def left_open(cls, lo: float, hi: float) -> "Interval":
        """(lo, hi]"""
        return cls(lo, hi, lo_open=True)

    @classmethod
    def right_open(cls, lo: float, hi: float) -> "Interval":
        """[lo, hi)"""
        return cls(lo, hi, hi_open=True)


class PointMeasure:
    """Multiset of (priority, sequence-number) atoms with counting queries.

    Atoms are kept sorted by (priority, sequence number) in parallel arrays:
    binary search serves the counting queries, and inserts are memmove-backed,
    which comfortably beats pointer structures at the few thousand atoms a
    run ever holds.  The scheduling maximum is the highest priority present,
    with ties resolved to the earliest arrival.
    """

    __slots__ = ("_atoms", "_prios")

    def __init__(self, atoms=()):
        self._atoms: list[tuple[float, int]] = []
        self._prios = array("d")
        for priority, seq in atoms:
            self.insert(priority, seq)

    def __len__(self) -> int:
        return len(self._atoms)

    def __iter__(self):
        return iter(self._atoms)

    def __repr__(self) -> str:
        return f"PointMeasure({self._atoms!r})"

    def insert(self, priority: float, seq: int) -> None:
        """Add one atom; duplicate priorities are kept as separate atoms."""
        if not 0.0 <= priority <= 1.0:
            raise ValueError(f"priority outside [0, 1]: {priority!r}")
        atom = (priority, seq)
        i = bisect_right(self._atoms, atom)
        self._atoms.insert(i, atom)
        self._prios.insert(i, priority)

    def _max_index(self) -> int:
        # First atom of the top-priority block: equal priorities resolve to
        # the earliest arrival.
        return bisect_left(self._prios, self._prios[-1])

    def peek_max(self) -> tuple[float, int] | None:
        """The atom remove_max would remove, or None when empty."""
        if not self._atoms:
            return None
        return self._atoms[self._max_index()]

    def remove_max(self) -> tuple[float, int]:
        if not self._atoms:
            raise IndexError("remove_max from an empty measure")
        i = self._max_index()
        self._prios.pop(i)
        return self._atoms.pop(i)

    def cdf_count(self, p: float) -> int:
        """Number of atoms with priority <= p."""
        return bisect_right(self._prios, p)

    def ccdf_count(self, p: float) -> int:
        """Number of atoms with priority strictly greater than p."""
        return len(self._prios) - bisect_right(self._prios, p)

    def count_below(self, p: float) -> int:
        """Number of atoms with priority strictly less than p."""
        return bisect_left(self._prios, p)

    def interval_count(self, interval: Interval) -> int:
        """Number of atoms in the interval, honoring endpoint openness."""
        below = self.cdf_count(interval.lo) if interval.lo_open else self.count_below(interval.lo)
        upto = self.count_below(interval.hi) if interval.hi_open else self.cdf_count(interval.hi)
        return max(0, upto - below)

    def priorities(self) -> array:
        """Sorted (ascending) copy of the atom priorities."""
        return self._prios[:]

    def atoms(self) -> list[tuple[float, int]]:
        return list(self._atoms)
