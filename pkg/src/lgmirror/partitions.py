"""Strict partitions in the m x m box and the special families entering W_t.

A strict partition with parts <= m corresponds to the subset
I = {m+1-part : part in parts} of {1,...,m}; Poincare duality is subset
complementation.  The staircase rho_l, the maximal l-row partition mu_l,
and their J-modified variants index the quadratic numerators and
denominators of the superpotential.  Modifications that fail to produce a
strict partition are represented by None (the sum they appear in simply
skips them).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional


@dataclass(frozen=True, order=True)
class StrictPartition:
    """Strictly decreasing parts, each between 1 and m."""

    parts: tuple[int, ...]
    m: int

    def __post_init__(self) -> None:
        if any(p < 1 or p > self.m for p in self.parts):
            raise ValueError(f"parts {self.parts} outside the {self.m} x {self.m} box")
        if any(a <= b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"parts {self.parts} not strictly decreasing")

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def render(self) -> str:
        """Comma-joined parts in brackets, e.g. "[3,2,1]"; "[]" for empty."""
        return "[" + ",".join(str(p) for p in self.parts) + "]"

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def partition(parts: Iterable[int], m: int) -> StrictPartition:
    return StrictPartition(tuple(parts), m)


def empty(m: int) -> StrictPartition:
    return StrictPartition((), m)


def from_subset(subset: Iterable[int], m: int) -> StrictPartition:
    """Subset {i_1 < ... < i_k} of {1..m} -> (m+1-i_1, ..., m+1-i_k)."""
    idx = sorted(set(subset))
    if idx and (idx[0] < 1 or idx[-1] > m):
        raise ValueError(f"subset {idx} not contained in 1..{m}")
    return StrictPartition(tuple(m + 1 - i for i in idx), m)


def to_subset(lam: StrictPartition) -> tuple[int, ...]:
    """Inverse of `from_subset`, returned sorted ascending."""
    return tuple(sorted(lam.m + 1 - p for p in lam.parts))


def pd(lam: StrictPartition) -> StrictPartition:
    """Poincare dual: complement the part set inside {1..m}."""
    return from_subset(set(range(1, lam.m + 1)) - set(to_subset(lam)), lam.m)


def subset_sum(subset: Iterable[int]) -> int:
    """s(J) = sum of the elements of J."""
    return sum(subset)


def all_subsets(m: int) -> list[tuple[int, ...]]:
    """All subsets of {1..m} sorted by size then lexicographically.

    This fixed order indexes the rows/columns of every 2^m-dimensional
    matrix in the package.
    """
    out: list[tuple[int, ...]] = []
    for k in range(m + 1):
        out.extend(combinations(range(1, m + 1), k))
    return out


def all_strict_partitions(m: int) -> list[StrictPartition]:
    """All 2^m strict partitions in the canonical subset order."""
    return [from_subset(s, m) for s in all_subsets(m)]


# -- the rho / mu families ---------------------------------------------------


def rho(l: int, m: int) -> StrictPartition:
    """Staircase (l, l-1, ..., 1)."""
    if not 0 <= l <= m:
        raise ValueError(f"rho_{l} not defined in box size {m}")
    return StrictPartition(tuple(range(l, 0, -1)), m)


def mu(l: int, m: int) -> StrictPartition:
    """Maximal l-row partition (m, m-1, ..., m+1-l)."""
    if not 0 <= l <= m:
        raise ValueError(f"mu_{l} not defined in box size {m}")
    return StrictPartition(tuple(range(m, m - l, -1)), m)


def rho_plus(l: int, m: int) -> StrictPartition:
    """rho_l with one box added to the first line: (l+1, l-1, ..., 1)."""
    if not 0 <= l < m:
        raise ValueError(f"rho_{l},+ requires 0 <= l < m")
    return StrictPartition((l + 1,) + tuple(range(l - 1, 0, -1)), m)


def _remove_rows(parts: tuple[int, ...], rows: Iterable[int]) -> tuple[int, ...]:
    drop = set(rows)
    return tuple(p for j, p in enumerate(parts, start=1) if j not in drop)


def rho_removed(l: int, subset: Iterable[int], m: int) -> StrictPartition:
    """rho_l with the j-th line removed for every j in the subset."""
    return StrictPartition(_remove_rows(rho(l, m).parts, subset), m)


def rho_plus_removed(l: int, subset: Iterable[int], m: int) -> StrictPartition:
    """rho_{l,+} with the j-th line removed for every j in the subset."""
    return StrictPartition(_remove_rows(rho_plus(l, m).parts, subset), m)


def _append_rows(base: tuple[int, ...], rows: list[int], m: int) -> Optional[StrictPartition]:
    parts = base + tuple(rows)
    if any(a <= b for a, b in zip(parts, parts[1:])):
        return None
    return StrictPartition(parts, m)


def mu_added(l: int, subset: Iterable[int], m: int) -> Optional[StrictPartition]:
    """mu_l with a row of l+1-j boxes appended for each j (None if not strict)."""
    rows = [l + 1 - j for j in sorted(subset)]
    return _append_rows(mu(l, m).parts, rows, m)


def mu_plus_added(l: int, subset: Iterable[int], m: int) -> Optional[StrictPartition]:
    """mu_l with a row of l+1-j+delta_{j,1} boxes appended for each j."""
    rows = [l + 1 - j + (1 if j == 1 else 0) for j in sorted(subset)]
    return _append_rows(mu(l, m).parts, rows, m)


def removed_boxes(l: int, subset: Iterable[int]) -> int:
    """Number of boxes deleted from rho_l by removing the rows in the subset."""
    return sum(l + 1 - j for j in subset)
