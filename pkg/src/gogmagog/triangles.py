"""Value types for the object families and their defining inequalities.

Eight families live here: alternating sign matrices, permutations, monotone
triangles, magog triangles, boolean triangles, nests of non-intersecting
lattice paths, plane partitions, and fundamental domains of totally symmetric
self-complementary plane partitions (TSSCPP).

Conventions, fixed once for the whole package:

* Triangular arrays are stored dense and 0-based: ``rows[r]`` is the
  (r+1)-st row from the top and holds ``r + 1`` entries left to right.
* Monotone and magog triangles of order ``n`` have ``n`` rows and bottom row
  ``1, 2, ..., n``.  Entry ``rows[r][c]`` sits between ``rows[r+1][c]``
  (below-left) and ``rows[r+1][c+1]`` (below-right).
* Boolean triangles of order ``n`` have ``n - 1`` rows of 0/1 entries.
  Diagonal ``q`` (``q = 1 .. n-1``) is the northwest-to-southeast line
  ``rows[r][r - n + q + 1]`` for ``r = n-1-q .. n-2``; diagonal ``n - 1`` is
  the rightmost one.  Diagonal ``q`` read top to bottom is exactly lattice
  path ``q`` of the corresponding nest, with 1 = vertical step and
  0 = diagonal step.
* Plane partitions store the full, zero-completed square array.

All types are frozen dataclasses; construction validates every defining
inequality and reports the first violation in row-major scan order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

__all__ = [
    "ValidationError",
    "ShapeError",
    "EntryError",
    "BottomRowError",
    "RowStrictError",
    "InterlaceError",
    "PartialSumError",
    "RowSumError",
    "ColumnSumError",
    "AlternationError",
    "MonotonicityError",
    "NotTsscpp",
    "InconsistentDomain",
    "IntersectionError",
    "MonotoneTriangle",
    "MagogTriangle",
    "BooleanTriangle",
    "NilpNest",
    "Asm",
    "Permutation",
    "PlanePartition",
    "FundamentalDomain",
    "SymmetryReport",
    "validate_monotone",
    "validate_magog",
    "validate_boolean",
    "validate_nilp",
    "validate_asm",
    "validate_tsscpp",
    "fundamental_domain",
    "expand_fundamental",
    "is_permutation_matrix",
    "to_json_dict",
    "from_json_dict",
    "to_json",
    "from_json",
]


class ValidationError(ValueError):
    """A raw array violates a defining condition.

    ``row``/``col`` give the 1-based dense position of the first violation in
    row-major scan order, when that makes sense for the condition.
    """

    def __init__(self, message, *, row=None, col=None):
        super().__init__(message)
        self.row = row
        self.col = col


class ShapeError(ValidationError):
    pass


class EntryError(ValidationError):
    pass


class BottomRowError(ValidationError):
    pass


class RowStrictError(ValidationError):
    pass


class InterlaceError(ValidationError):
    pass


class PartialSumError(ValidationError):
    """Violated diagonal partial-sum inequality.

    ``j`` indexes the adjacent diagonal pair (left diagonal ``n - j - 1``,
    right diagonal ``n - j``) and ``i_prime`` the depth at which the running
    sums first cross.
    """

    def __init__(self, message, *, j, i_prime, row=None, col=None):
        super().__init__(message, row=row, col=col)
        self.j = j
        self.i_prime = i_prime


class RowSumError(ValidationError):
    pass


class ColumnSumError(ValidationError):
    pass


class AlternationError(ValidationError):
    pass


class MonotonicityError(ValidationError):
    pass


class NotTsscpp(ValidationError):
    pass


class InconsistentDomain(ValidationError):
    pass


class IntersectionError(ValidationError):
    pass


def _as_rows(raw, what):
    """Normalize a nested sequence to a tuple of int tuples."""
    try:
        rows = tuple(tuple(entry for entry in row) for row in raw)
    except TypeError:
        raise ShapeError(f"{what}: expected a sequence of rows")
    for r, row in enumerate(rows):
        for c, entry in enumerate(row):
            if not isinstance(entry, (int, np.integer)) or isinstance(entry, bool):
                raise EntryError(
                    f"{what}: entry at ({r + 1},{c + 1}) is not an integer",
                    row=r + 1,
                    col=c + 1,
                )
    return tuple(tuple(int(entry) for entry in row) for row in rows)


def _check_triangular(rows, n, what):
    if len(rows) != n:
        raise ShapeError(f"{what}: expected {n} rows, got {len(rows)}")
    for r, row in enumerate(rows):
        if len(row) != r + 1:
            raise ShapeError(
                f"{what}: row {r + 1} has {len(row)} entries, expected {r + 1}",
                row=r + 1,
            )


@dataclass(frozen=True)
class MonotoneTriangle:
    """Strictly increasing rows, bottom row 1..n, interlacing diagonals:

        rows[r+1][c] <= rows[r][c] <= rows[r+1][c+1]
    """

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = _as_rows(self.rows, "monotone triangle")
        object.__setattr__(self, "rows", rows)
        _check_triangular(rows, self.n, "monotone triangle")
        n = self.n
        if n >= 1 and rows[n - 1] != tuple(range(1, n + 1)):
            raise BottomRowError(
                f"monotone triangle: bottom row must be 1..{n}", row=n
            )
        for r, row in enumerate(rows):
            for c, entry in enumerate(row):
                if not 1 <= entry <= n:
                    raise EntryError(
                        f"monotone triangle: entry {entry} at ({r + 1},{c + 1}) "
                        f"outside 1..{n}",
                        row=r + 1,
                        col=c + 1,
                    )
                if c + 1 < len(row) and not entry < row[c + 1]:
                    raise RowStrictError(
                        f"monotone triangle: row {r + 1} not strictly increasing "
                        f"at position {c + 1}",
                        row=r + 1,
                        col=c + 1,
                    )
                if r + 1 < n:
                    below = rows[r + 1]
                    if not below[c] <= entry <= below[c + 1]:
                        raise InterlaceError(
                            f"monotone triangle: entry {entry} at ({r + 1},{c + 1}) "
                            f"does not interlace {below[c]}, {below[c + 1]} below",
                            row=r + 1,
                            col=c + 1,
                        )

    def to_json_dict(self):
        return {"kind": "monotone_triangle", "n": self.n, "rows": [list(r) for r in self.rows]}


@dataclass(frozen=True)
class MagogTriangle:
    """Strictly increasing rows, bottom row 1..n, diagonal conditions:

        rows[r+1][c] <= rows[r][c]      (below-left no larger)
        rows[r+1][c+1] <= rows[r][c] + 1  (below-right exceeds by at most one)
    """

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = _as_rows(self.rows, "magog triangle")
        object.__setattr__(self, "rows", rows)
        _check_triangular(rows, self.n, "magog triangle")
        n = self.n
        if n >= 1 and rows[n - 1] != tuple(range(1, n + 1)):
            raise BottomRowError(f"magog triangle: bottom row must be 1..{n}", row=n)
        for r, row in enumerate(rows):
            for c, entry in enumerate(row):
                if not 1 <= entry <= n:
                    raise EntryError(
                        f"magog triangle: entry {entry} at ({r + 1},{c + 1}) outside 1..{n}",
                        row=r + 1,
                        col=c + 1,
                    )
                if c + 1 < len(row) and not entry < row[c + 1]:
                    raise RowStrictError(
                        f"magog triangle: row {r + 1} not strictly increasing at "
                        f"position {c + 1}",
                        row=r + 1,
                        col=c + 1,
                    )
                if r + 1 < n:
                    below = rows[r + 1]
                    if not below[c] <= entry:
                        raise InterlaceError(
                            f"magog triangle: entry {entry} at ({r + 1},{c + 1}) "
                            f"smaller than {below[c]} below-left",
                            row=r + 1,
                            col=c + 1,
                        )
                    if not below[c + 1] <= entry + 1:
                        raise InterlaceError(
                            f"magog triangle: entry {entry} at ({r + 1},{c + 1}) "
                            f"more than one below {below[c + 1]} below-right",
                            row=r + 1,
                            col=c + 1,
                        )

    def to_json_dict(self):
        return {"kind": "magog_triangle", "n": self.n, "rows": [list(r) for r in self.rows]}


@dataclass(frozen=True)
class BooleanTriangle:
    """0/1 triangle of order n (n-1 rows) with the diagonal partial-sum
    condition: for every adjacent diagonal pair and every depth, the running
    sum down a diagonal may exceed the running sum down its left neighbour by
    at most one.  Equivalently, the diagonals read as lattice paths are
    non-intersecting.
    """

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = _as_rows(self.rows, "boolean triangle")
        object.__setattr__(self, "rows", rows)
        if self.n < 1:
            raise ShapeError("boolean triangle: order must be >= 1")
        _check_triangular(rows, self.n - 1, "boolean triangle")
        n = self.n
        for r, row in enumerate(rows):
            for c, entry in enumerate(row):
                if entry not in (0, 1):
                    raise EntryError(
                        f"boolean triangle: entry {entry} at ({r + 1},{c + 1}) not 0/1",
                        row=r + 1,
                        col=c + 1,
                    )
        # Running sums per diagonal q = 1..n-1; rows[r][c] lies on diagonal
        # q = n - 1 - r + c.  Check, entry by entry in row-major order, the
        # inequality 1 + sum(diagonal q-1) >= sum(diagonal q) at this depth.
        sums = [0] * (n + 1)
        for r, row in enumerate(rows):
            for c, entry in enumerate(row):
                q = n - 1 - r + c
                sums[q] += entry
            for c in range(len(row)):
                q = n - 1 - r + c
                if q >= 2 and not 1 + sums[q - 1] >= sums[q]:
                    raise PartialSumError(
                        f"boolean triangle: partial sums of diagonals {q - 1},{q} "
                        f"cross at depth {r + 1}",
                        j=n - q,
                        i_prime=r + 1,
                        row=r + 1,
                        col=c + 1,
                    )

    def diagonal(self, q):
        """Entries of diagonal ``q`` (1-based), top to bottom."""
        if not 1 <= q <= self.n - 1:
            raise IndexError(f"diagonal {q} out of range 1..{self.n - 1}")
        return tuple(self.rows[r][r - (self.n - 1 - q)] for r in range(self.n - 1 - q, self.n - 1))

    def to_json_dict(self):
        return {"kind": "boolean_triangle", "n": self.n, "rows": [list(r) for r in self.rows]}


@dataclass(frozen=True)
class NilpNest:
    """Nest of non-intersecting lattice paths.

    Path ``i`` (1-based, ``i = 1 .. n-1``) starts at ``(i, i)`` and takes
    exactly ``i`` steps, each ``"V"`` = (0,-1) or ``"D"`` = (1,-1), ending on
    the x-axis.  No two paths share a lattice point.
    """

    n: int
    paths: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ShapeError("nest: order must be >= 1")
        try:
            paths = tuple(tuple(step for step in path) for path in self.paths)
        except TypeError:
            raise ShapeError("nest: expected a sequence of step sequences")
        object.__setattr__(self, "paths", paths)
        if len(paths) != self.n - 1:
            raise ShapeError(f"nest: expected {self.n - 1} paths, got {len(paths)}")
        for i, path in enumerate(paths, start=1):
            if len(path) != i:
                raise ShapeError(f"nest: path {i} has {len(path)} steps, expected {i}")
            for step in path:
                if step not in ("V", "D"):
                    raise EntryError(f"nest: path {i} has step {step!r}, expected 'V'/'D'")
        seen = {}
        for i, path in enumerate(paths, start=1):
            for point in self.points(i):
                if point in seen:
                    raise IntersectionError(
                        f"nest: paths {seen[point]} and {i} share the point {point}"
                    )
                seen[point] = i

    def points(self, i):
        """Lattice points visited by path ``i``, start and endpoint included."""
        x, y = i, i
        pts = [(x, y)]
        for step in self.paths[i - 1]:
            if step == "D":
                x += 1
            y -= 1
            pts.append((x, y))
        return tuple(pts)

    def endpoints(self):
        return tuple(self.points(i)[-1] for i in range(1, self.n))

    def to_json_dict(self):
        return {"kind": "nilp_nest", "n": self.n, "paths": [list(p) for p in self.paths]}


@dataclass(frozen=True)
class Asm:
    """Alternating sign matrix: entries in {-1,0,1}, every row and column sums
    to one, and the nonzero entries of each row and column alternate in sign.
    Equivalently every row and column prefix sum lies in {0, 1}.
    """

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = _as_rows(self.rows, "asm")
        object.__setattr__(self, "rows", rows)
        n = self.n
        if len(rows) != n or any(len(row) != n for row in rows):
            raise ShapeError(f"asm: expected a {n}x{n} matrix")
        col = [0] * n
        for r, row in enumerate(rows):
            acc = 0
            for c, entry in enumerate(row):
                if entry not in (-1, 0, 1):
                    raise EntryError(
                        f"asm: entry {entry} at ({r + 1},{c + 1}) not in -1/0/1",
                        row=r + 1,
                        col=c + 1,
                    )
                acc += entry
                col[c] += entry
                if acc not in (0, 1):
                    raise AlternationError(
                        f"asm: row {r + 1} prefix sum {acc} at column {c + 1}",
                        row=r + 1,
                        col=c + 1,
                    )
                if col[c] not in (0, 1):
                    raise AlternationError(
                        f"asm: column {c + 1} prefix sum {col[c]} at row {r + 1}",
                        row=r + 1,
                        col=c + 1,
                    )
            if acc != 1:
                raise RowSumError(f"asm: row {r + 1} sums to {acc}, expected 1", row=r + 1)
        for c in range(n):
            if col[c] != 1:
                raise ColumnSumError(f"asm: column {c + 1} sums to {col[c]}, expected 1", col=c + 1)

    def to_json_dict(self):
        return {"kind": "asm", "n": self.n, "rows": [list(r) for r in self.rows]}


@dataclass(frozen=True)
class Permutation:
    """A permutation of 1..n in one-line notation."""

    n: int
    sigma: tuple[int, ...]

    def __post_init__(self):
        sigma = tuple(int(v) for v in self.sigma)
        object.__setattr__(self, "sigma", sigma)
        if len(sigma) != self.n or sorted(sigma) != list(range(1, self.n + 1)):
            raise ValidationError(f"permutation: {sigma} is not a bijection on 1..{self.n}")

    def __call__(self, i):
        return self.sigma[i - 1]

    def inverse(self):
        inv = [0] * self.n
        for i, v in enumerate(self.sigma, start=1):
            inv[v - 1] = i
        return Permutation(self.n, tuple(inv))

    def one_line(self):
        """One-line string: bare digits up to n = 9, comma-separated beyond."""
        if self.n <= 9:
            return "".join(str(v) for v in self.sigma)
        return ",".join(str(v) for v in self.sigma)

    @classmethod
    def from_one_line(cls, text):
        text = text.strip()
        if "," in text:
            values = tuple(int(part) for part in text.split(","))
        else:
            values = tuple(int(ch) for ch in text)
        return cls(len(values), values)

    def to_json_dict(self):
        return {"kind": "permutation", "n": self.n, "sigma": list(self.sigma)}


@dataclass(frozen=True)
class PlanePartition:
    """A plane partition completed to a square array with zeros.

    For TSSCPP use the side is ``2n`` and entries are at most ``2n``; the
    derived lattice-point set is {(i,j,k) : 1 <= k <= rows[i-1][j-1]}.
    """

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = _as_rows(self.rows, "plane partition")
        object.__setattr__(self, "rows", rows)
        side = 2 * self.n
        if len(rows) != side or any(len(row) != side for row in rows):
            raise ShapeError(f"plane partition: expected a {side}x{side} array")
        for r, row in enumerate(rows):
            for c, entry in enumerate(row):
                if not 0 <= entry <= side:
                    raise EntryError(
                        f"plane partition: entry {entry} at ({r + 1},{c + 1}) outside 0..{side}",
                        row=r + 1,
                        col=c + 1,
                    )
                if c + 1 < side and row[c + 1] > entry:
                    raise MonotonicityError(
                        f"plane partition: row {r + 1} increases at column {c + 2}",
                        row=r + 1,
                        col=c + 2,
                    )
                if r + 1 < side and rows[r + 1][c] > entry:
                    raise MonotonicityError(
                        f"plane partition: column {c + 1} increases at row {r + 2}",
                        row=r + 2,
                        col=c + 1,
                    )

    @property
    def side(self):
        return 2 * self.n

    def cube(self):
        """Membership grid M[i,j,k] (0-based) of the lattice-point set."""
        side = self.side
        t = np.array(self.rows, dtype=np.int64)
        k = np.arange(1, side + 1)
        return k[None, None, :] <= t[:, :, None]

    def lattice_points(self):
        return {
            (i + 1, j + 1, k + 1)
            for (i, j, k) in zip(*np.nonzero(self.cube()))
        }

    def to_json_dict(self):
        return {"kind": "plane_partition", "n": self.n, "rows": [list(r) for r in self.rows]}


@dataclass(frozen=True)
class FundamentalDomain:
    """Triangular corner of a TSSCPP array: entries t[i][j] for
    n+1 <= i <= j <= 2n, stored as rows[i'][c] = t[n+1+i'][n+1+i'+c]
    (0-based ``i'``).  Construction checks weak decrease and nonnegativity;
    full consistency is certified by :func:`expand_fundamental`.
    """

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = _as_rows(self.rows, "fundamental domain")
        object.__setattr__(self, "rows", rows)
        n = self.n
        if len(rows) != n or any(len(row) != n - i for i, row in enumerate(rows)):
            raise ShapeError(f"fundamental domain: expected rows of lengths {n}..1")
        for r, row in enumerate(rows):
            for c, entry in enumerate(row):
                if entry < 0:
                    raise EntryError(
                        f"fundamental domain: negative entry at ({r + 1},{c + 1})",
                        row=r + 1,
                        col=c + 1,
                    )
                if c + 1 < len(row) and row[c + 1] > entry:
                    raise MonotonicityError(
                        f"fundamental domain: row {r + 1} increases at position {c + 2}",
                        row=r + 1,
                        col=c + 2,
                    )
                # Same absolute column in the next row sits one slot left.
                if r + 1 < n and c >= 1 and rows[r + 1][c - 1] > entry:
                    raise MonotonicityError(
                        f"fundamental domain: column under ({r + 1},{c + 1}) increases",
                        row=r + 2,
                        col=c,
                    )

    def to_json_dict(self):
        return {"kind": "fundamental_domain", "n": self.n, "rows": [list(r) for r in self.rows]}


@dataclass(frozen=True)
class SymmetryReport:
    symmetric: bool
    cyclically_symmetric: bool
    self_complementary: bool

    @property
    def all_true(self):
        return self.symmetric and self.cyclically_symmetric and self.self_complementary


def validate_monotone(raw):
    rows = _as_rows(raw, "monotone triangle")
    return MonotoneTriangle(len(rows), rows)


def validate_magog(raw):
    rows = _as_rows(raw, "magog triangle")
    return MagogTriangle(len(rows), rows)


def validate_boolean(raw, n=None):
    rows = _as_rows(raw, "boolean triangle")
    return BooleanTriangle(len(rows) + 1 if n is None else n, rows)


def validate_nilp(paths, n=None):
    paths = tuple(tuple(p) for p in paths)
    return NilpNest(len(paths) + 1 if n is None else n, paths)


def validate_asm(raw):
    rows = _as_rows(raw, "asm")
    return Asm(len(rows), rows)


def is_permutation_matrix(a: Asm):
    return all(entry >= 0 for row in a.rows for entry in row)


def validate_tsscpp(p: PlanePartition):
    """Report the three symmetry predicates of the lattice-point set."""
    m = p.cube()
    symmetric = bool((m == m.transpose(1, 0, 2)).all())
    cyclic = bool((m == m.transpose(2, 0, 1)).all())
    self_comp = bool((m == ~m[::-1, ::-1, ::-1]).all())
    return SymmetryReport(symmetric, cyclic, self_comp)


def fundamental_domain(p: PlanePartition):
    """Extract the triangular corner t[i][j], n+1 <= i <= j <= 2n."""
    report = validate_tsscpp(p)
    if not report.all_true:
        raise NotTsscpp(f"array is not a TSSCPP: {report}")
    n = p.n
    rows = tuple(tuple(p.rows[n + i][n + j] for j in range(i, n)) for i in range(n))
    return FundamentalDomain(n, rows)


def expand_fundamental(d: FundamentalDomain):
    """The unique TSSCPP with fundamental domain ``d``.

    The lattice-point set is closed under the six coordinate permutations and
    the complementation involution: a cell sorted to (a >= b >= c) lies in the
    set iff c <= t[b][a] when b > n, and otherwise iff its complement cell is
    absent.  The result is fully re-validated; failures mean the domain is
    inconsistent.
    """
    n = d.n
    side = 2 * n
    dom = np.zeros((side + 1, side + 1), dtype=np.int64)
    for i, row in enumerate(d.rows):
        for c, entry in enumerate(row):
            dom[n + 1 + i, n + 1 + i + c] = entry
    idx = np.arange(1, side + 1)
    grid = np.stack(np.meshgrid(idx, idx, idx, indexing="ij"))
    low, mid, high = np.sort(grid, axis=0)
    inside = mid >= n + 1
    known = low <= dom[mid, high]
    complement = (side + 1 - high) > dom[side + 1 - mid, side + 1 - low]
    m = np.where(inside, known, complement)
    heights = m.sum(axis=2)
    k = np.arange(1, side + 1)
    if not (m == (k[None, None, :] <= heights[:, :, None])).all():
        raise InconsistentDomain("closure is not column-contiguous")
    try:
        p = PlanePartition(n, tuple(tuple(int(v) for v in row) for row in heights))
    except ValidationError as exc:
        raise InconsistentDomain(f"closure is not a plane partition: {exc}") from exc
    if not validate_tsscpp(p).all_true:
        raise InconsistentDomain("closure is not totally symmetric self-complementary")
    if fundamental_domain(p) != d:
        raise InconsistentDomain("closure does not reproduce the domain")
    return p


_KINDS = {
    "monotone_triangle": lambda d: MonotoneTriangle(d["n"], _as_rows(d["rows"], "monotone triangle")),
    "magog_triangle": lambda d: MagogTriangle(d["n"], _as_rows(d["rows"], "magog triangle")),
    "boolean_triangle": lambda d: BooleanTriangle(d["n"], _as_rows(d["rows"], "boolean triangle")),
    "asm": lambda d: Asm(d["n"], _as_rows(d["rows"], "asm")),
    "permutation": lambda d: Permutation(d["n"], tuple(d["sigma"])),
    "nilp_nest": lambda d: NilpNest(d["n"], tuple(tuple(p) for p in d["paths"])),
    "plane_partition": lambda d: PlanePartition(d["n"], _as_rows(d["rows"], "plane partition")),
    "fundamental_domain": lambda d: FundamentalDomain(d["n"], _as_rows(d["rows"], "fundamental domain")),
}


def to_json_dict(obj):
    return obj.to_json_dict()


def from_json_dict(data):
    try:
        kind = data["kind"]
    except (TypeError, KeyError):
        raise ShapeError("object JSON must carry a 'kind' field")
    if kind not in _KINDS:
        raise ShapeError(f"unknown object kind {kind!r}")
    return _KINDS[kind](data)


def to_json(obj):
    return json.dumps(obj.to_json_dict(), separators=(",", ":"))


def from_json(text):
    return from_json_dict(json.loads(text))
