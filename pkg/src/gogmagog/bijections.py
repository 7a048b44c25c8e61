"""Conversion maps between the object families, each total on its stated
domain and invertible.

The conversion graph has two hubs:

* ``MonotoneTriangle`` for the matrix side (``Asm`` <-> monotone triangle via
  column partial sums; permutations <-> monotone triangles via sorted
  prefixes).
* ``FundamentalDomain`` for the plane-partition side (magog triangles via the
  rotate-and-shift formula; boolean triangles via layer profiles, see below;
  nests of paths via the boolean encoding).

The two sides meet only on permutation objects: a boolean triangle with
weakly decreasing rows maps to a monotone triangle by copying, in each row,
the below-left neighbour over a one and the below-right neighbour over a
zero.  That map sends zeros to inversions and is the statistic-preserving
permutation bijection.

Layer profiles
--------------
``boolean_from_fundamental`` encodes domain heights by levels.  For each
``q = 1 .. n-1`` consider the cells of the domain with height at least
``n - q`` (a shifted, strictly-row-decreasing shape confined to the first
``q`` columns).  A layer row of length ``r`` puts a zero at depth
``q - r + 1`` of diagonal ``q`` of the boolean triangle; all other entries
are ones.  The inverse reads the zero depths of each diagonal back into
nested layers and sums them.
"""

from __future__ import annotations

from .triangles import (
    Asm,
    BooleanTriangle,
    FundamentalDomain,
    InconsistentDomain,
    MagogTriangle,
    MonotoneTriangle,
    NilpNest,
    Permutation,
    PlanePartition,
    ValidationError,
    expand_fundamental,
    fundamental_domain,
    is_permutation_matrix,
)

__all__ = [
    "NotPermutationBoolean",
    "NotPermutationMonotone",
    "NotPermutationMatrix",
    "ResultNotMagog",
    "asm_to_monotone",
    "monotone_to_asm",
    "asm_to_permutation",
    "permutation_matrix",
    "permutation_to_monotone",
    "monotone_to_permutation",
    "magog_from_fundamental",
    "fundamental_from_magog",
    "boolean_from_fundamental",
    "fundamental_from_boolean",
    "boolean_to_nilp",
    "nilp_to_boolean",
    "nilp_from_fundamental",
    "fundamental_from_nilp",
    "magog_to_boolean",
    "boolean_to_magog",
    "tsscpp_to_boolean",
    "boolean_to_tsscpp",
    "boolean_to_monotone_perm",
    "monotone_perm_to_boolean",
    "permutation_to_boolean",
    "boolean_to_permutation",
    "bracket_vector",
    "bracket_vector_to_boolean",
    "is_permutation_boolean",
    "is_permutation_magog",
    "is_permutation_tsscpp",
]


class NotPermutationBoolean(ValidationError):
    pass


class NotPermutationMonotone(ValidationError):
    pass


class NotPermutationMatrix(ValidationError):
    pass


class ResultNotMagog(ValidationError):
    pass


def asm_to_monotone(a: Asm) -> MonotoneTriangle:
    """Row i lists, in increasing order, the columns whose top-i partial sum
    is one."""
    n = a.n
    rows = []
    col = [0] * n
    for r in range(n):
        for c in range(n):
            col[c] += a.rows[r][c]
        rows.append(tuple(c + 1 for c in range(n) if col[c] == 1))
    return MonotoneTriangle(n, tuple(rows))


def monotone_to_asm(m: MonotoneTriangle) -> Asm:
    n = m.n
    rows = []
    prev = frozenset()
    for r in range(n):
        cur = frozenset(m.rows[r])
        rows.append(tuple((1 if c in cur else 0) - (1 if c in prev else 0) for c in range(1, n + 1)))
        prev = cur
    return Asm(n, tuple(rows))


def permutation_matrix(p: Permutation) -> Asm:
    n = p.n
    return Asm(n, tuple(tuple(1 if p.sigma[r] == c else 0 for c in range(1, n + 1)) for r in range(n)))


def asm_to_permutation(a: Asm) -> Permutation:
    if not is_permutation_matrix(a):
        raise NotPermutationMatrix("matrix has a -1 entry")
    return Permutation(a.n, tuple(row.index(1) + 1 for row in a.rows))


def permutation_to_monotone(p: Permutation) -> MonotoneTriangle:
    """Row i is the sorted prefix sigma(1..i)."""
    return MonotoneTriangle(p.n, tuple(tuple(sorted(p.sigma[: r + 1])) for r in range(p.n)))


def monotone_to_permutation(m: MonotoneTriangle) -> Permutation:
    """sigma(i) is the unique new value in row i; defined exactly on the
    monotone triangles of permutation matrices."""
    sigma = []
    prev = frozenset()
    for row in m.rows:
        new = frozenset(row) - prev
        if len(new) != 1:
            raise NotPermutationMonotone("monotone triangle rows are not nested prefixes")
        sigma.append(next(iter(new)))
        prev = frozenset(row)
    return Permutation(m.n, tuple(sigma))


def magog_from_fundamental(d: FundamentalDomain) -> MagogTriangle:
    """Rotate the domain and add 1, 2, ..., n along the diagonals:
    triangle row i, dense position i-j+1 equals t[n+j][n+i] + i - j + 1."""
    n = d.n
    rows = [[0] * (i + 1) for i in range(n)]
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            rows[i - 1][i - j] = d.rows[j - 1][i - j] + i - j + 1
    try:
        return MagogTriangle(n, tuple(tuple(row) for row in rows))
    except ValidationError as exc:
        raise ResultNotMagog(f"domain does not yield a magog triangle: {exc}") from exc


def fundamental_from_magog(m: MagogTriangle) -> FundamentalDomain:
    n = m.n
    rows = [[0] * (n - i) for i in range(n)]
    for i in range(1, n + 1):
        for j in range(1, i + 1):
            rows[j - 1][i - j] = m.rows[i - 1][i - j] - (i - j + 1)
    return FundamentalDomain(n, tuple(tuple(row) for row in rows))


def _layer_row_lengths(d: FundamentalDomain, level):
    """Row lengths of the domain cells with height >= level (strictly
    decreasing; rows weakly decrease so each run starts on the diagonal)."""
    lengths = []
    for row in d.rows:
        r = 0
        while r < len(row) and row[r] >= level:
            r += 1
        if r == 0:
            break
        lengths.append(r)
    return lengths


def boolean_from_fundamental(d: FundamentalDomain) -> BooleanTriangle:
    n = d.n
    rows = [[1] * (r + 1) for r in range(n - 1)]
    for q in range(1, n):
        for r in _layer_row_lengths(d, n - q):
            depth = q - r + 1
            if depth < 1 or rows[n - q + depth - 2][depth - 1] == 0:
                raise InconsistentDomain(
                    f"level {n - q} of the domain has an impossible row of length {r}"
                )
            rows[n - q + depth - 2][depth - 1] = 0
    return BooleanTriangle(n, tuple(tuple(row) for row in rows))


def fundamental_from_boolean(b: BooleanTriangle) -> FundamentalDomain:
    n = b.n
    rows = [[0] * (n - i) for i in range(n)]
    for q in range(1, n):
        depths = [s for s, value in enumerate(b.diagonal(q), start=1) if value == 0]
        lengths = sorted((q - s + 1 for s in depths), reverse=True)
        for i, r in enumerate(lengths):
            for c in range(r):
                rows[i][c] += 1
    return FundamentalDomain(n, tuple(tuple(row) for row in rows))


def boolean_to_nilp(b: BooleanTriangle) -> NilpNest:
    """Diagonal q, top to bottom, is path q: one = vertical step,
    zero = southeast diagonal step."""
    paths = tuple(
        tuple("V" if value else "D" for value in b.diagonal(q)) for q in range(1, b.n)
    )
    return NilpNest(b.n, paths)


def nilp_to_boolean(nest: NilpNest) -> BooleanTriangle:
    n = nest.n
    rows = [[0] * (r + 1) for r in range(n - 1)]
    for q, path in enumerate(nest.paths, start=1):
        for s, step in enumerate(path, start=1):
            rows[n - q + s - 2][s - 1] = 1 if step == "V" else 0
    return BooleanTriangle(n, tuple(tuple(row) for row in rows))


def nilp_from_fundamental(d: FundamentalDomain) -> NilpNest:
    return boolean_to_nilp(boolean_from_fundamental(d))


def fundamental_from_nilp(nest: NilpNest) -> FundamentalDomain:
    return fundamental_from_boolean(nilp_to_boolean(nest))


def magog_to_boolean(m: MagogTriangle) -> BooleanTriangle:
    return boolean_from_fundamental(fundamental_from_magog(m))


def boolean_to_magog(b: BooleanTriangle) -> MagogTriangle:
    return magog_from_fundamental(fundamental_from_boolean(b))


def tsscpp_to_boolean(p: PlanePartition) -> BooleanTriangle:
    return boolean_from_fundamental(fundamental_domain(p))


def boolean_to_tsscpp(b: BooleanTriangle) -> PlanePartition:
    return expand_fundamental(fundamental_from_boolean(b))


def is_permutation_boolean(b: BooleanTriangle) -> bool:
    """Rows weakly decreasing, i.e. the ones of every row are left-justified."""
    return all(row[c] >= row[c + 1] for row in b.rows for c in range(len(row) - 1))


def is_permutation_magog(m: MagogTriangle) -> bool:
    """No entry x at (r, c) with, for some k >= 0, the pattern

        x >= rows[r+1][c+1] == rows[r+k+1][c+1] > rows[r+k+1][c] + 1

    (dense 0-based indices; values down a dense column weakly decrease, so
    the equality run is a prefix)."""
    rows = m.rows
    for r in range(m.n - 1):
        for c in range(r + 1):
            v = rows[r + 1][c + 1]
            if rows[r][c] >= v:
                for rr in range(r + 1, m.n):
                    if rows[rr][c + 1] != v:
                        break
                    if v > rows[rr][c] + 1:
                        return False
    return True


def is_permutation_tsscpp(p: PlanePartition) -> bool:
    """No k >= 0 and fundamental-domain position (i, j), n+1 <= i <= j <= 2n-1,
    with t[i][j] > t[i][j+1] == t[i+k][j+k+1] > t[i+k+1][j+k+1]."""
    n = p.n
    t = p.rows
    for i in range(n + 1, 2 * n):
        for j in range(i, 2 * n):
            if t[i - 1][j - 1] > t[i - 1][j]:
                v = t[i - 1][j]
                k = 0
                while i + k + 1 <= 2 * n and j + k + 1 <= 2 * n:
                    if t[i + k - 1][j + k] != v:
                        break
                    if v > t[i + k][j + k]:
                        return False
                    k += 1
    return True


def boolean_to_monotone_perm(b: BooleanTriangle) -> MonotoneTriangle:
    """The statistic-preserving permutation bijection, boolean side to matrix
    side: bottom row 1..n, then every entry copies its below-left neighbour
    over a one and its below-right neighbour over a zero."""
    if not is_permutation_boolean(b):
        raise NotPermutationBoolean("a row of the boolean triangle increases")
    n = b.n
    rows = [tuple(range(1, n + 1))]
    for r in range(n - 2, -1, -1):
        below = rows[0]
        rows.insert(0, tuple(below[c] if b.rows[r][c] else below[c + 1] for c in range(r + 1)))
    return MonotoneTriangle(n, tuple(rows))


def monotone_perm_to_boolean(m: MonotoneTriangle) -> BooleanTriangle:
    """Inverse of :func:`boolean_to_monotone_perm`, defined on monotone
    triangles of permutation matrices.  Rows are strict, so at most one of the
    two neighbour equalities can hold; if neither does the triangle has a
    strict-diagonal entry, i.e. a -1 in its matrix."""
    n = m.n
    rows = []
    for r in range(n - 1):
        below = m.rows[r + 1]
        row = []
        for c, entry in enumerate(m.rows[r]):
            if entry == below[c]:
                row.append(1)
            elif entry == below[c + 1]:
                row.append(0)
            else:
                raise NotPermutationMonotone(
                    f"entry at ({r + 1},{c + 1}) matches neither neighbour below"
                )
        rows.append(tuple(row))
    return BooleanTriangle(n, tuple(rows))


def permutation_to_boolean(p: Permutation) -> BooleanTriangle:
    return monotone_perm_to_boolean(permutation_to_monotone(p))


def boolean_to_permutation(b: BooleanTriangle) -> Permutation:
    return monotone_to_permutation(boolean_to_monotone_perm(b))


def bracket_vector(b: BooleanTriangle) -> tuple[int, ...]:
    """x_i = i + (sum of row n - i), the empty row counting as zero; a
    bijection from permutation boolean triangles onto sequences with
    i <= x_i <= n."""
    if not is_permutation_boolean(b):
        raise NotPermutationBoolean("a row of the boolean triangle increases")
    n = b.n
    return tuple(i + (sum(b.rows[n - i - 1]) if i < n else 0) for i in range(1, n + 1))


def bracket_vector_to_boolean(x) -> BooleanTriangle:
    x = tuple(x)
    n = len(x)
    for i, v in enumerate(x, start=1):
        if not i <= v <= n:
            raise ValidationError(f"entry {v} at position {i} outside {i}..{n}")
    rows = []
    for r in range(1, n):
        ones = x[n - r - 1] - (n - r)
        rows.append((1,) * ones + (0,) * (r - ones))
    return BooleanTriangle(n, tuple(rows))
