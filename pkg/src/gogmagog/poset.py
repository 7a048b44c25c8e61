"""Finite poset engine: construction and certification, Hasse covers,
lattice and distributivity reports, order-ideal lattices, induced subposets,
isomorphism testing, and DOT/JSON export.

A poset is an immutable tuple of labels plus a read-only boolean matrix
``leq``; all heavy scans (closure, covers, meets/joins) are numpy matrix
work.  Labels are opaque hashable values; the specific posets built elsewhere
use canonical JSON strings (objects) or one-line notation (permutations) so
that relation containment across posets is well defined.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = [
    "PosetError",
    "SizeCap",
    "LatticeReport",
    "Poset",
    "from_comparisons",
    "covers",
    "lattice_report",
    "order_ideals",
    "induced_subposet",
    "isomorphic_to",
    "relations_subset",
    "is_ranked",
]


class PosetError(ValueError):
    pass


class SizeCap(RuntimeError):
    pass


@dataclass(frozen=True)
class LatticeReport:
    """``witness`` is ("meet"|"join", x, y) when a pair lacks one;
    ``distributivity_witness`` is (x, y, z) with x/\\(y\\/z) != (x/\\y)\\/(x/\\z)."""

    is_lattice: bool
    witness: tuple | None = None
    is_distributive: bool | None = None
    distributivity_witness: tuple | None = None


def _bool_product(a, b):
    """Boolean matrix product via BLAS; path counts stay below 2**24 under
    the size caps, so float32 accumulation is exact."""
    return (a.astype(np.float32) @ b.astype(np.float32)) > 0.5


def _closure(matrix):
    reach = matrix.copy()
    np.fill_diagonal(reach, True)
    while True:
        nxt = reach | _bool_product(reach, reach)
        if (nxt == reach).all():
            return nxt
        reach = nxt


class Poset:
    """Finite partial order on labelled elements."""

    __slots__ = ("labels", "_leq", "_index", "_covers")

    def __init__(self, labels, leq, *, _certified=False):
        labels = tuple(labels)
        leq = np.asarray(leq, dtype=bool).copy()
        n = len(labels)
        if leq.shape != (n, n):
            raise PosetError(f"relation matrix shape {leq.shape} does not match {n} labels")
        index = {}
        for i, label in enumerate(labels):
            if label in index:
                raise PosetError(f"duplicate label {label!r}")
            index[label] = i
        if not _certified:
            if not leq.diagonal().all():
                raise PosetError("relation is not reflexive")
            bad = leq & leq.T & ~np.eye(n, dtype=bool)
            if bad.any():
                i, j = map(int, np.argwhere(bad)[0])
                raise PosetError(f"not antisymmetric: {labels[i]!r} <=> {labels[j]!r}")
            if (_bool_product(leq, leq) & ~leq).any():
                raise PosetError("relation is not transitive")
        leq.setflags(write=False)
        self.labels = labels
        self._leq = leq
        self._index = index
        self._covers = None

    @classmethod
    def from_comparisons(cls, elements, leq_predicate):
        """Close the comparison predicate reflexively and transitively, then
        certify antisymmetry."""
        labels = tuple(elements)
        n = len(labels)
        matrix = np.zeros((n, n), dtype=bool)
        for i, x in enumerate(labels):
            for j, y in enumerate(labels):
                if leq_predicate(x, y):
                    matrix[i, j] = True
        closed = _closure(matrix)
        bad = closed & closed.T & ~np.eye(n, dtype=bool)
        if bad.any():
            i, j = map(int, np.argwhere(bad)[0])
            raise PosetError(f"closure is not antisymmetric: {labels[i]!r} <=> {labels[j]!r}")
        return cls(labels, closed, _certified=True)

    @classmethod
    def from_covers(cls, labels, cover_pairs):
        labels = tuple(labels)
        index = {label: i for i, label in enumerate(labels)}
        n = len(labels)
        matrix = np.zeros((n, n), dtype=bool)
        for x, y in cover_pairs:
            matrix[index[x], index[y]] = True
        closed = _closure(matrix)
        bad = closed & closed.T & ~np.eye(n, dtype=bool)
        if bad.any():
            raise PosetError("cover closure is not antisymmetric")
        return cls(labels, closed, _certified=True)

    # -- basic queries ----------------------------------------------------

    @property
    def size(self):
        return len(self.labels)

    def __len__(self):
        return len(self.labels)

    def __eq__(self, other):
        return (
            isinstance(other, Poset)
            and self.labels == other.labels
            and bool((self._leq == other._leq).all())
        )

    def __repr__(self):
        return f"Poset({self.size} elements, {len(self.cover_pairs())} covers)"

    def leq_matrix(self):
        return self._leq

    def index(self, label):
        return self._index[label]

    def leq(self, x, y):
        return bool(self._leq[self._index[x], self._index[y]])

    def relation_pairs(self):
        """All strict related label pairs (x, y) with x < y."""
        strict = self._leq & ~np.eye(self.size, dtype=bool)
        return frozenset(
            (self.labels[i], self.labels[j]) for i, j in np.argwhere(strict)
        )

    def cover_matrix(self):
        if self._covers is None:
            strict = self._leq & ~np.eye(self.size, dtype=bool)
            reduced = strict & ~_bool_product(strict, strict)
            reduced.setflags(write=False)
            self._covers = reduced
        return self._covers

    def cover_pairs(self):
        """Transitive reduction as sorted index pairs (lower, upper)."""
        return tuple((int(i), int(j)) for i, j in np.argwhere(self.cover_matrix()))

    def cover_label_pairs(self):
        return frozenset((self.labels[i], self.labels[j]) for i, j in self.cover_pairs())

    # -- constructions -----------------------------------------------------

    def induced(self, keep):
        """Subposet on the labels selected by a predicate or a collection."""
        if callable(keep):
            chosen = [i for i, label in enumerate(self.labels) if keep(label)]
        else:
            wanted = set(keep)
            chosen = [i for i, label in enumerate(self.labels) if label in wanted]
        idx = np.array(chosen, dtype=int)
        labels = tuple(self.labels[i] for i in chosen)
        if len(idx) == 0:
            return Poset(labels, np.zeros((0, 0), dtype=bool), _certified=True)
        return Poset(labels, self._leq[np.ix_(idx, idx)], _certified=True)

    def order_ideals(self, *, max_size=30, max_ideals=1_000_000):
        """The lattice of down-closed subsets ordered by containment.

        Ideal labels are tuples of member labels in ground order.
        """
        n = self.size
        if n > max_size:
            raise SizeCap(f"order_ideals capped at {max_size} elements, got {n}")
        below = []
        for e in range(n):
            mask = 0
            for z in range(n):
                if z != e and self._leq[z, e]:
                    mask |= 1 << z
            below.append(mask)
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for ideal in frontier:
                for e in range(n):
                    bit = 1 << e
                    if not ideal & bit and ideal & below[e] == below[e]:
                        new = ideal | bit
                        if new not in seen:
                            seen.add(new)
                            nxt.append(new)
                            if len(seen) > max_ideals:
                                raise SizeCap(f"more than {max_ideals} ideals")
            frontier = nxt
        masks = sorted(seen, key=lambda m: (bin(m).count("1"), m))
        labels = tuple(
            tuple(self.labels[e] for e in range(n) if mask >> e & 1) for mask in masks
        )
        k = len(masks)
        arr = np.array(masks, dtype=np.int64) if n < 63 else None
        leq = np.zeros((k, k), dtype=bool)
        for i, mask in enumerate(masks):
            if arr is not None:
                leq[i] = (arr & mask) == mask
            else:
                leq[i] = [m & mask == mask for m in masks]
        return Poset(labels, leq, _certified=True)

    # -- lattice structure --------------------------------------------------

    def _bound_table(self, lower):
        """Meet (lower=True) or join table, or an index-pair witness.

        Returns (table, None) or (None, (x, y)).
        """
        n = self.size
        rel = self._leq if lower else self._leq.T
        sizes = rel.sum(axis=0)
        table = np.zeros((n, n), dtype=np.int64)
        for x in range(n):
            bounds = rel[:, x : x + 1] & rel
            any_bound = bounds.any(axis=0)
            if not any_bound.all():
                y = int(np.nonzero(~any_bound)[0][0])
                return None, (x, y)
            scores = np.where(bounds, sizes[:, None] + 1, 0)
            cand = scores.argmax(axis=0)
            ok = (~bounds | rel[:, cand]).all(axis=0)
            if not ok.all():
                y = int(np.nonzero(~ok)[0][0])
                return None, (x, y)
            table[x] = cand
        return table, None

    def meet_table(self):
        table, witness = self._bound_table(lower=True)
        if table is None:
            raise PosetError("not a meet-semilattice")
        return table

    def join_table(self):
        table, witness = self._bound_table(lower=False)
        if table is None:
            raise PosetError("not a join-semilattice")
        return table

    def join_irreducibles(self):
        """Elements with exactly one lower cover."""
        cov = self.cover_matrix()
        return tuple(int(i) for i in np.nonzero(cov.sum(axis=0) == 1)[0])

    def count_ideals(self):
        """Number of order ideals, by divide and conquer on up/down sets."""
        n = self.size
        leq = self._leq

        @lru_cache(maxsize=None)
        def rec(mask):
            if mask == 0:
                return 1
            x = mask.bit_length() - 1
            up = 0
            dn = 0
            for z in range(n):
                if mask >> z & 1:
                    if leq[x, z]:
                        up |= 1 << z
                    if leq[z, x]:
                        dn |= 1 << z
            return rec(mask & ~up) + rec(mask & ~dn)

        return rec((1 << n) - 1)

    def lattice_report(self, *, max_size=10_000, distributive_scan_max=200):
        """Meet/join existence for all pairs; on lattices also distributivity,
        by triple scan up to ``distributive_scan_max`` elements and by the
        ideal count of the join irreducibles beyond."""
        n = self.size
        if n > max_size:
            raise SizeCap(f"lattice_report capped at {max_size} elements, got {n}")
        if n == 0:
            return LatticeReport(True, None, True, None)
        meet, witness = self._bound_table(lower=True)
        if meet is None:
            x, y = witness
            return LatticeReport(False, ("meet", self.labels[x], self.labels[y]))
        join, witness = self._bound_table(lower=False)
        if join is None:
            x, y = witness
            return LatticeReport(False, ("join", self.labels[x], self.labels[y]))
        if n <= distributive_scan_max:
            for x in range(n):
                lhs = meet[x][join]
                mx = meet[x]
                rhs = join[mx[:, None], mx[None, :]]
                if not (lhs == rhs).all():
                    y, z = map(int, np.argwhere(lhs != rhs)[0])
                    return LatticeReport(
                        True,
                        None,
                        False,
                        (self.labels[x], self.labels[y], self.labels[z]),
                    )
            return LatticeReport(True, None, True, None)
        irreducibles = self.induced(
            tuple(self.labels[i] for i in self.join_irreducibles())
        )
        return LatticeReport(True, None, irreducibles.count_ideals() == n, None)

    # -- comparisons across posets ------------------------------------------

    def relations_subset_of(self, other):
        """True iff every relation of self holds in other, matching labels."""
        missing = self.relations_not_in(other)
        return missing is None

    def relations_not_in(self, other):
        """First relation pair of self absent from other, or None."""
        for x, y in sorted(self.relation_pairs(), key=str):
            if x not in other._index or y not in other._index:
                return (x, y)
            if not other.leq(x, y):
                return (x, y)
        return None

    def _refined_colors(self):
        n = self.size
        cov = self.cover_matrix()
        down = self._leq.sum(axis=0)
        up = self._leq.sum(axis=1)
        cov_down = cov.sum(axis=0)
        cov_up = cov.sum(axis=1)
        colors = [
            (int(down[i]), int(up[i]), int(cov_down[i]), int(cov_up[i]))
            for i in range(n)
        ]
        palette = {c: k for k, c in enumerate(sorted(set(colors)))}
        colors = [palette[c] for c in colors]
        lowers = [np.nonzero(cov[:, i])[0] for i in range(n)]
        uppers = [np.nonzero(cov[i, :])[0] for i in range(n)]
        while True:
            signature = [
                (
                    colors[i],
                    tuple(sorted(colors[j] for j in lowers[i])),
                    tuple(sorted(colors[j] for j in uppers[i])),
                )
                for i in range(n)
            ]
            palette = {s: k for k, s in enumerate(sorted(set(signature)))}
            new = [palette[s] for s in signature]
            if len(set(new)) == len(set(colors)):
                return new
            colors = new

    def isomorphism_to(self, other, *, max_size=1000):
        """An order isomorphism as a label map, or None."""
        if self.size != other.size:
            return None
        if self.size > max_size:
            raise SizeCap(f"isomorphic_to capped at {max_size} elements")
        n = self.size
        if n == 0:
            return {}
        mine = self._refined_colors()
        theirs = other._refined_colors()

        def classes(colors):
            out = {}
            for i, c in enumerate(colors):
                out.setdefault(c, []).append(i)
            return out

        mine_by_color = classes(mine)
        theirs_by_color = classes(theirs)
        if sorted((c, len(v)) for c, v in mine_by_color.items()) != sorted(
            (c, len(v)) for c, v in theirs_by_color.items()
        ):
            return None
        order = sorted(range(n), key=lambda i: (len(mine_by_color[mine[i]]), mine[i], i))
        lp = self._leq
        lq = other._leq
        match = [-1] * n
        used = [False] * n

        def backtrack(pos):
            if pos == n:
                return True
            i = order[pos]
            for j in theirs_by_color.get(mine[i], ()):
                if used[j]:
                    continue
                ok = True
                for qpos in range(pos):
                    k = order[qpos]
                    if lp[i, k] != lq[j, match[k]] or lp[k, i] != lq[match[k], j]:
                        ok = False
                        break
                if ok:
                    match[i] = j
                    used[j] = True
                    if backtrack(pos + 1):
                        return True
                    match[i] = -1
                    used[j] = False
            return False

        if not backtrack(0):
            return None
        return {self.labels[i]: other.labels[match[i]] for i in range(n)}

    def is_ranked(self):
        """True iff some rank function increases by exactly one on covers,
        componentwise on the cover graph."""
        n = self.size
        cov = self.cover_matrix()
        neighbours = [[] for _ in range(n)]
        for i, j in np.argwhere(cov):
            neighbours[int(i)].append((int(j), 1))
            neighbours[int(j)].append((int(i), -1))
        rank = [None] * n
        for start in range(n):
            if rank[start] is not None:
                continue
            rank[start] = 0
            queue = [start]
            while queue:
                v = queue.pop()
                for w, delta in neighbours[v]:
                    expected = rank[v] + delta
                    if rank[w] is None:
                        rank[w] = expected
                        queue.append(w)
                    elif rank[w] != expected:
                        return False
        return True

    # -- export ---------------------------------------------------------------

    def to_json_dict(self):
        return {
            "elements": [str(label) for label in self.labels],
            "covers": [[i, j] for i, j in self.cover_pairs()],
        }

    def to_dot(self, name="poset"):
        """Hasse diagram; edges run lower -> upper."""

        def quote(label):
            return '"' + str(label).replace("\\", "\\\\").replace('"', '\\"') + '"'

        lines = [f"digraph {name} {{", "  rankdir=BT;"]
        for label in self.labels:
            lines.append(f"  {quote(label)};")
        for i, j in self.cover_pairs():
            lines.append(f"  {quote(self.labels[i])} -> {quote(self.labels[j])};")
        lines.append("}")
        return "\n".join(lines)


def from_comparisons(elements, leq_predicate):
    return Poset.from_comparisons(elements, leq_predicate)


def covers(p: Poset):
    return p.cover_label_pairs()


def lattice_report(p: Poset, **kwargs):
    return p.lattice_report(**kwargs)


def order_ideals(p: Poset, **kwargs):
    return p.order_ideals(**kwargs)


def induced_subposet(p: Poset, keep):
    return p.induced(keep)


def isomorphic_to(p: Poset, q: Poset, **kwargs):
    return p.isomorphism_to(q, **kwargs)


def relations_subset(p: Poset, q: Poset):
    return p.relations_subset_of(q)


def is_ranked(p: Poset):
    return p.is_ranked()
