"""Concatenation operators on partition-tuple bases.

For an integer partition (l_1, ..., l_r) of n, the tuple basis consists of
all tuples of integer partitions of the parts.  The downward operator
sends a basis vector indexed by a partition mu of n to the sum of tuples
whose sorted concatenation is mu; its dual sends each tuple to the single
vector indexed by that concatenation.  The downward matrix is triangular:
the mu row vanishes unless mu precedes the indexing partition in the
merge order.

The change of basis between the two families is not pinned down by a
single matrix entry and is deliberately not implemented here.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .partitions import IntegerPartition, integer_partitions, preceq


def tuple_basis(shape: IntegerPartition) -> tuple:
    """All tuples (nu_1, ..., nu_r) with nu_i a partition of shape[i]."""
    return tuple(product(*(integer_partitions(p) for p in shape)))


def concat_sorted(tup) -> IntegerPartition:
    out = [p for part in tup for p in part]
    return tuple(sorted(out, reverse=True))


@dataclass(frozen=True)
class LabeledMatrix:
    rows: tuple
    cols: tuple
    entries: tuple  # tuple of row tuples, integers

    def entry(self, r, c) -> int:
        return self.entries[self.rows.index(r)][self.cols.index(c)]

    def to_json(self) -> dict:
        def fmt(x):
            if isinstance(x, tuple) and x and isinstance(x[0], tuple):
                return ";".join(",".join(str(p) for p in part) for part in x)
            return ",".join(str(p) for p in x)
        return {
            "rows": [fmt(r) for r in self.rows],
            "cols": [fmt(c) for c in self.cols],
            "matrix": [list(row) for row in self.entries],
        }


def phi_matrix(shape: IntegerPartition) -> LabeledMatrix:
    """Rows indexed by partitions mu of n, columns by tuples; the mu row
    marks every tuple with sorted concatenation mu."""
    n = sum(shape)
    rows = integer_partitions(n)
    cols = tuple_basis(shape)
    entries = tuple(tuple(1 if concat_sorted(t) == mu else 0 for t in cols)
                    for mu in rows)
    return LabeledMatrix(rows, cols, entries)


def dual_phi_matrix(shape: IntegerPartition) -> LabeledMatrix:
    """Columns indexed by tuples, each sent to the single dual vector of
    its sorted concatenation; every column is a unit vector."""
    n = sum(shape)
    rows = integer_partitions(n)
    cols = tuple_basis(shape)
    entries = tuple(tuple(1 if concat_sorted(t) == mu else 0 for t in cols)
                    for mu in rows)
    return LabeledMatrix(rows, cols, entries)


def check_triangularity(nmax: int):
    """The mu row of the downward matrix vanishes whenever mu does not
    precede the shape in the merge order; checked for all shapes and mu
    with n <= nmax."""
    from .algebra import Report
    rep = Report()
    for n in range(1, nmax + 1):
        for shape in integer_partitions(n):
            m = phi_matrix(shape)
            for i, mu in enumerate(m.rows):
                if not preceq(mu, shape):
                    ok = all(x == 0 for x in m.entries[i])
                    rep.record(ok, "nonzero row at mu=%r, shape=%r" % (mu, shape))
                else:
                    rep.checked += 1
    return rep


def check_column_sums(nmax: int):
    """Every tuple concatenates to exactly one partition."""
    from .algebra import Report
    rep = Report()
    for n in range(1, nmax + 1):
        for shape in integer_partitions(n):
            m = dual_phi_matrix(shape)
            for j in range(len(m.cols)):
                s = sum(m.entries[i][j] for i in range(len(m.rows)))
                rep.record(s == 1, "column sum %d at shape=%r" % (s, shape))
    return rep
