"""Small dense matrices over a local field.

Group elements in this laboratory are n-by-n with n at most 6, so the
representation is a plain tuple of tuples of series and every algorithm
is the naive one.  Precision rides along on the entries.
"""

from __future__ import annotations

import itertools

from .errors import ZeroInput
from .laurent import LaurentElem, LocalField


class MatG:
    """An n-by-n matrix with Laurent series entries."""

    __slots__ = ("field", "rows")

    def __init__(self, field: LocalField, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        for r in rows:
            if len(r) != n:
                raise ValueError("matrix must be square")
            for x in r:
                if not isinstance(x, LaurentElem) or x.field is not field:
                    raise TypeError("entries must be series over the given field")
        self.field = field
        self.rows = rows

    @classmethod
    def identity(cls, field: LocalField, n: int) -> MatG:
        one, zero = field.one(), field.zero()
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> LaurentElem:
        return self.rows[i][j]

    def __mul__(self, other: MatG) -> MatG:
        if not isinstance(other, MatG) or other.field is not self.field:
            raise TypeError("matrix product requires matching fields")
        n = self.n
        if other.n != n:
            raise ValueError("size mismatch")
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = self.field.zero()
                for k in range(n):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            out.append(row)
        return MatG(self.field, out)

    def scale(self, x: LaurentElem) -> MatG:
        return MatG(self.field, [[x * e for e in row] for row in self.rows])

    def truncate(self, prec: int) -> MatG:
        return MatG(self.field, [[e.truncate(prec) for e in row] for row in self.rows])

    def transpose(self) -> MatG:
        return MatG(self.field, list(zip(*self.rows)))

    def det(self) -> LaurentElem:
        n = self.n
        total = self.field.zero()
        for perm in itertools.permutations(range(n)):
            sign = 1
            for i in range(n):
                for j in range(i + 1, n):
                    if perm[i] > perm[j]:
                        sign = -sign
            prod = self.field.one()
            for i in range(n):
                prod = prod * self.rows[i][perm[i]]
            total = total + (prod if sign == 1 else -prod)
        return total

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MatG):
            return NotImplemented
        return self.field is other.field and self.rows == other.rows

    __hash__ = None

    def agrees(self, other: MatG) -> bool:
        return self.n == other.n and all(
            a.agrees(b) for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb)
        )

    # ----- membership tests ---------------------------------------------
    def is_upper_unipotent(self) -> bool:
        """Exactly unipotent upper triangular."""
        one, n = self.field.one(), self.n
        for i in range(n):
            if not (self.rows[i][i] == one or self.rows[i][i].agrees(one)):
                return False
            for j in range(i):
                if not self.rows[i][j].is_zero_at_prec():
                    return False
        return True

    def in_pro_unipotent_iwahori(self) -> bool:
        """Diagonal in 1+p, above-diagonal entries integral, below in p.

        Raises InsufficientPrecision when the known digits cannot decide.
        """
        n = self.n
        one = self.field.one()
        for i in range(n):
            for j in range(n):
                e = self.rows[i][j]
                if i == j:
                    if not (e - one).has_val_at_least(1):
                        return False
                elif i < j:
                    if not e.has_val_at_least(0):
                        return False
                else:
                    if not e.has_val_at_least(1):
                        return False
        return True

    def superdiagonal_residues(self) -> list[int]:
        return [self.rows[i][i + 1].coeff_at(0) for i in range(self.n - 1)]

    def __repr__(self) -> str:
        body = "\n ".join("[" + ", ".join(repr(e) for e in row) + "]" for row in self.rows)
        return f"MatG(\n {body})"

    def to_json(self) -> dict:
        return {
            "size": self.n,
            "entries": [[self.field.elem_to_json(e) for e in row] for row in self.rows],
        }


def upper_unipotent(field: LocalField, n: int, above: dict[tuple[int, int], LaurentElem]) -> MatG:
    """Unipotent upper triangular matrix with given above-diagonal entries."""
    rows = [[field.one() if i == j else field.zero() for j in range(n)] for i in range(n)]
    for (i, j), x in above.items():
        if not i < j:
            raise ValueError("entries must sit above the diagonal")
        rows[i][j] = x
    return MatG(field, rows)


def diagonal(field: LocalField, entries) -> MatG:
    entries = list(entries)
    n = len(entries)
    rows = [[entries[i] if i == j else field.zero() for j in range(n)] for i in range(n)]
    return MatG(field, rows)


def central(field: LocalField, n: int, z: LaurentElem) -> MatG:
    if z.is_zero_at_prec():
        raise ZeroInput("central element must be invertible")
    return diagonal(field, [z] * n)
