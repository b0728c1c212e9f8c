"""Factorization g = u * M * k against the pro-unipotent Iwahori.

Every invertible matrix over the local field factors with u unipotent
upper triangular, M monomial with entries unit * t^a, and k in the
pro-unipotent Iwahori subgroup.  The permutation, exponents and residue
units of M are invariants of the double coset U g I+, which is what the
Whittaker support tests consume.

Pivot rule: working through the rows bottom-up, the pivot of a row is
the leftmost entry of minimal valuation among the columns not yet used.
Clearing a column to the right of the pivot divides by an entry of no
larger valuation (integral coefficient), clearing to the left divides by
one of strictly larger valuation (coefficient in the maximal ideal);
those are precisely the constraints Iwahori membership of k puts on the
column operations, so no other pivot choice closes.
"""

from __future__ import annotations

from .errors import InsufficientPrecision, ZeroInput
from .laurent import LocalField
from .matrices import MatG


class MonomialClass:
    """Invariant data of U g I+: row i of the monomial representative has
    its single entry units[i] * t^exps[i] in column cols[i]."""

    __slots__ = ("field", "cols", "exps", "units")

    def __init__(self, field: LocalField, cols, exps, units):
        cols = tuple(cols)
        exps = tuple(exps)
        units = tuple(units)
        n = len(cols)
        if sorted(cols) != list(range(n)) or len(exps) != n or len(units) != n:
            raise ValueError("not a monomial shape")
        if any(not 1 <= c < field.residue.q for c in units):
            raise ValueError("units must be nonzero residues")
        self.field = field
        self.cols = cols
        self.exps = exps
        self.units = units

    @property
    def n(self) -> int:
        return len(self.cols)

    @classmethod
    def identity(cls, field: LocalField, n: int) -> MonomialClass:
        return cls(field, range(n), [0] * n, [1] * n)

    @classmethod
    def central(cls, field: LocalField, n: int, unit: int, exp: int) -> MonomialClass:
        return cls(field, range(n), [exp] * n, [unit] * n)

    @classmethod
    def rotation(cls, field: LocalField, n: int, pi_unit: int) -> MonomialClass:
        """The affine rotation: e_{i+1} -> e_i and e_1 -> (pi_unit t) e_n."""
        cols = [(i + 1) % n for i in range(n)]
        exps = [0] * (n - 1) + [1]
        units = [1] * (n - 1) + [pi_unit]
        return cls(field, cols, exps, units)

    def compose(self, other: MonomialClass) -> MonomialClass:
        if other.field is not self.field or other.n != self.n:
            raise ValueError("size or field mismatch")
        ff = self.field.residue
        cols, exps, units = [], [], []
        for i in range(self.n):
            c = self.cols[i]
            cols.append(other.cols[c])
            exps.append(self.exps[i] + other.exps[c])
            units.append(ff.mul(self.units[i], other.units[c]))
        return MonomialClass(self.field, cols, exps, units)

    def __pow__(self, k: int) -> MonomialClass:
        base = self if k >= 0 else self.inverse()
        out = MonomialClass.identity(self.field, self.n)
        for _ in range(abs(k)):
            out = out.compose(base)
        return out

    def inverse(self) -> MonomialClass:
        ff = self.field.residue
        cols = [0] * self.n
        exps = [0] * self.n
        units = [1] * self.n
        for i in range(self.n):
            cols[self.cols[i]] = i
            exps[self.cols[i]] = -self.exps[i]
            units[self.cols[i]] = ff.inv(self.units[i])
        return MonomialClass(self.field, cols, exps, units)

    def as_matrix(self) -> MatG:
        f = self.field
        rows = [[f.zero() for _ in range(self.n)] for _ in range(self.n)]
        for i in range(self.n):
            rows[i][self.cols[i]] = f.elem(self.exps[i], (self.units[i],))
        return MatG(f, rows)

    def inverse_matrix(self) -> MatG:
        f = self.field
        ff = f.residue
        rows = [[f.zero() for _ in range(self.n)] for _ in range(self.n)]
        for i in range(self.n):
            rows[self.cols[i]][i] = f.elem(-self.exps[i], (ff.inv(self.units[i]),))
        return MatG(f, rows)

    def match_rotation_times_central(self, pi_unit: int) -> tuple[int, int, int] | None:
        """Solve self = rotation^r * central(s, d); None when impossible."""
        ff = self.field.residue
        n = self.n
        for r in range(n):
            rot = MonomialClass.rotation(self.field, n, pi_unit) ** r
            if rot.cols != self.cols:
                continue
            ds = {self.exps[i] - rot.exps[i] for i in range(n)}
            ss = {ff.mul(self.units[i], ff.inv(rot.units[i])) for i in range(n)}
            if len(ds) == 1 and len(ss) == 1:
                return r, ss.pop(), ds.pop()
            return None
        return None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialClass):
            return NotImplemented
        return (
            self.field is other.field
            and self.cols == other.cols
            and self.exps == other.exps
            and self.units == other.units
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"MonomialClass(cols={self.cols}, exps={self.exps}, units={self.units})"

    def to_json(self) -> dict:
        return {"perm": list(self.cols), "exps": list(self.exps), "units": list(self.units)}


def decompose(g: MatG, prec: int | None = None) -> tuple[MatG, MonomialClass, MatG]:
    """Factor g = u * M * k; raises when the precision cannot support it.

    u comes back exactly unipotent upper triangular, k verified inside
    the pro-unipotent Iwahori at the precision the entries carry.
    """
    field = g.field
    n = g.n
    if prec is not None:
        g = g.truncate(prec)
    A = [list(row) for row in g.rows]
    one, zero = field.one(), field.zero()
    u_rows = [[one if i == j else zero for j in range(n)] for i in range(n)]
    k_rows = [[one if i == j else zero for j in range(n)] for i in range(n)]
    used: set[int] = set()
    pivots: dict[int, int] = {}

    for i in range(n - 1, -1, -1):
        best_val, piv = None, None
        fuzzy = []
        for j in range(n):
            if j in used:
                continue
            e = A[i][j]
            if e.coeffs:
                if best_val is None or e.val < best_val:
                    best_val, piv = e.val, j
            elif e.prec is not None:
                fuzzy.append((e.prec, j))
        if piv is None:
            raise ZeroInput(f"row {i} has no visible entry; not invertible here")
        for bound, j in fuzzy:
            if bound <= best_val:
                raise InsufficientPrecision(
                    f"entry ({i},{j}) is O(t^{bound}) and could undercut the "
                    f"pivot of valuation {best_val}"
                )
        pe = A[i][piv]
        for j in range(n):
            if j == piv or j in used:
                continue
            e = A[i][j]
            if e.is_zero_at_prec():
                continue
            c = e / pe
            assert c.has_val_at_least(1 if j < piv else 0)
            for r2 in range(n):
                A[r2][j] = A[r2][j] - c * A[r2][piv]
            # column op was R = I - c E(piv,j); fold R^-1 into k from the left
            k_rows[piv] = [k_rows[piv][m] + c * k_rows[j][m] for m in range(n)]
        for i2 in range(i):
            e = A[i2][piv]
            if e.is_zero_at_prec():
                continue
            c = e / pe
            for m in range(n):
                A[i2][m] = A[i2][m] - c * A[i][m]
            # row op was L = I - c E(i2,i); fold L^-1 into u from the right
            for r2 in range(n):
                u_rows[r2][i] = u_rows[r2][i] + c * u_rows[r2][i2]
        used.add(piv)
        pivots[i] = piv

    cols = [pivots[i] for i in range(n)]
    exps, units = [], []
    for i in range(n):
        v, c = A[i][cols[i]].leading()
        exps.append(v)
        units.append(c)
    mono = MonomialClass(field, cols, exps, units)
    # whatever tail the pivots carry beyond their leading term belongs to k
    k2 = mono.inverse_matrix() * MatG(field, A)
    k_total = k2 * MatG(field, k_rows)
    if not k_total.in_pro_unipotent_iwahori():
        raise AssertionError("internal: k factor left the Iwahori subgroup")
    return MatG(field, u_rows), mono, k_total
