"""Truncated Laurent series over a finite residue field.

Two flavours of local field live here: the base field, formal Laurent
series in t over F_q, and a totally ramified extension of degree n whose
variable u satisfies u^n = u0*t for a fixed residue unit u0.  Carrying u0
in the defining relation (instead of insisting on u^n = t) lets the
extension be generated by an n-th root of an arbitrary uniformizer u0*t
of the base field.

Precision is absolute and explicit.  An element knows its coefficients at
all exponents below ``prec``; ``prec=None`` means exact.  Any operation
that would have to read an unknown coefficient raises
InsufficientPrecision instead of guessing.
"""

from __future__ import annotations

import itertools

from .errors import InsufficientPrecision, ZeroInput
from .finitefield import FiniteField, field_of_size

# Relative series precision used when inverting an exact element that is
# not a monomial.  The result is reported with a finite precision, so the
# truncation stays visible downstream.
DEFAULT_REL_PREC = 16


def _min_prec(a: int | None, b: int | None) -> int | None:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def _shift_prec(p: int | None, k: int | None) -> int | None:
    # p + k with None acting as +infinity
    if p is None or k is None:
        return None
    return p + k


class LaurentElem:
    """One Laurent series, normalized so coeffs has no leading or trailing
    zeros and stores nothing at or beyond prec."""

    __slots__ = ("field", "val", "coeffs", "prec")

    def __init__(self, field: LocalField, val: int, coeffs, prec: int | None = None):
        cs = list(coeffs)
        if prec is not None:
            keep = prec - val
            if keep < len(cs):
                cs = cs[: max(keep, 0)]
        while cs and cs[0] == 0:
            cs.pop(0)
            val += 1
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.val = val if cs else 0
        self.coeffs = tuple(cs)
        self.prec = prec

    # ----- inspection ---------------------------------------------------
    def is_exact_zero(self) -> bool:
        return not self.coeffs and self.prec is None

    def is_zero_at_prec(self) -> bool:
        """No visible term.  Either exact zero or everything below prec is 0."""
        return not self.coeffs

    def val_bound(self) -> int | None:
        """A lower bound for the valuation; None means +infinity."""
        if self.coeffs:
            return self.val
        return self.prec

    def leading(self) -> tuple[int, int]:
        if self.coeffs:
            return self.val, self.coeffs[0]
        if self.prec is None:
            raise ZeroInput("exact zero has no leading term")
        raise InsufficientPrecision(
            f"no visible term below O({self.field.var}^{self.prec})"
        )

    def valuation(self) -> int:
        return self.leading()[0]

    def has_val_at_least(self, k: int) -> bool:
        """Decide val >= k, or raise if the known digits cannot decide."""
        if self.coeffs:
            return self.val >= k
        if self.prec is None or self.prec >= k:
            return True
        raise InsufficientPrecision(
            f"cannot decide valuation >= {k} from O({self.field.var}^{self.prec})"
        )

    def coeff_at(self, k: int) -> int:
        if self.prec is not None and k >= self.prec:
            raise InsufficientPrecision(
                f"coefficient at {self.field.var}^{k} lies beyond "
                f"O({self.field.var}^{self.prec})"
            )
        if not self.coeffs or k < self.val:
            return 0
        i = k - self.val
        return self.coeffs[i] if i < len(self.coeffs) else 0

    # ----- arithmetic ---------------------------------------------------
    def _require_same(self, other: LaurentElem) -> None:
        if not isinstance(other, LaurentElem) or other.field is not self.field:
            raise TypeError("operands live in different fields")

    def __add__(self, other: LaurentElem) -> LaurentElem:
        self._require_same(other)
        ff = self.field.residue
        prec = _min_prec(self.prec, other.prec)
        terms: dict[int, int] = {}
        for x in (self, other):
            for i, c in enumerate(x.coeffs):
                e = x.val + i
                if prec is not None and e >= prec:
                    continue
                terms[e] = ff.add(terms.get(e, 0), c)
        return self.field._from_dict(terms, prec)

    def __neg__(self) -> LaurentElem:
        ff = self.field.residue
        return LaurentElem(self.field, self.val, [ff.neg(c) for c in self.coeffs], self.prec)

    def __sub__(self, other: LaurentElem) -> LaurentElem:
        return self + (-other)

    def __mul__(self, other: LaurentElem) -> LaurentElem:
        self._require_same(other)
        ff = self.field.residue
        prec = _min_prec(
            _shift_prec(self.prec, other.val_bound()),
            _shift_prec(other.prec, self.val_bound()),
        )
        terms: dict[int, int] = {}
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            ea = self.val + i
            for j, b in enumerate(other.coeffs):
                if b == 0:
                    continue
                e = ea + other.val + j
                if prec is not None and e >= prec:
                    continue
                terms[e] = ff.add(terms.get(e, 0), ff.mul(a, b))
        return self.field._from_dict(terms, prec)

    def scale(self, c: int) -> LaurentElem:
        """Multiply by the residue element c."""
        ff = self.field.residue
        return LaurentElem(self.field, self.val, [ff.mul(c, a) for a in self.coeffs], self.prec)

    def shift(self, k: int) -> LaurentElem:
        """Multiply by the k-th power of the series variable."""
        return LaurentElem(self.field, self.val + k, self.coeffs, _shift_prec(self.prec, k))

    def inverse(self, rel_prec: int | None = None) -> LaurentElem:
        """Multiplicative inverse.

        Exact monomials invert exactly.  Otherwise the result carries
        finite precision: all the input offers, or DEFAULT_REL_PREC
        relative digits for exact input (override with rel_prec).
        """
        v, c0 = self.leading()
        ff = self.field.residue
        inv0 = ff.inv(c0)
        if len(self.coeffs) == 1 and self.prec is None:
            return LaurentElem(self.field, -v, (inv0,), None)
        if self.prec is not None:
            rel = self.prec - v
        else:
            rel = rel_prec if rel_prec is not None else DEFAULT_REL_PREC
        # write self = c0 * var^v * (1 + w), invert the one-unit by the
        # recurrence b_0 = 1, b_k = -sum_{j>=1} w_j b_{k-j}
        w = [ff.mul(self.coeff_at(v + i), inv0) for i in range(rel)]
        b = [1] + [0] * (rel - 1)
        for k in range(1, rel):
            acc = 0
            for j in range(1, k + 1):
                acc = ff.add(acc, ff.mul(w[j], b[k - j]))
            b[k] = ff.neg(acc)
        coeffs = [ff.mul(inv0, bk) for bk in b]
        return LaurentElem(self.field, -v, coeffs, -v + rel)

    def __truediv__(self, other: LaurentElem) -> LaurentElem:
        self._require_same(other)
        return self * other.inverse()

    def __pow__(self, k: int) -> LaurentElem:
        base = self
        if k < 0:
            base = self.inverse()
            k = -k
        out = self.field.one()
        acc = base
        while k:
            if k & 1:
                out = out * acc
            acc = acc * acc
            k >>= 1
        return out

    def truncate(self, prec: int) -> LaurentElem:
        return LaurentElem(self.field, self.val, self.coeffs, _min_prec(self.prec, prec))

    # ----- comparison ---------------------------------------------------
    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentElem):
            return NotImplemented
        return (
            self.field is other.field
            and self.val == other.val
            and self.coeffs == other.coeffs
            and self.prec == other.prec
        )

    __hash__ = None  # precision semantics make hashing a trap

    def agrees(self, other: LaurentElem) -> bool:
        """Equality of every coefficient both sides claim to know."""
        self._require_same(other)
        prec = _min_prec(self.prec, other.prec)
        exps = set()
        for x in (self, other):
            for i in range(len(x.coeffs)):
                e = x.val + i
                if prec is None or e < prec:
                    exps.add(e)
        return all(self.coeff_at(e) == other.coeff_at(e) for e in exps)

    def __repr__(self) -> str:
        var = self.field.var
        if not self.coeffs:
            body = "0"
        else:
            parts = []
            for i, c in enumerate(self.coeffs):
                if c == 0:
                    continue
                e = self.val + i
                if e == 0:
                    parts.append(f"{c}")
                elif e == 1:
                    parts.append(f"{c}*{var}" if c != 1 else var)
                else:
                    parts.append(f"{c}*{var}^{e}" if c != 1 else f"{var}^{e}")
            body = " + ".join(parts)
        tail = "" if self.prec is None else f" + O({var}^{self.prec})"
        return f"<{body}{tail}>"


class LocalField:
    """Either the Laurent series field over F_q or one fixed totally
    ramified extension of it.

    The extension of degree n is F[u] with u^n = u0*t, available only for
    n prime to the residue characteristic.
    """

    def __init__(
        self,
        residue: FiniteField,
        degree: int = 1,
        pi_unit: int = 1,
        base: LocalField | None = None,
        name: str | None = None,
    ):
        self.residue = residue
        self.degree = degree
        self.pi_unit = pi_unit
        self.base = base
        self.name = name or ("F" if base is None else "E")
        self.var = "t" if base is None else "u"
        self._extensions: dict[tuple[int, int], LocalField] = {}

    # fields are immutable configuration, so constructors hand out shared
    # instances; element ownership checks then agree across call sites
    _base_fields: dict[int, LocalField] = {}

    @classmethod
    def base_field(cls, q: int) -> LocalField:
        out = cls._base_fields.get(q)
        if out is None:
            out = cls._base_fields[q] = cls(field_of_size(q))
        return out

    def extension(self, n: int, pi_unit: int = 1) -> LocalField:
        if self.base is not None:
            raise ValueError("towers of extensions are not supported")
        if n < 1:
            raise ValueError("degree must be positive")
        if n % self.residue.p == 0:
            raise ValueError("residue characteristic must not divide the degree")
        if not 1 <= pi_unit < self.residue.q:
            raise ValueError("pi_unit must be a nonzero residue element")
        out = self._extensions.get((n, pi_unit))
        if out is None:
            out = LocalField(self.residue, n, pi_unit, base=self, name="E")
            self._extensions[(n, pi_unit)] = out
        return out

    # ----- element constructors ----------------------------------------
    def elem(self, val: int, coeffs, prec: int | None = None) -> LaurentElem:
        return LaurentElem(self, val, coeffs, prec)

    def _from_dict(self, terms: dict[int, int], prec: int | None) -> LaurentElem:
        live = {e: c for e, c in terms.items() if c != 0}
        if not live:
            return LaurentElem(self, 0, (), prec)
        lo = min(live)
        hi = max(live)
        coeffs = [live.get(e, 0) for e in range(lo, hi + 1)]
        return LaurentElem(self, lo, coeffs, prec)

    def zero(self, prec: int | None = None) -> LaurentElem:
        return LaurentElem(self, 0, (), prec)

    def one(self) -> LaurentElem:
        return LaurentElem(self, 0, (1,))

    def scalar(self, c: int) -> LaurentElem:
        """Constant series with residue coefficient c (already encoded)."""
        if not 0 <= c < self.residue.q:
            raise ValueError(f"{c} is not a residue element")
        return LaurentElem(self, 0, (c,))

    def from_int(self, k: int) -> LaurentElem:
        return self.scalar(self.residue.scalar(k))

    def variable(self) -> LaurentElem:
        return LaurentElem(self, 1, (1,))

    # ----- extension structure ------------------------------------------
    def from_base(self, x: LaurentElem) -> LaurentElem:
        """Image of a base-field element in the extension: t = u0^-1 u^n."""
        if self.base is None:
            raise ValueError("base field has no smaller field to embed")
        if x.field is not self.base:
            raise TypeError("argument does not live in the base field")
        ff, n, u0 = self.residue, self.degree, self.pi_unit
        terms: dict[int, int] = {}
        for i, c in enumerate(x.coeffs):
            k = x.val + i
            if c:
                terms[n * k] = ff.mul(c, ff.pow(u0, -k))
        prec = None if x.prec is None else n * x.prec
        return self._from_dict(terms, prec)

    def trace_to_base(self, x: LaurentElem) -> LaurentElem:
        """Trace to the base field via the regular representation.

        In the basis 1, u, ..., u^{n-1} only coefficients of x at
        exponents divisible by n hit the diagonal, each contributing on
        all n basis lines, so the diagonal never has to be materialized.
        """
        if self.base is None:
            return x
        if x.field is not self:
            raise TypeError("argument does not live in this field")
        ff, n, u0 = self.residue, self.degree, self.pi_unit
        terms: dict[int, int] = {}
        for k, c in enumerate(x.coeffs):
            e = x.val + k
            if c and e % n == 0:
                m = e // n
                contrib = ff.mul(c, ff.pow(u0, m))
                terms[m] = ff.add(terms.get(m, 0), ff.scalar_mul(n, contrib))
        prec = None if x.prec is None else -(-x.prec // n)
        return self.base._from_dict(terms, prec)

    def mult_matrix(self, x: LaurentElem) -> list[list[LaurentElem]]:
        """Matrix of multiplication by x on the basis 1, u, ..., u^{n-1},
        with entries in the base field."""
        if self.base is None:
            raise ValueError("multiplication matrices live over the base field")
        if x.field is not self:
            raise TypeError("argument does not live in this field")
        ff, n, u0 = self.residue, self.degree, self.pi_unit
        dicts = [[{} for _ in range(n)] for _ in range(n)]
        for j in range(n):
            for k, c in enumerate(x.coeffs):
                if c == 0:
                    continue
                m, r = divmod(x.val + k + j, n)
                d = dicts[r][j]
                d[m] = ff.add(d.get(m, 0), ff.mul(c, ff.pow(u0, m)))
        out = []
        for r in range(n):
            row = []
            for j in range(n):
                prec = None if x.prec is None else -(-(x.prec + j - r) // n)
                row.append(self.base._from_dict(dicts[r][j], prec))
            out.append(row)
        return out

    def norm_to_base(self, x: LaurentElem) -> LaurentElem:
        """Norm to the base field: determinant of the regular representation."""
        if self.base is None:
            return x
        mat = self.mult_matrix(x)
        n = self.degree
        total = self.base.zero()
        for perm in itertools.permutations(range(n)):
            sign = 1
            for i in range(n):
                for j in range(i + 1, n):
                    if perm[i] > perm[j]:
                        sign = -sign
            prod = self.base.one()
            for i in range(n):
                prod = prod * mat[i][perm[i]]
            total = total + (prod if sign == 1 else -prod)
        return total

    # ----- coset representatives ----------------------------------------
    def unit_reps(self, m: int) -> list[LaurentElem]:
        """Representatives of the unit group modulo one-units of depth m."""
        if m < 1:
            raise ValueError("depth must be at least 1")
        ff = self.residue
        out = []
        for c0 in ff.units():
            for tail in itertools.product(range(ff.q), repeat=m - 1):
                out.append(self.elem(0, (c0,) + tail))
        return out

    def integer_reps(self, lo: int, hi: int) -> list[LaurentElem]:
        """All truncated series supported on exponents lo <= e < hi."""
        ff = self.residue
        width = hi - lo
        if width < 0:
            raise ValueError("empty exponent window")
        out = []
        for digits in itertools.product(range(ff.q), repeat=width):
            out.append(self.elem(lo, digits))
        return out

    # ----- serialization -------------------------------------------------
    def elem_to_json(self, x: LaurentElem) -> dict:
        data = {
            "field": self.name,
            "n": self.degree,
            "val": x.val,
            "coeffs": list(x.coeffs),
        }
        if x.prec is not None:
            data["prec"] = x.prec
        return data

    def elem_from_json(self, data: dict) -> LaurentElem:
        if data.get("field") != self.name or data.get("n") != self.degree:
            raise ValueError("element encoding does not match this field")
        return self.elem(data["val"], data["coeffs"], data.get("prec"))

    def __repr__(self) -> str:
        if self.base is None:
            return f"LocalField(F_{self.residue.q}(({self.var})))"
        return (
            f"LocalField(F_{self.residue.q}((t))[u]/"
            f"(u^{self.degree} - {self.pi_unit}*t))"
        )
