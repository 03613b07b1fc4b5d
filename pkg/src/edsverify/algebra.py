"""Exact scalar arithmetic: sparse multivariate polynomials over Q and
localized fractions whose denominators are monomials in declared-nonzero atoms.

A monomial is a sorted tuple of (variable-name, exponent) pairs; a Poly maps
monomials to nonzero Fraction coefficients.  LocFrac is Poly / product of atom
powers, normalized so that no atom divides numerator and denominator at once.
Equality of fractions is decided by cross-multiplication.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key
from math import gcd
from typing import Mapping, Union

Monomial = tuple  # tuple[tuple[str, int], ...], sorted by variable name
Coeff = Union[int, Fraction]

ONE_MONO: Monomial = ()


class AlgebraError(Exception):
    pass


class NonUnitError(AlgebraError):
    """A fraction whose numerator is not rational-times-atom-monomial was
    asked for its inverse."""

    def __init__(self, msg, factor=None):
        super().__init__(msg)
        self.factor = factor


class SingularMatrixError(AlgebraError):
    def __init__(self, msg, determinant=None):
        super().__init__(msg)
        self.determinant = determinant


def _as_fraction(c: Coeff) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for name, e in b:
        d[name] = d.get(name, 0) + e
    return tuple(sorted((n, e) for n, e in d.items() if e))


def mono_div(a: Monomial, b: Monomial):
    """a / b, or None when b does not divide a."""
    d = dict(a)
    for name, e in b:
        r = d.get(name, 0) - e
        if r < 0:
            return None
        if r:
            d[name] = r
        else:
            d.pop(name, None)
    return tuple(sorted(d.items()))


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _mono_cmp(a: Monomial, b: Monomial) -> int:
    """Graded lexicographic order (variables in name order, missing = 0).

    A genuine monomial order: compatible with multiplication, so exact
    division by leading-term reduction terminates."""
    da, db = mono_degree(a), mono_degree(b)
    if da != db:
        return -1 if da < db else 1
    ia = ib = 0
    while ia < len(a) or ib < len(b):
        na = a[ia][0] if ia < len(a) else None
        nb = b[ib][0] if ib < len(b) else None
        if na == nb:
            ea, eb = a[ia][1], b[ib][1]
            if ea != eb:
                return 1 if ea > eb else -1
            ia += 1
            ib += 1
        elif nb is None or (na is not None and na < nb):
            return 1
        else:
            return -1
    return 0


_grlex_key = cmp_to_key(_mono_cmp)


class Poly:
    """Sparse multivariate polynomial with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Coeff] | None = None):
        t = {}
        if terms:
            for m, c in terms.items():
                c = _as_fraction(c)
                if c:
                    t[tuple(sorted(m))] = c
        self.terms = t

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return Poly()

    @staticmethod
    def const(c: Coeff) -> "Poly":
        c = _as_fraction(c)
        return Poly({ONE_MONO: c}) if c else Poly()

    @staticmethod
    def var(name: str, exp: int = 1) -> "Poly":
        return Poly({((name, exp),): Fraction(1)})

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        t = dict(self.terms)
        for m, c in other.terms.items():
            s = t.get(m, Fraction(0)) + c
            if s:
                t[m] = s
            else:
                t.pop(m, None)
        out = Poly.__new__(Poly)
        out.terms = t
        return out

    __radd__ = __add__

    def __neg__(self):
        out = Poly.__new__(Poly)
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        t = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                s = t.get(m, Fraction(0)) + c1 * c2
                if s:
                    t[m] = s
                else:
                    t.pop(m, None)
        out = Poly.__new__(Poly)
        out.terms = t
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise AlgebraError("negative polynomial power")
        out = Poly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- queries -----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def variables(self) -> set:
        out = set()
        for m in self.terms:
            for n, _ in m:
                out.add(n)
        return out

    def total_degree(self) -> int:
        return max((mono_degree(m) for m in self.terms), default=0)

    def leading(self):
        """(monomial, coefficient) maximal under graded lex."""
        if not self.terms:
            raise AlgebraError("zero polynomial has no leading term")
        m = max(self.terms, key=_grlex_key)
        return m, self.terms[m]

    def as_constant(self):
        """The Fraction value of a constant polynomial, else None."""
        if not self.terms:
            return Fraction(0)
        if len(self.terms) == 1 and ONE_MONO in self.terms:
            return self.terms[ONE_MONO]
        return None

    def coefficient_of(self, name: str, exp: int = 1) -> "Poly":
        """Coefficient polynomial of name**exp among terms with that exact
        power of `name`."""
        t = {}
        for m, c in self.terms.items():
            d = dict(m)
            if d.get(name, 0) == exp:
                d.pop(name, None)
                t[tuple(sorted(d.items()))] = c
        return Poly(t)

    def evaluate(self, values: Mapping[str, Coeff]) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for n, e in m:
                v = v * _as_fraction(values[n]) ** e
            total += v
        return total

    # -- division and normal form ------------------------------------------

    def div_exact(self, divisor: "Poly"):
        """Exact quotient self/divisor, or None when division leaves a
        remainder.  Single-divisor reduction by the graded-lex leading term."""
        if divisor.is_zero():
            raise AlgebraError("division by zero polynomial")
        lm, lc = divisor.leading()
        rem = self
        quot = {}
        while rem.terms:
            m, c = rem.leading()
            q = mono_div(m, lm)
            if q is None:
                return None
            qc = c / lc
            quot[q] = quot.get(q, Fraction(0)) + qc
            rem = rem - Poly({q: qc}) * divisor
        return Poly(quot)

    def content(self):
        """(rational content, monomial content) with the rational carrying
        the sign of the graded-lex leading coefficient."""
        if not self.terms:
            return Fraction(0), ONE_MONO
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, c.numerator)
            den = den * c.denominator // gcd(den, c.denominator)
        common = None
        for m in self.terms:
            d = dict(m)
            if common is None:
                common = d
            else:
                common = {n: min(e, common[n]) for n, e in d.items() if n in common}
            if not common:
                common = {}
                break
        mono = tuple(sorted((n, e) for n, e in (common or {}).items() if e))
        _, lc = self.leading()
        sign = 1 if lc > 0 else -1
        return Fraction(sign * num, den), mono

    def normalized(self):
        """(content Fraction, content Monomial, primitive sign-normalized Poly)
        with self == content * monomial * primitive."""
        if not self.terms:
            return Fraction(0), ONE_MONO, Poly()
        c, mono = self.content()
        t = {}
        for m, coeff in self.terms.items():
            t[mono_div(m, mono)] = coeff / c
        return c, mono, Poly(t)

    # -- presentation --------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[m]
            factors = []
            if abs(c) != 1 or not m:
                factors.append(str(abs(c)))
            for n, e in m:
                factors.append(n if e == 1 else f"{n}^{e}")
            piece = "*".join(factors)
            parts.append(("- " if c < 0 else "+ ") + piece)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    __repr__ = __str__


def _coerce(x):
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Fraction)):
        return Poly.const(x)
    return NotImplemented


# ---------------------------------------------------------------------------
# Declared-nonzero atoms and localized fractions
# ---------------------------------------------------------------------------

LAM = Poly.var("lam")
SIG = Poly.var("sig")

#: pairwise coprime irreducible polynomials allowed in denominators
ATOMS: dict = {
    "lam": LAM,
    "sig": SIG,
    "mu+": 2 * SIG + LAM,
    "mu-": 2 * SIG - LAM,
    "lam3": Poly.var("lam3"),
}

ATOM_ORDER = tuple(ATOMS)


def register_atom(name: str, poly: Poly) -> None:
    if name in ATOMS and ATOMS[name] != poly:
        raise AlgebraError(f"atom {name!r} already registered differently")
    ATOMS[name] = poly


class LocFrac:
    """Poly / monomial-in-atoms, kept in normal form (no atom divides both
    numerator and denominator)."""

    __slots__ = ("num", "den")

    def __init__(self, num, den: Mapping[str, int] | None = None):
        if isinstance(num, (int, Fraction)):
            num = Poly.const(num)
        d = {}
        for name, e in (den or {}).items():
            if name not in ATOMS:
                raise AlgebraError(f"denominator atom {name!r} is not registered nonzero")
            if e < 0:
                raise AlgebraError("negative denominator exponent")
            if e:
                d[name] = e
        self.num, self.den = _normalize(num, d)

    @staticmethod
    def from_poly(p: Poly) -> "LocFrac":
        return LocFrac(p)

    @staticmethod
    def atom(name: str) -> "LocFrac":
        return LocFrac(ATOMS[name])

    def den_poly(self) -> Poly:
        p = Poly.const(1)
        for name, e in self.den.items():
            p = p * ATOMS[name] ** e
        return p

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = _coerce_frac(other)
        if other is NotImplemented:
            return NotImplemented
        den = dict(self.den)
        for n, e in other.den.items():
            den[n] = max(den.get(n, 0), e)
        a = self.num
        for n, e in den.items():
            extra = e - self.den.get(n, 0)
            if extra:
                a = a * ATOMS[n] ** extra
        b = other.num
        for n, e in den.items():
            extra = e - other.den.get(n, 0)
            if extra:
                b = b * ATOMS[n] ** extra
        return LocFrac(a + b, den)

    __radd__ = __add__

    def __neg__(self):
        out = LocFrac.__new__(LocFrac)
        out.num, out.den = -self.num, dict(self.den)
        return out

    def __sub__(self, other):
        other = _coerce_frac(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce_frac(other) - self

    def __mul__(self, other):
        other = _coerce_frac(other)
        if other is NotImplemented:
            return NotImplemented
        den = dict(self.den)
        for n, e in other.den.items():
            den[n] = den.get(n, 0) + e
        return LocFrac(self.num * other.num, den)

    __rmul__ = __mul__

    def inverse(self) -> "LocFrac":
        """Inverse, defined when the numerator is rational * atom monomial."""
        if self.num.is_zero():
            raise AlgebraError("inverse of zero")
        c, extracted = _extract_atoms(self.num)
        if c is None:
            raise NonUnitError(
                f"non-unit numerator: {self.num}", factor=extracted
            )
        return LocFrac(self.den_poly() * Poly.const(Fraction(1) / c), extracted)

    def __truediv__(self, other):
        other = _coerce_frac(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        other = _coerce_frac(other)
        if other is NotImplemented:
            return NotImplemented
        # cross multiplication a*d - c*b == 0
        return (self.num * other.den_poly() - other.num * self.den_poly()).is_zero()

    def __hash__(self):
        return hash((self.num, tuple(sorted(self.den.items()))))

    def __str__(self):
        if not self.den:
            return str(self.num)
        den = "*".join(n if e == 1 else f"{n}^{e}" for n, e in sorted(self.den.items()))
        return f"({self.num})/({den})"

    __repr__ = __str__


def _coerce_frac(x):
    if isinstance(x, LocFrac):
        return x
    if isinstance(x, Poly):
        return LocFrac(x)
    if isinstance(x, (int, Fraction)):
        return LocFrac(Poly.const(x))
    return NotImplemented


def _normalize(num: Poly, den: dict):
    if num.is_zero():
        return num, {}
    den = dict(den)
    for name in list(den):
        p = ATOMS[name]
        while den[name] > 0:
            q = num.div_exact(p)
            if q is None:
                break
            num = q
            den[name] -= 1
        if den[name] == 0:
            del den[name]
    return num, den


def _extract_atoms(p: Poly):
    """Write p as c * prod(atom^e).  Returns (c, exponents) on success and
    (None, irreducible-residual) otherwise."""
    if p.is_zero():
        return Fraction(0), {}
    exps = {}
    for name in ATOM_ORDER:
        a = ATOMS[name]
        while True:
            q = p.div_exact(a)
            if q is None:
                break
            p = q
            exps[name] = exps.get(name, 0) + 1
    c = p.as_constant()
    if c is None:
        return None, p
    return c, exps


def ring_ops(a: LocFrac, b: LocFrac, op: str) -> LocFrac:
    """Named entry point for the four ring operations."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "sub":
        return a - b
    if op == "neg":
        return -a
    raise AlgebraError(f"unknown ring op {op!r}")


def atom_divide(a: LocFrac, atom: str, power: int = 1) -> LocFrac:
    """Divide by atom**power; exact because atom is declared nonzero."""
    if atom not in ATOMS:
        raise AlgebraError(f"cannot divide by unregistered atom {atom!r}")
    if power <= 0:
        raise AlgebraError("power must be positive")
    return a * LocFrac(Poly.const(1), {atom: power})


# ---------------------------------------------------------------------------
# Exact linear solving over the localized ring
# ---------------------------------------------------------------------------


def _clear_rows(matrix, rhs):
    """Multiply each row by its denominator lcm; returns Poly matrix/rhs."""
    cleared = []
    vec = []
    for row, b in zip(matrix, rhs):
        lcm: dict = {}
        for entry in list(row) + [b]:
            for n, e in entry.den.items():
                lcm[n] = max(lcm.get(n, 0), e)
        mult = Poly.const(1)
        for n, e in lcm.items():
            mult = mult * ATOMS[n] ** e
        new_row = []
        for entry in row:
            v = entry * LocFrac(mult)
            if v.den:
                raise AlgebraError("row clearing failed")
            new_row.append(v.num)
        bv = b * LocFrac(mult)
        cleared.append(new_row)
        vec.append(bv.num)
    return cleared, vec


def _det_bareiss(mat):
    """Fraction-free determinant of a square Poly matrix."""
    n = len(mat)
    m = [row[:] for row in mat]
    sign = 1
    prev = Poly.const(1)
    for k in range(n - 1):
        if m[k][k].is_zero():
            for r in range(k + 1, n):
                if not m[r][k].is_zero():
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return Poly.zero()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                q = num.div_exact(prev)
                if q is None:
                    raise AlgebraError("Bareiss exact division failed")
                m[i][j] = q
        prev = m[k][k]
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def linear_solve(matrix, rhs):
    """Solve matrix @ x == rhs exactly over the localized ring.

    The determinant must be a unit (rational times atom monomial); a zero
    determinant raises SingularMatrixError, a non-unit one NonUnitError with
    the offending factor.  The returned solution satisfies the system exactly.
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix) or len(rhs) != n:
        raise AlgebraError("linear_solve expects a square system")
    a, b = _clear_rows(matrix, rhs)
    det = _det_bareiss(a)
    if det.is_zero():
        raise SingularMatrixError("singular matrix", determinant=det)
    c, exps = _extract_atoms(det)
    if c is None:
        raise NonUnitError(
            f"determinant has a factor outside the atom set: {exps}", factor=exps
        )
    inv_det = LocFrac(Poly.const(Fraction(1) / c)) * LocFrac(Poly.const(1), exps)
    xs = []
    for j in range(n):
        col = [row[:] for row in a]
        for i in range(n):
            col[i][j] = b[i]
        xs.append(LocFrac(_det_bareiss(col)) * inv_det)
    for i in range(n):
        resid = LocFrac(Poly.zero())
        for j in range(n):
            resid = resid + matrix[i][j] * xs[j]
        resid = resid - rhs[i]
        if not resid.is_zero():
            raise AlgebraError("linear_solve residual is nonzero")
    return xs
