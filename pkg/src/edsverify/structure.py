"""Machine form of the frame formalism: the u(2)-patterned connection matrix,
the shipped exterior system, torsion and curvature residuals, Lie brackets,
covariant derivatives, and the line-oriented EDS text format.

Index conventions: grid[k][l] with 1-based accessors gamma(j, k) = the
connection 1-form with lower index j and upper index k; the displayed pattern
is rows = upper index, columns = lower index:

    [ 0   E   F   G ]
    [-E   0  -G   F ]          E = (S+L)/2,  H = (S-L)/2,
    [-F   G   0   H ]          L = E-H,      S = E+H.
    [-G  -F  -H   0 ]
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Mapping, Sequence

from .algebra import LocFrac, Poly
from .forms import (
    COFRAME,
    DForm,
    FormBasis,
    FormError,
    RuleSystem,
    ext_d,
    substitute_one_forms,
    wedge,
)
from .jets import DIRECTIONS, JetContext, standard_context

DATA_FILE = "weakly-einstein.eds"

#: file-name -> internal scalar symbol
SCALAR_NAMES = {"lambda": "lam", "sigma": "sig"}
ATOM_NAMES = {
    "lambda": "lam",
    "sigma": "sig",
    "mu+": "mu+",
    "mu-": "mu-",
    "lambda3": "lam3",
}


class EdsParseError(Exception):
    """Syntax or consistency error in an EDS file, with location."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass
class Equation:
    """A labeled polynomial constraint in cleared-denominator normal form."""

    label: str
    poly: Poly
    provenance: dict = field(default_factory=dict)

    def is_identity(self) -> bool:
        return self.poly.is_zero()


class StructureSystem:
    """Frame declaration plus rewrite rules for d of each basis 1-form."""

    def __init__(
        self,
        basis: FormBasis,
        ctx: JetContext,
        d_rules: Mapping[str, DForm],
        nonzero: Sequence[str],
        macros: Mapping[str, DForm] | None = None,
    ):
        self.basis = basis
        self.ctx = ctx
        self.frame_names = basis.names[:4]
        self.d_rules = dict(d_rules)
        self.nonzero = tuple(nonzero)
        self.macros = dict(macros or {})

    def d_rule(self, name: str) -> DForm:
        try:
            return self.d_rules[name]
        except KeyError:
            raise FormError(f"no exterior-derivative rule for basis form {name!r}") from None

    def one_form(self, name: str) -> DForm:
        return DForm.one_form(self.basis, name)

    @property
    def lambda_sigma(self):
        return (self.ctx.symbol("lam"), self.ctx.symbol("sig"))

    # E and H are macros over S and L, never independent symbols
    def form_E(self) -> DForm:
        half = Fraction(1, 2)
        return self.one_form("S").scale(half) + self.one_form("L").scale(half)

    def form_H(self) -> DForm:
        half = Fraction(1, 2)
        return self.one_form("S").scale(half) + self.one_form("L").scale(-half)

    def connection(self):
        return build_connection(self.form_E(), self.one_form("F"), self.one_form("G"), self.form_H())

    def component_rules(self, comp_map: Mapping[str, DForm]) -> RuleSystem:
        """Coframe d-rules with auxiliary 1-forms expanded in components."""
        rules = {
            name: substitute_one_forms(self.d_rules[name], comp_map)
            for name in COFRAME
        }
        return RuleSystem(self.basis, self.ctx, rules)

    def free_components(self) -> dict[str, DForm]:
        """F = F_i e^i and friends, with free component symbols."""
        out = {}
        for name in ("F", "G", "L", "S"):
            out[name] = DForm(
                self.basis, 1, {(i,): self.ctx.symbol(f"{name}{i + 1}") for i in range(4)}
            )
        return out


# ---------------------------------------------------------------------------
# Connection pattern (the u(2)-valued matrix) and its characterization
# ---------------------------------------------------------------------------


def build_connection(E: DForm, F: DForm, G: DForm, H: DForm):
    """4x4 grid of 1-forms, grid[k-1][j-1] = Gamma_j^k, in the displayed pattern."""
    basis = E.basis
    zero = DForm(basis, 1)
    return [
        [zero, E, F, G],
        [-E, zero, -G, F],
        [-F, G, zero, H],
        [-G, -F, -H, zero],
    ]


def gamma(grid, j: int, k: int) -> DForm:
    """Gamma_j^k (lower j, upper k), 1-based."""
    return grid[k - 1][j - 1]


# full commutation conditions for nabla J = 0: with J e_j = s_j e_{m(j)},
# m = (2,1,4,3) and s = (+,-,+,-), every slot satisfies
# Gamma_{m(j)}^{m(k)} = s_j s_k Gamma_j^k.  Restricted to skew grids this is
# the familiar cross-plane rule Gamma_j^k = (-1)^{j+k} Gamma_p^q for
# {{j,p},{k,q}} = {{1,2},{3,4}}.
_J_MAP = (2, 1, 4, 3)
_J_SIGNS = (1, -1, 1, -1)

_J_RELATIONS = [
    (_J_MAP[j - 1], _J_MAP[k - 1], j, k, _J_SIGNS[j - 1] * _J_SIGNS[k - 1])
    for j in range(1, 5)
    for k in range(1, 5)
]


def verify_parallel_g_J(grid) -> dict:
    """Check that the grid solves nabla g = 0 and nabla J = 0, and that those
    equations admit exactly the displayed pattern (four free 1-forms).

    Returns a report dict with `ok`, per-equation `violations`, and the
    equivalence classes forced on a fully free 16-slot grid.
    """
    violations = []
    # nabla g = 0: skew-symmetry in (j, k), including zero diagonal
    for j in range(1, 5):
        if not gamma(grid, j, j).is_zero():
            violations.append(f"Gamma_{j}^{j} != 0 breaks skew-symmetry")
        for k in range(j + 1, 5):
            if not (gamma(grid, j, k) + gamma(grid, k, j)).is_zero():
                violations.append(f"Gamma_{j}^{k} != -Gamma_{k}^{j} breaks skew-symmetry")
    # nabla J = 0: signed identifications under conjugation by J
    for j, k, p, q, sign in _J_RELATIONS:
        lhs = gamma(grid, j, k)
        rhs = gamma(grid, p, q) if sign > 0 else -gamma(grid, p, q)
        if not (lhs - rhs).is_zero():
            rel = f"Gamma_{j}^{k} != {'+' if sign > 0 else '-'}Gamma_{p}^{q}"
            violations.append(f"{rel} breaks the J-commuting relation")
    classes = _pattern_classes()
    return {
        "ok": not violations,
        "violations": violations,
        "free_classes": classes,
        "free_count": len(classes),
    }


def _pattern_classes():
    """Solve the nabla g / nabla J linear relations on 16 free slots by signed
    union-find; the solution set must be spanned by E, F, G, H."""
    parent: dict = {}
    sign: dict = {}  # sign of a node relative to its parent pointer
    zero = ("zero",)

    def find(x):
        parent.setdefault(x, x)
        sign.setdefault(x, 1)
        if parent[x] == x:
            return x, 1
        root, s = find(parent[x])
        parent[x] = root
        sign[x] = sign[x] * s
        return root, sign[x]

    def union(x, y, rel_sign):
        # impose x = rel_sign * y
        rx, sx = find(x)
        ry, sy = find(y)
        if rx == ry:
            if sx * sy != rel_sign:
                union_zero(rx)
            return
        parent[ry] = rx
        sign[ry] = rel_sign * sx * sy

    def union_zero(x):
        rx, _ = find(x)
        rz, _ = find(zero)
        if rx != rz:
            parent[rx] = rz
            sign[rx] = 1

    for j in range(1, 5):
        union_zero((j, j))
        for k in range(1, 5):
            if j != k:
                union((j, k), (k, j), -1)
    for j, k, p, q, rel in _J_RELATIONS:
        union((j, k), (p, q), rel)
    zroot, _ = find(zero)
    groups: dict = {}
    for j in range(1, 5):
        for k in range(1, 5):
            root, s = find((j, k))
            if root == zroot:
                continue
            groups.setdefault(root, []).append(((j, k), s))
    # canonical representatives, re-signed so the lowest slot is +1
    out = {}
    for members in groups.values():
        members.sort()
        base_slot, base_sign = members[0]
        out[base_slot] = [(slot, s * base_sign) for slot, s in members]
    return out


# ---------------------------------------------------------------------------
# Torsion, curvature, brackets, covariant derivatives
# ---------------------------------------------------------------------------


def torsion_equations(sys: StructureSystem, grid=None):
    """Residuals d e^k - e^i ^ Gamma_i^k for k = 1..4 (zero iff torsion-free)."""
    grid = grid or sys.connection()
    out = []
    for k in range(1, 5):
        resid = sys.d_rule(COFRAME[k - 1])
        for i in range(1, 5):
            resid = resid - wedge(sys.one_form(COFRAME[i - 1]), gamma(grid, i, k))
        out.append(resid)
    return out


def curvature_forms(sys: StructureSystem, grid=None):
    """R_k^l = -d Gamma_k^l + Gamma_k^p ^ Gamma_p^l as a 4x4 grid of 2-forms."""
    grid = grid or sys.connection()
    rules = RuleSystem(sys.basis, sys.ctx, sys.d_rules)
    out = []
    for k in range(1, 5):
        row = []
        for l in range(1, 5):
            r = -ext_d(gamma(grid, k, l), rules)
            for p in range(1, 5):
                r = r + wedge(gamma(grid, k, p), gamma(grid, p, l))
            row.append(r)
        out.append(row)
    return out


def expected_curvature(sys: StructureSystem):
    """The curvature 2-forms the last four exterior equations encode."""
    basis = sys.basis
    lam, sig = sys.lambda_sigma
    A, B, C, D = (DForm.one_form(basis, n) for n in COFRAME)
    AB, CD = wedge(A, B), wedge(C, D)
    AC_DB = wedge(A, C) - wedge(D, B)
    AD_BC = wedge(A, D) - wedge(B, C)
    zero = DForm(basis, 2)
    R12 = AB.scale(-lam)
    R13 = AC_DB.scale(sig)
    R23 = AD_BC.scale(sig)
    R34 = CD.scale(lam)
    table = [[zero] * 4 for _ in range(4)]

    def put(k, l, form):
        table[k - 1][l - 1] = form
        table[l - 1][k - 1] = -form

    put(1, 2, R12)
    put(1, 3, R13)
    put(2, 4, R13)
    put(3, 4, R34)
    put(2, 3, R23)
    put(1, 4, -R23)
    return table


def lie_bracket(i: int, j: int, sys: StructureSystem, comp_map=None):
    """Coefficients of [e_i, e_j] on the frame, from 2 d e^k = -C_ij^k e^i ^ e^j."""
    if i == j:
        return [LocFrac(Poly.zero())] * 4
    comp_map = comp_map or sys.free_components()
    swap = i > j
    if swap:
        i, j = j, i
    out = []
    for k in range(1, 5):
        rule = substitute_one_forms(sys.d_rule(COFRAME[k - 1]), comp_map)
        c = -rule.coefficient(COFRAME[i - 1], COFRAME[j - 1])
        out.append(-c if swap else c)
    return out


def nabla_one_form(sys: StructureSystem, k: int, grid_components):
    """Per-direction covariant derivative of e^k: list over i of 1-forms
    (nabla_{e_i} e^k) = -Gamma_{ij}^k e^j."""
    out = []
    for i in range(1, 5):
        terms = {}
        for j in range(1, 5):
            coeff = -grid_components[k - 1][j - 1][i - 1]
            if not coeff.is_zero():
                terms[(j - 1,)] = coeff
        out.append(DForm(sys.basis, 1, terms))
    return out


def _grid_components(sys: StructureSystem, comp_map):
    """grid_components[k-1][j-1][i-1] = Gamma_{ij}^k as LocFrac."""
    grid = sys.connection()
    out = []
    for k in range(1, 5):
        row = []
        for j in range(1, 5):
            form = substitute_one_forms(gamma(grid, j, k), comp_map)
            row.append([form.coefficient(COFRAME[i]) for i in range(4)])
        out.append(row)
    return out


def covariant_derivatives(sys: StructureSystem, comp_map=None) -> dict:
    """Table of nabla A..nabla D (per direction) and nabla of the three
    anti-self-dual eigenforms, with the expected right-hand sides."""
    comp_map = comp_map or sys.free_components()
    comps = _grid_components(sys, comp_map)
    basis = sys.basis
    A, B, C, D = (DForm.one_form(basis, n) for n in COFRAME)
    nablas = {COFRAME[k - 1]: nabla_one_form(sys, k, comps) for k in range(1, 5)}

    def nabla_wedge(x: str, y: str):
        nx, ny = nablas[x], nablas[y]
        fx = DForm.one_form(basis, x)
        fy = DForm.one_form(basis, y)
        return [wedge(nx[i], fy) + wedge(fx, ny[i]) for i in range(4)]

    def combine(pairs):
        out = [DForm(basis, 2) for _ in range(4)]
        for sgn, x, y in pairs:
            parts = nabla_wedge(x, y)
            for i in range(4):
                out[i] = out[i] + (parts[i] if sgn > 0 else -parts[i])
        return out

    zeta = -wedge(A, B) + wedge(C, D)
    eta = -wedge(A, C) + wedge(D, B)
    theta = -wedge(A, D) + wedge(B, C)
    table = dict(nablas)
    table["zeta"] = combine([(-1, "A", "B"), (1, "C", "D")])
    table["eta"] = combine([(-1, "A", "C"), (1, "D", "B")])
    table["theta"] = combine([(-1, "A", "D"), (1, "B", "C")])
    table["_forms"] = {"zeta": zeta, "eta": eta, "theta": theta}
    table["_components"] = comps
    return table


def verify_covariant_derivatives(sys: StructureSystem) -> dict:
    """Check nabla A..D against -Gamma_j^k tensor e^j, the eigenform rules
    (nabla zeta = 2G tensor eta - 2F tensor theta and companions), and that the
    metric sum A tensor A + ... + D tensor D is parallel."""
    comp_map = sys.free_components()
    table = covariant_derivatives(sys, comp_map)
    comps = table["_components"]
    basis = sys.basis
    zeta, eta, theta = (table["_forms"][n] for n in ("zeta", "eta", "theta"))

    def comp_symbols(name):
        return [sys.ctx.symbol(f"{name}{i}") for i in DIRECTIONS]

    F_i, G_i = comp_symbols("F"), comp_symbols("G")
    L_i, S_i = comp_symbols("L"), comp_symbols("S")
    E_i = [(S_i[i] + L_i[i]) * Fraction(1, 2) for i in range(4)]
    failures = []
    # nabla A = -E tensor B - F tensor C - G tensor D (and swp-images)
    expected_A = [
        -(DForm.one_form(basis, "B").scale(E_i[i]))
        - DForm.one_form(basis, "C").scale(F_i[i])
        - DForm.one_form(basis, "D").scale(G_i[i])
        for i in range(4)
    ]
    for i in range(4):
        if not (table["A"][i] - expected_A[i]).is_zero():
            failures.append(f"nabla A direction {i + 1}")
    rules = {
        "zeta": [(2, G_i, eta), (-2, F_i, theta)],
        "eta": [(-2, G_i, zeta), (1, L_i, theta)],
        "theta": [(2, F_i, zeta), (-1, L_i, eta)],
    }
    for name, terms in rules.items():
        for i in range(4):
            expect = DForm(basis, 2)
            for coeff, comp, form in terms:
                expect = expect + form.scale(comp[i] * Fraction(coeff))
            if not (table[name][i] - expect).is_zero():
                failures.append(f"nabla {name} direction {i + 1}")
    # metric parallel: (nabla_i g)_{jl} = -Gamma_{ij}^l - Gamma_{il}^j = 0
    for i in range(4):
        for jj in range(4):
            for ll in range(4):
                v = comps[ll][jj][i] + comps[jj][ll][i]
                if not v.is_zero():
                    failures.append(f"nabla g component ({i + 1},{jj + 1},{ll + 1})")
    return {"ok": not failures, "failures": failures, "table": table}


# ---------------------------------------------------------------------------
# EDS text format
# ---------------------------------------------------------------------------

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_NUM_RE = re.compile(r"\d+(/\d+)?")


def _tokenize(line: str, lineno: int):
    tokens = []
    col = 0
    n = len(line)
    while col < n:
        ch = line[col]
        if ch.isspace():
            col += 1
            continue
        if ch == "#":
            break
        if ch in "+-=^":
            tokens.append((ch, col + 1))
            col += 1
            continue
        m = _NUM_RE.match(line, col)
        if m:
            tokens.append((m.group(0), col + 1))
            col = m.end()
            continue
        m = _NAME_RE.match(line, col)
        if m:
            tokens.append((m.group(0), col + 1))
            col = m.end()
            continue
        raise EdsParseError(f"unexpected character {ch!r}", lineno, col + 1)
    return tokens


class _LineParser:
    def __init__(self, tokens, lineno):
        self.tokens = tokens
        self.lineno = lineno
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def col(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos][1]
        return self.tokens[-1][1] + len(self.tokens[-1][0]) if self.tokens else 1

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, what):
        if self.peek() != what:
            raise EdsParseError(f"expected {what!r}", self.lineno, self.col())
        return self.take()

    def error(self, msg):
        raise EdsParseError(msg, self.lineno, self.col())


def _parse_sum(p: _LineParser, basis: FormBasis, scalars, macros, ctx, degree):
    """sum := [sign] term (sign term)*; term := (rational|scalar)* form(^form)*"""
    total = DForm(basis, degree)
    first = True
    while True:
        tok = p.peek()
        if tok is None:
            if first:
                p.error("empty expression")
            return total
        sign = 1
        if tok in "+-":
            p.take()
            sign = -1 if tok == "-" else 1
        elif not first:
            p.error("expected '+' or '-' between terms")
        coeff = LocFrac(Poly.const(sign))
        wedge_names = []
        saw_factor = False
        while True:
            tok = p.peek()
            if tok is None:
                break
            if tok in "+-":
                if not wedge_names and not saw_factor:
                    p.error("dangling sign")
                break
            if _NUM_RE.fullmatch(tok):
                if wedge_names:
                    p.error("scalar factor after a wedge chain")
                p.take()
                coeff = coeff * LocFrac(Poly.const(Fraction(tok)))
                saw_factor = True
                continue
            if tok == "^":
                col = p.col()
                p.take()
                nxt = p.peek()
                if nxt is None or not _NAME_RE.fullmatch(nxt):
                    raise EdsParseError("dangling wedge", p.lineno, col + 1)
                if not wedge_names:
                    p.error("wedge without a left operand")
                name = p.take()[0]
                wedge_names.append(name)
                continue
            if _NAME_RE.fullmatch(tok):
                if tok in scalars:
                    if wedge_names:
                        p.error("scalar factor after a wedge chain")
                    p.take()
                    coeff = coeff * ctx.symbol(scalars[tok])
                    saw_factor = True
                    continue
                if wedge_names:
                    p.error("missing '^' between 1-forms")
                p.take()
                wedge_names.append(tok)
                continue
            p.error(f"unexpected token {tok!r}")
        # build the wedge chain
        form = DForm.scalar(basis, coeff)
        for name in wedge_names:
            if name in macros:
                factor = macros[name]
            elif name in basis:
                factor = DForm.one_form(basis, name)
            else:
                p.error(f"unknown 1-form {name!r}")
            form = wedge(form, factor)
        if form.degree != degree:
            p.error(f"term has degree {form.degree}, rule needs degree {degree}")
        total = total + form
        first = False
        if p.peek() is None:
            return total


def parse_eds(text: str, ctx: JetContext | None = None) -> StructureSystem:
    """Parse the EDS text format into a StructureSystem."""
    ctx = ctx or standard_context()
    frame = None
    scalars: dict[str, str] = {}
    oneforms: list[str] = []
    nonzero: list[str] = []
    macros: dict[str, DForm] = {}
    rules: dict[str, DForm] = {}
    basis = None
    pending_rules = []  # (lineno, tokens) until declarations are in

    lines = text.splitlines()
    for lineno, raw in enumerate(lines, start=1):
        tokens = _tokenize(raw, lineno)
        if not tokens:
            continue
        head, headcol = tokens[0]
        p = _LineParser(tokens, lineno)
        if head == "frame":
            p.take()
            names = []
            while p.peek() is not None:
                names.append(p.take()[0])
            if tuple(names) != COFRAME:
                raise EdsParseError("frame must declare exactly A B C D", lineno, headcol)
            frame = tuple(names)
        elif head == "scalars":
            p.take()
            while p.peek() is not None:
                tok, col = p.take()
                if tok not in SCALAR_NAMES:
                    raise EdsParseError(f"unknown scalar {tok!r}", lineno, col)
                scalars[tok] = SCALAR_NAMES[tok]
        elif head == "oneforms":
            p.take()
            while p.peek() is not None:
                tok, col = p.take()
                if not _NAME_RE.fullmatch(tok):
                    raise EdsParseError(f"bad 1-form name {tok!r}", lineno, col)
                oneforms.append(tok)
        elif head == "nonzero":
            # raw word split: atom names may carry '+'/'-'
            words = raw.split("#", 1)[0].split()
            for word in words[1:]:
                if word not in ATOM_NAMES:
                    col = raw.index(word) + 1
                    raise EdsParseError(f"unknown nonzero atom {word!r}", lineno, col)
                nonzero.append(ATOM_NAMES[word])
        elif head in ("macro", "d"):
            pending_rules.append((lineno, tokens, head))
        else:
            raise EdsParseError(f"unknown directive {head!r}", lineno, headcol)

    if frame is None:
        raise EdsParseError("missing frame declaration", len(lines) or 1, 1)
    basis = FormBasis(frame + tuple(oneforms))

    for lineno, tokens, head in pending_rules:
        p = _LineParser(tokens, lineno)
        p.take()
        tok = p.peek()
        if tok is None or not _NAME_RE.fullmatch(tok):
            p.error("expected a form name")
        name, namecol = p.take()
        if head == "macro":
            p.expect("=")
            if name in basis or name in macros:
                raise EdsParseError(f"macro {name!r} shadows a declared form", lineno, namecol)
            macros[name] = _parse_sum(p, basis, scalars, macros, ctx, 1)
        else:
            if name not in basis:
                raise EdsParseError(f"d-rule for undeclared form {name!r}", lineno, namecol)
            if name in rules:
                raise EdsParseError(f"duplicate d-rule for {name!r}", lineno, namecol)
            p.expect("=")
            rules[name] = _parse_sum(p, basis, scalars, macros, ctx, 2)

    return StructureSystem(basis, ctx, rules, nonzero, macros)


_ATOM_BACK = {v: k for k, v in ATOM_NAMES.items()}
_SCALAR_BACK = {v: k for k, v in SCALAR_NAMES.items()}


def _serialize_coeff(c: LocFrac):
    """(sign-free text factors, sign) for a coefficient of the canonical form
    q * scalar-product; raises when the coefficient is not of that shape."""
    if c.den:
        raise FormError("cannot serialize a coefficient with denominator")
    p = c.num
    if len(p.terms) != 1:
        raise FormError(f"cannot serialize coefficient {c}")
    (mono, q), = p.terms.items()
    sign = "-" if q < 0 else "+"
    q = abs(q)
    factors = []
    if q != 1:
        factors.append(str(q))
    for name, e in mono:
        pretty = _SCALAR_BACK.get(name, name)
        factors.extend([pretty] * e)
    return factors, sign


def serialize(sys: StructureSystem) -> str:
    """Canonical text form; parse(serialize(sys)) reproduces the system and the
    shipped file is exactly this serialization of itself."""
    lines = [
        "frame " + " ".join(sys.frame_names),
        "scalars lambda sigma",
        "oneforms " + " ".join(sys.basis.names[4:]),
        "nonzero " + " ".join(_ATOM_BACK[a] for a in sys.nonzero),
    ]
    for name in sys.basis.names:
        if name not in sys.d_rules:
            continue
        form = sys.d_rules[name]
        pieces = []
        for idx in sorted(form.terms):
            factors, sign = _serialize_coeff(form.terms[idx])
            factors.append("^".join(sys.basis.names[i] for i in idx))
            term = " ".join(factors)
            if not pieces:
                pieces.append(term if sign == "+" else "-" + term)
            else:
                pieces.append(f"{sign} {term}")
        lines.append(f"d {name} = " + " ".join(pieces))
    return "\n".join(lines) + "\n"


def load_system(path=None, ctx: JetContext | None = None) -> StructureSystem:
    """Parse the shipped weakly-einstein.eds (or a caller-supplied file)."""
    if path is None:
        text = resources.files("edsverify").joinpath("data", DATA_FILE).read_text()
    else:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    return parse_eds(text, ctx)
