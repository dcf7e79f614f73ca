"""Truncated intersection theory on threefolds and Hirzebruch-Riemann-Roch.

A :class:`ChowElement` is an element of Q[c1, c2, c3] truncated above degree
3 (``deg c_i = i``), with basis 1; c1; c1^2, c2; c1^3, c1c2, c3.  The
classes are those of the tangent bundle, so the Chern roots ``y_i`` of the
cotangent bundle satisfy e1(y) = -c1, e2(y) = c2, e3(y) = -c3.

Characters of Schur powers of the cotangent bundle are computed with the
Jacobi-Trudi determinant on characters of symmetric powers.  The latter are
polynomials in the power ``r`` and are obtained once by exact interpolation.

A geometry is a :class:`ChernNumbers` record.  Besides the three top Chern
numbers it stores the HRR pairing of each basis monomial with the Todd class
of the underlying variety, which is what ``chi`` needs.  For the compact
hypersurface this is the Todd class of T_X itself; for the logarithmic pair
(P^3, X) the bundle classes are those of the log tangent bundle while the
Todd class is that of P^3.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .poly import Polynomial, UsageError, VariableTable, eval_univariate, interpolate
from .reps import Signature, weyl_dim

__all__ = [
    "BASIS",
    "ChowElement",
    "ChernNumbers",
    "chern_numbers_hypersurface_p4",
    "chern_numbers_log_p3",
    "chern_numbers_explicit",
    "ch_sym_truncated",
    "ch_schur",
    "ch_schur_weights",
    "ch_det_power",
    "gt_weights",
    "todd",
    "chi",
    "chi_schur",
    "chi_p3_bundle",
    "chi_p3_line_bundle",
    "chi_structure_sheaf_surface",
    "schur_character_polynomials",
    "evaluate_character_polynomial",
    "ch_sym_direct",
]

# exponent vectors (a, b, c) of c1^a c2^b c3^c, weighted degree a + 2b + 3c <= 3
BASIS: tuple[tuple[int, int, int], ...] = (
    (0, 0, 0),
    (1, 0, 0),
    (2, 0, 0),
    (0, 1, 0),
    (3, 0, 0),
    (1, 1, 0),
    (0, 0, 1),
)
_BASIS_NAMES = ("1", "c1", "c1^2", "c2", "c1^3", "c1c2", "c3")
_POS = {b: i for i, b in enumerate(BASIS)}
_DEG = tuple(a + 2 * b + 3 * c for a, b, c in BASIS)


def _mult_table():
    table = {}
    for i, x in enumerate(BASIS):
        for j, y in enumerate(BASIS):
            z = tuple(p + q for p, q in zip(x, y))
            if z in _POS:
                table[(i, j)] = _POS[z]
    return table


_MULT = _mult_table()


class ChowElement:
    """Immutable vector of 7 coefficients on ``BASIS``.

    Coefficients are usually Fractions but any ring element supporting
    ``+`` and ``*`` works; the symbolic fast path uses polynomials.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None, **named):
        if coeffs is None:
            coeffs = [Fraction(0)] * 7
            for k, v in named.items():
                coeffs[_BASIS_NAMES.index(k.replace("_sq", "^2").replace("_cubed", "^3"))] = v
        coeffs = tuple(coeffs)
        if len(coeffs) != 7:
            raise UsageError("a Chow element has 7 coefficients")
        self.coeffs = tuple(Fraction(c) if isinstance(c, int) else c for c in coeffs)

    @classmethod
    def scalar(cls, c) -> ChowElement:
        return cls((c,) + (Fraction(0),) * 6)

    @classmethod
    def zero(cls) -> ChowElement:
        return cls((Fraction(0),) * 7)

    def __getitem__(self, name):
        if isinstance(name, int):
            return self.coeffs[name]
        return self.coeffs[_BASIS_NAMES.index(name)]

    def __add__(self, other):
        return ChowElement(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        return ChowElement(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return ChowElement(tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, ChowElement):
            return ChowElement(tuple(a * other for a in self.coeffs))
        out = [0] * 7
        for (i, j), k in _MULT.items():
            a, b = self.coeffs[i], other.coeffs[j]
            if a and b:
                out[k] = out[k] + a * b
        return ChowElement(tuple(Fraction(c) if isinstance(c, int) else c for c in out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = ChowElement.scalar(Fraction(1))
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        return isinstance(other, ChowElement) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def degree_part(self, d: int) -> ChowElement:
        return ChowElement(tuple(c if _DEG[i] == d else Fraction(0) for i, c in enumerate(self.coeffs)))

    @property
    def rank(self):
        return self.coeffs[0]

    def as_dict(self) -> dict[str, object]:
        return dict(zip(_BASIS_NAMES, self.coeffs))

    def map(self, fn) -> ChowElement:
        return ChowElement(tuple(fn(c) for c in self.coeffs))

    def __repr__(self):
        parts = [f"{c}*{n}" if n != "1" else f"{c}" for n, c in zip(_BASIS_NAMES, self.coeffs) if c]
        return "ChowElement(" + (" + ".join(parts) or "0") + ")"


TruncatedCh = ChowElement

C1 = ChowElement((0, 1, 0, 0, 0, 0, 0))
C2 = ChowElement((0, 0, 0, 1, 0, 0, 0))
C3 = ChowElement((0, 0, 0, 0, 0, 0, 1))
ONE = ChowElement.scalar(Fraction(1))


def todd() -> ChowElement:
    """Todd class of the tangent bundle: 1 + c1/2 + (c1^2 + c2)/12 + c1c2/24."""
    return ChowElement(
        (Fraction(1), Fraction(1, 2), Fraction(1, 12), Fraction(1, 12), Fraction(0), Fraction(1, 24), Fraction(0))
    )


# -- geometries -------------------------------------------------------------

@dataclass(frozen=True)
class ChernNumbers:
    c1_cubed: Fraction
    c1c2: Fraction
    c3: Fraction
    geometry: str = "explicit"
    degree: int | None = None
    # integral of (basis monomial) * td over the variety, in BASIS order
    todd_pairing: tuple[Fraction, ...] = field(default=(), repr=False)

    def __post_init__(self):
        for name in ("c1_cubed", "c1c2", "c3"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if not self.todd_pairing:
            object.__setattr__(self, "todd_pairing", _compact_pairing(self.c1_cubed, self.c1c2, self.c3))

    def as_tuple(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.c1_cubed, self.c1c2, self.c3)

    def top(self, elem: ChowElement) -> Fraction:
        """Degree of the top-dimensional part of ``elem``."""
        c = elem.coeffs
        return c[4] * self.c1_cubed + c[5] * self.c1c2 + c[6] * self.c3


def _compact_pairing(c1_cubed, c1c2, c3):
    # integrals of 1, c1, c1^2, c2 against td(T_X), then the top monomials themselves
    return (
        c1c2 / 24,
        (c1_cubed + c1c2) / 12,
        c1_cubed / 2,
        c1c2 / 2,
        c1_cubed,
        c1c2,
        c3,
    )


def chern_numbers_explicit(c1_cubed, c1c2, c3) -> ChernNumbers:
    return ChernNumbers(c1_cubed, c1c2, c3)


def _series_div(num, den, n):
    """Power series num/den truncated to n terms (den[0] == 1)."""
    out = []
    for k in range(n):
        s = Fraction(num[k]) if k < len(num) else Fraction(0)
        for j in range(1, min(k, len(den) - 1) + 1):
            s -= den[j] * out[k - j]
        out.append(s)
    return out


def hypersurface_chern_classes(d: int) -> list[Fraction]:
    """Coefficients of h^i in c(T_X) = (1+h)^5 / (1+dh), i = 0..3."""
    return _series_div([comb(5, i) for i in range(6)], [1, d], 4)


def chern_numbers_hypersurface_p4(d: int) -> ChernNumbers:
    """Smooth degree-d hypersurface X in P^4; asserts the closed forms against the normal-bundle sequence."""
    if not isinstance(d, int) or d < 1:
        raise UsageError(f"degree must be a positive integer, got {d!r}")
    closed = (
        Fraction((5 - d) ** 3 * d),
        Fraction(d * (5 - d) * (d * d - 5 * d + 10)),
        Fraction(d * (-(d**3) + 5 * d * d - 10 * d + 10)),
    )
    # derivation path: c(T_X)(1 + dh) = (1 + h)^5 with h^3 = d
    _, a1, a2, a3 = hypersurface_chern_classes(d)
    derived = (a1**3 * d, a1 * a2 * d, a3 * d)
    if closed != derived:
        raise AssertionError(f"hypersurface Chern numbers disagree: {closed} vs {derived}")
    return ChernNumbers(*closed, geometry="hypersurface-p4", degree=d)


def log_p3_chern_classes(d: int) -> list[Fraction]:
    """Coefficients of w^i in c(T_P3(-log X)) = (1+w)^4 / (1+dw), i = 0..3."""
    return _series_div([comb(4, i) for i in range(5)], [1, d], 4)


TODD_P3 = (Fraction(1), Fraction(2), Fraction(11, 6), Fraction(1))  # td(P^3) in powers of the hyperplane


def surface_euler_number(d: int) -> int:
    """Topological Euler number of a smooth degree-d surface in P^3."""
    return d * (6 + d * d - 4 * d)


def chern_numbers_log_p3(d: int) -> ChernNumbers:
    """Log pair (P^3, X) with X a smooth surface of degree d."""
    if not isinstance(d, int) or d < 0:
        raise UsageError(f"degree must be a non-negative integer, got {d!r}")
    closed = (
        Fraction((4 - d) ** 3),
        Fraction((4 - d) * (d * d - 4 * d + 6)),
        Fraction(-(d**3) + 4 * d * d - 6 * d + 4),
    )
    _, a1, a2, a3 = log_p3_chern_classes(d)
    derived = (a1**3, a1 * a2, a3)
    if closed != derived:
        raise AssertionError(f"log Chern numbers disagree: {closed} vs {derived}")
    if closed[2] != 4 - surface_euler_number(d):
        raise AssertionError("top log Chern class is not e(P^3) - e(X)")
    t0, t1, t2, t3 = TODD_P3
    pairing = (t3, a1 * t2, a1 * a1 * t1, a2 * t1, a1**3, a1 * a2, a3)
    return ChernNumbers(*closed, geometry="log-p3", degree=d, todd_pairing=pairing)


# -- characters -------------------------------------------------------------

_POWER_SUM_EXPONENTS = ((1, 0, 0), (2, 0, 0), (1, 1, 0), (3, 0, 0), (2, 1, 0), (1, 1, 1))


def _composition_moment(r: int, exps) -> int:
    """sum over a+b+c = r (a,b,c >= 0) of a^i b^j c^k."""
    i, j, k = exps
    total = 0
    for a in range(r + 1):
        for b in range(r - a + 1):
            total += a**i * b**j * (r - a - b) ** k
    return total


@lru_cache(maxsize=None)
def _moment_polynomials():
    """Each composition moment as an exact polynomial in r, fitted on r = 0..8 and validated on 9..12."""
    polys = {}
    for exps in _POWER_SUM_EXPONENTS:
        coeffs = interpolate(range(9), [_composition_moment(r, exps) for r in range(9)])
        for r in range(9, 13):
            if eval_univariate(coeffs, r) != _composition_moment(r, exps):
                raise AssertionError(f"moment polynomial {exps} failed validation at r={r}")
        if len(coeffs) > 6:
            raise AssertionError(f"moment polynomial {exps} has degree above 5")
        polys[exps] = tuple(coeffs)
    return polys


def _symmetric_to_chow(m1, m2, m11, m3, m21, m111) -> ChowElement:
    """Combination of monomial symmetric functions of the cotangent roots, as a Chow element.

    m1 = e1, m2 = e1^2 - 2e2, m11 = e2, m3 = e1^3 - 3e1e2 + 3e3, m21 = e1e2 - 3e3, m111 = e3,
    with e1 = -c1, e2 = c2, e3 = -c3.
    """
    return ChowElement(
        (
            0,
            -m1,
            m2,
            -2 * m2 + m11,
            -m3,
            3 * m3 - m21,
            -3 * m3 + 3 * m21 - m111,
        )
    )


def _sym_character(moments, rank) -> ChowElement:
    s1 = moments[(1, 0, 0)]
    s2, s11 = moments[(2, 0, 0)], moments[(1, 1, 0)]
    s3, s21, s111 = moments[(3, 0, 0)], moments[(2, 1, 0)], moments[(1, 1, 1)]
    # sum (a y1 + b y2 + c y3)^p / p! expanded over monomial symmetric functions
    deg1 = _symmetric_to_chow(s1, 0, 0, 0, 0, 0)
    deg2 = _symmetric_to_chow(0, s2, 2 * s11, 0, 0, 0) * Fraction(1, 2)
    deg3 = _symmetric_to_chow(0, 0, 0, s3, 3 * s21, 6 * s111) * Fraction(1, 6)
    return ChowElement.scalar(rank) + deg1 + deg2 + deg3


@lru_cache(maxsize=None)
def ch_sym_truncated(r: int) -> ChowElement:
    """ch(S^r T*_X) up to degree 3; zero for r < 0."""
    if r < 0:
        return ChowElement.zero()
    polys = _moment_polynomials()
    moments = {e: eval_univariate(p, r) for e, p in polys.items()}
    return _sym_character(moments, Fraction((r + 1) * (r + 2) // 2))


def ch_sym_direct(r: int) -> ChowElement:
    """Same as :func:`ch_sym_truncated` but with the moments summed directly (no interpolation)."""
    if r < 0:
        return ChowElement.zero()
    moments = {e: Fraction(_composition_moment(r, e)) for e in _POWER_SUM_EXPONENTS}
    return _sym_character(moments, Fraction((r + 1) * (r + 2) // 2))


def _det3(m):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def _as_triple(sig) -> tuple[int, int, int]:
    if not isinstance(sig, Signature):
        sig = Signature(tuple(sig))
    p = sig.parts
    if len(p) == 2:
        raise UsageError("Chern characters are computed for rank-3 bundles; give three parts")
    return p


@lru_cache(maxsize=None)
def ch_schur(sig) -> ChowElement:
    """ch(Gamma^sig T*_X) by the 3x3 Jacobi-Trudi determinant det(h_{sig_i + j - i})."""
    lam = _as_triple(sig)
    rows = [[ch_sym_truncated(lam[i] + j - i) for j in range(3)] for i in range(3)]
    return _det3(rows)


def ch_det_power(l: int) -> ChowElement:
    """ch((det T*_X)^l) = exp(-l c1)."""
    x = C1 * Fraction(-l)
    return ONE + x + x * x * Fraction(1, 2) + x * x * x * Fraction(1, 6)


def gt_weights(sig):
    """Weights (multiset, as a list) of Gamma^sig of a 3-dimensional space via Gelfand-Tsetlin patterns."""
    l1, l2, l3 = _as_triple(sig)
    out = []
    for a in range(l2, l1 + 1):
        for b in range(l3, l2 + 1):
            for c in range(b, a + 1):
                # rows: (l1,l2,l3) / (a,b) / (c); weight = successive row-sum differences
                out.append((c, a + b - c, l1 + l2 + l3 - a - b))
    return out


_ROOT_TABLE = VariableTable.plain(("y1", "y2", "y3"))


def _elementary_reduce(p: Polynomial) -> ChowElement:
    """Rewrite a symmetric polynomial in the roots y via e1 = -c1, e2 = c2, e3 = -c3 (leading-term algorithm)."""
    e1 = sum((_ROOT_TABLE.var(v) for v in ("y1", "y2", "y3")), _ROOT_TABLE.zero())
    y1, y2, y3 = (_ROOT_TABLE.var(v) for v in ("y1", "y2", "y3"))
    elementary = (e1, y1 * y2 + y1 * y3 + y2 * y3, y1 * y2 * y3)
    chow_e = (-C1, C2, -C3)
    result = ChowElement.zero()
    while p:
        lead, c = max(p.terms.items())
        a, b, cc = lead
        if not (a >= b >= cc):
            raise UsageError("polynomial is not symmetric")
        ea, eb, ec = a - b, b - cc, cc
        p = p - (elementary[0] ** ea) * (elementary[1] ** eb) * (elementary[2] ** ec) * c
        term = ChowElement.scalar(Fraction(c))
        for ch_e, k in zip(chow_e, (ea, eb, ec)):
            term = term * (ch_e**k)
        result = result + term
    return result


def ch_schur_weights(sig) -> ChowElement:
    """ch(Gamma^sig T*_X) summed over the Gelfand-Tsetlin weight system (independent of Jacobi-Trudi)."""
    y = [_ROOT_TABLE.var(v) for v in ("y1", "y2", "y3")]
    weights = gt_weights(sig)
    total = _ROOT_TABLE.zero()
    for p in range(1, 4):
        acc = _ROOT_TABLE.zero()
        for w in weights:
            lin = w[0] * y[0] + w[1] * y[1] + w[2] * y[2]
            acc = acc + lin**p
        total = total + acc * Fraction(1, factorial(p))
    return ChowElement.scalar(Fraction(len(weights))) + _elementary_reduce(total)


# -- Riemann-Roch -----------------------------------------------------------

def chi(ch: ChowElement, cn: ChernNumbers) -> Fraction:
    """Euler characteristic of a bundle with Chern character ``ch`` (degree-3 part of ch * td)."""
    return sum((c * t for c, t in zip(ch.coeffs, cn.todd_pairing)), Fraction(0))


def chi_schur(sig, cn: ChernNumbers) -> Fraction:
    return chi(ch_schur(sig), cn)


def chi_p3_bundle(d1, d2, d3, e) -> Fraction:
    """chi(P^3, E) for E of rank e with Chern classes d_i (multiples of the hyperplane powers)."""
    c1, c2 = Fraction(4), Fraction(6)
    d1, d2, d3 = Fraction(d1), Fraction(d2), Fraction(d3)
    return (
        (d1**3 - 3 * d1 * d2 + 3 * d3) / 6
        + c1 * (d1**2 - 2 * d2) / 4
        + (c1**2 + c2) * d1 / 12
        + Fraction(e) * c1 * c2 / 24
    )


def chi_p3_line_bundle(k: int) -> Fraction:
    """chi(O_P3(k)) as the degree-3 part of exp(k w) * td(P^3)."""
    ch = [Fraction(k) ** i / factorial(i) for i in range(4)]
    return sum((ch[i] * TODD_P3[3 - i] for i in range(4)), Fraction(0))


def chi_structure_sheaf_surface(d: int) -> Fraction:
    """chi(O_X) for a smooth degree-d surface X in P^3, from 0 -> O(-X) -> O_P3 -> O_X -> 0."""
    return chi_p3_line_bundle(0) - chi_p3_line_bundle(-d)


# -- symbolic characters (fast summation path) ------------------------------

LAMBDA_TABLE = VariableTable.plain(("l1", "l2", "l3"))


@lru_cache(maxsize=None)
def _sym_character_polynomial_in(shift: int, var: str) -> ChowElement:
    """ch(S^{var+shift}) with polynomial coefficients in ``var`` (over LAMBDA_TABLE)."""
    x = LAMBDA_TABLE.var(var) + shift
    polys = _moment_polynomials()

    def poly_of(coeffs):
        acc = LAMBDA_TABLE.zero()
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    moments = {e: poly_of(p) for e, p in polys.items()}
    rank = (x + 1) * (x + 2) * Fraction(1, 2)
    return _sym_character(moments, rank)


@lru_cache(maxsize=None)
def schur_character_polynomials() -> ChowElement:
    """ch(Gamma^(l1,l2,l3) T*_X) as a Chow element with polynomial coefficients in l1, l2, l3.

    Valid for every signature: the symmetric-power moment polynomials vanish
    at r = -1 and r = -2, the only negative indices Jacobi-Trudi produces.
    """
    for e, p in _moment_polynomials().items():
        if eval_univariate(p, -1) or eval_univariate(p, -2):
            raise AssertionError(f"moment polynomial {e} does not vanish at r=-1,-2")
    names = ("l1", "l2", "l3")
    rows = [[_sym_character_polynomial_in(j - i, names[i]) for j in range(3)] for i in range(3)]
    return _det3(rows)


def evaluate_character_polynomial(chp: ChowElement, sig) -> ChowElement:
    l1, l2, l3 = _as_triple(sig)
    pt = {"l1": l1, "l2": l2, "l3": l3}
    return ChowElement(tuple(c.evaluate(pt) if isinstance(c, Polynomial) else Fraction(c) for c in chp.coeffs))


def rank_check(sig) -> bool:
    return ch_schur(sig).rank == weyl_dim(sig)
