"""Euler characteristics of jet bundles and their leading asymptotics in m.

chi(E_{k,m}) is summed over the graded decomposition of the bundle.  The sum
is carried out once on Chern characters (a :class:`ChowElement` per m, with
no geometry attached) and only then paired with a geometry, so every degree
d reuses the same per-m work.

Leading coefficients come from exact finite differences along an arithmetic
progression m0, m0 + P, ..., m0 + (deg + 1) P, where the period P is a
multiple of every modulus appearing in the index sets.  The (deg + 1)-th
difference must vanish and a second residue class must give the same
answer; both are checked, never assumed.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .intersection import (
    ChernNumbers,
    ChowElement,
    ch_schur,
    ch_sym_truncated,
    chern_numbers_hypersurface_p4,
    chern_numbers_log_p3,
    chi,
    chi_schur,
    schur_character_polynomials,
)
from .poly import Polynomial, UsageError, VariableTable, eval_univariate, interpolate
from .reps import Signature, enumerate_ds2, enumerate_ds3_dim3, enumerate_gg

__all__ = [
    "DegreeClaimError",
    "JetBundleSpec",
    "LeadingCoefficient",
    "ThresholdResult",
    "GEOMETRIES",
    "GROWTH_DEGREE",
    "PERIOD",
    "geometry",
    "decomposition",
    "character_sum",
    "chi_jets_exact",
    "chi_jets_termwise",
    "leading_character",
    "leading_coefficient",
    "leading_coefficient_poly_in_d",
    "chern_form",
    "difference_audit",
    "positivity_threshold",
]

GEOMETRIES = ("hypersurface-p4", "log-p3")
GROWTH_DEGREE = {("ds", 1): 5, ("gg", 1): 5, ("ds", 2): 7, ("gg", 2): 8, ("ds", 3): 9, ("gg", 3): 11}
PERIOD = {("ds", 1): 1, ("gg", 1): 1, ("ds", 2): 6, ("gg", 2): 6, ("ds", 3): 60, ("gg", 3): 6}
DEFAULT_M0 = 120
# first interpolation node in d
D0 = {"hypersurface-p4": 7, "log-p3": 1}


class DegreeClaimError(AssertionError):
    """A finite difference that should vanish did not (growth order or period claim is wrong)."""


@dataclass(frozen=True)
class JetBundleSpec:
    flavor: str
    k: int
    geometry: str = "hypersurface-p4"
    degree: int | None = None

    def __post_init__(self):
        if self.flavor not in ("ds", "gg"):
            raise UsageError(f"flavor must be 'ds' or 'gg', got {self.flavor!r}")
        if self.k not in (1, 2, 3):
            raise UsageError(f"jet order must be 1, 2 or 3, got {self.k!r}")
        if self.geometry not in GEOMETRIES:
            raise UsageError(f"unknown geometry {self.geometry!r}")

    @property
    def family(self) -> tuple[str, int]:
        return ("ds" if self.k == 1 else self.flavor, self.k)

    def with_degree(self, d: int) -> JetBundleSpec:
        return JetBundleSpec(self.flavor, self.k, self.geometry, d)

    def chern_numbers(self) -> ChernNumbers:
        if self.degree is None:
            raise UsageError("this operation needs a degree d")
        return geometry(self.geometry, self.degree)


@dataclass(frozen=True)
class LeadingCoefficient:
    degree: int
    value: Fraction
    residue_class_used: int
    period: int
    second_residue_class: int | None = None


@dataclass(frozen=True)
class ThresholdResult:
    threshold: int | None
    d_range: tuple[int, int]
    positive: tuple[int, ...]

    @property
    def negative_tail(self) -> bool:
        """True when the coefficient is negative at the end of the range."""
        return self.d_range[1] not in self.positive


def geometry(name: str, d: int) -> ChernNumbers:
    if name == "hypersurface-p4":
        return chern_numbers_hypersurface_p4(d)
    if name == "log-p3":
        return chern_numbers_log_p3(d)
    raise UsageError(f"unknown geometry {name!r}")


def _family(flavor: str, k: int) -> tuple[str, int]:
    if flavor not in ("ds", "gg") or k not in (1, 2, 3):
        raise UsageError(f"no bundle family ({flavor!r}, {k!r})")
    return ("ds" if k == 1 else flavor, k)


def decomposition(flavor: str, k: int, m: int):
    flavor, k = _family(flavor, k)
    if k == 1:
        return [((m, 0, 0),)] if m >= 0 else []
    if flavor == "gg":
        return [t.degrees for t in enumerate_gg(k, m)]
    if k == 2:
        return [t.signature.parts for t in enumerate_ds2(m)]
    return [t.signature.parts for t in enumerate_ds3_dim3(m)]


def _gg_character(degrees) -> ChowElement:
    ch = ch_sym_truncated(degrees[0])
    for l in degrees[1:]:
        ch = ch * ch_sym_truncated(l)
    return ch


def _direct_sum(flavor: str, k: int, m: int) -> ChowElement:
    total = ChowElement.zero()
    if k == 1:
        return ch_sym_truncated(m)
    if flavor == "gg":
        for degrees in decomposition("gg", k, m):
            total = total + _gg_character(degrees)
        return total
    for parts in decomposition("ds", k, m):
        total = total + ch_schur(parts)
    return total


# -- symbolic summation for order-3 invariant jets ---------------------------
#
# With lambda = (a + b + 2g + d, b + g + d, d) and a + 3b + 5g + 6d = m, the
# index set for fixed g is b in [0, Q - 2d], d in [0, D] where N = m - 5g,
# Q = N // 3, D = N // 6 (since 6d is a multiple of 3, floor((N - 6d)/3) = Q - 2d).

SUM_TABLE = VariableTable.plain(("N", "Q", "D", "g", "b", "d"))


@lru_cache(maxsize=None)
def _faulhaber(k: int) -> tuple[Fraction, ...]:
    """sum_{t=0}^{T} t^k as a polynomial in T (low degree first)."""
    xs = list(range(k + 2))
    ys, acc = [], 0
    for t in xs:
        acc += t**k
        ys.append(acc)
    return tuple(interpolate(xs, ys))


def _sum_variable(p: Polynomial, var: str, upper: Polynomial) -> Polynomial:
    """sum_{var=0}^{upper} p, for upper >= -1."""
    total = SUM_TABLE.zero()
    for k, coeff in p.coefficients_in(var).items():
        f = SUM_TABLE.zero()
        for c in reversed(_faulhaber(k)):
            f = f * upper + c
        total = total + coeff * f
    return total


@lru_cache(maxsize=None)
def _ds3_summed_polynomials() -> ChowElement:
    v = SUM_TABLE.var
    images = {
        "l1": v("N") - 2 * v("b") - 5 * v("d") + 2 * v("g"),
        "l2": v("b") + v("g") + v("d"),
        "l3": v("d"),
    }
    out = []
    for coeff in schur_character_polynomials().coeffs:
        p = coeff.substitute(images, target=SUM_TABLE)
        p = _sum_variable(p, "b", v("Q") - 2 * v("d"))
        p = _sum_variable(p, "d", v("D"))
        out.append(_IntegerEvaluator(p))
    return tuple(out)


class _IntegerEvaluator:
    """Evaluate a polynomial in (N, Q, D, g) with integer arithmetic and one final division."""

    def __init__(self, p: Polynomial):
        den = 1
        for c in p.terms.values():
            den = den * c.denominator // _gcd(den, c.denominator)
        self.den = den
        self.terms = [(e[:4], int(c * den)) for e, c in p.terms.items()]
        self.max_exp = max((max(e) for e, _ in self.terms), default=0)

    def __call__(self, values) -> Fraction:
        powers = []
        for x in values:
            row = [1]
            for _ in range(self.max_exp):
                row.append(row[-1] * x)
            powers.append(row)
        total = 0
        for e, c in self.terms:
            total += c * powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]] * powers[3][e[3]]
        return Fraction(total, self.den)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _gg_fast_sum(k: int, m: int) -> ChowElement:
    # peel off the top slot: GG_k(m) = sum_l ch(S^l) * GG_{k-1}(m - k l)
    if k == 1:
        return ch_sym_truncated(m)
    total = ChowElement.zero()
    for l in range(m // k + 1):
        total = total + ch_sym_truncated(l) * character_sum("gg", k - 1, m - k * l, "fast" if k > 2 else "direct")
    return total


def _ds3_fast_sum(m: int) -> ChowElement:
    evaluators = _ds3_summed_polynomials()
    totals = [Fraction(0)] * 7
    g = 0
    while 5 * g <= m:
        n = m - 5 * g
        point = (n, n // 3, n // 6, g)
        for i, ev in enumerate(evaluators):
            totals[i] += ev(point)
        g += 1
    return ChowElement(tuple(totals))


@lru_cache(maxsize=4096)
def character_sum(flavor: str, k: int, m: int, method: str = "auto") -> ChowElement:
    """Sum of the Chern characters of the graded pieces of the weight-m jet bundle.

    ``method`` is ``"direct"`` (term by term), ``"fast"`` (closed-form summation
    for order-3 invariant jets, slot recursion for Green-Griffiths jets) or
    ``"auto"``.
    """
    flavor, k = _family(flavor, k)
    if not isinstance(m, int) or m < 0:
        raise UsageError(f"order must be a non-negative integer, got {m!r}")
    if k == 1:
        return ch_sym_truncated(m)
    if method == "auto":
        method = "fast" if (flavor, k) in (("ds", 3), ("gg", 2), ("gg", 3)) else "direct"
    if method == "fast":
        if (flavor, k) == ("ds", 3):
            return _ds3_fast_sum(m)
        if flavor == "gg":
            return _gg_fast_sum(k, m)
        raise UsageError(f"no fast summation for ({flavor}, k={k})")
    if method != "direct":
        raise UsageError(f"unknown summation method {method!r}")
    return _direct_sum(flavor, k, m)


def chi_jets_exact(spec: JetBundleSpec, m: int, method: str = "auto") -> Fraction:
    return chi(character_sum(spec.flavor, spec.k, m, method), spec.chern_numbers())


def chi_jets_termwise(spec: JetBundleSpec, m: int) -> Fraction:
    """Same Euler characteristic, summing chi of each graded piece separately."""
    cn = spec.chern_numbers()
    flavor, k = spec.family
    total = Fraction(0)
    for term in decomposition(flavor, k, m):
        if flavor == "gg" and k > 1:
            total += chi(_gg_character(term), cn)
        elif k == 1:
            total += chi_schur(term[0], cn)
        else:
            total += chi_schur(Signature(term), cn)
    return total


# -- finite differences -----------------------------------------------------

def _workers() -> int:
    try:
        return max(1, int(os.environ.get("DSJETS_WORKERS", "1")))
    except ValueError:
        return 1


def _values(fn, ms):
    workers = _workers()
    if workers == 1:
        return [fn(m) for m in ms]
    with ThreadPoolExecutor(workers) as pool:
        return list(pool.map(fn, ms))


def _forward_differences(values, order):
    diffs = list(values)
    for _ in range(order):
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    return diffs


def _leading_from_values(values, deg, period, what):
    top = _forward_differences(values, deg)
    extra = _forward_differences(top, 1)
    if any(_nonzero(x) for x in extra):
        raise DegreeClaimError(f"{what}: difference of order {deg + 1} does not vanish")
    return top[0] * Fraction(1, factorial(deg) * period**deg)


def _nonzero(x) -> bool:
    if isinstance(x, ChowElement):
        return any(x.coeffs)
    return bool(x)


@lru_cache(maxsize=None)
def leading_character(flavor: str, k: int, m0: int = DEFAULT_M0, method: str = "auto") -> ChowElement:
    """Leading coefficient in m of the summed Chern character, as a Chow element.

    Computed on the residue classes of ``m0`` and ``m0 + 1`` modulo the period,
    which must agree.
    """
    flavor, k = _family(flavor, k)
    deg, period = GROWTH_DEGREE[(flavor, k)], PERIOD[(flavor, k)]
    results = []
    for start in (m0, m0 + 1):
        ms = [start + j * period for j in range(deg + 2)]
        vals = _values(lambda m: character_sum(flavor, k, m, method), ms)
        results.append(_leading_from_values(vals, deg, period, f"{flavor} k={k} from m={start}"))
    if results[0] != results[1]:
        raise DegreeClaimError(f"{flavor} k={k}: leading coefficients differ between residue classes")
    return results[0]


def difference_audit(flavor: str, k: int, m0: int = DEFAULT_M0) -> dict:
    """Recompute the finite differences behind :func:`leading_character` and report them.

    Unlike ``leading_character`` this never raises; it returns whether the
    (deg + 1)-th difference vanished and whether two residue classes agree.
    """
    flavor, k = _family(flavor, k)
    deg, period = GROWTH_DEGREE[(flavor, k)], PERIOD[(flavor, k)]
    tops, vanish = [], True
    for start in (m0, m0 + 1):
        vals = [character_sum(flavor, k, start + j * period) for j in range(deg + 2)]
        top = _forward_differences(vals, deg)
        vanish = vanish and not any(_nonzero(x) for x in _forward_differences(top, 1))
        tops.append(top[0])
    return {
        "degree": deg,
        "period": period,
        "m0": m0,
        "residue_classes": [m0 % period, (m0 + 1) % period],
        "next_difference_vanishes": vanish,
        "residue_classes_agree": tops[0] == tops[1],
    }


def leading_coefficient(spec: JetBundleSpec, m0: int = DEFAULT_M0, path: str = "character") -> LeadingCoefficient:
    """Coefficient of m^deg in chi(X, E_{k,m}).

    ``path="character"`` pairs the leading summed character with the geometry;
    ``path="termwise"`` takes finite differences of per-term Euler
    characteristics for this geometry only.
    """
    flavor, k = spec.family
    deg, period = GROWTH_DEGREE[(flavor, k)], PERIOD[(flavor, k)]
    if path == "character":
        value = chi(leading_character(flavor, k, m0), spec.chern_numbers())
    elif path == "termwise":
        found = []
        for start in (m0, m0 + 1):
            ms = [start + j * period for j in range(deg + 2)]
            vals = _values(lambda m: chi_jets_termwise(spec, m), ms)
            found.append(_leading_from_values(vals, deg, period, f"{spec} from m={start}"))
        if found[0] != found[1]:
            raise DegreeClaimError(f"{spec}: leading coefficients differ between residue classes")
        value = found[0]
    else:
        raise UsageError(f"unknown path {path!r}")
    return LeadingCoefficient(deg, value, m0 % period, period, (m0 + 1) % period)


def chern_form(flavor: str, k: int) -> tuple[Fraction, Fraction, Fraction]:
    """Leading coefficient as a combination x c1^3 + y c1c2 + z c3; returns (x, y, z)."""
    lead = leading_character(flavor, k)
    if any(lead.coeffs[:4]):
        raise DegreeClaimError("leading character has components below the top degree")
    return lead.coeffs[4], lead.coeffs[5], lead.coeffs[6]


def leading_coefficient_poly_in_d(
    flavor: str, k: int, geometry_name: str = "hypersurface-p4", path: str = "character"
) -> tuple[Fraction, ...]:
    """Leading coefficient as an exact polynomial in d (coefficients low degree first).

    Interpolated through d0..d0+4 and validated at d0+5 and d0+6.  ``path`` is
    passed on to :func:`leading_coefficient`.
    """
    spec = JetBundleSpec(flavor, k, geometry_name)
    d0 = D0[geometry_name]
    nodes = list(range(d0, d0 + 5))
    values = [leading_coefficient(spec.with_degree(d), path=path).value for d in nodes]
    coeffs = interpolate(nodes, values)
    for d in (d0 + 5, d0 + 6):
        got = leading_coefficient(spec.with_degree(d), path=path).value
        if eval_univariate(coeffs, d) != got:
            raise DegreeClaimError(f"{spec}: interpolated polynomial in d fails at d={d}")
    return tuple(coeffs)


def positivity_threshold(flavor: str, k: int, geometry_name: str = "hypersurface-p4", d_range=(1, 200)) -> ThresholdResult:
    """Smallest d such that the leading coefficient is positive for every degree from d to the end of the range."""
    lo, hi = d_range
    if geometry_name == "log-p3":
        lo = max(lo, 0)
    spec = JetBundleSpec(flavor, k, geometry_name)
    lead = leading_character(*_family(flavor, k))
    positive = []
    for d in range(lo, hi + 1):
        if chi(lead, spec.with_degree(d).chern_numbers()) > 0:
            positive.append(d)
    threshold = None
    if positive and positive[-1] == hi:
        threshold = hi
        pos = set(positive)
        while threshold - 1 in pos:
            threshold -= 1
    return ThresholdResult(threshold, (lo, hi), tuple(positive))
