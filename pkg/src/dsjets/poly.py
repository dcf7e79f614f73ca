"""Sparse multivariate polynomials with exact rational coefficients.

Every polynomial lives over a :class:`VariableTable`, which fixes the
variable order and attaches two gradings to each variable: a positive
reparametrization weight and an integer GL-weight vector.  Terms are kept in
a plain dict keyed by exponent tuples; zero coefficients are never stored, so
two polynomials over the same table are equal exactly when their term maps
are equal.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational

__all__ = [
    "UsageError",
    "VariableTable",
    "Polynomial",
    "Derivation",
    "interpolate",
    "eval_univariate",
]


class UsageError(ValueError):
    """Raised for malformed calls: mismatched tables, missing assignments, bad arguments."""


@dataclass(frozen=True)
class VariableTable:
    names: tuple[str, ...]
    reparam_weights: tuple[int, ...]
    gl_weights: tuple[tuple[int, ...], ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        object.__setattr__(self, "reparam_weights", tuple(int(w) for w in self.reparam_weights))
        object.__setattr__(self, "gl_weights", tuple(tuple(int(x) for x in g) for g in self.gl_weights))
        if len(set(names)) != len(names):
            raise UsageError("variable names must be unique")
        if not (len(names) == len(self.reparam_weights) == len(self.gl_weights)):
            raise UsageError("one reparam weight and one gl weight per variable")
        if any(w <= 0 for w in self.reparam_weights):
            raise UsageError("reparam weights must be positive")
        if len({len(g) for g in self.gl_weights}) > 1:
            raise UsageError("gl weights must all have the same length")
        object.__setattr__(self, "_index", {n: i for i, n in enumerate(names)})

    @classmethod
    def plain(cls, names: Iterable[str]) -> VariableTable:
        """Table with unit reparam weights and empty GL weights (for auxiliary rings)."""
        names = tuple(names)
        return cls(names, (1,) * len(names), ((),) * len(names))

    def __len__(self) -> int:
        return len(self.names)

    @property
    def gl_rank(self) -> int:
        return len(self.gl_weights[0]) if self.gl_weights else 0

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UsageError(f"unknown variable {name!r}") from None

    def var(self, name: str) -> Polynomial:
        e = [0] * len(self.names)
        e[self.index(name)] = 1
        return Polynomial(self, {tuple(e): Fraction(1)})

    def const(self, c) -> Polynomial:
        return Polynomial.constant(self, c)

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return Polynomial.constant(self, 1)

    def reparam_weight(self, exps: tuple[int, ...]) -> int:
        return sum(e * w for e, w in zip(exps, self.reparam_weights))

    def gl_weight(self, exps: tuple[int, ...]) -> tuple[int, ...]:
        out = [0] * self.gl_rank
        for e, g in zip(exps, self.gl_weights):
            if e:
                for i, x in enumerate(g):
                    out[i] += e * x
        return tuple(out)


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise UsageError(f"coefficient {c!r} is not an exact rational")


def _grlex_key(exps: tuple[int, ...]):
    return (sum(exps), exps)


class Polynomial:
    """Immutable sparse polynomial.  Supports ``+ - *``, integer powers and equality."""

    __slots__ = ("table", "_terms", "_hash")

    def __init__(self, table: VariableTable, terms: Mapping[tuple[int, ...], object] | None = None):
        self.table = table
        clean: dict[tuple[int, ...], Fraction] = {}
        n = len(table)
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n or any(e < 0 for e in exps):
                raise UsageError(f"bad exponent vector {exps}")
            c = _frac(c)
            if c:
                clean[exps] = clean.get(exps, Fraction(0)) + c
                if not clean[exps]:
                    del clean[exps]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, table, terms):
        # trusted constructor: terms already clean
        p = cls.__new__(cls)
        p.table = table
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, table: VariableTable, c) -> Polynomial:
        c = _frac(c)
        return cls._raw(table, {(0,) * len(table): c} if c else {})

    @classmethod
    def monomial(cls, table: VariableTable, exps, c=1) -> Polynomial:
        return cls(table, {tuple(exps): c})

    # -- inspection -----------------------------------------------------
    @property
    def terms(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self._terms)

    def items(self):
        """Terms in graded-lex order (deterministic)."""
        return sorted(self._terms.items(), key=lambda kv: _grlex_key(kv[0]), reverse=True)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0,) * len(self.table)}

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * len(self.table), Fraction(0))

    def degree(self, name: str | None = None) -> int:
        if not self._terms:
            return -1
        if name is None:
            return max(sum(e) for e in self._terms)
        i = self.table.index(name)
        return max(e[i] for e in self._terms)

    def reparam_weights(self) -> set[int]:
        return {self.table.reparam_weight(e) for e in self._terms}

    def gl_weights(self) -> set[tuple[int, ...]]:
        return {self.table.gl_weight(e) for e in self._terms}

    def variables(self) -> set[str]:
        used = set()
        for e in self._terms:
            used.update(i for i, x in enumerate(e) if x)
        return {self.table.names[i] for i in used}

    # -- arithmetic -----------------------------------------------------
    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.table is not self.table and other.table != self.table:
                raise UsageError("polynomials over different variable tables")
            return other
        return Polynomial.constant(self.table, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial._raw(self.table, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.table, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = _frac(other)
            if not c:
                return Polynomial._raw(self.table, {})
            return Polynomial._raw(self.table, {e: v * c for e, v in self._terms.items()})
        other = self._coerce(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial._raw(self.table, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            if not other.is_constant() or not other:
                raise UsageError("division only by nonzero constants")
            other = other.constant_term()
        c = _frac(other)
        if not c:
            raise ZeroDivisionError("division by zero")
        return self * (1 / c)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise UsageError("exponent must be a non-negative integer")
        result = Polynomial.constant(self.table, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.table == other.table and self._terms == other._terms
        try:
            c = _frac(other)
        except UsageError:
            return NotImplemented
        return self._terms == ({(0,) * len(self.table): c} if c else {})

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.table.names, frozenset(self._terms.items())))
        return self._hash

    # -- structure ------------------------------------------------------
    def graded_component(self, grading: str, value) -> Polynomial:
        """Sum of the terms of exactly the given weight (``grading`` is ``"reparam"`` or ``"gl"``)."""
        if grading == "reparam":
            weight = self.table.reparam_weight
        elif grading == "gl":
            weight = self.table.gl_weight
            value = tuple(value)
        else:
            raise UsageError(f"unknown grading {grading!r}")
        return Polynomial._raw(self.table, {e: c for e, c in self._terms.items() if weight(e) == value})

    def graded_components(self, grading: str) -> dict:
        weight = self.table.reparam_weight if grading == "reparam" else self.table.gl_weight
        parts: dict = {}
        for e, c in self._terms.items():
            parts.setdefault(weight(e), {})[e] = c
        return {w: Polynomial._raw(self.table, t) for w, t in parts.items()}

    def is_homogeneous(self, grading: str) -> bool:
        ws = self.reparam_weights() if grading == "reparam" else self.gl_weights()
        return len(ws) <= 1

    def evaluate(self, point: Mapping[str, object]) -> Fraction:
        values = {}
        for name in self.variables():
            if name not in point:
                raise UsageError(f"no value assigned to {name!r}")
            values[self.table.index(name)] = _frac(point[name])
        total = Fraction(0)
        for e, c in self._terms.items():
            t = c
            for i, k in enumerate(e):
                if k:
                    t *= values[i] ** k
            total += t
        return total

    def diff(self, name: str) -> Polynomial:
        i = self.table.index(name)
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return Polynomial._raw(self.table, out)

    def substitute(self, images: Mapping[str, Polynomial | object], target: VariableTable | None = None) -> Polynomial:
        """Replace variables by polynomials (unlisted variables are kept as themselves).

        ``target`` selects the table of the result; by default it is this table.
        When a different target is given every variable must be listed.
        """
        target = target or self.table
        imgs: list[Polynomial] = []
        for i, name in enumerate(self.table.names):
            if name in images:
                v = images[name]
                imgs.append(v if isinstance(v, Polynomial) else Polynomial.constant(target, v))
            elif target is self.table:
                imgs.append(target.var(name))
            else:
                imgs.append(None)
        power_cache: dict[tuple[int, int], Polynomial] = {}

        def pw(i, k):
            key = (i, k)
            if key not in power_cache:
                if imgs[i] is None:
                    raise UsageError(f"no image for {self.table.names[i]!r}")
                power_cache[key] = imgs[i] ** k
            return power_cache[key]

        result = Polynomial.constant(target, 0)
        for e, c in self._terms.items():
            t = Polynomial.constant(target, c)
            for i, k in enumerate(e):
                if k:
                    t = t * pw(i, k)
            result = result + t
        return result

    def coefficients_in(self, name: str) -> dict[int, Polynomial]:
        """Split as ``sum_k coeff_k * name**k``; the coefficients no longer involve ``name``."""
        i = self.table.index(name)
        parts: dict[int, dict] = {}
        for e, c in self._terms.items():
            f = list(e)
            k = f[i]
            f[i] = 0
            parts.setdefault(k, {})[tuple(f)] = c
        return {k: Polynomial._raw(self.table, t) for k, t in parts.items()}

    def __repr__(self):
        return f"Polynomial({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        chunks = []
        for e, c in self.items():
            mono = "*".join(
                name if k == 1 else f"{name}^{k}" for name, k in zip(self.table.names, e) if k
            )
            if not mono:
                chunks.append(str(c))
            elif c == 1:
                chunks.append(mono)
            elif c == -1:
                chunks.append("-" + mono)
            else:
                chunks.append(f"{c}*{mono}")
        return " + ".join(chunks).replace("+ -", "- ")


class Derivation:
    """A derivation given by the images of finitely many variables; all others map to 0."""

    __slots__ = ("table", "images")

    def __init__(self, table: VariableTable, images: Mapping[str, Polynomial]):
        self.table = table
        imgs = {}
        for name, p in images.items():
            table.index(name)
            if not isinstance(p, Polynomial):
                p = Polynomial.constant(table, p)
            if p.table != table:
                raise UsageError("derivation image over a different table")
            if p:
                imgs[table.index(name)] = p
        self.images = imgs

    def __call__(self, p: Polynomial) -> Polynomial:
        return self.apply(p)

    def apply(self, p: Polynomial) -> Polynomial:
        if p.table != self.table:
            raise UsageError("derivation and polynomial use different tables")
        out: dict[tuple[int, ...], Fraction] = {}
        for e, c in p._terms.items():
            for i, img in self.images.items():
                k = e[i]
                if not k:
                    continue
                f = list(e)
                f[i] -= 1
                for g, d in img._terms.items():
                    h = tuple(a + b for a, b in zip(f, g))
                    out[h] = out.get(h, 0) + c * k * d
        return Polynomial._raw(self.table, {e: c for e, c in out.items() if c})

    def image(self, name: str) -> Polynomial:
        return self.images.get(self.table.index(name), self.table.zero())


def interpolate(xs, ys) -> list[Fraction]:
    """Exact interpolating polynomial through ``(xs[i], ys[i])``; coefficients low degree first."""
    xs = [_frac(x) for x in xs]
    ys = [_frac(y) for y in ys]
    if len(set(xs)) != len(xs):
        raise UsageError("interpolation nodes must be distinct")
    n = len(xs)
    # Newton divided differences, then expand to monomial basis.
    coef = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        # poly = poly * (x - xs[i]) + coef[i]
        shifted = [Fraction(0)] + poly[:-1]
        poly = [s - xs[i] * p for s, p in zip(shifted, poly)]
        poly[0] += coef[i]
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return poly


def eval_univariate(coeffs, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc
