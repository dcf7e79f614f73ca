"""Jet-variable rings, reparametrization derivations, generators and brute-force oracles.

The order-3 reparametrization group acts on a jet (f', f'', f''') by

    f'   -> f'
    f''  -> f'' + 2 b2 f'
    f''' -> f''' + 6 b2 f'' + 6 b3 f'

It is a two-parameter abelian unipotent group, so a polynomial is invariant
exactly when it is killed by the two infinitesimal generators ``D_b2`` and
``D_b3``.  The oracles below compute kernels of these derivations on graded
pieces of the polynomial ring by exact integer elimination, block by block
(the derivations preserve the GL-weight, and permuting the coordinates
permutes the blocks).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .checks import Check, check_equal, require
from .linalg import bareiss_rank, sparse_rank
from .poly import Derivation, Polynomial, UsageError, VariableTable

__all__ = [
    "ResourceLimitError",
    "JetRing",
    "Generator",
    "GeneratorSet",
    "jet_ring",
    "reparam_derivations",
    "raising_derivations",
    "build_generators",
    "verify_invariance",
    "verify_group_action",
    "verify_relation_R",
    "verify_plucker",
    "invariant_dimension_oracle",
    "highest_weight_oracle",
    "hw_monomial",
    "verify_hw_monomials",
    "jacobian_rank",
    "random_point",
    "DEFAULT_MAX_ORDER",
]

JET_ORDER = 3
DEFAULT_MAX_ORDER = 16

_PRIMES = {1: "'", 2: "''", 3: "'''"}


class ResourceLimitError(RuntimeError):
    pass


def jet_name(i: int, r: int) -> str:
    return f"f{i}{_PRIMES[r]}"


@dataclass(frozen=True)
class JetRing:
    n: int
    table: VariableTable
    k: int = JET_ORDER

    def f(self, i: int, r: int) -> Polynomial:
        if not (1 <= i <= self.n and 1 <= r <= self.k):
            raise UsageError(f"no jet variable f_{i}^({r}) when n={self.n}")
        return self.table.var(jet_name(i, r))

    def index(self, i: int, r: int) -> int:
        return self.table.index(jet_name(i, r))

    def w(self, i: int, j: int) -> Polynomial:
        """w_ij = f_i' f_j'' - f_i'' f_j'."""
        f = self.f
        return f(i, 1) * f(j, 2) - f(i, 2) * f(j, 1)

    def w_upper(self, i: int, j: int, k: int) -> Polynomial:
        """w_ij^k = f_k'(f_i' f_j''' - f_i''' f_j') - 3 f_k'' w_ij."""
        f = self.f
        return f(k, 1) * (f(i, 1) * f(j, 3) - f(i, 3) * f(j, 1)) - 3 * f(k, 2) * self.w(i, j)

    def wronskian(self) -> Polynomial:
        if self.n != 3:
            raise UsageError("the Wronskian generator needs n = 3")
        f = self.f
        total = self.table.zero()
        for perm in itertools.permutations(range(1, 4)):
            sign = _perm_sign(perm)
            total = total + sign * f(perm[0], 1) * f(perm[1], 2) * f(perm[2], 3)
        return total


def _perm_sign(perm) -> int:
    sign = 1
    p = list(perm)
    for a in range(len(p)):
        for b in range(a + 1, len(p)):
            if p[a] > p[b]:
                sign = -sign
    return sign


@lru_cache(maxsize=None)
def jet_ring(n: int) -> JetRing:
    if n not in (2, 3):
        raise UsageError(f"ambient dimension must be 2 or 3, got {n!r}")
    names, rw, gw = [], [], []
    for r in range(1, JET_ORDER + 1):
        for i in range(1, n + 1):
            names.append(jet_name(i, r))
            rw.append(r)
            gw.append(tuple(1 if a == i else 0 for a in range(1, n + 1)))
    return JetRing(n, VariableTable(tuple(names), tuple(rw), tuple(gw)))


def reparam_derivations(ring: JetRing) -> tuple[Derivation, Derivation]:
    f = ring.f
    d_b2 = {}
    d_b3 = {}
    for i in range(1, ring.n + 1):
        d_b2[jet_name(i, 2)] = 2 * f(i, 1)
        d_b2[jet_name(i, 3)] = 6 * f(i, 2)
        d_b3[jet_name(i, 3)] = 6 * f(i, 1)
    return Derivation(ring.table, d_b2), Derivation(ring.table, d_b3)


def raising_derivations(ring: JetRing) -> dict[tuple[int, int], Derivation]:
    """R_ij (i < j): f_j^(r) -> f_i^(r), the upper-unipotent directions of GL_n."""
    out = {}
    for i, j in itertools.combinations(range(1, ring.n + 1), 2):
        out[(i, j)] = Derivation(ring.table, {jet_name(j, r): ring.f(i, r) for r in range(1, ring.k + 1)})
    return out


@dataclass(frozen=True)
class Generator:
    name: str
    poly: Polynomial
    reparam_weight: int
    gl_weight: tuple[int, ...]


@dataclass(frozen=True)
class GeneratorSet:
    ring: JetRing
    generators: tuple[Generator, ...]

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __getitem__(self, name: str) -> Polynomial:
        for g in self.generators:
            if g.name == name:
                return g.poly
        raise KeyError(name)

    def subset(self, names) -> GeneratorSet:
        names = list(names)
        by_name = {g.name: g for g in self.generators}
        missing = [n for n in names if n not in by_name]
        if missing:
            raise UsageError(f"unknown generators {missing}")
        return GeneratorSet(self.ring, tuple(by_name[n] for n in names))

    @property
    def names(self) -> list[str]:
        return [g.name for g in self.generators]


def _unit(n, *idx):
    w = [0] * n
    for i in idx:
        w[i - 1] += 1
    return tuple(w)


def build_generators(ring: JetRing) -> GeneratorSet:
    """The generators f_i', w_ij, w_ij^k (and W when n = 3) with their declared weights."""
    n = ring.n
    gens = [Generator(f"f{i}'", ring.f(i, 1), 1, _unit(n, i)) for i in range(1, n + 1)]
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    gens += [Generator(f"w{i}{j}", ring.w(i, j), 3, _unit(n, i, j)) for i, j in pairs]
    gens += [
        Generator(f"w{i}{j}^{k}", ring.w_upper(i, j, k), 5, _unit(n, i, j, k))
        for i, j in pairs
        for k in range(1, n + 1)
    ]
    if n == 3:
        gens.append(Generator("W", ring.wronskian(), 6, (1, 1, 1)))
    return GeneratorSet(ring, tuple(gens))


def generator(ring: JetRing, name: str) -> Polynomial:
    """Look up one generator by name; raises :class:`UsageError` for indices outside 1..n."""
    try:
        return build_generators(ring)[name]
    except KeyError:
        raise UsageError(f"generator {name!r} does not exist for n={ring.n}") from None


_INVARIANCE_ANCHOR = "A3=C[f_i',w_ij,w_ij^k,W]"


def verify_invariance(ring: JetRing, gens: GeneratorSet | None = None, strict: bool = True) -> list[Check]:
    gens = gens or build_generators(ring)
    d_b2, d_b3 = reparam_derivations(ring)
    checks = []
    for g in gens:
        for label, d in (("D_b2", d_b2), ("D_b3", d_b3)):
            img = d(g.poly)
            checks.append(Check(f"{label}({g.name}) = 0 [n={ring.n}]", str(img), "0", img.is_zero(), _INVARIANCE_ANCHOR))
        checks.append(
            Check(
                f"weights of {g.name} [n={ring.n}]",
                {"reparam": sorted(g.poly.reparam_weights()), "gl": sorted(g.poly.gl_weights())},
                {"reparam": [g.reparam_weight], "gl": [g.gl_weight]},
                g.poly.reparam_weights() == {g.reparam_weight} and g.poly.gl_weights() == {g.gl_weight},
                _INVARIANCE_ANCHOR,
            )
        )
    return require(checks) if strict else checks


def group_element(ring: JetRing, b2, b3) -> dict[str, Polynomial]:
    """Images of the jet variables under the reparametrization with parameters (b2, b3)."""
    f = ring.f
    images = {}
    for i in range(1, ring.n + 1):
        images[jet_name(i, 1)] = f(i, 1)
        images[jet_name(i, 2)] = f(i, 2) + 2 * Fraction(b2) * f(i, 1)
        images[jet_name(i, 3)] = f(i, 3) + 6 * Fraction(b2) * f(i, 2) + 6 * Fraction(b3) * f(i, 1)
    return images


def verify_group_action(ring: JetRing, gens: GeneratorSet | None = None, seed: int = 0, strict: bool = True) -> list[Check]:
    """Substitute one random group element exactly and compare each generator with itself."""
    gens = gens or build_generators(ring)
    rng = random.Random(seed)
    b2 = Fraction(rng.randint(-97, 97), rng.randint(1, 97))
    b3 = Fraction(rng.randint(-97, 97), rng.randint(1, 97))
    images = group_element(ring, b2, b3)
    checks = []
    for g in gens:
        moved = g.poly.substitute(images)
        checks.append(
            Check(
                f"group element b2={b2}, b3={b3} fixes {g.name} [n={ring.n}]",
                str(moved - g.poly),
                "0",
                moved == g.poly,
                "(f∘φ)'''=f'''+6b2f''+6b3f'",
            )
        )
    return require(checks) if strict else checks


_RELATION_ANCHOR = "3(w12)^2=f2'w12^1-f1'w12^2"


def relation_R_residual(ring: JetRing) -> Polynomial:
    w = ring.w(1, 2)
    return 3 * w * w - ring.f(2, 1) * ring.w_upper(1, 2, 1) + ring.f(1, 1) * ring.w_upper(1, 2, 2)


def verify_relation_R(ring: JetRing | None = None, seed: int = 0, points: int = 5, strict: bool = True) -> list[Check]:
    ring = ring or jet_ring(2)
    if ring.n != 2:
        raise UsageError("relation (R) is stated for n = 2")
    residual = relation_R_residual(ring)
    checks = [Check("relation (R) expands to zero", str(residual), "0", residual.is_zero(), _RELATION_ANCHOR)]
    lhs = 3 * ring.w(1, 2) ** 2
    rhs = ring.f(2, 1) * ring.w_upper(1, 2, 1) - ring.f(1, 1) * ring.w_upper(1, 2, 2)
    rng = random.Random(seed)
    for t in range(points):
        pt = random_point(ring, rng, rational=True)
        a, b = lhs.evaluate(pt), rhs.evaluate(pt)
        checks.append(check_equal(f"relation (R) at random point #{t + 1}", a, b, _RELATION_ANCHOR))
    return require(checks) if strict else checks


def verify_plucker(ring: JetRing | None = None, strict: bool = True) -> list[Check]:
    ring = ring or jet_ring(3)
    f = ring.f
    residual = f(1, 1) * ring.w(2, 3) - f(2, 1) * ring.w(1, 3) + f(3, 1) * ring.w(1, 2)
    checks = [Check("Plücker identity f1'w23 - f2'w13 + f3'w12 = 0", str(residual), "0", residual.is_zero(), "w_ij=f_i'f_j''-f_i''f_j'")]
    return require(checks) if strict else checks


def random_point(ring: JetRing, rng: random.Random, rational: bool = False) -> dict[str, Fraction]:
    pt = {}
    for name in ring.table.names:
        num = rng.randint(1, 97)
        den = rng.randint(1, 97) if rational else 1
        pt[name] = Fraction(num, den)
    return pt


# -- graded pieces ---------------------------------------------------------

def _local_exponents(mu_i: int):
    """(weight, (e1, e2, e3)) for all ways to spread degree mu_i over f', f'', f'''."""
    out = []
    for e3 in range(mu_i + 1):
        for e2 in range(mu_i - e3 + 1):
            e1 = mu_i - e2 - e3
            out.append((e1 + 2 * e2 + 3 * e3, (e1, e2, e3)))
    return out


def block_monomials(ring: JetRing, m: int, mu: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Exponent vectors of reparam weight m and GL-weight mu, in table order."""
    n = ring.n
    partial = {0: [()]}
    for i in range(n):
        nxt: dict[int, list] = {}
        for w, combos in partial.items():
            for lw, e in _local_exponents(mu[i]):
                if w + lw <= m:
                    nxt.setdefault(w + lw, []).extend(c + (e,) for c in combos)
        partial = nxt
    out = []
    for per_coord in partial.get(m, []):
        exps = [0] * len(ring.table)
        for i, e in enumerate(per_coord, start=1):
            for r in range(1, 4):
                exps[ring.index(i, r)] = e[r - 1]
        out.append(tuple(exps))
    out.sort()
    return out


def _gl_blocks(n: int, m: int, dominant_only: bool):
    # total polynomial degree ranges over ceil(m/3)..m
    for deg in range(-(-m // 3), m + 1):
        for mu in itertools.product(range(deg + 1), repeat=n):
            if sum(mu) != deg:
                continue
            if dominant_only and any(a < b for a, b in zip(mu, mu[1:])):
                continue
            yield mu


def _orbit_size(mu) -> int:
    size = factorial(len(mu))
    for v in set(mu):
        size //= factorial(mu.count(v))
    return size


def _monomial_image(der: Derivation, exps: tuple[int, ...]) -> dict[tuple[int, ...], Fraction]:
    out: dict[tuple[int, ...], Fraction] = {}
    for i, img in der.images.items():
        k = exps[i]
        if not k:
            continue
        base = list(exps)
        base[i] -= 1
        for g, c in img._terms.items():
            h = tuple(a + b for a, b in zip(base, g))
            out[h] = out.get(h, 0) + k * c
    return out


def _kernel_dimension(monomials, derivations) -> int:
    """dim of the joint kernel of ``derivations`` on span(monomials), by exact integer rank."""
    if not monomials:
        return 0
    index: dict[tuple, int] = {}
    rows = []
    for mono in monomials:
        row: dict[int, int] = {}
        for t, der in enumerate(derivations):
            for target, c in _monomial_image(der, mono).items():
                key = index.setdefault((t, target), len(index))
                row[key] = row.get(key, 0) + int(c)  # derivation images have integer coefficients
        rows.append(row)
    return len(monomials) - sparse_rank(rows)


def _check_resource(n, m, allow_large):
    if n not in (2, 3):
        raise UsageError(f"ambient dimension must be 2 or 3, got {n!r}")
    if not isinstance(m, int) or m < 0:
        raise UsageError(f"order must be a non-negative integer, got {m!r}")
    if n == 3 and m > DEFAULT_MAX_ORDER and not allow_large:
        raise ResourceLimitError(f"m={m} exceeds the default bound {DEFAULT_MAX_ORDER} for n=3; pass allow_large=True")


@lru_cache(maxsize=None)
def invariant_dimension_oracle(n: int, m: int, allow_large: bool = False) -> int:
    """Dimension of the reparametrization invariants of reparam weight m (brute force)."""
    _check_resource(n, m, allow_large)
    if m == 0:
        return 1
    ring = jet_ring(n)
    ders = reparam_derivations(ring)
    total = 0
    for mu in _gl_blocks(n, m, dominant_only=True):
        # coordinate permutations commute with both derivations
        total += _orbit_size(mu) * _kernel_dimension(block_monomials(ring, m, mu), ders)
    return total


@lru_cache(maxsize=None)
def highest_weight_oracle(n: int, m: int, allow_large: bool = False) -> int:
    """Number of highest-weight vectors among the weight-m invariants (= number of irreducible summands)."""
    _check_resource(n, m, allow_large)
    if m == 0:
        return 1
    ring = jet_ring(n)
    ders = list(reparam_derivations(ring)) + list(raising_derivations(ring).values())
    total = 0
    for mu in _gl_blocks(n, m, dominant_only=False):
        total += _kernel_dimension(block_monomials(ring, m, mu), ders)
    return total


def hw_monomial(ring: JetRing, alpha: int, beta: int, gamma: int, delta: int = 0) -> Polynomial:
    """(f1')^alpha (w12)^beta (w12^1)^gamma W^delta."""
    if delta and ring.n != 3:
        raise UsageError("W only exists for n = 3")
    p = ring.f(1, 1) ** alpha * ring.w(1, 2) ** beta * ring.w_upper(1, 2, 1) ** gamma
    if delta:
        p = p * ring.wronskian() ** delta
    return p


def hw_weight_formula(n: int, alpha: int, beta: int, gamma: int, delta: int = 0) -> tuple[int, ...]:
    w = (alpha + beta + 2 * gamma + delta, beta + gamma + delta, delta)
    return w[:n]


def verify_hw_monomials(n: int, m_max: int, strict: bool = True) -> list[Check]:
    ring = jet_ring(n)
    ders = list(reparam_derivations(ring)) + list(raising_derivations(ring).values())
    checks = []
    max_delta = m_max // 6 if n == 3 else 0
    for delta in range(max_delta + 1):
        for gamma in range((m_max - 6 * delta) // 5 + 1):
            for beta in range((m_max - 6 * delta - 5 * gamma) // 3 + 1):
                for alpha in range(m_max - 6 * delta - 5 * gamma - 3 * beta + 1):
                    if alpha + beta + gamma + delta == 0:
                        continue
                    p = hw_monomial(ring, alpha, beta, gamma, delta)
                    killed = all(d(p).is_zero() for d in ders)
                    weight = hw_weight_formula(n, alpha, beta, gamma, delta)
                    gl = p.gl_weights()
                    tup = (alpha, beta, gamma, delta) if n == 3 else (alpha, beta, gamma)
                    checks.append(
                        Check(
                            f"highest-weight monomial {tup} [n={n}]",
                            {"annihilated": killed, "gl_weight": sorted(gl)},
                            {"annihilated": True, "gl_weight": [weight]},
                            killed and gl == {weight},
                            "(α+β+2γ+δ;β+γ+δ;δ)",
                        )
                    )
    return require(checks) if strict else checks


# -- transcendence degree --------------------------------------------------

def _jacobian_rank_at(gens: GeneratorSet, point) -> int:
    names = gens.ring.table.names
    partials = [[g.poly.diff(v) for v in names] for g in gens]
    matrix = [[p.evaluate(point) for p in row] for row in partials]
    return bareiss_rank(matrix)


def jacobian_rank(gens: GeneratorSet, point=None, seed: int = 0, attempts: int = 5) -> int:
    """Max over evaluation points of the rank of the Jacobian of ``gens`` in the jet variables."""
    rng = random.Random(seed)
    ceiling = min(len(gens), len(gens.ring.table))
    best = 0
    candidates = [point] if point is not None else []
    while len(candidates) < attempts + (point is not None):
        candidates.append(random_point(gens.ring, rng))
    for pt in candidates:
        if any(Fraction(v) == 0 for v in pt.values()):
            continue
        best = max(best, _jacobian_rank_at(gens, pt))
        if best == ceiling:
            break
    return best
