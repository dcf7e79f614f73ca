"""Signatures, Weyl dimensions and the index sets of the jet-bundle decompositions.

All enumerators are total: tuples that fail to be weakly decreasing are
dropped, since the Schur functor of such a tuple is zero.  Output order is
increasing ``gamma`` and then lexicographically decreasing signature.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, prod

from .poly import UsageError

__all__ = [
    "Signature",
    "DecompositionTerm",
    "GGTerm",
    "weyl_dim",
    "enumerate_ds2",
    "enumerate_ds3_dim2",
    "enumerate_ds3_dim3",
    "enumerate_gg",
    "total_dimension",
    "sym_dim",
]


@dataclass(frozen=True, order=True)
class Signature:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if len(parts) not in (2, 3):
            raise UsageError(f"signature must have 2 or 3 parts, got {parts}")
        if any(p < 0 for p in parts):
            raise UsageError(f"signature parts must be non-negative: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise UsageError(f"signature must be weakly decreasing: {parts}")

    @classmethod
    def of(cls, *parts: int) -> Signature:
        return cls(tuple(parts))

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def shifted(self, k: int) -> Signature:
        """Add ``k`` to every part (tensoring with the k-th power of the determinant)."""
        return Signature(tuple(p + k for p in self.parts))

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class DecompositionTerm:
    gamma: int
    signature: Signature
    schur_dim: int
    multiplicity: int = 1


@dataclass(frozen=True)
class GGTerm:
    degrees: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return prod(sym_dim(3, l) for l in self.degrees)


def sym_dim(n: int, r: int) -> int:
    """dim S^r of an n-dimensional space."""
    return comb(r + n - 1, n - 1) if r >= 0 else 0


def weyl_dim(sig) -> int:
    if not isinstance(sig, Signature):
        sig = Signature(tuple(sig))
    p = sig.parts
    if len(p) == 2:
        return p[0] - p[1] + 1
    l1, l2, l3 = p
    return (l1 - l2 + 1) * (l2 - l3 + 1) * (l1 - l3 + 2) // 2


def _term(gamma, parts) -> DecompositionTerm:
    sig = Signature(parts)
    return DecompositionTerm(gamma, sig, weyl_dim(sig))


def _check_order(m):
    if not isinstance(m, int) or m < 0:
        raise UsageError(f"order must be a non-negative integer, got {m!r}")


def enumerate_ds2(m: int) -> list[DecompositionTerm]:
    """Index set of the order-2 decomposition: (l1, l2, 0) with l1 + 2*l2 = m."""
    _check_order(m)
    out = []
    for l2 in range(m // 2, -1, -1):
        l1 = m - 2 * l2
        if l1 >= l2:
            out.append(_term(0, (l1, l2, 0)))
    out.sort(key=lambda t: t.signature.parts, reverse=True)
    return out


def enumerate_ds3_dim2(m: int) -> list[DecompositionTerm]:
    """Order-3 jets on a surface: l1 + 2 l2 = m - g with l1 - l2 >= g and l2 >= g, 5g <= m."""
    _check_order(m)
    out = []
    g = 0
    while 5 * g <= m:
        rest = m - g
        terms = []
        for l2 in range(g, rest // 2 + 1):
            l1 = rest - 2 * l2
            if l1 - l2 >= g:
                terms.append(_term(g, (l1, l2)))
        terms.sort(key=lambda t: t.signature.parts, reverse=True)
        out.extend(terms)
        g += 1
    return out


def enumerate_ds3_dim3(m: int) -> list[DecompositionTerm]:
    """Order-3 jets on a threefold: l1 + 2 l2 + 3 l3 = m - g with l_i - l_j >= g (i < j), 5g <= m."""
    _check_order(m)
    out = []
    g = 0
    while 5 * g <= m:
        rest = m - g
        terms = []
        for l3 in range(rest // 3 + 1):
            for l2 in range(l3 + g, (rest - 3 * l3) // 2 + 1):
                l1 = rest - 3 * l3 - 2 * l2
                if l1 - l2 >= g and l1 - l3 >= g:
                    terms.append(_term(g, (l1, l2, l3)))
        terms.sort(key=lambda t: t.signature.parts, reverse=True)
        out.extend(terms)
        g += 1
    return out


def enumerate_gg(k: int, m: int) -> list[GGTerm]:
    """All (l1, ..., lk) with l1 + 2 l2 + ... + k lk = m, lexicographically decreasing."""
    if k not in (1, 2, 3):
        raise UsageError(f"Green-Griffiths order must be 1, 2 or 3, got {k!r}")
    _check_order(m)

    def rec(j, rest):
        # j: current slot (1-based weight), fill slots j..k
        if j == 1:
            yield (rest,)
            return
        for lj in range(rest // j, -1, -1):
            for tail in rec(j - 1, rest - j * lj):
                yield tail + (lj,)

    out = [GGTerm(t) for t in rec(k, m)]
    out.sort(key=lambda t: t.degrees, reverse=True)
    return out


def total_dimension(terms) -> int:
    total = 0
    for t in terms:
        total += t.dimension if isinstance(t, GGTerm) else t.schur_dim * t.multiplicity
    return total
