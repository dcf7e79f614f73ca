import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from dsjets.linalg import bareiss_rank, clear_denominators, sparse_rank


def fraction_rank(matrix):
    """Plain Gaussian elimination over Fractions, used as a reference."""
    rows = [[Fraction(v) for v in r] for r in matrix]
    rank, col = 0, 0
    ncols = len(rows[0]) if rows else 0
    while rank < len(rows) and col < ncols:
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(rank + 1, len(rows)):
            f = rows[i][col] / rows[rank][col]
            rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


entries = st.integers(-3, 3)
matrices = st.integers(1, 6).flatmap(
    lambda c: st.lists(st.lists(entries, min_size=c, max_size=c), min_size=1, max_size=6)
)


@given(matrices)
@settings(max_examples=150, deadline=None)
def test_bareiss_matches_fraction_elimination(m):
    assert bareiss_rank(m) == fraction_rank(m)


@given(matrices)
@settings(max_examples=150, deadline=None)
def test_sparse_matches_fraction_elimination(m):
    rows = [{j: v for j, v in enumerate(r) if v} for r in m]
    assert sparse_rank(rows) == fraction_rank(m)


def test_rational_entries():
    m = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 1]]
    assert bareiss_rank(m) == 1


def test_clear_denominators():
    assert clear_denominators([Fraction(1, 2), Fraction(1, 3)]) == [3, 2]
    assert clear_denominators({5: Fraction(4), 7: Fraction(6)}) == {5: 2, 7: 3}


def test_large_random_sparse():
    rng = random.Random(1)
    base = [{j: rng.randint(-9, 9) for j in rng.sample(range(40), 4)} for _ in range(25)]
    # add dependent rows
    extra = []
    for _ in range(10):
        a, b = rng.sample(base, 2)
        row = dict(a)
        for k, v in b.items():
            row[k] = row.get(k, 0) + 2 * v
        extra.append({k: v for k, v in row.items() if v})
    dense = [[r.get(j, 0) for j in range(40)] for r in base + extra]
    assert sparse_rank(base + extra) == fraction_rank(dense) == bareiss_rank(dense)
