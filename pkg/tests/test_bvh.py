import numpy as np
from hypothesis import given, settings, strategies as st

from simperturb.bvh import BoxTree


def brute_pairs(a, b=None):
    def hit(p, q):
        return p[0] <= q[2] and q[0] <= p[2] and p[1] <= q[3] and q[1] <= p[3]

    if b is None:
        return {(i, j) for i in range(len(a)) for j in range(i + 1, len(a)) if hit(a[i], a[j])}
    return {(i, j) for i in range(len(a)) for j in range(len(b)) if hit(a[i], b[j])}


def random_boxes(rng, n):
    lo = rng.uniform(0, 100, size=(n, 2))
    size = rng.exponential(5, size=(n, 2))
    return np.hstack([lo, lo + size]).tolist()


@settings(max_examples=30, deadline=None)
@given(n=st.integers(0, 120), m=st.integers(0, 60), seed=st.integers(0, 1000))
def test_pairs_match_brute_force(n, m, seed):
    rng = np.random.default_rng(seed)
    a, b = random_boxes(rng, n), random_boxes(rng, m)
    got = {tuple(sorted(p)) for p in BoxTree(a).pairs()}
    assert got == brute_pairs(a)
    assert set(BoxTree(a).pairs(BoxTree(b))) == brute_pairs(a, b)


def test_touching_boxes_are_reported():
    boxes = [(0, 0, 1, 1), (1, 1, 2, 2), (3, 3, 4, 4)]
    assert {tuple(sorted(p)) for p in BoxTree(boxes).pairs()} == {(0, 1)}


def test_stab_y():
    rng = np.random.default_rng(5)
    boxes = random_boxes(rng, 200)
    tree = BoxTree(boxes)
    for y in (0.0, 17.5, 50.0, 99.0, 200.0):
        want = {i for i, b in enumerate(boxes) if b[1] <= y <= b[3]}
        assert set(tree.stab_y(y)) == want
