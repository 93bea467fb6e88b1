import random

import pytest

from helpers import EpsPoly

from simperturb import codegen
from simperturb.polys import PREDICATES, SIGN_PREDICATES, orient2d, incircle, table
from simperturb.predicates import Point, orientation


def test_generated_kernels_are_up_to_date():
    assert codegen.target_path().read_text() == codegen.generate()


def test_every_polynomial_has_a_kernel():
    assert all(PREDICATES[name].kernel is not None for name in table())


@pytest.mark.parametrize("name", sorted(table()))
def test_declared_degree_is_exact(name):
    # f(t x) as a polynomial in t: its top power is the total degree.
    f = PREDICATES[name]
    rng = random.Random(name)
    x = [rng.randint(1, 10**6) for _ in range(f.arity)]
    p = f.fn(*[EpsPoly({(1,): v}, 1) for v in x])
    assert max(e[0] for e in p.terms) == f.degree


def test_sign_predicates_are_registered():
    assert set(SIGN_PREDICATES) <= set(PREDICATES)


def test_orient_and_incircle_basics():
    assert orient2d(0, 0, 1, 0, 0, 1) == 1
    assert incircle(0, 0, 2, 0, 0, 2, 1, 1) > 0
    assert incircle(0, 0, 2, 0, 0, 2, 5, 5) < 0
    assert incircle(0, 0, 2, 0, 0, 2, 2, 2) == 0
