import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tropchow.complexes import Cell, QuotientVector, WeightedComplex, balancing_check, complex_equal, fan_from_rays
from tropchow.fixtures import FINK_SIGMA1, FINK_SIGMA2, fink_fan
from tropchow.minkowski import cell_sum, fink_skeleton, minkowski_sum, pairwise_sums, standard_plane, sum_index
from tropchow.ratlin import INFINITE, integerize
from tropchow.reconstruct import random_balanced_fan


def minor_gcd_oracle(a, b):
    """Index of Za + Zb in its saturation: gcd of the 2x2 minors of primitive a, b."""
    minors = [a[i] * b[j] - a[j] * b[i] for i in range(len(a)) for j in range(i + 1, len(a))]
    return math.gcd(*minors)


def test_two_rays_weight_one():
    a = fan_from_rays([(1, 0, 0, 0)], [1])
    b = fan_from_rays([(0, 1, 0, 0)], [1])
    (c, m), = minkowski_sum(a, b).cells
    assert m == 1 and c.dim == 2


def test_two_rays_index_two():
    a = fan_from_rays([(1, 1, 0)], [1])
    b = fan_from_rays([(1, -1, 0)], [1])
    (c, m), = minkowski_sum(a, b).cells
    assert m == 2


def test_parallel_rays_give_zero_weight():
    r = Cell.cone([(1, 0, 0, 0)])
    assert sum_index(r, r) == INFINITE
    a = WeightedComplex(3, 1, ((r, 1),))
    recs = pairwise_sums(a, a)
    assert recs[0].raw_weight == 0
    assert minkowski_sum(a, a).cells == ()


def test_translated_points():
    p = WeightedComplex(2, 0, ((Cell.point((0, 1, 2)), 3),))
    q = WeightedComplex(2, 0, ((Cell.point((0, 1, 0)), 2),))
    (c, m), = minkowski_sum(p, q).cells
    assert c.vertices == (QuotientVector((0, 2, 2)),) and m == 6


def test_standard_plane():
    assert standard_plane(0, 3).dim == 0
    assert len(standard_plane(1, 3).cells) == 4
    assert len(standard_plane(2, 4).cells) == 10
    with pytest.raises(ValueError):
        standard_plane(3, 3)


def test_fink_skeleton_collision():
    s1, _ = fink_fan(*FINK_SIGMA1)
    s2, _ = fink_fan(*FINK_SIGMA2)
    f1, f2 = fink_skeleton(s1), fink_skeleton(s2)
    assert complex_equal(f1, f2).equal
    assert not complex_equal(s1, s2, "support_only").equal
    assert balancing_check(f1).balanced


def test_fink_skeleton_dimension_check():
    s1, _ = fink_fan(*FINK_SIGMA1)
    with pytest.raises(ValueError):
        fink_skeleton(s1, k=2)


prim = st.tuples(*[st.integers(-4, 4)] * 3).filter(any)


@settings(max_examples=80, deadline=None)
@given(prim, prim)
def test_ray_sum_weight_matches_minor_oracle(a, b):
    a, b = integerize(a), integerize(b)
    ca, cb = Cell.cone([QuotientVector.from_chart(a)]), Cell.cone([QuotientVector.from_chart(b)])
    idx = sum_index(ca, cb)
    g = minor_gcd_oracle(a, b)
    if g == 0:
        assert idx == INFINITE
    else:
        assert idx == g


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 10**6))
def test_balanced_in_balanced_out(seed):
    rng = random.Random(seed)
    a = random_balanced_fan(rng, nrays=2)
    b = random_balanced_fan(rng, nrays=2)
    s = minkowski_sum(a, b)
    assert balancing_check(s).balanced
    assert complex_equal(s, minkowski_sum(b, a)).equal
