import random

import pytest

from starfree import (
    InputError,
    IntersectingFamily,
    PreconditionError,
    ResourceLimitError,
    binomial,
    common_element,
    hm_bound,
    max_nonstar_intersecting,
)


def test_hm_bound_values():
    assert hm_bound(5, 2) == 4  # C(4,1) - C(2,1) + 2
    assert hm_bound(6, 3) == 11  # C(5,2) - C(2,2) + 2
    for k in (2, 3, 4):
        assert hm_bound(2 * k, k) == binomial(2 * k - 1, k - 1) + 1


def test_hm_bound_domain():
    with pytest.raises(InputError):
        hm_bound(4, 1)
    with pytest.raises(InputError):
        hm_bound(3, 2)


def test_intersecting_family_rejects_disjoint_members():
    with pytest.raises(InputError):
        IntersectingFamily.from_subsets(4, 2, [(1, 2), (3, 4)])
    with pytest.raises(InputError):
        IntersectingFamily.from_subsets(5, 2, [(1, 2, 3)])


def test_common_element_sunflower():
    fam = IntersectingFamily.from_subsets(5, 2, [(1, 2), (1, 3), (1, 4), (1, 5)])
    assert common_element(fam) == 1


def test_common_element_small_family_rejected():
    fam = IntersectingFamily.from_subsets(6, 2, [(1, 2), (1, 3), (2, 3)])
    with pytest.raises(PreconditionError):
        common_element(fam)  # size 3 < bound 4


def test_common_element_nonsingleton_rejected():
    # all 3-subsets containing {1,2}: intersection has two elements
    members = [(1, 2, x) for x in range(3, 7)]
    fam = IntersectingFamily.from_subsets(6, 3, members)
    with pytest.raises(PreconditionError):
        common_element(fam)


def test_common_element_random_qualifying_families():
    rng = random.Random(11)
    for trial in range(30):
        n, k = rng.choice([(5, 2), (6, 2), (7, 2), (6, 3)])
        bound = hm_bound(n, k)
        i = rng.randrange(1, n + 1)
        rest = [e for e in range(1, n + 1) if e != i]
        star = []
        seen = set()
        while len(star) < bound + rng.randrange(0, 3):
            pick = tuple(sorted(rng.sample(rest, k - 1)))
            if pick not in seen:
                seen.add(pick)
                star.append(tuple(sorted((i,) + pick)))
            if len(seen) == binomial(n - 1, k - 1):
                break
        fam = IntersectingFamily.from_subsets(n, k, star)
        if len(fam.members) < bound:
            continue
        inter = set(range(1, n + 1))
        for s in fam.members:
            inter &= set(s.elements)
        if inter == {i}:
            assert common_element(fam) == i
        else:
            with pytest.raises(PreconditionError):
                common_element(fam)


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_oracle_matches_bound_k2(n):
    res = max_nonstar_intersecting(n, 2)
    assert res.size == hm_bound(n, 2) - 1
    # witness re-verifies: intersecting with empty common intersection
    fam = IntersectingFamily(n, 2, res.witness)
    inter = set(range(1, n + 1))
    for s in fam.members:
        inter &= set(s.elements)
    assert inter == set()


def test_oracle_witness_kg62():
    res = max_nonstar_intersecting(6, 2)
    assert res.size == 3
    assert [s.elements for s in res.witness] == [(1, 2), (1, 3), (2, 3)]


@pytest.mark.parametrize("n,k", [(6, 3), (7, 3)])
def test_oracle_matches_bound_k3(n, k):
    res = max_nonstar_intersecting(n, k)
    assert res.size == hm_bound(n, k) - 1


def test_oracle_cap():
    with pytest.raises(ResourceLimitError):
        max_nonstar_intersecting(9, 3)  # C(9,3) = 84 > default cap
    with pytest.raises(InputError):
        max_nonstar_intersecting(4, 1)
