import itertools
import random
from math import comb

import pytest

from orderchains.finite import CapExceededError
from orderchains.topology import (
    FinTop,
    InvalidTopologyError,
    NotTauShapeError,
    discrete,
    homeo_class,
    image_set,
    image_top,
    make_tau,
    phi,
    verify_iso,
)


def is_topology(n, opens):
    """Oracle: closure under all unions and intersections of subfamilies."""
    x = (1 << n) - 1
    if 0 not in opens or x not in opens:
        return False
    ops = list(opens)
    for r in range(2, len(ops) + 1):
        for fam in itertools.combinations(ops, r):
            u, i = 0, x
            for o in fam:
                u |= o
                i &= o
            if u not in opens or i not in opens:
                return False
    return True


def test_make_tau_examples():
    t = make_tau(4, 0b0011)
    assert sorted(t.opens) == [0, 0b1, 0b10, 0b11, 0b1111]
    assert len(make_tau(3, 0b1).opens) == 3
    with pytest.raises(ValueError):
        make_tau(2, 0b11)
    with pytest.raises(ValueError):
        make_tau(2, 0)


@pytest.mark.parametrize("n", range(2, 5))
def test_make_tau_is_a_topology(n):
    for s in range(1, (1 << n) - 1):
        assert is_topology(n, make_tau(n, s).opens)


def test_fintop_rejects_non_topologies():
    with pytest.raises(InvalidTopologyError):
        FinTop(2, {0, 0b1, 0b10, 0b11} - {0b11})
    with pytest.raises(InvalidTopologyError):
        FinTop(3, {0, 0b1, 0b10, 0b111})


def test_image_top_examples():
    t = make_tau(4, 0b0011)
    assert image_top(range(4), t) == t
    assert image_top((2, 1, 0, 3), t) == make_tau(4, 0b0110)
    rng = random.Random(1)
    for _ in range(50):
        f, g = rng.sample(range(5), 5), rng.sample(range(5), 5)
        t = make_tau(5, rng.randrange(1, 31))
        gf = [g[f[i]] for i in range(5)]
        assert image_top(g, image_top(f, t)) == image_top(gf, t)
    with pytest.raises(ValueError):
        image_top((0, 0, 1, 2), t if t.n == 4 else make_tau(4, 1))


def test_homeo_class_examples():
    assert len(homeo_class(make_tau(4, 0b11))) == 6
    assert len(homeo_class(make_tau(3, 0b1))) == 3
    assert homeo_class(discrete(3)) == {discrete(3)}
    with pytest.raises(CapExceededError):
        homeo_class(make_tau(8, 1))


def test_phi_examples():
    assert phi(make_tau(4, 0b11)) == 0b11
    assert phi(image_top((2, 1, 0, 3), make_tau(4, 0b11))) == 0b110
    with pytest.raises(NotTauShapeError):
        phi(discrete(3))
    with pytest.raises(NotTauShapeError):
        phi(make_tau(4, 0b11), (4, 3))


def test_phi_commutes_with_relabelling():
    rng = random.Random(6)
    for _ in range(1000):
        f = rng.sample(range(6), 6)
        s = rng.randrange(1, 63)
        assert phi(image_top(f, make_tau(6, s))) == image_set(f, s)


def test_verify_iso_examples():
    r = verify_iso(4, 2)
    assert r["class_size"] == 6 and r["pairs_checked"] == 36 == r["pairs_ok"]
    assert r["bijective"] and r["inverse_ok"] and r["passed"]
    assert "equal" in r["note"]
    assert verify_iso(3, 1)["class_size"] == 3
    with pytest.raises(ValueError):
        verify_iso(5, 5)


@pytest.mark.parametrize("n", range(2, 6))
def test_verify_iso_small(n):
    for s in range(1, n):
        r = verify_iso(n, s)
        assert r["passed"] and r["class_size"] == comb(n, s)
