"""Shared term generators and oracles for the test suite."""

from __future__ import annotations

import itertools
from fractions import Fraction

from hypothesis import strategies as st

from orderchains.elements import CantorPt, LazySeq, compare, elements, jump_rights
from orderchains.terms import Cantor, DropMax, DropMin, Fin, Omega, Q, Reverse, Sum, SumOver, Zset


def grow(prev: list, sum_over: bool = False) -> list:
    """All terms one level deeper than ``prev`` (which is kept)."""
    out = list(prev) + [Reverse(t) for t in prev] + [Sum(a, b) for a in prev for b in prev]
    if sum_over:
        out += [SumOver(a, b) for a in prev for b in prev]
    return list(dict.fromkeys(out))


def terms_up_to(atoms, depth: int, sum_over: bool = False) -> list:
    """Every term over ``atoms`` whose depth (atoms count 1) is at most ``depth``."""
    out = list(atoms)
    for _ in range(depth - 1):
        out = grow(out, sum_over)
    return out


def push_reverse(t):
    """Push reversal down to the atoms; ``Fin``, ``Z``, ``Q`` and ``C`` are
    self-dual, ``w*`` stays."""
    if isinstance(t, Reverse):
        s = t.term
        if isinstance(s, Reverse):
            return push_reverse(s.term)
        if isinstance(s, Sum):
            return Sum(push_reverse(Reverse(s.right)), push_reverse(Reverse(s.left)))
        if isinstance(s, SumOver):
            return SumOver(push_reverse(Reverse(s.index)), push_reverse(Reverse(s.summand)))
        if isinstance(s, (Fin, Zset, Q, Cantor)):
            return s
        return t
    if isinstance(t, Sum):
        return Sum(push_reverse(t.left), push_reverse(t.right))
    if isinstance(t, SumOver):
        return SumOver(push_reverse(t.index), push_reverse(t.summand))
    return t


def ternary_value(c: CantorPt) -> Fraction:
    """``sum 2*bit_i / 3**(i+1)`` of ``word + tail*inf``."""
    v = Fraction(0)
    for i, b in enumerate(c.word):
        v += Fraction(2 * int(b), 3 ** (i + 1))
    if c.tail:
        # 2 * sum_{i >= len} 3**-(i+1) = 3**-len
        v += Fraction(1, 3 ** len(c.word))
    return v


def prefix(it, n: int) -> list:
    return list(itertools.islice(it, n))


def sorted_sample(t, n: int) -> list:
    from functools import cmp_to_key

    return sorted(LazySeq(elements(t)).prefix(n), key=cmp_to_key(lambda a, b: compare(t, a, b)))


# --------------------------------------------------------------------------
# hypothesis strategies

REALIZABLE_ATOMS = st.sampled_from([Fin(1), Fin(2), Fin(3), Omega(), Zset(), Q(), Cantor()])


def realizable_terms(max_leaves: int = 6, sum_over: bool = True, drops: bool = False):
    def extend(children):
        opts = [
            st.builds(Sum, children, children),
            st.builds(Reverse, children),
        ]
        if sum_over:
            opts.append(st.builds(SumOver, children, children))
        return st.one_of(*opts)

    base = st.recursive(REALIZABLE_ATOMS, extend, max_leaves=max_leaves)
    if not drops:
        return base
    return st.one_of(
        base,
        st.builds(DropMin, st.just(Cantor())),
        st.builds(DropMax, st.just(Cantor())),
        st.builds(lambda: DropMin(DropMax(Cantor()))),
    )


def jump_prefix(t, n: int) -> list:
    return LazySeq(jump_rights(t)).prefix(n)


def random_term(rng, depth: int):
    """A random realizable term of depth at most ``depth``."""
    atoms = [Fin(1), Fin(2), Fin(3), Omega(), Zset(), Q(), Cantor()]
    if depth <= 1 or rng.random() < 0.25:
        return rng.choice(atoms)
    k = rng.randrange(3)
    if k == 0:
        return Reverse(random_term(rng, depth - 1))
    if k == 1:
        return Sum(random_term(rng, depth - 1), random_term(rng, depth - 1))
    return SumOver(random_term(rng, depth - 1), random_term(rng, depth - 1))


def sample_oracle(t, n: int = 64, wide: int = 512) -> tuple[bool, bool, bool]:
    """Brute-force (dense_jumps, has_min, has_max) from enumerated points.

    Jumps are searched among the first ``wide`` points; a jump inside an
    interval lies inside every larger one, so checking neighbours of the
    sorted ``n``-sample is enough. An endpoint exists iff the extreme of the
    small sample survives in the wide one.
    """
    from orderchains.elements import cmp_key, pred

    seq = LazySeq(elements(t))
    small, big = seq.prefix(n), seq.prefix(wide)
    if not small:
        return True, False, False
    key = cmp_key(t)
    jumps = [(p, y) for y in big if (p := pred(t, y)) is not None]
    srt = sorted(small, key=key)

    def has_jump(a, b):
        return any(compare(t, a, p) <= 0 and compare(t, y, b) <= 0 for p, y in jumps)

    dj = all(has_jump(a, b) for a, b in zip(srt, srt[1:]))
    hm = srt[0] == min(big, key=key)
    hx = srt[-1] == max(big, key=key)
    return dj, hm, hx
