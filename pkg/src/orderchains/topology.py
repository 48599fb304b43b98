"""Topologies ``P(S) ∪ {X}`` on a small ground set and their permutation orbits.

On ``X = {0, ..., n-1}`` the family ``tau_S = P(S) ∪ {X}`` is a topology.
Relabelling points by a permutation ``f`` sends it to ``tau_{f[S]}``, so the
orbit of ``tau_S`` is in bijection with the subsets of size ``|S|`` through
``phi(tau_T) = T``. At finite scale two such sets of equal size are only
comparable when equal, so the inclusion equivalence checked by
:func:`verify_iso` reduces to equality on both sides.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

from .finite import CapExceededError, full, is_subset

MAX_ORBIT = 7


class InvalidTopologyError(ValueError):
    pass


class NotTauShapeError(ValueError):
    """The family is not of the form ``P(T) ∪ {X}`` (with the requested size)."""


def _subsets(s: int):
    """All subsets of bitset ``s``."""
    sub = s
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & s


@dataclass(frozen=True)
class FinTop:
    n: int
    opens: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "opens", frozenset(self.opens))
        x = full(self.n)
        if 0 not in self.opens or x not in self.opens:
            raise InvalidTopologyError("a topology contains ∅ and the ground set")
        ops = list(self.opens)
        for o in ops:
            if o < 0 or not is_subset(o, x):
                raise InvalidTopologyError(f"{o:#x} is not a subset of the ground set")
        for i, a in enumerate(ops):
            for b in ops[i + 1:]:
                if a | b not in self.opens or a & b not in self.opens:
                    raise InvalidTopologyError("not closed under union and intersection")

    def key(self) -> tuple[int, ...]:
        """Canonical form: the sorted list of opens."""
        return tuple(sorted(self.opens))

    def __le__(self, other: "FinTop") -> bool:
        return self.opens <= other.opens

    def __lt__(self, other: "FinTop") -> bool:
        return self.opens < other.opens

    def to_json(self) -> dict:
        return {"n": self.n, "opens": [format(o, "x") for o in self.key()]}


def make_tau(n: int, s: int) -> FinTop:
    if not 0 < s < full(n) or not is_subset(s, full(n)):
        raise ValueError(f"S must be a nonempty proper subset of [0,{n}), got {s:#x}")
    return FinTop(n, frozenset(_subsets(s)) | {full(n)})


def discrete(n: int) -> FinTop:
    return FinTop(n, frozenset(range(full(n) + 1)))


def image_set(f, s: int) -> int:
    out = 0
    for i, j in enumerate(f):
        if s >> i & 1:
            out |= 1 << j
    return out


def image_top(f, t: FinTop) -> FinTop:
    """``{f[O] : O open}`` for a permutation ``f`` given as a sequence."""
    f = tuple(f)
    if sorted(f) != list(range(t.n)):
        raise ValueError(f"{f} is not a permutation of range({t.n})")
    return FinTop(t.n, frozenset(image_set(f, o) for o in t.opens))


def homeo_class(t: FinTop) -> set[FinTop]:
    """The orbit of ``t`` under all permutations of the ground set."""
    if t.n > MAX_ORBIT:
        raise CapExceededError(f"orbit enumeration is capped at n = {MAX_ORBIT}")
    return {image_top(f, t) for f in itertools.permutations(range(t.n))}


def phi(t: FinTop, base: tuple[int, int] | None = None) -> int:
    """The set ``T`` with ``t = P(T) ∪ {X}``.

    ``base = (n, s)`` additionally requires the ground size and ``|T| = s``.
    """
    x = full(t.n)
    proper = [o for o in t.opens if o != x]
    top = 0
    for o in proper:
        top |= o
    if top == x or top not in t.opens or t.opens != frozenset(_subsets(top)) | {x}:
        raise NotTauShapeError("no unique maximal proper open generating the topology")
    if base is not None:
        n, s = base
        if t.n != n or bin(top).count("1") != s:
            raise NotTauShapeError(f"maximal proper open has the wrong size for base {base}")
    return top


def verify_iso(n: int, s: int) -> dict:
    """Check that ``phi`` maps the orbit of ``tau_{[0,s)}`` bijectively onto
    the s-subsets and that ``t1 ⊆ t2 ⇔ phi(t1) ⊆ phi(t2)`` on all pairs."""
    if not 0 < s < n <= MAX_ORBIT:
        raise ValueError(f"need 0 < s < n <= {MAX_ORBIT}, got n={n}, s={s}")
    cls = sorted(homeo_class(make_tau(n, full(s))), key=FinTop.key)
    images = [phi(t, (n, s)) for t in cls]
    targets = {sum(1 << i for i in c) for c in itertools.combinations(range(n), s)}
    bijective = len(set(images)) == len(cls) and set(images) == targets
    inverse_ok = all(make_tau(n, p) == t for t, p in zip(cls, images))
    pairs = ok = 0
    for t1, p1 in zip(cls, images):
        for t2, p2 in zip(cls, images):
            pairs += 1
            ok += (t1 <= t2) == is_subset(p1, p2)
    passed = bijective and inverse_ok and ok == pairs and len(cls) == comb(n, s)
    return {
        "n": n,
        "s": s,
        "class_size": len(cls),
        "expected_class_size": comb(n, s),
        "bijective": bijective,
        "inverse_ok": inverse_ok,
        "pairs_checked": pairs,
        "pairs_ok": ok,
        "passed": passed,
        "table": [
            {"phi": format(p, "x"), "opens": len(t.opens)} for t, p in zip(cls, images)
        ],
        "note": "equal-size subsets are incomparable unless equal, so at finite "
        "scale both sides of the inclusion equivalence reduce to equality",
    }
