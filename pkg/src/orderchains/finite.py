"""Maximal chains in the power set of a small finite set, by brute force.

Subsets of ``{0, ..., n-1}`` are int bitsets.
"""

from __future__ import annotations

from dataclasses import dataclass

MAX_ENUM = 6
# above this, maximality is decided structurally instead of by trying all 2**n sets
MAX_BRUTE = 16


class CapExceededError(ValueError):
    pass


def full(n: int) -> int:
    return (1 << n) - 1


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def comparable(a: int, b: int) -> bool:
    return is_subset(a, b) or is_subset(b, a)


@dataclass(frozen=True)
class FiniteChain:
    n: int
    sets: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sets", tuple(self.sets))
        if self.n < 0:
            raise ValueError("ground size must be nonnegative")
        for s in self.sets:
            if s < 0 or s > full(self.n):
                raise ValueError(f"{s:#x} is not a subset of [0,{self.n})")
        for a, b in zip(self.sets, self.sets[1:]):
            if a == b or not is_subset(a, b):
                raise ValueError("sets must be strictly increasing under inclusion")

    @classmethod
    def of(cls, n: int, family) -> "FiniteChain":
        """Sort a pairwise comparable family into a chain."""
        return cls(n, tuple(sorted(set(family), key=lambda s: (bin(s).count("1"), s))))

    def to_hex(self) -> list[str]:
        return [format(s, "x") for s in self.sets]

    @classmethod
    def from_hex(cls, n: int, items) -> "FiniteChain":
        return cls(n, tuple(int(x, 16) for x in items))

    def __len__(self):
        return len(self.sets)


def is_chain(family) -> bool:
    fam = list(family)
    return all(comparable(a, b) for i, a in enumerate(fam) for b in fam[i + 1:])


def enumerate_max_chains(n: int) -> list[FiniteChain]:
    """All maximal chains of ``(P(n), ⊂)``, grown one point at a time from ∅."""
    if not 0 <= n <= MAX_ENUM:
        raise CapExceededError(f"n must be in [0, {MAX_ENUM}], got {n}")
    out = []

    def grow(path):
        top = path[-1]
        if top == full(n):
            out.append(FiniteChain(n, tuple(path)))
            return
        for i in range(n):
            if not top >> i & 1:
                grow(path + [top | 1 << i])

    grow([0])
    return out


def insertable(c: FiniteChain) -> list[int]:
    """Subsets outside ``c`` comparable with every member (brute force)."""
    members = set(c.sets)
    return [
        x for x in range(full(c.n) + 1)
        if x not in members and all(comparable(x, s) for s in c.sets)
    ]


def is_maximal_chain(c: FiniteChain) -> bool:
    if c.n <= MAX_BRUTE:
        return not insertable(c)
    # a chain is maximal iff it runs from ∅ to the ground set in single steps
    if not c.sets or c.sets[0] != 0 or c.sets[-1] != full(c.n):
        return False
    return all(bin(b ^ a).count("1") == 1 for a, b in zip(c.sets, c.sets[1:]))


def init_of_finite_order(perm) -> FiniteChain:
    """Initial segments of the order ``perm[0] < perm[1] < ...``."""
    perm = list(perm)
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"{perm} is not a permutation of range({n})")
    sets, acc = [0], 0
    for p in perm:
        acc |= 1 << p
        sets.append(acc)
    return FiniteChain(n, tuple(sets))


def claim1_table(c: FiniteChain) -> dict[int, tuple[int, int]]:
    """``alpha -> (A_alpha, B_alpha)`` for alpha in the union minus the
    intersection. A is the union of members missing alpha, B the
    intersection of members containing it."""
    union = inter = 0
    if c.sets:
        inter = full(c.n)
        for s in c.sets:
            union |= s
            inter &= s
    out = {}
    for alpha in range(c.n):
        bit = 1 << alpha
        if not union & bit or inter & bit:
            continue
        a, b = 0, full(c.n)
        for s in c.sets:
            if s & bit:
                b &= s
            else:
                a |= s
        out[alpha] = (a, b)
    return out


def check_claim1(c: FiniteChain) -> bool:
    """A and B belong to the chain, B = A ∪ {alpha}, and alpha -> A is
    injective. False (not an exception) on chains where this breaks."""
    members = set(c.sets)
    table = claim1_table(c)
    seen = set()
    for alpha, (a, b) in table.items():
        if a not in members or b not in members or b != a | 1 << alpha:
            return False
        if a in seen:
            return False
        seen.add(a)
    return True


def day_check(c: FiniteChain) -> bool:
    """Has ∅ and the ground set; consecutive members form jumps, which makes
    jumps dense in a finite chain."""
    if not c.sets or c.sets[0] != 0 or c.sets[-1] != full(c.n):
        return False
    # consecutive members are strictly nested (FiniteChain enforces it) and
    # nothing lies between them, so each consecutive pair is a jump
    return True
