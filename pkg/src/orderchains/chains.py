"""Maximal chains of sets built from the jump endpoints of a realizable order.

For a weakly Boolean order L let D be the set of points with an immediate
predecessor. The map ``a -> D ∩ (-inf, a]`` sends L onto a maximal chain of
subsets of D. Here D is enumerated in a fixed structural order
``d_0, d_1, ...`` and each point's image is reported on the first ``n``
indices as an int bitset (bit i set iff ``d_i <= a``).

Only successor-cut maximality can be checked on a finite prefix: crossing
the jump ``(partner(d_i), d_i)`` must add exactly index ``i``. Limit cuts are
covered by the symbolic ``dedekind_complete`` flag in the verdict.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from .cardinals import CardinalChain
from .elements import (
    LazySeq,
    NotRealizableError,
    _check_realizable,
    code_to_json,
    compare,
    is_valid_code,
    jump_rights,
    pred,
)
from .props import Target, Verdict, check
from .terms import Term, realizable, render, term_chain


class NotInDError(ValueError):
    """The code is not a jump right-endpoint of the term."""


class BuildRefused(Exception):
    """The term fails the verdict for the requested target."""

    def __init__(self, verdict: Verdict):
        super().__init__(f"verdict failed: {', '.join(verdict.failed_conditions)}")
        self.verdict = verdict


def is_jump_right(t: Term, code) -> bool:
    return is_valid_code(t, code) and pred(t, code) is not None


def jump_partner(t: Term, d):
    """The point immediately below ``d``."""
    if not is_valid_code(t, d):
        raise NotInDError(f"{d!r} is not a valid code of {render(t)}")
    p = pred(t, d)
    if p is None:
        raise NotInDError(f"{d!r} has no immediate predecessor in {render(t)}")
    return p


class DEnum:
    """Memoized structural enumeration of D; safe for concurrent use."""

    # how far index() scans before giving up on a code it has verified is in D
    SCAN_LIMIT = 1 << 20

    def __init__(self, term: Term):
        _check_realizable(term)
        self.term = term
        self._seq = LazySeq(jump_rights(term))
        self._pos: dict = {}
        self._lock = threading.Lock()

    def enumerate(self, n: int) -> list:
        out = self._seq.prefix(n)
        with self._lock:
            for i in range(len(self._pos), len(out)):
                self._pos.setdefault(out[i], i)
        return out

    def get(self, i: int):
        return self._seq.get(i)

    def index(self, code) -> int:
        if not is_jump_right(self.term, code):
            raise NotInDError(f"{code!r} is not in D")
        n = 64
        while True:
            with self._lock:
                if code in self._pos:
                    return self._pos[code]
            if self._seq.exhausted and n > len(self._seq):
                break
            if n > self.SCAN_LIMIT:
                break
            self.enumerate(n)
            n *= 2
        raise NotInDError(f"{code!r} not reached in the first {len(self._pos)} points of D")


def extract_D(t: Term) -> DEnum:
    return DEnum(t)


@dataclass
class ChainHandle:
    """``a -> {i < n : d_i <= a}`` for a term that passed its verdict."""

    term: Term
    denum: DEnum
    verdict: Verdict

    def trace(self, a, n: int) -> int:
        t = self.term
        bits = 0
        for i, d in enumerate(self.denum.enumerate(n)):
            if compare(t, d, a) <= 0:
                bits |= 1 << i
        return bits

    def trace_set(self, a, n: int) -> frozenset[int]:
        return bitset_to_set(self.trace(a, n))

    def dump(self, n: int, points=None) -> list[tuple[dict, str]]:
        """``(code, hex trace)`` for the given points, default the first n of D."""
        pts = self.denum.enumerate(n) if points is None else points
        return [(code_to_json(a), to_hex(self.trace(a, n), n)) for a in pts]


def bitset_to_set(bits: int) -> frozenset[int]:
    out, i = [], 0
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return frozenset(out)


def to_hex(bits: int, n: int) -> str:
    return format(bits, f"0{max(1, (n + 3) // 4)}x")


def build_chain(t: Term, target: Target | None = None, chain: CardinalChain | None = None) -> ChainHandle:
    """Build the trace map for ``t``; the default target is ``[w]^{w|w}``.

    Raises :class:`BuildRefused` when the verdict fails and
    :class:`NotRealizableError` when it passes for a term without finite codes.
    """
    ch = term_chain(t, chain if target is None else target.kappa.chain)
    verdict = check(t, target or Target.omega(ch))
    if not verdict.passed:
        raise BuildRefused(verdict)
    if not realizable(t):
        raise NotRealizableError(
            f"{render(t)} passes {verdict.target} but has no finite codes; the verdict is the result"
        )
    return ChainHandle(t, DEnum(t), verdict)


@dataclass(frozen=True)
class NatChain:
    """A chain handle read through the index bijection D -> N."""

    handle: ChainHandle

    def trace(self, a, n: int) -> frozenset[int]:
        return self.handle.trace_set(a, n)


def relabel(h: ChainHandle) -> NatChain:
    return NatChain(h)


@dataclass(frozen=True)
class StepRecord:
    index: int
    d: object
    partner: object
    step_ok: bool
    boundary_ok: bool

    @property
    def ok(self) -> bool:
        return self.step_ok and self.boundary_ok


@dataclass(frozen=True)
class Certificate:
    n: int
    steps: tuple[StepRecord, ...]
    verdict: Verdict
    note: str = field(
        default="step checks cover successor cuts; limit cuts rest on dedekind_complete in the verdict"
    )

    @property
    def boundary_ok(self) -> bool:
        return all(s.boundary_ok for s in self.steps)

    @property
    def passed(self) -> bool:
        return all(s.ok for s in self.steps)

    @property
    def failing(self) -> list[int]:
        return [s.index for s in self.steps if not s.ok]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "passed": self.passed,
            "steps": [
                {"d": code_to_json(s.d), "partner": code_to_json(s.partner), "ok": s.ok}
                for s in self.steps
            ],
            "boundary_ok": self.boundary_ok,
            "failing": self.failing,
            "verdict": self.verdict.to_json(),
            "note": self.note,
        }


def certify(h: ChainHandle, n: int) -> Certificate:
    """Check ``trace(d_i) == trace(partner(d_i)) | {i}`` for the first n points
    of D, with ``i`` absent below the jump and present above it."""
    if n < 1:
        raise ValueError("prefix size must be positive")
    steps = []
    for i, d in enumerate(h.denum.enumerate(n)):
        c = jump_partner(h.term, d)
        above, below = h.trace(d, n), h.trace(c, n)
        bit = 1 << i
        steps.append(
            StepRecord(
                index=i,
                d=d,
                partner=c,
                step_ok=above == below | bit,
                boundary_ok=bool(above & bit) and not below & bit,
            )
        )
    return Certificate(n, tuple(steps), h.verdict)
