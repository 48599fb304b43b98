"""Order attributes of terms and the maximal-chain verdicts built on them.

``attrs`` is a structural recursion over drop-free terms (see
:func:`orderchains.terms.drop_free`). Besides the headline predicates it
tracks a few auxiliary facts the recursion needs:

* ``size``: exact number of points when finite, else None
* ``min_succ`` / ``max_pred``: the minimum has an immediate successor /
  the maximum has an immediate predecessor
* ``left_complete``: every cut's lower part has a maximum (dually
  ``right_complete``)
* ``w_init`` / ``w_fin``: the sets ``{w((-inf, a])}`` and ``{w([a, inf))}``
* ``card_init`` / ``card_fin``: the sets ``{|(-inf, a]|}`` and ``{|[a, inf)|}``
* ``init_sizes`` / ``fin_sizes``: sizes of the nonempty initial / final segments
  (all of them, not only those generated by points)
* ``balanced``: some cut has both sides of full cardinality

The cardinality-valued fields are None when they depend on where an
undeclared continuum sits among the declared cardinals.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field, fields
from functools import lru_cache

from .cardinals import (
    Card,
    CardinalChain,
    IncomparableCardinalsError,
    WeightSet,
    compare_cards,
    max_card,
    successor_card,
    ws_drop_fin,
    ws_lift_max,
)
from .terms import (
    Cantor,
    CardSym,
    DropMax,
    DropMin,
    Fin,
    Omega,
    Q,
    Reverse,
    Sum,
    SumOver,
    Term,
    Zset,
    card_of,
    drop_free,
    render,
    term_chain,
)


@dataclass(frozen=True, slots=True)
class Attrs:
    is_empty: bool
    size: int | None
    has_min: bool
    has_max: bool
    min_succ: bool
    max_pred: bool
    left_complete: bool
    right_complete: bool
    dedekind_complete: bool
    dense_jumps: bool
    weight: Card
    w_init: WeightSet
    w_fin: WeightSet
    card: Card | None
    card_init: WeightSet | None
    card_fin: WeightSet | None
    init_sizes: WeightSet | None
    fin_sizes: WeightSet | None
    balanced: bool | None
    weakly_boolean: bool = field(init=False)
    boolean: bool = field(init=False)
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        wb = self.dedekind_complete and self.dense_jumps
        object.__setattr__(self, "weakly_boolean", wb)
        object.__setattr__(self, "boolean", wb and self.has_min and self.has_max)
        # attribute records key the memo tables of the recursion below
        object.__setattr__(self, "_hash", hash((
            self.is_empty, self.size, self.has_min, self.has_max, self.min_succ, self.max_pred,
            self.left_complete, self.right_complete, self.dedekind_complete, self.dense_jumps,
            self.weight, self.w_init, self.w_fin, self.card, self.card_init, self.card_fin,
            self.init_sizes, self.fin_sizes, self.balanced,
        )))

    def __hash__(self):
        return self._hash

    def reversed(self) -> "Attrs":
        return Attrs(
            self.is_empty, self.size,
            self.has_max, self.has_min,
            self.max_pred, self.min_succ,
            self.right_complete, self.left_complete,
            self.dedekind_complete, self.dense_jumps,
            self.weight, self.w_fin, self.w_init,
            self.card, self.card_fin, self.card_init,
            self.fin_sizes, self.init_sizes,
            self.balanced,
        )

    def to_json(self) -> dict:
        out = {}
        for f in fields(self):
            if f.name.startswith("_"):
                continue
            v = getattr(self, f.name)
            out[f.name] = v if v is None or isinstance(v, (bool, int)) else str(v)
        return out


# --------------------------------------------------------------------------
# the recursion

def _one(c: Card) -> WeightSet:
    return WeightSet.of(c)


def _empty_attrs(ch: CardinalChain) -> Attrs:
    none = WeightSet.empty(ch)
    return Attrs(
        is_empty=True, size=0, has_min=False, has_max=False,
        min_succ=False, max_pred=False,
        left_complete=True, right_complete=True, dedekind_complete=True,
        dense_jumps=True, weight=ch.fin, w_init=none, w_fin=none,
        card=ch.fin, card_init=none, card_fin=none,
        init_sizes=none, fin_sizes=none, balanced=False,
    )


def _atom(t: Term, ch: CardinalChain) -> Attrs:
    fin, a0 = ch.fin, ch.aleph0
    if isinstance(t, Fin):
        if t.n == 0:
            return _empty_attrs(ch)
        f = _one(fin)
        return Attrs(
            is_empty=False, size=t.n, has_min=True, has_max=True,
            min_succ=t.n >= 2, max_pred=t.n >= 2,
            left_complete=True, right_complete=True, dedekind_complete=True,
            dense_jumps=True, weight=fin, w_init=f, w_fin=f,
            card=fin, card_init=f, card_fin=f, init_sizes=f, fin_sizes=f,
            balanced=False,
        )
    if isinstance(t, Omega):
        return Attrs(
            is_empty=False, size=None, has_min=True, has_max=False,
            min_succ=True, max_pred=False,
            left_complete=True, right_complete=True, dedekind_complete=True,
            dense_jumps=True, weight=a0, w_init=_one(fin), w_fin=_one(a0),
            card=a0, card_init=_one(fin), card_fin=_one(a0),
            init_sizes=WeightSet.of(fin, a0), fin_sizes=_one(a0), balanced=False,
        )
    if isinstance(t, (Zset, Q)):
        dense = isinstance(t, Q)
        return Attrs(
            is_empty=False, size=None, has_min=False, has_max=False,
            min_succ=False, max_pred=False,
            left_complete=not dense, right_complete=not dense,
            dedekind_complete=not dense, dense_jumps=not dense,
            weight=a0, w_init=_one(a0), w_fin=_one(a0),
            card=a0, card_init=_one(a0), card_fin=_one(a0),
            init_sizes=_one(a0), fin_sizes=_one(a0), balanced=True,
        )
    if isinstance(t, Cantor):
        c = ch.continuum
        w = WeightSet.of(fin, a0)
        s = WeightSet.of(fin, c)
        return Attrs(
            is_empty=False, size=None, has_min=True, has_max=True,
            min_succ=False, max_pred=False,
            left_complete=False, right_complete=False, dedekind_complete=True,
            dense_jumps=True, weight=a0, w_init=w, w_fin=w,
            card=c, card_init=s, card_fin=s, init_sizes=s, fin_sizes=s,
            balanced=True,
        )
    if isinstance(t, CardSym):
        k = t.card
        below = WeightSet.below(k)
        return Attrs(
            is_empty=False, size=None, has_min=True, has_max=False,
            min_succ=True, max_pred=False,
            left_complete=False, right_complete=True, dedekind_complete=True,
            dense_jumps=True, weight=k, w_init=below, w_fin=_one(k),
            card=k, card_init=below, card_fin=_one(k),
            init_sizes=below | _one(k), fin_sizes=_one(k), balanced=False,
        )
    raise TypeError(f"not an atom: {t!r}")


_UNKNOWN = (None,) * 6


# few distinct attribute records occur, so the combinators are memoized on them
@lru_cache(maxsize=1 << 14)
def _sum(a: Attrs, b: Attrs) -> Attrs:
    if a.is_empty:
        return b
    if b.is_empty:
        return a
    lift = ws_lift_max
    return Attrs(
        False,
        None if a.size is None or b.size is None else a.size + b.size,
        a.has_min,
        b.has_max,
        b.has_min if a.size == 1 else a.min_succ,
        a.has_max if b.size == 1 else b.max_pred,
        a.left_complete and a.has_max and b.left_complete,
        a.right_complete and b.has_min and b.right_complete,
        a.dedekind_complete and b.dedekind_complete and (a.has_max or b.has_min),
        a.dense_jumps and b.dense_jumps,
        max_card(a.weight, b.weight),
        a.w_init | lift(a.weight, b.w_init),
        lift(b.weight, a.w_fin) | b.w_fin,
        *_sum_cards(a, b),
    )


def _sum_cards(a: Attrs, b: Attrs) -> tuple:
    """card, card_init, card_fin, init_sizes, fin_sizes, balanced of A + B;
    all None when any of them depends on an undeclared comparison."""
    if a.card is None or b.card is None:
        return _UNKNOWN
    lift = ws_lift_max
    try:
        c = max_card(a.card, b.card)
        if c.is_finite:
            bal = False
        else:
            full_a, full_b = compare_cards(a.card, c) == 0, compare_cards(b.card, c) == 0
            bal = (full_a and full_b) or (a.balanced if full_a else b.balanced)
        return (
            c,
            a.card_init | lift(a.card, b.card_init),
            lift(b.card, a.card_fin) | b.card_fin,
            a.init_sizes | lift(a.card, b.init_sizes),
            lift(b.card, a.fin_sizes) | b.fin_sizes,
            bal,
        )
    except IncomparableCardinalsError:
        return _UNKNOWN


def _points_after_min(card_init: WeightSet, has_min: bool, min_succ: bool) -> WeightSet:
    """``{|(-inf, i]| : i not the minimum}`` from the full profile."""
    if has_min and not min_succ:
        return ws_drop_fin(card_init)
    return card_init


@lru_cache(maxsize=1 << 14)
def _sum_over(i: Attrs, s: Attrs) -> Attrs:
    if i.is_empty or s.is_empty:
        return _empty_attrs(i.weight.chain)
    if s.size == 1:
        return i
    if i.size == 1:
        return s
    if i.card is None:
        raise IncomparableCardinalsError("index cardinality depends on an undeclared continuum")
    if s.has_min and s.has_max:
        junctions = i.dedekind_complete
    elif s.has_max:
        junctions = i.left_complete
    elif s.has_min:
        junctions = i.right_complete
    else:
        junctions = False
    # sizes of the index segments strictly below / above a non-end index point
    lower = _points_after_min(i.card_init, i.has_min, i.min_succ)
    upper = _points_after_min(i.card_fin, i.has_max, i.max_pred)
    none = WeightSet.empty(i.weight.chain)

    def profile(own, c, idx, first):
        return (own if first else none) | ws_lift_max(c, idx)

    cards = _UNKNOWN
    if s.card is not None:
        try:
            c = max_card(i.card, s.card)
            cards = (
                c,
                profile(s.card_init, s.card, lower, i.has_min),
                profile(s.card_fin, s.card, upper, i.has_max),
                profile(s.init_sizes, s.card, i.init_sizes, i.has_min),
                profile(s.fin_sizes, s.card, i.fin_sizes, i.has_max),
                False if c.is_finite else (compare_cards(s.card, c) == 0 or i.balanced),
            )
        except IncomparableCardinalsError:
            pass
    return Attrs(
        False,
        None if i.size is None or s.size is None else i.size * s.size,
        i.has_min and s.has_min,
        i.has_max and s.has_max,
        i.has_min and s.min_succ,
        i.has_max and s.max_pred,
        s.left_complete and s.has_max and i.left_complete,
        s.right_complete and s.has_min and i.right_complete,
        s.dedekind_complete and junctions,
        s.dense_jumps,
        max_card(i.card, s.weight),
        profile(s.w_init, s.weight, lower, i.has_min),
        profile(s.w_fin, s.weight, upper, i.has_max),
        *cards,
    )


@lru_cache(maxsize=1 << 18)
def _attrs(t: Term, ch: CardinalChain) -> Attrs:
    if isinstance(t, Sum):
        return _sum(_attrs(t.left, ch), _attrs(t.right, ch))
    if isinstance(t, Reverse):
        return _attrs(t.term, ch).reversed()
    if isinstance(t, SumOver):
        return _sum_over(_attrs(t.index, ch), _attrs(t.summand, ch))
    if isinstance(t, (DropMin, DropMax)):
        return _attrs(drop_free(t), ch)
    return _atom(t, ch)


def attrs(t: Term, chain: CardinalChain | None = None) -> Attrs:
    """Order attributes of ``t``.

    Raises :class:`~orderchains.terms.NoEndpointError` when a ``dropmin`` or
    ``dropmax`` is applied to an order without that endpoint.
    """
    return _attrs(t, term_chain(t, chain))


# --------------------------------------------------------------------------
# verdicts

class InvalidTargetError(ValueError):
    pass


class CardinalityMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class Target:
    """The poset ``[kappa]^{lam|mu}``."""

    kappa: Card
    lam: Card
    mu: Card

    @classmethod
    def parse(cls, text: str, chain: CardinalChain) -> "Target":
        """Parse ``"[k]^{l|m}"``; ``w`` denotes aleph0."""
        s = "".join(text.split())
        try:
            head, tail = s.split("]^{")
            if not head.startswith("[") or not tail.endswith("}"):
                raise ValueError
            lam, mu = tail[:-1].split("|")
            names = (head[1:], lam, mu)
        except ValueError:
            raise InvalidTargetError(f"cannot parse target {text!r}; expected [k]^{{l|m}}") from None
        try:
            return cls(*(chain.card(n) for n in names))
        except KeyError as e:
            raise InvalidTargetError(str(e)) from None

    @classmethod
    def omega(cls, chain: CardinalChain) -> "Target":
        a0 = chain.aleph0
        return cls(a0, a0, a0)

    @property
    def is_omega(self) -> bool:
        return all(c.pos == 1 for c in (self.kappa, self.lam, self.mu))

    def __str__(self):
        def nm(c):
            return "w" if c.pos == 1 else c.name

        return f"[{nm(self.kappa)}]^{{{nm(self.lam)}|{nm(self.mu)}}}"


@dataclass(frozen=True)
class Failure:
    condition: str
    expected: str
    actual: str


@dataclass(frozen=True)
class Verdict:
    target: Target
    case: str  # a, b, c, omega or none
    failures: tuple[Failure, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def failed_conditions(self) -> list[str]:
        return [f.condition for f in self.failures]

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "passed": self.passed,
            "target": str(self.target),
            "failures": [asdict(f) for f in self.failures],
        }

    def __str__(self):
        return json.dumps(self.to_json())


def _order_failures(a: Attrs) -> list[Failure]:
    out = []
    if not a.dedekind_complete:
        out.append(Failure("dedekind_complete", "true", "false"))
    if not a.dense_jumps:
        out.append(Failure("dense_jumps", "true", "false"))
    return out


def _profile_failures(a: Attrs, init: Card, fin: Card) -> list[Failure]:
    out = []
    if not a.w_init.is_singleton(init):
        out.append(Failure("w_init", f"{{{init}}}", str(a.w_init)))
    if not a.w_fin.is_singleton(fin):
        out.append(Failure("w_fin", f"{{{fin}}}", str(a.w_fin)))
    return out


def select_case(kappa: Card, lam: Card, mu: Card) -> tuple[str, Card, Card]:
    """Validate the target and return (case, required initial weight,
    required final weight)."""
    for c in (kappa, lam, mu):
        if c.chain != kappa.chain:
            raise InvalidTargetError("target cardinals come from different chains")
        if c.is_finite:
            raise InvalidTargetError(f"target cardinals must be infinite, got {c}")
    if compare_cards(kappa, max_card(lam, mu)) != 0:
        raise InvalidTargetError(f"kappa must equal max(lambda, mu): {kappa} vs {lam}, {mu}")
    if compare_cards(lam, kappa) == 0 and compare_cards(mu, kappa) == 0:
        return "a", kappa, kappa
    if compare_cards(lam, kappa) < 0:
        return "b", lam, successor_card(lam)
    return "c", successor_card(mu), mu


def characterize(t: Term, kappa: Card, lam: Card, mu: Card) -> Verdict:
    """Decide whether ``t`` is the order type of a maximal chain in
    ``[kappa]^{lam|mu}``: weakly Boolean, with every closed initial segment of
    weight ``kappa`` / ``lam`` / ``mu+`` and every closed final segment of
    weight ``kappa`` / ``lam+`` / ``mu`` in cases a / b / c."""
    case, w_init, w_fin = select_case(kappa, lam, mu)
    a = attrs(t, kappa.chain)
    failures = _order_failures(a) + _profile_failures(a, w_init, w_fin)
    return Verdict(Target(kappa, lam, mu), case, tuple(failures))


def characterize_omega(t: Term, chain: CardinalChain | None = None) -> Verdict:
    """Maximal chains in ``[w]^{w|w}``: real-embeddable (weight at most
    aleph0), weakly Boolean, no endpoints."""
    ch = term_chain(t, chain)
    a = attrs(t, ch)
    failures = []
    if a.is_empty:
        failures.append(Failure("nonempty", "true", "false"))
    failures += _order_failures(a)
    if a.has_min:
        failures.append(Failure("has_min", "false", "true"))
    if a.has_max:
        failures.append(Failure("has_max", "false", "true"))
    try:
        r_emb = compare_cards(a.weight, ch.aleph0) <= 0
    except IncomparableCardinalsError:
        r_emb = False
    if not r_emb:
        failures.append(Failure("r_embeddable", "weight <= aleph0", str(a.weight)))
    return Verdict(Target.omega(ch), "omega", tuple(failures))


def check(t: Term, target: Target) -> Verdict:
    """Dispatch to :func:`characterize_omega` or :func:`characterize`."""
    if target.is_omega:
        return characterize_omega(t, target.kappa.chain)
    return characterize(t, target.kappa, target.lam, target.mu)


# --------------------------------------------------------------------------
# classes of P(kappa) met by Init(L)

def _atom_name(ch: CardinalChain, atom) -> str:
    if atom == 0:
        return "<w"
    if atom == 2:
        return "w"
    if isinstance(atom, str):
        return "continuum"
    if atom % 2:
        return f"({ch.symbols[atom // 2]},{ch.symbols[atom // 2 + 1]})"
    return ch.symbols[atom // 2]


@dataclass(frozen=True, order=True)
class ClassLabel:
    """The class ``[kappa]^{size|cosize}``; ``<w`` stands for finite."""

    size: str
    cosize: str

    def __str__(self):
        return f"[{self.size}|{self.cosize}]"

    def short(self, kappa: str) -> str:
        """The name used when listing P(kappa) by size, e.g. ``[w]`` for
        ``[w|kappa]``."""
        if self.size != kappa:
            return f"[{self.size}]"
        return str(self)


def init_class_profile(t: Term, kappa: Card) -> set[ClassLabel]:
    """Classes ``[kappa]^{c|c'}`` met by the proper nonempty initial segments
    of ``t`` (transported to ``kappa`` along any bijection)."""
    ch = kappa.chain
    if kappa.is_finite:
        raise InvalidTargetError("kappa must be infinite")
    if compare_cards(card_of(t, ch), kappa) != 0:
        raise CardinalityMismatchError(f"|{render(t)}| is not {kappa}")
    a = attrs(t, ch)
    if a.init_sizes is None or a.fin_sizes is None or a.balanced is None:
        raise IncomparableCardinalsError("segment sizes depend on an undeclared continuum")
    k = _atom_name(ch, kappa.atom)
    labels = set()
    for x in a.init_sizes.atoms:
        if _below(x, kappa):
            labels.add(ClassLabel(_atom_name(ch, x), k))
    for x in a.fin_sizes.atoms:
        if _below(x, kappa):
            labels.add(ClassLabel(k, _atom_name(ch, x)))
    if a.balanced:
        labels.add(ClassLabel(k, k))
    return labels


def _below(atom, kappa: Card) -> bool:
    from .cardinals import _cmp_atoms

    return _cmp_atoms(atom, kappa.atom) < 0
