import pytest
from hypothesis import given, settings

from helpers import push_reverse, realizable_terms, sample_oracle, terms_up_to
from orderchains.cardinals import DEFAULT_CHAIN, CardinalChain, IncomparableCardinalsError, WeightSet
from orderchains.props import (
    CardinalityMismatchError,
    InvalidTargetError,
    Target,
    attrs,
    characterize,
    characterize_omega,
    check,
    init_class_profile,
)
from orderchains.terms import Cantor, Fin, NoEndpointError, Omega, Q, Reverse, Sum, Zset, parse

K = CardinalChain.parse("k")
LK = CardinalChain.parse("l<+l+<k")
W1 = CardinalChain.parse("+w1")  # w1 is the successor of aleph0

# Hand-derived by cut analysis. Columns: dense_jumps, has_min, has_max,
# dedekind_complete. The comment names the deciding cut or jump.
GOLDEN = [
    ("1", True, True, True, True),  # one point, no pairs, no cuts
    ("3", True, True, True, True),  # finite: every neighbour pair is a jump
    ("w", True, True, False, True),  # n < n+1 is a jump; upper parts have a min
    ("w*", True, False, True, True),  # dual of w
    ("Z", True, False, False, True),  # each cut splits at some k-1 | k
    ("Q", False, False, False, False),  # no jumps at all; cut at sqrt 2
    ("C", True, True, True, True),  # w0111.. < w1000.. is a jump between any two points
    ("w + w*", True, True, True, False),  # cut between the copies: no max below, no min above
    ("w* + w", True, False, False, True),  # junction is the jump Left(0) < Right(0)
    ("w + 1", True, True, True, True),  # the added top resolves the limit cut
    ("1 + w*", True, True, True, True),  # dual of w + 1
    ("Q + 1", False, False, True, False),  # Q part keeps its gaps
    ("w + Q", False, True, False, False),  # two points of Q have no jump between
    ("C + C", True, True, True, True),  # max of left copy, min of right copy form a jump
    ("C + w", True, True, False, True),  # max of C then 0 of w: jump
    ("w* + C", True, False, True, True),  # 0 of w* then min of C: jump
    ("Z + Z", True, False, False, False),  # cut between the copies is a gap
    ("(w + 2)*", True, True, True, True),  # 2 + w*: endpoints both present
    ("2 + Q + 2", False, True, True, False),  # endpoints from the finite ends, gaps from Q
    ("w + w", True, True, False, True),  # the second copy's 0 resolves the junction cut
]


@pytest.mark.parametrize("text, dj, hmin, hmax, dc", GOLDEN, ids=[g[0] for g in GOLDEN])
def test_golden_table(text, dj, hmin, hmax, dc):
    a = attrs(parse(text))
    assert (a.dense_jumps, a.has_min, a.has_max, a.dedekind_complete) == (dj, hmin, hmax, dc)


@pytest.mark.parametrize("text", [g[0] for g in GOLDEN])
def test_golden_table_matches_sampling(text):
    t = parse(text)
    a = attrs(t)
    assert sample_oracle(t) == (a.dense_jumps, a.has_min, a.has_max)


def test_attrs_examples():
    q = attrs(parse("Q"))
    assert not q.dense_jumps and not q.dedekind_complete and not q.weakly_boolean
    assert not attrs(parse("w + w*")).dedekind_complete
    z = attrs(parse("w* + w"))
    a0 = z.weight
    assert z.weakly_boolean and not z.has_min and not z.has_max
    assert z.w_init == WeightSet.of(a0) and z.w_fin == WeightSet.of(a0)
    c = attrs(parse("C"))
    assert c.boolean
    assert c.w_init == WeightSet.of(DEFAULT_CHAIN.fin, a0) == c.w_fin
    assert attrs(parse("dropmin(C)")).w_init == WeightSet.of(a0)
    assert attrs(parse("dropmax(C)")).w_fin == WeightSet.of(a0)


def test_cardsym_atom():
    k = K.card("k")
    a = attrs(parse("k", K))
    assert a.dedekind_complete and a.dense_jumps and a.has_min and not a.has_max
    assert a.w_init == WeightSet.below(k)
    assert a.w_fin == WeightSet.of(k)


def test_definition_identities():
    for t in terms_up_to([Fin(2), Omega(), Q(), Cantor()], 3):
        a = attrs(t)
        assert a.weakly_boolean == (a.dedekind_complete and a.dense_jumps)
        assert a.boolean == (a.weakly_boolean and a.has_min and a.has_max)
        assert bool(a.w_init.atoms) == (not a.is_empty)


def test_drop_needs_endpoint():
    with pytest.raises(NoEndpointError):
        attrs(parse("dropmin(Z)"))


def test_empty_order():
    a = attrs(parse("0"))
    assert a.is_empty and not a.has_min
    assert attrs(parse("0 + w")) == attrs(parse("w"))
    assert characterize_omega(parse("0")).failed_conditions[0] == "nonempty"


@given(realizable_terms(max_leaves=6))
@settings(max_examples=200, deadline=None)
def test_reversal_duality(t):
    a = attrs(t)
    assert attrs(Reverse(t)) == a.reversed()
    assert attrs(push_reverse(Reverse(t))) == a.reversed()
    assert a.reversed().reversed() == a


@given(realizable_terms(max_leaves=4), realizable_terms(max_leaves=4), realizable_terms(max_leaves=4))
@settings(max_examples=200, deadline=None)
def test_sum_associativity(a, b, c):
    assert attrs(Sum(Sum(a, b), c)) == attrs(Sum(a, Sum(b, c)))


def test_z_is_w_star_plus_w():
    assert attrs(Zset()) == attrs(parse("w* + w"))


@given(realizable_terms(max_leaves=5, sum_over=False, drops=True))
@settings(max_examples=60, deadline=None)
def test_attrs_agree_with_sampling(t):
    a = attrs(t)
    assert sample_oracle(t) == (a.dense_jumps, a.has_min, a.has_max)


# -- verdicts


def test_characterize_golden():
    k = K.card("k")
    assert characterize(parse("k* + k", K), k, k, k).case == "a"
    assert characterize(parse("k* + k", K), k, k, k).passed
    assert characterize(parse("Sum[k* + k; C]", K), k, k, k).passed

    k2, l2, lp = LK.card("k"), LK.card("l"), LK.card("l+")
    v = characterize(parse("l* + l+", LK), k2, l2, k2)
    assert (v.case, v.passed) == ("b", True)
    v = characterize(parse("(l+)* + l", LK), k2, k2, l2)
    assert (v.case, v.passed) == ("c", True)
    # the same orders inside P(l+) itself
    assert characterize(parse("l* + l+", LK), lp, l2, lp).passed

    v = characterize(parse("w", K), k, k, k)
    assert not v.passed
    assert v.failures[0].condition == "w_init" and v.failures[0].actual == "{fin}"


@pytest.mark.parametrize(
    "text, failed",
    [
        ("Q", ["dedekind_complete", "dense_jumps"]),
        ("w", ["has_min"]),
        ("w + w*", ["dedekind_complete", "has_min", "has_max"]),
        ("w* + w + 1", ["has_max"]),
        ("C", ["has_min", "has_max"]),
        ("Sum[w*; C]", ["has_max"]),
        ("Sum[Z; C]", []),
        ("Z", []),
        ("w* + w", []),
        ("dropmin(dropmax(C))", []),
    ],
)
def test_characterize_omega(text, failed):
    v = characterize_omega(parse(text))
    assert v.case == "omega"
    assert v.failed_conditions == failed
    assert v.passed == (not failed)


def test_omega_not_r_embeddable():
    v = characterize_omega(parse("k* + k", K))
    assert "r_embeddable" in v.failed_conditions


@given(realizable_terms(max_leaves=6, drops=True))
@settings(max_examples=200, deadline=None)
def test_characterize_at_omega_matches_omega_case(t):
    a0 = K.aleph0
    assert characterize(t, a0, a0, a0).passed == characterize_omega(t, K).passed


def test_check_dispatch():
    assert check(parse("Z"), Target.parse("[w]^{w|w}", K)).case == "omega"
    assert check(parse("k* + k", K), Target.parse("[k]^{k|k}", K)).case == "a"


@pytest.mark.parametrize("text", ["[k]^{w|w}", "[w]^{k|w}", "[k]^{fin|k}", "k", "[k]^{k}", "[k]^{m|k}"])
def test_invalid_targets(text):
    with pytest.raises(InvalidTargetError):
        t = Target.parse(text, K)
        characterize(parse("w"), t.kappa, t.lam, t.mu)


def test_verdict_json():
    k = K.card("k")
    js = characterize(parse("w", K), k, k, k).to_json()
    assert set(js) == {"case", "passed", "target", "failures"}
    assert js["failures"][0] == {"condition": "w_init", "expected": "{k}", "actual": "{fin}"}


def test_continuum_against_declared_cardinal_is_undecided():
    k = K.card("k")
    with pytest.raises(IncomparableCardinalsError):
        characterize(parse("Sum[C; k]", K), k, k, k)


# -- classes met by Init(L)


def test_init_class_profile_examples():
    w1 = W1.card("w1")

    def prof(text):
        return {c.short("w1") for c in init_class_profile(parse(text, W1), w1)}

    assert prof("w1 + w1*") == {"[<w]", "[w]", "[w1|w1]", "[w1|w]", "[w1|<w]"}
    assert prof("w1* + w1") == {"[w1|w1]"}
    assert prof("w* + w1") == {"[w]"}


def test_init_class_profile_mismatch():
    with pytest.raises(CardinalityMismatchError):
        init_class_profile(parse("w"), W1.card("w1"))
