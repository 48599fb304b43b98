"""Symbolic order types and the maximal chains they describe.

Terms (``w* + w``, ``Sum[k* + k; C]``, ``dropmin(dropmax(C))``, ...) are
parsed over a declared chain of cardinals. From a term the library computes
order attributes and segment-weight profiles, decides whether the order is
the type of a maximal chain in ``[kappa]^{lambda|mu}``, and for countable
orders builds that chain explicitly with finite-prefix certificates.
"""

from .cardinals import (
    Card,
    CardinalChain,
    IncomparableCardinalsError,
    SuccessorUnknownError,
    WeightSet,
    compare_cards,
    successor_card,
    ws_join,
    ws_lift_max,
)
from .chains import (
    BuildRefused,
    Certificate,
    ChainHandle,
    DEnum,
    NotInDError,
    build_chain,
    certify,
    extract_D,
    jump_partner,
    relabel,
)
from .elements import compare, elements, is_valid_code, jump_rights
from .finite import (
    CapExceededError,
    FiniteChain,
    check_claim1,
    day_check,
    enumerate_max_chains,
    init_of_finite_order,
    is_maximal_chain,
)
from .props import (
    Attrs,
    ClassLabel,
    InvalidTargetError,
    Target,
    Verdict,
    attrs,
    characterize,
    characterize_omega,
    init_class_profile,
)
from .terms import (
    Cantor,
    CardSym,
    DropMax,
    DropMin,
    Fin,
    Omega,
    ParseError,
    Q,
    Reverse,
    Sum,
    SumOver,
    Term,
    Zset,
    card_of,
    parse,
    realizable,
    render,
)
from .topology import FinTop, homeo_class, image_top, make_tau, phi, verify_iso

__all__ = [name for name in dir() if not name.startswith("_")]
