"""Desk-scale set theory: finite domains, explicit bijections, well-orders,
ordinals below epsilon_0, hereditarily finite sets, Mostowski collapse and
coherent families."""

from relaxkit.cardinal import card, cantor_diagonal, inj_exists, injection
from relaxkit.cb import CBResult, InjectionTable, cantor_bernstein
from relaxkit.coherent import (
    EvConstSeq,
    FiniteCoherentFamily,
    LambdaVerdict,
    OmegaFamily,
    check_coherent,
    lambda_check,
    limit,
    omega_limit,
)
from relaxkit.config import Config
from relaxkit.domain import (
    BinFn,
    EqvTable,
    FinDomain,
    is_empty,
    make_domain,
    powerset,
    quotient,
    union_of_fibers,
)
from relaxkit.errors import *  # noqa: F401,F403
from relaxkit.hf import (
    BethTower,
    beth_mini,
    decode,
    encode,
    format_set,
    hf_choice,
    hf_powerset,
    hf_replacement,
    hf_separation,
    hf_union,
    mem,
    parse_set,
    rank,
    rank_fn,
    transitive_closure,
    zfc_check,
)
from relaxkit.kernels import BACKEND
from relaxkit.mostowski import (
    WFGraph,
    check_extensional,
    check_well_founded,
    collapse,
    wf_recursion,
)
from relaxkit.order import (
    UNDEFINED,
    PartialFn,
    WellOrder,
    canonical_product,
    check_well_order,
    order_isomorphism,
    order_type,
    recursion,
    recursive_extension,
    well_order_via_choice,
)
from relaxkit.ordinal import (
    OrdCNF,
    classify,
    format_ordinal,
    omega_pow,
    ord_add,
    ord_cmp,
    ord_mul,
    ord_sup,
    pair_index,
    parse_ordinal,
    unpair,
)

__version__ = "0.1.0"
