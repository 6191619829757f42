"""Exact computations with BiHom-associative dialgebras given by structure constants."""

from .core import (
    AXIOM_IDS,
    Dialgebra,
    Subspace,
    check_axioms,
    check_morphism,
    check_multiplicative,
    direct_sum,
    is_multiplicative,
    is_regular,
    matrix_dialgebra,
    quotient,
)
from .constructions import (
    averaging_twist,
    check_averaging,
    check_centroid,
    check_nijenhuis,
    check_rota_baxter,
    nijenhuis_twist,
    rota_baxter_twist,
    untwist,
    yau_twist,
)
from .brackets import (
    BracketAlgebra,
    PoissonDialgebra,
    check_bihom_leibniz,
    check_bihom_lie,
    check_poisson,
    lb_functor,
    poisson_functor,
)
from .actions import DialgebraAction, LeibnizAction, check_dialgebra_action, dialgebra_semidirect, functor_commutes
from .cohomology import (
    BiHomModule,
    CochainPair,
    central_extension,
    coboundary,
    cohomology_dims,
    extensions_equivalent,
    is_cocycle,
)
from .derivations import derivation_space, is_derivation
from .corpus import corpus_build, corpus_ids, corpus_verify
from .field import GF, QQ, field_by_name
from .report import SCHEMA_VERSION, AxiomResult, CheckReport

__version__ = "0.1.0"
