"""Exact engine for rank-3 Coxeter groups and degree bounds of their Hecke algebras.

The package is organised bottom-up:

* ``laurent``  -- exact coefficient rings (Z[xi], Z[q^(1/2), q^(-1/2)], Z[q])
* ``words``    -- Tits' solution of the word problem, braid closures, caching
* ``coxeter``  -- interned group elements, descents, Bruhat order, parabolics
* ``hecke``    -- products and structure constants in the normalized basis
* ``kl``       -- Kazhdan-Lusztig polynomials, canonical basis, windowed scans
* ``verifier`` -- the exhaustive check catalog with replayable reports
* ``cli``      -- the ``heckebound`` command
"""

from .coxeter import (
    R,
    S,
    T,
    CoxeterGroup,
    Element,
    GroupParams,
    InfiniteParabolicError,
    NotComparableError,
    TheoremCase,
    WordLengthCapError,
)
from .hecke import HeckeAlgebra, mul_gen_right
from .kl import AWindow, KLContext
from .laurent import (
    HalfLaurent,
    NotInXiSpanError,
    QPoly,
    XiPoly,
    half_to_xi,
    xi_to_half,
)
from .verifier import (
    CheckReport,
    CheckSpec,
    REGISTRY,
    build_report_doc,
    list_checks,
    replay_witness,
    run_check,
    run_suite,
)
from .words import (
    BraidSystem,
    CacheParametersError,
    NotReducedError,
    ReductionCache,
    word_from_text,
    word_to_text,
)

__version__ = "0.1.0"
