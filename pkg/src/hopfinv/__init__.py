"""Exact Kuperberg invariants of framed 3-manifolds over finite-dimensional Hopf algebras."""

from .scalar import CycScalar, parse_scalar, set_conductor_limit
from .tensor import SparseTensor
from .hopf import (
    HopfData,
    IntegralData,
    group_algebra,
    builtin_group,
    taft,
    dual,
    opposite,
    tensor_product,
    verify_axioms,
    integrals,
    twisted_integral,
    sweedler_power,
    T_operator,
    identity_suite,
)
from .twist import (
    TwoCocycle,
    verify_cocycle,
    trivial_cocycle,
    bicharacter_cocycle,
    taft_bicharacter_cocycle,
    group_bicharacter_cocycle,
    dual_group_bicharacter_cocycle,
    f_n,
    drinfeld_twist,
    fn_identity_suite,
)
from .diagram import (
    FramedDiagram,
    EvalPlan,
    parse_diagram,
    render_diagram,
    check_admissibility,
    compile_plan,
    stabilize,
    lens_fR_plan,
    lens_fL_plan,
    fixture,
)
from .invariants import (
    InvariantRequest,
    kuperberg,
    c_sequence,
    lens_fR_closed,
    lens_fL_closed,
    nu,
    nu_nk,
    nu_prime_nk,
    nu_tilde,
    genus2,
    genus2_trace,
    gauge_check,
    multiplicativity_check,
    duality_check,
)

__all__ = [name for name in dir() if not name.startswith("_")]
