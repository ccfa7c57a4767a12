"""Sandwich-protocol simulators and the linear decomposition attack.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from lindecomp._core import (  # noqa: F401
    AttackError,
    Fixture,
    Matrix,
    NotInSpanError,
    OrbitBasis,
    ParseError,
    RightOperator,
    RunResult,
    SandwichBasis,
    SandwichOperator,
    Transcript,
    Vector,
    attack_harley,
    attack_kolee,
    attack_wang,
    derive_operator,
    derive_right_operator,
    execute_plan,
    make_block_fixture,
    make_polynomial_fixture,
    orbit_closure,
    run_generic,
    run_harley,
    run_kolee,
    run_wang,
    span_closure,
)

__version__ = "0.1.0"
