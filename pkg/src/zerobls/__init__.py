"""A BLS signature laboratory for zero-related verification bugs.

Runs on small supersingular curves (y^2 = x^3 + x, embedding degree 2) so that
every attack reproduces in well under a second. Nothing here is constant time
or secure; the curves are breakable on purpose.
"""

from .bls import (
    PopProof,
    PublicKey,
    SecretKey,
    Signature,
    VerifyPolicy,
    aggregate,
    aggregate_verify,
    aggregate_verify_basic,
    fast_aggregate_verify,
    key_validate,
    keygen,
    pop_prove,
    pop_verify,
    sign,
    sign_aug,
    sk_to_pk,
    verify,
    verify_aug,
)
from .params import TINY, CurveParams, generate_params, load_params, validate_params

__all__ = [
    "CurveParams",
    "PopProof",
    "PublicKey",
    "SecretKey",
    "Signature",
    "TINY",
    "VerifyPolicy",
    "aggregate",
    "aggregate_verify",
    "aggregate_verify_basic",
    "fast_aggregate_verify",
    "generate_params",
    "key_validate",
    "keygen",
    "load_params",
    "pop_prove",
    "pop_verify",
    "sign",
    "sign_aug",
    "sk_to_pk",
    "validate_params",
    "verify",
    "verify_aug",
]
