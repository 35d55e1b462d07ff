"""Exact computations behind the K0(Var) zero-divisor certificate."""

import json
import os
from collections.abc import Mapping

from ._kzero import (
    DEFAULT_STABILITY_BOUND,
    DeductionRefused,
    DomainError,
    InputError,
    InvalidEigenvalue,
    ParameterMismatch,
    PreconditionError,
    ResourceError,
    class_group,
    endomorphism_stability,
    frobenius_charpoly,
    fundamental_unit,
    is_irreducible,
    is_ordinary,
    principal_generator,
    verify_text,
    zero_divisor_witness,
)


def verify(source, bound=DEFAULT_STABILITY_BOUND):
    """Run the certificate on a dataset given as a path or an already parsed mapping.

    Returns the JSON report as a dict.
    """
    if isinstance(source, Mapping):
        return verify_text(json.dumps(source), bound)
    with open(os.fspath(source)) as f:
        return verify_text(f.read(), bound)


__all__ = [
    "DEFAULT_STABILITY_BOUND",
    "DeductionRefused",
    "DomainError",
    "InputError",
    "InvalidEigenvalue",
    "ParameterMismatch",
    "PreconditionError",
    "ResourceError",
    "class_group",
    "endomorphism_stability",
    "frobenius_charpoly",
    "fundamental_unit",
    "is_irreducible",
    "is_ordinary",
    "principal_generator",
    "verify",
    "zero_divisor_witness",
]
