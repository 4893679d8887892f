"""Per-poset certificates: Ehrhart coefficients, h*-vector and every checked verdict."""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from app.core.exceptions import HStarMismatch, InvariantViolation
from app.core.settings import AlgorithmName
from app.models.poset import Poset
from app.schemas.verification import VerificationRecord
from app.services.canonical import canonical_form
from app.services.ehrhart_service import (
    ehrhart_polynomial,
    hstar_from_descents,
    hstar_from_ehrhart,
    is_ehrhart_positive,
)
from app.services.polycheck_service import is_log_concave, is_real_rooted, is_symmetric, is_unimodal
from app.services.poset_service import count_linear_extensions, ideal_masks, is_graded, is_narrow


def verify_poset(poset: Poset, algorithm: AlgorithmName = "auto") -> VerificationRecord:
    canon = canonical_form(poset).hex()
    ehr = ehrhart_polynomial(poset, algorithm)
    hstar = hstar_from_ehrhart(ehr, poset.p)
    by_descents = hstar_from_descents(poset)
    if hstar != by_descents:
        raise HStarMismatch(
            details={"canon": canon, "from_ehrhart": list(hstar.h), "from_descents": list(by_descents.h)},
        )

    extensions = count_linear_extensions(poset)
    identities = {
        "h0 == 1": hstar.h[0] == 1,
        "sum(h) == e(P)": hstar.total == extensions,
        "ehr(0) == 1": ehr(0) == 1,
        "lead(ehr) == e(P)/p!": ehr.leading == Fraction(extensions, factorial(poset.p)),
        "ehr(1) == #ideals": ehr(1) == len(ideal_masks(poset.down)),
    }
    broken = [name for name, holds in identities.items() if not holds]
    if broken:
        raise InvariantViolation("Structural identity failed.", details={"canon": canon, "identities": broken})

    top = hstar.truncated()
    real_rooted = is_real_rooted(hstar.as_polynomial())
    log_concave = is_log_concave(top)
    unimodal = is_unimodal(top)
    # Nonnegative real-rooted sequences are log-concave; without internal zeros those are unimodal.
    if (real_rooted and not log_concave) or (log_concave and 0 not in top and not unimodal):
        raise InvariantViolation(
            "Verdicts break the real-rooted => log-concave => unimodal chain.",
            details={"canon": canon, "hstar": list(hstar.h)},
        )

    return VerificationRecord(
        canon=canon,
        p=poset.p,
        num_linear_extensions=str(extensions),
        ehr_coeffs=ehr.tokens(),
        hstar=list(hstar.h),
        ehrhart_positive=is_ehrhart_positive(ehr),
        real_rooted=real_rooted,
        log_concave=log_concave,
        unimodal=unimodal,
        narrow=is_narrow(poset),
        graded=is_graded(poset),
    )


def graded_symmetric(record: VerificationRecord) -> bool:
    """False only for a graded poset whose h*-vector is not palindromic."""
    return not record.graded or is_symmetric(record.hstar)


def failed_properties(record: VerificationRecord) -> list[str]:
    return record.failed_properties(graded_symmetric=graded_symmetric(record))
