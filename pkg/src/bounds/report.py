"""Aggregated bound reports for one H(n, q)."""

import logging
from typing import Optional

from pydantic import BaseModel

from .calculators import (
    alon_exact,
    b_star,
    edge_probability,
    exact_tail_le_inv_n,
    lower_bound,
    upper_bound,
    volume_certificate,
)

logger = logging.getLogger(__name__)


class BoundsReport(BaseModel):
    """Lower, upper and (for q = 2) exact values of β(H(n, q)).

    ``p`` is the exact fraction ``"(q-1)/q"`` in lowest terms. ``tail_le_inv_n``
    is None when ``b_star`` is undefined.
    """

    n: int
    q: int
    p: str
    upper: int
    lower_real: float
    lower_int: int
    alon_exact: Optional[int]
    b_star: Optional[int]
    volume_certificate_ok: bool
    tail_le_inv_n: Optional[bool]


def bounds_report(n: int, q: int) -> BoundsReport:
    """Evaluate every bound and certificate for H(n, q).

    Raises:
        InputError: If n < 1 or q < 2
        AssertionError: If the bounds contradict each other
    """
    upper = upper_bound(n, q)
    lower_real, lower_int = lower_bound(n, q)
    exact = alon_exact(n) if q == 2 else None

    report = BoundsReport(
        n=n,
        q=q,
        p=str(edge_probability(q)),
        upper=upper,
        lower_real=lower_real,
        lower_int=lower_int,
        alon_exact=exact,
        b_star=b_star(n, q),
        volume_certificate_ok=volume_certificate(n, q, lower_int - 1),
        tail_le_inv_n=exact_tail_le_inv_n(n, q),
    )

    if report.lower_int > report.upper:
        raise AssertionError(f"lower bound {lower_int} above upper bound {upper}")
    if exact is not None and not lower_int <= exact == upper:
        raise AssertionError(f"q=2 exact value {exact} outside [{lower_int}, {upper}]")

    logger.debug(f"H({n},{q}): lower_int={lower_int}, upper={upper}")
    return report
