"""Bounds on β(H(n, q)) with exact big-integer certificates.

Only :func:`lower_bound` and the Chernoff helpers touch floating point; every
certificate compares Python ints or Fractions. Logarithms are natural, which
is what makes exp(-μ ε²/2) equal 1/n for ε = √(2 ln n / (pn)).
"""

import math
from fractions import Fraction
from typing import Optional, Tuple

from ..config.settings import settings
from ..exceptions import InputError
from ..hamming.counting import ball_volume
from ..hamming.params import HammingParams


def edge_probability(q: int) -> Fraction:
    """p = 1 - 1/q, the chance a uniform symbol differs from a fixed one."""
    return Fraction(q - 1, q)


def upper_bound(n: int, q: int) -> int:
    """⌊(1 - 1/q)n + (q+1)/2⌋ in integer arithmetic."""
    HammingParams(n, q)
    return ((q - 1) * 2 * n + q * (q + 1)) // (2 * q)


def alon_exact(n: int) -> int:
    """β(H(n, 2)) = ⌈n/2⌉ + 1."""
    value = (n + 1) // 2 + 1
    if value != upper_bound(n, 2):
        raise AssertionError(f"⌈n/2⌉+1 = {value} disagrees with the q=2 upper bound")
    return value


def lower_bound(n: int, q: int) -> Tuple[float, int]:
    """``(pn - √(2pn ln n), smallest integer strictly above it, at least 1)``."""
    HammingParams(n, q)
    pn = (q - 1) / q * n
    lower_real = pn - math.sqrt(2 * pn * math.log(n))
    # β > lower_real strictly, so an integral lower_real still moves up by one
    lower_int = max(1, math.floor(lower_real) + 1)
    return lower_real, lower_int


def b_star(n: int, q: int) -> Optional[int]:
    """⌊pn - √(2pn ln n)⌋, or None when that is negative."""
    lower_real, _ = lower_bound(n, q)
    return math.floor(lower_real) if lower_real >= 0 else None


def volume_certificate(n: int, q: int, b: int) -> bool:
    """Exact check of (b+1)|Γ_b| < q^n.

    When true, even b+1 balls of the largest radius b miss some word, so no
    schedule of length b+1 burns H(n, q).
    """
    if b < 0:
        raise InputError(f"radius b must be non-negative, got {b}")
    p = HammingParams(n, q)
    return (b + 1) * ball_volume(p, b) < p.vertex_count


def exact_tail_le_inv_n(n: int, q: int) -> Optional[bool]:
    """n |Γ_{b*}| <= q^n, i.e. P[X <= b*] <= 1/n; None when b* < 0."""
    b = b_star(n, q)
    if b is None:
        return None
    p = HammingParams(n, q)
    return n * ball_volume(p, b) <= p.vertex_count


def exact_tail_probability(n: int, q: int, b: int) -> Fraction:
    """q^{-n} |Γ_b| as an exact fraction."""
    p = HammingParams(n, q)
    return Fraction(ball_volume(p, b), p.vertex_count)


def binomial_lower_tail(n: int, p: Fraction, b: int) -> Fraction:
    """P[X <= b] for X ~ Binomial(n, p), summed term by term."""
    return sum(
        (math.comb(n, k) * p**k * (1 - p) ** (n - k) for k in range(0, min(b, n) + 1)),
        Fraction(0),
    )


def chernoff_tail_bound(n: int, q: int, b: float) -> float:
    """exp(-μ ε²/2) with μ = pn and b = (1 - ε)μ; 1.0 once b reaches μ."""
    mu = (q - 1) / q * n
    eps = 1 - b / mu
    if eps <= 0:
        return 1.0
    return math.exp(-mu * eps * eps / 2)


def chernoff_chain_holds(n: int, q: int, b: int) -> bool:
    """(b+1) q^n / n < p q^n, which after dividing by q^n is b+1 < pn."""
    return Fraction(b + 1) < edge_probability(q) * n


def strongest_volume_bound(n: int, q: int) -> int:
    """Largest β lower bound the volume inequality proves at any radius.

    If the certificate holds at ``b`` then β >= b + 2. (b+1)|Γ_b| grows with
    ``b``, holds at b = 0 and fails at b = n, so bisection finds the first
    failing radius.
    """
    HammingParams(n, q)
    holds, fails = 0, n
    while fails - holds > 1:
        mid = (holds + fails) // 2
        if volume_certificate(n, q, mid):
            holds = mid
        else:
            fails = mid
    return fails + 1


def gap_envelope_ok(n: int, q: int, constant: Optional[float] = None) -> bool:
    """upper - lower_real <= constant * √(n ln n); constant defaults to the configured one."""
    constant = constant if constant is not None else settings.envelope_constant
    lower_real, _ = lower_bound(n, q)
    return upper_bound(n, q) - lower_real <= constant * math.sqrt(n * math.log(n))
