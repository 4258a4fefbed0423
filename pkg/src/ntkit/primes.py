"""Irreducible numbers, bounded trial-division factoring, Hui Yang's
factor-and-scale multiplication, and the base-2 Fermat congruence.

An *irreducible number* is an ``n > 1`` that cannot be written as a product
of two numbers both smaller than ``n`` -- Hui Yang's 13th-century definition
of a prime.  Everything here is deterministic trial division; probabilistic
primality tests are deliberately out of scope, so the functions are meant
for desk-scale inputs.

Pure functions throughout; safe for concurrent use (the shared prime table
is built once and only read afterwards).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import groupby
from math import isqrt

from .errors import DomainError

#: Largest trial divisor attempted by :func:`factor` before giving up.
DEFAULT_DIVISOR_LIMIT = 1 << 20


@lru_cache(maxsize=4)
def _primes_upto(limit: int) -> tuple[int, ...]:
    """All primes <= limit, by a byte sieve of Eratosthenes."""
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytes(len(range(p * p, limit + 1, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def is_irreducible(n: int) -> bool:
    """True iff ``n > 1`` and ``n`` is not a product of two smaller numbers.

    Equivalent to primality: a composite ``n`` has a prime divisor
    ``p <= isqrt(n)``, and then ``n = p * (n // p)`` with both factors
    strictly smaller than ``n``.  Conversely any factorisation into two
    smaller numbers yields a divisor in ``[2, isqrt(n)]``.  Checked by plain
    odd trial division.
    """
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def irreducible_in_range(lo: int, hi: int) -> list[int]:
    """All irreducible numbers ``n`` with ``lo <= n <= hi``, ascending."""
    if lo > hi:
        raise DomainError(f"empty range: {lo} > {hi}")
    return [n for n in range(max(lo, 2), hi + 1) if is_irreducible(n)]


def factor(n: int, *, divisor_limit: int = DEFAULT_DIVISOR_LIMIT) -> list[int]:
    """Prime factorisation of ``n >= 1`` by trial division, nondecreasing.

    ``factor(1)`` is the empty list.  Divisors up to ``divisor_limit`` are
    tried; if a composite cofactor survives (its smallest factor exceeds the
    limit), the factorisation is reported as too hard rather than stalling.
    """
    if n < 1:
        raise DomainError(f"factor requires n >= 1, got {n}")
    if divisor_limit < 2:
        raise DomainError("divisor_limit must be >= 2")
    out: list[int] = []
    m = n
    for p in _primes_upto(divisor_limit):
        if p * p > m:
            break
        while m % p == 0:
            out.append(p)
            m //= p
    if m > 1:
        # Every prime <= divisor_limit has been removed, so m is prime
        # whenever it is at most divisor_limit**2.
        if m > divisor_limit * divisor_limit:
            raise DomainError(
                f"factorization too hard: cofactor {m} has no divisor up to {divisor_limit}"
            )
        out.append(m)
    return out


def _group_prime_powers(factors: list[int]) -> list[int]:
    """Collapse repeated factors into prime powers: [3, 3, 7] -> [9, 7]."""
    return [p ** len(list(group)) for p, group in groupby(factors)]


def hui_yang_plan(
    a: int,
    b: int,
    *,
    grouped: bool = False,
    divisor_limit: int = DEFAULT_DIVISOR_LIMIT,
) -> tuple[int, list[int]]:
    """Choose which operand of ``a * b`` to factor; return ``(kept, factors)``.

    The smaller operand is factored so the running product is built by small
    scalar multiplications of the larger one.  If that factorisation exceeds
    the work budget the other operand is tried, and if both are out of reach
    the plan degrades to a single full-width multiplication.  With
    ``grouped=True`` repeated primes are applied as one prime-power step.
    """
    if a < 1 or b < 1:
        raise DomainError("planning requires positive operands")
    small, large = (a, b) if a <= b else (b, a)
    try:
        factors = factor(small, divisor_limit=divisor_limit)
        kept = large
    except DomainError:
        try:
            factors = factor(large, divisor_limit=divisor_limit)
            kept = small
        except DomainError:
            return large, [small]
    if grouped:
        factors = _group_prime_powers(factors)
    return kept, factors


def hui_yang_multiply(
    a: int,
    b: int,
    *,
    grouped: bool = False,
    divisor_limit: int = DEFAULT_DIVISOR_LIMIT,
) -> tuple[int, list[int]]:
    """Multiply by factoring one operand and scaling the other factor by
    factor, ascending.

    Returns ``(product, partials)`` where ``partials`` holds every running
    product, one per applied factor (so the last entry is the product
    itself).  A zero operand short-circuits to ``(0, [])``; a unit factored
    operand leaves no intermediate steps.
    """
    _check_operand(a, "a")
    _check_operand(b, "b")
    if a == 0 or b == 0:
        return 0, []
    kept, factors = hui_yang_plan(a, b, grouped=grouped, divisor_limit=divisor_limit)
    partials: list[int] = []
    acc = kept
    for scalar in factors:
        acc *= scalar
        partials.append(acc)
    return acc, partials


def _check_operand(value: int, name: str) -> None:
    if value < 0:
        raise DomainError(f"{name} must be non-negative, got {value}")


def fermat_little_check(p: int, x: int) -> bool:
    """True iff ``x**(p-1) = 1 (mod p)``, by square-and-multiply.

    Requires ``p >= 2`` and ``p`` not dividing ``x``.  True for every prime
    ``p`` (Fermat's little theorem) but also for pseudoprimes such as 341
    with ``x = 2``.
    """
    if p < 2:
        raise DomainError(f"modulus must be >= 2, got {p}")
    if x % p == 0:
        raise DomainError(f"{x} is divisible by {p}")
    return pow(x, p - 1, p) == 1


class Classification(str, Enum):
    PRIME_CONSISTENT = "PrimeConsistent"
    COMPOSITE_CONSISTENT = "CompositeConsistent"
    PSEUDOPRIME = "Pseudoprime"


@dataclass(frozen=True)
class HypothesisVerdict:
    """How ``n`` relates to the claim that ``2**(n-1) = 1 (mod n)`` holds
    exactly for primes (the "Chinese hypothesis")."""

    n: int
    congruence_holds: bool
    is_prime: bool
    classification: Classification


def chinese_hypothesis_classify(n: int) -> HypothesisVerdict:
    """Evaluate ``2**(n-1) mod n``, test primality, and classify.

    ``Pseudoprime`` marks a composite for which the congruence holds -- a
    counterexample to the hypothesis.  Primality reuses
    :func:`is_irreducible`.
    """
    if n < 2:
        raise DomainError(f"classification requires n >= 2, got {n}")
    congruence_holds = pow(2, n - 1, n) == 1
    prime = is_irreducible(n)
    if prime:
        classification = Classification.PRIME_CONSISTENT
    elif congruence_holds:
        classification = Classification.PSEUDOPRIME
    else:
        classification = Classification.COMPOSITE_CONSISTENT
    return HypothesisVerdict(n, congruence_holds, prime, classification)


def find_base2_pseudoprimes(limit: int) -> list[int]:
    """All composite ``n <= limit`` with ``2**(n-1) = 1 (mod n)``, ascending.

    The smallest is 341 = 11 * 31.
    """
    return [
        n
        for n in range(2, limit + 1)
        if pow(2, n - 1, n) == 1 and not is_irreducible(n)
    ]
