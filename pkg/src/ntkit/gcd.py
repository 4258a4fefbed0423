"""Traced greatest-common-divisor algorithms over Python's native big integers.

Five interchangeable GCD routines are provided: mutual subtraction with and
without a 2-adic pre-split, the odd-odd variant that strips the full power of
two from every difference, a five-step binary (Stein-style) GCD, and the
Euclidean reference that the others are checked against.  Each routine returns
a :class:`GcdTrace` recording the arithmetic it performed, one step per
displayed line, together with :class:`OperationCounts` tallies so that growth
in subtractions and shifts can be measured empirically.

Counting conventions
--------------------
subtractions    one per difference computed
shifts          one per halving: 2-adic pre-split halvings, joint halvings of
                an (even, even) pair, and every single halving of a value or a
                difference.  A ``RemoveTwoPower`` of ``2**g`` counts ``g``.
mod_reductions  one per ``a mod b``
comparisons     magnitude/equality tests on operand values (equality exits,
                ordering of minuend and subtrahend, zero and sign tests).
                Parity tests are bit inspections and are not counted.
iterations      outer-loop passes (subtraction cycles, division steps, or
                subtract-and-halve cycles, depending on the algorithm)

All functions are pure and hold no shared mutable state; they are safe to
call concurrently from any number of threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .errors import DomainError


class Algorithm(str, Enum):
    """Names of the GCD routines exposed by this module."""

    ANCIENT = "ancient"
    VARIANT = "variant"
    SUBTRACTIVE = "subtractive"
    BINARY = "binary"
    EUCLID = "euclid"


class StepKind(str, Enum):
    SUBTRACT = "Subtract"
    HALVE = "Halve"
    REMOVE_TWO_POWER = "RemoveTwoPower"
    SWAP = "Swap"
    MOD_REDUCE = "ModReduce"
    TERMINATE = "Terminate"


@dataclass(frozen=True)
class GcdStep:
    """One recorded arithmetic step.

    Operand layout by kind:

    ==================  ===========  =====================================
    Subtract            (x, y, z)    z = x - y, x >= y
    Halve               (v, w)       w = v // 2 with v even
    RemoveTwoPower      (v, p, z)    v = p * z, p = 2**g with g >= 1, z odd
    RemoveTwoPower      (a, b)       joint form: both even, both halved
    Swap                (a, b)       operands exchanged
    ModReduce           (a, b, r)    r = a mod b
    Terminate           (g,)         final value
    ==================  ===========  =====================================
    """

    kind: StepKind
    operands: tuple[int, ...]


@dataclass(frozen=True)
class OperationCounts:
    """Operation tallies for a single run (see module docstring)."""

    subtractions: int = 0
    shifts: int = 0
    mod_reductions: int = 0
    comparisons: int = 0
    iterations: int = 0


@dataclass(frozen=True)
class GcdTrace:
    """Inputs, recorded steps, tallies, and the final result of one run."""

    algorithm: Algorithm
    inputs: tuple[int, int]
    steps: tuple[GcdStep, ...]
    result: int
    counts: OperationCounts


class TwoAdicSplit(NamedTuple):
    exponent: int
    odd_part: int


def _check_natural(value: int, name: str) -> None:
    if value < 0:
        raise DomainError(f"{name} must be non-negative, got {value}")


def two_adic_split(n: int) -> TwoAdicSplit:
    """Write ``n = 2**e * x`` with ``x`` odd and return ``(e, x)``."""
    if n == 0:
        raise DomainError("zero has no 2-adic split")
    if n < 0:
        raise DomainError(f"2-adic split requires n >= 1, got {n}")
    e = (n & -n).bit_length() - 1
    return TwoAdicSplit(e, n >> e)


def _subtract_loop(
    x: int, y: int, steps: list[GcdStep] | None
) -> tuple[int, int, int]:
    """Larger-minus-smaller subtraction until equal.

    Returns (common value, subtractions, comparisons).  After each
    subtraction the new pair is (y, z) when y >= z, else (z, y), which keeps
    the minuend at least as large as the subtrahend.
    """
    comparisons = 1
    if x < y:
        x, y = y, x
    subtractions = 0
    while True:
        comparisons += 1
        if x == y:
            break
        z = x - y
        subtractions += 1
        if steps is not None:
            steps.append(GcdStep(StepKind.SUBTRACT, (x, y, z)))
        comparisons += 1
        if y >= z:
            x, y = y, z
        else:
            x = z
    return x, subtractions, comparisons


def ancient_gcd(a: int, b: int, *, record_steps: bool = True) -> GcdTrace:
    """Mutual-subtraction GCD with a 2-adic pre-split.

    Both inputs are written as ``2**e * x`` with ``x`` odd; the subtraction
    loop runs on the odd parts and the result is scaled back by
    ``2**min(e, f)``.  By convention ``gcd(a, 0) = a``; ``gcd(0, 0)`` is a
    domain error.  ``shifts`` counts the ``e + f`` pre-split halvings.
    """
    _check_natural(a, "a")
    _check_natural(b, "b")
    if a == 0 and b == 0:
        raise DomainError("gcd(0, 0) is undefined for the ancient algorithm")
    steps: list[GcdStep] | None = [] if record_steps else None
    if a == 0 or b == 0:
        g = a or b
        if steps is not None:
            steps.append(GcdStep(StepKind.TERMINATE, (g,)))
        return GcdTrace(Algorithm.ANCIENT, (a, b), tuple(steps or ()), g, OperationCounts())
    e, x = two_adic_split(a)
    f, y = two_adic_split(b)
    if steps is not None:
        if e:
            steps.append(GcdStep(StepKind.REMOVE_TWO_POWER, (a, 1 << e, x)))
        if f:
            steps.append(GcdStep(StepKind.REMOVE_TWO_POWER, (b, 1 << f, y)))
    odd_gcd, subtractions, comparisons = _subtract_loop(x, y, steps)
    g = odd_gcd << min(e, f)
    if steps is not None:
        steps.append(GcdStep(StepKind.TERMINATE, (g,)))
    counts = OperationCounts(
        subtractions=subtractions,
        shifts=e + f,
        comparisons=comparisons,
        iterations=subtractions,
    )
    return GcdTrace(Algorithm.ANCIENT, (a, b), tuple(steps or ()), g, counts)


def subtractive_gcd(a: int, b: int, *, record_steps: bool = True) -> GcdTrace:
    """Classical mutual subtraction with no power-of-two handling.

    Replaces the larger operand by (larger - smaller) until both are equal.
    Requires positive operands.
    """
    _check_natural(a, "a")
    _check_natural(b, "b")
    if a == 0 or b == 0:
        raise DomainError("subtractive gcd requires positive operands")
    steps: list[GcdStep] | None = [] if record_steps else None
    g, subtractions, comparisons = _subtract_loop(a, b, steps)
    if steps is not None:
        steps.append(GcdStep(StepKind.TERMINATE, (g,)))
    counts = OperationCounts(
        subtractions=subtractions, comparisons=comparisons, iterations=subtractions
    )
    return GcdTrace(Algorithm.SUBTRACTIVE, (a, b), tuple(steps or ()), g, counts)


def ancient_gcd_variant(x: int, y: int, *, record_steps: bool = True) -> GcdTrace:
    """Odd-odd mutual subtraction that strips the full power of two from
    every difference.

    Each cycle computes ``x - y = 2**g * z`` with ``z`` odd; the removal is
    recorded as a ``RemoveTwoPower`` step and contributes ``g`` shifts.  Both
    operands must be odd and positive.
    """
    _check_natural(x, "x")
    _check_natural(y, "y")
    if x < 1 or y < 1 or x % 2 == 0 or y % 2 == 0:
        raise DomainError("variant requires odd operands")
    steps: list[GcdStep] | None = [] if record_steps else None
    inputs = (x, y)
    comparisons = 1
    if x < y:
        x, y = y, x
    subtractions = 0
    shifts = 0
    while True:
        comparisons += 1
        if x == y:
            break
        d = x - y
        subtractions += 1
        if steps is not None:
            steps.append(GcdStep(StepKind.SUBTRACT, (x, y, d)))
        g_exp, z = two_adic_split(d)
        shifts += g_exp
        if g_exp and steps is not None:
            steps.append(GcdStep(StepKind.REMOVE_TWO_POWER, (d, 1 << g_exp, z)))
        comparisons += 1
        if y >= z:
            x, y = y, z
        else:
            x = z
    if steps is not None:
        steps.append(GcdStep(StepKind.TERMINATE, (x,)))
    counts = OperationCounts(
        subtractions=subtractions,
        shifts=shifts,
        comparisons=comparisons,
        iterations=subtractions,
    )
    return GcdTrace(Algorithm.VARIANT, inputs, tuple(steps or ()), x, counts)


def binary_gcd(a: int, b: int, *, record_steps: bool = True) -> GcdTrace:
    """Binary GCD in five steps.

    One initial modular reduction, joint even-stripping of the pair with a
    counter ``k`` (one ``RemoveTwoPower`` step and one shift per joint
    halving), odd-making of whichever operand is still even, then a
    subtract-and-halve loop on the signed half-difference.  Returns
    ``2**k * a`` at termination; both inputs may be zero.
    """
    _check_natural(a, "a")
    _check_natural(b, "b")
    steps: list[GcdStep] | None = [] if record_steps else None
    inputs = (a, b)

    def finish(result: int, counts: OperationCounts) -> GcdTrace:
        if steps is not None:
            steps.append(GcdStep(StepKind.TERMINATE, (result,)))
        return GcdTrace(Algorithm.BINARY, inputs, tuple(steps or ()), result, counts)

    comparisons = 1
    if a < b:
        if steps is not None:
            steps.append(GcdStep(StepKind.SWAP, (a, b)))
        a, b = b, a
    comparisons += 1
    if b == 0:
        return finish(a, OperationCounts(comparisons=comparisons))
    r = a % b
    if steps is not None:
        steps.append(GcdStep(StepKind.MOD_REDUCE, (a, b, r)))
    a, b = b, r
    comparisons += 1
    if b == 0:
        return finish(a, OperationCounts(mod_reductions=1, comparisons=comparisons))

    k = 0
    shifts = 0
    while a & 1 == 0 and b & 1 == 0:
        if steps is not None:
            steps.append(GcdStep(StepKind.REMOVE_TWO_POWER, (a, b)))
        a >>= 1
        b >>= 1
        k += 1
        shifts += 1
    while a & 1 == 0:
        if steps is not None:
            steps.append(GcdStep(StepKind.HALVE, (a, a >> 1)))
        a >>= 1
        shifts += 1
    while b & 1 == 0:
        if steps is not None:
            steps.append(GcdStep(StepKind.HALVE, (b, b >> 1)))
        b >>= 1
        shifts += 1

    subtractions = 0
    iterations = 0
    while True:
        iterations += 1
        if a >= b:
            big, small, a_is_big = a, b, True
        else:
            big, small, a_is_big = b, a, False
        d = big - small
        subtractions += 1
        if steps is not None:
            steps.append(GcdStep(StepKind.SUBTRACT, (big, small, d)))
        comparisons += 1
        if d == 0:
            result = a << k
            break
        t = d >> 1
        shifts += 1
        if steps is not None:
            steps.append(GcdStep(StepKind.HALVE, (d, t)))
        while t & 1 == 0:
            if steps is not None:
                steps.append(GcdStep(StepKind.HALVE, (t, t >> 1)))
            t >>= 1
            shifts += 1
        comparisons += 1
        if a_is_big:
            a = t
        else:
            b = t
    counts = OperationCounts(
        subtractions=subtractions,
        shifts=shifts,
        mod_reductions=1,
        comparisons=comparisons,
        iterations=iterations,
    )
    return finish(result, counts)


def euclid_gcd(a: int, b: int, *, record_steps: bool = True) -> GcdTrace:
    """Repeated modular reduction until the remainder is zero.

    The reference implementation the other variants are checked against.
    """
    _check_natural(a, "a")
    _check_natural(b, "b")
    steps: list[GcdStep] | None = [] if record_steps else None
    inputs = (a, b)
    mod_reductions = 0
    comparisons = 0
    while True:
        comparisons += 1
        if b == 0:
            break
        r = a % b
        mod_reductions += 1
        if steps is not None:
            steps.append(GcdStep(StepKind.MOD_REDUCE, (a, b, r)))
        a, b = b, r
    if steps is not None:
        steps.append(GcdStep(StepKind.TERMINATE, (a,)))
    counts = OperationCounts(
        mod_reductions=mod_reductions,
        comparisons=comparisons,
        iterations=mod_reductions,
    )
    return GcdTrace(Algorithm.EUCLID, inputs, tuple(steps or ()), a, counts)


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, u, v)`` with ``u*a + v*b = g = gcd(a, b)``.

    The coefficients are signed; the inputs must not both be zero.
    """
    _check_natural(a, "a")
    _check_natural(b, "b")
    if a == 0 and b == 0:
        raise DomainError("extended gcd of (0, 0) is undefined")
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    return old_r, old_u, old_v


_DISPATCH = {
    Algorithm.ANCIENT: ancient_gcd,
    Algorithm.VARIANT: ancient_gcd_variant,
    Algorithm.SUBTRACTIVE: subtractive_gcd,
    Algorithm.BINARY: binary_gcd,
    Algorithm.EUCLID: euclid_gcd,
}


def run_algorithm(
    algorithm: Algorithm | str, a: int, b: int, *, record_steps: bool = True
) -> GcdTrace:
    """Run the named GCD algorithm on ``(a, b)`` and return its trace."""
    try:
        alg = Algorithm(algorithm)
    except ValueError:
        raise DomainError(f"unknown algorithm: {algorithm!r}") from None
    return _DISPATCH[alg](a, b, record_steps=record_steps)


# --- Trace replay -----------------------------------------------------------
# Re-executes a recorded trace from its inputs, validating each step's
# arithmetic identity and the state transition it implies.


def _fail(message: str) -> None:
    raise DomainError(f"trace replay failed: {message}")


def _is_two_power(p: int) -> bool:
    return p >= 2 and p & (p - 1) == 0


def replay_trace(trace: GcdTrace) -> int:
    """Replay ``trace`` from its inputs and return the reproduced result.

    Every step must satisfy the arithmetic identity of its kind and follow
    from the state left by the previous steps; a :class:`DomainError` is
    raised otherwise.  The returned value always equals ``trace.result``.
    """
    alg = trace.algorithm
    if alg in (Algorithm.ANCIENT, Algorithm.SUBTRACTIVE, Algorithm.VARIANT):
        result = _replay_subtractive_family(trace)
    elif alg is Algorithm.BINARY:
        result = _replay_binary(trace)
    elif alg is Algorithm.EUCLID:
        result = _replay_euclid(trace)
    else:  # pragma: no cover - enum is closed
        _fail(f"unknown algorithm {alg!r}")
    if result != trace.result:
        _fail(f"replayed value {result} != recorded result {trace.result}")
    return result


def _replay_subtractive_family(trace: GcdTrace) -> int:
    steps = trace.steps
    pair = list(trace.inputs)
    exponents = [0, 0]
    split_done = [False, False]
    i = 0
    # leading RemoveTwoPower steps describe the 2-adic pre-split
    while i < len(steps) and steps[i].kind is StepKind.REMOVE_TWO_POWER and len(steps[i].operands) == 3:
        v, p, z = steps[i].operands
        if not _is_two_power(p) or z % 2 == 0 or v != p * z:
            _fail(f"bad RemoveTwoPower {steps[i].operands}")
        slot = next(
            (j for j in range(2) if not split_done[j] and pair[j] == v), None
        )
        if slot is None:
            _fail(f"RemoveTwoPower of {v} does not match state {pair}")
        pair[slot] = z
        exponents[slot] = p.bit_length() - 1
        split_done[slot] = True
        i += 1
    while i < len(steps):
        step = steps[i]
        if step.kind is StepKind.TERMINATE:
            if i != len(steps) - 1:
                _fail("steps recorded after Terminate")
            (final,) = step.operands
            if 0 in pair:
                expected = pair[0] or pair[1]
            else:
                if pair[0] != pair[1]:
                    _fail(f"terminated with unequal operands {pair}")
                expected = pair[0] << min(exponents)
            if final != expected:
                _fail(f"Terminate value {final} != expected {expected}")
            return final
        if step.kind is StepKind.SUBTRACT:
            x, y, z = step.operands
            if sorted((x, y)) != sorted(pair):
                _fail(f"Subtract operands {(x, y)} do not match state {pair}")
            if x < y or x - y != z:
                _fail(f"bad Subtract {step.operands}")
            i += 1
            if (
                trace.algorithm is Algorithm.VARIANT
                and i < len(steps)
                and steps[i].kind is StepKind.REMOVE_TWO_POWER
            ):
                v, p, w = steps[i].operands
                if v != z or not _is_two_power(p) or w % 2 == 0 or v != p * w:
                    _fail(f"bad RemoveTwoPower {steps[i].operands}")
                z = w
                i += 1
            pair = [y, z] if y >= z else [z, y]
            continue
        _fail(f"unexpected step {step.kind.value}")
    _fail("trace ended without Terminate")
    raise AssertionError  # unreachable


def _replay_euclid(trace: GcdTrace) -> int:
    a, b = trace.inputs
    steps = trace.steps
    if not steps:
        _fail("trace ended without Terminate")
    for step in steps[:-1]:
        if step.kind is not StepKind.MOD_REDUCE:
            _fail(f"unexpected step {step.kind.value}")
        x, y, r = step.operands
        if (x, y) != (a, b) or y == 0 or r != x % y:
            _fail(f"bad ModReduce {step.operands} for state {(a, b)}")
        a, b = y, r
    last = steps[-1]
    if last.kind is not StepKind.TERMINATE or b != 0:
        _fail("trace ended without Terminate at b = 0")
    (final,) = last.operands
    if final != a:
        _fail(f"Terminate value {final} != expected {a}")
    return final


def _replay_binary(trace: GcdTrace) -> int:
    a, b = trace.inputs
    steps = trace.steps
    i = 0

    def expect_terminate(value: int) -> int:
        if i != len(steps) - 1 or steps[i].kind is not StepKind.TERMINATE:
            _fail("expected final Terminate step")
        (final,) = steps[i].operands
        if final != value:
            _fail(f"Terminate value {final} != expected {value}")
        return final

    if i < len(steps) and steps[i].kind is StepKind.SWAP:
        if steps[i].operands != (a, b):
            _fail(f"bad Swap {steps[i].operands}")
        a, b = b, a
        i += 1
    if a < b:
        _fail("operands out of order without a Swap step")
    if b == 0:
        return expect_terminate(a)
    if i >= len(steps) or steps[i].kind is not StepKind.MOD_REDUCE:
        _fail("expected ModReduce step")
    x, y, r = steps[i].operands
    if (x, y) != (a, b) or r != x % y:
        _fail(f"bad ModReduce {steps[i].operands}")
    a, b = y, r
    i += 1
    if b == 0:
        return expect_terminate(a)

    k = 0
    while i < len(steps) and steps[i].kind is StepKind.REMOVE_TWO_POWER:
        if len(steps[i].operands) != 2 or steps[i].operands != (a, b):
            _fail(f"bad joint RemoveTwoPower {steps[i].operands}")
        if a % 2 or b % 2:
            _fail("joint RemoveTwoPower on odd operand")
        a >>= 1
        b >>= 1
        k += 1
        i += 1
    while i < len(steps) and steps[i].kind is StepKind.HALVE:
        v, w = steps[i].operands
        if v % 2 or w * 2 != v:
            _fail(f"bad Halve {steps[i].operands}")
        if v == a and a % 2 == 0:
            a = w
        elif v == b and b % 2 == 0:
            b = w
        else:
            _fail(f"Halve of {v} does not match state {(a, b)}")
        i += 1
    if a % 2 == 0 or b % 2 == 0:
        _fail("operands not odd before the subtraction loop")

    while True:
        if i >= len(steps) or steps[i].kind is not StepKind.SUBTRACT:
            _fail("expected Subtract step")
        x, y, d = steps[i].operands
        big, small = (a, b) if a >= b else (b, a)
        if (x, y) != (big, small) or d != x - y:
            _fail(f"bad Subtract {steps[i].operands} for state {(a, b)}")
        i += 1
        if d == 0:
            return expect_terminate(a << k)
        if i >= len(steps) or steps[i].kind is not StepKind.HALVE:
            _fail("expected Halve of the difference")
        v, t = steps[i].operands
        if v != d or d % 2 or t * 2 != d:
            _fail(f"bad Halve {steps[i].operands}")
        i += 1
        while i < len(steps) and steps[i].kind is StepKind.HALVE:
            v, w = steps[i].operands
            if v != t or v % 2 or w * 2 != v:
                _fail(f"bad Halve {steps[i].operands}")
            t = w
            i += 1
        if t % 2 == 0:
            _fail("difference not fully stripped of twos")
        if a > b:
            a = t
        else:
            b = t
