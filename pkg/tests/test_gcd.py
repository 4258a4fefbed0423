import math
import random

import pytest
from hypothesis import given, strategies as st

from ntkit import (
    Algorithm,
    DomainError,
    GcdStep,
    GcdTrace,
    StepKind,
    ancient_gcd,
    ancient_gcd_variant,
    binary_gcd,
    euclid_gcd,
    extended_gcd,
    replay_trace,
    run_algorithm,
    subtractive_gcd,
    two_adic_split,
)

ALL_ALGORITHMS = ("ancient", "subtractive", "binary", "euclid")

odd_ints = st.integers(0, 2**16).map(lambda n: 2 * n + 1)


# --- two_adic_split ----------------------------------------------------------


@pytest.mark.parametrize("n,expected", [(98, (1, 49)), (7, (0, 7)), (96, (5, 3))])
def test_two_adic_split_examples(n, expected):
    assert tuple(two_adic_split(n)) == expected


def test_two_adic_split_rejects_zero():
    with pytest.raises(DomainError):
        two_adic_split(0)


@given(st.integers(1, 10**12))
def test_two_adic_split_reconstructs(n):
    e, x = two_adic_split(n)
    assert x % 2 == 1
    assert (x << e) == n


# --- ancient -----------------------------------------------------------------


def test_ancient_golden_pair():
    trace = ancient_gcd(98, 63)
    assert trace.result == 7
    # 98 = 2 * 49 is split; 63 is already odd
    assert trace.steps[0] == GcdStep(StepKind.REMOVE_TWO_POWER, (98, 2, 49))
    subtracts = [s.operands for s in trace.steps if s.kind is StepKind.SUBTRACT]
    assert subtracts == [
        (63, 49, 14),
        (49, 14, 35),
        (35, 14, 21),
        (21, 14, 7),
        (14, 7, 7),
    ]
    assert trace.counts.shifts == 1
    assert trace.counts.subtractions == 5


def test_ancient_equal_inputs_subtract_free():
    trace = ancient_gcd(7, 7)
    assert trace.result == 7
    assert trace.counts.subtractions == 0


def test_ancient_derived_pair():
    # Euclidean oracle: gcd(1071, 462) = 21
    assert ancient_gcd(1071, 462).result == 21


def test_ancient_zero_handling():
    assert ancient_gcd(17, 0).result == 17
    assert ancient_gcd(0, 17).result == 17
    with pytest.raises(DomainError):
        ancient_gcd(0, 0)


# --- subtractive -------------------------------------------------------------


def test_subtractive_golden_pair():
    trace = subtractive_gcd(98, 63)
    assert trace.result == 7
    first_three = [s.operands for s in trace.steps[:3]]
    assert first_three == [(98, 63, 35), (63, 35, 28), (35, 28, 7)]


def test_subtractive_equal_inputs():
    trace = subtractive_gcd(5, 5)
    assert trace.result == 5
    assert trace.counts.subtractions == 0
    assert trace.steps == (GcdStep(StepKind.TERMINATE, (5,)),)


def test_subtractive_hand_replay():
    trace = subtractive_gcd(21, 6)
    assert trace.result == 3
    assert trace.counts.subtractions == 4
    subtracts = [s.operands for s in trace.steps if s.kind is StepKind.SUBTRACT]
    assert subtracts == [(21, 6, 15), (15, 6, 9), (9, 6, 3), (6, 3, 3)]


@pytest.mark.parametrize("a,b", [(0, 5), (5, 0), (0, 0)])
def test_subtractive_rejects_zero(a, b):
    with pytest.raises(DomainError):
        subtractive_gcd(a, b)


# --- variant -----------------------------------------------------------------


def test_variant_golden_trace():
    trace = ancient_gcd_variant(63, 35)
    assert trace.result == 7
    assert [(s.kind, s.operands) for s in trace.steps] == [
        (StepKind.SUBTRACT, (63, 35, 28)),
        (StepKind.REMOVE_TWO_POWER, (28, 4, 7)),
        (StepKind.SUBTRACT, (35, 7, 28)),
        (StepKind.REMOVE_TWO_POWER, (28, 4, 7)),
        (StepKind.TERMINATE, (7,)),
    ]
    assert trace.counts.subtractions == 2
    assert trace.counts.shifts == 4  # each 28 = 4 x 7 removal is two halvings


def test_variant_equal_inputs():
    trace = ancient_gcd_variant(9, 9)
    assert trace.result == 9
    assert trace.counts.subtractions == 0


def test_variant_derived_pair():
    assert ancient_gcd_variant(105, 77).result == 7


@pytest.mark.parametrize("a,b", [(98, 63), (63, 98), (0, 5), (5, 0)])
def test_variant_rejects_even_or_zero(a, b):
    with pytest.raises(DomainError):
        ancient_gcd_variant(a, b)


# --- binary ------------------------------------------------------------------


def test_binary_golden_pair():
    assert binary_gcd(98, 63).result == 7


def test_binary_zero_cases():
    assert binary_gcd(0, 0).result == 0
    assert binary_gcd(12, 0).result == 12
    assert binary_gcd(0, 12).result == 12


def test_binary_joint_stripping():
    trace = binary_gcd(48, 36)
    assert trace.result == 12
    joint = [s for s in trace.steps if s.kind is StepKind.REMOVE_TWO_POWER]
    assert [s.operands for s in joint] == [(36, 12), (18, 6)]  # k = 2
    assert trace.counts.shifts >= 2
    assert trace.counts.mod_reductions == 1
    assert trace.counts.subtractions == 2
    assert trace.counts.iterations == 2


def test_binary_shift_count_equals_recorded_halvings():
    for a, b in [(48, 36), (98, 63), (1071, 462), (2**20, 3), (12345, 67890)]:
        trace = binary_gcd(a, b)
        halvings = sum(
            1
            for s in trace.steps
            if s.kind is StepKind.HALVE
            or (s.kind is StepKind.REMOVE_TWO_POWER and len(s.operands) == 2)
        )
        assert trace.counts.shifts == halvings


# --- euclid ------------------------------------------------------------------


def test_euclid_golden_chain():
    trace = euclid_gcd(98, 63)
    assert trace.result == 7
    reduces = [s.operands for s in trace.steps if s.kind is StepKind.MOD_REDUCE]
    assert reduces == [(98, 63, 35), (63, 35, 28), (35, 28, 7), (28, 7, 0)]
    assert trace.counts.mod_reductions == 4


def test_euclid_trivial_cases():
    assert euclid_gcd(17, 0).result == 17
    assert euclid_gcd(17, 0).counts.mod_reductions == 0
    equal = euclid_gcd(13, 13)
    assert equal.result == 13
    assert equal.counts.mod_reductions == 1
    assert euclid_gcd(0, 0).result == 0


# --- extended ----------------------------------------------------------------


@pytest.mark.parametrize(
    "a,b,expected",
    [(98, 63, (7, 2, -3)), (17, 0, (17, 1, 0)), (3, 5, (1, 2, -1))],
)
def test_extended_gcd_examples(a, b, expected):
    assert extended_gcd(a, b) == expected


def test_extended_gcd_rejects_double_zero():
    with pytest.raises(DomainError):
        extended_gcd(0, 0)


@given(st.integers(0, 10**9), st.integers(0, 10**9))
def test_extended_gcd_bezout_identity(a, b):
    if a == 0 and b == 0:
        return
    g, u, v = extended_gcd(a, b)
    assert u * a + v * b == g
    assert g == math.gcd(a, b)


# --- cross-algorithm properties ----------------------------------------------


def test_agreement_exhaustive_small():
    for a in range(1, 129):
        for b in range(1, 129):
            ref = euclid_gcd(a, b, record_steps=False).result
            for name in ("ancient", "subtractive", "binary"):
                assert run_algorithm(name, a, b, record_steps=False).result == ref
            if a % 2 and b % 2:
                assert ancient_gcd_variant(a, b, record_steps=False).result == ref


@given(st.integers(1, 2**256), st.integers(1, 2**256))
def test_agreement_wide_operands(a, b):
    ref = math.gcd(a, b)
    assert binary_gcd(a, b, record_steps=False).result == ref
    assert euclid_gcd(a, b, record_steps=False).result == ref


@given(st.integers(1, 5000), st.integers(1, 5000))
def test_agreement_subtraction_family(a, b):
    ref = math.gcd(a, b)
    assert ancient_gcd(a, b, record_steps=False).result == ref
    assert subtractive_gcd(a, b, record_steps=False).result == ref


def test_divisor_property_exhaustive():
    for a in range(1, 129):
        for b in range(1, 129):
            g = euclid_gcd(a, b, record_steps=False).result
            assert a % g == 0 and b % g == 0
            for d in range(1, min(a, b) + 1):
                if a % d == 0 and b % d == 0:
                    assert g % d == 0


def test_split_identity():
    rng = random.Random(13)
    pairs = [(a, b) for a in range(1, 30) for b in range(1, 30)]
    pairs += [(rng.randrange(1, 2**48), rng.randrange(1, 2**48)) for _ in range(200)]
    for a, b in pairs:
        e, x = two_adic_split(a)
        f, y = two_adic_split(b)
        whole = ancient_gcd(a, b, record_steps=False).result
        odd_part = ancient_gcd(x, y, record_steps=False).result
        assert whole == odd_part << min(e, f)


# --- traces ------------------------------------------------------------------


def _sample_traces() -> list[GcdTrace]:
    rng = random.Random(99)
    traces = []
    for _ in range(150):
        a = rng.randrange(0, 2**24)
        b = rng.randrange(0, 2**24)
        traces.append(binary_gcd(a, b))
        traces.append(euclid_gcd(a, b))
        if a or b:
            traces.append(ancient_gcd(a, b))
        if a and b:
            traces.append(subtractive_gcd(a % 4096 + 1, b % 4096 + 1))
            traces.append(ancient_gcd_variant(a | 1, b | 1))
    return traces


def test_trace_replay_reproduces_result():
    for trace in _sample_traces():
        assert replay_trace(trace) == trace.result


def test_trace_replay_detects_tampering():
    trace = ancient_gcd_variant(63, 35)
    bad_steps = list(trace.steps)
    bad_steps[0] = GcdStep(StepKind.SUBTRACT, (63, 35, 29))
    tampered = GcdTrace(
        trace.algorithm, trace.inputs, tuple(bad_steps), trace.result, trace.counts
    )
    with pytest.raises(DomainError):
        replay_trace(tampered)


def test_trace_replay_detects_wrong_result():
    trace = euclid_gcd(98, 63)
    tampered = GcdTrace(
        trace.algorithm, trace.inputs, trace.steps[:-1] + (GcdStep(StepKind.TERMINATE, (14,)),), 14, trace.counts
    )
    with pytest.raises(DomainError):
        replay_trace(tampered)


def test_result_divides_inputs():
    rng = random.Random(7)
    for _ in range(300):
        a = rng.randrange(1, 2**32)
        b = rng.randrange(1, 2**32)
        for name in ALL_ALGORITHMS:
            g = run_algorithm(name, a, b, record_steps=False).result
            assert a % g == 0 and b % g == 0


def test_subtractive_termination_measure():
    # the operand sum strictly decreases with every subtraction step
    for a, b in [(98, 63), (1071, 462), (500, 7), (121, 33)]:
        trace = subtractive_gcd(a, b)
        sums = [x + y for x, y, _ in (s.operands for s in trace.steps if s.kind is StepKind.SUBTRACT)]
        assert all(later < earlier for earlier, later in zip(sums, sums[1:]))


def test_binary_termination_measure():
    # a + b at the start of each subtract-and-halve cycle strictly decreases
    for a, b in [(98, 63), (1071, 462), (48, 36), (99991, 3)]:
        trace = binary_gcd(a, b)
        sums = [x + y for x, y, _ in (s.operands for s in trace.steps if s.kind is StepKind.SUBTRACT)]
        assert all(later < earlier for earlier, later in zip(sums, sums[1:]))


def test_run_algorithm_rejects_unknown_name():
    with pytest.raises(DomainError):
        run_algorithm("stein", 4, 2)


def test_record_steps_off_keeps_counts():
    full = binary_gcd(98, 63)
    bare = binary_gcd(98, 63, record_steps=False)
    assert bare.steps == ()
    assert bare.result == full.result
    assert bare.counts == full.counts


def test_negative_inputs_rejected():
    for fn in (ancient_gcd, subtractive_gcd, binary_gcd, euclid_gcd):
        with pytest.raises(DomainError):
            fn(-4, 2)
