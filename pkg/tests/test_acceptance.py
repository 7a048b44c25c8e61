"""Acceptance suite: the nine exit criteria, each exact (integer and set
equalities, no tolerances), each printing one PASS line.

Expected values are frozen from worked examples or from the independent
oracles in the sibling test modules (definitional quadruple sums, power-set
ideal scans, all-pairs path intersection, brute-force symmetry closures).
"""

import time
from math import factorial

import pytest

import golden_data as gold
from gogmagog import bijections as bij
from gogmagog import claims
from gogmagog.cli import main
from gogmagog.enumeration import FamilyId, _elements, count, generate
from gogmagog.statistics import (
    boolean_stat_triple,
    count_negative_ones,
    distribution,
    inversion_number,
    perm_inversions,
    strict_diagonal_entries,
)
from gogmagog.triangles import Permutation, validate_boolean, validate_monotone

ASM_SEQUENCE = {1: 1, 2: 2, 3: 7, 4: 42, 5: 429, 6: 7436}


def test_criterion_1_family_counts():
    """Seven objects of order three in every family; the matrix and
    plane-partition enumerations agree through order six.  Target: under
    60 s from a cold cache."""
    _elements.cache_clear()
    start = time.monotonic()
    for family in (
        FamilyId.ASM,
        FamilyId.MONOTONE,
        FamilyId.MAGOG,
        FamilyId.BOOLEAN,
        FamilyId.NILP,
        FamilyId.TSSCPP,
    ):
        assert count(family, 3) == 7
    for n in range(1, 7):
        asm = count(FamilyId.ASM, n)
        boolean = count(FamilyId.BOOLEAN, n)
        assert asm == boolean == ASM_SEQUENCE[n], (n, asm, boolean)
    elapsed = time.monotonic() - start
    assert elapsed < 60.0
    print(f"ACCEPTANCE 1 PASS: counts agree, 1,2,7,42,429,7436 through order 6 ({elapsed:.1f}s < 60s)")


def test_criterion_2_factorial_counts():
    _elements.cache_clear()
    start = time.monotonic()
    for n in range(1, 9):
        assert count(FamilyId.PERMUTATION_BOOLEAN, n) == factorial(n)
    elapsed = time.monotonic() - start
    assert elapsed < 10.0
    print(f"ACCEPTANCE 2 PASS: n! permutation boolean triangles for n = 1..8 ({elapsed:.1f}s < 10s)")


def test_criterion_3_statistic_preservation():
    start = time.monotonic()
    total = 0
    for n in range(1, 8):
        for p in generate(FamilyId.PERMUTATION, n):
            total += 1
            b = bij.permutation_to_boolean(p)
            assert bij.boolean_to_permutation(b) == p
            zeros, last_row_zeros, lowest = boolean_stat_triple(b)
            assert zeros == perm_inversions(p)
            assert last_row_zeros == n - p.sigma[-1]
            ell = p.sigma.index(n) + 1
            assert lowest == (None if ell == 1 else ell - 1)
    elapsed = time.monotonic() - start
    assert total == 5913 and elapsed < 30.0
    print(f"ACCEPTANCE 3 PASS: statistics preserved for all 5913 permutations, n = 1..7 ({elapsed:.1f}s < 30s)")


def test_criterion_4_golden_example():
    sigma = Permutation.from_one_line("463512")
    matrix = bij.permutation_matrix(sigma)
    assert matrix.rows == gold.GOLDEN["matrix"]
    assert inversion_number(matrix) == 11
    assert bij.asm_to_monotone(matrix) == validate_monotone(gold.GOLDEN["monotone"])
    b = bij.permutation_to_boolean(sigma)
    assert b == validate_boolean(gold.GOLDEN["boolean"])
    assert boolean_stat_triple(b) == (11, 4, 1)
    print("ACCEPTANCE 4 PASS: golden example 463512 reproduced exactly")


def test_criterion_5_negative_ones():
    for n in range(1, 6):
        for a in generate(FamilyId.ASM, n):
            assert count_negative_ones(a) == strict_diagonal_entries(bij.asm_to_monotone(a))
    print("ACCEPTANCE 5 PASS: -1 count equals strict-diagonal-entry count, n = 1..5")


@pytest.mark.parametrize("n", range(1, 7))
def test_criterion_6_permutation_characterizations(n):
    """Weakly decreasing boolean rows, the forbidden array configuration, and
    the forbidden magog pattern select the same plane partitions."""
    by_boolean = set()
    by_array = set()
    by_magog = set()
    for p in generate(FamilyId.TSSCPP, n):
        b = bij.tsscpp_to_boolean(p)
        if bij.is_permutation_boolean(b):
            by_boolean.add(p)
        if bij.is_permutation_tsscpp(p):
            by_array.add(p)
        if bij.is_permutation_magog(bij.boolean_to_magog(b)):
            by_magog.add(p)
    assert by_boolean == by_array == by_magog
    assert len(by_boolean) == factorial(n)
    if n == 6:
        print("ACCEPTANCE 6 PASS: three permutation characterizations agree, n = 1..6")


CLAIM_RANGES = {
    "thm4.2": (2, 4),
    "thm4.6": (2, 4),
    "thm4.4": (2, 5),
    "thm4.9": (2, 5),
    "thm4.12": (2, 5),
    "cor4.16": (2, 5),
    "cor4.17": (2, 5),
    "lemma4.8": (2, 5),
    "prop-nonlattice": (2, 4),
}


_claim_seconds = {}


@pytest.mark.parametrize("claim", sorted(CLAIM_RANGES))
def test_criterion_7_poset_claims(claim):
    start = time.monotonic()
    low, high = CLAIM_RANGES[claim]
    for n in range(low, high + 1):
        result = claims.run_claim(claim, n)
        assert result["ok"], result
        if claim == "prop-nonlattice" and n == 4:
            assert result["witnesses"], "no-meet/no-join witness expected at order 4"
    _claim_seconds[claim] = time.monotonic() - start
    cumulative = sum(_claim_seconds.values())
    assert cumulative < 300.0
    print(f"ACCEPTANCE 7 PASS: {claim} verified for n = {low}..{high} (cumulative {cumulative:.1f}s < 300s)")


def test_criterion_8_zero_then_one_report():
    for n in range(1, 5):
        assert distribution(FamilyId.BOOLEAN, n, "zero_then_one") == distribution(
            FamilyId.ASM, n, "negative_ones"
        )
    lhs = distribution(FamilyId.BOOLEAN, 5, "zero_then_one")
    rhs = distribution(FamilyId.ASM, 5, "negative_ones")
    verdict = "equal" if lhs == rhs else "different"
    print(f"ACCEPTANCE 8 PASS: distributions equal for n <= 4; at n = 5 they are {verdict}:")
    print(f"  zero-then-one over boolean triangles: {lhs}")
    print(f"  negative ones over matrices:          {rhs}")


def test_criterion_9_round_trips():
    for n in range(1, 7):
        booleans = list(generate(FamilyId.BOOLEAN, n))
        for b in booleans:
            d = bij.fundamental_from_boolean(b)
            assert bij.boolean_from_fundamental(d) == b
            nest = bij.boolean_to_nilp(b)
            assert bij.nilp_to_boolean(nest) == b
            assert bij.fundamental_from_nilp(nest) == d
            m = bij.magog_from_fundamental(d)
            assert bij.fundamental_from_magog(m) == d
            assert bij.magog_to_boolean(m) == b
        for p in generate(FamilyId.TSSCPP, n):
            d = bij.fundamental_from_boolean(bij.tsscpp_to_boolean(p))
            assert bij.boolean_to_tsscpp(bij.boolean_from_fundamental(d)) == p
        for a in generate(FamilyId.ASM, n):
            assert bij.monotone_to_asm(bij.asm_to_monotone(a)) == a
    for n in range(1, 8):
        for p in generate(FamilyId.PERMUTATION, n):
            b = bij.permutation_to_boolean(p)
            assert bij.boolean_to_permutation(b) == p
            matrix = bij.permutation_matrix(p)
            assert bij.asm_to_permutation(matrix) == p
            assert bij.monotone_to_permutation(bij.permutation_to_monotone(p)) == p
            assert bij.bracket_vector_to_boolean(bij.bracket_vector(b)) == b
    print("ACCEPTANCE 9 PASS: all bijection pairs round-trip (n <= 6 TSSCPP side, n <= 7 permutations)")


def test_verify_all_cli_gate(capsys):
    """The CLI suite runner agrees with the library-level checks."""
    assert main(["verify-all", "--n", "4"]) == 0
    out = capsys.readouterr().out
    assert "FAIL" not in out
    print("ACCEPTANCE CLI PASS: verify-all --n 4 exits 0")
