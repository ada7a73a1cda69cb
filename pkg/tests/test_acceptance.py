"""Acceptance suite: one test per criterion, each printing a pass line.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines.
"""

import ast
import io
import random
import time
import tokenize
from fractions import Fraction
from pathlib import Path

import pytest

import binomid
from binomid import (Sequence, additive_binomid_check,
                     check_delta_pattern, check_determinant_identity,
                     check_hm_identity, check_slice_identity,
                     check_window_minimality, compose_power, const_seq,
                     cyclotomic_eval, divisor_product_of, divisors,
                     factorial_seq, fibonacci, from_list, g_ab,
                     generic_pyramid_entry, h_m, identity_seq, is_binomid,
                     is_binomid_every_level, is_divisible, is_divisor_product,
                     is_dual_gcd, is_gcd_sequence, lucas, mobius_invert,
                     power_seq, pyramid, scalar, triangular_seq)
from binomid.cli import main as cli_main


def _passed(number, name):
    print(f"ACCEPTANCE {number} ({name}): PASS")


def _run_cli_csv(capsys, spec, rows):
    code = cli_main(["triangle", spec, "--rows", str(rows), "--format", "csv"])
    out = capsys.readouterr().out
    assert code == 0
    return [[int(cell) for cell in line.split(",")]
            for line in out.strip().splitlines()]


GOLDEN_TABLES = {
    ("I", 8): [
        [1], [1, 1], [1, 2, 1], [1, 3, 3, 1], [1, 4, 6, 4, 1],
        [1, 5, 10, 10, 5, 1], [1, 6, 15, 20, 15, 6, 1],
        [1, 7, 21, 35, 35, 21, 7, 1], [1, 8, 28, 56, 70, 56, 28, 8, 1]],
    ("T", 7): [
        [1], [1, 1], [1, 3, 1], [1, 6, 6, 1], [1, 10, 20, 10, 1],
        [1, 15, 50, 50, 15, 1], [1, 21, 105, 175, 105, 21, 1],
        [1, 28, 196, 490, 490, 196, 28, 1]],
    ("pcol:3", 7): [
        [1], [1, 1], [1, 4, 1], [1, 10, 10, 1], [1, 20, 50, 20, 1],
        [1, 35, 175, 175, 35, 1], [1, 56, 490, 980, 490, 56, 1],
        [1, 84, 1176, 4116, 4116, 1176, 84, 1]],
    ("prow:2", 3): [[1], [1, 1], [1, 2, 1], [1, 1, 1, 1]],
    ("prow:3", 4): [[1], [1, 1], [1, 3, 1], [1, 3, 3, 1], [1, 1, 1, 1, 1]],
    ("prow:4", 5): [
        [1], [1, 1], [1, 4, 1], [1, 6, 6, 1], [1, 4, 6, 4, 1],
        [1, 1, 1, 1, 1, 1]],
    ("prow:5", 6): [
        [1], [1, 1], [1, 5, 1], [1, 10, 10, 1], [1, 10, 20, 10, 1],
        [1, 5, 10, 10, 5, 1], [1, 1, 1, 1, 1, 1, 1]],
    ("prow:6", 7): [
        [1], [1, 1], [1, 6, 1], [1, 15, 15, 1], [1, 20, 50, 20, 1],
        [1, 15, 50, 50, 15, 1], [1, 6, 15, 20, 15, 6, 1],
        [1, 1, 1, 1, 1, 1, 1, 1]],
    ("prow:7", 8): [
        [1], [1, 1], [1, 7, 1], [1, 21, 21, 1], [1, 35, 105, 35, 1],
        [1, 35, 175, 175, 35, 1], [1, 21, 105, 175, 105, 21, 1],
        [1, 7, 21, 35, 35, 21, 7, 1], [1, 1, 1, 1, 1, 1, 1, 1, 1]],
    ("gq:2", 6): [
        [1], [1, 1], [1, 3, 1], [1, 7, 7, 1], [1, 15, 35, 15, 1],
        [1, 31, 155, 155, 31, 1], [1, 63, 651, 1395, 651, 63, 1]],
}


def test_criterion_1_golden_tables(capsys):
    start = time.perf_counter()
    for (spec, rows), expected in GOLDEN_TABLES.items():
        assert _run_cli_csv(capsys, spec, rows) == expected, spec
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0, f"golden tables took {elapsed:.2f}s"
    _passed(1, "golden tables")


def test_criterion_2_mobius_inversion():
    assert mobius_invert(g_ab(2, 1), 10) == [1, 3, 7, 5, 31, 3, 127, 17, 73, 11]
    assert mobius_invert(fibonacci(), 12) == [1, 1, 2, 3, 5, 4, 13, 7, 17, 11,
                                              89, 6]
    _passed(2, "Mobius inversion")


def test_criterion_3_counterexample_battery(two_pow_a, h_divisible,
                                            w_ones_then_twos):
    rep = is_binomid(two_pow_a, 8)
    assert rep.verdict == "fails"
    assert (rep.witness["n"], rep.witness["k"]) == (6, 3)
    assert rep.witness["value"] == Fraction(1, 2)

    rep = binomid.is_binomid_at_level(triangular_seq(), 2, 6)
    assert rep.verdict == "fails"
    assert (rep.witness["n"], rep.witness["k"]) == (4, 2)
    assert rep.witness["value"] == Fraction(500, 3)

    assert is_divisible(h_divisible, 10).holds()
    rep = is_binomid(h_divisible, 10)
    assert rep.verdict == "fails"
    assert (rep.witness["m"], rep.witness["k"]) == (4, 3)

    assert binomid.is_divisor_chain(w_ones_then_twos, 10).holds()
    inverted = mobius_invert(w_ones_then_twos, 6)
    assert inverted[5] == Fraction(1, 2)

    assert is_dual_gcd(w_ones_then_twos, 20).holds()
    rep = is_divisor_product(w_ones_then_twos, 6)
    assert rep.verdict == "fails"
    assert rep.witness["n"] == 6
    _passed(3, "counterexample battery")


def test_criterion_4_generic_pyramid_integrality():
    start = time.perf_counter()
    rng = random.Random(20260809)
    values = [v for v in range(-9, 10) if v]
    for _ in range(100):
        g = [rng.choice(values) for _ in range(24)]
        g[0] = 1  # the pyramid constructor requires a unit first term
        f = divisor_product_of(from_list(g))
        assert pyramid(f, 12).first_non_integral() is None
    for m in range(9):
        for n in range(1, 13):
            for k in range(n + 1):
                assert generic_pyramid_entry(m, n, k).is_polynomial()
    elapsed = time.perf_counter() - start
    assert elapsed < 30.0, f"pyramid suite took {elapsed:.2f}s"
    _passed(4, "generic pyramid integrality")


def test_criterion_5_identity_suite():
    rng = random.Random(551)
    g = [rng.choice([v for v in range(-9, 10) if v]) for _ in range(16)]
    g[0] = 1
    random_binomid = divisor_product_of(from_list(g))
    for f in (identity_seq(), fibonacci(), g_ab(2, 1), random_binomid):
        result = check_slice_identity(f, 8, 6, 8)
        assert result.ok, (f.name, result)

    for m in range(1, 5):
        for n in range(m, 9):
            for k in range(1, 5):
                assert check_determinant_identity(n, m, k).ok, (n, m, k)

    for n in range(1, 61):
        for a in range(-5, 6):
            for b in range(-5, 6):
                total = 1
                for d in divisors(n):
                    total *= cyclotomic_eval(d, a, b)
                assert total == a ** n - b ** n, (n, a, b)

    for m in range(1, 5):
        for n in range(9):
            for k in range(n + 1):
                assert check_hm_identity(m, n, k).ok, (m, n, k)

    for r in range(1, 13):
        for m in range(r):
            assert check_delta_pattern(m, r, 4 * r).ok, (m, r)
            assert check_window_minimality(m, r, 2 * r + 6, 2 * r + 6).ok, (m, r)
    _passed(5, "identity suite")


def test_criterion_6_implication_chain(phi_seq):
    # (c^n) has first term c, so its level checks run on the scalar-equivalent
    # twin (1, c, c^2, ...) = g_ab(c, 0); triangles are scalar-invariant
    family = [
        (fibonacci(), None),
        (lucas(3, 2), None),
        (lucas(2, 1), None),
        (lucas(4, 1), None),
        (phi_seq, None),
        (identity_seq(), None),
        (factorial_seq(), None),
        (power_seq(2), g_ab(2, 0)),
        (power_seq(3), g_ab(3, 0)),
    ]
    bound = 20
    for f, level_twin in family:
        if level_twin is not None:
            c = f.term(1)
            assert scalar(c, level_twin).prefix(bound) == f.prefix(bound)
        gcd_v = is_gcd_sequence(f, bound).holds()
        dual_v = is_dual_gcd(f, bound).holds()
        binomid_v = is_binomid(f, bound).holds()
        dp_v = is_divisor_product(f, bound).holds()
        div_v = is_divisible(f, bound).holds()
        every_v = is_binomid_every_level(
            f if level_twin is None else level_twin, 8, bound).holds()
        if gcd_v:
            assert dual_v, f.name
            assert dp_v, f.name
        if dual_v:
            assert binomid_v, f.name
        if dp_v:
            assert div_v, f.name
            assert every_v, f.name
    _passed(6, "implication chain")


def test_criterion_7_additive_cross_check():
    rng = random.Random(777)
    for _ in range(50):
        b = [rng.randint(0, 3) for _ in range(12)]
        seq = Sequence("2^b", lambda n, b=b: 2 ** b[n - 1], length=12)
        additive = additive_binomid_check(2, b, 12)
        direct = is_binomid(seq, 12)
        assert additive.verdict == direct.verdict, b
    _passed(7, "additive cross-check")


def test_criterion_8_degree_two_polynomials():
    polynomials = [const_seq(1), identity_seq(), triangular_seq(),
                   compose_power(2, identity_seq()), h_m(2)]
    for seq in polynomials:
        assert is_binomid(seq, 25).holds(), seq.name
    _passed(8, "degree-two polynomial suite")


ARITHMETIC_MODULES = ("numtheory.py", "sequences.py", "core.py",
                      "classify.py", "verify.py")
ALLOWED_MATH_NAMES = {"comb", "gcd", "isqrt", "lcm", "prod", "factorial"}
ALLOWED_MODULES = {"fractions", "threading", "dataclasses", "typing",
                   "__future__"}


def test_criterion_9_exactness_audit():
    package_dir = Path(binomid.__file__).parent
    for module in ARITHMETIC_MODULES:
        source = (package_dir / module).read_text()
        for tok in tokenize.generate_tokens(io.StringIO(source).readline):
            if tok.type == tokenize.NUMBER:
                try:
                    int(tok.string, 0)
                except ValueError:
                    pytest.fail(f"{module}: non-integer literal {tok.string!r}")
            elif tok.type == tokenize.OP and tok.string in ("/", "/="):
                pytest.fail(f"{module}: true division at line {tok.start[0]}")
            elif tok.type == tokenize.NAME and tok.string in ("float", "complex"):
                pytest.fail(f"{module}: uses {tok.string} at line {tok.start[0]}")
        tree = ast.parse(source)
        for node in ast.walk(tree):
            if isinstance(node, ast.Import):
                for alias in node.names:
                    assert alias.name in ALLOWED_MODULES, (
                        f"{module}: import {alias.name}")
            elif isinstance(node, ast.ImportFrom):
                if node.level > 0:
                    continue  # intra-package
                if node.module == "math":
                    for alias in node.names:
                        assert alias.name in ALLOWED_MATH_NAMES, (
                            f"{module}: from math import {alias.name}")
                else:
                    assert node.module in ALLOWED_MODULES, (
                        f"{module}: from {node.module} import ...")
    _passed(9, "exact-arithmetic audit")
