"""Bounded decision procedures for the divisibility hierarchy.

Every classifier scans an explicit finite range and returns a report whose
verdict is honest about that range: a pass says "holds_to_bound", never
more. A failing report carries a witness that can be rechecked by
evaluating the defining condition at the named indices. Witnesses are the
lexicographically first violation in scan order (outer index ascending,
then inner index), so they are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .core import col_seq, fbinom, fbinom_values, pyramid, triangle
from .errors import InternalCheckError, NonIntegralEntryError
from .numtheory import divisors, mobius, prime_power_base, primes_up_to
from .sequences import Sequence, from_list

HOLDS = "holds_to_bound"
FAILS = "fails"

__all__ = [
    "FAILS",
    "HOLDS",
    "ClassificationReport",
    "DivisorProductProfile",
    "PerPrimeDecomposition",
    "ProfileCriterion",
    "additive_binomid_check",
    "divisor_product_profile",
    "is_binomid",
    "is_binomid_at_level",
    "is_binomid_every_level",
    "is_divisible",
    "is_divisor_chain",
    "is_divisor_product",
    "is_dual_gcd",
    "is_gcd_sequence",
    "is_homomorphic",
    "is_multiplicative",
    "mobius_invert",
    "per_prime_decomposition",
]


@dataclass(frozen=True)
class ClassificationReport:
    property: str
    bound: int
    verdict: str
    witness: dict | None = None
    effective_bound: int | None = None  # set when the scan had to shrink
    note: str | None = None

    def holds(self) -> bool:
        return self.verdict == HOLDS

    def scanned_bound(self) -> int:
        return self.bound if self.effective_bound is None else self.effective_bound


def _capped(f: Sequence, bound: int) -> tuple[int, int | None, str | None]:
    if bound < 1:
        raise ValueError("bound must be positive")
    if f.length is not None and f.length < bound:
        return f.length, f.length, f"finite sequence: bound reduced to {f.length}"
    return bound, None, None


def is_binomid(f: Sequence, bound: int) -> ClassificationReport:
    """Is every [n k] over f an integer, for n up to the bound?

    The primary algorithm is the window-divisibility criterion: the product
    of the first k terms must divide every product of k consecutive terms.
    It is cross-checked against triangle integrality; the two must agree.
    """
    eff, reduced, note = _capped(f, bound)
    fact = [1]
    for i in range(1, eff + 1):
        fact.append(fact[-1] * f.term(i))
    witness = None
    for n in range(2, eff + 1):
        for k in range(1, n):
            window = fact[n] // fact[n - k]
            if window % fact[k]:
                witness = {"m": n - k, "k": k, "n": n,
                           "value": Fraction(window, fact[k])}
                break
        if witness:
            break
    bad = triangle(f, eff).first_non_integral()
    agree = (witness is None and bad is None) or (
        witness is not None and bad is not None
        and (bad[0], bad[1]) == (witness["n"], witness["k"]))
    if not agree:
        raise InternalCheckError("window criterion and triangle integrality disagree")
    verdict = HOLDS if witness is None else FAILS
    return ClassificationReport("binomid", bound, verdict, witness, reduced, note)


def is_binomid_at_level(f: Sequence, c: int, bound: int) -> ClassificationReport:
    """Is column c of the triangle of f itself a binomid sequence?

    A non-integral column entry refutes the level vacuously and becomes
    the witness.
    """
    if c < 0:
        raise ValueError("level must be nonnegative")
    prop = f"binomid_at_level({c})"
    column = col_seq(f, c)
    try:
        rep = is_binomid(column, bound)
    except NonIntegralEntryError as exc:
        witness = {"level": c, "n": exc.n, "k": exc.k, "value": exc.value}
        return ClassificationReport(prop, bound, FAILS, witness,
                                    note="column entry is not an integer")
    witness = None if rep.witness is None else {"level": c, **rep.witness}
    return ClassificationReport(prop, bound, rep.verdict, witness,
                                rep.effective_bound, rep.note)


def is_binomid_every_level(f: Sequence, depth: int, bound: int) -> ClassificationReport:
    """All pyramid entries integral and every column binomid to the bound.

    The row-based check (pyramid slices) and the column-based check must
    agree where they overlap; a value mismatch there is an internal error.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    prop = "binomid_every_level"
    eff_depth = depth
    note = None
    if f.length is not None and f.length < depth:
        eff_depth = f.length
        note = f"finite sequence: depth reduced to {eff_depth}"
    try:
        pyr = pyramid(f, eff_depth)
    except NonIntegralEntryError as exc:
        witness = {"n": exc.n, "k": exc.k, "value": exc.value}
        return ClassificationReport(prop, bound, FAILS, witness, note=(
            "base triangle row is not integral" if note is None
            else note + "; base triangle row is not integral"))
    bad = pyr.first_non_integral()
    if bad is not None:
        m, n, k, value = bad
        witness = {"slice": m, "n": n, "k": k, "value": value}
        return ClassificationReport(prop, bound, FAILS, witness, note=note)
    _check_slices_match_columns(f, pyr)
    for c in range(eff_depth + 1):
        rep = is_binomid_at_level(f, c, bound)
        if not rep.holds():
            return ClassificationReport(prop, bound, FAILS, rep.witness,
                                        rep.effective_bound, rep.note)
    return ClassificationReport(prop, bound, HOLDS, None, None, note)


def _check_slices_match_columns(f: Sequence, pyr) -> None:
    # slice n+m-1 carries the [n k] entries of column m; the two routes are
    # required to agree, so any mismatch is an arithmetic bug
    for m in range(1, pyr.depth + 1):
        colvals = [fbinom(f, N + m - 1, m) for N in range(1, pyr.depth - m + 2)]
        for s in range(m, pyr.depth + 1):
            n = s - m + 1
            for k in range(n + 1):
                expected = fbinom_values(colvals, n, k)
                got = pyr.slice(s).entry(n, k)
                if expected != got:
                    raise InternalCheckError(
                        f"slice {s} entry [{n} {k}] disagrees with column {m}")


def mobius_invert(f: Sequence, count: int) -> list[Fraction]:
    """The unique g with f = divisor-product of g, as exact rationals.

    g(n) is the product of f(d)**mu(n/d) over divisors d of n. The exact
    round trip back to f is verified before returning.
    """
    if count < 1:
        raise ValueError("count must be positive")
    values = [f.term(n) for n in range(1, count + 1)]
    inverted = []
    for n in range(1, count + 1):
        num = 1
        den = 1
        for d in divisors(n):
            mu = mobius(n // d)
            if mu == 1:
                num *= values[d - 1]
            elif mu == -1:
                den *= values[d - 1]
        inverted.append(Fraction(num, den))
    for n in range(1, count + 1):
        total = Fraction(1)
        for d in divisors(n):
            total *= inverted[d - 1]
        if total != values[n - 1]:
            raise InternalCheckError(f"inversion round trip failed at index {n}")
    return inverted


def is_divisor_product(f: Sequence, bound: int) -> ClassificationReport:
    """Does f factor through an integer sequence on its divisor lattice?"""
    eff, reduced, note = _capped(f, bound)
    inverted = mobius_invert(f, eff)
    witness = None
    for n, value in enumerate(inverted, start=1):
        if value.denominator != 1:
            witness = {"n": n, "value": value}
            break
    verdict = HOLDS if witness is None else FAILS
    return ClassificationReport("divisor_product", bound, verdict, witness,
                                reduced, note)


def is_divisor_chain(f: Sequence, bound: int) -> ClassificationReport:
    """Does every term divide its successor?"""
    eff, reduced, note = _capped(f, bound)
    witness = None
    for n in range(1, eff):
        if f.term(n + 1) % f.term(n):
            witness = {"n": n, "f_n": f.term(n), "f_next": f.term(n + 1)}
            break
    verdict = HOLDS if witness is None else FAILS
    return ClassificationReport("divisor_chain", bound, verdict, witness,
                                reduced, note)


def is_divisible(f: Sequence, bound: int) -> ClassificationReport:
    """k | n implies f(k) | f(n), over all pairs within the bound."""
    eff, reduced, note = _capped(f, bound)
    witness = None
    for n in range(2, eff + 1):
        for k in divisors(n)[:-1]:
            if f.term(n) % f.term(k):
                witness = {"k": k, "n": n, "f_k": f.term(k), "f_n": f.term(n)}
                break
        if witness:
            break
    verdict = HOLDS if witness is None else FAILS
    return ClassificationReport("divisible", bound, verdict, witness, reduced, note)


def is_gcd_sequence(f: Sequence, bound: int) -> ClassificationReport:
    """gcd(f(m), f(n)) = |f(gcd(m, n))| for all pairs within the bound.

    Term gcds use absolute values, since terms may be negative.
    """
    eff, reduced, note = _capped(f, bound)
    witness = None
    for m in range(1, eff + 1):
        for n in range(m + 1, eff + 1):
            got = gcd(abs(f.term(m)), abs(f.term(n)))
            expected = abs(f.term(gcd(m, n)))
            if got != expected:
                witness = {"m": m, "n": n, "gcd": got, "expected": expected}
                break
        if witness:
            break
    verdict = HOLDS if witness is None else FAILS
    return ClassificationReport("gcd_sequence", bound, verdict, witness,
                                reduced, note)


def is_dual_gcd(f: Sequence, bound: int) -> ClassificationReport:
    """gcd(f(m), f(n)) divides f(m+n), for all pairs with m+n within bound."""
    eff, reduced, note = _capped(f, bound)
    witness = None
    for m in range(1, eff // 2 + 1):
        for n in range(m, eff - m + 1):
            g = gcd(abs(f.term(m)), abs(f.term(n)))
            if f.term(m + n) % g:
                witness = {"m": m, "n": n, "gcd": g, "f_sum": f.term(m + n)}
                break
        if witness:
            break
    verdict = HOLDS if witness is None else FAILS
    return ClassificationReport("dual_gcd", bound, verdict, witness, reduced, note)


def is_multiplicative(f: Sequence, bound: int) -> ClassificationReport:
    """f(ab) = f(a) f(b) on coprime pairs with product within the bound."""
    eff, reduced, note = _capped(f, bound)
    witness = _product_rule_witness(f, eff, coprime_only=True)
    verdict = HOLDS if witness is None else FAILS
    return ClassificationReport("multiplicative", bound, verdict, witness,
                                reduced, note)


def is_homomorphic(f: Sequence, bound: int) -> ClassificationReport:
    """f(ab) = f(a) f(b) on all pairs with product within the bound."""
    eff, reduced, note = _capped(f, bound)
    witness = _product_rule_witness(f, eff, coprime_only=False)
    verdict = HOLDS if witness is None else FAILS
    return ClassificationReport("homomorphic", bound, verdict, witness,
                                reduced, note)


def _product_rule_witness(f: Sequence, eff: int, coprime_only: bool) -> dict | None:
    for a in range(1, eff + 1):
        b = a
        while a * b <= eff:
            if not coprime_only or gcd(a, b) == 1:
                lhs = f.term(a) * f.term(b)
                rhs = f.term(a * b)
                if lhs != rhs:
                    return {"a": a, "b": b, "product_of_terms": lhs,
                            "term_of_product": rhs}
            b += 1
    return None


def additive_binomid_check(c: int, exponents, bound: int) -> ClassificationReport:
    """Superadditivity of partial sums of an exponent list.

    For any base c > 1, the sequence (c ** exponents[n]) is binomid exactly
    when s(m) + s(n) <= s(m+n) for the partial sums s. Exponents may be
    zero or negative; they are a plain list, not a Sequence.
    """
    if c <= 1:
        raise ValueError("base must be an integer greater than 1")
    if bound < 1:
        raise ValueError("bound must be positive")
    exponents = list(exponents)
    if len(exponents) < bound:
        raise ValueError(f"need {bound} exponents, have {len(exponents)}")
    sums = [0]
    for e in exponents[:bound]:
        sums.append(sums[-1] + e)
    witness = None
    for total in range(2, bound + 1):
        for m in range(1, total // 2 + 1):
            n = total - m
            if sums[m] + sums[n] > sums[total]:
                witness = {"m": m, "n": n, "lhs": sums[m] + sums[n],
                           "rhs": sums[total]}
                break
        if witness:
            break
    verdict = HOLDS if witness is None else FAILS
    return ClassificationReport("binomid_additive", bound, verdict, witness,
                                note=f"additive criterion, base {c}")


@dataclass(frozen=True)
class PerPrimeDecomposition:
    bound: int
    effective_bound: int
    prime_bound: int
    reports: tuple  # (prime, ClassificationReport) pairs
    undecided: tuple  # (index, cofactor) pairs with factors beyond prime_bound
    combined_verdict: str
    agrees_with_direct: bool | None  # None when factorization was incomplete


def per_prime_decomposition(f: Sequence, bound: int, prime_bound: int) -> PerPrimeDecomposition:
    """Binomid reports for each prime-power shadow (p ** v_p(f(n))).

    Terms with factors beyond prime_bound are reported as undecided rather
    than guessed at. When every term factors completely, the conjunction of
    the per-prime verdicts must match the direct binomid check.
    """
    if prime_bound < 2:
        raise ValueError("prime bound must be at least 2")
    eff, _, _ = _capped(f, bound)
    primes = primes_up_to(prime_bound)
    exps = {p: [0] * eff for p in primes}
    undecided = []
    for idx in range(1, eff + 1):
        v = abs(f.term(idx))
        for p in primes:
            while v % p == 0:
                v //= p
                exps[p][idx - 1] += 1
        if v > 1:
            undecided.append((idx, v))
    reports = []
    for p in primes:
        if any(exps[p]):
            shadow = from_list([p ** e for e in exps[p]], name=f"ppow:{p}({f.name})")
            reports.append((p, is_binomid(shadow, eff)))
    combined = HOLDS if all(rep.holds() for _, rep in reports) else FAILS
    agrees = None
    if not undecided:
        agrees = combined == is_binomid(f, eff).verdict
        if not agrees:
            raise InternalCheckError("per-prime conjunction disagrees with direct check")
    return PerPrimeDecomposition(bound, eff, prime_bound, tuple(reports),
                                 tuple(undecided), combined, agrees)


@dataclass(frozen=True)
class ProfileCriterion:
    name: str
    verdict: str
    witness: dict | None
    direct_verdict: str
    agrees: bool


@dataclass(frozen=True)
class DivisorProductProfile:
    bound: int
    precondition_ok: bool
    precondition_witness: dict | None = None
    multiplicative: ProfileCriterion | None = None
    homomorphic: ProfileCriterion | None = None
    gcd: ProfileCriterion | None = None


def divisor_product_profile(f: Sequence, bound: int) -> DivisorProductProfile:
    """Read multiplicativity, homomorphy, and the gcd property off the
    inverted sequence g, and confirm each against the direct classifier.

    Requires f(1) = 1 and f a divisor-product to the bound; a failed
    precondition is reported, not raised.
    """
    eff, _, _ = _capped(f, bound)
    if f.term(1) != 1:
        return DivisorProductProfile(eff, False,
                                     {"reason": "first term is not 1",
                                      "value": f.term(1)})
    dp = is_divisor_product(f, eff)
    if not dp.holds():
        return DivisorProductProfile(eff, False,
                                     {"reason": "not a divisor-product",
                                      **(dp.witness or {})})
    g = [q.numerator for q in mobius_invert(f, eff)]

    mult_witness = None
    for n in range(2, eff + 1):
        if prime_power_base(n) is None and g[n - 1] != 1:
            mult_witness = {"n": n, "g": g[n - 1]}
            break

    homo_witness = None
    for n in range(2, eff + 1):
        p = prime_power_base(n)
        if p is None:
            if g[n - 1] != 1:
                homo_witness = {"n": n, "g": g[n - 1]}
                break
        elif n != p and g[n - 1] != g[p - 1]:
            homo_witness = {"n": n, "g": g[n - 1], "g_p": g[p - 1]}
            break

    gcd_witness = None
    for m in range(2, eff + 1):
        for n in range(m + 1, eff + 1):
            if n % m and gcd(abs(g[m - 1]), abs(g[n - 1])) != 1:
                gcd_witness = {"m": m, "n": n,
                               "gcd": gcd(abs(g[m - 1]), abs(g[n - 1]))}
                break
        if gcd_witness:
            break

    criteria = []
    for name, witness, direct in (
            ("multiplicative", mult_witness, is_multiplicative(f, eff)),
            ("homomorphic", homo_witness, is_homomorphic(f, eff)),
            ("gcd_sequence", gcd_witness, is_gcd_sequence(f, eff))):
        verdict = HOLDS if witness is None else FAILS
        if verdict != direct.verdict:
            raise InternalCheckError(
                f"profile criterion {name} disagrees with the direct classifier")
        criteria.append(ProfileCriterion(name, verdict, witness,
                                         direct.verdict, True))
    return DivisorProductProfile(eff, True, None, *criteria)
