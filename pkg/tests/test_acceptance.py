"""Acceptance gate: ten end-to-end checks, one verdict line each.

Every expected value is produced by the brute-force oracle inside the
test or is an independently cross-checked constant; comparisons are
exact (the chi-square bound is the only statistical threshold).
"""

import random
from fractions import Fraction
from itertools import product

from scipy.stats import chi2

from motzkin.algebra import (
    K_C,
    K_ONE,
    K_X,
    KElem,
    k_of,
    minimal_polynomial,
    poly,
    ratx,
    series,
    y_series,
    yp,
    Y_ONE,
    YRat,
)
from motzkin.classes import EMPTY, full_class, matches
from motzkin.counting import SpecCounter
from motzkin.genfun import NonClosedForm, delta, gamma, solve_closed_form
from motzkin.paths import contains, enumerate_motzkin, oracle_count, oracle_minco
from motzkin.strategies import EPSILON, build_specification

STEPS = "UHD"


def _words(min_len, max_len):
    out = []
    for length in range(min_len, max_len + 1):
        out.extend("".join(t) for t in product(STEPS, repeat=length))
    return out


def _report(num, name, failures):
    verdict = "FAIL" if failures else "PASS"
    print(f"CRITERION {num:2d} ({name}): {verdict}")
    assert not failures, f"criterion {num} ({name}): {failures[:5]}"


def test_criterion_01_triple_agreement():
    failures = []
    for q in _words(1, 4):
        spec = build_specification(full_class(avoid=(q,)))
        seq = SpecCounter(spec).sequence(12)
        dser = series(delta(q), 12)
        for n in range(13):
            want = oracle_count(n, avoid=(q,))
            if not (seq[n] == want and dser[n] == want):
                failures.append((q, n, want, seq[n], dser[n]))
    _report(1, "triple agreement |q|<=4 n<=12", failures)


def _sign_content_normal(triple):
    # scale the triple so it is a primitive integer tuple whose first
    # nonzero coefficient is positive
    from math import gcd, lcm

    coeffs = [c for p in triple for c in p]
    lead = next((c for c in coeffs if c != 0), None)
    if lead is None:
        return triple
    den = 1
    for c in coeffs:
        den = lcm(den, Fraction(c).denominator)
    g = 0
    for c in coeffs:
        g = gcd(g, int(c * den))
    scale = Fraction(den, g) * (1 if lead > 0 else -1)
    return tuple(poly([c * scale for c in p]) for p in triple)


def test_criterion_02_minpoly_of_avoid_hh():
    got = _sign_content_normal(minimal_polynomial(delta("HH")))
    want = _sign_content_normal(
        (poly([0, 0, -1, 0, 4]), poly([1, -1, -4, 4]), poly([-1, 0, 5])))
    failures = [] if got == want else [(got, want)]
    _report(2, "Av(HH) minimal polynomial", failures)


def test_criterion_03_avoid_uhhd_closed_form():
    # closed form (N1 + N2*sqrt(1-4x^2)) / den, radical mapped to 1 - 2x^2 C
    n1 = k_of(ratx([1, -3, -4, 12]))
    n2 = k_of(ratx([-1, 3, 4, -8]))
    den = k_of(ratx([0, 0, 2, -4, -6, 16, -8]))
    sqrt_term = K_ONE - KElem(ratx([0, 0, 2]), ratx(0)) * K_C
    closed = (n1 + n2 * sqrt_term) / den
    failures = []
    if series(closed, 12) != [oracle_count(n, avoid=("UHHD",))
                              for n in range(13)]:
        failures.append("closed-form constant disagrees with oracle")
    if not (delta("UHHD") - closed).is_zero():
        failures.append("delta(UHHD) != closed form")
    spec = build_specification(full_class(avoid=("UHHD",)))
    solved = solve_closed_form(spec)
    if isinstance(solved, NonClosedForm):
        failures.append("solver returned no closed form")
    elif not (solved[spec.root] - closed).is_zero():
        failures.append("solver result != closed form")
    _report(3, "Av(UHHD) closed form, recursion and solver", failures)


def test_criterion_04_gamma_uh_identity():
    dp = Y_ONE / YRat.make(yp([K_ONE - KElem(ratx([0, 0, 1]), ratx(0)) * K_C,
                               -K_X]))
    prefactor = YRat.make(yp([k_of(ratx([0, 1], [1, -1]))]))
    diff = gamma("UH") - prefactor * (dp - Y_ONE)
    failures = [] if diff.is_zero() else ["gamma(UH) identity violated"]
    _report(4, "gamma(UH) bivariate identity", failures)


def test_criterion_05_dyck_specialization():
    failures = []
    if not (delta("H") - K_C).is_zero():
        failures.append("delta(H) != C")
    want = [1, 0, 1, 0, 2, 0, 5, 0, 14, 0, 42, 0, 132]
    got = series(delta("H"), 12)
    if got != want:
        failures.append((got, want))
    _report(5, "Dyck specialization delta(H) = C", failures)


def test_criterion_06_motzkin_baseline():
    rec = [1, 1]
    for n in range(2, 16):
        rec.append(rec[n - 1]
                   + sum(rec[i] * rec[n - 2 - i] for i in range(n - 1)))
    failures = []
    if rec[:13] != [1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511]:
        failures.append("recurrence seed mismatch")
    spec = build_specification(full_class())
    got = SpecCounter(spec).sequence(15)
    if got != rec:
        failures.append((got, rec))
    _report(6, "unconstrained counts match recurrence", failures)


def _member_set(cache, spec, cid, n):
    key = (cid, n)
    if key in cache:
        return cache[key]
    obj = spec.descriptors[cid]
    if obj is EPSILON:
        out = {""} if n == 0 else set()
    elif obj is EMPTY:
        out = set()
    else:
        out = {w for w in enumerate_motzkin(n) if matches(obj, w)}
    cache[key] = out
    return out


def _check_rules(spec, cache, failures, n_max):
    for cid, rule in spec.rules.items():
        for n in range(n_max + 1):
            have = _member_set(cache, spec, cid, n)
            if rule.kind == "epsilon":
                want = {""} if n == 0 else set()
            elif rule.kind == "empty":
                want = set()
            elif rule.kind == "union":
                parts = [_member_set(cache, spec, c, n)
                         for c in rule.children]
                want = set().union(*parts) if parts else set()
                if sum(len(p) for p in parts) != len(want):
                    failures.append((cid, n, "union overlap"))
            elif rule.atom == "H":
                inner = (_member_set(cache, spec, rule.children[0], n - 1)
                         if n >= 1 else set())
                want = {"H" + w for w in inner}
            else:
                a, b = rule.children
                want = set()
                for i in range(max(0, n - 1)):
                    for x in _member_set(cache, spec, a, i):
                        for y in _member_set(cache, spec, b, n - 2 - i):
                            want.add("U" + x + "D" + y)
            if have != want:
                failures.append((cid, n, "rule does not reproduce class"))


def test_criterion_07_rule_soundness():
    failures = []
    cache = {}
    roots = [full_class(avoid=(q,)) for q in _words(0, 3)]
    roots.append(full_class(avoid=("HH", "UD")))
    for root in roots:
        spec = build_specification(root)
        _check_rules(spec, cache, failures, 8)
    _report(7, "every rule sound, unions disjoint, n<=8", failures)


def test_criterion_08_generation_and_sampling():
    failures = []
    for q in _words(0, 3):
        spec = build_specification(full_class(avoid=(q,)))
        counter = SpecCounter(spec)
        for n in range(11):
            got = set(counter.generate_all(n))
            want = {w for w in enumerate_motzkin(n) if not contains(w, q)}
            if got != want:
                failures.append((q, n, "generate_all mismatch"))
    spec = build_specification(full_class(avoid=("HH",)))
    counter = SpecCounter(spec)
    cells = sorted(counter.generate_all(8))
    if len(cells) != 14:
        failures.append(("cell count", len(cells)))
    draws = 10000
    rng = random.Random(20260819)
    observed = {w: 0 for w in cells}
    for _ in range(draws):
        w = counter.sample(8, rng=rng)
        if w not in observed:
            failures.append(("non-member draw", w))
            break
        observed[w] += 1
    expected = draws / len(cells)
    stat = sum((c - expected) ** 2 / expected for c in observed.values())
    bound = chi2.ppf(1 - 0.001, len(cells) - 1)
    if not stat < bound:
        failures.append(("chi-square", stat, bound))
    _report(8, "generation matches filtration; sampler uniform", failures)


def test_criterion_09_gamma_oracle_suite():
    failures = []
    for q in _words(0, 3):
        coefs = y_series(gamma(q), 10)
        per_h = [series(c, 10) for c in coefs]
        for h in range(11):
            for n in range(11):
                want = oracle_minco(q, n, h)
                if per_h[h][n] != want:
                    failures.append((q, n, h, per_h[h][n], want))
    _report(9, "gamma coefficients match positional oracle", failures)


def test_criterion_10_algebra_identities():
    failures = []
    rng = random.Random(77)
    for _ in range(50):
        u = KElem(
            ratx([rng.randint(-3, 3) for _ in range(4)],
                 [1] + [rng.randint(-2, 2) for _ in range(3)]),
            ratx([rng.randint(-3, 3) for _ in range(4)],
                 [1] + [rng.randint(-2, 2) for _ in range(3)]))
        v = KElem(
            ratx([rng.randint(-3, 3) for _ in range(3)],
                 [1, rng.randint(-2, 2)]),
            ratx([rng.randint(-3, 3) for _ in range(3)],
                 [1, rng.randint(-2, 2)]))
        if not u.is_zero():
            if not (u * u.inverse() - K_ONE).is_zero():
                failures.append(("inverse round trip", u))
        if not ((u * v) - (v * u)).is_zero():
            failures.append(("commutativity", u, v))
        c2, c1, c0 = minimal_polynomial(u)
        wrap = lambda p: KElem(ratx(list(p)), ratx(0))
        if not (wrap(c2) * u * u + wrap(c1) * u + wrap(c0)).is_zero():
            failures.append(("annihilation", u))
    from motzkin.algebra import catalan_coefficients
    cs = catalan_coefficients(20)
    for n in range(21):
        conv = sum(cs[i] * cs[n - 2 - i] for i in range(max(0, n - 1)))
        if cs[n] != (1 if n == 0 else 0) + conv:
            failures.append(("catalan self-consistency", n))
    _report(10, "field and series identities", failures)
