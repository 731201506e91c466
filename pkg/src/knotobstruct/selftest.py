"""Embedded oracle suites, runnable from the CLI without pytest."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from .diagram import PretzelParams, parse_pd, pretzel_pd
from .kauffman import bracket_brute, bracket_twist, jones
from .laurent import LaurentPoly
from .obstruction import obstruction_value, pretzel_family
from .seifert import GenusOneSpine, m_forcing_check
from .twoloop import TangleInvariants, constraint_solutions, theta_difference_identity

TREFOIL_PD = "X(1,4,2,5); X(3,6,4,1); X(5,2,6,3)"
TREFOIL_JONES = LaurentPoly({4: -1, 3: 1, 1: 1})


def suite_trefoil(flip_smoothing: bool = False) -> bool:
    """Bracket/sign convention tripwire against the trefoil oracle."""
    pd = parse_pd(TREFOIL_PD)
    br = bracket_brute(pd, swap_smoothings=flip_smoothing)
    expected = LaurentPoly({5: -1, -3: -1, -7: 1})
    return br == expected and (flip_smoothing or jones(pd) == TREFOIL_JONES)


def suite_bracket(max_total: int = 9) -> bool:
    """Twist-region brackets agree with the brute-force state sum."""
    odd = [v for v in range(-max_total, max_total + 1) if v % 2]
    for p, q, r in product(odd, odd, odd):
        if abs(p) + abs(q) + abs(r) > max_total:
            continue
        params = PretzelParams(p, q, r)
        if bracket_twist(params) != bracket_brute(pretzel_pd(params)):
            return False
    return True


def suite_m_forcing(bound: int = 5) -> bool:
    return m_forcing_check(bound)


def suite_constraints(bound: int = 50) -> bool:
    return constraint_solutions(bound) == {(0, 0)}


def suite_sixteen_v3(trials: int = 200, seed: int = 0) -> bool:
    rng = random.Random(seed)
    for _ in range(trials):
        eps = rng.choice([1, -1])
        ell = rng.choice([0, -eps])
        s = GenusOneSpine(rng.randint(-20, 20), 0, ell, eps)
        ti = TangleInvariants(*(rng.randint(-20, 20) for _ in range(4)))
        if theta_difference_identity(s, ti) != 16 * ti.v3:
            return False
    return True


def suite_family(k_max: int = 8) -> bool:
    """Closed-form Ob and the k = 1, 2 (mod 4) verdict pattern; the k = 1
    member is cross-checked through the Jones route."""
    for k in range(1, k_max + 1):
        params, ob, predicted = pretzel_family(k)
        if predicted != (k % 4 in (1, 2)):
            return False
        if ob != Fraction(-16 * k * (k + 1) * (2 * k + 1), 12):
            return False
    _, ob1, _ = pretzel_family(1)
    _, _, ob_jones = obstruction_value(jones(pretzel_family(1)[0]))
    return ob_jones == ob1


SUITES = {
    "trefoil": suite_trefoil,
    "bracket": suite_bracket,
    "m-forcing": suite_m_forcing,
    "constraints": suite_constraints,
    "sixteen-v3": suite_sixteen_v3,
    "family": suite_family,
}


def run_selftest(
    suite: str | None = None, flip_smoothing: bool = False
) -> dict[str, bool]:
    """Run one or all suites; returns {name: passed}."""
    names = [suite] if suite else list(SUITES)
    results = {}
    for name in names:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
        if name == "trefoil":
            results[name] = suite_trefoil(flip_smoothing=flip_smoothing)
        else:
            results[name] = SUITES[name]()
    return results
