"""Acceptance gate: one test per release criterion.

Every check is exact (rational arithmetic, bit-exact comparisons) and each
test prints a single ``ACCEPT <n> pass/FAIL`` line with its runtime, so the
gate can be audited from the pytest output alone.  Runtime ceilings are part
of the criteria and are asserted.
"""

import random
import time
from fractions import Fraction

from knotobstruct.diagram import PretzelParams, mirror, parse_pd, pretzel_pd
from knotobstruct.kauffman import bracket_brute, bracket_twist, jones
from knotobstruct.laurent import LaurentPoly
from knotobstruct.obstruction import (
    cosmetic_verdict,
    obstruction_value,
    pretzel_family,
    w3,
)
from knotobstruct.seifert import (
    GenusOneSpine,
    SeifertMatrix,
    alexander_from_seifert,
    knot_determinant,
    m_forcing_check,
    pretzel_alexander_coeff,
    pretzel_seifert,
    signature,
)
from knotobstruct.twoloop import (
    TangleInvariants,
    constraint_solutions,
    constraint_solutions_rational,
    theta_difference_identity,
)

TREFOIL_PD = "X(1,4,2,5); X(3,6,4,1); X(5,2,6,3)"
FIG8_PD = "X(4,2,5,1); X(8,6,1,5); X(6,3,7,4); X(2,7,3,8)"


class _Gate:
    """Context manager: time a criterion, print its pass/FAIL line."""

    def __init__(self, number, label, limit_s):
        self.number = number
        self.label = label
        self.limit_s = limit_s

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.t0
        ok = exc_type is None and elapsed < self.limit_s
        print(
            f"ACCEPT {self.number:>2} {'pass' if ok else 'FAIL'}"
            f"  {self.label}  ({elapsed:.3f}s < {self.limit_s}s)"
        )
        if exc_type is None and elapsed >= self.limit_s:
            raise AssertionError(
                f"criterion {self.number} exceeded {self.limit_s}s ({elapsed:.3f}s)"
            )
        return False


def test_criterion_1_pretzel_family_sweep():
    with _Gate(1, "pretzel family sweep k=1..8", 1.0):
        for k in range(1, 9):
            params, ob, predicted = pretzel_family(k)
            assert params == PretzelParams(4 * k + 1, 4 * k + 3, -(2 * k + 1))
            assert pretzel_alexander_coeff(params) == 0
            assert alexander_from_seifert(pretzel_seifert(params)) == LaurentPoly.one()
            assert ob == Fraction(-16 * k * (k + 1) * (2 * k + 1), 12)
            assert predicted == (k in {1, 2, 5, 6})
            report = cosmetic_verdict(pretzel=params)
            assert (report.verdict == "HoldsMod16") == (k in {1, 2, 5, 6})


def test_criterion_2_jones_route_k1():
    params = PretzelParams(5, 7, -3)
    pd = pretzel_pd(params)
    assert pd.n == 15
    with _Gate(2, "brute-force bracket at k=1 (15 crossings)", 10.0):
        v_brute = jones(pd, cap=15)
    with _Gate(2, "twist-method bracket at k=1", 0.1):
        v_twist = jones(params)
    assert v_brute == v_twist
    assert v_twist.evaluate(-1) == 1
    assert v_twist.derivative().evaluate(-1) == -48
    assert w3(v_twist) == 6
    assert obstruction_value(v_twist) == (12, 4, -8)


def test_criterion_3_jones_route_k2():
    with _Gate(3, "twist-method Jones route at k=2", 1.0):
        v = jones(PretzelParams(9, 11, -5))
        assert w3(v) == 30
        assert v.derivative().evaluate(-1) * v.evaluate(-1) == -240
        assert obstruction_value(v) == (60, 20, -40)


def test_criterion_4_bracket_oracle_equivalence():
    with _Gate(4, "bracket_twist == bracket_brute, |p|+|q|+|r| <= 13", 60.0):
        odd = [x for x in range(-13, 14) if x % 2 != 0]
        for p in odd:
            for q in odd:
                for r in odd:
                    if abs(p) + abs(q) + abs(r) > 13:
                        continue
                    params = PretzelParams(p, q, r)
                    assert bracket_twist(params) == bracket_brute(pretzel_pd(params))


def test_criterion_5_m_forcing():
    with _Gate(5, "Alexander invariance forces m = 0, bound 10", 5.0):
        assert m_forcing_check(10)


def test_criterion_6_constraint_system():
    with _Gate(6, "constraint system over [-50,50]^2", 1.0):
        assert constraint_solutions(50) == {(0, 0)}
        rational = constraint_solutions_rational()
        assert (Fraction(1, 4), Fraction(-1, 8)) in rational


def test_criterion_7_sixteen_v3_identity():
    with _Gate(7, "Theta(-1) - Theta(1) = 16 v3, 1000 random spines", 1.0):
        rng = random.Random(7)
        for _ in range(1000):
            s = GenusOneSpine(rng.randint(-20, 20), 0, rng.choice([0, -1]))
            ti = TangleInvariants(*(rng.randint(-20, 20) for _ in range(4)))
            assert theta_difference_identity(s, ti) == 16 * ti.v3


def test_criterion_8_known_knot_regression():
    with _Gate(8, "unknot/trefoil/figure-eight regression", 10.0):
        assert jones(parse_pd("")) == LaurentPoly.one()
        assert alexander_from_seifert(SeifertMatrix([])) == LaurentPoly.one()
        assert w3(LaurentPoly.one()) == 0

        trefoil_v = jones(parse_pd(TREFOIL_PD))
        assert trefoil_v == LaurentPoly({4: -1, 3: 1, 1: 1})
        assert w3(trefoil_v) == -1
        trefoil_matrix = SeifertMatrix([[-1, 1], [0, -1]])
        assert signature(trefoil_matrix) == -2
        assert alexander_from_seifert(trefoil_matrix) == LaurentPoly(
            {1: 1, 0: -1, -1: 1}
        )

        fig8_v = jones(parse_pd(FIG8_PD))
        assert fig8_v == LaurentPoly({2: 1, 1: -1, 0: 1, -1: -1, -2: 1})
        assert alexander_from_seifert(SeifertMatrix([[1, 1], [0, -1]])) == LaurentPoly(
            {1: -1, 0: 3, -1: -1}
        )

        mirror_v = jones(mirror(parse_pd(TREFOIL_PD)))
        assert mirror_v == trefoil_v.substitute_power(-1)
        assert mirror_v != trefoil_v


def test_criterion_9_determinant_consistency():
    with _Gate(9, "|V(-1)| == |Delta(-1)| across both routes", 10.0):
        corpus = [
            PretzelParams(1, 1, 1),
            PretzelParams(3, 5, -1),
            PretzelParams(5, 7, -3),
            PretzelParams(-3, -3, -3),
            PretzelParams(3, -5, 7),
            PretzelParams(9, 11, -5),
        ]
        for params in corpus:
            v = jones(params)
            delta = alexander_from_seifert(pretzel_seifert(params))
            assert abs(v.evaluate(-1)) == abs(delta.evaluate(-1))
            assert knot_determinant(pretzel_seifert(params)) == abs(delta.evaluate(-1))


def test_criterion_10_main_theorem_branch():
    with _Gate(10, "100 random nontrivial-Alexander pretzels", 10.0):
        rng = random.Random(10)
        done = 0
        while done < 100:
            p, q, r = (2 * rng.randint(-12, 11) + 1 for _ in range(3))
            if pretzel_alexander_coeff(PretzelParams(p, q, r)) == 0:
                continue
            report = cosmetic_verdict(pretzel=PretzelParams(p, q, r))
            assert report.verdict == "HoldsNontrivialAlexander"
            done += 1
