"""Brute-force reduced-form counter, checked against class_number.

The counter below shares no code with the library: it walks every (a, b)
in the reduced-form box and tests c directly.
"""

import math

from sympy import factorint

from src.quadfield.classgroup import class_group_of_discriminant, class_number

ORACLE_LIMIT = 10**4


def _brute_force_h(D: int) -> int:
    count = 0
    a = 1
    while 3 * a * a <= -D:
        for b in range(-a + 1, a + 1):
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if math.gcd(math.gcd(a, b), c) == 1:
                count += 1
        a += 1
    return count


def _squarefree(n: int) -> bool:
    return all(e == 1 for e in factorint(n).values())


def _fundamental_discriminants(limit: int):
    """(d, D) for every fundamental D with -limit < D < 0."""
    for m in range(1, limit):
        if not _squarefree(m):
            continue
        d = -m
        D = d if d % 4 == 1 else 4 * d
        if -D < limit:
            yield d, D


class TestOracle:
    def test_small_known_values(self):
        assert _brute_force_h(-23) == 3
        assert _brute_force_h(-4) == 1
        assert _brute_force_h(-6347) == 28

    def test_agrees_on_all_fundamental_discriminants(self):
        mismatches = []
        checked = 0
        for d, D in _fundamental_discriminants(ORACLE_LIMIT):
            checked += 1
            expected = _brute_force_h(D)
            if class_number(d) != expected:
                mismatches.append((d, class_number(d), expected))
        assert checked > 2500
        assert mismatches == []

    def test_form_lists_match_count(self):
        for d, D in _fundamental_discriminants(2000):
            assert len(class_group_of_discriminant(D).forms) == _brute_force_h(D)
