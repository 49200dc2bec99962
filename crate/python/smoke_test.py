"""Smoke test for the `boole` extension module.

Build and install first:

    pip install maturin
    maturin build --release -m crates/python/Cargo.toml -o dist
    pip install dist/boole-*.whl

then run `python python/smoke_test.py` (or `pytest python/`).
"""

from fractions import Fraction

import boole
from boole import Rational


def test_rational_canonical_form():
    assert Rational(2, 4).fraction_string() == "1/2"
    assert Rational(3, -6) == Rational("-1/2")
    assert Rational(0, 5).fraction_string() == "0/1"
    assert Rational(Fraction(6, 8)) == Rational("3/4")
    assert Rational("1/2") + 1 == Rational("3/2")
    assert 1 - Rational("1/3") == Rational("2/3")
    assert Rational("-2/3") ** 2 == Rational("4/9")
    assert hash(Rational("2/4")) == hash(Rational("1/2"))
    try:
        Rational(1, 0)
    except ZeroDivisionError:
        pass
    else:
        raise AssertionError("zero denominator accepted")


def test_integer_functions():
    assert boole.factorial(10) == 3628800
    assert boole.binomial(4, 2) == 6
    assert boole.binomial(5, 7) == 0
    assert boole.superfactorial(4) == 288
    assert boole.boole_sum(4, 6) == 1560
    assert boole.stirling2(6, 4) == 65
    assert boole.forward_difference_at_zero(2, 2) == 2
    assert boole.closed_form_solution(3) == [-1, 3, -3, 1]
    # large values come back as exact Python ints
    assert boole.factorial(30) == 265252859812191058636308480000000


def test_system_and_determinants():
    matrix, rhs = boole.build_system(1, 2, 2)
    assert [[str(x) for x in row] for row in matrix] == [["1", "1", "1"], ["1", "3", "5"], ["1", "9", "25"]]
    assert [str(x) for x in rhs] == ["0", "0", "8"]
    assert boole.solve_exact(matrix, rhs) == [Rational(1), Rational(-2), Rational(1)]
    assert boole.solve_system("9/4", "-1/3", 3) == [Rational(x) for x in (-1, 3, -3, 1)]
    assert boole.det_vandermonde_closed(3, 2) == Rational(768)
    assert boole.det_vandermonde_general([0, 1, 2]) == Rational(2)
    assert boole.det_bareiss(matrix) == boole.det_vandermonde_closed(2, 2)
    assert boole.det_vk_closed(2, 1, 1) == Rational(-4)
    try:
        boole.solve_system(3, 0, 1)
    except boole.SingularMatrixError:
        pass
    else:
        raise AssertionError("singular system solved")


def test_identities():
    assert boole.generalized_sum(1, 2, 2, 2) == Rational(8)
    assert boole.generalized_sum(0, 1, 3, 3) == Rational(-6)
    assert boole.expected_value("1/3", "-2/5", 3, 3) == boole.generalized_sum("1/3", "-2/5", 3, 3)
    try:
        boole.expected_value(1, 1, 2, 4)
    except ValueError:
        pass
    else:
        raise AssertionError("m > n accepted")


def test_verification_reports():
    report = boole.verify_theorem(0, 1, 10)
    assert report.passed and report.count("theorem") == 66
    report = boole.verify_theorem(7, 0, 6)
    assert report.passed and report.count("system_row") == 0 and report.notes
    report = boole.verify_stirling(12, 12)
    assert report.count("stirling") == 169 and report.failures == 0
    report = boole.verify_cramer("-3/2", "1/7", 4)
    assert report.passed
    case = report.cases()[0]
    assert case.check == "cramer_ratio" and case.lhs == case.rhs == Rational(1)
    assert '"check":"cramer_ratio"' in report.to_json()


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            fn()
            print(f"ok  {name}")
    print("python smoke test passed")
