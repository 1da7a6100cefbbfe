import math
from fractions import Fraction

import pytest

import singulact


def test_lct_two_generators():
    assert singulact.lct("x^2, y^3", "x,y") == Fraction(5, 6)


def test_lct_certificate():
    r = singulact.report("lct", "x^2, x*y, y^3", "x,y", certificate=True)
    assert r["method"] == "facet-dual"
    assert r["certificate"] == {"u": ["1", "1"], "ord": "2"}


def test_beta_depends_on_ambient_dimension():
    assert singulact.beta("x^3", "x") == Fraction(1, 3)
    assert singulact.beta("x^3", "x,y") == Fraction(1, 2)


def test_alpha_and_milnor():
    assert singulact.alpha("x^2+y^3", "x,y") == Fraction(5, 6)
    assert singulact.alpha("x+y^2", "x,y") == math.inf
    assert singulact.milnor("x^3+y^4", "x,y") == 6


def test_multiplicity():
    assert singulact.multiplicity("x^2, x*y, y^2", "x,y") == 4


def test_errors():
    with pytest.raises(singulact.ParseError):
        singulact.beta("x^2+z", "x,y")
    with pytest.raises(singulact.UnsupportedClass):
        singulact.beta("x^2+x*y^2+y^5", "x,y")
    assert issubclass(singulact.ParseError, singulact.InputError)


def test_scan_threads_agree():
    one = singulact.scan("diagonal", 2, 4, "question1", threads=1)
    many = singulact.scan("diagonal", 2, 4, "question1", threads=3)
    assert one == many
    assert one["summary"]["cells"] == 9
    assert one["summary"]["min_gap"] == "0"


def test_run_cli():
    code, out, err = singulact.run(["check", "question1", "--vars", "x,y", "--poly", "x^2+y^3"])
    assert (code, out, err) == (0, "holds: 5/6 <= 1\n", "")
    code, _, err = singulact.run(["beta", "--poly", "x^2"])
    assert code == 1 and "--vars" in err
