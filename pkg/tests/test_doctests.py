"""Run the usage examples embedded in module docstrings."""

import doctest

import qlaurent.coeff
import qlaurent.torus


def test_coeff_doctests():
    failures, tried = doctest.testmod(qlaurent.coeff)
    assert failures == 0 and tried > 0


def test_torus_doctests():
    failures, tried = doctest.testmod(qlaurent.torus)
    assert failures == 0 and tried > 0
