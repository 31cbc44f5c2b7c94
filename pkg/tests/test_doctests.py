import doctest

import hcz.poly
import hcz.weyl


def test_poly_doctests():
    failures, _ = doctest.testmod(hcz.poly)
    assert failures == 0


def test_weyl_doctests():
    failures, _ = doctest.testmod(hcz.weyl)
    assert failures == 0
