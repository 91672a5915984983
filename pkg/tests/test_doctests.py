import doctest
import importlib

import pytest

MODULES = ["cartan", "weyl", "zee", "nilcoxeter", "symfunc", "schubert"]


@pytest.mark.parametrize("name", MODULES)
def test_docstring_examples(name):
    mod = importlib.import_module(f"affine_c.{name}")
    result = doctest.testmod(mod)
    assert result.attempted and result.failed == 0
