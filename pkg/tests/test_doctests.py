import doctest

import pytest

from growthdiagrams import compositions, graphs, growth, permutations, ribbons, trees


@pytest.mark.parametrize(
    "module", [permutations, compositions, trees, ribbons, growth, graphs]
)
def test_doctests(module):
    failures, _ = doctest.testmod(module)
    assert failures == 0
