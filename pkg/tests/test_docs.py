import doctest
from pathlib import Path

import treexpr

README = Path(__file__).parent.parent / "README.md"


def test_package_docstring_examples():
    assert doctest.testmod(treexpr).failed == 0


def test_readme_examples():
    result = doctest.testfile(str(README), module_relative=False)
    assert result.attempted >= 4 and result.failed == 0
