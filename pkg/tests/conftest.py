import pytest

from braidgraphs.coxeter import standard_family


def W(s):
    """Digit string to word, e.g. ``W("2321434")``."""
    return tuple(int(ch) for ch in s)


def Ws(*strings):
    return {W(s) for s in strings}


@pytest.fixture(scope="session")
def fam():
    cache = {}

    def get(family, n):
        if (family, n) not in cache:
            cache[family, n] = standard_family(family, n)
        return cache[family, n]

    return get
