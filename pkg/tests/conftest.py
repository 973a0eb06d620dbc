import functools

import pytest

from valuesets.gf import FieldCtx, factorize

ODD_PRIME_POWERS = [5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31, 37, 41, 43, 47, 49]


@functools.lru_cache(maxsize=None)
def field(q: int) -> FieldCtx:
    (p, r), = factorize(q).items()
    return FieldCtx(p, r)


@pytest.fixture(params=[5, 7, 9, 13, 25], ids=lambda q: f"F{q}")
def small_field(request):
    return field(request.param)


@pytest.fixture
def f13():
    return field(13)
