import pytest

from weakmult.field import QQ, Field

F5 = Field.prime(5)
F7 = Field.prime(7)
F2 = Field.prime(2, allow_char_2=True)


@pytest.fixture(params=[QQ, F5], ids=["Q", "F5"])
def field(request):
    return request.param
