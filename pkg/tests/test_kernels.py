import numpy as np
import pytest

from icoq import _kernels
from icoq._kernels import INT64_SAFE, combine, mul, pack, set_backend, unpack


@pytest.fixture
def restore_backend():
    old = _kernels.backend()
    yield
    set_backend(old)


def _random_packed(rng, n, nv=3, bits=12, bound=50):
    exps = rng.integers(0, 20, size=(n, nv))
    return pack(exps, bits), rng.integers(-bound, bound, size=n).astype(np.int64)


def test_pack_unpack_round_trip():
    rng = np.random.default_rng(1)
    exps = rng.integers(0, 100, size=(50, 4))
    assert (unpack(pack(exps, 10), 4, 10) == exps).all()


def test_backends_agree(restore_backend):
    rng = np.random.default_rng(2)
    for _ in range(10):
        ka, ca = _random_packed(rng, 40)
        kb, cb = _random_packed(rng, 30)
        set_backend("numpy")
        k1, c1 = mul(ka, ca, kb, cb)
        set_backend("numba")
        k2, c2 = mul(ka, ca, kb, cb)
        assert (k1 == k2).all() and (c1 == c2).all()


def test_combine_drops_zeros_and_sorts(restore_backend):
    keys = np.array([5, 3, 5, 1, 3], dtype=np.int64)
    coefs = np.array([2, 1, -2, 7, 1], dtype=np.int64)
    for name in ("numpy", "numba"):
        set_backend(name)
        k, c = combine(keys, coefs)
        assert k.tolist() == [1, 3] and c.tolist() == [7, 2]


def test_overflow_goes_to_python_integers():
    big = INT64_SAFE >> 10
    k, c = mul(np.array([0, 1], dtype=np.int64), np.array([big, 1], dtype=np.int64),
               np.array([0], dtype=np.int64), np.array([big], dtype=np.int64))
    assert c.dtype == object and int(c[0]) == big * big


def test_unknown_backend():
    with pytest.raises(ValueError):
        set_backend("cuda")
