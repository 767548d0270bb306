"""Integer kernels behind sparse polynomial multiplication.

Monomials are packed into one int64 key (first variable in the high bits,
so key order is lex order) and coefficients are integers after clearing
denominators.  Two interchangeable backends implement the kernels:

* ``numba``: ``@njit`` loops, the default when numba imports.  When the
  packed key range is small the product is scattered into a dense
  accumulator, so no sort is needed.
* ``numpy``: vectorised outer products with ``argsort`` and ``reduceat``.

``ICOQ_BACKEND=numpy`` in the environment selects the fallback; the
choice can also be changed at runtime with :func:`set_backend`.  Both
backends only ever see int64 coefficients whose products and sums are
proven not to overflow; anything larger goes through an object-dtype
numpy path that uses Python integers.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba as nb
except ImportError:  # pragma: no cover - numba is a declared dependency
    nb = None

INT64_SAFE = (1 << 62)
# largest key range the numba kernel accumulates into a dense array
DENSE_SPAN = 1 << 22

_backend = os.environ.get("ICOQ_BACKEND", "numba").strip().lower()
if _backend not in ("numba", "numpy") or (_backend == "numba" and nb is None):
    _backend = "numpy"


def backend() -> str:
    return _backend


def set_backend(name: str) -> None:
    global _backend
    if name not in ("numba", "numpy"):
        raise ValueError(f"unknown backend {name!r}")
    if name == "numba" and nb is None:
        raise RuntimeError("numba is not installed")
    _backend = name


# ---------------------------------------------------------------------------
# numpy implementations (also used for object dtype)

def _np_combine(keys: np.ndarray, coefs: np.ndarray):
    if keys.size == 0:
        return keys, coefs
    order = np.argsort(keys, kind="stable")
    k = keys[order]
    c = coefs[order]
    starts = np.flatnonzero(np.concatenate(([True], k[1:] != k[:-1])))
    summed = np.add.reduceat(c, starts)
    uk = k[starts]
    keep = summed != 0
    return uk[keep], summed[keep]


def _np_mul(ka, ca, kb, cb):
    keys = np.add.outer(ka, kb).ravel()
    coefs = np.multiply.outer(ca, cb).ravel()
    return _np_combine(keys, coefs)


# ---------------------------------------------------------------------------
# numba implementations

if nb is not None:
    @nb.njit(cache=True)
    def _nb_combine(keys, coefs):
        n = keys.shape[0]
        out_k = np.empty(n, dtype=np.int64)
        out_c = np.empty(n, dtype=np.int64)
        if n == 0:
            return out_k, out_c
        order = np.argsort(keys)
        m = 0
        cur_k = keys[order[0]]
        cur_c = coefs[order[0]]
        for idx in range(1, n):
            j = order[idx]
            if keys[j] == cur_k:
                cur_c += coefs[j]
            else:
                if cur_c != 0:
                    out_k[m] = cur_k
                    out_c[m] = cur_c
                    m += 1
                cur_k = keys[j]
                cur_c = coefs[j]
        if cur_c != 0:
            out_k[m] = cur_k
            out_c[m] = cur_c
            m += 1
        return out_k[:m], out_c[:m]

    @nb.njit(cache=True)
    def _nb_mul_dense(ka, ca, kb, cb, lo, span):
        acc = np.zeros(span, dtype=np.int64)
        for i in range(ka.shape[0]):
            base = ka[i] - lo
            ci = ca[i]
            for j in range(kb.shape[0]):
                acc[base + kb[j]] += ci * cb[j]
        m = 0
        for k in range(span):
            if acc[k] != 0:
                m += 1
        out_k = np.empty(m, dtype=np.int64)
        out_c = np.empty(m, dtype=np.int64)
        m = 0
        for k in range(span):
            if acc[k] != 0:
                out_k[m] = k + lo
                out_c[m] = acc[k]
                m += 1
        return out_k, out_c

    @nb.njit(cache=True)
    def _nb_mul(ka, ca, kb, cb):
        na = ka.shape[0]
        nbb = kb.shape[0]
        lo = ka.min() + kb.min()
        span = ka.max() + kb.max() - lo + 1
        if span <= DENSE_SPAN and span <= 8 * na * nbb:
            return _nb_mul_dense(ka, ca, kb, cb, lo, span)
        keys = np.empty(na * nbb, dtype=np.int64)
        coefs = np.empty(na * nbb, dtype=np.int64)
        idx = 0
        for i in range(na):
            ki = ka[i]
            ci = ca[i]
            for j in range(nbb):
                keys[idx] = ki + kb[j]
                coefs[idx] = ci * cb[j]
                idx += 1
        return _nb_combine(keys, coefs)


def _fits(c: np.ndarray) -> bool:
    return c.dtype != object


def _as_int_array(values: list[int]) -> np.ndarray:
    m = max((abs(v) for v in values), default=0)
    if m < INT64_SAFE:
        return np.array(values, dtype=np.int64)
    return np.array(values, dtype=object)


def mul(ka: np.ndarray, ca: np.ndarray, kb: np.ndarray, cb: np.ndarray):
    """Product of two packed sparse polynomials; returns sorted keys."""
    if ka.size == 0 or kb.size == 0:
        return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
    if _fits(ca) and _fits(cb):
        bound = int(np.abs(ca).max()) * int(np.abs(cb).max()) * min(ka.size, kb.size)
        if bound < INT64_SAFE:
            if _backend == "numba":
                return _nb_mul(ka, ca, kb, cb)
            return _np_mul(ka, ca, kb, cb)
    return _np_mul(ka, ca.astype(object), kb, cb.astype(object))


def combine(keys: np.ndarray, coefs: np.ndarray):
    """Sum coefficients of repeated keys and drop zeros."""
    if _fits(coefs) and coefs.size and \
            int(np.abs(coefs).max()) * coefs.size < INT64_SAFE:
        if _backend == "numba":
            return _nb_combine(keys, coefs)
        return _np_combine(keys, coefs)
    return _np_combine(keys, coefs.astype(object))


def pack(exps: np.ndarray, bits: int) -> np.ndarray:
    nv = exps.shape[1]
    shifts = bits * np.arange(nv - 1, -1, -1, dtype=np.int64)
    return (exps.astype(np.int64) << shifts).sum(axis=1)


def unpack(keys: np.ndarray, nv: int, bits: int) -> np.ndarray:
    shifts = bits * np.arange(nv - 1, -1, -1, dtype=np.int64)
    mask = (1 << bits) - 1
    return (keys[:, None] >> shifts) & mask
