import numpy as np
import pytest
import sympy as sp

from icoq.repchar import (binary_representations, binary_table, character_of, hilbert_series_coefficients,
                          inner_product, lefschetz_table, molien_dims, rep_tensor, s5_representations,
                          s5_table, verify_table)


def _numeric_molien(rep, dmax):
    """(1/|G|) sum_g h_d(eigenvalues of g), from floating point embeddings."""
    total = np.zeros(dmax + 1, dtype=complex)
    for m in rep.images:
        a = np.array([[complex(c.embed(0)) if hasattr(c, "embed") else complex(c) for c in row]
                      for row in m.rows])
        lam = np.linalg.eigvals(a)
        series = np.zeros(dmax + 1, dtype=complex)
        series[0] = 1
        for x in lam:
            # multiply by 1/(1 - x t)
            for d in range(1, dmax + 1):
                series[d] += x * series[d - 1]
        total += series
    return [round((c / rep.group.order).real) for c in total]


@pytest.fixture(scope="module")
def binary():
    return binary_representations()


def test_hilbert_coefficients_match_sympy_series():
    t = sp.Symbol("t")
    expr = (1 + t**15) / ((1 - t**2) * (1 - t**6) * (1 - t**10))
    want = sp.Poly(sp.series(expr, t, 0, 31).removeO(), t).all_coeffs()[::-1]
    assert hilbert_series_coefficients({0: 1, 15: 1}, [2, 6, 10], 30) == [int(c) for c in want]


def test_molien_v3_exact_and_numeric(v3):
    exact = molien_dims(v3, 15)
    assert exact == _numeric_molien(v3, 15)
    assert exact == hilbert_series_coefficients({0: 1, 15: 1}, [2, 6, 10], 15)
    assert exact[14] == 4


def test_binary_v2_degree_12(binary):
    dims = molien_dims(binary["V2"], 12)
    assert dims == _numeric_molien(binary["V2"], 12)
    assert dims[12] == 1 and all(d == 0 for d in dims[1:12])


@pytest.mark.parametrize("build", [s5_table, binary_table])
def test_tables_are_orthonormal(build):
    table = build()
    assert all(c.ok for c in verify_table(table))
    assert sum(row[0] ** 2 for row in table.rows.values()) == table.group_order


def test_s5_tensor_decomposition():
    reps = s5_representations()
    table = s5_table()
    w4 = reps["W4"]
    chi = character_of(rep_tensor(w4, w4), table.classes)
    mult = {l: inner_product(chi, row, table.classes, 120) for l, row in table.rows.items()}
    assert sum(mult[l] * table.rows[l][0] for l in mult) == 16
    assert mult["W1"] == 1


def test_representations_are_homomorphisms(binary):
    assert all(r.check_homomorphism(trials=50) for r in binary.values())
    assert all(r.check_homomorphism(trials=50) for r in s5_representations().values())


def test_lefschetz_is_three_plus_w4():
    rows = lefschetz_table()
    assert [r.lefschetz for r in rows] == [7, 5, 3, 4, 2, 3, 2]
    assert all(r.lefschetz == 3 + r.trace for r in rows)
