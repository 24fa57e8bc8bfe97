import pytest

from ffcount import _kernels_py, kernels
from ffcount.counting import brute_count_rational
from ffcount.kernels import quad_tables, vector_tables


def test_vector_tables_shape():
    ncodes, deg, gcdtab, monic_codes = vector_tables(3, 2)
    assert ncodes == 27
    assert deg[0] == -1 and deg[1] == 0 and deg[3] == 1
    assert len(gcdtab) == ncodes * ncodes
    # gcd symmetry and idempotence spot checks
    for i in (1, 5, 9, 13):
        for j in (0, 2, 8, 26):
            assert gcdtab[i * ncodes + j] == gcdtab[j * ncodes + i]
    assert all(deg[c] >= 0 for c in monic_codes)


def test_memo_and_literal_recursions_agree():
    # pure memoised recursion vs direct product-loop reference on tiny cells
    from itertools import product

    from ffcount import poly
    from ffcount.gf import GF

    for q, n, m in ((2, 2, 2), (2, 3, 1), (3, 2, 1), (3, 3, 1)):
        K = GF(q)
        expect = 0
        polys = list(poly.enumerate_polys(K, m))
        for vec in product(polys, repeat=n):
            if all(not f for f in vec):
                continue
            if max(poly.deg(f) for f in vec) != m:
                continue
            lead = next(f for f in vec if f)
            if lead[-1] != 1:
                continue
            if poly.gcd_many(K, vec) == poly.ONE:
                expect += 1
        assert brute_count_rational(q, n, m) == expect


@pytest.mark.skipif(not kernels.USING_COMPILED, reason="compiled lane not built")
def test_compiled_matches_pure():
    from ffcount import _speedups

    for q, n, m in ((2, 2, 4), (2, 3, 3), (2, 4, 2), (3, 2, 3), (3, 3, 2), (5, 2, 2)):
        ncodes, deg, gcdtab, monic_codes = vector_tables(q, m)
        memo_total = 0
        lit_total = 0
        for pos in range(n):
            for code in monic_codes:
                memo_total += _kernels_py.count_completions(
                    n - pos - 1, m, q, ncodes, deg, gcdtab, code, deg[code] == m, {}
                )
                lit_total += _speedups.count_completions(
                    n - pos - 1, m, q, ncodes, deg, gcdtab, code, deg[code] == m
                )
        assert memo_total == lit_total


@pytest.mark.skipif(not kernels.USING_COMPILED, reason="compiled lane not built")
def test_compiled_quadratic_matches_pure():
    from array import array

    from ffcount import _speedups

    for q, m in ((3, 1), (3, 2), (5, 1)):
        tables = quad_tables(q, m)
        ncodes, deg, gcdtab, monic_codes, sq, prod4, classify = tables
        for want in (1, 3):
            pure = _kernels_py.count_quadratic_triples(q, m, tables, want)
            comp = _speedups.count_quadratic_triples(
                q, m, ncodes, deg, gcdtab, array("i", monic_codes), sq, prod4, classify, want
            )
            assert pure == comp


def test_nogcdtab_path_matches_table_path():
    q, m = 3, 2
    ncodes, deg, gcdtab, monic_codes = vector_tables(q, m)
    gcd_fn = kernels._gcd_code_fn(q)
    for n in (2, 3):
        a = sum(
            _kernels_py.count_completions(
                n - pos - 1, m, q, ncodes, deg, gcdtab, code, deg[code] == m, {}
            )
            for pos in range(n)
            for code in monic_codes
        )
        b = sum(
            _kernels_py.count_completions_nogcdtab(
                n - pos - 1, m, q, ncodes, deg, gcd_fn, code, deg[code] == m, {}
            )
            for pos in range(n)
            for code in monic_codes
        )
        assert a == b


def test_quad_tables_classification_bits():
    from ffcount import poly
    from ffcount.gf import GF

    q, m = 3, 2
    K = GF(q)
    tables = quad_tables(q, m, target=((0, 1), 1))  # match square class of T
    classify = tables[6]
    for code in range(1, len(classify)):
        f = poly.from_code(q, code)
        unit, s, _ = poly.squarefree_part(K, f)
        bits = classify[code]
        assert bool(bits & 1) == (not (s == poly.ONE and K.is_square(unit)))
        assert bool(bits & 2) == (poly.deg(s) >= 1)
        assert bool(bits & 4) == (s == (0, 1) and K.is_square(unit))
