"""Enumeration kernel tables and implementation selection.

Two hot loops dominate everything in this package:

  * counting coprime polynomial vectors of given height (the projective
    point oracle), and
  * classifying binary quadratic coefficient triples by the square class
    of their discriminant (degree-2 points, forms, field matching).

Both run over integer polynomial codes (base-q coefficient vectors) with
all field work precomputed into flat tables here.  Two implementations
exist: a compiled extension (ffcount._speedups, built from Cython when a
compiler is available) doing literal nested enumeration, and a pure-Python
fallback that shares subtrees of the same recursion via memoisation.  The
strategies are intentionally different; they must agree exactly, and
benchmarks/bench_kernels.py measures the gap.  Import order prefers the
compiled lane; set FFCOUNT_PURE=1 to force the fallback.
"""

import functools
import os
from array import array

from . import poly
from .gf import GF

try:  # pragma: no cover - exercised only when the extension is built
    if os.environ.get("FFCOUNT_PURE"):
        raise ImportError("pure lane forced by FFCOUNT_PURE")
    from . import _speedups

    USING_COMPILED = True
except ImportError:  # pragma: no cover
    _speedups = None
    USING_COMPILED = False

from . import _kernels_py

GCD_TABLE_MAX_CODES = 2500  # above this the flat q^(2(m+1)) gcd table is skipped


@functools.lru_cache(maxsize=None)
def vector_tables(q: int, m: int):
    """(ncodes, deg, gcdtab, monic_codes) for polynomials of degree <= m.

    deg[code] is the degree (-1 for zero); gcdtab is the flat ncodes^2 table
    of monic gcd codes (None when over the size cap); monic_codes lists the
    codes of monic nonzero polynomials in increasing order.
    """
    K = GF(q)
    ncodes = q ** (m + 1)
    polys = [poly.from_code(q, code) for code in range(ncodes)]
    deg = array("i", (len(f) - 1 for f in polys))
    monic_codes = tuple(c for c, f in enumerate(polys) if f and f[-1] == 1)
    gcdtab = None
    if ncodes <= GCD_TABLE_MAX_CODES:
        gcdtab = array("i", bytes(0))
        flat = [0] * (ncodes * ncodes)
        for i in range(ncodes):
            fi = polys[i]
            row = i * ncodes
            for j in range(i, ncodes):
                if not fi and not polys[j]:
                    continue
                g = poly.to_code(q, poly.gcd(K, fi, polys[j]))
                flat[row + j] = g
                flat[j * ncodes + i] = g
        gcdtab = array("i", flat)
    return ncodes, deg, gcdtab, monic_codes


@functools.lru_cache(maxsize=None)
def _gcd_code_fn(q: int):
    K = GF(q)

    @functools.lru_cache(maxsize=1 << 20)
    def gcd_code(i: int, j: int) -> int:
        return poly.to_code(q, poly.gcd(K, poly.from_code(q, i), poly.from_code(q, j)))

    return gcd_code


def count_coprime_lead(q, n, m, lead_pos, lead_code):
    """Normalized coprime vectors of height exactly m whose first nonzero
    coordinate sits at `lead_pos` (0-based) and equals the monic polynomial
    with code `lead_code`."""
    ncodes, deg, gcdtab, _ = vector_tables(q, m)
    n_rest = n - lead_pos - 1
    flag = deg[lead_code] == m
    if gcdtab is not None and USING_COMPILED:
        return _speedups.count_completions(
            n_rest, m, q, ncodes, deg, gcdtab, lead_code, flag
        )
    if gcdtab is not None:
        return _kernels_py.count_completions(
            n_rest, m, q, ncodes, deg, gcdtab, lead_code, flag, {}
        )
    return _kernels_py.count_completions_nogcdtab(
        n_rest, m, q, ncodes, deg, _gcd_code_fn(q), lead_code, flag, {}
    )


@functools.lru_cache(maxsize=None)
def quad_tables(q: int, m: int, target=None):
    """Tables for classifying triples (a, b, c) -> disc = b^2 - 4ac.

    Returns (ncodes, deg, gcdtab, monic_codes, sq, prod4, classify) where
    sq[b] is the code of b^2, prod4[a*ncodes+c] the code of 4ac, and
    classify[disc_code] a bitmask: 1 = disc is a non-square (the quadratic
    is irreducible over F_q(T)), 2 = squarefree part is non-constant (the
    constant field survives), 4 = square class matches `target` = (D, u).
    Prime odd q only; characteristic 2 goes through the Artin-Schreier path
    in the counting module instead.
    """
    if q % 2 == 0 or GF(q).e != 1:
        raise ValueError("discriminant tables need odd prime q")
    K = GF(q)
    ncodes, deg, gcdtab, monic_codes = vector_tables(q, m)
    ncodes2 = q ** (2 * m + 1)
    polys = [poly.from_code(q, code) for code in range(ncodes)]
    sq = array("q", (poly.to_code(q, poly.mul(K, f, f)) for f in polys))
    four = 4 % q
    prod4 = array("q", bytes(0))
    flat = [0] * (ncodes * ncodes)
    for ai in monic_codes:
        fa = polys[ai]
        row = ai * ncodes
        for ci in range(ncodes):
            flat[row + ci] = poly.to_code(q, poly.mul_scalar(K, poly.mul(K, fa, polys[ci]), four))
    prod4 = array("q", flat)
    classify = bytearray(ncodes2)
    for code in range(1, ncodes2):
        f = poly.from_code(q, code)
        unit, s, _ = poly.squarefree_part(K, f)
        bits = 0
        if not (s == poly.ONE and K.is_square(unit)):
            bits |= 1
        if len(s) - 1 >= 1:
            bits |= 2
        if target is not None:
            tD, tu = target
            if s == tD and K.is_square(K.mul(unit, tu)):
                bits |= 4
        classify[code] = bits
    return ncodes, deg, gcdtab, monic_codes, sq, prod4, classify


def count_quadratic_triples(q, m, want_bits, target=None):
    """Count normalized triples (a monic nonzero, b, c) with max degree
    exactly m, gcd 1, whose discriminant classification has all `want_bits`."""
    tables = quad_tables(q, m, target)
    if tables[2] is None:
        raise ValueError("degree too large for the discriminant tables")
    if USING_COMPILED:
        ncodes, deg, gcdtab, monic_codes, sq, prod4, classify = tables
        return _speedups.count_quadratic_triples(
            q, m, ncodes, deg, gcdtab, array("i", monic_codes), sq, prod4, classify, want_bits
        )
    return _kernels_py.count_quadratic_triples(q, m, tables, want_bits)
