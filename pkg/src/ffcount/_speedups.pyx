# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels: literal nested enumeration with table
lookups, no subtree sharing.  Must agree exactly with _kernels_py."""


cdef long long _complete(int n_rest, int m, int q, int ncodes,
                         const int[::1] deg, const int[::1] gcdtab,
                         int g, bint flag) noexcept:
    cdef long long count = 0
    cdef int y
    cdef long long base
    if n_rest == 0:
        if g == 1 and flag:
            return 1
        return 0
    base = <long long> g * ncodes
    for y in range(ncodes):
        count += _complete(n_rest - 1, m, q, ncodes, deg, gcdtab,
                           gcdtab[base + y], flag or deg[y] == m)
    return count


def count_completions(int n_rest, int m, int q, int ncodes,
                      const int[::1] deg, const int[::1] gcdtab,
                      int g, bint flag):
    return _complete(n_rest, m, q, ncodes, deg, gcdtab, g, flag)


def count_quadratic_triples(int q, int m, int ncodes,
                            const int[::1] deg, const int[::1] gcdtab,
                            const int[::1] monic_codes,
                            const long long[::1] sq, const long long[::1] prod4,
                            const unsigned char[::1] classify, int want_bits):
    cdef long long total = 0
    cdef int ndigits = 2 * m + 1
    cdef int ai, a, b, c, g1, i, d
    cdef long long arow, g1row, sqb, x, y, disc, qpow
    cdef bint a_hits, ab_hits
    for ai in range(monic_codes.shape[0]):
        a = monic_codes[ai]
        arow = <long long> a * ncodes
        a_hits = deg[a] == m
        for b in range(ncodes):
            g1 = gcdtab[arow + b]
            g1row = <long long> g1 * ncodes
            sqb = sq[b]
            ab_hits = a_hits or deg[b] == m
            for c in range(ncodes):
                if not ab_hits and deg[c] != m:
                    continue
                if g1 != 1 and gcdtab[g1row + c] != 1:
                    continue
                x = sqb
                y = prod4[arow + c]
                disc = 0
                qpow = 1
                for i in range(ndigits):
                    d = <int> (x % q) - <int> (y % q)
                    x //= q
                    y //= q
                    if d < 0:
                        d += q
                    disc += d * qpow
                    qpow *= q
                if (classify[disc] & want_bits) == want_bits:
                    total += 1
    return total
