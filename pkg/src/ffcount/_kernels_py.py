"""Pure-Python enumeration kernels.

Counts are organized as a recursion over coordinates with a running monic
gcd code; identical (remaining length, gcd, seen-max-degree) states are
shared through a memo dictionary, and a branch whose gcd has reached 1 is
completed in closed form.  The compiled twin in _speedups.pyx enumerates
the same tree literally without sharing; both must produce identical
counts on every input.
"""


def count_completions(n_rest, m, q, ncodes, deg, gcdtab, g, flag, memo):
    """Tuples (y_1..y_n_rest) of codes < ncodes with gcd(g, y_*) = 1 and
    maximal degree m reached (flag marks degree m already seen)."""
    if g == 1:
        total = ncodes**n_rest
        if flag:
            return total
        return total - (q**m) ** n_rest
    if n_rest == 0:
        return 0
    key = (n_rest, g, flag)
    hit = memo.get(key)
    if hit is not None:
        return hit
    count = 0
    base = g * ncodes
    for y in range(ncodes):
        count += count_completions(
            n_rest - 1, m, q, ncodes, deg, gcdtab, gcdtab[base + y], deg[y] == m or flag, memo
        )
    memo[key] = count
    return count


def count_completions_nogcdtab(n_rest, m, q, ncodes, deg, gcd_code, g, flag, memo):
    """Same recursion with gcd codes computed on demand (large-degree regime
    where the flat gcd table would not fit)."""
    if g == 1:
        total = ncodes**n_rest
        if flag:
            return total
        return total - (q**m) ** n_rest
    if n_rest == 0:
        return 0
    key = (n_rest, g, flag)
    hit = memo.get(key)
    if hit is not None:
        return hit
    count = 0
    for y in range(ncodes):
        count += count_completions_nogcdtab(
            n_rest - 1, m, q, ncodes, deg, gcd_code, gcd_code(g, y), deg[y] == m or flag, memo
        )
    memo[key] = count
    return count


def count_quadratic_triples(q, m, tables, want_bits):
    """Normalized triples (a monic, b, c): gcd 1, max degree exactly m, and
    classify[b^2 - 4ac] carrying all of want_bits."""
    ncodes, deg, gcdtab, monic_codes, sq, prod4, classify = tables
    ndigits = 2 * m + 1
    qpow = [q**i for i in range(ndigits + 1)]
    total = 0
    for a in monic_codes:
        arow = a * ncodes
        a_hits = deg[a] == m
        for b in range(ncodes):
            g1 = gcdtab[arow + b]
            g1row = g1 * ncodes
            sqb = sq[b]
            ab_hits = a_hits or deg[b] == m
            for c in range(ncodes):
                if not ab_hits and deg[c] != m:
                    continue
                if g1 == 1:
                    pass
                elif gcdtab[g1row + c] != 1:
                    continue
                # disc code: digitwise (b^2 - 4ac) mod q
                x, y = sqb, prod4[arow + c]
                disc = 0
                for i in range(ndigits):
                    d = (x % q) - (y % q)
                    x //= q
                    y //= q
                    disc += (d % q) * qpow[i]
                if classify[disc] & want_bits == want_bits:
                    total += 1
    return total
