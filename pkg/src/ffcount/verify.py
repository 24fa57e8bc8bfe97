"""Invariant battery behind `ffcount verify`.

Each check returns (name, ok, detail); ok is True/False for assertions and
None for report-only measurements (growth envelopes with non-explicit
constants).  The battery covers the exact identities every module must
satisfy; the full acceptance runs live in the test suite.
"""

import itertools
import random

from . import counting, forms, poly, quadratic, riemann_roch, zeta
from .gf import GF
from .places import (
    RationalFunction,
    divisor_of_vector,
    enumerate_places,
    height_relative,
    vector_to_coprime_polys,
)


def _field_axioms():
    for q in (2, 3, 4, 5, 7, 8, 9):
        K = GF(q)
        els = list(K.elements())
        for a in els:
            for b in els:
                if K.add(a, b) != K.add(b, a) or K.mul(a, b) != K.mul(b, a):
                    return f"commutativity fails in F_{q}", False
                for c in els:
                    if K.add(K.add(a, b), c) != K.add(a, K.add(b, c)):
                        return f"associativity (+) fails in F_{q}", False
                    if K.mul(K.mul(a, b), c) != K.mul(a, K.mul(b, c)):
                        return f"associativity (*) fails in F_{q}", False
                    if K.mul(a, K.add(b, c)) != K.add(K.mul(a, b), K.mul(a, c)):
                        return f"distributivity fails in F_{q}", False
        for a in K.units():
            if K.mul(a, K.inv(a)) != 1:
                return f"inverse fails in F_{q}", False
    return "field axioms exhaustive for q <= 9", True


def _gcd_properties():
    for q in (2, 3):
        K = GF(q)
        polys = [f for f in poly.enumerate_polys(K, 3)]
        for f, g in itertools.product(polys, repeat=2):
            if not f and not g:
                continue
            d = poly.gcd(K, f, g)
            if f and poly.rem(K, f, d):
                return f"gcd does not divide f over F_{q}", False
            if g and poly.rem(K, g, d):
                return f"gcd does not divide g over F_{q}", False
    return "gcd divides both arguments, deg <= 3, q in {2,3}", True


def _enumeration_cardinality():
    for q, m in ((2, 4), (3, 2), (5, 1)):
        K = GF(q)
        seen = set(poly.enumerate_polys(K, m))
        if len(seen) != q ** (m + 1):
            return f"enumerate_polys q={q} m={m} cardinality wrong", False
    return "enumerate_polys emits q^(m+1) distinct polynomials", True


def _squarefree_reexpansion():
    for q in (2, 3):
        K = GF(q)
        for f in poly.enumerate_polys(K, 5):
            if not f:
                continue
            unit, s, h = poly.squarefree_part(K, f)
            back = poly.mul_scalar(K, poly.mul(K, s, poly.mul(K, h, h)), unit)
            if back != f:
                return f"re-expansion fails for {f} over F_{q}", False
        # p-th powers (derivative identically zero) must still split correctly
        tp = tuple([0] * K.p + [1])
        _, s, h = poly.squarefree_part(K, tp)
        expect_s = poly.ONE if K.p % 2 == 0 else (0, 1)
        if s != expect_s or h != tuple([0] * (K.p // 2) + [1]):
            return f"T^{K.p} over F_{K.p} misclassified", False
    return "squarefree part re-expands exactly, deg <= 5, q in {2,3}", True


def _principal_divisor_degree():
    rng = random.Random(11)
    K = GF(3)
    pool = [f for f in poly.enumerate_polys(K, 3) if f]
    for _ in range(40):
        fn = RationalFunction(K, rng.choice(pool), rng.choice(pool))
        if fn.is_zero():
            continue
        d = divisor_of_vector(K, [fn])
        if d.degree() != 0:
            return f"principal divisor of {fn} has degree {d.degree()}", False
    return "principal divisors have degree 0 (random sample)", True


def _height_two_ways():
    for q in (2, 3):
        K = GF(q)
        pool = list(poly.enumerate_polys(K, 2))
        for vec in itertools.product(pool, repeat=2):
            if all(not f for f in vec):
                continue
            h1 = height_relative(K, [RationalFunction(K, f) for f in vec])
            rep = vector_to_coprime_polys(K, [RationalFunction(K, f) for f in vec])
            h2 = max(poly.deg(f) for f in rep)
            if h1 != h2:
                return f"height mismatch at {vec} over F_{q}", False
    return "divisor height equals coprime max degree (exhaustive small)", True


def _sequence_identities():
    descs = [
        zeta.CurveDescriptor.rational(2),
        zeta.CurveDescriptor.rational(3),
        zeta.CurveDescriptor(3, 1, (1, 0, 3)),
        zeta.CurveDescriptor(3, 1, (1, 2, 3)),
        zeta.CurveDescriptor(2, 2, (1, 1, 2, 2, 4)),
    ]
    for desc in descs:
        a = zeta.divisor_counts(desc, 12)
        b = zeta.moebius_sums(desc, 12)
        for l in range(13):
            conv = sum(a[i] * b[l - i] for i in range(l + 1))
            if conv != (1 if l == 0 else 0):
                return f"convolution fails at l={l} for {desc}", False
        for m in range(2 * desc.g - 1 if desc.g else 0, 13):
            if m < 0:
                continue
            if a[m] != zeta.closed_form_divisor_count(desc, m):
                return f"closed form fails at m={m} for {desc}", False
    return "a*b convolution and closed-form window, l <= 12", True


def count_divisors_by_enumeration(q, l_max):
    """(a, b) sequences from explicit multisets of places: an effective
    divisor of degree l is a choice of multiplicity per place; its Moebius
    value is 0 with any repeat, else (-1)^(number of places)."""
    K = GF(q)
    degrees = [p.degree for d in range(1, l_max + 1) for p in enumerate_places(K, d)]
    a = [0] * (l_max + 1)
    b = [0] * (l_max + 1)
    for l in range(l_max + 1):
        total = 0
        msum = 0

        def choose(idx, remaining, nplaces, squarefree):
            nonlocal total, msum
            if remaining == 0:
                total += 1
                if squarefree:
                    msum += (-1) ** nplaces
                return
            if idx == len(degrees):
                return
            dp = degrees[idx]
            k = 0
            while k * dp <= remaining:
                choose(idx + 1, remaining - k * dp, nplaces + (1 if k else 0),
                       squarefree and k <= 1)
                k += 1

        choose(0, l, 0, True)
        a[l] = total
        b[l] = msum
    return a, b


def _sequences_vs_enumeration():
    for q in (2, 3):
        desc = zeta.CurveDescriptor.rational(q)
        a = zeta.divisor_counts(desc, 4)
        b = zeta.moebius_sums(desc, 4)
        a_enum, b_enum = count_divisors_by_enumeration(q, 4)
        if a_enum != a:
            return f"a(l) enumeration mismatch at q={q}: {a_enum} vs {a}", False
        if b_enum != b:
            return f"b(l) enumeration mismatch at q={q}: {b_enum} vs {b}", False
    return "a(l), b(l) match direct divisor enumeration, l <= 4, q in {2,3}", True


def _euler_product_small():
    for q, s, D in ((2, 2, 10), (3, 2, 7), (2, 3, 8)):
        prod = zeta.euler_product_truncation(q, s, D)
        closed = zeta.zeta_value(zeta.CurveDescriptor.rational(q), s)
        gap = closed - prod
        if not (0 < gap <= zeta.euler_truncation_bound(q, s, D)):
            return f"Euler gap outside certificate at q={q} s={s} D={D}", False
        if gap < zeta.euler_gap_lower_bound(q, s, D):
            return f"Euler gap below lower bound at q={q} s={s} D={D}", False
    return "Euler product enclosed by its certificates (small D)", True


def _class_model_identities():
    models = [riemann_roch.build_class_model(zeta.CurveDescriptor.rational(q)) for q in (2, 3)]
    for f in quadratic.enumerate_quadratic_fields(3, 4):
        models.append(riemann_roch.build_class_model(f.descriptor))
    for model in models:
        if not riemann_roch.class_sum_identity_check(model, 6):
            return f"class-sum identity fails for {model.desc}", False
        for n in (1, 2, 3):
            for i in range(0, 2 * model.g - 1):
                if not riemann_roch.reflection_identity_check(model, i, n):
                    return f"reflection fails for {model.desc} i={i} n={n}", False
                if not riemann_roch.clifford_sum_check(model, i, n):
                    return f"Clifford sum bound fails for {model.desc} i={i} n={n}", False
    return "class-sum, reflection and Clifford checks on all models", True


def _oracle_equivalence():
    cells = [(2, 2, 3), (2, 3, 2), (3, 2, 2), (3, 3, 1), (2, 4, 1)]
    for q, n, m in cells:
        desc = zeta.CurveDescriptor.rational(q)
        a = counting.brute_count_rational(q, n, m)
        b = counting.moebius_point_count(desc, n, m).N
        if a != b:
            return f"oracle mismatch at q={q} n={n} m={m}: {a} vs {b}", False
    return "brute force equals Moebius inversion (sample grid)", True


def _pipeline_agreement():
    for m in (1, 2):
        a = counting.count_fixed_degree_points(3, 2, m)
        b = counting.count_degree2_points_by_fields(3, 2, m).N
        if a != b:
            return f"degree-2 pipelines disagree at m={m}: {a} vs {b}", False
    return "minimal-polynomial and per-field degree-2 counts agree (m <= 2)", True


def _twist_pairing():
    K = GF(3)
    fields = quadratic.enumerate_quadratic_fields(3, 4)
    by_D = {}
    for f in fields:
        by_D.setdefault(f.D, {})[f.u] = f
    for D, pair in by_D.items():
        if len(pair) != 2:
            return f"missing twist for D={D}", False
        f1, f2 = pair.values()
        if f1.genus >= 1:
            if f1.descriptor.L[1] + f2.descriptor.L[1] != 0:
                return f"twist trace sum nonzero for D={D}", False
    return "twist pairs have opposite traces (deg D <= 4)", True


def _field_distinctness():
    K = GF(3)
    fields = quadratic.enumerate_quadratic_fields(3, 3)
    for f1, f2 in itertools.combinations(fields, 2):
        if quadratic.same_field(K, f1.D, f1.u, f2.D, f2.u):
            return f"{f1.label()} and {f2.label()} coincide", False
    return "enumerated fields pairwise distinct (deg D <= 3)", True


def _forms_relations():
    for q, ms in ((3, (0, 1, 2)), (2, (1,))):
        p = GF(q).p
        for m in ms:
            table_counts = {1: counting.brute_count_rational(q, 2, m)}
            table_counts[2] = counting.count_fixed_degree_points(q, 2, m)
            table = forms.FormTable(p, 2, 2, m, table_counts)
            if not forms.form_count_identity_check(table):
                return f"forms aggregation identity fails at q={q} m={m}", False
            nf = forms.form_count(table)
            brute = forms.brute_force_forms(q, 2, 2, m)
            if nf != brute:
                return f"form oracle mismatch at q={q} m={m}: {nf} vs {brute}", False
    return "form counts match the oracle (q=3 m<=2; q=2 m=1)", True


def _hasse_weil_all():
    fields = quadratic.enumerate_quadratic_fields(3, 5)
    for f in fields:
        if not zeta.hasse_weil_check(f.descriptor)["ok"]:
            return f"{f.label()} fails the Hasse-Weil window", False
    return f"{len(fields)} enumerated descriptors pass Hasse-Weil (deg D <= 5)", True


def _growth_report():
    rows = counting.growth_report(3, m_max=2)
    return f"growth ratios over {len(rows)} rows (floats, no assertion)", None


def _divisor_sum_report():
    desc = zeta.CurveDescriptor(3, 1, (1, 0, 3))
    meas = zeta.divisor_sum_measurements(desc, 6, 2)
    return (
        f"head {meas['head_sum']:.4g} vs envelope {meas['head_envelope']:.4g}; "
        f"tail {meas['tail_sum_16_terms']:.4g} vs envelope {meas['tail_envelope']:.4g}",
        None,
    )


SUITES = {
    "algebra": [_field_axioms, _gcd_properties, _enumeration_cardinality,
                _squarefree_reexpansion],
    "places": [_principal_divisor_degree, _height_two_ways],
    "zeta": [_sequence_identities, _sequences_vs_enumeration, _euler_product_small,
             _divisor_sum_report],
    "riemann_roch": [_class_model_identities],
    "counting": [_oracle_equivalence, _pipeline_agreement, _growth_report],
    "quadratic": [_twist_pairing, _field_distinctness, _hasse_weil_all],
    "forms": [_forms_relations],
}

DEEP_CELLS = [(3, 4, 2), (2, 4, 3), (3, 3, 3)]


def _deep_oracle():
    for q, n, m in DEEP_CELLS:
        desc = zeta.CurveDescriptor.rational(q)
        if counting.brute_count_rational(q, n, m) != counting.moebius_point_count(desc, n, m).N:
            return f"deep oracle mismatch at q={q} n={n} m={m}", False
    return "deep oracle equivalence cells", True


def run_suite(suite: str, deep: bool = False):
    checks = []
    if suite == "all":
        for group in SUITES.values():
            checks.extend(group)
    else:
        checks.extend(SUITES[suite])
    if deep:
        checks.append(_deep_oracle)
    results = []
    for check in checks:
        detail, ok = check()
        results.append((check.__name__.lstrip("_"), ok, detail))
    return results
