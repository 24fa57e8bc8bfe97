import itertools

import pytest

from ffcount import poly
from ffcount.errors import DescriptorError
from ffcount.gf import GF
from ffcount.places import INFINITY, Divisor, Place, rf
from ffcount.quadratic import enumerate_quadratic_fields
from ffcount.riemann_roch import (
    build_class_model,
    class_dimension,
    class_sum_identity_check,
    clifford_sum_check,
    genus0_basis,
    genus0_section_basis,
    l_dim,
    lambda_sum,
    reflection_identity_check,
    section_space_contains,
)
from ffcount.zeta import CurveDescriptor, divisor_counts

K2, K3 = GF(2), GF(3)
T = (0, 1)
R2 = build_class_model(CurveDescriptor.rational(2))
E1 = build_class_model(CurveDescriptor(3, 1, (1, 0, 3)))


def test_dimension_formulas():
    # negative degree: 0
    assert l_dim(R2, 1, -1, 5) == 0
    # genus 0: l = n (i+1)
    assert l_dim(R2, 1, 2, 3) == 9
    # genus 1 at degree 0: only the zero class has sections
    assert l_dim(E1, 1, 0, 2) == 2
    for j in (2, 3, 4):
        assert l_dim(E1, j, 0, 2) == 0
    with pytest.raises(ValueError):
        l_dim(E1, 5, 0, 1)
    with pytest.raises(ValueError):
        l_dim(E1, 1, 0, 0)


def test_l_scales_linearly_in_n():
    for model in (R2, E1):
        for j in range(1, model.J + 1):
            for i in range(-1, 5):
                base = l_dim(model, j, i, 1)
                for n in (2, 3, 4):
                    assert l_dim(model, j, i, n) == n * base


def test_lambda_sum_values():
    # genus 1, q=3, J=4: degree 0 only the principal class counts
    assert lambda_sum(E1, 0, 2) == 3**2 - 1
    assert lambda_sum(E1, 1, 2) == 4 * (3**2 - 1)
    assert lambda_sum(E1, -3, 2) == 0


def test_genus0_section_basis():
    # a = m*oo: polynomials of degree <= m
    basis = genus0_section_basis(K2, Divisor({INFINITY: 2}))
    assert [f.num for f in basis] == [(1,), (0, 1), (0, 0, 1)]
    # a = 0: constants
    basis = genus0_section_basis(K2, Divisor({}))
    assert [f.num for f in basis] == [(1,)]
    # negative degree: empty
    assert genus0_section_basis(K2, Divisor({INFINITY: -1})) == []


def test_genus0_basis_membership_and_span_size():
    # degree-2 divisor (T) + oo: dimension 3, checked by brute membership
    div = Divisor({Place(T): 1, INFINITY: 1})
    basis = genus0_section_basis(K2, div)
    assert len(basis) == 3
    for f in basis:
        assert section_space_contains(K2, div, f)
    # span cardinality equals q^(deg + 1): combinations c0/T + c1 + c2*T
    span = set()
    for coeffs in itertools.product(range(2), repeat=3):
        num = poly.normalize(coeffs)  # over the common denominator T
        x = rf(K2, num, T)
        span.add((x.num, x.den))
    assert len(span) == 2**3
    # brute membership over a candidate pool finds exactly the span
    members = set()
    for num in poly.enumerate_polys(K2, 4):
        for den in (poly.ONE, T, (0, 0, 1)):
            x = rf(K2, num, den)
            if section_space_contains(K2, div, x):
                members.add((x.num, x.den))
    assert members == span


def test_vector_space_basis():
    div = Divisor({INFINITY: 1})
    vecs = genus0_basis(K2, div, 2)
    assert len(vecs) == 4  # n * (deg + 1)
    for vec in vecs:
        assert len(vec) == 2


def test_class_sum_identity():
    for model in (R2, E1):
        assert class_sum_identity_check(model, 8)


def test_reflection_identity_genus1():
    for n in (1, 2, 3):
        assert reflection_identity_check(E1, 0, n)
    with pytest.raises(ValueError):
        reflection_identity_check(R2, 0, 2)


def test_clifford_sum_bound_values():
    # q=3, J=4, genus 1, degree 0: sum is q^n - 1, bound n(q-1)a(0)q^(n-1)
    assert lambda_sum(E1, 0, 2) == 8
    assert clifford_sum_check(E1, 0, 2)  # 8^2 = 64 <= (2*2)^2 * 3^2 = 144
    assert clifford_sum_check(E1, 0, 3)  # 26^2 <= (3*2)^2 * 3^4


def test_clifford_and_reflection_all_enumerated_genus1():
    for f in enumerate_quadratic_fields(3, 4):
        model = build_class_model(f.descriptor)
        for i in range(0, 2 * model.g - 1):
            for n in (2, 3):
                assert clifford_sum_check(model, i, n)
                assert reflection_identity_check(model, i, n)


def _genus2_table(desc):
    """Multiset-valid class table for a hyperelliptic genus-2 descriptor:
    degree 0 has one principal class; degree 1 has a(1) point classes;
    degree 2 = canonical degree has the canonical class (dim 2) and J-1
    classes of dimension 1."""
    J = desc.J
    a = divisor_counts(desc, 2)
    col0 = [1] + [0] * (J - 1)
    col1 = [1] * a[1] + [0] * (J - a[1])
    col2 = [2] + [1] * (J - 1)
    return tuple((col0[j], col1[j], col2[j]) for j in range(J))


def test_genus2_external_table_accepted_and_validated():
    fields = [f for f in enumerate_quadratic_fields(3, 5) if f.genus == 2]
    f = fields[0]
    assert f.J >= divisor_counts(f.descriptor, 1)[1]  # point classes embed
    desc = CurveDescriptor(f.q, 2, f.descriptor.L, class_dims=_genus2_table(f.descriptor))
    model = build_class_model(desc)
    assert class_sum_identity_check(model, 6)
    for i in (0, 1, 2):
        for n in (1, 2, 3):
            assert reflection_identity_check(model, i, n)
            assert clifford_sum_check(model, i, n)


def test_genus2_table_rejections():
    fields = [f for f in enumerate_quadratic_fields(3, 5) if f.genus == 2]
    desc = fields[0].descriptor
    good = _genus2_table(desc)
    with pytest.raises(DescriptorError):
        build_class_model(CurveDescriptor(desc.q, 2, desc.L))  # table missing
    # Clifford violation
    bad = (tuple([3] + list(good[0][1:])),) + good[1:]
    with pytest.raises(DescriptorError):
        build_class_model(CurveDescriptor(desc.q, 2, desc.L, class_dims=bad))
    # two principal classes at degree 0
    bad = (good[0], (1,) + good[1][1:]) + good[2:]
    with pytest.raises(DescriptorError):
        build_class_model(CurveDescriptor(desc.q, 2, desc.L, class_dims=bad))
    # class-sum identity broken (swap a degree-2 dim from 1 to 0)
    bad = good[:-1] + ((good[-1][0], good[-1][1], 0),)
    with pytest.raises(DescriptorError):
        build_class_model(CurveDescriptor(desc.q, 2, desc.L, class_dims=bad))


def test_class_dimension_degree_window():
    assert class_dimension(E1, 1, 7) == 7  # i + 1 - g above the window
    assert class_dimension(R2, 1, 4) == 5
