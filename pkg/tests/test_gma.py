import pytest

from detlaw.errors import GmaAxiomFailure
from detlaw.fields import make_field
from detlaw.gma import (GmaData, adapted_points, adapted_scheme, canonical_det,
                        gma_from_characters, gma_full, torus_orbits,
                        trace_form, verify_gma)
from detlaw.groups import symmetric, with_inertia
from detlaw.pseudo import PseudoRep, det_law, matrix_algebra
from detlaw.reps import characters, direct_sum

F3 = make_field(3)
F5 = make_field(5)


def _m2_split_gma(field):
    """M_2(F) regarded as a type-(1,1) GMA on the diagonal idempotents."""
    A = matrix_algebra(field, 2)
    units = [[[A.basis_vec(0)]], [[A.basis_vec(3)]]]
    return GmaData(A, (1, 1), units)


def _s3_gma(field):
    S3 = symmetric(3)
    cs = characters(S3, field)
    data, law, project = gma_from_characters(S3, [cs[0], cs[1]], field)
    return data, law


def test_full_matrix_gma_verifies():
    for d in (1, 2, 3):
        data = gma_full(F3, d)
        report = verify_gma(data)
        assert report.ok, report.failures()


def test_full_matrix_canonical_det_is_det():
    for d in (1, 2):
        data = gma_full(F5, d)
        D = canonical_det(data)
        assert D.equals(det_law(F5, d))


def test_canonical_det_cycle_start_invariance():
    for data in (gma_full(F5, 2), _m2_split_gma(F5), _s3_gma(F3)[0]):
        dmin = canonical_det(data, start="min")
        dmax = canonical_det(data, start="max")
        assert dmin.poly == dmax.poly


def test_trace_form_matches_lambda1():
    data = gma_full(F5, 2)
    D = canonical_det(data)
    assert trace_form(data) == D.trace_form()


def test_type_1_1_gma_on_m2():
    data = _m2_split_gma(F5)
    assert verify_gma(data).ok
    D = canonical_det(data)
    assert D.equals(det_law(F5, 2))


def test_broken_units_detected():
    A = matrix_algebra(F5, 2)
    # swap one idempotent for a non-idempotent element
    units = [[[A.basis_vec(1)]], [[A.basis_vec(3)]]]
    data = GmaData(A, (1, 1), units)
    assert not verify_gma(data).ok
    with pytest.raises(GmaAxiomFailure):
        canonical_det(data)


def test_gma_from_characters_s3():
    data, law = _s3_gma(F3)
    assert verify_gma(data).ok
    # idempotents are orthogonal and sum to 1
    A = data.parent
    for i in range(2):
        for j in range(2):
            prod = A.mul(data.e[i], data.e[j])
            assert prod == (data.e[i] if i == j else A.zero_vec())
    total = A.add(data.e[0], data.e[1])
    assert total == A.unit
    assert canonical_det(data).equals(law)


def test_adapted_scheme_m2_split():
    # M_2 as a (1,1) GMA: one variable per off-diagonal entry, relation bc = 1
    data = _m2_split_gma(F5)
    scheme = adapted_scheme(data)
    assert len(scheme.vars) == 2
    assert len(scheme.relations) == 1
    rel = scheme.relations[0]
    assert rel.degree() == 2 and rel.constant_code() == F5.neg(1)
    points, reps = adapted_points(scheme, F5)
    assert len(points) == 4  # b free in F*, c = 1/b
    orbits = torus_orbits(scheme, F5, points)
    assert len(orbits) == 1
    for rep in reps:
        assert PseudoRep.induce(rep).equals(det_law(F5, 2))


def test_adapted_scheme_s3():
    data, law = _s3_gma(F3)
    scheme = adapted_scheme(data)
    assert scheme.universal_is_homomorphism()[0]
    points, reps = adapted_points(scheme, F3)
    assert len(points) == 5  # bc = 0: two lines through the origin
    orbits = torus_orbits(scheme, F3, points)
    assert len(orbits) == 3
    for rep in reps:
        assert PseudoRep.induce(rep).equals(law)


def test_universal_det_reduces_to_law():
    data, law = _s3_gma(F3)
    scheme = adapted_scheme(data)
    det = scheme.universal_det()
    # after reduction no scheme variable survives: the law is constant on
    # the adapted family
    nv = len(scheme.vars)
    assert all(sum(e[:nv]) == 0 for e in det.terms)
