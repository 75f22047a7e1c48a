import pytest

from detlaw.cohomology import (assemble_extension, ext1, ext_representatives,
                               fiber_stratify, proj_point_count)
from detlaw.errors import NotMultiplicityFree
from detlaw.fields import make_field
from detlaw.groups import cyclic, semidirect_cyclic_squared, symmetric
from detlaw.moduli import orbit_partition
from detlaw.reps import characters, invariant_subspace, isomorphic, trivial_rep

F3 = make_field(3)
F5 = make_field(5)


def test_ext1_cp_trivial_trivial():
    # H^1(C_p, F_p) = Hom(C_p, F_p) is one-dimensional
    C3 = cyclic(3)
    t = trivial_rep(C3, F3)
    space = ext1(C3, t, t)
    assert space.dim == 1


def test_ext1_vanishes_in_coprime_characteristic():
    C3 = cyclic(3)
    t = trivial_rep(C3, F5)
    assert ext1(C3, t, t).dim == 0
    S3 = symmetric(3)
    cs = characters(S3, F5)
    assert ext1(S3, cs[0], cs[1]).dim == 0


def test_ext1_s3_f3_characters():
    S3 = symmetric(3)
    cs = characters(S3, F3)
    triv = next(c for c in cs if all(m[0, 0] == 1 for m in c.images))
    sgn = next(c for c in cs if c is not triv)
    # both directions are one-dimensional: the cocycle lives on the 3-cycles
    assert ext1(S3, triv, sgn).dim == 1
    assert ext1(S3, sgn, triv).dim == 1


def test_cocycles_satisfy_the_relation():
    S3 = symmetric(3)
    cs = characters(S3, F3)
    space = ext1(S3, cs[0], cs[1])
    F = space.field
    for vec in space.z_basis:
        c = space.cocycle_matrices(vec)
        for g in range(6):
            for h in range(6):
                gh = S3.table[g][h]
                want = space.rep1.images[g] * c[h] + c[g] * space.rep2.images[h]
                assert c[gh] == want


def test_assembled_extension_is_a_representation():
    S3 = symmetric(3)
    cs = characters(S3, F3)
    triv = next(c for c in cs if all(m[0, 0] == 1 for m in c.images))
    sgn = next(c for c in cs if c is not triv)
    space = ext1(S3, triv, sgn)
    for vec in ext_representatives(space):
        rep = assemble_extension(space, vec)
        assert rep.check()
        # non-split: the only stable line is the sub
        rows = invariant_subspace(rep)
        assert rows is not None


def test_ext_representatives_projective_count():
    C3 = cyclic(3)
    t = trivial_rep(C3, F3)
    space = ext1(C3, t, t)
    reps = ext_representatives(space)
    assert len(reps) == proj_point_count(3, space.dim)


def test_fiber_stratify_s3_f3():
    S3 = symmetric(3)
    cs = characters(S3, F3)
    triv = next(c for c in cs if all(m[0, 0] == 1 for m in c.images))
    sgn = next(c for c in cs if c is not triv)
    report = orbit_partition(S3, 2, F3)
    strat = fiber_stratify(S3, sgn, triv, F3, orbit_report=report)
    assert strat.counts() == (1, 1, 1)
    assert strat.strata is not None
    ups, ss, downs = strat.strata
    assert len(ups) == 1 and len(ss) == 1 and len(downs) == 1


def test_fiber_stratify_rejects_equal_characters():
    S3 = symmetric(3)
    cs = characters(S3, F3)
    with pytest.raises(NotMultiplicityFree):
        fiber_stratify(S3, cs[0], cs[0], F3)


def test_designated_instance_p_plus_2():
    # (C5 x C5) : C4 over F5 with the action character: Ext dims (2, 0),
    # so the fiber is P^1(F_5) + point: 7 = p + 2 orbits
    G = semidirect_cyclic_squared(5, 4, 2)
    F = F5
    cs = characters(G, F)
    triv = next(c for c in cs if all(m[0, 0] == 1 for m in c.images))
    chi = next(c for c in cs
               if ext1(G, c, triv).dim == 2)
    strat = fiber_stratify(G, chi, triv, F)
    assert strat.m_up == 2 and strat.m_down == 0
    assert strat.counts() == (6, 1, 0)
    assert strat.total() == 5 + 2
