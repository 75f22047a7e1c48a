import pytest

from detlaw.errors import UnknownPseudoRep
from detlaw.fields import make_field
from detlaw.groups import cyclic, symmetric
from detlaw.moduli import (degeneration_lands_in_closed_orbit,
                           degeneration_limit, invariants_separate_laws,
                           orbit_partition, psi_fiber, word_invariant_vector,
                           word_invariants)
from detlaw.pseudo import PseudoRep, det_law
from detlaw.reps import characters, direct_sum, semisimplify

F3 = make_field(3)
F7 = make_field(7)


def test_orbit_partition_methods_agree():
    for G in (cyclic(3), symmetric(3)):
        direct = orbit_partition(G, 2, F3, method="direct")
        classes = orbit_partition(G, 2, F3, method="classes")
        key = lambda r: sorted((o.size, o.is_closed) for o in r.orbits)
        assert key(direct) == key(classes)
        assert direct.total_points == classes.total_points
        assert len(direct.pseudoreps) == len(classes.pseudoreps)


def test_c3_f7_six_classes():
    report = orbit_partition(cyclic(3), 2, F7)
    assert len(report.pseudoreps) == 6
    # the map to laws has exactly one closed orbit per fiber
    for idx, members in report.fiber_map.items():
        closed = [i for i in members if report.orbits[i].is_closed]
        assert len(closed) == 1


def test_closed_iff_semisimple():
    report = orbit_partition(symmetric(3), 2, F3)
    for o in report.orbits:
        from detlaw.reps import isomorphic
        ss = semisimplify(o.rep).direct_sum_rep()
        assert o.is_closed == isomorphic(o.rep, ss)


def test_psi_fiber_c3_f3():
    # the law of 1 + 1 on C3 over F3 has a non-split unipotent companion
    C3 = cyclic(3)
    report = orbit_partition(C3, 2, F3)
    cs = characters(C3, F3)
    D = PseudoRep.induce(direct_sum(cs[0], cs[0]))
    fib = psi_fiber(report, D)
    assert len(fib.orbit_indices) >= 2
    closed = fib.closed_index
    assert report.orbits[closed].is_closed


def test_psi_fiber_unknown_law():
    report = orbit_partition(cyclic(3), 2, F3)
    with pytest.raises(UnknownPseudoRep):
        psi_fiber(report, det_law(F3, 2))


def test_degeneration_lands_in_closed_orbit():
    report = orbit_partition(symmetric(3), 2, F3)
    for i, o in enumerate(report.orbits):
        if not o.is_closed:
            assert degeneration_lands_in_closed_orbit(report, i)


def test_degeneration_limit_is_semisimple():
    report = orbit_partition(cyclic(3), 2, F3)
    for o in report.orbits:
        lim = degeneration_limit(o.rep)
        from detlaw.reps import isomorphic
        assert isomorphic(lim, semisimplify(lim).direct_sum_rep())


def test_word_invariants_constant_on_orbits():
    report = orbit_partition(symmetric(3), 2, F3)
    vectors = word_invariants(report, maxlen=2)
    assert len(vectors) == len(report.orbits)


def test_invariants_separate_laws_s3_f3():
    report = orbit_partition(symmetric(3), 2, F3)
    assert invariants_separate_laws(report, maxlen=3)
