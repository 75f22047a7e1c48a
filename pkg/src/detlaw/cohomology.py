"""Group cohomology Ext^1 between representations by exact cocycle linear
algebra, and the stratification of a multiplicity-free psi-fiber into
projective spaces of extensions around the semisimple point.
"""

from itertools import product

from .errors import NotMultiplicityFree
from .linalg import Mat, nullspace, rref, in_span, span_dim
from .pseudo import PseudoRep
from .reps import Representation, direct_sum, invariant_subspace, isomorphic


class Ext1Space:
    """Extensions of rep2 (quotient) by rep1 (sub): cocycles modulo
    coboundaries for the action c(gh) = rho1(g) c(h) + c(g) rho2(h)."""

    def __init__(self, group, field, rep1, rep2, z_basis, b_basis):
        self.group = group
        self.field = field
        self.rep1 = rep1
        self.rep2 = rep2
        self.z_basis = z_basis
        self.b_basis = b_basis
        self.dim = len(z_basis) - len(b_basis)
        assert self.dim >= 0

    def cocycle_matrices(self, vec):
        """Unflatten a cocycle vector into one d1 x d2 block per element."""
        d1, d2 = self.rep1.dim, self.rep2.dim
        block = d1 * d2
        out = []
        for g in range(self.group.order):
            out.append(Mat(self.field, d1, d2, vec[g * block:(g + 1) * block]))
        return out

    def is_coboundary(self, vec):
        basis, pivots = rref(self.field, self.b_basis)
        return in_span(self.field, vec, basis, pivots)

    def __repr__(self):
        return (f"Ext1({self.group.name}: dimZ={len(self.z_basis)}, "
                f"dimB={len(self.b_basis)}, dim={self.dim})")


def ext1(group, rep1, rep2):
    """Ext^1_G(rep2, rep1) with explicit cocycle and coboundary bases.

    Unknowns are the blocks c(g) for every group element; the cocycle
    condition is imposed on all pairs, which subsumes any generator and
    relation presentation.
    """
    assert rep1.field == rep2.field and rep1.source is rep2.source
    F = rep1.field
    n = group.order
    d1, d2 = rep1.dim, rep2.dim
    block = d1 * d2
    nvars = n * block

    def slot(g, i, j):
        return g * block + i * d2 + j

    rows = []
    for g in range(n):
        for h in range(n):
            gh = group.table[g][h]
            for i in range(d1):
                for j in range(d2):
                    row = [0] * nvars
                    row[slot(gh, i, j)] = F.add(row[slot(gh, i, j)], 1)
                    # -(rho1(g) c(h))_{ij}
                    for k in range(d1):
                        a = rep1.images[g][i, k]
                        if a:
                            row[slot(h, k, j)] = F.sub(row[slot(h, k, j)], a)
                    # -(c(g) rho2(h))_{ij}
                    for k in range(d2):
                        a = rep2.images[h][k, j]
                        if a:
                            row[slot(g, i, k)] = F.sub(row[slot(g, i, k)], a)
                    rows.append(tuple(row))
    # normalization c(identity) = 0 follows from the pair equations, but pin
    # it anyway so the basis is canonical
    e = group.identity
    for i in range(d1):
        for j in range(d2):
            row = [0] * nvars
            row[slot(e, i, j)] = 1
            rows.append(tuple(row))
    z_basis = nullspace(F, rows, nvars)
    b_rows = []
    for i in range(d1):
        for j in range(d2):
            M = Mat(F, d1, d2, [1 if (a, b) == (i, j) else 0
                                for a in range(d1) for b in range(d2)])
            vec = []
            for g in range(n):
                cb = M * rep2.images[g] - rep1.images[g] * M
                vec.extend(cb.data)
            b_rows.append(tuple(vec))
    b_basis, _ = rref(F, b_rows)
    z_canon, _ = rref(F, z_basis)
    return Ext1Space(group, F, rep1, rep2, list(z_canon), list(b_basis))


def assemble_extension(space, vec):
    """The block-triangular representation [[rho1, c], [0, rho2]]."""
    F = space.field
    d1, d2 = space.rep1.dim, space.rep2.dim
    d = d1 + d2
    blocks = space.cocycle_matrices(vec)
    images = []
    for g in range(space.group.order):
        data = []
        for i in range(d1):
            data.extend(space.rep1.images[g].rows()[i])
            data.extend(blocks[g].rows()[i])
        for i in range(d2):
            data.extend([0] * d1)
            data.extend(space.rep2.images[g].rows()[i])
        images.append(Mat(F, d, d, data))
    return Representation(space.group, F, d, images, check_now=False)


def proj_point_count(q, m):
    return (q ** m - 1) // (q - 1)


class FiberStratification:
    """A multiplicity-free fiber as P(ext up) + semisimple + P(ext down)."""

    def __init__(self, group, field, chi, psi, ext_up, ext_down, strata=None):
        self.group = group
        self.field = field
        self.chi = chi
        self.psi = psi
        self.ext_up = ext_up
        self.ext_down = ext_down
        self.strata = strata  # optional orbit-index lists (up, ss, down)

    @property
    def m_up(self):
        return self.ext_up.dim

    @property
    def m_down(self):
        return self.ext_down.dim

    def counts(self):
        q = self.field.q
        return (proj_point_count(q, self.m_up), 1, proj_point_count(q, self.m_down))

    def total(self):
        return sum(self.counts())

    def __repr__(self):
        return (f"FiberStratification({self.group.name}/{self.field}: "
                f"{self.counts()})")


def fiber_stratify(group, chi, psi, field, orbit_report=None):
    """Stratify the fiber over psi(chi + psi) for distinct characters.

    ``ext up'' holds the non-split extensions with sub chi and quotient psi;
    ``ext down'' the opposite.  When an orbit report is supplied, fiber
    orbits are classified into strata and the counts must agree.
    """
    if chi.dim != 1 or psi.dim != 1:
        raise NotMultiplicityFree("strata require one-dimensional characters")
    if chi.images == psi.images:
        raise NotMultiplicityFree("characters coincide")
    up = ext1(group, chi, psi)
    down = ext1(group, psi, chi)
    strata = None
    if orbit_report is not None:
        from .moduli import psi_fiber

        D = PseudoRep.induce(direct_sum(chi, psi))
        fiber = psi_fiber(orbit_report, D)
        ss, ups, downs = [], [], []
        for idx in fiber.orbit_indices:
            o = orbit_report.orbits[idx]
            if o.is_closed:
                ss.append(idx)
                continue
            rows = invariant_subspace(o.rep)
            assert rows is not None and len(rows) == 1
            from .reps import sub_quotient_reps

            sub, quo = sub_quotient_reps(o.rep, rows)
            if sub.images == chi.images:
                ups.append(idx)
            else:
                assert sub.images == psi.images
                downs.append(idx)
        strata = (tuple(ups), tuple(ss), tuple(downs))
        q = field.q
        want = (proj_point_count(q, up.dim), 1, proj_point_count(q, down.dim))
        got = (len(ups), len(ss), len(downs))
        assert got == want, f"stratum counts {got} disagree with {want}"
    return FiberStratification(group, field, chi, psi, up, down, strata)


def ext_representatives(space):
    """One representative cocycle per projective class of Ext^1."""
    F = space.field
    q = F.q
    m = len(space.z_basis)
    out = []
    seen_classes = []
    for coeffs in product(range(q), repeat=m):
        if all(c == 0 for c in coeffs):
            continue
        vec = [0] * len(space.z_basis[0])
        for c, b in zip(coeffs, space.z_basis):
            if c:
                for i, x in enumerate(b):
                    vec[i] = F.add(vec[i], F.mul(c, x))
        vec = tuple(vec)
        if space.is_coboundary(vec):
            continue
        cls = _ext_class_key(space, vec)
        if cls in seen_classes:
            continue
        seen_classes.append(cls)
        out.append(vec)
    return out


def _ext_class_key(space, vec):
    """Projective Ext class: the span of vec together with the coboundaries."""
    rows = list(space.b_basis) + [vec]
    basis, _ = rref(space.field, rows)
    return tuple(basis)
