"""Isomorphism-invariant fingerprints, branch discriminants, flag-constrained
isomorphism search, classification to catalog labels, census harnesses, and
the brute-force dim-4 orbit oracle.

The classification routes an algebra by invariants (center dimension and
isotropy, lower-central dimensions, product-subspace flags, the A/B/C
trichotomies) to a catalog branch; parametrized branches are then resolved by
an explicit isomorphism search against the family representatives.
"""

from __future__ import annotations

import itertools

from .field import UnsupportedField
from . import catalog as cat
from .linalg import (
    is_isotropic,
    mat_mul,
    rref,
    solve_affine,
    subspace_join,
    subspace_meet,
    subspace_span,
    vec_add,
    vec_scale,
    zero_vector,
)
from .saa_core import (
    SAAlgebra,
    ann_in,
    central_series,
    from_presentation,
    is_nilpotent,
    nilpotency_class,
    presentation_from_values,
    nilpotent_parameter_slots,
    NotNilpotentError,
)


class ClassifyError(Exception):
    pass


class WrongBranch(ClassifyError):
    pass


class PhiNotBijective(ClassifyError):
    pass


class FieldMismatch(ClassifyError):
    pass


class DimMismatch(ClassifyError):
    pass


class NoMatch(ClassifyError):
    def __init__(self, message, fingerprint=None):
        super().__init__(message)
        self.fingerprint = fingerprint


class TooLargeForExhaustive(ClassifyError):
    pass


# ---------------------------------------------------------------------------
# invariant subspaces


def _complement_vectors(alg, small, big):
    """Rows of big extending a basis of small inside big, in rref order."""
    out = []
    cur = small
    for row in big.rows:
        if not cur.contains(row):
            out.append(row)
            cur = subspace_join(cur, alg.span([row]))
    return out


def _named_base_subspaces(alg):
    """Lower/upper central terms and the small product subspaces, by name."""
    s = central_series(alg)
    named = {}
    k = 2
    while True:
        t = s.lower_term(k)
        if t.dim in (0, alg.dim):
            break
        named[f"L{k}"] = t
        k += 1
    k = 1
    while True:
        t = s.upper_term(k)
        if t.dim in (0, alg.dim):
            break
        named[f"Z{k}"] = t
        k += 1

    def lower(i):
        return s.lower_term(i)

    for (i, j) in [(2, 2), (3, 2), (3, 3), (4, 2), (4, 3), (5, 2), (5, 3)]:
        a, b = lower(i), lower(j)
        if a.dim and b.dim:
            p = alg.subspace_product(a, b)
            if 0 < p.dim:
                named[f"P{i}{j}"] = p
    return s, named


def _branch_extras(alg, series, named, branch):
    """The chapter-specific characteristic subspaces, keyed by stable names."""
    extras = {}
    s = series
    if branch is None:
        return extras
    if branch.startswith("d10-z3-5"):
        p22 = named.get("P22", alg.span([]))
        v = alg.perp(p22)
        extras["V"] = v
        extras["V2"] = alg.subspace_product(v, v)
    elif branch.startswith("d10-z3-6-ne"):
        l3l2 = named.get("P32", alg.span([]))
        target = subspace_meet(l3l2, s.lower_term(5))
        u = ann_in(alg, s.lower_term(3), s.lower_term(2), target)
        extras["U"] = u
        extras["UZ4"] = alg.subspace_product(u, s.upper_term(4))
    elif branch.startswith("d10-z2-7"):
        l5l2 = named.get("P52", alg.span([]))
        l4l3 = named.get("P43", alg.span([]))
        iks = [l5l2, s.upper_term(1), s.upper_term(2)]
        u = None
        for ik in iks:
            if subspace_meet(ik, l4l3).dim > 0:
                u = ann_in(alg, s.lower_term(4), s.lower_term(3), ik)
                break
        if u is not None:
            extras["U"] = u
            extras["UL2"] = alg.subspace_product(u, s.lower_term(2))
    elif branch in ("d10-z7", "d10-z5n", "d10-z4n"):
        z = s.upper_term(1)
        extras["Ziso"] = subspace_meet(z, alg.perp(z))
    return extras


def branch_of(alg):
    """Route a nilpotent algebra of dimension <= 10 to its catalog branch key."""
    if not is_nilpotent(alg):
        raise NotNilpotentError("classification requires a nilpotent algebra")
    s = central_series(alg)
    d = alg.dim
    if s.lower_term(2).dim == 0:
        return f"A{d}"
    z = s.upper_term(1)
    iso = is_isotropic(z, alg.form)
    if d == 6:
        if iso and z.dim == 3:
            return "d6"
        raise NoMatch(f"unexpected dim-6 shape: center dim {z.dim}")
    if d == 8:
        if not iso:
            if z.dim == 5:
                return "d8-z5"
        elif z.dim == 3:
            return "d8-z3"
        elif z.dim == 2:
            return "d8-z2"
        raise NoMatch(f"unexpected dim-8 shape: center dim {z.dim}, isotropic {iso}")
    if d != 10:
        raise NoMatch(f"no classification branch for dimension {d}")
    if not iso:
        if z.dim == 7:
            return "d10-z7"
        if z.dim == 5:
            return "d10-z5n"
        if z.dim == 4:
            return "d10-z4n"
        raise NoMatch(f"unexpected non-isotropic center of dim {z.dim}")
    if z.dim == 5:
        return "d10-z5"
    if z.dim == 4:
        l3 = s.lower_term(3)
        if l3.dim == 3:
            return "d10-z4-small"
        if l3.dim == 4:
            t = type_abc(alg)
            return {"A": "d10-z4-A", "B": "d10-z4-B", "C": "d10-z4-C"}[t]
        raise NoMatch(f"center dim 4 with dim L^3 = {l3.dim}")
    if z.dim == 3:
        l3 = s.lower_term(3)
        if l3.dim == 5:
            p22 = alg.subspace_product(s.lower_term(2), s.lower_term(2))
            v = alg.perp(p22)
            v2 = alg.subspace_product(v, v)
            if s.lower_term(4).contains_subspace(v2):
                return "d10-z3-5-1"
            if l3.contains_subspace(v2):
                return "d10-z3-5-2"
            if s.lower_term(2).contains_subspace(v2):
                return "d10-z3-5-3"
            raise NoMatch("center dim 3, dim L^3 = 5, but V^2 is not inside L^2")
        if l3.dim == 6:
            l3l2 = alg.subspace_product(l3, s.lower_term(2))
            l5 = s.lower_term(5)
            if l3l2 != l5:
                target = subspace_meet(l3l2, l5)
                u = ann_in(alg, l3, s.lower_term(2), target)
                uz4 = alg.subspace_product(u, s.upper_term(4))
                if uz4.dim == 1:
                    return "d10-z3-6-ne-1"
                if uz4.dim == 2:
                    return "d10-z3-6-ne-2"
                raise NoMatch(f"unexpected dim {uz4.dim} for U Z4")
            kind, _poly = tau_minpoly(alg)
            if kind == "distinct_roots":
                return "d10-z3-6-eq-A"
            if kind == "double_root":
                return "d10-z3-6-eq-B"
            if alg.field.char == 2 and _poly_linear_term(alg, _poly):
                return "d10-z3-6-eq-C2"
            return "d10-z3-6-eq-C"
        raise NoMatch(f"center dim 3 with dim L^3 = {l3.dim}")
    if z.dim == 2:
        cls = s.cls
        if cls == 6:
            l3 = s.lower_term(3)
            l3l3 = alg.subspace_product(l3, l3)
            if z.contains_subspace(l3l3):
                return "d10-z2-6-in"
            return "d10-z2-6-out"
        if cls == 7:
            l5l2 = alg.subspace_product(s.lower_term(5), s.lower_term(2))
            l4l3 = alg.subspace_product(s.lower_term(4), s.lower_term(3))
            l7 = s.lower_term(7)
            iks = [l5l2, s.upper_term(1), s.upper_term(2)]
            u = None
            for ik in iks:
                if subspace_meet(ik, l4l3).dim > 0:
                    u = ann_in(alg, s.lower_term(4), s.lower_term(3), ik)
                    break
            if u is None:
                raise NoMatch("class-7 shape without the expected product ladder")
            ul2 = alg.subspace_product(u, s.lower_term(2))
            if l4l3 == l7:
                if ul2.dim == 1:
                    return "d10-z2-7-eq-1"
                if ul2.dim == 2:
                    return "d10-z2-7-eq-2"
                raise NoMatch(f"unexpected dim {ul2.dim} for U L2")
            if l4l3.contains_subspace(l5l2):
                if ul2.dim == 1:
                    return "d10-z2-7-ne-in-1"
                if ul2.dim == 2:
                    return "d10-z2-7-ne-in-2"
                raise NoMatch(f"unexpected dim {ul2.dim} for U L2")
            return "d10-z2-7-ne-out"
        raise NoMatch(f"center dim 2 with class {cls}")
    raise NoMatch(f"unexpected isotropic center of dim {z.dim}")


def _poly_linear_term(alg, poly):
    p, _q = poly
    return p != alg.field.zero


# ---------------------------------------------------------------------------
# the dim-10 branch discriminants


def type_abc(alg):
    """Degeneracy trichotomy of the auxiliary alternating forms on L/L^2.

    For center dim 4 with L^3 = Z(L): counts, over the projective line of
    L^2/Z(L), how many of the induced forms on L/L^2 are degenerate:
    two or more -> A, exactly one -> B, none -> C.
    """
    f = alg.field
    if not f.is_finite:
        raise UnsupportedField("the trichotomy is decided over finite fields")
    s = central_series(alg)
    z = s.upper_term(1)
    l2 = s.lower_term(2)
    l3 = s.lower_term(3)
    if alg.dim != 10 or not is_isotropic(z, alg.form) or z.dim != 4 or l3 != z:
        raise WrongBranch("trichotomy applies to dim 10, isotropic center dim 4, L^3 = Z")
    zreps = _complement_vectors(alg, z, l2)
    if len(zreps) != 2:
        raise WrongBranch("L^2/Z is not 2-dimensional")
    comp = _complement_vectors(alg, l2, alg.full_subspace())
    degenerate = 0
    for a, b in _projective_line(f):
        zv = vec_add(f, vec_scale(f, a, zreps[0]), vec_scale(f, b, zreps[1]))
        rows = [tuple(alg.pair(alg.product(zv, u), v) for v in comp) for u in comp]
        _, piv = rref(f, rows)
        if len(piv) < 4:
            degenerate += 1
    if degenerate >= 2:
        return "A"
    if degenerate == 1:
        return "B"
    alpha, beta = type_c_params(alg)
    if not f.poly2_irreducible(alpha, beta):
        raise WrongBranch("type C detected but the associated quadratic is reducible")
    return "C"


def _projective_line(f):
    pts = [(f.one, t) for t in f.elements()]
    pts.append((f.zero, f.one))
    return pts


def _type_c_frame(alg):
    """Quotient data for the type-C geometry: complement basis of L/L^2 and a
    symplectic pair (x1, y1) spanning L^2 over Z."""
    f = alg.field
    s = central_series(alg)
    z = s.upper_term(1)
    l2 = s.lower_term(2)
    comp = _complement_vectors(alg, l2, alg.full_subspace())
    x1, y1 = _complement_vectors(alg, z, l2)
    c = alg.pair(x1, y1)
    if c == f.zero:
        raise WrongBranch("could not normalize a symplectic pair in L^2/Z")
    y1 = vec_scale(f, f.inv(c), y1)
    return comp, x1, y1


def total_isotropic_planes(alg):
    """All totally isotropic planes of L/L^2 (center dim 4, L^3 = Z branch),
    as subspaces in quotient coordinates over the complement basis."""
    f = alg.field
    comp, x1, y1 = _type_c_frame(alg)
    planes = []
    seen = set()
    for coords in itertools.product(f.elements(), repeat=4):
        if all(c == f.zero for c in coords):
            continue
        u = _coords_to_vec(f, coords, comp)
        pl = _plane_through(alg, (x1, y1), comp, u)
        if pl is not None and pl.rows not in seen:
            seen.add(pl.rows)
            planes.append(pl)
    return planes


def type_c_params(alg, planes=None):
    """The quadratic-coefficient pair (alpha, beta) of a type-C algebra,
    extracted from a pair of distinct totally isotropic planes of L/L^2.

    The value does not depend on which pair of planes is used (for the fixed
    deterministic symplectic pair in L^2/Z); passing `planes` overrides the
    default choice so that independence can be checked.
    """
    f = alg.field
    comp, x1, y1 = _type_c_frame(alg)

    def phi(zv, u, v):
        return alg.pair(alg.product(zv, u), v)

    if planes is None:
        found = []
        for coords in itertools.product(f.elements(), repeat=4):
            if all(c == f.zero for c in coords):
                continue
            u = _coords_to_vec(f, coords, comp)
            pl = _plane_through(alg, (x1, y1), comp, u)
            if pl is None:
                raise WrongBranch("no totally isotropic plane; not type C")
            if pl not in found:
                found.append(pl)
            if len(found) == 2:
                break
        if len(found) < 2:
            raise WrongBranch("could not find two distinct totally isotropic planes")
        p1, p2 = found
    else:
        p1, p2 = planes

    y2 = _coords_to_vec(f, p1.rows[0], comp)

    def solve_in_plane(plane, conds):
        # find v in the plane with phi_z(y2, v) = target for each (z, target)
        rows = []
        rhs = []
        for (zv, target) in conds:
            rows.append(tuple(phi(zv, y2, _coords_to_vec(f, pr, comp))
                              for pr in plane.rows))
            rhs.append(target)
        sol = solve_affine(f, rows, rhs)
        if sol is None or sol[1]:
            return None
        v = zero_vector(f, alg.dim)
        for cfk, pr in zip(sol[0], plane.rows):
            v = vec_add(f, v, vec_scale(f, cfk, _coords_to_vec(f, pr, comp)))
        return v

    y5 = solve_in_plane(p2, [(x1, f.zero), (y1, f.one)])
    y3 = solve_in_plane(p2, [(y1, f.zero), (x1, f.one)])
    if y5 is None or y3 is None:
        raise WrongBranch("plane normalization failed; not type C")
    # y4 in P1 with phi_y1(y4, y5) = 0 and phi_y1(y3, y4) = 1
    rows = [tuple(phi(y1, _coords_to_vec(f, pr, comp), y5) for pr in p1.rows),
            tuple(phi(y1, y3, _coords_to_vec(f, pr, comp)) for pr in p1.rows)]
    rhs = [f.zero, f.one]
    sol = solve_affine(f, rows, rhs)
    if sol is None or sol[1]:
        raise WrongBranch("no unique fourth direction; not type C")
    y4 = zero_vector(f, alg.dim)
    for cfk, pr in zip(sol[0], p1.rows):
        y4 = vec_add(f, y4, vec_scale(f, cfk, _coords_to_vec(f, pr, comp)))
    alpha = phi(x1, y3, y4)
    beta = phi(x1, y4, y5)
    return alpha, beta


def _plane_through(alg, zpair, comp, u):
    """The totally isotropic plane of L/L^2 through u, or None."""
    f = alg.field
    from .linalg import nullspace
    rows = [tuple(alg.pair(alg.product(zv, u), cb) for cb in comp) for zv in zpair]
    basis = nullspace(f, rows, 4)
    if len(basis) != 2:
        return None
    vecs = [_coords_to_vec(f, b, comp) for b in basis]
    for zv in zpair:
        for a in vecs:
            for b in vecs:
                if alg.pair(alg.product(zv, a), b) != f.zero:
                    return None
    return subspace_span(f, 4, basis)


def _coords_to_vec(f, coords, basis):
    v = zero_vector(f, len(basis[0]))
    for c, b in zip(coords, basis):
        if c != f.zero:
            v = vec_add(f, v, vec_scale(f, c, b))
    return v


def tau_minpoly(alg, alt_choice=False):
    """Factorization class of the degree-2 minimal polynomial of the composite
    map on the 2-dim piece L^5, for the center-dim-3, dim L^3 = 6,
    L^3 L^2 = L^5 branch.

    Returns (kind, (p, q)) with kind in {distinct_roots, double_root,
    irreducible} and t^2 + p t + q the polynomial.
    """
    f = alg.field
    if not f.is_finite:
        raise UnsupportedField("minimal polynomial classes are decided over finite fields")
    s = central_series(alg)
    z = s.upper_term(1)
    l2, l3, l4, l5 = (s.lower_term(k) for k in (2, 3, 4, 5))
    if (alg.dim != 10 or not is_isotropic(z, alg.form) or z.dim != 3
            or l3.dim != 6 or alg.subspace_product(l3, l2) != l5):
        raise WrongBranch("map composite applies to center dim 3, dim L^3 = 6, L^3 L^2 = L^5")
    z4 = s.upper_term(4)
    y2 = _complement_vectors(alg, l3, l2)[0]
    y3 = _complement_vectors(alg, l2, z4)[0]
    if alt_choice:
        unit = f.elements()[-1]  # a unit: the largest canonical element
        y2 = vec_scale(f, unit, vec_add(f, y2, l3.rows[0]))
        y3 = vec_add(f, y3, y2)
    quot = _complement_vectors(alg, l4, l3)  # basis of L^3 / L^4, 2 vectors
    if len(quot) != 2 or l5.dim != 2:
        raise WrongBranch("graded pieces have unexpected dimensions")

    def in_l5_coords(v):
        # L^5 is 2-dim in rref; coordinates are the pivot entries
        coords = tuple(v[p] for p in l5.pivots)
        check = zero_vector(f, alg.dim)
        for c, r in zip(coords, l5.rows):
            check = vec_add(f, check, vec_scale(f, c, r))
        if check != tuple(v):
            raise WrongBranch("product landed outside L^5")
        return coords

    phi_cols = [in_l5_coords(alg.product(u, y2)) for u in quot]
    psi_cols = [in_l5_coords(alg.product(u, y3)) for u in quot]
    phi = [(phi_cols[0][0], phi_cols[1][0]), (phi_cols[0][1], phi_cols[1][1])]
    det = f.sub(f.mul(phi[0][0], phi[1][1]), f.mul(phi[0][1], phi[1][0]))
    if det == f.zero:
        raise PhiNotBijective("the first quotient map is singular; branch misdetected")
    inv = f.inv(det)
    phi_inv = [(f.mul(inv, phi[1][1]), f.neg(f.mul(inv, phi[0][1]))),
               (f.neg(f.mul(inv, phi[1][0])), f.mul(inv, phi[0][0]))]
    psi = [(psi_cols[0][0], psi_cols[1][0]), (psi_cols[0][1], psi_cols[1][1])]
    tau = [[sum_mul(f, psi[i], [phi_inv[0][j], phi_inv[1][j]]) for j in range(2)]
           for i in range(2)]
    # minimal polynomial of the 2x2 map: t^2 - tr t + det (degree 2 unless scalar)
    tr = f.add(tau[0][0], tau[1][1])
    dt = f.sub(f.mul(tau[0][0], tau[1][1]), f.mul(tau[0][1], tau[1][0]))
    if tau[0][1] == f.zero and tau[1][0] == f.zero and tau[0][0] == tau[1][1]:
        raise WrongBranch("the composite map is scalar; contradicts the branch structure")
    p, q = f.neg(tr), dt
    roots = [t for t in f.elements()
             if f.add(f.mul(t, t), f.add(f.mul(p, t), q)) == f.zero]
    roots = sorted(set(roots))
    if len(roots) == 2:
        return "distinct_roots", (p, q)
    if len(roots) == 1:
        return "double_root", (p, q)
    return "irreducible", (p, q)


def sum_mul(f, row, col):
    acc = f.zero
    for a, b in zip(row, col):
        acc = f.add(acc, f.mul(a, b))
    return acc


# ---------------------------------------------------------------------------
# scale invariants of the parametrized families
#
# The necessity direction of each family's equivalence condition rests on an
# expression in products of complement vectors whose value changes only by a
# controlled power of the base-change determinant.  Evaluating the expression
# on any fixed complement therefore pins the family parameter's power-class,
# giving an isomorphism invariant that separates inequivalent members.


def _pair_expression_tag(alg, kind):
    """Coset tag from the two-generator product expressions.

    kind selects the expression and the power-class k:
      w1: ((uv)u, (uv)v) on a complement of L^2, value in -det^3 r^2 (k=3)
      w2: ((uv)v, (vu)u) on a complement of perp(L^5), value in det^3 r^2 (k=3)
      w3: (((uv)v)(uv), (vu)u) on a complement of L^2, value in det^4 r^3 (k=4)
    Returns the least element of value * (F*)^k, or None if degenerate.
    """
    f = alg.field
    s = central_series(alg)
    if kind in ("w1", "w3"):
        comp = _complement_vectors(alg, s.lower_term(2), alg.full_subspace())
    else:
        z4 = alg.perp(s.lower_term(5))
        comp = _complement_vectors(alg, z4, alg.full_subspace())
    k = 4 if kind == "w3" else 3
    from .field import residue_group
    coset_group = residue_group(f, "kth_powers", k).members
    values = set()
    for i in range(len(comp)):
        for j in range(len(comp)):
            if i == j:
                continue
            u, v = comp[i], comp[j]
            uv = alg.product(u, v)
            if kind == "w1":
                val = alg.pair(alg.product(uv, u), alg.product(uv, v))
            elif kind == "w2":
                val = alg.pair(alg.product(uv, v), alg.product(alg.product(v, u), u))
            else:
                val = alg.pair(alg.product(alg.product(uv, v), uv),
                               alg.product(alg.product(v, u), u))
            if val != f.zero:
                values.add(val)
    if not values:
        return None
    cosets = {min(f.mul(val, g) for g in coset_group) for val in values}
    if len(cosets) != 1:
        return None  # expression failed to be constant; caller falls back
    return cosets.pop()


_SLOT_FAMILIES = {
    # label: ordered slot triples (x_a y_b, y_c) as pair indices (a, b, c)
    "P10(2,4)": [(3, 4, 5), (2, 3, 5), (1, 2, 5), (1, 3, 4), (0, 1, 4)],
    "P10(2,5)": [(2, 3, 5), (3, 4, 5), (1, 2, 5), (0, 1, 3)],
    "P10(2,6)": [(2, 3, 5), (3, 4, 5), (1, 2, 5), (1, 3, 4), (0, 1, 3)],
}
# slot (a, b, c) with a > 0 means (x_a y_b, y_c); a == 0 means (y_b' ...) with
# the triple (y_{b}, y_{b+?}...) -- encoded explicitly below instead.


def _slot_positions(label):
    """The family's nonzero presentation positions as basis-index triples."""
    entry = cat.get_entry(label)
    from .saa_core import basis_index
    out = []
    for (a, b, c, _v) in entry.triples:
        out.append((basis_index(a), basis_index(b), basis_index(c)))
    return out


def _maximal_flag_chain(alg):
    """The x-side of the complete characteristic flag for class-7 dim-10."""
    s = central_series(alg)
    c1 = alg.subspace_product(s.lower_term(5), s.lower_term(2))
    l4l3 = alg.subspace_product(s.lower_term(4), s.lower_term(3))
    iks = [c1, s.upper_term(1), s.upper_term(2)]
    u = None
    for ik in iks:
        if subspace_meet(ik, l4l3).dim > 0:
            u = ann_in(alg, s.lower_term(4), s.lower_term(3), ik)
            break
    chain = [c1, s.upper_term(1), s.upper_term(2), s.lower_term(5), u]
    if any(c is None or c.dim != i + 1 for i, c in enumerate(chain)):
        return None
    return chain


def flag_adapted_basis(alg, chain):
    """Standard basis with x_{n+1-r} spanning chain[r-1] and y_i solved from
    the pairings, deterministic throughout."""
    f = alg.field
    n = alg.n
    xs = [None] * n
    prev = alg.zero_subspace()
    for r, sub in enumerate(chain, start=1):
        pick = None
        for row in sub.rows:
            if not prev.contains(row):
                pick = row
                break
        if pick is None:
            return None
        xs[n - r] = pick
        prev = sub
    ys = [None] * n
    perps = [alg.perp(c) for c in chain]
    for i in range(n):
        # y_{i+1} constrained to perp(chain[n-i-2]) (the dual flag member)
        space = perps[n - i - 2] if n - i - 2 >= 0 else alg.full_subspace()
        rows = []
        rhs = []
        for j in range(n):
            rows.append(tuple(alg.pair(xs[j], b) for b in space.rows))
            rhs.append(f.one if j == i else f.zero)
        for j in range(i):
            rows.append(tuple(alg.pair(ys[j], b) for b in space.rows))
            rhs.append(f.zero)
        sol = solve_affine(f, rows, rhs)
        if sol is None:
            return None
        coeffs = sol[0]
        v = zero_vector(f, alg.dim)
        for c, b in zip(coeffs, space.rows):
            if c != f.zero:
                v = vec_add(f, v, vec_scale(f, c, b))
        ys[i] = v
    basis = []
    for i in range(n):
        basis.append(tuple(xs[i]))
        basis.append(tuple(ys[i]))
    return basis


def _smith_normal_form(a):
    """Smith normal form of a small integer matrix: returns (d, u) with
    u a unimodular row-transform so that u*a is upper-staircase with the
    invariant factors d on the diagonal positions (column ops folded in)."""
    import copy
    m = [row[:] for row in a]
    rows, cols = len(m), len(m[0]) if m else 0
    u = [[1 if i == j else 0 for j in range(rows)] for i in range(rows)]

    def row_op(i, j, q):  # row_i -= q * row_j
        m[i] = [x - q * y for x, y in zip(m[i], m[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_op(i, j, q):  # col_i -= q * col_j
        for r in range(rows):
            m[r][i] -= q * m[r][j]

    t = 0
    while t < min(rows, cols):
        # find a nonzero pivot
        pr = pc = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if m[i][j] != 0 and (best is None or abs(m[i][j]) < best):
                    best, pr, pc = abs(m[i][j]), i, j
        if pr is None:
            break
        m[t], m[pr] = m[pr], m[t]
        u[t], u[pr] = u[pr], u[t]
        for r in range(rows):
            m[r][t], m[r][pc] = m[r][pc], m[r][t]
        changed = True
        while changed:
            changed = False
            for i in range(t + 1, rows):
                if m[i][t]:
                    q = m[i][t] // m[t][t]
                    row_op(i, t, q)
                    if m[i][t]:
                        m[t], m[i] = m[i], m[t]
                        u[t], u[i] = u[i], u[t]
                        changed = True
            for j in range(t + 1, cols):
                if m[t][j]:
                    q = m[t][j] // m[t][t]
                    col_op(j, t, q)
                    if m[t][j]:
                        for r in range(rows):
                            m[r][t], m[r][j] = m[r][j], m[r][t]
                        changed = True
        t += 1
    diag = [m[i][i] if i < cols else 0 for i in range(min(rows, cols))]
    return diag, u


def _torus_solvable(slot_rows, b_logs, modulus):
    """Whether slot_rows . t = b_logs has a solution modulo the unit order."""
    diag, u = _smith_normal_form(slot_rows)
    rows = len(slot_rows)
    ub = []
    for i in range(rows):
        acc = 0
        for j in range(rows):
            acc += u[i][j] * b_logs[j]
        ub.append(acc % modulus)
    for i in range(rows):
        d = diag[i] if i < len(diag) else 0
        from math import gcd
        g = gcd(d % modulus if d else 0, modulus)
        if g == 0:
            if ub[i] % modulus != 0:
                return False
        elif ub[i] % g != 0:
            return False
    return True


def _dlog_table(field):
    for g in field.units():
        seen = {}
        x = field.one
        for e in range(field.order - 1):
            seen[x] = e
            x = field.mul(x, g)
        if len(seen) == field.order - 1:
            return seen
    raise ClassifyError("no primitive element found")


def _slot_values(alg, label):
    """The family slot values read from the flag-adapted presentation."""
    chain = _maximal_flag_chain(alg)
    if chain is None:
        return None
    basis = flag_adapted_basis(alg, chain)
    if basis is None:
        return None
    f = alg.field
    positions = _slot_positions(label)
    prods = {}
    vals = []
    for (a, b, c) in positions:
        v = alg.pair(alg.product(basis[a], basis[b]), basis[c])
        if v == f.zero:
            return None
        vals.append(v)
    return vals


def _slot_weight_rows(label):
    """Integer torus-weight rows of the family's slot positions: the slot
    (x_a y_b, y_c) scales by t_a / (t_b t_c) under the diagonal action."""
    rows = []
    for (a, b, c) in _slot_positions(label):
        w = [0] * 5
        pa, ra = divmod(a, 2)
        pb, _ = divmod(b, 2)
        pc, _ = divmod(c, 2)
        w[pa] += 1 if ra == 0 else -1
        w[pb] -= 1
        w[pc] -= 1
        rows.append(w)
    return rows


def resolve_member_by_slots(alg, label, field, members):
    """Match a class-7 algebra to the family member whose slot values differ
    from the algebra's by a torus rescaling."""
    mine = _slot_values(alg, label)
    if mine is None:
        return None
    dlog = _dlog_table(field)
    modulus = field.order - 1
    rows = _slot_weight_rows(label)
    matches = []
    for params in members:
        ref = cat.instantiate(label, field, params)
        theirs = _slot_values(ref, label)
        if theirs is None:
            return None
        b = [(dlog[m] - dlog[t]) % modulus for m, t in zip(mine, theirs)]
        if _torus_solvable(rows, b, modulus):
            matches.append(params)
    if len(matches) == 1:
        return matches[0]
    return None


_PAIR_TAG_BRANCHES = {
    "d8-z2": "w1",
    "d10-z4n": "w1",
    "d10-z3-6-eq-A": "w2",
    "d10-z3-6-eq-B": "w2",
    "d10-z3-6-eq-C": "w2",
    "d10-z3-6-eq-C2": "w2",
    "d10-z2-6-out": "w3",
}

_SLOT_BRANCHES = {
    "d10-z2-7-eq-2": "P10(2,4)",
    "d10-z2-7-ne-in-1": "P10(2,5)",
    "d10-z2-7-ne-in-2": "P10(2,6)",
}


def scale_tag(alg, branch):
    """Family-parameter invariant for the parametrized branches, or None."""
    if branch in _PAIR_TAG_BRANCHES:
        return _pair_expression_tag(alg, _PAIR_TAG_BRANCHES[branch])
    if branch in _SLOT_BRANCHES:
        label = _SLOT_BRANCHES[branch]
        members = cat.family_members(label, alg.field)
        if len(members) <= 1:
            return None
        got = resolve_member_by_slots(alg, label, alg.field, members)
        if got is None:
            return None
        return tuple(sorted((k, alg.field.to_str(v)) for k, v in got.items()))
    return None


# ---------------------------------------------------------------------------
# fingerprints


class Fingerprint:
    def __init__(self, data):
        self.data = data

    def key(self):
        return tuple(sorted(self.data.items()))

    def __eq__(self, other):
        return isinstance(other, Fingerprint) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def to_json(self):
        return dict(sorted(self.data.items()))

    def __repr__(self):
        return f"Fingerprint({self.to_json()})"


def fingerprint(alg):
    """All the dimension/flag invariants used by the classification; cached."""
    cached = getattr(alg, "_fingerprint", None)
    if cached is not None:
        return cached
    if not is_nilpotent(alg):
        raise NotNilpotentError("fingerprints are defined for nilpotent algebras")
    s = central_series(alg)
    data = {"dim": alg.dim, "field": str(alg.field.spec()), "class": s.cls}
    data["lower_dims"] = tuple(t.dim for t in s.lower)
    data["upper_dims"] = tuple(t.dim for t in s.upper)
    z = s.upper_term(1)
    data["center_dim"] = z.dim
    data["center_isotropic"] = is_isotropic(z, alg.form)
    cls = s.cls
    for (i, j) in [(2, 2), (3, 2), (3, 3), (4, 2), (4, 3), (5, 2)]:
        if cls + 1 >= i and cls + 1 >= j:
            data[f"dim_P{i}{j}"] = alg.subspace_product(s.lower_term(i), s.lower_term(j)).dim
        else:
            data[f"dim_P{i}{j}"] = None
    l3 = s.lower_term(3)
    data["L3_eq_Z"] = (l3 == z) if l3.dim else None
    p32 = alg.subspace_product(l3, s.lower_term(2))
    data["L3L2_le_Z"] = z.contains_subspace(p32) if p32.dim else None
    data["L3L2_eq_L5"] = (p32 == s.lower_term(5)) if cls >= 4 else None
    if cls >= 7:
        p43 = alg.subspace_product(s.lower_term(4), l3)
        p52 = alg.subspace_product(s.lower_term(5), s.lower_term(2))
        data["L4L3_eq_L7"] = p43 == s.lower_term(7)
        data["L5L2_le_L4L3"] = p43.contains_subspace(p52)
    else:
        data["L4L3_eq_L7"] = None
        data["L5L2_le_L4L3"] = None
    try:
        branch = branch_of(alg)
    except (NoMatch, WrongBranch, PhiNotBijective):
        branch = "unrecognized"
    data["branch"] = branch
    _s, named = _named_base_subspaces(alg)
    for name, sub in _branch_extras(alg, s, named, branch).items():
        data[f"dim_{name}"] = sub.dim
    if alg.field.is_finite:
        tag = scale_tag(alg, branch)
        if tag is not None:
            data["scale_tag"] = tag
    alg._fingerprint = Fingerprint(data)
    return alg._fingerprint


# ---------------------------------------------------------------------------
# isomorphism search


class IsoResult:
    def __init__(self, status, matrix=None, explored=0):
        self.status = status      # "witness" | "none" | "unknown"
        self.matrix = matrix      # rows-matrix: row i is the image of e_i
        self.explored = explored

    def __bool__(self):
        return self.status == "witness"


def _search_subspaces(alg):
    """Ordered (name, subspace) constraints for the search, smallest first."""
    s, named = _named_base_subspaces(alg)
    try:
        branch = branch_of(alg) if is_nilpotent(alg) else None
    except (NoMatch, WrongBranch, PhiNotBijective):
        branch = None
    named.update(_branch_extras(alg, s, named, branch))
    # perps of products refine the big end; meets tie products to the series
    for name in [n for n in named if n.startswith("P") or n in ("U", "V", "UL2", "UZ4", "V2")]:
        named[f"{name}^"] = alg.perp(named[name])
    base_terms = [n for n in named if n.startswith("L") or n.startswith("Z")]
    prods = [n for n in named if n.startswith("P") and not n.endswith("^")]
    for pn in prods:
        for bn in base_terms:
            mn = f"({pn}&{bn})"
            named[mn] = subspace_meet(named[pn], named[bn])
    out = [(name, sub) for name, sub in named.items() if 0 < sub.dim]
    out.sort(key=lambda t: (t[1].dim, t[0]))
    return out


def verify_witness(src, dst, rows):
    """Exact check: rows preserve the form and transport the triple tensor."""
    f = src.field
    d = src.dim
    for i in range(d):
        for j in range(i + 1, d):
            if dst.pair(rows[i], rows[j]) != src.pair(src.basis_vector(i), src.basis_vector(j)):
                return False
    prods = {}
    for i in range(d):
        for j in range(i + 1, d):
            prods[(i, j)] = dst.product(rows[i], rows[j])
    for i in range(d):
        for j in range(i + 1, d):
            for k in range(j + 1, d):
                if dst.pair(prods[(i, j)], rows[k]) != src.gamma[i][j][k]:
                    return False
    return True


def _dedup_named(named):
    """Collapse set-equal subspaces onto the lexicographically least name.

    Returns (kept, signature): the signature records which names coincided,
    which is itself an isomorphism invariant.
    """
    groups = {}
    for name, sub in named.items():
        groups.setdefault(sub.rows, []).append(name)
    kept = {}
    signature = []
    for rows, names in groups.items():
        names.sort()
        kept[names[0]] = named[names[0]]
        signature.append(tuple(names))
    signature.sort()
    return kept, signature


def is_isomorphic(src, dst, budget=2_000_000):
    """Flag-constrained backtracking search for a symplectic isomorphism.

    Returns an IsoResult: a verified witness, "none" after exhausting the
    flag-compatible search space, or "unknown" if the node budget ran out.
    """
    if src.field != dst.field:
        raise FieldMismatch("isomorphisms are searched over a common field")
    if src.dim != dst.dim:
        raise DimMismatch("dimensions differ")
    f = src.field
    if not f.is_finite:
        raise UnsupportedField("the search enumerates candidates over finite fields")
    d = src.dim
    if src.gamma_key() == dst.gamma_key():
        ident = [src.basis_vector(i) for i in range(d)]
        return IsoResult("witness", ident, 0)

    res = _scaling_fast_path(src, dst)
    if res is not None:
        return res

    if is_nilpotent(src) and is_nilpotent(dst):
        if fingerprint(src) != fingerprint(dst):
            return IsoResult("none", None, 0)

    src_named, src_sig = _dedup_named(dict(_search_subspaces(src)))
    dst_named, dst_sig = _dedup_named(dict(_search_subspaces(dst)))
    if src_sig != dst_sig or set(src_named) != set(dst_named):
        return IsoResult("none", None, 0)
    for name in src_named:
        if src_named[name].dim != dst_named[name].dim:
            return IsoResult("none", None, 0)

    # adapted domain basis: sweep constraints smallest first, then constrain
    # each vector by the meet of every named subspace containing it
    ordered = sorted(src_named.items(), key=lambda t: (t[1].dim, t[0]))
    domain = []
    cur = src.zero_subspace()
    for name, sub in ordered + [("FULL", src.full_subspace())]:
        for row in sub.rows:
            if not cur.contains(row):
                domain.append(row)
                cur = subspace_join(cur, src.span([row]))
        if cur.dim == d:
            break
    constraints = []
    for v in domain:
        target = dst.full_subspace()
        for name, sub in ordered:
            if sub.contains(v):
                target = subspace_meet(target, dst_named[name])
        constraints.append(target)
    dom_prods = [[src.product(domain[i], domain[j]) for j in range(d)] for i in range(d)]
    from .linalg import invert_matrix, transpose
    dom_inv_cols = transpose(invert_matrix(f, [tuple(r) for r in domain]))

    def dom_coords(v):
        out = []
        for col in dom_inv_cols:
            acc = f.zero
            for a, b in zip(v, col):
                if a != f.zero and b != f.zero:
                    acc = f.add(acc, f.mul(a, b))
            out.append(acc)
        return out

    # coordinates of every domain product over the domain basis, and the last
    # domain index carrying a nonzero coordinate (-1 for the zero product)
    prod_coords = [[None] * d for _ in range(d)]
    prod_depth = [[-1] * d for _ in range(d)]
    for i in range(d):
        for j in range(d):
            c = dom_coords(dom_prods[i][j])
            prod_coords[i][j] = c
            depth = -1
            for idx in range(d):
                if c[idx] != f.zero:
                    depth = idx
            prod_depth[i][j] = depth

    images = []
    img_prods = []   # img_prods[t][i] = images[t] . images[i] in dst
    echelon = []     # list of (pivot, row) pairs, rows reduced
    explored = 0

    def reduce_vec(v):
        w = list(v)
        for piv, row in echelon:
            c = w[piv]
            if c != f.zero:
                for i in range(d):
                    if row[i] != f.zero:
                        w[i] = f.sub(w[i], f.mul(c, row[i]))
        return w

    def place(t):
        nonlocal explored
        if t == d:
            return True
        basis = constraints[t].rows
        k = len(basis)
        rows = []
        rhs = []
        for s_idx in range(t):
            rows.append(tuple(dst.pair(images[s_idx], b) for b in basis))
            rhs.append(src.pair(domain[s_idx], domain[t]))
        for b_idx in range(t):
            for a_idx in range(b_idx):
                rows.append(tuple(dst.pair(img_prods[b_idx][a_idx], b) for b in basis))
                rhs.append(src.pair(dom_prods[b_idx][a_idx], domain[t]))
        # homomorphism rows: when u_s.u_t lies in the span of placed domain
        # vectors, the image product is pinned to the same combination
        for s_idx in range(t):
            if prod_depth[s_idx][t] < t:
                target = [f.zero] * d
                cs = prod_coords[s_idx][t]
                for idx in range(t):
                    if cs[idx] != f.zero:
                        for pos in range(d):
                            target[pos] = f.add(target[pos],
                                                f.mul(cs[idx], images[idx][pos]))
                cols = [dst.product(images[s_idx], b) for b in basis]
                for pos in range(d):
                    rows.append(tuple(col[pos] for col in cols))
                    rhs.append(target[pos])
        if rows:
            sol = solve_affine(f, rows, rhs)
            if sol is None:
                return False
            part, kernel = sol
        else:
            part, kernel = tuple([f.zero] * k), [tuple(f.one if i == j else f.zero
                                                       for j in range(k)) for i in range(k)]
        for coeffs in _affine_points(f, part, kernel):
            explored += 1
            if budget is not None and explored > budget:
                raise _Budget()
            w = zero_vector(f, d)
            for c, b in zip(coeffs, basis):
                if c != f.zero:
                    w = vec_add(f, w, vec_scale(f, c, b))
            red = reduce_vec(w)
            piv = next((i for i in range(d) if red[i] != f.zero), None)
            if piv is None:
                continue  # dependent on earlier images
            inv = f.inv(red[piv])
            red = [f.mul(inv, a) for a in red]
            images.append(w)
            img_prods.append([dst.product(w, images[i]) for i in range(t)])
            echelon.append((piv, red))
            if place(t + 1):
                return True
            images.pop()
            img_prods.pop()
            echelon.pop()
        return False

    try:
        found = place(0)
    except _Budget:
        return IsoResult("unknown", None, explored)
    if not found:
        return IsoResult("none", None, explored)
    # solve for the standard-basis rows-matrix M with domain . M = images
    from .linalg import invert_matrix
    dom_inv = invert_matrix(f, [tuple(r) for r in domain])
    m = mat_mul(f, dom_inv, [tuple(r) for r in images])
    if not verify_witness(src, dst, m):
        raise ClassifyError("internal error: witness failed final verification")
    return IsoResult("witness", m, explored)


class _Budget(Exception):
    pass


def _scaling_fast_path(src, dst):
    """Known diagonal witness between catalog instances of a scaling family."""
    label = getattr(src, "catalog_label", None)
    if label is None or getattr(dst, "catalog_label", None) != label:
        return None
    if label not in cat.SCALING_WITNESSES:
        return None
    k, coeffs = cat.SCALING_WITNESSES[label]
    f = src.field
    if not f.is_finite:
        return None
    r1 = src.catalog_params.get("r")
    r2 = dst.catalog_params.get("r")
    if r1 is None or r2 is None:
        return None
    ratio = f.div(r2, r1)
    from .field import pow_elem
    for a in f.units():
        if pow_elem(f, a, k) == ratio:
            rows = cat.scaling_witness_rows(f, src.n, a, coeffs)
            if verify_witness(src, dst, rows):
                return IsoResult("witness", rows, 0)
    return None


def _affine_points(f, part, kernel):
    """All points of an affine subspace, particular solution first."""
    yield part
    if not kernel:
        return
    units_and_zero = f.elements()
    for coeffs in itertools.product(units_and_zero, repeat=len(kernel)):
        if all(c == f.zero for c in coeffs):
            continue
        v = list(part)
        for c, kv in zip(coeffs, kernel):
            if c != f.zero:
                for i in range(len(v)):
                    v[i] = f.add(v[i], f.mul(c, kv[i]))
        yield tuple(v)


# ---------------------------------------------------------------------------
# classification


def classify(alg, certify=False, budget=2_000_000):
    """Catalog label and canonical parameters of a nilpotent algebra.

    Fingerprint routing picks the branch; parametrized families are resolved
    by the isomorphism search against the family representatives.  With
    certify=True a witness is also demanded for single-member branches.
    """
    f = alg.field
    if not f.is_finite:
        raise UnsupportedField("classification is materialized over finite fields")
    if alg.dim > 10:
        raise ClassifyError("classification covers dimensions up to 10")
    branch = branch_of(alg)  # raises NoMatch on unrecognized shapes
    label = cat.branch_to_label().get(branch)
    if label is None:
        raise NoMatch(f"no catalog label for branch {branch}", fingerprint(alg))
    members = cat.family_members(label, f)
    if not members:
        raise NoMatch(f"branch {branch} has no valid members over {f!r}", fingerprint(alg))
    if len(members) == 1 and not certify:
        # the branch invariants pin the unique family class; no witness needed
        return {"label": label, "params": members[0], "branch": branch}
    if not certify:
        # resolve the member by the family's scale invariant
        tag = scale_tag(alg, branch)
        if tag is not None:
            for params in members:
                ref = cat.instantiate(label, f, params)
                if scale_tag(ref, branch) == tag:
                    return {"label": label, "params": params, "branch": branch}
    for params in members:
        ref = cat.instantiate(label, f, params)
        res = is_isomorphic(alg, ref, budget=budget)
        if res.status == "witness":
            return {"label": label, "params": params, "branch": branch,
                    "witness": res.matrix}
        if res.status == "unknown":
            raise ClassifyError("isomorphism search budget exhausted during classification")
    raise NoMatch(f"no family member of {label} matches", fingerprint(alg))


def label_key(label, params, field):
    if not params:
        return label
    inner = ",".join(field.to_str(params[k]) for k in sorted(params))
    return f"{label}[{inner}]"


# ---------------------------------------------------------------------------
# censuses


class SplitMix64:
    """Deterministic 64-bit generator for presentation sampling."""

    MASK = (1 << 64) - 1

    def __init__(self, seed):
        self.state = seed & self.MASK

    def next64(self):
        self.state = (self.state + 0x9E3779B97F4A7C15) & self.MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def below(self, n):
        return self.next64() % n


def census_size(field, n):
    return field.order ** len(nilpotent_parameter_slots(n))


def enumerate_and_classify(field, n, mode="exhaustive", samples=None, seed=None,
                           progress=None):
    """Census of nilpotent presentations: build, classify, tally per label.

    mode "exhaustive" walks all |F|^(2 C(n,3)) presentations (guarded by a
    10^7 cap); mode "sample" draws `samples` presentations from the seeded
    64-bit generator.
    """
    if not field.is_finite:
        raise UnsupportedField("censuses run over finite fields")
    slots = nilpotent_parameter_slots(n)
    counts = {}
    no_match = 0
    if mode == "exhaustive":
        total = field.order ** len(slots)
        if total > 10_000_000:
            raise TooLargeForExhaustive(f"{total} presentations exceed the exhaustive cap")
        source = itertools.product(field.elements(), repeat=len(slots))
    elif mode == "sample":
        total = samples
        rng = SplitMix64(seed or 0)
        els = field.elements()

        def gen():
            for _ in range(samples):
                yield tuple(els[rng.below(len(els))] for _ in slots)
        source = gen()
    else:
        raise ClassifyError(f"unknown census mode {mode!r}")
    done = 0
    for values in source:
        p = presentation_from_values(field.spec(), n, values)
        alg = from_presentation(p)
        try:
            got = classify(alg)
            key = label_key(got["label"], got["params"], field)
            counts[key] = counts.get(key, 0) + 1
        except NoMatch:
            no_match += 1
        done += 1
        if progress and done % progress[0] == 0:
            progress[1](done, total)
    return {
        "field": str(field.spec()),
        "n": n,
        "mode": mode,
        "total": total,
        "counts": dict(sorted(counts.items())),
        "no_match": no_match,
        "seed": seed,
    }


# ---------------------------------------------------------------------------
# the dim-4 orbit oracle


def orbit_oracle_dim4(field):
    """Orbits of all alternating trilinear forms on the 4-space under the
    symplectic group, by closure under symplectic transvections."""
    q = field.order
    if q not in (2, 3):
        raise UnsupportedField("the oracle enumerates forms over GF(2) or GF(3) only")
    f = field
    triples = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)]

    def dense(vals):
        g = [[[f.zero] * 4 for _ in range(4)] for _ in range(4)]
        for (a, b, c), v in zip(triples, vals):
            for (i, j, k, s) in [(a, b, c, 1), (b, c, a, 1), (c, a, b, 1),
                                 (b, a, c, -1), (a, c, b, -1), (c, b, a, -1)]:
                g[i][j][k] = v if s == 1 else f.neg(v)
        return g

    from .linalg import SymplecticForm
    form = SymplecticForm(f, 4)
    gens = []
    seen_lines = set()
    for coords in itertools.product(f.elements(), repeat=4):
        if all(c == f.zero for c in coords):
            continue
        first = next(c for c in coords if c != f.zero)
        normal = tuple(f.mul(f.inv(first), c) for c in coords)
        if normal in seen_lines:
            continue
        seen_lines.add(normal)
        v = normal
        for lam in f.units():
            rows = []
            for i in range(4):
                e = tuple(f.one if j == i else f.zero for j in range(4))
                c = f.mul(lam, form.pair(e, v))
                rows.append(tuple(f.add(a, f.mul(c, b)) for a, b in zip(e, v)))
            gens.append(rows)

    def act(vals, m):
        g = dense(vals)
        out = []
        for (i, j, k) in triples:
            acc = f.zero
            for a in range(4):
                ma = m[i][a]
                if ma == f.zero:
                    continue
                for b in range(4):
                    mb = m[j][b]
                    if mb == f.zero:
                        continue
                    gab = g[a][b]
                    coef = f.mul(ma, mb)
                    for c in range(4):
                        if gab[c] != f.zero and m[k][c] != f.zero:
                            acc = f.add(acc, f.mul(coef, f.mul(gab[c], m[k][c])))
            out.append(acc)
        return tuple(out)

    all_forms = list(itertools.product(f.elements(), repeat=4))
    remaining = set(all_forms)
    orbits = []
    while remaining:
        start = min(remaining)
        frontier = [start]
        orbit = {start}
        remaining.discard(start)
        while frontier:
            cur = frontier.pop()
            for m in gens:
                nxt = act(cur, m)
                if nxt not in orbit:
                    orbit.add(nxt)
                    remaining.discard(nxt)
                    frontier.append(nxt)
        orbits.append(orbit)
    sizes = sorted(len(o) for o in orbits)
    return {"orbit_count": len(orbits), "orbit_sizes": sizes,
            "total": len(all_forms)}


# ---------------------------------------------------------------------------
# randomized helpers


def random_symplectic_rows(field, dim, rng, steps=20):
    """Rows-matrix of a random product of symplectic transvections."""
    from .linalg import SymplecticForm
    form = SymplecticForm(field, dim)
    f = field
    rows = [tuple(f.one if j == i else f.zero for j in range(dim)) for i in range(dim)]
    for _ in range(steps):
        while True:
            v = tuple(f.elements()[rng.randrange(f.order)] for _ in range(dim))
            if any(c != f.zero for c in v):
                break
        lam = f.units()[rng.randrange(f.order - 1)]
        trans = []
        for i in range(dim):
            e = tuple(f.one if j == i else f.zero for j in range(dim))
            c = f.mul(lam, form.pair(e, v))
            trans.append(tuple(f.add(a, f.mul(c, b)) for a, b in zip(e, v)))
        rows = mat_mul(field, rows, trans)
    return rows


def random_nilpotent_presentation(field, n, rng):
    els = field.elements()
    values = [els[rng.randrange(len(els))] for _ in nilpotent_parameter_slots(n)]
    return presentation_from_values(field.spec(), n, values)
