"""Symplectic alternating algebras: construction from sparse triple data,
products, axiom checks, central series, nilpotency, ideal machinery,
isotropic chains, adapted presentations and maximal-class structure.

An algebra of dimension 2n is stored as the full antisymmetric triple tensor
g[i][j][k] = (e_i e_j, e_k) over the standard basis x1, y1, ..., xn, yn
together with the product table e_i e_j derived from it.
"""

from __future__ import annotations

import json

from .field import field_make, field_to_json
from .linalg import (
    AmbientMismatch,
    Subspace,
    SymplecticForm,
    perp,
    subspace_full,
    subspace_join,
    subspace_meet,
    subspace_span,
    subspace_zero,
    darboux_complete,
    is_isotropic,
    nullspace,
    vec_add,
    vec_is_zero,
    vec_scale,
    zero_vector,
)


class SaaError(Exception):
    pass


class BadIndex(SaaError):
    pass


class ZeroValue(SaaError):
    pass


class DuplicateTriple(SaaError):
    pass


class NotNilpotentError(SaaError):
    pass


class CenterIsotropic(SaaError):
    pass


class NotMaximalClass(SaaError):
    pass


class DimensionTooSmall(SaaError):
    pass


def basis_name(idx):
    """Index in the frozen order x1,y1,x2,y2,... -> name like 'x2'."""
    i, r = divmod(idx, 2)
    return ("x" if r == 0 else "y") + str(i + 1)


def basis_index(name):
    kind, num = name[0], name[1:]
    if kind not in ("x", "y") or not num.isdigit() or int(num) < 1:
        raise BadIndex(f"bad basis name {name!r}")
    return 2 * (int(num) - 1) + (0 if kind == "x" else 1)


_EVEN_PERMS = {(0, 1, 2), (1, 2, 0), (2, 0, 1)}


def _perm_sign(triple):
    a, b, c = triple
    if a == b or b == c or a == c:
        return 0, None
    sorted_t = tuple(sorted(triple))
    perm = tuple(sorted_t.index(v) for v in triple)
    return (1 if perm in _EVEN_PERMS else -1), sorted_t


class Presentation:
    """Sparse signed triple data (a, b, c, val) with a < b < c, values nonzero."""

    def __init__(self, field_spec, n, triples):
        self.field_spec = tuple(field_spec) if not isinstance(field_spec, dict) else field_spec
        self.field = field_make(field_spec)
        self.n = n
        seen = {}
        norm = []
        for (a, b, c, val) in triples:
            if isinstance(a, str):
                a, b, c = basis_index(a), basis_index(b), basis_index(c)
            for idx in (a, b, c):
                if not 0 <= idx < 2 * n:
                    raise BadIndex(f"index {idx} out of range for dimension {2 * n}")
            sign, key = _perm_sign((a, b, c))
            if sign == 0:
                raise BadIndex(f"repeated basis vector in triple {(a, b, c)}")
            if val == self.field.zero:
                raise ZeroValue(f"zero value for triple {(a, b, c)}")
            if key in seen:
                raise DuplicateTriple(f"duplicate triple key {key}")
            v = val if sign == 1 else self.field.neg(val)
            seen[key] = v
            norm.append((key[0], key[1], key[2], v))
        norm.sort()
        self.triples = tuple(norm)

    @property
    def dim(self):
        return 2 * self.n

    def is_nilpotent_shape(self):
        """True when every triple has one of the shapes (x_i y_j, y_k) or
        (y_i y_j, y_k) with i < j < k (indices over the pair number)."""
        for (a, b, c, _v) in self.triples:
            pa, ra = divmod(a, 2)
            pb, rb = divmod(b, 2)
            pc, rc = divmod(c, 2)
            if rb != 1 or rc != 1:
                return False
            if not (pa < pb < pc):
                return False
        return True

    def to_json(self):
        return {
            "field": field_to_json(self.field),
            "n": self.n,
            "triples": [
                {"a": basis_name(a), "b": basis_name(b), "c": basis_name(c),
                 "val": self.field.to_str(v)}
                for (a, b, c, v) in self.triples
            ],
        }

    @classmethod
    def from_json(cls, data):
        field = field_make(data["field"])
        triples = [(t["a"], t["b"], t["c"], field.from_str(t["val"]))
                   for t in data["triples"]]
        return cls(field.spec(), data["n"], triples)

    def to_text(self):
        f = self.field
        q = "GF({})".format(f.order) if f.is_finite else "Q"
        lines = [f"dim {2 * self.n} over {q}"]
        for (a, b, c, v) in self.triples:
            lines.append(f"({basis_name(a)} {basis_name(b)}, {basis_name(c)}) = {f.to_str(v)}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        head = lines[0].split()
        if head[0] != "dim" or head[2] != "over":
            raise SaaError(f"bad presentation header {lines[0]!r}")
        dim = int(head[1])
        fname = head[3]
        if fname == "Q":
            spec = ("rationals",)
        else:
            q = int(fname[3:-1])
            if q in (4, 8):
                spec = ("ext", 2, {4: 2, 8: 3}[q])
            else:
                spec = ("prime", q)
        field = field_make(spec)
        triples = []
        for ln in lines[1:]:
            lhs, rhs = ln.split("=")
            inner = lhs.strip()[1:-1]
            pair, third = inner.split(",")
            a, b = pair.split()
            triples.append((a.strip(), b.strip(), third.strip(), field.from_str(rhs.strip())))
        return cls(spec, dim // 2, triples)

    def __eq__(self, other):
        return (isinstance(other, Presentation) and self.n == other.n
                and self.field == other.field and self.triples == other.triples)

    def __repr__(self):
        return f"Presentation(dim={self.dim}, {len(self.triples)} triples)"


class AxiomReport:
    def __init__(self, alternating, cyclic, self_adjoint, non_degenerate, failures):
        self.alternating = alternating
        self.cyclic = cyclic
        self.self_adjoint = self_adjoint
        self.non_degenerate = non_degenerate
        self.failures = failures

    @property
    def ok(self):
        return self.alternating and self.cyclic and self.self_adjoint and self.non_degenerate

    def to_json(self):
        return {"alternating": self.alternating, "cyclic": self.cyclic,
                "self_adjoint": self.self_adjoint, "non_degenerate": self.non_degenerate,
                "failures": self.failures[:10]}


class SAAlgebra:
    """Dimension-2n algebra with the standard symplectic form; immutable."""

    def __init__(self, field, n, gamma):
        self.field = field
        self.n = n
        self.dim = 2 * n
        self.gamma = gamma  # dense: gamma[i][j][k]
        self.form = SymplecticForm(field, self.dim)
        self._ptable = None
        self._series = None

    @property
    def ptable(self):
        """ptable[i][j] = e_i e_j as a coordinate vector."""
        if self._ptable is None:
            f = self.field
            d = self.dim
            tbl = []
            for i in range(d):
                row = []
                gi = self.gamma[i]
                for j in range(d):
                    gij = gi[j]
                    vec = [f.zero] * d
                    for m in range(0, d, 2):
                        # w = sum_m (w, y_m) x_m - (w, x_m) y_m
                        vec[m] = gij[m + 1]
                        vec[m + 1] = f.neg(gij[m])
                    row.append(tuple(vec))
                tbl.append(row)
            self._ptable = tbl
        return self._ptable

    def product(self, u, v):
        if len(u) != self.dim or len(v) != self.dim:
            raise AmbientMismatch("vector length does not match the algebra dimension")
        f = self.field
        out = [f.zero] * self.dim
        tbl = self.ptable
        z = f.zero
        for i, a in enumerate(u):
            if a == z:
                continue
            row = tbl[i]
            for j, b in enumerate(v):
                if b == z:
                    continue
                c = f.mul(a, b)
                w = row[j]
                for k in range(self.dim):
                    if w[k] != z:
                        out[k] = f.add(out[k], f.mul(c, w[k]))
        return tuple(out)

    def pair(self, u, v):
        return self.form.pair(u, v)

    def triple(self, u, v, w):
        return self.form.pair(self.product(u, v), w)

    def gamma_key(self):
        return tuple(tuple(tuple(r) for r in plane) for plane in self.gamma)

    def basis_vector(self, i):
        f = self.field
        return tuple(f.one if k == i else f.zero for k in range(self.dim))

    def zero_subspace(self):
        return subspace_zero(self.field, self.dim)

    def full_subspace(self):
        return subspace_full(self.field, self.dim)

    def span(self, vectors):
        return subspace_span(self.field, self.dim, vectors)

    def subspace_product(self, a, b):
        """span{u v : u in a, v in b} from the basis rows."""
        prods = [self.product(u, v) for u in a.rows for v in b.rows]
        return self.span(prods)

    def perp(self, s):
        return perp(s, self.form)

    def __repr__(self):
        return f"SAAlgebra(dim={self.dim}, field={self.field!r})"


def from_presentation(p):
    """The unique algebra whose basis triple values match the presentation."""
    f = p.field
    d = p.dim
    z = f.zero
    gamma = [[[z] * d for _ in range(d)] for _ in range(d)]
    for (a, b, c, v) in p.triples:
        for (i, j, k, s) in _antisymmetrizations(a, b, c):
            gamma[i][j][k] = v if s == 1 else f.neg(v)
    alg = SAAlgebra(f, p.n, gamma)
    alg._presentation = p
    return alg


def _antisymmetrizations(a, b, c):
    return [(a, b, c, 1), (b, c, a, 1), (c, a, b, 1),
            (b, a, c, -1), (a, c, b, -1), (c, b, a, -1)]


def check_axioms(alg):
    """Verify alternating/cyclic/self-adjoint/non-degenerate on all basis data."""
    f = alg.field
    d = alg.dim
    g = alg.gamma
    failures = []
    alternating = True
    for i in range(d):
        for j in range(d):
            for k in range(d):
                if i == j or j == k or i == k:
                    if g[i][j][k] != f.zero:
                        alternating = False
                        failures.append(("repeated-index", i, j, k))
                elif g[i][j][k] != f.neg(g[j][i][k]) or g[i][j][k] != f.neg(g[i][k][j]):
                    alternating = False
                    failures.append(("antisymmetry", i, j, k))
    cyclic = True
    basis = [alg.basis_vector(i) for i in range(d)]
    prods = [[alg.product(basis[i], basis[j]) for j in range(d)] for i in range(d)]
    for i in range(d):
        for j in range(d):
            for k in range(d):
                uv_w = alg.pair(prods[i][j], basis[k])
                vw_u = alg.pair(prods[j][k], basis[i])
                if uv_w != vw_u:
                    cyclic = False
                    failures.append(("cyclic", i, j, k))
    self_adjoint = True
    for i in range(d):
        for j in range(d):
            for k in range(d):
                # (u x, v) = (u, v x) with u=e_i, v=e_j, x=e_k
                lhs = alg.pair(prods[i][k], basis[j])
                rhs = alg.pair(basis[i], prods[j][k])
                if lhs != rhs:
                    self_adjoint = False
                    failures.append(("self-adjoint", i, j, k))
    non_degenerate = True  # the standard form is fixed and invertible
    return AxiomReport(alternating, cyclic, self_adjoint, non_degenerate, failures)


class CentralSeries:
    def __init__(self, lower, upper, nilpotent, cls):
        self.lower = lower    # [L^1, L^2, ...] until stabilization
        self.upper = upper    # [Z_0, Z_1, ...] aligned so upper[k] = Z_k
        self.nilpotent = nilpotent
        self.cls = cls        # class when nilpotent, else None

    def lower_term(self, k):
        """L^k with k >= 1; constant after stabilization."""
        i = min(k - 1, len(self.lower) - 1)
        return self.lower[i]

    def upper_term(self, k):
        i = min(k, len(self.upper) - 1)
        return self.upper[i]


def central_series(alg):
    """Both central series until stabilization, with the duality Z_k = (L^{k+1})^perp.

    Cached on the (immutable) algebra."""
    if alg._series is not None:
        return alg._series
    cur = alg.full_subspace()
    lower = [cur]
    while True:
        nxt = alg.subspace_product(cur, alg.full_subspace())
        if nxt == cur:
            break
        lower.append(nxt)
        cur = nxt
        if cur.dim == 0:
            break
    upper = [alg.perp(t) for t in lower[1:]]  # Z_k = perp(L^{k+1})
    upper.insert(0, alg.zero_subspace())
    nilpotent = lower[-1].dim == 0
    cls = len(lower) - 1 if nilpotent else None
    alg._series = CentralSeries(lower, upper, nilpotent, cls)
    return alg._series


def _series(alg):
    return central_series(alg)


def nilpotency_class(alg):
    """The class, or None when the lower central series stabilizes above zero."""
    s = _series(alg)
    return s.cls if s.nilpotent else None


def is_nilpotent(alg):
    return _series(alg).nilpotent


def center(alg):
    return _series(alg).upper_term(1)


def center_rank(alg):
    """Center, rank (dim L - dim L^2), and whether the center is isotropic."""
    s = _series(alg)
    z = s.upper_term(1)
    l2 = s.lower_term(2)
    return {
        "center": z,
        "rank": alg.dim - l2.dim,
        "isotropic": is_isotropic(z, alg.form),
    }


def is_ideal(alg, s):
    return s.contains_subspace(alg.subspace_product(s, alg.full_subspace()))


def ideal_ops(alg, s):
    """Ideal closure of s plus the ideal/abelian structure flags."""
    cur = s
    for _ in range(alg.dim + 1):
        nxt = subspace_join(cur, alg.subspace_product(cur, alg.full_subspace()))
        if nxt == cur:
            break
        cur = nxt
    return {
        "closure": cur,
        "is_ideal": cur == s,
        "perp_is_ideal": is_ideal(alg, alg.perp(s)),
        "is_abelian": alg.subspace_product(s, s).dim == 0,
    }


def direct_sum_split(alg):
    """Split off a 2-dim symplectic subalgebra of the center when possible.

    Returns (I, I_perp) as algebras presented on Darboux bases of the two
    summands, plus the bases used (rows in ambient coordinates).
    """
    f = alg.field
    z = center(alg)
    if is_isotropic(z, alg.form):
        raise CenterIsotropic("center is isotropic; no symplectic summand inside it")
    u = v = None
    found = False
    for i in range(z.dim):
        for j in range(i + 1, z.dim):
            c = alg.pair(z.rows[i], z.rows[j])
            if c != f.zero:
                u = z.rows[i]
                v = vec_scale(f, f.inv(c), z.rows[j])
                found = True
                break
        if found:
            break
    part_i = alg.span([u, v])
    part_p = alg.perp(part_i)
    alg_i, basis_i = restrict_to_symplectic_subspace(alg, part_i)
    alg_p, basis_p = restrict_to_symplectic_subspace(alg, part_p)
    return alg_i, alg_p, basis_i, basis_p


def restrict_to_symplectic_subspace(alg, s):
    """Induced algebra on a subspace where the form restricts non-degenerately."""
    f = alg.field
    basis = symplectic_basis_of(alg, s)
    m = len(basis)
    gamma = [[[f.zero] * m for _ in range(m)] for _ in range(m)]
    prods = [[alg.product(basis[i], basis[j]) for j in range(m)] for i in range(m)]
    for i in range(m):
        for j in range(m):
            for k in range(m):
                gamma[i][j][k] = alg.pair(prods[i][j], basis[k])
    return SAAlgebra(f, m // 2, gamma), basis


def symplectic_basis_of(alg, s):
    """Darboux basis of a subspace on which the form is non-degenerate."""
    f = alg.field
    basis = []
    sub = s
    while sub.dim:
        u = sub.rows[0]
        partner = None
        for r in sub.rows[1:]:
            c = alg.pair(u, r)
            if c != f.zero:
                partner = vec_scale(f, f.inv(c), r)
                break
        if partner is None:
            raise SaaError("form degenerate on subspace")
        basis.append(u)
        basis.append(partner)
        # next subspace: intersection of sub with perp of the pair
        pair_perp = alg.perp(alg.span([u, partner]))
        sub = subspace_meet(sub, pair_perp)
    return basis


def isotropic_chain(alg):
    """Ascending chain of isotropic ideals of dims 1..n.

    At each extension step the new vector is taken from the deepest term
    u L...L (m maximal) of the current perp that is not inside the ideal,
    lowest rref row first, so chains are deterministic.
    """
    if not is_nilpotent(alg):
        raise NotNilpotentError("isotropic chains exist only for nilpotent algebras")
    f = alg.field
    n = alg.n
    chain = []
    cur = alg.zero_subspace()
    full = alg.full_subspace()
    for _ in range(n):
        # descending terms I^perp, I^perp L, I^perp L L, ... ; pick from the last
        # nonzero term not inside cur (that term is central over cur).
        source = alg.perp(cur) if cur.dim else full
        terms = [source]
        while True:
            nxt = alg.subspace_product(terms[-1], full)
            if nxt.dim == 0:
                break
            terms.append(nxt)
        pick = None
        for t in reversed(terms):
            if not cur.contains_subspace(t):
                for row in t.rows:
                    if not cur.contains(row):
                        pick = row
                        break
                break
        if pick is None:
            raise SaaError("isotropic chain extension failed")
        cur = subspace_join(cur, alg.span([pick]))
        chain.append(cur)
    return chain


def extract_nilpotent_presentation(alg):
    """Adapted presentation via an isotropic chain and Darboux completion.

    Returns (presentation, basis); the basis rows are the new standard basis
    expressed in the old coordinates, and re-reading the tensor in that basis
    gives exactly the algebra of the returned presentation.
    """
    if not is_nilpotent(alg):
        raise NotNilpotentError("only nilpotent algebras have adapted presentations")
    chain = isotropic_chain(alg)
    basis = darboux_complete(chain, alg.form)
    pres = presentation_in_basis(alg, basis)
    return pres, basis


def presentation_in_basis(alg, basis):
    """The presentation read off from the algebra in the given standard basis."""
    f = alg.field
    d = alg.dim
    triples = []
    prods = {}
    for a in range(d):
        for b in range(a + 1, d):
            prods[(a, b)] = alg.product(basis[a], basis[b])
    for a in range(d):
        for b in range(a + 1, d):
            for c in range(b + 1, d):
                v = alg.pair(prods[(a, b)], basis[c])
                if v != f.zero:
                    triples.append((a, b, c, v))
    return Presentation(alg.field.spec(), alg.n, triples)


def transport_tensor(alg, basis):
    """Dense tensor of the algebra re-read in a new basis (rows of `basis`)."""
    f = alg.field
    d = alg.dim
    gamma = [[[f.zero] * d for _ in range(d)] for _ in range(d)]
    prods = [[alg.product(basis[i], basis[j]) for j in range(d)] for i in range(d)]
    for i in range(d):
        for j in range(d):
            for k in range(d):
                gamma[i][j][k] = alg.pair(prods[i][j], basis[k])
    return gamma


def algebra_in_basis(alg, basis):
    return SAAlgebra(alg.field, alg.n, transport_tensor(alg, basis))


def maximal_class_test(p):
    """Read off from a nilpotent presentation whether the algebra has class 2n-3."""
    n = p.n
    if 2 * n < 8:
        raise DimensionTooSmall("the maximal-class criterion needs dimension >= 8")
    if not p.is_nilpotent_shape():
        raise SaaError("the criterion applies to nilpotent presentations")
    alg = from_presentation(p)
    f = alg.field

    def xv(i):
        return alg.basis_vector(2 * (i - 1))

    def yv(i):
        return alg.basis_vector(2 * (i - 1) + 1)

    for i in range(2, n - 1):
        if vec_is_zero(f, alg.product(xv(i), yv(i + 1))):
            return False
    a = alg.product(xv(1), yv(2))
    b = alg.product(yv(1), yv(2))
    return alg.span([a, b]).dim == 2


def ann_in(alg, a, b, c):
    """{x in a : x b <= c} as a subspace (a linear condition on a)."""
    f = alg.field
    if a.dim == 0:
        return a
    c_perp = alg.perp(c)
    rows = []
    for w in b.rows:
        for u in c_perp.rows:
            # condition: (x w, u) = 0, linear in x; evaluate on a's basis
            rows.append(tuple(alg.pair(alg.product(ar, w), u) for ar in a.rows))
    coeffs = nullspace(f, rows, a.dim) if rows else [
        tuple(f.one if i == j else f.zero for j in range(a.dim)) for i in range(a.dim)]
    vecs = []
    for coef in coeffs:
        v = zero_vector(f, alg.dim)
        for t, row in zip(coef, a.rows):
            if t != f.zero:
                v = vec_add(f, v, vec_scale(f, t, row))
        vecs.append(v)
    return alg.span(vecs)


def characteristic_chain_maximal(alg):
    """The full flag of ideals of a maximal-class algebra of dimension >= 10.

    Members: 0, the 1-dim ideal Z_3 L^2, the upper central terms, the dim-n
    ideal from the L^{n-1} L^{n-2} construction, and the perps, giving one
    ideal of every dimension 0..2n.
    """
    n = alg.n
    if alg.dim < 10:
        raise DimensionTooSmall("the characteristic flag construction needs dimension >= 10")
    s = _series(alg)
    if not s.nilpotent or s.cls != 2 * alg.n - 3:
        raise NotMaximalClass("algebra is not of maximal class")

    flag = {0: alg.zero_subspace(), 2 * n: alg.full_subspace()}
    for k in range(1, 2 * n - 3):
        zk = s.upper_term(k)
        flag[zk.dim] = zk
    # dim-1 member: Z_3(L) . L^2
    j1 = alg.subspace_product(s.upper_term(3), s.lower_term(2))
    flag[1] = j1
    flag[2 * n - 1] = alg.perp(j1)
    # dim-n member via the 2-dim piece L^{n-1} L^{n-2}
    piece = alg.subspace_product(s.lower_term(n - 1), s.lower_term(n - 2))
    iks = {1: j1}
    for k in range(2, n):
        iks[k] = s.upper_term(k - 1)
    kk = None
    for k in range(1, n - 2):
        if iks[k + 1].contains_subspace(piece):
            kk = k
            break
    if kk is None:
        raise SaaError("characteristic flag construction failed (no containing term)")
    j = subspace_meet(piece, iks[kk])
    mid = ann_in(alg, s.lower_term(n - 1), s.lower_term(n - 2), j)
    flag[n] = mid

    out = [flag[d] for d in range(2 * n + 1)]
    for want, sub in enumerate(out):
        if sub.dim != want:
            raise SaaError(f"characteristic flag has wrong dimension at {want}")
    return out


def identity_probe(alg):
    """Jacobi and associativity checked on all basis triples."""
    f = alg.field
    d = alg.dim
    basis = [alg.basis_vector(i) for i in range(d)]
    prods = [[alg.product(basis[i], basis[j]) for j in range(d)] for i in range(d)]
    is_lie = True
    is_assoc = True
    for i in range(d):
        for j in range(d):
            for k in range(d):
                uv_w = alg.product(prods[i][j], basis[k])
                vw_u = alg.product(prods[j][k], basis[i])
                wu_v = alg.product(prods[k][i], basis[j])
                jac = vec_add(f, vec_add(f, uv_w, vw_u), wu_v)
                if not vec_is_zero(f, jac):
                    is_lie = False
                u_vw = alg.product(basis[i], prods[j][k])
                if uv_w != u_vw:
                    is_assoc = False
                if not is_lie and not is_assoc:
                    return {"is_lie": False, "is_associative": False}
    return {"is_lie": is_lie, "is_associative": is_assoc}


def nilpotent_presentation(field_spec, n, alpha, beta):
    """Presentation from dictionaries alpha[(i,j,k)], beta[(i,j,k)], 1<=i<j<k<=n,
    giving the values of (x_i y_j, y_k) and (y_i y_j, y_k)."""
    field = field_make(field_spec)
    triples = []
    for (i, j, k), v in alpha.items():
        if v != field.zero:
            triples.append((f"x{i}", f"y{j}", f"y{k}", v))
    for (i, j, k), v in beta.items():
        if v != field.zero:
            triples.append((f"y{i}", f"y{j}", f"y{k}", v))
    return Presentation(field_spec, n, triples)


def nilpotent_parameter_slots(n):
    """The ordered parameter slots of a nilpotent presentation of half-dim n."""
    slots = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                slots.append(("a", i, j, k))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                slots.append(("b", i, j, k))
    return slots


def presentation_from_values(field_spec, n, values):
    """Nilpotent presentation from a flat value list over nilpotent_parameter_slots."""
    slots = nilpotent_parameter_slots(n)
    alpha, beta = {}, {}
    for (slot, v) in zip(slots, values):
        kind, i, j, k = slot
        if kind == "a":
            alpha[(i, j, k)] = v
        else:
            beta[(i, j, k)] = v
    return nilpotent_presentation(field_spec, n, alpha, beta)


def save_presentation(p, path, text=False):
    with open(path, "w") as fh:
        if text:
            fh.write(p.to_text())
        else:
            json.dump(p.to_json(), fh, indent=1, sort_keys=True)
            fh.write("\n")


def load_presentation(path):
    with open(path) as fh:
        content = fh.read()
    stripped = content.lstrip()
    if stripped.startswith("{"):
        return Presentation.from_json(json.loads(content))
    return Presentation.from_text(content)
