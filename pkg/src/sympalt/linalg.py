"""Exact vectors, matrices and subspaces over a Field, plus the standard
symplectic form utilities (perp, Darboux completion of an isotropic flag).

Vectors are tuples of canonical field elements in the frozen basis order
x1, y1, x2, y2, ..., xn, yn, so the symplectic form pairs coordinates
(2m, 2m+1) with value +1.  Subspaces carry their unique reduced row-echelon
basis, so equal subspaces compare equal componentwise.
"""

from __future__ import annotations


class LinalgError(Exception):
    pass


class MixedFields(LinalgError):
    pass


class AmbientMismatch(LinalgError):
    pass


class ChainNotIsotropic(LinalgError):
    pass


class ChainNotAscending(LinalgError):
    pass


def zero_vector(field, dim):
    return (field.zero,) * dim


def unit_vector(field, dim, i):
    return tuple(field.one if j == i else field.zero for j in range(dim))


def vec_add(field, u, v):
    return tuple(field.add(a, b) for a, b in zip(u, v))


def vec_sub(field, u, v):
    return tuple(field.sub(a, b) for a, b in zip(u, v))


def vec_scale(field, c, u):
    if c == field.one:
        return tuple(u)
    return tuple(field.mul(c, a) for a in u)


def vec_is_zero(field, u):
    z = field.zero
    return all(a == z for a in u)


def mat_mul_vec(field, rows, v):
    """rows is a list of row vectors; returns the vector of row.v dot products."""
    return tuple(dot(field, r, v) for r in rows)


def dot(field, u, v):
    acc = field.zero
    for a, b in zip(u, v):
        if a != field.zero and b != field.zero:
            acc = field.add(acc, field.mul(a, b))
    return acc


def rref(field, rows):
    """Reduced row-echelon form.  Returns (rows, pivot_columns); zero rows dropped."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = None
        for i in range(r, len(m)):
            if m[i][c] != field.zero:
                pr = i
                break
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        if pv != field.one:
            inv = field.inv(pv)
            m[r] = [field.mul(inv, a) for a in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != field.zero:
                f = m[i][c]
                m[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m[:r]], pivots


def solve_affine(field, rows, rhs):
    """Solve rows . w = rhs for w.

    Returns (particular, kernel_basis) or None if inconsistent.  With no
    equations, particular is the zero vector and the kernel is the full space.
    """
    if not rows:
        raise ValueError("need the ambient dimension; pass at least a zero row")
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    reduced, pivots = rref(field, aug)
    for row, c in zip(reduced, pivots):
        if c == ncols:
            return None  # 0 = nonzero
    particular = [field.zero] * ncols
    for row, c in zip(reduced, pivots):
        particular[c] = row[ncols]
    free = [c for c in range(ncols) if c not in pivots]
    kernel = []
    for fcol in free:
        v = [field.zero] * ncols
        v[fcol] = field.one
        for row, c in zip(reduced, pivots):
            v[c] = field.neg(row[fcol])
        kernel.append(tuple(v))
    return tuple(particular), kernel


def nullspace(field, rows, ncols):
    """Basis of {w : rows . w = 0}."""
    if not rows:
        return [unit_vector(field, ncols, i) for i in range(ncols)]
    sol = solve_affine(field, rows, [field.zero] * len(rows))
    return list(sol[1])


class Subspace:
    """Row-reduced subspace of F^ambient; representation is canonical."""

    __slots__ = ("field", "ambient", "rows", "pivots")

    def __init__(self, field, ambient, rows, _reduced=False):
        self.field = field
        self.ambient = ambient
        if _reduced:
            self.rows = tuple(tuple(r) for r in rows)
            self.pivots = tuple(self._pivots_of(rows))
        else:
            red, piv = rref(field, rows)
            self.rows = tuple(red)
            self.pivots = tuple(piv)

    def _pivots_of(self, rows):
        out = []
        for r in rows:
            for c, a in enumerate(r):
                if a != self.field.zero:
                    out.append(c)
                    break
        return out

    @property
    def dim(self):
        return len(self.rows)

    def contains(self, v):
        w = list(v)
        f = self.field
        for row, c in zip(self.rows, self.pivots):
            if w[c] != f.zero:
                coef = w[c]
                w = [f.sub(a, f.mul(coef, b)) for a, b in zip(w, row)]
        return all(a == f.zero for a in w)

    def reduce_mod(self, v):
        """Canonical representative of v modulo this subspace."""
        w = list(v)
        f = self.field
        for row, c in zip(self.rows, self.pivots):
            if w[c] != f.zero:
                coef = w[c]
                w = [f.sub(a, f.mul(coef, b)) for a, b in zip(w, row)]
        return tuple(w)

    def contains_subspace(self, other):
        return all(self.contains(r) for r in other.rows)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.field == other.field
                and self.ambient == other.ambient and self.rows == other.rows)

    def __hash__(self):
        return hash((self.ambient, self.rows))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


def subspace_span(field, ambient, vectors):
    vectors = list(vectors)
    for v in vectors:
        if len(v) != ambient:
            raise MixedFields("vectors of mixed length in span")
    return Subspace(field, ambient, vectors)


def subspace_zero(field, ambient):
    return Subspace(field, ambient, [], _reduced=True)


def subspace_full(field, ambient):
    return Subspace(field, ambient,
                    [unit_vector(field, ambient, i) for i in range(ambient)], _reduced=True)


def subspace_join(a, b):
    _check_ambient(a, b)
    return Subspace(a.field, a.ambient, list(a.rows) + list(b.rows))


def subspace_meet(a, b):
    """Intersection via annihilators: meet = ann(ann(a) + ann(b))."""
    _check_ambient(a, b)
    f, n = a.field, a.ambient
    ann_a = nullspace(f, list(a.rows), n)
    ann_b = nullspace(f, list(b.rows), n)
    both, _ = rref(f, ann_a + ann_b)
    return Subspace(f, n, nullspace(f, list(both), n))


def subspace_meet_join(a, b):
    return subspace_meet(a, b), subspace_join(a, b)


def _check_ambient(a, b):
    if a.ambient != b.ambient or a.field != b.field:
        raise AmbientMismatch("subspaces live in different ambient spaces")


class SymplecticForm:
    """The standard form J on F^{2n}: (x_i, y_i) = 1 in interleaved basis order."""

    __slots__ = ("field", "dim")

    def __init__(self, field, dim):
        if dim % 2:
            raise LinalgError("symplectic spaces have even dimension")
        self.field = field
        self.dim = dim

    def pair(self, u, v):
        f = self.field
        acc = f.zero
        for m in range(0, self.dim, 2):
            a = f.mul(u[m], v[m + 1])
            b = f.mul(u[m + 1], v[m])
            acc = f.add(acc, f.sub(a, b))
        return acc

    def matrix(self):
        f = self.field
        rows = [[f.zero] * self.dim for _ in range(self.dim)]
        for m in range(0, self.dim, 2):
            rows[m][m + 1] = f.one
            rows[m + 1][m] = f.neg(f.one)
        return [tuple(r) for r in rows]

    def pair_with_all(self, u):
        """The covector v -> (u, v) as a row vector (u J, with our sign convention)."""
        f = self.field
        row = [f.zero] * self.dim
        for m in range(0, self.dim, 2):
            row[m + 1] = u[m]
            row[m] = f.neg(u[m + 1])
        return tuple(row)


def perp(s, form):
    if s.ambient != form.dim:
        raise AmbientMismatch("subspace and form dimensions differ")
    f = s.field
    rows = [form.pair_with_all(r) for r in s.rows]
    return Subspace(f, s.ambient, nullspace(f, rows, s.ambient))


def is_isotropic(s, form):
    f = s.field
    return all(form.pair(u, v) == f.zero for i, u in enumerate(s.rows)
               for v in s.rows[i:])


def darboux_complete(chain, form):
    """Standard basis adapted to an ascending isotropic flag of dims 1..n.

    Returns [x1, y1, ..., xn, yn] with Gram matrix exactly J and
    span{xn, ..., x_{n+1-r}} equal to chain[r-1] for every r.
    """
    f = form.field
    dim = form.dim
    n = dim // 2
    if len(chain) != n or [s.dim for s in chain] != list(range(1, n + 1)):
        raise ChainNotAscending("need an ascending chain of dims 1..n")
    for i in range(1, n):
        if not chain[i].contains_subspace(chain[i - 1]):
            raise ChainNotAscending("chain members are not nested")
    for s in chain:
        if not is_isotropic(s, form):
            raise ChainNotIsotropic("chain member is not isotropic")

    xs = [None] * n  # xs[i] will be x_{i+1}
    prev = subspace_zero(f, dim)
    for r in range(1, n + 1):
        pick = None
        for row in chain[r - 1].rows:
            if not prev.contains(row):
                pick = row
                break
        if pick is None:
            raise ChainNotAscending("chain does not grow at every step")
        xs[n - r] = pick
        prev = chain[r - 1]

    ys = [None] * n
    for i in range(n):
        rows = []
        rhs = []
        for j in range(n):
            rows.append(form.pair_with_all(xs[j]))
            rhs.append(f.one if j == i else f.zero)
        for j in range(n):
            if ys[j] is not None:
                rows.append(form.pair_with_all(ys[j]))
                rhs.append(f.zero)
        sol = solve_affine(f, rows, rhs)
        if sol is None:
            raise LinalgError("symplectic completion failed; form degenerate?")
        ys[i] = sol[0]

    basis = []
    for i in range(n):
        basis.append(tuple(xs[i]))
        basis.append(tuple(ys[i]))
    return basis


def gram_matrix(form, basis):
    return [tuple(form.pair(u, v) for v in basis) for u in basis]


def invert_matrix(field, rows):
    """Inverse of a square matrix given as a list of row tuples."""
    n = len(rows)
    aug = [list(r) + [field.one if i == j else field.zero for j in range(n)]
           for i, r in enumerate(rows)]
    red, piv = rref(field, aug)
    if piv[:n] != list(range(n)):
        raise LinalgError("matrix is singular")
    return [tuple(r[n:]) for r in red]


def mat_mul(field, a, b):
    """Product of matrices given as lists of rows."""
    bt = list(zip(*b))
    return [tuple(dot(field, ra, cb) for cb in bt) for ra in a]


def transpose(rows):
    return [tuple(c) for c in zip(*rows)]
