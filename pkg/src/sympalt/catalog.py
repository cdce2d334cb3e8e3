"""The dimension <= 10 classification as executable data: presentation
templates, parameter constraints, and the per-family equivalence predicates
that decide when two parameter choices give isomorphic algebras.

Labels encode (dimension, center dimension, running index); the Q labels are
the dim-10 families whose center is not isotropic, the A labels the abelian
algebras.  N4 (the unique non-abelian dim-4 algebra, not nilpotent) and W8L5
(a dim-8 boundary fixture) are kept for negative and edge tests only.
"""

from __future__ import annotations

import itertools
import json
from importlib import resources

from .field import InvalidParameter, UnsupportedField, residue_group
from .saa_core import Presentation, from_presentation


class CatalogError(Exception):
    pass


class UnknownLabel(CatalogError):
    pass


class ConstraintViolated(CatalogError):
    pass


class CharMismatch(CatalogError):
    pass


class UnsupportedDim(CatalogError):
    pass


class CatalogEntry:
    def __init__(self, data):
        self.label = data["label"]
        self.dim = data["dim"]
        self.n = data["dim"] // 2
        self.nilpotent = data["nilpotent"]
        self.branch = data["branch"]
        self.triples = [tuple(t) for t in data["triples"]]
        self.params = list(data["params"])
        self.constraints = data["constraints"]
        self.equiv = data["equiv"]

    @property
    def in_census(self):
        return self.nilpotent and self.branch is not None

    @property
    def is_abelian(self):
        return not self.triples


_CATALOG = None


def load_catalog():
    global _CATALOG
    if _CATALOG is None:
        text = resources.files("sympalt").joinpath("catalog.json").read_text()
        data = json.loads(text)
        _CATALOG = {e["label"]: CatalogEntry(e) for e in data["entries"]}
    return _CATALOG


def get_entry(label):
    cat = load_catalog()
    if label not in cat:
        raise UnknownLabel(f"no catalog entry named {label!r}")
    return cat[label]


def labels_for_dim(dim):
    return [e.label for e in load_catalog().values() if e.dim == dim and e.in_census]


def check_constraints(entry, field, params):
    """Raise unless the parameter dict satisfies every constraint over the field."""
    for name in entry.params:
        if name not in params:
            raise ConstraintViolated(f"{entry.label} needs parameter {name!r}")
    for c in entry.constraints:
        if c["type"] == "char":
            if field.char != c["value"]:
                raise CharMismatch(
                    f"{entry.label} requires characteristic {c['value']}, got {field.char}")
        elif c["type"] == "nonzero":
            if params[c["param"]] == field.zero:
                raise ConstraintViolated(f"{entry.label}: parameter {c['param']} must be nonzero")
        elif c["type"] == "nonsquare":
            if field.is_square(params[c["param"]]):
                raise ConstraintViolated(
                    f"{entry.label}: parameter {c['param']} must not be a square")
        elif c["type"] == "irreducible":
            a, b = (params[p] for p in c["params"])
            if not field.poly2_irreducible(a, b):
                raise ConstraintViolated(
                    f"{entry.label}: t^2 + {field.to_str(a)} t + {field.to_str(b)} must be irreducible")
        else:
            raise CatalogError(f"unknown constraint type {c['type']!r}")


def instantiate(label, field, params=None):
    """Build the algebra of a catalog entry over a field with given parameters."""
    entry = get_entry(label)
    params = dict(params or {})
    check_constraints(entry, field, params)
    triples = []
    for (a, b, c, val) in entry.triples:
        if isinstance(val, str) and val.startswith("$"):
            v = params[val[1:]]
        else:
            v = field.from_int(int(val))
        if v != field.zero:
            triples.append((a, b, c, v))
    pres = Presentation(field.spec(), entry.n, triples)
    alg = from_presentation(pres)
    alg.catalog_label = label
    alg.catalog_params = params
    return alg


def presentation_of(label, field, params=None):
    entry = get_entry(label)
    params = dict(params or {})
    check_constraints(entry, field, params)
    triples = []
    for (a, b, c, val) in entry.triples:
        v = params[val[1:]] if isinstance(val, str) and val.startswith("$") else field.from_int(int(val))
        if v != field.zero:
            triples.append((a, b, c, v))
    return Presentation(field.spec(), entry.n, triples)


def _sl2_orbit(field, alpha, beta):
    """All (alpha', beta') reachable by the determinant-1 transformation rules."""
    out = set()
    els = field.elements()
    one = field.one
    for a in els:
        for b in els:
            for c in els:
                for d in els:
                    if field.sub(field.mul(a, d), field.mul(b, c)) != one:
                        continue
                    den = field.add(field.mul(d, d),
                                    field.add(field.mul(field.mul(c, d), alpha),
                                              field.mul(field.mul(c, c), beta)))
                    if den == field.zero:
                        continue
                    inv = field.inv(den)
                    num_a = field.add(
                        field.mul(field.add(field.mul(a, d), field.mul(b, c)), alpha),
                        field.add(field.mul(field.from_int(2), field.mul(field.mul(a, c), beta)),
                                  field.mul(field.from_int(2), field.mul(b, d))))
                    num_b = field.add(field.mul(b, b),
                                      field.add(field.mul(field.mul(a, b), alpha),
                                                field.mul(field.mul(a, a), beta)))
                    out.add((field.mul(num_a, inv), field.mul(num_b, inv)))
    return out


def equivalent_params(label, field, p1, p2):
    """Whether two parameter dicts give isomorphic algebras of the family."""
    entry = get_entry(label)
    if not field.is_finite:
        raise UnsupportedField("parameter equivalence is decided for finite fields only")
    check_constraints(entry, field, p1)
    check_constraints(entry, field, p2)
    if entry.equiv is None:
        raise CatalogError(f"{label} is a fixture without a family structure")
    if entry.equiv == "none":
        return all(p1[k] == p2[k] for k in entry.params)
    if entry.equiv.startswith("power:"):
        k = int(entry.equiv.split(":")[1])
        ratio = field.div(p2["r"], p1["r"])
        return ratio in residue_group(field, "kth_powers", k)
    if entry.equiv == "sl2":
        return (p2["alpha"], p2["beta"]) in _sl2_orbit(field, p1["alpha"], p1["beta"])
    if entry.equiv == "p38":
        cubes = residue_group(field, "kth_powers", 3)
        if field.div(p2["r"], p1["r"]) not in cubes:
            return False
        gs = residue_group(field, "Gs", p1["s"])
        return field.div(p1["s"], p2["s"]) in gs
    if entry.equiv == "p39":
        cubes = residue_group(field, "kth_powers", 3)
        if field.div(p2["gamma"], p1["gamma"]) not in cubes:
            return False
        grs = residue_group(field, "Grs", p1["r"], p1["s"])
        ratio = field.div(p2["r"], p1["r"])
        if ratio not in grs:
            return False
        hr = residue_group(field, "Hr", p2["r"])
        delta = field.sub(p2["s"], field.mul(field.mul(ratio, ratio), p1["s"]))
        return delta in hr
    raise CatalogError(f"unknown equivalence id {entry.equiv!r}")


def _valid_param_tuples(entry, field):
    """All parameter tuples satisfying the constraints, in element order."""
    if not entry.params:
        return [()]
    out = []
    for combo in itertools.product(field.elements(), repeat=len(entry.params)):
        params = dict(zip(entry.params, combo))
        try:
            check_constraints(entry, field, params)
        except ConstraintViolated:
            continue
        out.append(combo)
    return out


def family_members(label, field):
    """One canonical parameter dict per isomorphism class of the family."""
    entry = get_entry(label)
    if not field.is_finite:
        raise UnsupportedField("family enumeration requires a finite field")
    if entry.equiv is None:
        raise CatalogError(f"{label} is a fixture without a family structure")
    for c in entry.constraints:
        if c["type"] == "char" and field.char != c["value"]:
            return []
    tuples = _valid_param_tuples(entry, field)
    if not entry.params:
        return [{}]
    reps = []
    assigned = [False] * len(tuples)
    for i, t in enumerate(tuples):
        if assigned[i]:
            continue
        rep = dict(zip(entry.params, t))
        reps.append(rep)
        for j in range(i, len(tuples)):
            if not assigned[j] and equivalent_params(label, field, rep,
                                                     dict(zip(entry.params, tuples[j]))):
                assigned[j] = True
    return reps


def canonical_params(label, field, params):
    """The least equivalent parameter tuple (the family representative)."""
    entry = get_entry(label)
    if not entry.params:
        return {}
    for rep in family_members(label, field):
        if equivalent_params(label, field, rep, params):
            return rep
    raise CatalogError("parameters match no family representative")


def catalog_over_field(field, dim):
    """Every census algebra of the given dimension over the field.

    Returns a list of dicts {label, params, algebra, abelian}; one entry per
    isomorphism class (family members are expanded to representatives).
    """
    if not field.is_finite:
        raise UnsupportedField("the classification is materialized over finite fields only")
    if dim not in (2, 4, 6, 8, 10):
        raise UnsupportedDim(f"dimension {dim} is outside the classified range")
    out = []
    for label in labels_for_dim(dim):
        entry = get_entry(label)
        try:
            members = family_members(label, field)
        except CharMismatch:
            continue
        for params in members:
            alg = instantiate(label, field, params)
            out.append({"label": label, "params": params, "algebra": alg,
                        "abelian": entry.is_abelian})
    return out


def branch_to_label():
    """Map from branch keys to census labels."""
    return {e.branch: e.label for e in load_catalog().values() if e.branch}


# Diagonal basis-change witnesses for the one-parameter scaling families:
# label -> (k, coeffs) where r scales by a^k under the change sending the
# pair (x_i, y_i) to (a^e x_i, a^-e y_i) for e = coeffs.get(i, 0).
SCALING_WITNESSES = {
    "P8(2,3)": (3, {2: 1, 3: -1, 4: -1}),
    "Q10(4,1)": (3, {2: 1, 3: -1, 4: -1}),
    "P10(3,6)": (3, {2: 1, 3: 1, 4: -1, 5: -1}),
    "P10(3,7)": (3, {2: 1, 3: 1, 4: -1, 5: -1}),
    "P10(2,2)": (4, {2: -1, 3: 1, 4: -1, 5: -2}),
    "P10(2,4)": (11, {1: 1, 2: 3, 3: 5, 4: -4, 5: -2}),
    "P10(2,5)": (3, {2: 1, 3: -1, 5: -1}),
    "P10(2,6)": (12, {1: -1, 2: 4, 3: -3, 4: 2, 5: -5}),
}


def scaling_witness_rows(field, n, a, coeffs):
    """Rows-matrix of the diagonal witness for the given unit a."""
    rows = []
    for i in range(1, n + 1):
        e = coeffs.get(i, 0)
        c = field.one
        for _ in range(abs(e)):
            c = field.mul(c, a)
        if e < 0:
            c = field.inv(c)
        ci = field.inv(c)
        xrow = [field.zero] * (2 * n)
        yrow = [field.zero] * (2 * n)
        xrow[2 * (i - 1)] = c
        yrow[2 * (i - 1) + 1] = ci
        rows.append(tuple(xrow))
        rows.append(tuple(yrow))
    return rows
