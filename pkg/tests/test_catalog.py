import itertools

import pytest

from sympalt.field import (
    BinaryExtensionField,
    PrimeField,
    RationalField,
    UnsupportedField,
    residue_group,
)
from sympalt.catalog import (
    CatalogError,
    CharMismatch,
    ConstraintViolated,
    UnknownLabel,
    UnsupportedDim,
    catalog_over_field,
    canonical_params,
    equivalent_params,
    family_members,
    get_entry,
    instantiate,
    labels_for_dim,
    load_catalog,
    presentation_of,
)
from sympalt.linalg import is_isotropic
from sympalt.saa_core import (
    algebra_in_basis,
    center_rank,
    check_axioms,
    from_presentation,
    nilpotency_class,
    is_nilpotent,
)

GF2 = PrimeField(2)
GF3 = PrimeField(3)
GF4 = BinaryExtensionField(2)
GF5 = PrimeField(5)
GF7 = PrimeField(7)

# expected (class, center dim, center isotropic) per census label over GF(3)
EXPECTED = {
    "A2": (1, 2, False), "A4": (1, 4, False), "A6": (1, 6, False),
    "A8": (1, 8, False), "A10": (1, 10, False),
    "P6(3,1)": (2, 3, True),
    "P8(5,1)": (2, 5, False), "P8(3,2)": (3, 3, True), "P8(2,3)": (5, 2, True),
    "Q10(7,1)": (2, 7, False), "Q10(5,1)": (3, 5, False), "Q10(4,1)": (5, 4, False),
    "P10(5,1)": (2, 5, True),
    "P10(4,1)": (3, 4, True), "P10(4,2)": (3, 4, True), "P10(4,3)": (3, 4, True),
    "P10(4,4)": (3, 4, True),
    "P10(3,1)": (4, 3, True), "P10(3,2)": (4, 3, True), "P10(3,3)": (4, 3, True),
    "P10(3,4)": (5, 3, True), "P10(3,5)": (5, 3, True), "P10(3,6)": (5, 3, True),
    "P10(3,7)": (5, 3, True), "P10(3,8)": (5, 3, True), "P10(3,9)": (5, 3, True),
    "P10(2,1)": (6, 2, True), "P10(2,2)": (6, 2, True), "P10(2,3)": (7, 2, True),
    "P10(2,4)": (7, 2, True), "P10(2,5)": (7, 2, True), "P10(2,6)": (7, 2, True),
    "P10(2,7)": (7, 2, True),
}


def default_params(label, field):
    members = family_members(label, field)
    assert members, f"{label} has no valid parameters over {field!r}"
    return members[0]


def census_fields_for(label):
    entry = get_entry(label)
    chars = [c["value"] for c in entry.constraints if c["type"] == "char"]
    if chars == [2]:
        return [GF2, GF4]
    if label == "P10(3,8)":
        return [GF3, GF5, GF7]  # needs a non-square; impossible over finite char 2
    return [GF2, GF3, GF4, GF5, GF7]


def test_every_census_label_instantiates_with_expected_shape():
    for label, (cls, zdim, iso) in EXPECTED.items():
        for field in census_fields_for(label):
            members = family_members(label, field)
            if not members:
                continue
            alg = instantiate(label, field, members[0])
            assert check_axioms(alg).ok, label
            assert nilpotency_class(alg) == cls, (label, field)
            got = center_rank(alg)
            assert got["center"].dim == zdim, (label, field)
            assert got["isotropic"] == iso, (label, field)


def test_fixture_entries():
    n4 = instantiate("N4", GF3)
    assert check_axioms(n4).ok and not is_nilpotent(n4)
    w = instantiate("W8L5", GF3, {"r": 1})
    assert nilpotency_class(w) == 5
    with pytest.raises(CatalogError):
        family_members("W8L5", GF3)
    with pytest.raises(UnknownLabel):
        instantiate("P10(9,9)", GF3)


def test_constraint_errors():
    with pytest.raises(ConstraintViolated):
        instantiate("P8(2,3)", GF3, {"r": 0})
    assert instantiate("P10(3,8)", GF5, {"r": 1, "s": 2}) is not None
    with pytest.raises(ConstraintViolated):
        instantiate("P10(3,8)", GF5, {"r": 1, "s": 4})  # 4 = 2^2
    assert instantiate("P10(4,4)", GF3, {"alpha": 0, "beta": 1}) is not None
    with pytest.raises(ConstraintViolated):
        instantiate("P10(4,4)", GF3, {"alpha": 0, "beta": 2})  # t^2+2 has root 1
    with pytest.raises(CharMismatch):
        instantiate("P10(3,9)", GF3, {"gamma": 1, "r": 1, "s": 1})


def test_equivalent_params_examples():
    assert equivalent_params("P8(2,3)", GF7, {"r": 1}, {"r": 6})
    assert not equivalent_params("P8(2,3)", GF7, {"r": 1}, {"r": 2})
    assert not equivalent_params("P10(2,2)", GF3, {"r": 1}, {"r": 2})
    for label in ("P8(2,3)", "P10(2,2)", "P10(2,6)"):
        assert equivalent_params(label, GF3, {"r": 2}, {"r": 2})
    with pytest.raises(UnsupportedField):
        equivalent_params("P8(2,3)", RationalField(), {"r": 1}, {"r": 1})


def test_equivalence_is_equivalence_relation():
    cases = [
        ("P8(2,3)", [GF2, GF3, GF4, GF5, GF7]),
        ("P10(2,2)", [GF3, GF5, GF7]),
        ("P10(2,4)", [GF3, GF5]),
        ("P10(2,6)", [GF3, GF5]),
        ("P10(3,6)", [GF3, GF4, GF7]),
        ("P10(3,8)", [GF3, GF5, GF7]),
        ("P10(3,9)", [GF2, GF4]),
    ]
    for label, fields in cases:
        entry = get_entry(label)
        for field in fields:
            tuples = []
            for combo in itertools.product(field.elements(), repeat=len(entry.params)):
                p = dict(zip(entry.params, combo))
                try:
                    ok = True
                    from sympalt.catalog import check_constraints
                    check_constraints(entry, field, p)
                except (ConstraintViolated, CharMismatch):
                    ok = False
                if ok:
                    tuples.append(p)
            for p in tuples:
                assert equivalent_params(label, field, p, p)
            for p, q in itertools.combinations(tuples, 2):
                assert equivalent_params(label, field, p, q) == \
                    equivalent_params(label, field, q, p)
            # transitivity
            for p, q, r in itertools.combinations(tuples, 3):
                if equivalent_params(label, field, p, q) and equivalent_params(label, field, q, r):
                    assert equivalent_params(label, field, p, r)


def test_family_member_counts():
    assert len(family_members("P8(2,3)", GF3)) == 1
    assert len(family_members("P8(2,3)", GF7)) == 3
    assert len(family_members("P10(2,2)", GF3)) == 2
    assert len(family_members("P10(2,4)", GF3)) == 1
    assert len(family_members("P10(2,5)", GF3)) == 1
    assert len(family_members("P10(2,6)", GF3)) == 2
    assert len(family_members("P10(3,6)", GF3)) == 1
    assert len(family_members("P10(3,6)", GF7)) == 3
    assert len(family_members("P10(3,7)", GF3)) == 1
    assert len(family_members("P10(3,8)", GF3)) == 1
    assert len(family_members("P10(3,8)", GF4)) == 0   # every element is a square
    assert len(family_members("P10(3,9)", GF2)) == 1
    assert len(family_members("P10(3,9)", GF4)) == 3   # 3 | 4 - 1
    assert len(family_members("P10(4,4)", GF3)) == 1
    assert len(family_members("P10(4,4)", GF2)) == 1
    assert len(family_members("P10(4,4)", GF4)) == 1
    assert len(family_members("P10(4,4)", GF5)) == 1


def test_catalog_over_field_counts():
    got = catalog_over_field(GF3, 6)
    assert len(got) == 2 and sum(1 for g in got if not g["abelian"]) == 1

    got = catalog_over_field(GF3, 8)
    assert len(got) == 4
    labels = sorted(g["label"] for g in got)
    assert labels == ["A8", "P8(2,3)", "P8(3,2)", "P8(5,1)"]

    got = catalog_over_field(GF3, 10)
    non_ab = [g for g in got if not g["abelian"]]
    assert len(non_ab) == 25
    by_branch = {"non_iso": 0, "z5": 0, "z4": 0, "z3": 0, "z2": 0}
    for g in non_ab:
        lab = g["label"]
        if lab.startswith("Q"):
            by_branch["non_iso"] += 1
        elif lab.startswith("P10(5"):
            by_branch["z5"] += 1
        elif lab.startswith("P10(4"):
            by_branch["z4"] += 1
        elif lab.startswith("P10(3"):
            by_branch["z3"] += 1
        else:
            by_branch["z2"] += 1
    assert by_branch == {"non_iso": 3, "z5": 1, "z4": 4, "z3": 8, "z2": 9}

    with pytest.raises(UnsupportedDim):
        catalog_over_field(GF3, 12)
    with pytest.raises(UnsupportedField):
        catalog_over_field(RationalField(), 10)


# frozen diagonal basis-change witnesses for the scaling families:
# coeffs maps pair index i -> exponent e, meaning the new x_i is a^e x_i and
# the new y_i is a^-e y_i; r scales by the stated power of a.
SCALING = {
    "P8(2,3)": (3, {2: 1, 3: -1, 4: -1}),
    "Q10(4,1)": (3, {2: 1, 3: -1, 4: -1}),
    "P10(3,6)": (3, {2: 1, 3: 1, 4: -1, 5: -1}),
    "P10(3,7)": (3, {2: 1, 3: 1, 4: -1, 5: -1}),
    "P10(2,2)": (4, {2: -1, 3: 1, 4: -1, 5: -2}),
    "P10(2,4)": (11, {1: 1, 2: 3, 3: 5, 4: -4, 5: -2}),
    "P10(2,5)": (3, {2: 1, 3: -1, 5: -1}),
    "P10(2,6)": (12, {1: -1, 2: 4, 3: -3, 4: 2, 5: -5}),
}


def scaling_basis(alg, field, a, coeffs):
    basis = []
    for i in range(1, alg.n + 1):
        e = coeffs.get(i, 0)
        c = field.one
        for _ in range(abs(e)):
            c = field.mul(c, a)
        if e < 0:
            c = field.inv(c)
        ci = field.inv(c)
        basis.append(tuple(field.mul(c, t) for t in alg.basis_vector(2 * (i - 1))))
        basis.append(tuple(field.mul(ci, t) for t in alg.basis_vector(2 * (i - 1) + 1)))
    return basis


def test_scaling_witnesses_transport_exactly():
    for label, (power, coeffs) in SCALING.items():
        for field in (GF3, GF5, GF7):
            for a in field.units():
                r = field.one
                ap = field.one
                for _ in range(power):
                    ap = field.mul(ap, a)
                s = field.mul(ap, r)
                src = instantiate(label, field, {"r": r})
                dst = instantiate(label, field, {"r": s})
                moved = algebra_in_basis(src, scaling_basis(src, field, a, coeffs))
                assert moved.gamma_key() == dst.gamma_key(), (label, field.order, a)


def test_canonical_params_roundtrip():
    for label, field, params in [
        ("P8(2,3)", GF7, {"r": 6}),
        ("P10(2,2)", GF3, {"r": 2}),
        ("P10(4,4)", GF5, {"alpha": 0, "beta": 2}),
    ]:
        rep = canonical_params(label, field, params)
        assert equivalent_params(label, field, rep, params)
        assert rep in family_members(label, field)


def test_presentation_of_matches_instantiate():
    p = presentation_of("P10(2,4)", GF3, {"r": 2})
    alg = from_presentation(p)
    assert alg.gamma_key() == instantiate("P10(2,4)", GF3, {"r": 2}).gamma_key()
