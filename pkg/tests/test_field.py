import pytest

from sympalt.field import (
    BinaryExtensionField,
    InvalidParameter,
    NonPrimeModulus,
    PrimeField,
    RationalField,
    UnsupportedExtension,
    UnsupportedField,
    field_make,
    field_to_json,
    kth_power_index,
    parse_field_name,
    pow_elem,
    residue_group,
)


def all_fields_upto_9():
    return [PrimeField(2), PrimeField(3), PrimeField(5), PrimeField(7),
            BinaryExtensionField(2), BinaryExtensionField(3)]


def test_make_and_spec_roundtrip():
    for spec in [("prime", 3), ("prime", 97), ("ext", 2, 2), ("ext", 2, 3), ("rationals",)]:
        f = field_make(spec)
        assert f.spec() == spec
        assert field_make(field_to_json(f)).spec() == spec


def test_make_rejects_bad_specs():
    with pytest.raises(NonPrimeModulus):
        field_make(("prime", 6))
    with pytest.raises(NonPrimeModulus):
        field_make(("prime", 101))
    with pytest.raises(UnsupportedExtension):
        field_make(("ext", 3, 2))
    with pytest.raises(UnsupportedExtension):
        field_make(("ext", 2, 4))


def test_parse_field_name():
    assert parse_field_name("gf3").spec() == ("prime", 3)
    assert parse_field_name("gf4").spec() == ("ext", 2, 2)
    assert parse_field_name("gf8").spec() == ("ext", 2, 3)
    assert parse_field_name("q").spec() == ("rationals",)
    with pytest.raises(UnsupportedExtension):
        parse_field_name("gf9")


def test_prime_field_basic_values():
    f3 = PrimeField(3)
    assert f3.mul(2, 2) == 1
    f2 = PrimeField(2)
    assert f2.add(1, 1) == 0


def test_field_axioms_exhaustive():
    # associativity, commutativity, distributivity, inverses on every pair/triple
    for f in all_fields_upto_9():
        els = f.elements()
        for a in els:
            assert f.add(a, f.zero) == a
            assert f.mul(a, f.one) == a
            assert f.add(a, f.neg(a)) == f.zero
            if a != f.zero:
                assert f.mul(a, f.inv(a)) == f.one
            for b in els:
                assert f.add(a, b) == f.add(b, a)
                assert f.mul(a, b) == f.mul(b, a)
                for c in els:
                    assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
                    assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


def test_gf4_units_cyclic_of_order_3():
    f = BinaryExtensionField(2)
    # every nonzero element has multiplicative order dividing 3, and some has order 3
    orders = []
    for a in f.units():
        x, n = a, 1
        while x != f.one:
            x = f.mul(x, a)
            n += 1
        orders.append(n)
    assert sorted(orders) == [1, 3, 3]


def test_rationals():
    q = RationalField()
    half = q.from_str("1/2")
    assert q.to_str(q.add(half, half)) == "1"
    assert q.inv(q.from_str("-2/3")) == q.from_str("-3/2")
    with pytest.raises(UnsupportedField):
        q.elements()
    with pytest.raises(UnsupportedField):
        residue_group(q, "kth_powers", 3)


def test_kth_powers_examples():
    f7 = PrimeField(7)
    cubes = residue_group(f7, "kth_powers", 3)
    assert cubes.members == frozenset(pow(x, 3, 7) for x in range(1, 7))
    assert cubes.members == frozenset({1, 6})

    f3 = PrimeField(3)
    assert residue_group(f3, "kth_powers", 4).members == frozenset({1})

    for f in all_fields_upto_9():
        assert residue_group(f, "kth_powers", 1).members == frozenset(f.units())


def test_kth_powers_index_is_gcd():
    for f in all_fields_upto_9():
        for k in range(1, 13):
            g = residue_group(f, "kth_powers", k)
            assert (f.order - 1) % len(g) == 0
            assert (f.order - 1) // len(g) == kth_power_index(f, k)


def _is_mult_closed(f, members):
    return all(f.mul(a, b) in members for a in members for b in members) and all(
        f.inv(a) in members for a in members
    )


def test_Gs_is_multiplicative_subgroup():
    for f in [PrimeField(3), PrimeField(5), PrimeField(7)]:
        for s in f.elements():
            if f.is_square(s):
                with pytest.raises(InvalidParameter):
                    residue_group(f, "Gs", s)
            else:
                g = residue_group(f, "Gs", s)
                assert f.zero not in g.members
                assert _is_mult_closed(f, g.members)


def test_Hr_is_additive_subgroup():
    for f in [PrimeField(2), BinaryExtensionField(2), BinaryExtensionField(3)]:
        for r in f.elements():
            g = residue_group(f, "Hr", r)
            assert g.degenerate == (r == f.zero)
            for a in g.members:
                for b in g.members:
                    assert f.add(a, b) in g.members
    with pytest.raises(InvalidParameter):
        residue_group(PrimeField(3), "Hr", 1)


def test_Grs_is_multiplicative_subgroup():
    f = BinaryExtensionField(2)
    # t^2 + t + 1 is irreducible over GF(4)? it has roots in GF(4); use a valid pair instead
    found = False
    for r in f.elements():
        for s in f.elements():
            if f.poly2_irreducible(r, s):
                g = residue_group(f, "Grs", r, s)
                assert f.zero not in g.members
                assert _is_mult_closed(f, g.members)
                found = True
    assert found
    with pytest.raises(InvalidParameter):
        # t^2 + t + 0 = t(t+1) is reducible
        residue_group(f, "Grs", f.one, f.zero)


def test_grs_gf4_norms_example():
    # over GF(4) with an irreducible t^2 + r t + s the norm form is surjective onto F*
    f = BinaryExtensionField(2)
    pairs = [(r, s) for r in f.elements() for s in f.elements() if f.poly2_irreducible(r, s)]
    assert pairs
    for r, s in pairs:
        g = residue_group(f, "Grs", r, s)
        assert g.members == frozenset(f.units())


def test_pow_elem():
    f = PrimeField(7)
    for a in f.elements():
        for k in range(6):
            assert pow_elem(f, a, k) == pow(a, k, 7) if k else pow_elem(f, a, k) == 1
