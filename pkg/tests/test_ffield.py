import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from innergalois.ffield import (
    DegreeCapExceeded,
    FieldElement,
    FieldMismatch,
    NonPrimeCharacteristic,
    NotADivisor,
    ReducibleModulus,
    ZeroPolynomial,
    all_roots,
    canonical_modulus,
    extension,
    field_info,
    format_element,
    frobenius,
    make_field,
    norm_trace,
    parse_element,
    prime_factors,
    root_multiplicities,
)
from oracles import NaiveField, smallest_irreducible

SMALL_FIELDS = [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (5, 1), (5, 2), (7, 1), (13, 1), (2, 6)]


@pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2), (2, 6)])
def test_modulus_is_lex_smallest_irreducible(p, k):
    assert canonical_modulus(p, k) == smallest_irreducible(p, k)


def test_frozen_moduli():
    assert make_field(2, 2).modulus == (1, 1, 1)
    assert make_field(2, 3).modulus == (1, 0, 1, 1)
    assert make_field(3, 2).modulus == (1, 0, 1)
    assert make_field(2, 6).modulus == (1, 0, 0, 0, 0, 1, 1)


def test_prime_field_primitive():
    assert make_field(2).primitive == 1
    F7 = make_field(7)
    # 2 generates only the squares; the smallest generator is 3
    assert NaiveField(7, 1, (0, 1)).order(2) == 3
    assert F7.primitive == 3


@pytest.mark.parametrize("p,k", SMALL_FIELDS)
def test_primitive_has_full_order(p, k):
    F = make_field(p, k)
    g = F.primitive
    assert F.pow(g, F.q - 1) == 1
    for r in prime_factors(F.q - 1):
        assert F.pow(g, (F.q - 1) // r) != 1


@pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (3, 2), (5, 1), (7, 1), (2, 4)])
def test_tables_match_schoolbook(p, k):
    F = make_field(p, k)
    N = NaiveField(p, k, F.modulus)
    for a in range(F.q):
        for b in range(F.q):
            assert F.mul(a, b) == N.mul(a, b)
            assert F.add(a, b) == N.add(a, b)


def test_errors():
    with pytest.raises(NonPrimeCharacteristic):
        make_field(4)
    with pytest.raises(DegreeCapExceeded):
        make_field(2, 9)
    with pytest.raises(DegreeCapExceeded):
        make_field(13, 6)
    with pytest.raises(ReducibleModulus):
        make_field(2, 2, [1, 0, 1])


def test_explicit_modulus():
    F = make_field(2, 3, [1, 1, 0, 1])
    assert F.modulus == (1, 1, 0, 1)
    assert F is not make_field(2, 3)


def test_frobenius_examples():
    F4 = make_field(2, 2)
    w = FieldElement(F4, 2)  # the class of x, a root of x^2 + x + 1
    assert frobenius(w) == w * w
    for a in range(4):
        assert frobenius(FieldElement(F4, a), 2).code == a
    F2 = make_field(2)
    assert frobenius(FieldElement(F2, 1)).code == 1


@pytest.mark.parametrize("p,k", SMALL_FIELDS)
def test_frobenius_fixed_set_is_prime_field(p, k):
    F = make_field(p, k)
    fixed = [a for a in range(F.q) if F.frob(a, 1) == a]
    assert fixed == list(range(p))
    assert all(F.frob(a, k) == a for a in range(F.q))


def test_norm_trace_examples():
    F4 = make_field(2, 2)
    w = FieldElement(F4, 2)
    n, t = norm_trace(w, 1)
    assert (n.code, t.code) == (1, 1)
    n, t = norm_trace(FieldElement(F4, 1), 1)
    assert (n.code, t.code) == (1, 0)
    n, t = norm_trace(FieldElement(F4, 0), 1)
    assert (n.code, t.code) == (0, 0)
    with pytest.raises(NotADivisor):
        norm_trace(w, 3)


@pytest.mark.parametrize("p,k,d", [(2, 4, 2), (3, 2, 1), (2, 6, 3), (2, 6, 2)])
def test_norm_trace_land_in_subfield(p, k, d):
    F = make_field(p, k)
    for a in range(F.q):
        n, t = norm_trace(FieldElement(F, a), d)
        assert F.in_subfield(n.code, d) and F.in_subfield(t.code, d)


def test_all_roots_examples():
    F2 = make_field(2)
    e = lambda c: FieldElement(F2, c)  # noqa: E731
    assert [(r.code, m) for r, m in all_roots([e(0), e(1), e(1)])] == [(0, 1), (1, 1)]
    assert all_roots([e(1), e(1), e(1)]) == []
    F7 = make_field(7)
    roots = root_multiplicities(F7, [1, 0, 0, 1])
    assert sorted(r for r, _ in roots) == [3, 5, 6]
    with pytest.raises(ZeroPolynomial):
        root_multiplicities(F7, [0, 0])


def test_root_multiplicity_counts_repeats():
    F = make_field(3)
    # (t - 1)^2 (t - 2) = t^3 - 4t^2 + 5t - 2 = t^3 + 2t^2 + 2t + 1 over GF(3)
    assert root_multiplicities(F, [1, 2, 2, 1]) == [(1, 2), (2, 1)]


def test_embedding_is_a_homomorphism():
    big, sub = make_field(2, 6), make_field(2, 3)
    t = big.embedding(sub)
    for a in range(sub.q):
        for b in range(sub.q):
            assert t[sub.mul(a, b)] == big.mul(t[a], t[b])
            assert t[sub.add(a, b)] == big.add(t[a], t[b])
    assert sorted(t) == sorted(x for x in range(big.q) if big.in_subfield(x, 3))


def test_parse_and_format_roundtrip():
    F = make_field(3, 2)
    for a in range(F.q):
        assert parse_element(F, format_element(F, a)) == a
    assert parse_element(F, -1) == 2
    assert parse_element(F, "12") == 1 + 2 * 3
    assert parse_element(make_field(13), "12") == 12 == parse_element(make_field(13), "c")


def test_mixing_contexts_fails():
    with pytest.raises(FieldMismatch):
        FieldElement(make_field(2, 2), 1) + FieldElement(make_field(2, 3), 1)


def test_field_info_and_extension():
    info = field_info(make_field(2, 2))
    assert (info.order, info.modulus) == (4, (1, 1, 1))
    assert extension(make_field(2, 3), 2) is make_field(2, 6)


@pytest.mark.parametrize("p,k", [(2, 3), (3, 2), (5, 1), (2, 4), (7, 1), (13, 1), (3, 3)])
@settings(max_examples=1000)
@given(data=st.data())
def test_field_axioms(p, k, data):
    F = make_field(p, k)
    a, b, c = (data.draw(st.integers(0, F.q - 1)) for _ in range(3))
    x, y, z = (FieldElement(F, v) for v in (a, b, c))
    assert (x * y) * z == x * (y * z)
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x and x * y == y * x
    assert x - x == 0
    if a:
        assert x * x.inverse() == 1
