import pytest

from hopfcheck import catalog
from hopfcheck.finsemi import cyclic_group, left_zero
from hopfcheck.morph import (
    Collision, ExactInjective, ExactNonSurjective, FailedRelation, GeneratorMap, GeneratorsCovered,
    NoCollisionUpTo, NotFound, UncoveredUpTo, certify, check_endomorphism, compose, confidence,
    find_endomorphisms, identity_map, is_code, non_cohopf_witness, non_hopf_witness, square,
    verify_collision,
)


@pytest.fixture(scope="module")
def t():
    return catalog.one_relator()


def test_phi_is_a_non_injective_surjection(t):
    cert = certify(GeneratorMap.parse(t, "a->a, b->bab"), 7)
    assert cert.is_endomorphism
    assert cert.collision == Collision("ab^2a^2b^2", "b", "bab")
    assert isinstance(cert.surjectivity, GeneratorsCovered)
    assert dict(cert.surjectivity.witnesses) == {"a": "a", "b": "ab^2"}
    assert confidence(cert) == "exact"


def test_phi_collision_under_the_other_letter_order():
    ta = catalog.one_relator("a b")
    cert = certify(GeneratorMap.parse(ta, "a->a, b->bab"), 7)
    assert (cert.collision.u, cert.collision.v) == ("ab^2a^2b^2", "b")


def test_failed_relation(t):
    cert = check_endomorphism(GeneratorMap.parse(t, "a->b, b->b"))
    assert isinstance(cert.endo_status, FailedRelation)
    assert cert.endo_status.images == ("b^7", "b")


def test_verify_collision(t):
    phi = GeneratorMap.parse(t, "a->a, b->bab")
    assert verify_collision(phi, "ab^2a^2b^2", "b").image == "bab"
    assert verify_collision(phi, "a", "b") is None


def test_non_hopf_search_finds_phi(t):
    cert = non_hopf_witness(t, 3, 7)
    assert dict(cert.map.images) == dict(GeneratorMap.parse(t, "a->a, b->bab").images)


def test_free_monogenic_square():
    free = catalog.free_monogenic()
    cert = certify(GeneratorMap.parse(free, "x->x^2"), 6)
    assert isinstance(cert.injectivity, ExactInjective)
    assert cert.surjectivity == ExactNonSurjective(("x",), "length rule: every image has length >= 2")
    assert non_hopf_witness(free, 2, 6) == NotFound(
        "no surjective non-injective endomorphism with image length <= 2 found at radius 6")
    assert str(non_cohopf_witness(free, 2, 6).map) == "x->x^2"


def test_monogenic_extension_endomorphisms():
    s = catalog.monogenic_extension()
    certs = find_endomorphisms(s, 3, 6)
    assert len(certs) == 6
    injective = [c for c in certs if c.collision is None]
    assert sorted(str(c.map) for c in injective) == ["x->x, y->y", "x->y, y->x"]
    assert all(isinstance(c.injectivity, ExactInjective) for c in injective)
    assert isinstance(non_cohopf_witness(s, 3, 6), NotFound)


def test_search_order_is_canonical():
    s = catalog.monogenic_extension()
    keys = [c.map.sort_key() for c in find_endomorphisms(s, 2, 4)]
    assert keys == sorted(keys)


def test_square_and_compose(t):
    phi = GeneratorMap.parse(t, "a->a, b->bab")
    assert square(phi) == compose(phi, phi)
    assert str(square(phi)("b")) == str(phi(phi("b")))
    assert compose(identity_map(t), phi) == phi


@pytest.mark.parametrize("words, expected", [
    (["\x00\x00"], True),
    (["\x00", "\x00\x01", "\x01"], False),   # a.b = ab
    (["\x00", "\x01\x00", "\x01\x01"], True),  # prefix code
    (["\x00\x01", "\x01\x00", "\x00"], False),  # a.ba = ab.a
    (["\x00", "\x00\x00"], False),
])
def test_sardinas_patterson(words, expected):
    assert is_code(words) is expected


def test_bounded_injectivity_on_a_non_free_semigroup():
    from hopfcheck.fpsemi import FpSemigroup
    comm = FpSemigroup.from_strings("a b", [("ba", "ab")])
    cert = certify(GeneratorMap.parse(comm, "a->a^2, b->b^2"), 5)
    assert cert.injectivity == NoCollisionUpTo(5)
    assert isinstance(cert.surjectivity, ExactNonSurjective)
    assert confidence(cert) == "bounded"


def test_uncovered_up_to_without_length_rule():
    from hopfcheck.fpsemi import FpSemigroup
    comm = FpSemigroup.from_strings("a b", [("ba", "ab")])
    cert = certify(GeneratorMap.parse(comm, "a->a, b->ab"), 4)
    assert cert.surjectivity == UncoveredUpTo(4, ("b",))


def test_finite_backend_bijective_statuses_agree():
    g = cyclic_group(4)
    for cert in find_endomorphisms(g):
        inj = isinstance(cert.injectivity, ExactInjective)
        sur = isinstance(cert.surjectivity, GeneratorsCovered)
        assert inj == sur
    lz = left_zero("abc")
    cert = certify(GeneratorMap(lz, {"a": "a", "b": "a", "c": "a"}), 1)
    assert isinstance(cert.injectivity, Collision)
    assert isinstance(cert.surjectivity, ExactNonSurjective)


def test_finite_semigroups_have_no_witnesses():
    assert isinstance(non_hopf_witness(cyclic_group(3), 1, 1), NotFound)
    assert isinstance(non_cohopf_witness(cyclic_group(3), 1, 1), NotFound)
