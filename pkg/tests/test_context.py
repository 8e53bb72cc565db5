import itertools

import pytest
from hypothesis import given, settings

from trifca import (
    CapacityError,
    FormalConcept,
    FormalContext,
    InvalidInputError,
    all_concepts_bruteforce,
    closure_intent,
    concept_lattice,
    concept_leq,
    cover_relation,
    derive_attributes,
    derive_objects,
)
from trifca import _bits
from trifca import fixtures as fx

from _strategies import contexts


def test_derive_objects_single_person():
    k1 = fx.individuals_careers()
    assert derive_objects(k1, k1.objs("Jack")) == k1.attrs("Student")


def test_derive_objects_empty_gives_all_attributes():
    ctx = fx.six_attribute_context()
    assert derive_objects(ctx, []) == frozenset(range(6))


def test_derive_objects_row_intersection():
    ctx = fx.six_attribute_context()
    assert derive_objects(ctx, ctx.objs("a", "c")) == ctx.attrs("1", "2", "4")


def test_derive_attributes_office():
    k2 = fx.careers_locations()
    assert derive_attributes(k2, k2.attrs("Office")) == k2.objs("Librarian", "Professor")


def test_derive_attributes_empty_gives_all_objects():
    ctx = fx.staircase()
    assert derive_attributes(ctx, []) == frozenset(range(3))


def test_derive_attributes_column_scan():
    ctx = fx.six_attribute_context()
    assert derive_attributes(ctx, ctx.attrs("5")) == ctx.objs("c", "d")


def test_out_of_range_indices_rejected():
    ctx = fx.staircase()
    with pytest.raises(InvalidInputError):
        derive_objects(ctx, [3])
    with pytest.raises(InvalidInputError):
        derive_attributes(ctx, [-1])
    with pytest.raises(InvalidInputError):
        closure_intent(ctx, [7])


def test_closure_intent_examples():
    six = fx.six_attribute_context()
    assert closure_intent(six, six.attrs("1", "2")) == six.attrs("1", "2", "4")
    # no attribute is shared by all six objects
    assert closure_intent(six, []) == frozenset()
    stair = fx.staircase()
    assert closure_intent(stair, stair.attrs("1")) == stair.attrs("1", "2", "3")


def test_staircase_has_three_concepts():
    ctx = fx.staircase()
    got = {(c.extent, c.intent) for c in all_concepts_bruteforce(ctx)}
    want = {
        (ctx.objs("a"), ctx.attrs("1", "2", "3")),
        (ctx.objs("a", "b"), ctx.attrs("2", "3")),
        (ctx.objs("a", "b", "c"), ctx.attrs("3")),
    }
    assert got == want


def test_staircase_removed_has_four_concepts_with_empty_extent():
    ctx = fx.staircase_removed()
    got = {(c.extent, c.intent) for c in all_concepts_bruteforce(ctx)}
    assert len(got) == 4
    assert (frozenset(), frozenset(range(3))) in got


def test_single_empty_cell():
    ctx = FormalContext(("g",), ("m",), (0,))
    got = {(c.extent, c.intent) for c in all_concepts_bruteforce(ctx)}
    assert got == {(frozenset({0}), frozenset()), (frozenset(), frozenset({0}))}


def test_bruteforce_guard():
    ctx = FormalContext((), tuple(f"m{i}" for i in range(21)), ())
    with pytest.raises(CapacityError):
        all_concepts_bruteforce(ctx)
    assert len(all_concepts_bruteforce(ctx, max_attributes=21)) == 1


def test_concept_leq_examples():
    ctx = fx.staircase()
    small = FormalConcept(ctx.objs("a"), ctx.attrs("1", "2", "3"), ctx)
    big = FormalConcept(ctx.objs("a", "b"), ctx.attrs("2", "3"), ctx)
    assert concept_leq(small, big)
    assert not concept_leq(big, small)
    assert concept_leq(big, big)


def test_concept_leq_in_people_lattice():
    k1 = fx.individuals_careers()
    concepts = all_concepts_bruteforce(k1)
    top = next(c for c in concepts if len(c.extent) == 3)
    bottom = next(c for c in concepts if not c.extent)
    jack = next(c for c in concepts if c.extent == k1.objs("Jack"))
    assert jack.intent == k1.attrs("Student")
    assert concept_leq(jack, top) and concept_leq(bottom, jack)


def test_concept_leq_rejects_mixed_contexts():
    a = next(iter(all_concepts_bruteforce(fx.staircase())))
    b = next(iter(all_concepts_bruteforce(fx.six_attribute_context())))
    with pytest.raises(InvalidInputError):
        concept_leq(a, b)


def test_cover_counts_on_worked_contexts():
    assert len(cover_relation(all_concepts_bruteforce(fx.individuals_careers()))) == 6
    k2 = fx.careers_locations()
    concepts = all_concepts_bruteforce(k2)
    assert len(concepts) == 8
    assert len(cover_relation(concepts)) == 12
    single = all_concepts_bruteforce(FormalContext(("g",), ("m",), (1,)))
    assert cover_relation(single) == set()


def test_lattice_ids_top_first_and_labels():
    k1 = fx.individuals_careers()
    lat = concept_lattice(k1)
    assert len(lat.concepts) == 5 and len(lat.edges) == 6
    assert lat.concepts[0].extent == frozenset(range(3))
    assert lat.attribute_concept(k1.attribute_index("Student")) == lat.object_concept(k1.object_index("Jack"))


def test_constructor_validation():
    with pytest.raises(InvalidInputError):
        FormalContext(("g", "g"), ("m",), (0, 0))
    with pytest.raises(InvalidInputError):
        FormalContext(("g",), ("m", "m"), (0,))
    with pytest.raises(InvalidInputError):
        FormalContext(("g",), ("m",), (2,))
    with pytest.raises(InvalidInputError):
        FormalContext.from_pairs(["g"], ["m"], [(0, 1)])
    with pytest.raises(InvalidInputError):
        FormalContext.from_named_pairs(["g"], ["m"], [("g", "x")])


def test_empty_rosters_are_legal():
    ctx = FormalContext((), (), ())
    assert derive_objects(ctx, []) == frozenset()
    assert {(c.extent, c.intent) for c in all_concepts_bruteforce(ctx)} == {(frozenset(), frozenset())}
    no_attrs = FormalContext(("g", "h"), (), (0, 0))
    assert derive_attributes(no_attrs, []) == frozenset({0, 1})


def test_galois_exhaustive_small():
    # every 3x3 context, every pair of subsets
    for bits in range(1 << 9):
        rows = tuple((bits >> (3 * g)) & 7 for g in range(3))
        ctx = FormalContext(("a", "b", "c"), ("1", "2", "3"), rows)
        for a, b in itertools.product(range(8), repeat=2):
            assert (a & ~ctx.extent_of(b) == 0) == (b & ~ctx.intent_of(a) == 0)


@settings(max_examples=150, deadline=None)
@given(contexts(max_objects=5, max_attributes=5))
def test_galois_connection(ctx):
    for a in range(1 << ctx.n_objects):
        for b in range(1 << ctx.n_attributes):
            lhs = a & ~ctx.extent_of(b) == 0
            rhs = b & ~ctx.intent_of(a) == 0
            assert lhs == rhs


@settings(max_examples=150, deadline=None)
@given(contexts())
def test_closure_operator_laws(ctx):
    n = ctx.n_attributes
    for x in range(1 << n):
        cx = ctx.close(x)
        assert x & ~cx == 0
        assert ctx.close(cx) == cx
        for y in range(1 << n):
            if x & ~y == 0:
                assert cx & ~ctx.close(y) == 0


@settings(max_examples=150, deadline=None)
@given(contexts())
def test_concepts_are_maximal_rectangles(ctx):
    for c in all_concepts_bruteforce(ctx):
        ext, itt = _bits.to_mask(c.extent), _bits.to_mask(c.intent)
        assert ctx.extent_of(itt) == ext and ctx.intent_of(ext) == itt
        assert all(ctx.rows[g] & itt == itt for g in c.extent)
        for g in set(range(ctx.n_objects)) - c.extent:
            assert ctx.rows[g] & itt != itt
        for m in set(range(ctx.n_attributes)) - c.intent:
            assert ext & ~ctx.cols[m]


@settings(max_examples=100, deadline=None)
@given(contexts(max_objects=4, max_attributes=4))
def test_cover_closure_equals_order(ctx):
    concepts = sorted(all_concepts_bruteforce(ctx), key=lambda c: sorted(c.extent))
    covers = cover_relation(concepts)
    reach = {(c, c) for c in concepts} | set(covers)
    changed = True
    while changed:
        extra = {(a, d) for a, b in reach for c, d in reach if b == c} - reach
        reach |= extra
        changed = bool(extra)
    for a in concepts:
        for b in concepts:
            assert ((a, b) in reach) == concept_leq(a, b)


@settings(max_examples=100, deadline=None)
@given(contexts())
def test_lattice_concepts_match_bruteforce(ctx):
    assert set(concept_lattice(ctx).concepts) == all_concepts_bruteforce(ctx)
