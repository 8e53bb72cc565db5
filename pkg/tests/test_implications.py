import itertools
import random

from hypothesis import given, settings
from hypothesis import strategies as st

from trifca import (
    FormalContext,
    Implication,
    MetaModel,
    TriadicContext,
    build_implication_aggregate,
    compose,
    conditional_base_composed,
    conditional_base_generic,
    conditional_context,
    conditional_implication_holds,
    delete_attributes,
    implication_holds,
    modified_next_closure,
    next_closure,
    remove_incidences,
    transfer_base_delete,
    transfer_base_remove,
    triadic_base_composed,
    triadic_base_generic,
    triadic_implication_holds,
)
from trifca import _bits
from trifca import fixtures as fx
from trifca.implications import union_premise_candidates
from trifca.meta import attributes_under, bottom_is_full, transfer_intents_remove

from _oracles import check_base_transfers
from _strategies import meta_models, random_context, random_model, triadic_contexts


def named_imp(ctx, premise, conclusion):
    return Implication(ctx.attrs(*premise), ctx.attrs(*conclusion))


def test_implication_holds_examples():
    six = fx.six_attribute_context()
    assert implication_holds(six, six.attrs("5"), six.attrs("6"))
    assert implication_holds(six, six.attrs("1", "3"), six.attrs("1", "3"))
    k2 = fx.careers_locations()
    assert not implication_holds(k2, k2.attrs("Office"), k2.attrs("Library"))


def test_triadic_implication_discriminates_cases():
    one, two = (compose(fx.discriminator_model(c)) for c in (1, 2))
    assert triadic_implication_holds(two, [0], [1], [1])
    assert not triadic_implication_holds(one, [0], [1], [1])
    # no conditions: the conditional context is the full table
    assert triadic_implication_holds(one, [0], [1, 2], [])


def test_conditional_implication_examples():
    two = compose(fx.discriminator_model(2))
    assert conditional_implication_holds(two, [0], [1], [1])
    assert conditional_implication_holds(two, [0], [2], [])
    K = compose(fx.career_model(short_names=True))
    assert conditional_implication_holds(K, [0], [0], [0, 1])
    assert not conditional_implication_holds(K, [0], [1], [0, 1])


@settings(max_examples=150, deadline=None)
@given(triadic_contexts(max_size=3))
def test_triadic_implication_bridges_to_conditional_context(K):
    nm, nb = len(K.attributes), len(K.conditions)
    for cmask in range(1 << nb):
        cs = _bits.to_set(cmask)
        ctx = conditional_context(K, cs)
        for r, s in itertools.product(range(1 << nm), repeat=2):
            rs, ss = _bits.to_set(r), _bits.to_set(s)
            assert triadic_implication_holds(K, rs, ss, cs) == implication_holds(ctx, rs, ss)


def test_transfer_base_delete_on_six_attributes():
    six = fx.six_attribute_context()
    _, base = next_closure(six)
    got = transfer_base_delete(six, six.attrs("2"), base)
    red = fx.six_attribute_context_deleted()
    assert got == [
        named_imp(red, ["5"], ["5", "6"]),
        named_imp(red, ["4"], ["1", "4"]),
        named_imp(red, ["1", "6"], ["1", "3", "4", "5", "6"]),
    ]
    assert set(got) <= set(next_closure(red)[1])


def test_transfer_base_delete_disjoint_keeps_base():
    rnd = random.Random(2)
    checked = 0
    for _ in range(200):
        ctx = random_context(rnd, rnd.randint(1, 5), rnd.randint(2, 5))
        _, base = next_closure(ctx)
        used = frozenset().union(*(i.premise | i.conclusion for i in base))
        for m in set(range(ctx.n_attributes)) - used:
            shift = lambda xs: frozenset(x - (x > m) for x in xs)
            want = [Implication(shift(i.premise), shift(i.conclusion)) for i in base]
            assert transfer_base_delete(ctx, [m], base) == want
            checked += 1
    assert checked > 10


def test_transfer_base_remove_examples():
    stair = fx.staircase()
    _, base = next_closure(stair)
    got = transfer_base_remove(stair, stair.attrs("3"), base)
    assert named_imp(stair, ["3"], ["1", "2", "3"]) in got
    assert set(got) <= set(next_closure(fx.staircase_removed())[1])
    six = fx.six_attribute_context()
    _, six_base = next_closure(six)
    as_delete = [Implication(i.premise, i.conclusion) for i in transfer_base_delete(six, [], six_base)]
    assert transfer_base_remove(six, [], six_base) == as_delete


def test_unrefined_remove_transfer_emits_non_members():
    # no objects: the empty set closes to everything, also after removal
    ctx = FormalContext((), ("0", "1", "2", "3"), ())
    _, base = next_closure(ctx)
    truth = set(next_closure(remove_incidences(ctx, [1]))[1])
    loose = transfer_base_remove(ctx, [1], base, strict=False)
    assert Implication(frozenset(), frozenset({0, 2, 3})) in loose
    assert not set(loose) <= truth
    assert set(transfer_base_remove(ctx, [1], base)) <= truth


def test_transfers_random_containment():
    rnd = random.Random(5)
    for _ in range(200):
        ctx = random_context(rnd, rnd.randint(0, 5), rnd.randint(1, 5))
        drop = rnd.randrange(1 << ctx.n_attributes)
        assert check_base_transfers(ctx, drop) == []


def test_union_premise_candidates_on_six_attributes():
    six = fx.six_attribute_context()
    _, base = next_closure(six)
    red = fx.six_attribute_context_deleted()
    intents, red_base = next_closure(red)
    got = union_premise_candidates(six, six.attribute_index("2"), base, intents)
    for imp in got:
        assert implication_holds(red, imp.premise, imp.conclusion)
    outsider = named_imp(red, ["1", "3", "4"], ["1", "3", "4", "5", "6"])
    assert outsider in got and outsider not in red_base
    assert named_imp(red, ["3", "6"], ["1", "3", "4", "5", "6"]) in got
    assert union_premise_candidates(six, six.attribute_index("6"), [b for b in base if 5 not in b.premise], intents) == []


def test_union_premise_candidates_random_hold():
    rnd = random.Random(9)
    for _ in range(150):
        ctx = random_context(rnd, rnd.randint(0, 5), rnd.randint(2, 5))
        m = rnd.randrange(ctx.n_attributes)
        _, base = next_closure(ctx)
        red = delete_attributes(ctx, [m])
        intents, _ = next_closure(red)
        for imp in union_premise_candidates(ctx, m, base, intents):
            assert implication_holds(red, imp.premise, imp.conclusion)


def test_career_model_bases_have_no_reuse():
    mm = fx.career_model(short_names=True)
    table = triadic_base_composed(mm, validate=True)
    assert len(table.conditional()) == 7
    assert table.reuse_pairs() == []
    attrs = [e.attributes for e in table.conditional()]
    assert len(set(attrs)) == 7
    names = {e.conditions: e.attributes for e in table.conditional()}
    assert names[frozenset({0, 1, 2})] == frozenset()


def test_second_case_reuses_bases():
    table = triadic_base_composed(fx.discriminator_model(2), validate=True)
    by = table.by_conditions()
    assert by[frozenset({0})].attributes == by[frozenset({0, 1})].attributes == frozenset({0})
    alpha_index = table.entries.index(by[frozenset({0})])
    assert by[frozenset({0, 1})].reused_from == alpha_index
    for k, j in table.reuse_pairs():
        assert table.entries[k].context == table.entries[j].context
        assert table.entries[k].base is table.entries[j].base


def test_single_condition_table():
    k1 = fx.staircase()
    k2 = FormalContext(k1.attributes, ("only",), (1, 0, 1))
    table = triadic_base_composed(MetaModel(k1, k2))
    assert len(table.conditional()) == 1 and table.reuse_pairs() == []
    assert len(conditional_base_composed(MetaModel(k1, k2)).conditional()) == 1


def test_entries_are_plain_next_closure_bases():
    for mm in (fx.career_model(True), fx.discriminator_model(1), fx.discriminator_model(2)):
        for driver in (triadic_base_composed, conditional_base_composed):
            for e in driver(mm, validate=True).conditional():
                assert e.base == next_closure(e.context)[1]
                assert e.attributes == attributes_under(mm, e.conditions)


def test_generic_on_empty_relation():
    K = TriadicContext(("g", "h"), ("x", "y"), ("u", "v"), frozenset())
    table = triadic_base_generic(K)
    empty_base = next_closure(FormalContext(("g", "h"), ("x", "y"), (0, 0)))[1]
    assert all(e.base == empty_base for e in table.entries)
    assert all(e.base == empty_base for e in conditional_base_generic(K).entries)


def test_cases_differ_at_beta():
    one = triadic_base_generic(compose(fx.discriminator_model(1))).by_conditions()[frozenset({1})]
    two = triadic_base_generic(compose(fx.discriminator_model(2))).by_conditions()[frozenset({1})]
    assert one.base != two.base
    assert Implication(frozenset({0}), frozenset({0, 1})) in two.base


def test_conditional_base_order_and_sets():
    mm = fx.career_model(short_names=True)
    table = conditional_base_composed(mm, validate=True)
    assert [e.conditions for e in table.conditional()] == [frozenset({2}), frozenset({1}), frozenset({0})]
    assert [e.attributes for e in table.conditional()] == [frozenset({1, 2}), frozenset({0, 1}), frozenset({0, 2})]
    assert table.reuse_pairs() == []
    K = compose(mm)
    assert [e.base for e in table.conditional()] == [e.base for e in conditional_base_generic(K).entries]


def test_aggregate_on_second_case():
    K = compose(fx.discriminator_model(2))
    agg = build_implication_aggregate(K)
    one_two = Implication(frozenset({0}), frozenset({0, 1}))
    # holds where 1 implies 2: under beta, and vacuously under gamma where nobody has 1
    assert agg.conditions_for(one_two) == frozenset({1, 2})
    for imp in agg.implications:
        for c in range(3):
            holds = implication_holds(conditional_context(K, [c]), imp.premise, imp.conclusion)
            assert (c in agg.conditions_for(imp)) == holds


def test_aggregate_edge_cases():
    K = TriadicContext(("g", "h"), ("x",), ("u",), frozenset({(0, 0, 0)}))
    assert build_implication_aggregate(K).implications == ()
    K3 = compose(fx.career_model(short_names=True))
    assert all(not imp.is_trivial() for imp in build_implication_aggregate(K3).implications)


@settings(max_examples=80, deadline=None)
@given(meta_models(max_objects=4, max_attributes=4, max_conditions=3))
def test_composed_drivers_equal_generic(mm):
    K = compose(mm)
    for composed, generic in ((triadic_base_composed, triadic_base_generic), (conditional_base_composed, conditional_base_generic)):
        a, g = composed(mm, validate=True), generic(K)
        assert [e.conditions for e in a.conditional()] == [e.conditions for e in g.entries]
        assert [e.base for e in a.conditional()] == [e.base for e in g.entries]
        for k, j in a.reuse_pairs():
            assert a.entries[k].context == a.entries[j].context


@settings(max_examples=80, deadline=None)
@given(meta_models(max_objects=5, max_attributes=5, max_conditions=3), st.data())
def test_modified_next_closure_on_conditional_contexts(mm, data):
    cs = data.draw(st.sets(st.integers(0, len(mm.conditions) - 1)))
    k1 = mm.k1
    keep = attributes_under(mm, cs)
    drop = set(range(k1.n_attributes)) - keep
    kc = remove_incidences(k1, drop)
    intents, base = next_closure(k1)
    known = transfer_intents_remove(k1, drop, intents, bottom_is_full(k1))
    partial = transfer_base_remove(k1, drop, base)
    assert modified_next_closure(kc, known, partial, validate=True) == next_closure(kc)[1]


def test_random_models_composed_equal_generic():
    rnd = random.Random(21)
    for _ in range(60):
        mm = random_model(rnd)
        K = compose(mm)
        a, g = triadic_base_composed(mm), triadic_base_generic(K)
        assert [e.base for e in a.conditional()] == [e.base for e in g.entries]
