"""Tests for finite categories, presentations, and element categories."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from tightcat.cat_core import (
    BudgetExceeded,
    CatPresentation,
    CompletionBudget,
    FinCat,
    Fun,
    SetWeight,
    arrow_cat,
    category_of_elements,
    chain_cat,
    chaotic_cat,
    components_with_initial,
    discrete_cat,
    empty_cat,
    enumerate_functors,
    enumerate_nat_trans,
    functor_category,
    generated_category,
    identity_fun,
    iso_cat,
    monoid_cat,
    objects_surjectivity,
    opposite_cat,
    realize_presentation,
    terminal_cat,
    validate_category,
)


def idempotent_monoid_cat():
    return monoid_cat(
        ("1", "e"),
        "1",
        {("1", "1"): "1", ("1", "e"): "e", ("e", "1"): "e", ("e", "e"): "e"},
    )


# ----------------------------------------------------------------------------
# validate_category


def test_validate_empty_category():
    assert validate_category(empty_cat()) == []


def test_validate_idempotent_monoid():
    assert validate_category(idempotent_monoid_cat()) == []


def test_validate_reports_unit_failure():
    # e*e = 1 but the table wrongly claims e*1 = 1.
    bad = FinCat(
        ("x",),
        ("1", "e"),
        {"1": "x", "e": "x"},
        {"1": "x", "e": "x"},
        {"x": "1"},
        {("1", "1"): "1", ("1", "e"): "e", ("e", "1"): "1", ("e", "e"): "1"},
    )
    problems = validate_category(bad)
    assert any("unit" in p for p in problems)


def test_validate_reports_missing_composite():
    bad = FinCat(
        ("x",),
        ("1", "e"),
        {"1": "x", "e": "x"},
        {"1": "x", "e": "x"},
        {"x": "1"},
        {("1", "1"): "1", ("1", "e"): "e", ("e", "1"): "e"},
    )
    problems = validate_category(bad)
    assert any("missing composite" in p for p in problems)


def test_validate_reports_associativity_failure():
    # Three invertible-looking endos with a deliberately broken table.
    bad = FinCat(
        ("x",),
        ("1", "a", "b"),
        {"1": "x", "a": "x", "b": "x"},
        {"1": "x", "a": "x", "b": "x"},
        {"x": "1"},
        {
            ("1", "1"): "1",
            ("1", "a"): "a",
            ("1", "b"): "b",
            ("a", "1"): "a",
            ("b", "1"): "b",
            ("a", "a"): "b",
            ("a", "b"): "1",
            ("b", "a"): "a",
            ("b", "b"): "a",
        },
    )
    problems = validate_category(bad)
    assert any("associativity" in p for p in problems)


def test_builders_all_validate():
    for c in [
        empty_cat(),
        terminal_cat(),
        discrete_cat(("x", "y")),
        arrow_cat(),
        iso_cat(),
        chain_cat(4),
        chaotic_cat(("u", "v", "w")),
        idempotent_monoid_cat(),
        opposite_cat(chain_cat(3)),
    ]:
        assert validate_category(c) == []


# ----------------------------------------------------------------------------
# realize_presentation


def not_rigged_presentation():
    # Generators r, s: a -> b and g: b -> a, with s g = 1_b (diagram order
    # path (g, s)) and r g r = r g s as paths a -> b.
    return CatPresentation(
        objects=("a", "b"),
        generators=(("r", "a", "b"), ("s", "a", "b"), ("g", "b", "a")),
        relations=(
            (("g", "s"), ()),
            (("r", "g", "r"), ("s", "g", "r")),
        ),
    )


def test_realize_not_rigged_homsets():
    real = realize_presentation(not_rigged_presentation())
    c = real.cat
    assert validate_category(c) == []
    assert len(c.hom("a", "a")) == 4
    assert len(c.hom("b", "b")) == 2
    assert len(c.hom("a", "b")) == 3
    assert len(c.hom("b", "a")) == 2
    assert len(c.morphisms) == 11


def test_realize_not_rigged_relations_hold():
    real = realize_presentation(not_rigged_presentation())
    c = real.cat
    assert real.eval_path(("g", "s")) == c.id_of("b")
    assert real.eval_path(("r", "g", "r")) == real.eval_path(("s", "g", "r"))
    # f = rg is a nonidentity idempotent on b.
    f = real.eval_path(("g", "r"))
    assert f != c.id_of("b")
    assert c.compose(f, f) == f


def test_realize_congruence_constant_in_context():
    # Both sides of each relation stay equal inside every small context.
    p = not_rigged_presentation()
    real = realize_presentation(p)
    gens = {name: (a, b) for name, a, b in p.generators}
    words = [()] + [
        w
        for n in (1, 2)
        for w in itertools.product(gens, repeat=n)
        if all(gens[w[i]][1] == gens[w[i + 1]][0] for i in range(len(w) - 1))
    ]
    for left, right in p.relations:
        ends = gens[left[0]] if left else gens[right[0]]
        src, tgt = ends[0], gens[left[-1]][1] if left else ends[1]
        for pre in words:
            if pre and gens[pre[-1]][1] != src:
                continue
            for suf in words:
                if suf and gens[suf[0]][0] != tgt:
                    continue
                a = real.eval_path(pre + tuple(left) + suf, at=src if not pre else gens[pre[0]][0])
                b = real.eval_path(pre + tuple(right) + suf, at=src if not pre else gens[pre[0]][0])
                assert a == b


def test_realize_is_deterministic():
    a = realize_presentation(not_rigged_presentation())
    b = realize_presentation(not_rigged_presentation())
    assert a.cat == b.cat


def test_realize_idempotent_monoid():
    p = CatPresentation(
        objects=("x",),
        generators=(("e", "x", "x"),),
        relations=(((("e", "e")), ("e",)),),
    )
    real = realize_presentation(p)
    assert len(real.cat.morphisms) == 2


def test_realize_free_monoid_exceeds_budget():
    p = CatPresentation(
        objects=("x",),
        generators=(("e", "x", "x"),),
        relations=(),
    )
    with pytest.raises(BudgetExceeded):
        realize_presentation(p, CompletionBudget(max_morphisms=50, max_steps=10_000))


def test_budget_must_be_positive():
    with pytest.raises(AssertionError):
        CompletionBudget(max_morphisms=0, max_steps=10)


# ----------------------------------------------------------------------------
# functor_category


def test_functor_category_terminal_domain():
    d = arrow_cat()
    fc = functor_category(terminal_cat(), d)
    assert len(fc.cat.objects) == len(d.objects)
    assert len(fc.cat.morphisms) == len(d.morphisms)
    # Evaluation at the unique object is an isomorphism onto d.
    ev_ob = {n: fc.functor_of[n].ob["*"] for n in fc.cat.objects}
    ev_mor = {n: fc.nat_of[n].comp["*"] for n in fc.cat.morphisms}
    ev = Fun(fc.cat, d, ev_ob, ev_mor)
    assert ev.validate() == []
    assert len(set(ev_ob.values())) == len(d.objects)
    assert len(set(ev_mor.values())) == len(d.morphisms)


def test_functor_category_arrow_arrow():
    # Oracle: functors 2 -> 2 are exactly the monotone maps {0,1} -> {0,1}.
    monotone = [
        f
        for f in itertools.product((0, 1), repeat=2)
        if f[0] <= f[1]
    ]
    fc = functor_category(arrow_cat(), arrow_cat())
    assert len(fc.cat.objects) == len(monotone) == 3


def test_functor_category_empty_domain():
    fc = functor_category(empty_cat(), arrow_cat())
    assert len(fc.cat.objects) == 1
    assert len(fc.cat.morphisms) == 1


def brute_force_functor_count(c, d):
    """Count structure-preserving maps with no search pruning at all."""
    count = 0
    for obs in itertools.product(d.objects, repeat=len(c.objects)):
        ob = dict(zip(c.objects, obs))
        for mors in itertools.product(d.morphisms, repeat=len(c.morphisms)):
            mor = dict(zip(c.morphisms, mors))
            ok = all(
                d.src[mor[m]] == ob[c.src[m]] and d.tgt[mor[m]] == ob[c.tgt[m]]
                for m in c.morphisms
            )
            ok = ok and all(
                mor[c.identity[a]] == d.identity[ob[a]] for a in c.objects
            )
            ok = ok and all(
                mor[c.compose(g, f)] == d.compose(mor[g], mor[f])
                for g, f in c.composable_pairs()
            )
            if ok:
                count += 1
    return count


@pytest.mark.parametrize(
    "c,d",
    [
        (arrow_cat(), arrow_cat()),
        (arrow_cat(), chain_cat(3)),
        (discrete_cat(("x", "y")), arrow_cat()),
        (iso_cat(), arrow_cat()),
        (idempotent_monoid_cat(), idempotent_monoid_cat()),
    ],
)
def test_functor_category_matches_brute_force(c, d):
    fc = functor_category(c, d)
    assert len(fc.cat.objects) == brute_force_functor_count(c, d)
    for name in fc.cat.objects:
        assert fc.functor_of[name].validate() == []
    for name in fc.cat.morphisms:
        assert fc.nat_of[name].validate() == []


def test_nat_trans_count_interval():
    # Oracle: transformations between functors 1 -> d are morphisms of d.
    d = chain_cat(3)
    fc = functor_category(terminal_cat(), d)
    assert len(fc.cat.morphisms) == len(d.morphisms)


# ----------------------------------------------------------------------------
# category_of_elements


def inserter_ob_weight():
    base = FinCat(
        ("a", "b"),
        ("1_a", "1_b", "k0", "k1"),
        {"1_a": "a", "1_b": "b", "k0": "a", "k1": "a"},
        {"1_a": "a", "1_b": "b", "k0": "b", "k1": "b"},
        {"a": "1_a", "b": "1_b"},
        {
            ("1_a", "1_a"): "1_a",
            ("1_b", "1_b"): "1_b",
            ("k0", "1_a"): "k0",
            ("1_b", "k0"): "k0",
            ("k1", "1_a"): "k1",
            ("1_b", "k1"): "k1",
        },
    )
    assert validate_category(base) == []
    return SetWeight(
        base,
        {"a": ("*",), "b": ("0", "1")},
        {
            "1_a": {"*": "*"},
            "1_b": {"0": "0", "1": "1"},
            "k0": {"*": "0"},
            "k1": {"*": "1"},
        },
    )


def splitting_ob_weight():
    return SetWeight(
        idempotent_monoid_cat(),
        {"*": ("x",)},
        {"1": {"x": "x"}, "e": {"x": "x"}},
    )


def test_elements_of_terminal_weight():
    w = SetWeight(terminal_cat(), {"*": ("x",)}, {"1_*": {"x": "x"}})
    assert w.validate() == []
    el = category_of_elements(w)
    assert len(el.cat.objects) == 1
    assert len(el.cat.morphisms) == 1


def test_elements_of_inserter_ob_weight():
    w = inserter_ob_weight()
    assert w.validate() == []
    # Oracle: one object per element, one morphism per (morphism, element).
    expected_objects = sum(len(w.at(a)) for a in w.base.objects)
    expected_nonid = sum(
        len(w.at(w.base.src[m]))
        for m in w.base.morphisms
        if not w.base.is_identity(m)
    )
    assert expected_objects == 3
    assert expected_nonid == 2
    el = category_of_elements(w)
    assert len(el.cat.objects) == expected_objects
    nonid = [m for m in el.cat.morphisms if not el.cat.is_identity(m)]
    assert len(nonid) == expected_nonid
    reports = components_with_initial(el.cat)
    assert len(reports) == 1
    assert reports[0].initials == (el.cat.objects[0],)
    assert el.object_of[reports[0].initials[0]] == ("a", "*")


def test_elements_of_splitting_ob_weight():
    w = splitting_ob_weight()
    assert w.validate() == []
    el = category_of_elements(w)
    assert len(el.cat.objects) == 1
    # Oracle: the single hom-set has one morphism per base endomorphism.
    assert len(el.cat.morphisms) == 2
    reports = components_with_initial(el.cat)
    assert len(reports) == 1
    assert not reports[0].has_initial


def representable_weight(c, target):
    """The Set-valued functor hom(target, -), always functorial."""
    sets = {a: c.hom(target, a) for a in c.objects}
    maps = {
        m: {x: c.compose(m, x) for x in sets[c.src[m]]} for m in c.morphisms
    }
    return SetWeight(c, sets, maps)


@pytest.mark.parametrize(
    "w",
    [
        inserter_ob_weight(),
        splitting_ob_weight(),
        representable_weight(chain_cat(3), "0"),
        representable_weight(chaotic_cat(("u", "v")), "u"),
    ],
)
def test_elements_projection_is_discrete_fibration(w):
    el = category_of_elements(w)
    assert el.projection.validate() == []
    for m in w.base.morphisms:
        for x in w.at(w.base.src[m]):
            lifts = [
                n
                for n in el.cat.morphisms
                if el.projection.mor[n] == m and el.object_of[el.cat.src[n]][1] == x
            ]
            assert len(lifts) == 1
            assert lifts[0] == el.lift(m, x)


# ----------------------------------------------------------------------------
# components_with_initial


def test_components_discrete_two():
    reports = components_with_initial(discrete_cat(("x", "y")))
    assert len(reports) == 2
    assert all(r.has_initial for r in reports)


def test_components_two_endos():
    reports = components_with_initial(category_of_elements(splitting_ob_weight()).cat)
    assert len(reports) == 1
    assert not reports[0].has_initial


def test_components_arrow():
    reports = components_with_initial(arrow_cat())
    assert len(reports) == 1
    assert reports[0].initials == ("0",)


def test_components_iso_pair():
    # Both objects of the walking isomorphism are initial.
    reports = components_with_initial(iso_cat())
    assert len(reports) == 1
    assert set(reports[0].initials) == {"0", "1"}


def relabel_cat(c, ob_map, mor_map):
    return FinCat(
        tuple(ob_map[a] for a in c.objects),
        tuple(mor_map[m] for m in c.morphisms),
        {mor_map[m]: ob_map[c.src[m]] for m in c.morphisms},
        {mor_map[m]: ob_map[c.tgt[m]] for m in c.morphisms},
        {ob_map[a]: mor_map[c.identity[a]] for a in c.objects},
        {
            (mor_map[g], mor_map[f]): mor_map[h]
            for (g, f), h in c.table.items()
        },
    )


component_pool = [
    discrete_cat(("x", "y")),
    arrow_cat(),
    iso_cat(),
    chain_cat(3),
    category_of_elements(splitting_ob_weight()).cat,
    category_of_elements(inserter_ob_weight()).cat,
]


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_components_invariant_under_relabeling(data):
    c = data.draw(st.sampled_from(component_pool))
    ob_perm = data.draw(st.permutations(range(len(c.objects))))
    mor_perm = data.draw(st.permutations(range(len(c.morphisms))))
    ob_map = {a: "o{}".format(i) for a, i in zip(c.objects, ob_perm)}
    mor_map = {m: "m{}".format(i) for m, i in zip(c.morphisms, mor_perm)}
    rc = relabel_cat(c, ob_map, mor_map)
    assert validate_category(rc) == []
    before = components_with_initial(c)
    after = components_with_initial(rc)
    assert len(before) == len(after)
    shape = lambda reports: sorted(
        (len(r.objects), len(r.initials)) for r in reports
    )
    assert shape(before) == shape(after)
    relabeled = sorted(
        tuple(sorted(ob_map[a] for a in r.objects)) for r in before
    )
    direct = sorted(tuple(sorted(r.objects)) for r in after)
    assert relabeled == direct


# ----------------------------------------------------------------------------
# objects_surjectivity


def test_surjectivity_identity():
    assert objects_surjectivity(identity_fun(arrow_cat())) == "bijective_on_objects"


def test_surjectivity_point_inclusion():
    d = arrow_cat()
    f = Fun(terminal_cat(), d, {"*": "0"}, {"1_*": "1_0"})
    assert f.validate() == []
    assert objects_surjectivity(f) == "neither"


def test_surjectivity_collapse():
    c = discrete_cat(("x", "y"))
    d = terminal_cat()
    f = Fun(c, d, {"x": "*", "y": "*"}, {"1_x": "1_*", "1_y": "1_*"})
    assert f.validate() == []
    assert objects_surjectivity(f) == "surjective_on_objects"


# ----------------------------------------------------------------------------
# generated_category


def test_generated_category_function_composition():
    # Close {id, successor-capped-at-2} on {0,1,2} under composition.
    def compose(g, f):
        return tuple(g[f[i]] for i in range(3))

    cat, value = generated_category(
        ("n",),
        {
            "1_n": ("n", "n", (0, 1, 2)),
            "s": ("n", "n", (1, 2, 2)),
        },
        compose,
    )
    assert validate_category(cat) == []
    # Oracle: iterating the map gives (1,2,2), (2,2,2), then stabilizes.
    assert len(cat.morphisms) == 3
    assert value[cat.compose("s", "s")] == (2, 2, 2)


def test_enumerate_nat_trans_parallel_pair():
    # Oracle: transformations between the two point inclusions into the
    # arrow correspond to morphisms 0 -> 1, of which there is one.
    d = arrow_cat()
    f = Fun(terminal_cat(), d, {"*": "0"}, {"1_*": "1_0"})
    g = Fun(terminal_cat(), d, {"*": "1"}, {"1_*": "1_1"})
    assert len(enumerate_nat_trans(f, g)) == 1
    assert len(enumerate_nat_trans(g, f)) == 0


def test_enumerate_functors_iso_to_arrow():
    # Oracle: a functor from the walking iso picks an invertible morphism,
    # and the arrow category has only identity isos.
    fs = enumerate_functors(iso_cat(), arrow_cat())
    assert len(fs) == 2
    assert all(f.ob["0"] == f.ob["1"] for f in fs)
