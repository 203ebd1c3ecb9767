"""Tests for weights with tight parts and the limit checker."""

import itertools

import pytest

from tightcat.cat_core import (
    Fun,
    arrow_cat,
    compose_fun,
    discrete_cat,
    iso_cat,
    terminal_cat,
)
from tightcat.two_cat import (
    TwoFun,
    constant_weight,
    enumerate_w_transformations,
    hom_weight,
    locally_discrete_two_cat,
    two_cat_of_cats,
)
from tightcat.f_core import (
    FCat,
    FFun,
    FObj,
    chordate,
    f_one_loose,
    f_one_tight,
    validate_fcat,
    validate_ffun,
)
from tightcat.weights import (
    FCone,
    FLimitVerdict,
    FWeight,
    ShapeMismatch,
    UnsupportedKind,
    check_f_limit,
    find_f_limit,
    fweight_hom,
    representable_fweight,
    tight_projections,
    validate_fcone,
    validate_fweight,
    weight_arrow,
    weight_descent,
    weight_equifier,
    weight_idempotent_splitting,
    weight_inserter,
    weight_pie_fixture,
    weight_power,
    weight_tight,
)

WEAK_KINDS = ("pseudo", "lax", "oplax")


# ----------------------------------------------------------------------------
# helpers


def diagram_into(k, shape_f, ob, gen1=None):
    """A diagram out of a locally discrete-ish shape, identities filled in."""
    base = shape_f.base
    on1 = dict(gen1 or {})
    for d in base.objects:
        on1[base.id1[d]] = k.id1[ob[d]]
    on2 = {m: k.id2(on1[base.src2(m)]) for m in base.two_cells()}
    return TwoFun(base, k, ob, on1, on2)


def cones_at(phi, s, apex):
    target = hom_weight(s.cod.base, apex, s.fun)
    return [
        FCone(apex, leg)
        for leg in enumerate_w_transformations(phi.phi_lambda, target, "strict")
    ]


def winning_cones(phi, s, apex):
    return [c for c in cones_at(phi, s, apex) if check_f_limit(phi, s, c).ok]


def cell_picking(toc, a, b, obj):
    """The 1-cell a -> b whose functor is constant at obj."""
    k = toc.two_cat
    for name in k.hom[(a, b)].objects:
        if toc.fun_of[name].ob == {"*": obj}:
            return name
    raise KeyError((a, b, obj))


def arrow_comma_setup():
    """The oplax arrow weight aimed at a 2-category of small categories
    where the comma-style apex exists twice over."""
    w = weight_arrow("oplax")
    toc = two_cat_of_cats(
        {"A": terminal_cat(), "B": arrow_cat(), "L": arrow_cat()}
    )
    k = toc.two_cat
    pick1 = cell_picking(toc, "A", "B", "1")
    fun = diagram_into(k, w.shape, {"d": "A", "c": "B"}, {"a": pick1})
    return w, toc, fun


def two_points_setup():
    """Two terminal objects joined by a loose-or-tight isomorphism pair."""
    toc = two_cat_of_cats({"A": terminal_cat(), "B": terminal_cat()})
    k = toc.two_cat
    f = next(iter(k.hom[("A", "B")].objects))
    g = next(iter(k.hom[("B", "A")].objects))
    return k, f, g


ZOO = [
    ("arrow", weight_arrow),
    ("inserter", weight_inserter),
    ("equifier", weight_equifier),
    ("descent", weight_descent),
]


# ----------------------------------------------------------------------------
# zoo builders validate


@pytest.mark.parametrize(
    "name,kind",
    [(n, k) for n, _ in ZOO for k in WEAK_KINDS],
)
def test_zoo_weights_validate(name, kind):
    fn = dict(ZOO)[name]
    assert validate_fweight(fn(kind)) == []


@pytest.mark.parametrize("builder", [fn for _, fn in ZOO])
def test_zoo_rejects_strict_kind(builder):
    with pytest.raises(UnsupportedKind):
        builder("strict")


def test_power_weights_validate():
    for x in (f_one_loose(), f_one_tight()):
        assert validate_fweight(weight_power(x)) == []


def test_idempotent_splitting_validates():
    w = weight_idempotent_splitting()
    assert validate_fweight(w) == []
    assert set(w.shape.base.one_cells()) == {"1", "e"}
    assert w.shape.tight == frozenset({"1", "e"})


def test_weight_tight_is_chordate_with_identity_embeddings():
    w = weight_tight(weight_pie_fixture("product"))
    assert validate_fweight(w) == []
    assert w.shape.tight == frozenset(w.shape.base.one_cells())
    for d in w.shape.base.objects:
        assert w.phi[d].ob == {x: x for x in w.phi_lambda.at[d].objects}


# ----------------------------------------------------------------------------
# builder structure


def test_arrow_weight_direction_data():
    op = weight_arrow("oplax")
    assert op.phi_lambda.on1["a"].ob == {"*": "1"}
    assert op.phi["c"].ob == {"*": "0"}
    la = weight_arrow("lax")
    assert la.phi_lambda.on1["a"].ob == {"*": "0"}
    assert la.phi["c"].ob == {"*": "1"}
    ps = weight_arrow("pseudo")
    assert ps.phi_lambda.at["c"] == iso_cat()
    assert ps.shape.tight == frozenset({"1_d", "1_c"})


def test_inserter_weight_structure():
    ps = weight_inserter("pseudo")
    assert ps.phi_tau.at["a"] == terminal_cat()
    assert ps.phi_tau.at["b"].objects == ()
    assert ps.phi_lambda.on1["k0"].ob == {"*": "0"}
    assert ps.phi_lambda.on1["k1"].ob == {"*": "1"}
    la = weight_inserter("lax")
    assert "k0" in la.shape.tight and "k1" not in la.shape.tight
    assert la.phi["b"].ob == {"*": "0"}
    op = weight_inserter("oplax")
    assert "k1" in op.shape.tight and "k0" not in op.shape.tight
    assert op.phi["b"].ob == {"*": "1"}


def test_equifier_weight_squeezes_both_two_cells():
    for kind in WEAK_KINDS:
        w = weight_equifier(kind)
        assert set(w.shape.base.two_cells()) >= {"g0", "g1"}
        assert w.phi_lambda.on2["g0"] == w.phi_lambda.on2["g1"]
    la = weight_equifier("lax")
    assert la.shape.tight == frozenset({"i_a", "i_b", "k0"})
    op = weight_equifier("oplax")
    assert op.shape.tight == frozenset({"i_a", "i_b", "k1"})


DESCENT_HOM_SIZES = {
    ("one", "one"): 1,
    ("one", "two"): 2,
    ("one", "three"): 3,
    ("two", "one"): 1,
    ("two", "two"): 3,
    ("two", "three"): 6,
    ("three", "one"): 0,
    ("three", "two"): 0,
    ("three", "three"): 1,
}


@pytest.mark.parametrize("kind", WEAK_KINDS)
def test_descent_shape_sizes(kind):
    w = weight_descent(kind)
    k = w.shape.base
    sizes = {p: len(h.objects) for p, h in k.hom.items()}
    assert sizes == DESCENT_HOM_SIZES
    assert len(list(k.one_cells())) == 17
    assert len(w.shape.tight) == 10


@pytest.mark.parametrize("kind", WEAK_KINDS)
def test_descent_tights_are_the_point_preserving_cells(kind):
    # oracle: a 1-cell is tight exactly when its value carries the marked
    # element of its source level to the marked element of its target.
    w = weight_descent(kind)
    k = w.shape.base
    pick = {d: w.phi[d].ob["*"] for d in k.objects}
    expected = {
        u
        for u in k.one_cells()
        if w.phi_lambda.on1[u].ob[pick[k.src1(u)]] == pick[k.tgt1(u)]
    }
    assert w.shape.tight == frozenset(expected)


def test_descent_value_categories_by_kind():
    la = weight_descent("lax")
    assert {d: la.phi[d].ob["*"] for d in ("one", "two", "three")} == {
        "one": "0",
        "two": "1",
        "three": "2",
    }
    assert la.phi_lambda.on1["d0"].ob == {"0": "1"}
    assert [len(la.phi_lambda.at[d].morphisms) for d in ("one", "two", "three")] == [1, 3, 6]
    op = weight_descent("oplax")
    assert {d: op.phi[d].ob["*"] for d in ("one", "two", "three")} == {
        "one": "0",
        "two": "0",
        "three": "0",
    }
    # reversed chains: the order morphism now runs downward
    le = op.phi_lambda.at["two"]
    assert le.src["le_0_1"] == "1" and le.tgt["le_0_1"] == "0"
    ps = weight_descent("pseudo")
    assert [len(ps.phi_lambda.at[d].morphisms) for d in ("one", "two", "three")] == [1, 4, 9]


def test_power_weight_values():
    loose = weight_power(f_one_loose())
    assert loose.phi_tau.at["*"].objects == ()
    assert loose.phi_lambda.at["*"] == terminal_cat()
    tight = weight_power(f_one_tight())
    assert tight.phi_tau.at["*"] == terminal_cat()


def test_pie_fixture_registry():
    assert weight_pie_fixture("product").base.objects == ("d1", "d2")
    for name in ("product", "inserter", "equifier", "splitting"):
        assert weight_pie_fixture(name).validate() == []
    with pytest.raises(ValueError):
        weight_pie_fixture("mystery")


def test_representable_weight_on_partially_tight_shape():
    shape = weight_inserter("lax").shape
    r = representable_fweight(shape, "a")
    assert validate_fweight(r) == []
    assert set(r.phi_tau.at["b"].objects) == {"k0"}
    assert set(r.phi_lambda.at["b"].objects) == {"k0", "k1"}


# ----------------------------------------------------------------------------
# weight validation failures


def test_validate_fweight_rejects_unnatural_embedding():
    w = weight_descent("lax")
    broken = FWeight(
        w.shape,
        w.phi_tau,
        w.phi_lambda,
        dict(w.phi, two=Fun(terminal_cat(), w.phi_lambda.at["two"], {"*": "0"}, {"1_*": "1_0"})),
    )
    assert any("not natural at tight 1-cell" in p for p in validate_fweight(broken))


def test_validate_fweight_rejects_wrong_embedding_endpoints():
    w = weight_arrow("oplax")
    broken = FWeight(w.shape, w.phi_tau, w.phi_lambda, dict(w.phi, c=w.phi["d"]))
    assert any("wrong endpoints" in p for p in validate_fweight(broken))


def test_validate_fweight_rejects_non_injective_embedding():
    base = locally_discrete_two_cat(terminal_cat())
    shape = chordate(base)
    two = discrete_cat(["x", "y"])
    crush = Fun(two, terminal_cat(), {"x": "*", "y": "*"}, {"1_x": "1_*", "1_y": "1_*"})
    from tightcat.f_core import tau_two_cat

    w = FWeight(
        shape,
        constant_weight(tau_two_cat(shape), two),
        constant_weight(base, terminal_cat()),
        {"*": crush},
    )
    assert any("embedding at *" in p for p in validate_fweight(w))


# ----------------------------------------------------------------------------
# hom of weights


def _commuting_pairs(a, b):
    """Independent count of transformations that restrict tightly: pairs of
    strict transformations, one per level, agreeing under the embeddings."""
    taus = enumerate_w_transformations(a.phi_tau, b.phi_tau, "strict")
    lams = enumerate_w_transformations(a.phi_lambda, b.phi_lambda, "strict")
    hits = []
    for st, sl in itertools.product(taus, lams):
        if all(
            compose_fun(b.phi[d], st.comp1[d]) == compose_fun(sl.comp1[d], a.phi[d])
            for d in a.shape.base.objects
        ):
            hits.append((st, sl))
    return hits


@pytest.mark.parametrize(
    "make_a,make_b",
    [
        (lambda: weight_inserter("lax"), lambda: weight_inserter("lax")),
        (
            lambda: representable_fweight(weight_inserter("lax").shape, "a"),
            lambda: weight_inserter("lax"),
        ),
        (lambda: weight_arrow("oplax"), lambda: weight_arrow("oplax")),
    ],
)
def test_fweight_hom_tight_part_counts_restricting_transformations(make_a, make_b):
    a, b = make_a(), make_b()
    pairs = _commuting_pairs(a, b)
    h = fweight_hom(a, b)
    assert len(h.tau.objects) == len(pairs)
    assert len({sl.key() for _, sl in pairs}) == len(pairs)


def test_fweight_hom_of_tight_weight_is_all_tight():
    w = weight_tight(weight_pie_fixture("product"))
    h = fweight_hom(w, w)
    assert set(h.tau.objects) == set(h.lam.objects)


def test_fweight_hom_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        fweight_hom(weight_arrow("oplax"), weight_inserter("lax"))


# ----------------------------------------------------------------------------
# verdicts


def test_verdict_statuses():
    assert FLimitVerdict("IsFLimit").ok
    assert not FLimitVerdict("NotLooseLimit").ok
    with pytest.raises(AssertionError):
        FLimitVerdict("Maybe")


# ----------------------------------------------------------------------------
# the oplax limit of an arrow


def test_oplax_arrow_limit_found_with_tight_projections():
    w, toc, fun = arrow_comma_setup()
    k = toc.two_cat
    s = FFun(w.shape, chordate(k), fun)
    assert validate_ffun(s) == []
    apex, cone = find_f_limit(w, s)
    assert apex == "B"
    assert validate_fcone(w, s, cone) == []
    assert check_f_limit(w, s, cone).ok


def test_oplax_arrow_cone_direction():
    # the cone 2-cell runs from the loose projection to the composite
    # (diagram arrow after the tight projection)
    w, toc, fun = arrow_comma_setup()
    k = toc.two_cat
    s = FFun(w.shape, chordate(k), fun)
    cones = winning_cones(w, s, "L")
    assert len(cones) == 1
    cone = cones[0]
    u = cone.leg.comp1["d"].ob["*"]
    v = cone.leg.comp1["c"].ob["0"]
    sigma = cone.leg.comp1["c"].mor["a"]
    assert k.src2(sigma) == v
    assert k.tgt2(sigma) == k.comp1(fun.on1["a"], u)
    assert tight_projections(w, cone) == {("d", "*"): u, ("c", "*"): v}


def test_oplax_arrow_projection_must_be_tight():
    w, toc, fun = arrow_comma_setup()
    k = toc.two_cat
    cone = winning_cones(w, FFun(w.shape, chordate(k), fun), "L")[0]
    v = cone.leg.comp1["c"].ob["0"]
    partial = FCat(k, set(k.one_cells()) - {v})
    assert validate_fcat(partial) == []
    s = FFun(w.shape, partial, fun)
    verdict = check_f_limit(w, s, cone)
    assert verdict.status == "LooseLimitOnly"
    assert verdict.witness.status == "ProjectionNotTight"
    assert verdict.witness.detail == ("c", "*", v)
    assert any("loose" in p for p in validate_fcone(w, s, cone))


# ----------------------------------------------------------------------------
# powers and tightness detection


def test_power_limit_in_chordate_setting():
    k, f, g = two_points_setup()
    w = weight_power(f_one_tight())
    s = FFun(w.shape, chordate(k), diagram_into(k, w.shape, {"*": "B"}))
    apex, cone = find_f_limit(w, s)
    assert apex == "A"
    for other in ("A", "B"):
        for cand in cones_at(w, s, other):
            assert check_f_limit(w, s, cand).ok


def test_power_limit_requires_joint_detection():
    k, f, g = two_points_setup()
    w = weight_power(f_one_tight())
    kf = FCat(k, {k.id1["A"], k.id1["B"], f})
    s = FFun(w.shape, kf, diagram_into(k, w.shape, {"*": "B"}))
    bad = check_f_limit(w, s, cones_at(w, s, "A")[0])
    assert bad.status == "LooseLimitOnly"
    assert bad.witness.status == "DoesNotDetectTightness"
    assert bad.witness.detail == (g,)
    assert check_f_limit(w, s, cones_at(w, s, "B")[0]).ok
    assert find_f_limit(w, s)[0] == "B"


def test_power_limit_not_stable_under_loose_isomorphism():
    # A and B are isomorphic, but only the apex whose projections detect
    # tightness passes; with the other direction tight the roles swap.
    k, f, g = two_points_setup()
    w = weight_power(f_one_tight())
    kf = FCat(k, {k.id1["A"], k.id1["B"], g})
    s = FFun(w.shape, kf, diagram_into(k, w.shape, {"*": "B"}))
    bad = check_f_limit(w, s, cones_at(w, s, "A")[0])
    assert bad.status == "LooseLimitOnly"
    assert bad.witness.status == "ProjectionNotTight"
    assert check_f_limit(w, s, cones_at(w, s, "B")[0]).ok


# ----------------------------------------------------------------------------
# products, representables, absence


def _product_apexes(k, a, b):
    """1-categorical oracle: objects with projections whose pairing is a
    bijection on maps from every probe."""
    out = set()
    for p in k.objects:
        for p1 in k.hom[(p, a)].objects:
            for p2 in k.hom[(p, b)].objects:
                if all(
                    sorted(
                        (k.comp1(p1, h), k.comp1(p2, h))
                        for h in k.hom[(x, p)].objects
                    )
                    == sorted(
                        itertools.product(
                            k.hom[(x, a)].objects, k.hom[(x, b)].objects
                        )
                    )
                    for x in k.objects
                ):
                    out.add(p)
    return sorted(out)


def test_binary_product_limit_matches_direct_search():
    w = weight_tight(weight_pie_fixture("product"))
    toc = two_cat_of_cats({"one": terminal_cat(), "two": arrow_cat()})
    k = toc.two_cat
    s = FFun(w.shape, chordate(k), diagram_into(k, w.shape, {"d1": "one", "d2": "two"}))
    apex, cone = find_f_limit(w, s)
    assert _product_apexes(k, "one", "two") == ["two"]
    assert apex == "two"


def test_wrong_apex_is_not_a_loose_limit():
    w = weight_tight(weight_pie_fixture("product"))
    toc = two_cat_of_cats({"one": terminal_cat(), "two": arrow_cat()})
    k = toc.two_cat
    s = FFun(w.shape, chordate(k), diagram_into(k, w.shape, {"d1": "one", "d2": "two"}))
    verdict = check_f_limit(w, s, cones_at(w, s, "one")[0])
    assert verdict.status == "NotLooseLimit"
    assert verdict.detail[0] == "one"


def test_representable_limit_is_the_diagram_value():
    shape = weight_arrow("oplax").shape
    toc = two_cat_of_cats({"A": terminal_cat(), "B": arrow_cat()})
    k = toc.two_cat
    bang = next(iter(k.hom[("B", "A")].objects))
    r = representable_fweight(shape, "d")
    s = FFun(shape, chordate(k), diagram_into(k, shape, {"d": "B", "c": "A"}, {"a": bang}))
    apex, cone = find_f_limit(r, s)
    assert apex == "B"


def test_missing_inserter_reports_none():
    w = weight_inserter("pseudo")
    toc = two_cat_of_cats({"D": terminal_cat(), "E": discrete_cat(["u", "v"])})
    k = toc.two_cat
    s = FFun(
        w.shape,
        chordate(k),
        diagram_into(
            k,
            w.shape,
            {"a": "D", "b": "E"},
            {"k0": cell_picking(toc, "D", "E", "u"), "k1": cell_picking(toc, "D", "E", "v")},
        ),
    )
    assert find_f_limit(w, s) is None


def test_check_f_limit_shape_mismatch():
    w, toc, fun = arrow_comma_setup()
    k = toc.two_cat
    s = FFun(w.shape, chordate(k), fun)
    cone = winning_cones(w, s, "L")[0]
    with pytest.raises(ShapeMismatch):
        check_f_limit(weight_inserter("lax"), s, cone)
