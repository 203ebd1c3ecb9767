"""Decision procedures for weight classes over marked shapes.

A weight of categories can be characterized by how its elements are
organized (products, inserters, and equifiers leave an initial object
in every component of the category of elements), by whether it carries
a coalgebra structure for a classifier comonad, and, for a weight with
a designated tight part, by whether the tight part generates the loose
objects through the classifier.  This module decides those classes,
produces the canonical (greatest) tight part induced by a coalgebra
structure, and checks the equivalence between pointwise surjectivity
and reflection of identities that underpins the characterizations.

The weakness flavors are named p (pseudo), l (lax), and c (colax); the
classifier used for flavor w is built with the sense reversed, which
swaps l and c and fixes p.
"""

from dataclasses import dataclass, field

from .cat_core import (
    BudgetExceeded,
    Fun,
    NatTrans,
    SetWeight,
    category_of_elements,
    chain_cat,
    chaotic_cat,
    components_with_initial,
    compose_fun,
    full_subcat,
    identity_fun,
    identity_nat,
    inclusion_fun,
    monoid_cat,
)
from .two_cat import CatWeight, locally_discrete_two_cat, vcompose_wnat
from .f_core import inchordate, tau_two_cat
from .weights import FWeight, UnsupportedKind, validate_fweight
from .kan_classifiers import (
    build_relative_classifier,
    classify,
    compute_tau,
    f_coalgebra_check,
    find_coalgebras,
    one_skeleton,
    phi_bar_objects,
)

W_KINDS = ("p", "l", "c")

_BAR = {"p": "p", "l": "c", "c": "l"}
_CLASSIFIER_KIND = {"p": "pseudo", "l": "lax", "c": "oplax"}


def kind_bar(k):
    """The flavor with the sense reversed: swaps l and c, fixes p."""
    if k not in W_KINDS:
        raise UnsupportedKind(k)
    return _BAR[k]


def classifier_kind(k):
    """The classifier kind used when deciding flavor-k riggedness."""
    return _CLASSIFIER_KIND[kind_bar(k)]


# ----------------------------------------------------------------------------
# the elements characterization


def object_weight(phi):
    """The Set-valued weight of objects underlying a Cat-valued weight."""
    sk = one_skeleton(phi.base)
    sets = {d: phi.at[d].objects for d in sk.objects}
    maps = {u: dict(phi.on1[u].ob) for u in sk.morphisms}
    w = SetWeight(sk, sets, maps)
    assert w.validate() == []
    return w


@dataclass
class IsPieReport:
    """Outcome of the elements characterization, with witnesses.

    components: one report per connected component of the category of
    elements of the object weight; value holds when each has an initial
    object, and failing names the first component without one.
    """

    value: bool
    components: tuple
    failing: object = None

    def __bool__(self):
        return self.value


def is_pie(phi):
    """Whether every elements component has an initial object.

    This characterizes the weights in the closure of products,
    inserters, and equifiers.
    """
    el = category_of_elements(object_weight(phi))
    components = tuple(components_with_initial(el.cat))
    failing = next((c for c in components if not c.has_initial), None)
    return IsPieReport(failing is None, components, failing)


def pie_qcoalgebra_oracle(phi, budget=None):
    """Whether the weight carries a pseudo-classifier coalgebra.

    Built over the shape with only identities tight; independent of
    is_pie, which never constructs the classifier.  BudgetExceeded
    propagates when the classifier does not finish.
    """
    shape = inchordate(phi.base)
    rc = build_relative_classifier(shape, phi, "pseudo", budget=budget)
    return bool(find_coalgebras(rc))


# ----------------------------------------------------------------------------
# riggedness


@dataclass
class RiggedVerdict:
    """Outcome of a riggedness check, with the exhibited structure.

    status: Rigged, NotCoalgebra, NotSurjective, or BudgetExceeded.
    structure: the compatible coalgebra structure when one exists.
    comparison: the pointwise report on the extension of the tight part.
    """

    status: str
    structure: object = None
    comparison: object = None
    detail: str = ""

    def __bool__(self):
        return self.status == "Rigged"


def is_rigged(w, k, budget=None):
    """Decide flavor-k riggedness of a weight with a tight part.

    Rigged needs a coalgebra structure for the sense-reversed
    classifier that is compatible with the tight part, plus a pointwise
    surjective comparison from the extended tight part.  When the
    structures all clash with the given tight part, the verdict blames
    the tight part: NotSurjective if not even the greatest rigging is
    surjective, NotCoalgebra otherwise.
    """
    kind = classifier_kind(k)
    try:
        rc = build_relative_classifier(w.shape, w.phi_lambda, kind, budget=budget)
        structures = find_coalgebras(rc)
    except BudgetExceeded as exc:
        return RiggedVerdict("BudgetExceeded", detail=str(exc))
    if not structures:
        return RiggedVerdict(
            "NotCoalgebra", detail="no strict coassociative section of the counit"
        )
    comparison = phi_bar_objects(w)
    compatible = [s for s in structures if f_coalgebra_check(w, s)]
    if compatible:
        if comparison.surjective:
            assert len({s.s.key() for s in compatible}) == 1, (
                "a rigged weight has a unique structure"
            )
            return RiggedVerdict("Rigged", compatible[0], comparison)
        return RiggedVerdict(
            "NotSurjective",
            compatible[0],
            comparison,
            detail="the tight part misses loose objects",
        )
    greatest_surjective = any(
        phi_bar_objects(
            canonical_rigging(w.shape, w.phi_lambda, s, k)
        ).surjective
        for s in structures
    )
    if greatest_surjective:
        return RiggedVerdict(
            "NotCoalgebra",
            comparison=comparison,
            detail="structures exist but none restricts to the tight part",
        )
    return RiggedVerdict(
        "NotSurjective",
        comparison=comparison,
        detail="no rigging of this weight reaches every loose object",
    )


def is_tightly_rigged(w, budget=None):
    """Whether the tight part extends bijectively on objects.

    True certifies the p flavor as well: the verdict of is_rigged with
    k = p is computed and must come out Rigged.
    """
    if not phi_bar_objects(w).bijective:
        return False
    verdict = is_rigged(w, "p", budget)
    assert verdict.status == "Rigged", (
        "bijective comparison must produce a rigged structure"
    )
    return True


def canonical_rigging(shape, phi, structure, k, alternatives=()):
    """The greatest tight part induced by a coalgebra structure.

    Its value at d is the full subcategory of phi(d) on the objects
    whose comparison cell is an identity; this is checked to agree with
    the equalizer of the structure and the unit on objects.  Every
    supplied alternative rigging compatible with the same structure
    must embed into the result.
    """
    rc = structure.classifier
    assert rc.kind == classifier_kind(k), "structure was built for another flavor"
    assert rc.input.key() == phi.key()
    tau = compute_tau(rc, structure)
    identifier = {}
    for d in shape.base.objects:
        cat = rc.q_phi.at[d]
        from_tau = [
            x
            for x in phi.at[d].objects
            if cat.is_identity(tau.comp[(d, x)])
        ]
        from_equalizer = [
            x
            for x in phi.at[d].objects
            if structure.s.comp1[d].ob[x] == rc.p.comp1[d].ob[x]
        ]
        assert from_tau == from_equalizer, (
            "identifier and equalizer disagree at " + d
        )
        identifier[d] = tuple(from_tau)
    tau2 = tau_two_cat(shape)
    at = {d: full_subcat(phi.at[d], identifier[d]) for d in tau2.objects}
    on1 = {}
    for t in tau2.one_cells():
        a, b = tau2.src1(t), tau2.tgt1(t)
        act = phi.on1[t]
        assert all(act.ob[x] in set(identifier[b]) for x in identifier[a]), (
            "tight action leaves the identifier at " + t
        )
        on1[t] = Fun(
            at[a],
            at[b],
            {x: act.ob[x] for x in at[a].objects},
            {m: act.mor[m] for m in at[a].morphisms},
        )
    on2 = {}
    for g in tau2.two_cells():
        t, t2 = tau2.src2(g), tau2.tgt2(g)
        a = tau2.src1(t)
        on2[g] = NatTrans(
            on1[t],
            on1[t2],
            {x: phi.on2[g].comp[x] for x in at[a].objects},
        )
    phi_tau = CatWeight(tau2, at, on1, on2)
    embed = {d: inclusion_fun(at[d], phi.at[d]) for d in tau2.objects}
    out = FWeight(shape, phi_tau, phi, embed)
    assert validate_fweight(out) == []
    for alt in alternatives:
        if alt.phi_lambda.key() != phi.key():
            continue
        if not f_coalgebra_check(alt, structure):
            continue
        for d in shape.base.objects:
            held = {alt.phi[d].ob[x] for x in alt.phi_tau.at[d].objects}
            assert held <= set(identifier[d]), (
                "a compatible rigging escapes the greatest one at " + d
            )
    return out


def classifier_map(source, target, f):
    """The strict map between classifiers induced by a map of weights.

    f: a strict transformation source.input -> target.input; the result
    is the unique strict map making the units commute.
    """
    assert source.kind == target.kind
    assert f.kind == "strict"
    return classify(source, vcompose_wnat(target.p, f))


# ----------------------------------------------------------------------------
# surjectivity and reflection of identities


@dataclass
class SoCharWitness:
    """A reflection violation at one shape object.

    Two distinct functors into the two-object chaotic category agreeing
    on the image, linked by the forced transformation beta whose
    restriction along the transformation has identity components.
    """

    shape_object: str
    missing: str
    fun_one: Fun
    fun_two: Fun
    beta: NatTrans


@dataclass
class SoCharReport:
    """Paired evaluation of surjectivity and identity reflection."""

    surjective: bool
    reflects_identities: bool
    witnesses: dict = field(default_factory=dict)


def _fun_into_chaotic(cat, chaotic, ob):
    mor = {
        m: chaotic.hom(ob[cat.src[m]], ob[cat.tgt[m]])[0]
        for m in cat.morphisms
    }
    return Fun(cat, chaotic, ob, mor)


def so_char_equivalence(nu):
    """Check that pointwise object surjectivity matches reflection.

    nu: a strict transformation of Cat-valued weights.  Surjectivity is
    read off directly.  Reflection of identities fails exactly when the
    proof's counterexample exists: a missed object yields two functors
    into the chaotic two-object category that agree after restriction,
    with a nonidentity transformation between them restricting to the
    identity.  The two booleans are asserted equal.
    """
    assert nu.kind == "strict"
    psi = nu.cod
    chaos = chaotic_cat(("0", "1"))
    witnesses = {}
    surjective = True
    for d in psi.base.objects:
        comp = nu.comp1[d]
        cat = psi.at[d]
        image = {comp.ob[x] for x in comp.dom.objects}
        missed = [y for y in cat.objects if y not in image]
        if not missed:
            continue
        surjective = False
        y0 = missed[0]
        low = _fun_into_chaotic(cat, chaos, {y: "0" for y in cat.objects})
        high_ob = {y: "0" for y in cat.objects}
        high_ob[y0] = "1"
        high = _fun_into_chaotic(cat, chaos, high_ob)
        beta = NatTrans(
            low, high, {y: chaos.hom(low.ob[y], high.ob[y])[0] for y in cat.objects}
        )
        assert beta.validate() == []
        assert compose_fun(low, comp) == compose_fun(high, comp), (
            "witness functors must agree on the image"
        )
        assert all(
            chaos.is_identity(beta.comp[comp.ob[x]]) for x in comp.dom.objects
        ), "restricted witness must be the identity"
        assert low.key() != high.key()
        witnesses[d] = SoCharWitness(d, y0, low, high, beta)
    reflects = not witnesses
    assert surjective == reflects
    return SoCharReport(surjective, reflects, witnesses)


# ----------------------------------------------------------------------------
# a documented family of computed fixtures


def truncated_chain_fixture(n):
    """A chain of length n with a loose collapse onto its top.

    One shape object carrying an idempotent loose endomorphism; the
    loose value is the n-object chain, the collapse sends everything to
    the top, and the tight part is the whole chain.  The extension of
    the tight part is surjective but never bijective, so the fixture
    family separates the bijective class from the surjective one at
    every finite size.  Verdicts for these fixtures are computed, not
    postulated: the family stands in for an obstruction that only
    materializes at infinite size.
    """
    assert n >= 2
    mult = {
        ("1_*", "1_*"): "1_*",
        ("1_*", "e"): "e",
        ("e", "1_*"): "e",
        ("e", "e"): "e",
    }
    base = monoid_cat(("1_*", "e"), "1_*", mult)
    shape = inchordate(locally_discrete_two_cat(base))
    chain = chain_cat(n)
    top = chain.objects[-1]
    collapse = Fun(
        chain,
        chain,
        {x: top for x in chain.objects},
        {m: chain.identity[top] for m in chain.morphisms},
    )
    on1 = {"1_*": identity_fun(chain), "e": collapse}
    on2 = {
        m: identity_nat(on1[shape.base.src2(m)])
        for m in shape.base.two_cells()
    }
    phi_lambda = CatWeight(shape.base, {"*": chain}, on1, on2)
    tau = tau_two_cat(shape)
    phi_tau = CatWeight(
        tau,
        {"*": chain},
        {t: identity_fun(chain) for t in tau.one_cells()},
        {m: identity_nat(identity_fun(chain)) for m in tau.two_cells()},
    )
    w = FWeight(shape, phi_tau, phi_lambda, {"*": identity_fun(chain)})
    assert validate_fweight(w) == []
    return w
