"""Weights for limits with designated tight projections.

A weight over a shape with a tightness predicate consists of a
Cat-valued weight on the loose 2-category, one on its tight part, and a
pointwise full embedding between them that is 2-natural over the tight
part.  The limit of a diagram weighted this way is the ordinary weighted
limit of the loose data, with the projections at embedded elements
required to be tight and to jointly detect tightness of maps into the
apex.

The builders at the bottom produce the standard menagerie at desk scale:
arrow limits of the three weak flavours, inserters and equifiers with
each choice of rigging, descent objects, powers by an embedding, tight
limits, and the splitting of idempotents.
"""

from dataclasses import dataclass

from .cat_core import (
    FinCat,
    Fun,
    NatTrans,
    arrow_cat,
    chain_cat,
    chaotic_cat,
    compose_fun,
    discrete_cat,
    empty_cat,
    full_subcat,
    generated_category,
    identity_fun,
    identity_nat,
    inclusion_fun,
    iso_cat,
    monoid_cat,
    opposite_cat,
    parallel_pair_cat,
    terminal_cat,
)
from .two_cat import (
    CatWeight,
    check_limit_in_two_cat,
    constant_weight,
    enumerate_w_transformations,
    hom_weight,
    locally_discrete_two_cat,
    representable_weight_2,
    suspension_two_cat,
    weighted_limit_cat,
    whisker_left,
    whisker_right,
)
from .f_core import (
    FCat,
    FObj,
    chordate,
    inchordate,
    tau_two_cat,
    validate_fcat,
    validate_fobj,
)

__all__ = [
    "FWeight",
    "FCone",
    "FLimitVerdict",
    "ShapeMismatch",
    "UnsupportedKind",
    "VERDICT_STATUSES",
    "validate_fweight",
    "validate_fcone",
    "tight_projections",
    "fweight_hom",
    "check_f_limit",
    "find_f_limit",
    "is_f_limit",
    "not_loose_limit",
    "loose_limit_only",
    "projection_not_tight",
    "does_not_detect_tightness",
    "representable_fweight",
    "weight_tight",
    "weight_arrow",
    "weight_inserter",
    "weight_equifier",
    "weight_descent",
    "weight_power",
    "weight_idempotent_splitting",
    "weight_pie_fixture",
]


class ShapeMismatch(Exception):
    pass


class UnsupportedKind(Exception):
    pass


# ----------------------------------------------------------------------------
# weights


class FWeight:
    """A pair of Cat-valued weights joined by pointwise full embeddings.

    shape: the indexing 2-category with its tightness predicate;
    phi_tau: weight on the tight part; phi_lambda: weight on the loose
    part; phi: per-object embedding of tight weight values into loose
    ones.
    """

    def __init__(self, shape, phi_tau, phi_lambda, phi):
        self.shape = shape
        self.phi_tau = phi_tau
        self.phi_lambda = phi_lambda
        self.phi = dict(phi)

    def key(self):
        return (
            self.shape.key(),
            self.phi_tau.key(),
            self.phi_lambda.key(),
            tuple(sorted((d, f.key()) for d, f in self.phi.items())),
        )

    def __eq__(self, other):
        return isinstance(other, FWeight) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


def validate_fweight(w):
    problems = validate_fcat(w.shape)
    if problems:
        return ["shape: " + p for p in problems]
    tau = tau_two_cat(w.shape)
    if w.phi_lambda.base.key() != w.shape.base.key():
        return ["loose weight is not based on the shape"]
    if w.phi_tau.base.key() != tau.key():
        return ["tight weight is not based on the tight part of the shape"]
    problems.extend("loose weight: " + p for p in w.phi_lambda.validate())
    problems.extend("tight weight: " + p for p in w.phi_tau.validate())
    if problems:
        return problems
    for d in w.shape.base.objects:
        f = w.phi.get(d)
        if f is None or f.dom != w.phi_tau.at[d] or f.cod != w.phi_lambda.at[d]:
            problems.append("embedding at {} has wrong endpoints".format(d))
            continue
        for msg in validate_fobj(FObj(w.phi_tau.at[d], w.phi_lambda.at[d], f)):
            problems.append("embedding at {}: {}".format(d, msg))
    if problems:
        return problems
    for u in tau.one_cells():
        a, b = tau.src1(u), tau.tgt1(u)
        left = compose_fun(w.phi_lambda.on1[u], w.phi[a])
        right = compose_fun(w.phi[b], w.phi_tau.on1[u])
        if left != right:
            problems.append("embedding not natural at tight 1-cell {}".format(u))
    if problems:
        return problems
    for m in tau.two_cells():
        a, b = tau.hom_of_2cell(m)
        left = whisker_right(w.phi_lambda.on2[m], w.phi[a])
        right = whisker_left(w.phi[b], w.phi_tau.on2[m])
        if left != right:
            problems.append("embedding not natural at tight 2-cell {}".format(m))
    return problems


# ----------------------------------------------------------------------------
# cones and verdicts


@dataclass(frozen=True)
class FCone:
    """A candidate limit cone: an apex with its loose leg."""

    apex: object
    leg: object


VERDICT_STATUSES = (
    "IsFLimit",
    "LooseLimitOnly",
    "NotLooseLimit",
    "ProjectionNotTight",
    "DoesNotDetectTightness",
)


@dataclass(frozen=True)
class FLimitVerdict:
    """Outcome of a limit check; witness nests the reason when the
    apex is a loose limit that fails a tightness condition."""

    status: str
    detail: tuple = ()
    witness: object = None

    def __post_init__(self):
        assert self.status in VERDICT_STATUSES

    @property
    def ok(self):
        return self.status == "IsFLimit"


def is_f_limit():
    return FLimitVerdict("IsFLimit")


def not_loose_limit(probe, detail=""):
    return FLimitVerdict("NotLooseLimit", (probe, detail))


def projection_not_tight(d, x, cell):
    return FLimitVerdict("ProjectionNotTight", (d, x, cell))


def does_not_detect_tightness(cell):
    return FLimitVerdict("DoesNotDetectTightness", (cell,))


def loose_limit_only(reason):
    assert reason.status in ("ProjectionNotTight", "DoesNotDetectTightness")
    return FLimitVerdict("LooseLimitOnly", (), reason)


def tight_projections(phi, cone):
    """The cone legs at embedded weight elements, per (object, element)."""
    out = {}
    for d in phi.shape.base.objects:
        leg = cone.leg.comp1[d]
        for x in phi.phi_tau.at[d].objects:
            out[(d, x)] = leg.ob[phi.phi[d].ob[x]]
    return out


def validate_fcone(phi, s, cone):
    k_f = s.cod
    k = k_f.base
    problems = []
    if cone.apex not in set(k.objects):
        return ["apex is not an object"]
    if cone.leg.kind != "strict":
        problems.append("leg is not strictly natural")
    if cone.leg.dom.key() != phi.phi_lambda.key():
        problems.append("leg does not start at the loose weight")
    target = hom_weight(k, cone.apex, s.fun)
    if cone.leg.cod.key() != target.key():
        problems.append("leg does not land in maps out of the apex")
    if problems:
        return problems
    problems.extend(cone.leg.validate())
    if problems:
        return problems
    for (d, x), cell in sorted(tight_projections(phi, cone).items()):
        if not k_f.is_tight(cell):
            problems.append(
                "projection at embedded element ({}, {}) is loose".format(d, x)
            )
    return problems


# ----------------------------------------------------------------------------
# hom of weights


def fweight_hom(a, b):
    """Transformations between the loose weights, with the restricting
    ones embedded as the tight part."""
    if a.shape != b.shape:
        raise ShapeMismatch("weights are indexed by different shapes")
    wlc = weighted_limit_cat(a.phi_lambda, b.phi_lambda)
    images = {
        d: {b.phi[d].ob[y] for y in b.phi_tau.at[d].objects}
        for d in b.shape.base.objects
    }
    tight_obs = []
    for name in wlc.cat.objects:
        t = wlc.trans_of[name]
        if all(
            t.comp1[d].ob[a.phi[d].ob[x]] in images[d]
            for d in a.shape.base.objects
            for x in a.phi_tau.at[d].objects
        ):
            tight_obs.append(name)
    tau = full_subcat(wlc.cat, tight_obs)
    return FObj(tau, wlc.cat, inclusion_fun(tau, wlc.cat))


# ----------------------------------------------------------------------------
# limit checking and search


def check_f_limit(phi, s, cand):
    """Decide whether the cone exhibits its apex as the weighted limit
    with tight, tightness-detecting projections."""
    k_f = s.cod
    if phi.shape != s.dom:
        raise ShapeMismatch("weight and diagram have different shapes")
    if cand.leg.dom.key() != phi.phi_lambda.key():
        raise ShapeMismatch("cone does not start at the loose weight")
    k = k_f.base
    res = check_limit_in_two_cat(k, phi.phi_lambda, s.fun, cand.apex, cand.leg)
    if not res.ok:
        return not_loose_limit(res.failing_probe, res.detail)
    projs = tight_projections(phi, cand)
    for (d, x), cell in sorted(projs.items()):
        if not k_f.is_tight(cell):
            return loose_limit_only(projection_not_tight(d, x, cell))
    proj_cells = sorted(set(projs.values()))
    for h in k.one_cells(None, cand.apex):
        if k_f.is_tight(h):
            continue
        if all(k_f.is_tight(k.comp1(p, h)) for p in proj_cells):
            return loose_limit_only(does_not_detect_tightness(h))
    return is_f_limit()


def find_f_limit(phi, s):
    """Search every object and every strict cone; first full success
    wins, scanning objects in their listed order."""
    k_f = s.cod
    k = k_f.base
    for apex in k.objects:
        target = hom_weight(k, apex, s.fun)
        for leg in enumerate_w_transformations(phi.phi_lambda, target, "strict"):
            cand = FCone(apex, leg)
            if check_f_limit(phi, s, cand).ok:
                return apex, cand
    return None


# ----------------------------------------------------------------------------
# builders


def _pick(c, o):
    t = terminal_cat()
    return Fun(t, c, {"*": o}, {"1_*": c.identity[o]})


def _empty_into(c):
    return Fun(empty_cat(), c, {}, {})


def _discrete_weight(k, at, on1):
    on2 = {m: identity_nat(on1[k.src2(m)]) for m in k.two_cells()}
    return CatWeight(k, at, on1, on2)


def representable_fweight(shape, d):
    """The weight whose limit picks out the diagram value at d."""
    tau = tau_two_cat(shape)
    phi = {
        a: inclusion_fun(tau.hom[(d, a)], shape.base.hom[(d, a)])
        for a in shape.base.objects
    }
    return FWeight(
        shape,
        representable_weight_2(tau, d),
        representable_weight_2(shape.base, d),
        phi,
    )


def weight_tight(m):
    """Everything tight: the weight asks for an ordinary limit in the
    tight part, preserved into the loose part."""
    shape = chordate(m.base)
    tau = tau_two_cat(shape)
    phi_tau = CatWeight(tau, m.at, m.on1, m.on2)
    return FWeight(shape, phi_tau, m, {d: identity_fun(m.at[d]) for d in m.base.objects})


def weight_arrow(kind):
    """Weak limit of a single loose arrow; the two projections are
    tight, the comparison 2-cell points per the kind."""
    if kind not in ("pseudo", "lax", "oplax"):
        raise UnsupportedKind("no arrow weight of kind {}".format(kind))
    base = locally_discrete_two_cat(arrow_cat("d", "c", "a"))
    shape = inchordate(base)
    one = terminal_cat()
    two = iso_cat() if kind == "pseudo" else arrow_cat()
    end = "0" if kind == "lax" else "1"
    on1 = {
        "1_d": identity_fun(one),
        "1_c": identity_fun(two),
        "a": _pick(two, end),
    }
    phi_lambda = _discrete_weight(base, {"d": one, "c": two}, on1)
    phi_tau = constant_weight(tau_two_cat(shape), one)
    phi = {"d": identity_fun(one), "c": _pick(two, "1" if kind == "lax" else "0")}
    return FWeight(shape, phi_tau, phi_lambda, phi)


def weight_inserter(kind):
    """Limit of a parallel pair with a comparison 2-cell inserted; the
    kind picks which of the two generating arrows is tight."""
    if kind not in ("pseudo", "lax", "oplax"):
        raise UnsupportedKind("no inserter weight of kind {}".format(kind))
    base = locally_discrete_two_cat(parallel_pair_cat())
    one = terminal_cat()
    two = arrow_cat()
    on1 = {
        "1_a": identity_fun(one),
        "1_b": identity_fun(two),
        "k0": _pick(two, "0"),
        "k1": _pick(two, "1"),
    }
    phi_lambda = _discrete_weight(base, {"a": one, "b": two}, on1)
    if kind == "pseudo":
        shape = inchordate(base)
        tau = tau_two_cat(shape)
        phi_tau = _discrete_weight(
            tau,
            {"a": one, "b": empty_cat()},
            {"1_a": identity_fun(one), "1_b": identity_fun(empty_cat())},
        )
        phi = {"a": identity_fun(one), "b": _empty_into(two)}
        return FWeight(shape, phi_tau, phi_lambda, phi)
    tight_arrow = "k0" if kind == "lax" else "k1"
    shape = FCat(base, {"1_a", "1_b", tight_arrow})
    tau = tau_two_cat(shape)
    phi_tau = _discrete_weight(
        tau,
        {"a": one, "b": one},
        {
            "1_a": identity_fun(one),
            "1_b": identity_fun(one),
            tight_arrow: identity_fun(one),
        },
    )
    phi = {"a": identity_fun(one), "b": _pick(two, "0" if kind == "lax" else "1")}
    return FWeight(shape, phi_tau, phi_lambda, phi)


def _equifier_hom():
    """Two parallel arrows k0, k1 with two parallel morphisms between
    them, used as a hom category under suspension."""
    return FinCat(
        ("k0", "k1"),
        ("1_k0", "1_k1", "g0", "g1"),
        {"1_k0": "k0", "1_k1": "k1", "g0": "k0", "g1": "k0"},
        {"1_k0": "k0", "1_k1": "k1", "g0": "k1", "g1": "k1"},
        {"k0": "1_k0", "k1": "1_k1"},
        {
            ("1_k0", "1_k0"): "1_k0",
            ("1_k1", "1_k1"): "1_k1",
            ("g0", "1_k0"): "g0",
            ("1_k1", "g0"): "g0",
            ("g1", "1_k0"): "g1",
            ("1_k1", "g1"): "g1",
        },
    )


def weight_equifier(kind):
    """Limit forcing two parallel 2-cells to agree; tights as for the
    inserter of the underlying parallel pair."""
    if kind not in ("pseudo", "lax", "oplax"):
        raise UnsupportedKind("no equifier weight of kind {}".format(kind))
    base = suspension_two_cat(_equifier_hom(), a="a", b="b")
    one = terminal_cat()
    two = arrow_cat()
    pick0, pick1 = _pick(two, "0"), _pick(two, "1")
    on1 = {
        "i_a": identity_fun(one),
        "i_b": identity_fun(two),
        "k0": pick0,
        "k1": pick1,
    }
    squeeze = NatTrans(pick0, pick1, {"*": "a"})
    on2 = {
        "1_i_a": identity_nat(on1["i_a"]),
        "1_i_b": identity_nat(on1["i_b"]),
        "1_k0": identity_nat(pick0),
        "1_k1": identity_nat(pick1),
        "g0": squeeze,
        "g1": squeeze,
    }
    phi_lambda = CatWeight(base, {"a": one, "b": two}, on1, on2)
    if kind == "pseudo":
        shape = inchordate(base)
        tau = tau_two_cat(shape)
        phi_tau = CatWeight(
            tau,
            {"a": one, "b": empty_cat()},
            {"i_a": identity_fun(one), "i_b": identity_fun(empty_cat())},
            {
                "1_i_a": identity_nat(identity_fun(one)),
                "1_i_b": identity_nat(identity_fun(empty_cat())),
            },
        )
        phi = {"a": identity_fun(one), "b": _empty_into(two)}
        return FWeight(shape, phi_tau, phi_lambda, phi)
    tight_arrow = "k0" if kind == "lax" else "k1"
    shape = FCat(base, {"i_a", "i_b", tight_arrow})
    tau = tau_two_cat(shape)
    ident = identity_fun(one)
    phi_tau = CatWeight(
        tau,
        {"a": one, "b": one},
        {"i_a": ident, "i_b": ident, tight_arrow: ident},
        {
            "1_i_a": identity_nat(ident),
            "1_i_b": identity_nat(ident),
            "1_" + tight_arrow: identity_nat(ident),
        },
    )
    phi = {"a": identity_fun(one), "b": _pick(two, "0" if kind == "lax" else "1")}
    return FWeight(shape, phi_tau, phi_lambda, phi)


def _thin_fun(dom, cod, ob):
    mor = {}
    for m in dom.morphisms:
        hits = cod.hom(ob[dom.src[m]], ob[dom.tgt[m]])
        assert len(hits) == 1, "target category is not thin enough"
        mor[m] = hits[0]
    return Fun(dom, cod, dict(ob), mor)


def _compose_closure(cat, seed):
    tight = set(seed)
    changed = True
    while changed:
        changed = False
        for (g, f), h in cat.table.items():
            if g in tight and f in tight and h not in tight:
                tight.add(h)
                changed = True
    return tight


def weight_descent(kind):
    """Descent object of a three-level cosimplicial diagram.

    The loose shape is the category generated inside Cat by the coface
    and codegeneracy functors between the chains of lengths one, two,
    and three; the value categories are those chains (reversed for the
    oplax kind, made chaotic for the pseudo kind).  The tight part is
    generated by one bottom coface, the codegeneracy, and two top
    cofaces, and the embedding picks one element per level.
    """
    if kind not in ("pseudo", "lax", "oplax"):
        raise UnsupportedKind("no descent weight of kind {}".format(kind))
    if kind == "lax":
        one, two, three = chain_cat(1), chain_cat(2), chain_cat(3)
    elif kind == "oplax":
        one = chain_cat(1)
        two, three = opposite_cat(chain_cat(2)), opposite_cat(chain_cat(3))
    else:
        one = chain_cat(1)
        two, three = chaotic_cat(["0", "1"]), chaotic_cat(["0", "1", "2"])
    gens = {
        "1_one": ("one", "one", identity_fun(one)),
        "1_two": ("two", "two", identity_fun(two)),
        "1_three": ("three", "three", identity_fun(three)),
        "d0": ("one", "two", _thin_fun(one, two, {"0": "1"})),
        "d1": ("one", "two", _thin_fun(one, two, {"0": "0"})),
        "s": ("two", "one", _thin_fun(two, one, {"0": "0", "1": "0"})),
        "e0": ("two", "three", _thin_fun(two, three, {"0": "1", "1": "2"})),
        "e1": ("two", "three", _thin_fun(two, three, {"0": "0", "1": "2"})),
        "e2": ("two", "three", _thin_fun(two, three, {"0": "0", "1": "1"})),
    }
    cat, value = generated_category(("one", "two", "three"), gens, compose_fun)
    base = locally_discrete_two_cat(cat)
    phi_lambda = _discrete_weight(
        base, {"one": one, "two": two, "three": three}, value
    )
    if kind == "oplax":
        seed = {"1_one", "1_two", "1_three", "d1", "s", "e1", "e2"}
        picks = {"one": "0", "two": "0", "three": "0"}
    else:
        seed = {"1_one", "1_two", "1_three", "d0", "s", "e0", "e1"}
        picks = {"one": "0", "two": "1", "three": "2"}
    shape = FCat(base, _compose_closure(cat, seed))
    phi_tau = constant_weight(tau_two_cat(shape), terminal_cat())
    phi = {d: _pick(phi_lambda.at[d], picks[d]) for d in cat.objects}
    return FWeight(shape, phi_tau, phi_lambda, phi)


def weight_power(x):
    """Power of a single diagram value by a full embedding."""
    base = locally_discrete_two_cat(terminal_cat())
    shape = chordate(base)
    phi_lambda = constant_weight(base, x.lam)
    phi_tau = constant_weight(tau_two_cat(shape), x.tau)
    return FWeight(shape, phi_tau, phi_lambda, {"*": x.j})


def _idempotent_monoid_cat():
    mult = {
        ("1", "1"): "1",
        ("1", "e"): "e",
        ("e", "1"): "e",
        ("e", "e"): "e",
    }
    return monoid_cat(("1", "e"), "1", mult)


def weight_idempotent_splitting():
    """Tight splitting of a single idempotent."""
    base = locally_discrete_two_cat(_idempotent_monoid_cat())
    return weight_tight(constant_weight(base, terminal_cat()))


def weight_pie_fixture(name):
    """Named Cat-valued weights for the classification suites."""
    if name == "product":
        base = locally_discrete_two_cat(discrete_cat(["d1", "d2"]))
        return constant_weight(base, terminal_cat())
    if name == "splitting":
        return weight_idempotent_splitting().phi_lambda
    if name == "inserter":
        return weight_inserter("pseudo").phi_lambda
    if name == "equifier":
        return weight_equifier("pseudo").phi_lambda
    if name in ("lax_arrow", "oplax_arrow", "pseudo_arrow"):
        return weight_arrow(name.split("_")[0]).phi_lambda
    if name in ("descent_l", "descent_c", "descent_p"):
        kind = {"l": "lax", "c": "oplax", "p": "pseudo"}[name.split("_")[1]]
        return weight_descent(kind).phi_lambda
    raise ValueError("unknown fixture: {}".format(name))
