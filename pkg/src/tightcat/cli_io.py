"""Serialization schemas, the command-line surface, and the fixture corpus.

Documents are JSON objects tagged by a "kind" field naming their
schema: category, two_cat, fcat, weight, fweight, or monad (plus
probe_set for the --probes flag).  Loading rejects unknown fields,
duplicate names, dangling references, and incomplete composition
tables; canonical form lists objects before morphisms and sorts every
block lexicographically by name, so saving is idempotent and diffs are
stable.  Loading checks well-formedness only; the laws themselves are
the job of the validate command.

The command surface mirrors the decision procedures: validators, the
elements characterization, riggedness in each flavor, classifier and
canonical-rigging construction, limit search, lifting along a monad's
forgetful functor, the creation survey, objects of algebras, and a
golden corpus that rebuilds the frozen examples from scratch.  Exit
codes: 0 for affirmative or clean runs, 1 for negative verdicts, 2 for
input errors, 3 for an exceeded budget.  All commands are
deterministic; --seed is echoed into the report unchanged.
"""

import functools
import json
import pathlib
import time

import click

from .cat_core import (
    BudgetExceeded,
    CatPresentation,
    CompletionBudget,
    FinCat,
    Fun,
    NatTrans,
    arrow_cat,
    discrete_cat,
    generated_category,
    identity_fun,
    identity_nat,
    realize_presentation,
    terminal_cat,
    validate_category,
)
from .two_cat import (
    CatWeight,
    TwoCat,
    TwoFun,
    TwoMonad,
    constant_weight,
    is_iso_mor,
    locally_discrete_two_cat,
    two_cat_of_cats,
    validate_two_cat,
    vcompose_wnat,
)
from .f_core import (
    FCat,
    FFun,
    chordate,
    compose_ffun,
    f_one_loose,
    f_one_tight,
    identity_ffun,
    inchordate,
    tau_two_cat,
    validate_fcat,
)
from .weights import (
    FWeight,
    check_f_limit,
    find_f_limit,
    validate_fweight,
    weight_arrow,
    weight_equifier,
    weight_idempotent_splitting,
    weight_inserter,
    weight_pie_fixture,
    weight_power,
)
from .kan_classifiers import (
    AdjunctionDataMissing,
    ProbeBijectionFailure,
    build_relative_classifier,
    f_coalgebra_check,
    find_coalgebras,
    is_identity_transformation,
    phi_bar_objects,
)
from .riggedness import (
    canonical_rigging,
    classifier_kind,
    is_pie,
    is_rigged,
    is_tightly_rigged,
    object_weight,
)
from .cat_core import category_of_elements
from .monad_alg import (
    FMonad,
    _strict_tight_fnat,
    action_fixture_monad,
    build_t_alg_w,
    closure_fixture_monad,
    em_object_f,
    enumerate_diagrams,
    identity_fixture_monad,
    lift_check,
    lift_survey,
)

__all__ = [
    "Fixture",
    "SchemaError",
    "canonical_json",
    "corpus_fixtures",
    "fixture_by_name",
    "load_document",
    "load_payload",
    "main",
    "save_payload",
]


SCHEMA_KINDS = ("category", "two_cat", "fcat", "weight", "fweight", "monad")


class SchemaError(Exception):
    """Raised when an input document fails well-formedness checks."""


# ----------------------------------------------------------------------------
# canonical form


def canonical_json(doc):
    """Serialize a document in canonical form, newline terminated.

    Canonical order is fixed at construction time by the save
    functions: schema fields in declaration order, every name-keyed
    block sorted lexicographically, objects before morphisms.
    """
    return json.dumps(doc, indent=2) + "\n"


def _sorted_map(d):
    return {k: d[k] for k in sorted(d)}


def _expect(doc, required, where, optional=()):
    if not isinstance(doc, dict):
        raise SchemaError("{}: expected an object, got {}".format(
            where, type(doc).__name__))
    missing = [f for f in required if f not in doc]
    if missing:
        raise SchemaError("{}: missing field(s) {}".format(
            where, ", ".join(missing)))
    unknown = [f for f in doc if f not in required and f not in optional]
    if unknown:
        raise SchemaError("{}: unknown field(s) {}".format(
            where, ", ".join(sorted(unknown))))


def _str_list(doc, field, where):
    value = doc[field]
    if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
        raise SchemaError("{}.{}: expected a list of strings".format(where, field))
    return value


def _str_map(doc, field, where):
    value = doc[field]
    if not isinstance(value, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in value.items()
    ):
        raise SchemaError("{}.{}: expected a string-to-string map".format(
            where, field))
    return value


# ----------------------------------------------------------------------------
# categories


def save_category(c):
    return {
        "kind": "category",
        "objects": sorted(c.objects),
        "morphisms": [
            {"name": m, "src": c.src[m], "tgt": c.tgt[m]}
            for m in sorted(c.morphisms)
        ],
        "identity": _sorted_map(c.identity),
        "compose": [
            {"after": g, "then": f, "equals": h}
            for (g, f), h in sorted(c.table.items())
        ],
    }


def load_category(doc, where="category"):
    _expect(doc, ("kind", "objects", "morphisms", "identity", "compose"), where)
    if doc["kind"] != "category":
        raise SchemaError("{}: kind is {!r}, expected 'category'".format(
            where, doc["kind"]))
    objects = _str_list(doc, "objects", where)
    if len(set(objects)) != len(objects):
        raise SchemaError("{}: duplicate object name".format(where))
    oset = set(objects)
    names, src, tgt = [], {}, {}
    for i, entry in enumerate(doc["morphisms"]):
        at = "{}.morphisms[{}]".format(where, i)
        _expect(entry, ("name", "src", "tgt"), at)
        name = entry["name"]
        if name in src:
            raise SchemaError("{}: duplicate morphism name {!r}".format(at, name))
        if entry["src"] not in oset or entry["tgt"] not in oset:
            raise SchemaError("{}: unknown object in boundary of {!r}".format(
                at, name))
        names.append(name)
        src[name] = entry["src"]
        tgt[name] = entry["tgt"]
    mset = set(names)
    identity = _str_map(doc, "identity", where)
    if set(identity) != oset:
        raise SchemaError("{}.identity: keys must be exactly the objects".format(
            where))
    for a, m in identity.items():
        if m not in mset:
            raise SchemaError("{}.identity[{}]: unknown morphism {!r}".format(
                where, a, m))
    table = {}
    for i, entry in enumerate(doc["compose"]):
        at = "{}.compose[{}]".format(where, i)
        _expect(entry, ("after", "then", "equals"), at)
        g, f, h = entry["after"], entry["then"], entry["equals"]
        for m in (g, f, h):
            if m not in mset:
                raise SchemaError("{}: unknown morphism {!r}".format(at, m))
        if (g, f) in table:
            raise SchemaError("{}: duplicate entry for ({!r}, {!r})".format(
                at, g, f))
        table[(g, f)] = h
    for f in names:
        for g in names:
            if tgt[f] == src[g] and (g, f) not in table:
                raise SchemaError(
                    "{}.compose: missing composition entry at ({!r}, {!r})".format(
                        where, g, f))
    return FinCat(objects, names, src, tgt, identity, table)


# ----------------------------------------------------------------------------
# 2-categories


def save_two_cat(k):
    return {
        "kind": "two_cat",
        "objects": sorted(k.objects),
        "hom": [
            {"src": a, "tgt": b, "cat": save_category(k.hom[(a, b)])}
            for a, b in sorted(k.hom)
        ],
        "id1": _sorted_map(k.id1),
        "hcomp1": [
            {"after": v, "then": u, "equals": w}
            for (v, u), w in sorted(k.hcomp1.items())
        ],
        "hcomp2": [
            {"after": v, "then": u, "equals": w}
            for (v, u), w in sorted(k.hcomp2.items())
        ],
    }


def load_two_cat(doc, where="two_cat"):
    _expect(doc, ("kind", "objects", "hom", "id1", "hcomp1", "hcomp2"), where)
    if doc["kind"] != "two_cat":
        raise SchemaError("{}: kind is {!r}, expected 'two_cat'".format(
            where, doc["kind"]))
    objects = _str_list(doc, "objects", where)
    if len(set(objects)) != len(objects):
        raise SchemaError("{}: duplicate object name".format(where))
    oset = set(objects)
    hom = {}
    for i, entry in enumerate(doc["hom"]):
        at = "{}.hom[{}]".format(where, i)
        _expect(entry, ("src", "tgt", "cat"), at)
        a, b = entry["src"], entry["tgt"]
        if a not in oset or b not in oset:
            raise SchemaError("{}: unknown object".format(at))
        if (a, b) in hom:
            raise SchemaError("{}: duplicate hom entry ({!r}, {!r})".format(
                at, a, b))
        hom[(a, b)] = load_category(entry["cat"], at + ".cat")
    for a in objects:
        for b in objects:
            if (a, b) not in hom:
                raise SchemaError("{}.hom: missing entry for ({!r}, {!r})".format(
                    where, a, b))
    pair_of_1, pair_of_2 = {}, {}
    for (a, b), h in hom.items():
        for f in h.objects:
            if f in pair_of_1:
                raise SchemaError("{}: duplicate 1-cell name {!r}".format(
                    where, f))
            pair_of_1[f] = (a, b)
        for m in h.morphisms:
            if m in pair_of_2:
                raise SchemaError("{}: duplicate 2-cell name {!r}".format(
                    where, m))
            pair_of_2[m] = (a, b)
    id1 = _str_map(doc, "id1", where)
    if set(id1) != oset:
        raise SchemaError("{}.id1: keys must be exactly the objects".format(where))
    for a, f in id1.items():
        if pair_of_1.get(f) != (a, a):
            raise SchemaError("{}.id1[{}]: {!r} is not a 1-cell on {}".format(
                where, a, f, a))
    hcomp1 = {}
    for i, entry in enumerate(doc["hcomp1"]):
        at = "{}.hcomp1[{}]".format(where, i)
        _expect(entry, ("after", "then", "equals"), at)
        v, u, w = entry["after"], entry["then"], entry["equals"]
        for f in (v, u, w):
            if f not in pair_of_1:
                raise SchemaError("{}: unknown 1-cell {!r}".format(at, f))
        if (v, u) in hcomp1:
            raise SchemaError("{}: duplicate entry".format(at))
        hcomp1[(v, u)] = w
    for u, (a, b) in pair_of_1.items():
        for v, (b2, c) in pair_of_1.items():
            if b == b2 and (v, u) not in hcomp1:
                raise SchemaError(
                    "{}.hcomp1: missing composition entry at ({!r}, {!r})".format(
                        where, v, u))
    hcomp2 = {}
    for i, entry in enumerate(doc["hcomp2"]):
        at = "{}.hcomp2[{}]".format(where, i)
        _expect(entry, ("after", "then", "equals"), at)
        v, u, w = entry["after"], entry["then"], entry["equals"]
        for m in (v, u, w):
            if m not in pair_of_2:
                raise SchemaError("{}: unknown 2-cell {!r}".format(at, m))
        if (v, u) in hcomp2:
            raise SchemaError("{}: duplicate entry".format(at))
        hcomp2[(v, u)] = w
    for u, (a, b) in pair_of_2.items():
        for v, (b2, c) in pair_of_2.items():
            if b == b2 and (v, u) not in hcomp2:
                raise SchemaError(
                    "{}.hcomp2: missing composition entry at ({!r}, {!r})".format(
                        where, v, u))
    return TwoCat(objects, hom, id1, hcomp1, hcomp2)


# ----------------------------------------------------------------------------
# enriched categories


def save_fcat(f):
    return {
        "kind": "fcat",
        "base": save_two_cat(f.base),
        "tight": sorted(f.tight),
    }


def load_fcat(doc, where="fcat"):
    _expect(doc, ("kind", "base", "tight"), where)
    if doc["kind"] != "fcat":
        raise SchemaError("{}: kind is {!r}, expected 'fcat'".format(
            where, doc["kind"]))
    base = load_two_cat(doc["base"], where + ".base")
    tight = _str_list(doc, "tight", where)
    cells = set(base.one_cells())
    for t in tight:
        if t not in cells:
            raise SchemaError("{}.tight: unknown 1-cell {!r}".format(where, t))
    return FCat(base, frozenset(tight))


# ----------------------------------------------------------------------------
# weights


def _save_fun(f):
    return {"ob": _sorted_map(f.ob), "mor": _sorted_map(f.mor)}


def _load_fun(doc, dom, cod, where):
    _expect(doc, ("ob", "mor"), where)
    ob = _str_map(doc, "ob", where)
    mor = _str_map(doc, "mor", where)
    if set(ob) != set(dom.objects):
        raise SchemaError("{}.ob: keys must be exactly the domain objects".format(
            where))
    if set(mor) != set(dom.morphisms):
        raise SchemaError(
            "{}.mor: keys must be exactly the domain morphisms".format(where))
    cob, cmor = set(cod.objects), set(cod.morphisms)
    for x, y in ob.items():
        if y not in cob:
            raise SchemaError("{}.ob[{}]: unknown object {!r}".format(
                where, x, y))
    for m, n in mor.items():
        if n not in cmor:
            raise SchemaError("{}.mor[{}]: unknown morphism {!r}".format(
                where, m, n))
    return Fun(dom, cod, ob, mor)


def _save_weight_body(w):
    return {
        "at": {d: save_category(w.at[d]) for d in sorted(w.at)},
        "on1": {u: _save_fun(w.on1[u]) for u in sorted(w.on1)},
        "on2": {m: _sorted_map(w.on2[m].comp) for m in sorted(w.on2)},
    }


def _load_weight_body(doc, base, where):
    _expect(doc, ("at", "on1", "on2"), where)
    if set(doc["at"]) != set(base.objects):
        raise SchemaError("{}.at: keys must be exactly the base objects".format(
            where))
    at = {
        d: load_category(doc["at"][d], "{}.at[{}]".format(where, d))
        for d in base.objects
    }
    cells1 = list(base.one_cells())
    if set(doc["on1"]) != set(cells1):
        raise SchemaError(
            "{}.on1: keys must be exactly the base 1-cells".format(where))
    on1 = {
        u: _load_fun(
            doc["on1"][u],
            at[base.src1(u)],
            at[base.tgt1(u)],
            "{}.on1[{}]".format(where, u),
        )
        for u in cells1
    }
    cells2 = list(base.two_cells())
    if set(doc["on2"]) != set(cells2):
        raise SchemaError(
            "{}.on2: keys must be exactly the base 2-cells".format(where))
    on2 = {}
    for m in cells2:
        at_m = "{}.on2[{}]".format(where, m)
        comp = _str_map(doc["on2"], m, where + ".on2")
        f, g = on1[base.src2(m)], on1[base.tgt2(m)]
        if set(comp) != set(f.dom.objects):
            raise SchemaError(
                "{}: keys must be exactly the source objects".format(at_m))
        known = set(g.cod.morphisms)
        for x, c in comp.items():
            if c not in known:
                raise SchemaError("{}[{}]: unknown morphism {!r}".format(
                    at_m, x, c))
        on2[m] = NatTrans(f, g, comp)
    return CatWeight(base, at, on1, on2)


def save_weight(w):
    doc = {"kind": "weight", "base": save_two_cat(w.base)}
    doc.update(_save_weight_body(w))
    return doc


def load_weight(doc, where="weight"):
    _expect(doc, ("kind", "base", "at", "on1", "on2"), where)
    if doc["kind"] != "weight":
        raise SchemaError("{}: kind is {!r}, expected 'weight'".format(
            where, doc["kind"]))
    base = load_two_cat(doc["base"], where + ".base")
    body = {f: doc[f] for f in ("at", "on1", "on2")}
    return _load_weight_body(body, base, where)


def save_fweight(w):
    return {
        "kind": "fweight",
        "shape": save_fcat(w.shape),
        "phi_tau": _save_weight_body(w.phi_tau),
        "phi_lambda": _save_weight_body(w.phi_lambda),
        "phi": {d: _save_fun(w.phi[d]) for d in sorted(w.phi)},
    }


def load_fweight(doc, where="fweight"):
    _expect(doc, ("kind", "shape", "phi_tau", "phi_lambda", "phi"), where)
    if doc["kind"] != "fweight":
        raise SchemaError("{}: kind is {!r}, expected 'fweight'".format(
            where, doc["kind"]))
    shape = load_fcat(doc["shape"], where + ".shape")
    tau = tau_two_cat(shape)
    phi_tau = _load_weight_body(doc["phi_tau"], tau, where + ".phi_tau")
    phi_lambda = _load_weight_body(
        doc["phi_lambda"], shape.base, where + ".phi_lambda")
    if set(doc["phi"]) != set(shape.base.objects):
        raise SchemaError(
            "{}.phi: keys must be exactly the shape objects".format(where))
    phi = {
        d: _load_fun(
            doc["phi"][d],
            phi_tau.at[d],
            phi_lambda.at[d],
            "{}.phi[{}]".format(where, d),
        )
        for d in shape.base.objects
    }
    return FWeight(shape, phi_tau, phi_lambda, phi)


# ----------------------------------------------------------------------------
# monads


def save_monad(m):
    if isinstance(m, TwoMonad):
        return {
            "kind": "monad",
            "style": "object",
            "obj": m.obj,
            "t": m.t,
            "eta": m.eta,
            "mu": m.mu,
        }
    return {
        "kind": "monad",
        "style": "enriched",
        "base": save_fcat(m.base),
        "ob": _sorted_map(m.t.ob),
        "on1": _sorted_map(m.t.on1),
        "on2": _sorted_map(m.t.on2),
        "eta": _sorted_map(m.eta.comp1),
        "mu": _sorted_map(m.mu.comp1),
    }


def load_monad(doc, where="monad"):
    if not isinstance(doc, dict) or doc.get("style") not in ("enriched", "object"):
        raise SchemaError(
            "{}: style must be 'enriched' or 'object'".format(where))
    if doc["style"] == "object":
        _expect(doc, ("kind", "style", "obj", "t", "eta", "mu"), where)
        for f in ("obj", "t", "eta", "mu"):
            if not isinstance(doc[f], str):
                raise SchemaError("{}.{}: expected a string".format(where, f))
        return TwoMonad(doc["obj"], doc["t"], doc["mu"], doc["eta"])
    _expect(
        doc,
        ("kind", "style", "base", "ob", "on1", "on2", "eta", "mu"),
        where,
    )
    base = load_fcat(doc["base"], where + ".base")
    k = base.base
    ob = _str_map(doc, "ob", where)
    on1 = _str_map(doc, "on1", where)
    on2 = _str_map(doc, "on2", where)
    if set(ob) != set(k.objects):
        raise SchemaError("{}.ob: keys must be exactly the objects".format(where))
    cells1, cells2 = set(k.one_cells()), set(k.two_cells())
    if set(on1) != cells1:
        raise SchemaError("{}.on1: keys must be exactly the 1-cells".format(where))
    if set(on2) != cells2:
        raise SchemaError("{}.on2: keys must be exactly the 2-cells".format(where))
    for field, value, known in (("ob", ob, set(k.objects)),
                                ("on1", on1, cells1), ("on2", on2, cells2)):
        for x, y in value.items():
            if y not in known:
                raise SchemaError("{}.{}[{}]: unknown image {!r}".format(
                    where, field, x, y))
    t = FFun(base, base, TwoFun(k, k, ob, on1, on2))
    for field in ("eta", "mu"):
        comp = _str_map(doc, field, where)
        if set(comp) != set(k.objects):
            raise SchemaError(
                "{}.{}: keys must be exactly the objects".format(where, field))
        for a, c in comp.items():
            if c not in cells1:
                raise SchemaError("{}.{}[{}]: unknown 1-cell {!r}".format(
                    where, field, a, c))
    eta = _strict_tight_fnat(identity_ffun(base), t, dict(doc["eta"]))
    mu = _strict_tight_fnat(compose_ffun(t, t), t, dict(doc["mu"]))
    return FMonad(base, t, eta, mu)


# ----------------------------------------------------------------------------
# dispatch


_SAVERS = (
    (FinCat, save_category),
    (TwoCat, save_two_cat),
    (FCat, save_fcat),
    (CatWeight, save_weight),
    (FWeight, save_fweight),
    (FMonad, save_monad),
    (TwoMonad, save_monad),
)

_LOADERS = {
    "category": load_category,
    "two_cat": load_two_cat,
    "fcat": load_fcat,
    "weight": load_weight,
    "fweight": load_fweight,
    "monad": load_monad,
}


def save_payload(obj):
    """Serialize any supported payload to its canonical document."""
    for cls, saver in _SAVERS:
        if isinstance(obj, cls):
            return saver(obj)
    raise TypeError("no schema for {}".format(type(obj).__name__))


def load_payload(doc, where="input"):
    """Load a document of any supported kind."""
    if not isinstance(doc, dict) or "kind" not in doc:
        raise SchemaError("{}: expected an object with a 'kind' field".format(
            where))
    loader = _LOADERS.get(doc["kind"])
    if loader is None:
        raise SchemaError("{}: unknown kind {!r}".format(where, doc["kind"]))
    return loader(doc, where)


def load_document(text, where="input"):
    """Parse JSON text and load the payload it describes."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise SchemaError(
            "{}: invalid JSON at line {} column {}: {}".format(
                where, err.lineno, err.colno, err.msg))
    return load_payload(doc, where)


def load_probe_set(text, where="probes"):
    """Parse a probe_set document into a tuple of Cat-valued weights."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise SchemaError(
            "{}: invalid JSON at line {} column {}: {}".format(
                where, err.lineno, err.colno, err.msg))
    _expect(doc, ("kind", "probes"), where)
    if doc["kind"] != "probe_set":
        raise SchemaError("{}: kind is {!r}, expected 'probe_set'".format(
            where, doc["kind"]))
    if not isinstance(doc["probes"], list):
        raise SchemaError("{}.probes: expected a list".format(where))
    return tuple(
        load_weight(p, "{}.probes[{}]".format(where, i))
        for i, p in enumerate(doc["probes"])
    )


# ----------------------------------------------------------------------------
# the fixture corpus


class Fixture:
    """A named corpus entry: payload plus a note locating its derivation."""

    def __init__(self, name, kind, payload, note):
        self.name = name
        self.kind = kind
        self.payload = payload
        self.note = note


def _split_idem_fcat():
    """Two objects with a loose retraction; the induced idempotent on b
    is tight, the section and retraction stay loose."""
    cat, _ = generated_category(
        ("a", "b"),
        {
            "1_a": ("a", "a", (0,)),
            "1_b": ("b", "b", (0, 1)),
            "i": ("a", "b", (0,)),
            "r": ("b", "a", (0, 0)),
        },
        compose=lambda after, then: tuple(after[x] for x in then),
    )
    return FCat(locally_discrete_two_cat(cat), frozenset({"1_a", "1_b", "i.r"}))


def _collapsing_pair_fcat():
    """Two tight arrows coequalized by a loose one-sided inverse."""
    pres = CatPresentation(
        ("a", "b"),
        (("r", "a", "b"), ("s", "a", "b"), ("g", "b", "a")),
        ((("g", "s"), ()), (("r", "g", "r"), ("s", "g", "r"))),
    )
    real = realize_presentation(pres)
    return FCat(
        locally_discrete_two_cat(real.cat), frozenset({"1_a", "1_b", "r", "s"})
    )


def _discrete_rigging(shape, obs):
    """The constant-point loose weight with a discrete tight part on
    the named objects."""
    tau = tau_two_cat(shape)
    one = terminal_cat()
    at = {d: discrete_cat(obs[d]) for d in tau.objects}
    on1 = {}
    for t in tau.one_cells():
        a, b = tau.src1(t), tau.tgt1(t)
        on1[t] = Fun(
            at[a],
            at[b],
            {x: x for x in at[a].objects},
            {m: at[b].identity[at[a].src[m]] for m in at[a].morphisms},
        )
    on2 = {m: identity_nat(on1[tau.src2(m)]) for m in tau.two_cells()}
    phi_tau = CatWeight(tau, at, on1, on2)
    phi = {
        d: Fun(
            at[d],
            one,
            {x: "*" for x in at[d].objects},
            {m: "1_*" for m in at[d].morphisms},
        )
        for d in tau.objects
    }
    lam = constant_weight(shape.base, one)
    w = FWeight(shape, phi_tau, lam, phi)
    assert validate_fweight(w) == []
    return w


@functools.cache
def _round_up_pair():
    """A base of two small categories and the monad rounding the walking
    arrow up to its target, whose object of algebras is the point."""
    toc = two_cat_of_cats({"F": terminal_cat(), "P": arrow_cat()})
    k = toc.two_cat
    const1 = Fun(
        arrow_cat(),
        arrow_cat(),
        {"0": "1", "1": "1"},
        {"1_0": "1_1", "1_1": "1_1", "a": "1_1"},
    )
    t = next(
        n for n in k.hom[("P", "P")].objects if toc.fun_of[n].key() == const1.key()
    )
    eta_nat = NatTrans(identity_fun(arrow_cat()), const1, {"0": "a", "1": "1_1"})
    eta = next(
        n for n in k.hom[("P", "P")].morphisms
        if toc.nat_of[n].key() == eta_nat.key()
    )
    return chordate(k), TwoMonad("P", t, k.id2(t), eta)


@functools.cache
def corpus_fixtures():
    """The builtin corpus, in lexicographic order by name."""
    si = _split_idem_fcat()
    cp = _collapsing_pair_fcat()
    round_base, round_monad = _round_up_pair()
    entries = (
        Fixture(
            "eg_action_monad", "monad", action_fixture_monad(),
            "derivation: tests/test_monad_alg.py, fixture monad suite",
        ),
        Fixture(
            "eg_arrow_oplax", "fweight", weight_arrow("oplax"),
            "derivation: tests/test_riggedness.py, flavor chirality suite",
        ),
        Fixture(
            "eg_closure_monad", "monad", closure_fixture_monad(),
            "derivation: tests/test_monad_alg.py, fixture monad suite",
        ),
        Fixture(
            "eg_collapsing_shape", "fcat", cp,
            "derivation: tests/test_riggedness.py, collapsing pair suite",
        ),
        Fixture(
            "eg_idempotent_splitting", "fweight", weight_idempotent_splitting(),
            "derivation: tests/test_riggedness.py, elements characterization",
        ),
        Fixture(
            "eg_identity_monad", "monad", identity_fixture_monad(),
            "derivation: tests/test_monad_alg.py, fixture monad suite",
        ),
        Fixture(
            "eg_inserter_lax", "fweight", weight_inserter("lax"),
            "derivation: tests/test_riggedness.py, flavor chirality suite",
        ),
        Fixture(
            "eg_not_rigged", "fweight",
            _discrete_rigging(cp, {"a": ("x",), "b": ("x",)}),
            "derivation: tests/test_riggedness.py, collapsing pair suite",
        ),
        Fixture(
            "eg_power_loose", "fweight", weight_power(f_one_loose()),
            "derivation: tests/test_monad_alg.py, power obstruction suite",
        ),
        Fixture(
            "eg_power_tight", "fweight", weight_power(f_one_tight()),
            "derivation: tests/test_monad_alg.py, power creation suite",
        ),
        Fixture(
            "eg_product_weight", "weight", weight_pie_fixture("product"),
            "derivation: tests/test_riggedness.py, elements characterization",
        ),
        Fixture(
            "eg_round_up_base", "fcat", round_base,
            "derivation: tests/test_monad_alg.py, object-of-algebras suite",
        ),
        Fixture(
            "eg_round_up_monad", "monad", round_monad,
            "derivation: tests/test_monad_alg.py, object-of-algebras suite",
        ),
        Fixture(
            "eg_two_qcoalg", "fweight",
            _discrete_rigging(si, {"a": ("x",), "b": ()}),
            "derivation: tests/test_riggedness.py, two-structure fixture",
        ),
        Fixture(
            "eg_walking_arrow", "category", arrow_cat(),
            "derivation: tests/test_cat_core.py, stock categories",
        ),
    )
    assert [f.name for f in entries] == sorted(f.name for f in entries)
    return entries


def fixture_by_name(name):
    for f in corpus_fixtures():
        if f.name == name:
            return f
    raise SchemaError("unknown corpus fixture {!r}".format(name))


def survey_zoo():
    """The default weight family for lift-survey: every fast zoo entry."""
    return (
        ("arrow_lax", weight_arrow("lax")),
        ("arrow_oplax", weight_arrow("oplax")),
        ("equifier_lax", weight_equifier("lax")),
        ("inserter_lax", weight_inserter("lax")),
        ("inserter_oplax", weight_inserter("oplax")),
        ("power_loose", weight_power(f_one_loose())),
        ("power_tight", weight_power(f_one_tight())),
    )


# ----------------------------------------------------------------------------
# reports


def _render_text(body):
    lines = []
    cmd = body["command"]
    lines.append("command: " + cmd["subcommand"])
    for key in sorted(cmd):
        if key != "subcommand" and cmd[key] not in (None, (), []):
            lines.append("  {}: {}".format(key, cmd[key]))
    for v in body["verdicts"]:
        line = "verdict {}: {}".format(v["subject"], v["verdict"])
        if v.get("detail"):
            line += " ({})".format(v["detail"])
        lines.append(line)
    for w in body["witnesses"]:
        lines.append("witness: " + json.dumps(w))
    for c in body["certification"]:
        lines.append("certified: " + c)
    if body.get("note"):
        lines.append("note: " + body["note"])
    lines.append("timing: {}s".format(body["timing"]["seconds"]))
    return "\n".join(lines)


def _emit(body, fmt, ok):
    if fmt == "json":
        click.echo(canonical_json(body), nl=False)
    else:
        click.echo(_render_text(body))
    raise SystemExit(0 if ok else 1)


def _run(subcommand, fmt, build, **echo):
    """Execute a command body and map its outcome to an exit code."""
    t0 = time.perf_counter()
    command = {"subcommand": subcommand}
    command.update({k: v for k, v in echo.items() if v not in (None, ())})
    try:
        ok, verdicts, witnesses, certification, note = build()
    except SchemaError as err:
        click.echo("input error: {}".format(err), err=True)
        raise SystemExit(2)
    except BudgetExceeded as err:
        click.echo("budget exceeded: {}".format(err), err=True)
        raise SystemExit(3)
    body = {
        "command": command,
        "verdicts": verdicts,
        "witnesses": witnesses,
        "certification": certification,
        "note": note,
        "timing": {"seconds": round(time.perf_counter() - t0, 6)},
    }
    _emit(body, fmt, ok)


def _load_inputs(paths):
    loaded = []
    for path in paths:
        if path.startswith("corpus:"):
            fx = fixture_by_name(path[len("corpus:"):])
            loaded.append((fx.name, fx.payload))
            continue
        try:
            text = pathlib.Path(path).read_text()
        except OSError as err:
            raise SchemaError("{}: {}".format(path, err))
        loaded.append((path, load_document(text, where=path)))
    return loaded


def _only(loaded, types, what):
    picked = [(n, p) for n, p in loaded if isinstance(p, types)]
    if not picked:
        raise SchemaError("no {} input given".format(what))
    return picked


def _one(loaded, types, what):
    picked = _only(loaded, types, what)
    if len(picked) > 1:
        raise SchemaError("expected exactly one {} input".format(what))
    return picked[0]


def _budget_of(n):
    return None if n is None else CompletionBudget(n, 1_000_000)


def _weight_of(payload):
    """The Cat-valued weight a command should inspect."""
    return payload.phi_lambda if isinstance(payload, FWeight) else payload


# ----------------------------------------------------------------------------
# command bodies


def _problems_of(payload, loaded):
    if isinstance(payload, FinCat):
        return validate_category(payload)
    if isinstance(payload, TwoCat):
        return validate_two_cat(payload)
    if isinstance(payload, FCat):
        return validate_fcat(payload)
    if isinstance(payload, CatWeight):
        return payload.validate()
    if isinstance(payload, FWeight):
        return validate_fweight(payload)
    if isinstance(payload, FMonad):
        return payload.validate()
    if isinstance(payload, TwoMonad):
        bases = [
            p for _, p in loaded
            if isinstance(p, FCat) and payload.obj in set(p.base.objects)
        ]
        if not bases:
            raise SchemaError(
                "an object-style monad needs an fcat input containing its "
                "object to validate against")
        return payload.validate(bases[0].base)
    raise SchemaError("no validator for {}".format(type(payload).__name__))


def _replay_pie(phi, report):
    """Re-verify the initial-object witnesses by direct hom counting."""
    cat = category_of_elements(object_weight(phi)).cat
    lines = []
    for comp in report.components:
        for x in comp.initials:
            assert all(len(cat.hom(x, y)) == 1 for y in comp.objects), (
                "claimed initial object fails to re-verify")
        if not comp.has_initial:
            assert all(
                any(len(cat.hom(x, y)) != 1 for y in comp.objects)
                for x in comp.objects
            ), "a failing component has an initial object after all"
        lines.append(
            "component {} re-scanned: initial objects {}".format(
                list(comp.objects), list(comp.initials)))
    return lines


def _pie_body(loaded):
    verdicts, witnesses, certification = [], [], []
    ok = True
    for name, payload in _only(loaded, (CatWeight, FWeight), "weight"):
        phi = _weight_of(payload)
        report = is_pie(phi)
        if report:
            detail = "{} components, all with initial objects".format(
                len(report.components))
        else:
            detail = "no initial object in component {}".format(
                list(report.failing.objects))
            ok = False
        verdicts.append({
            "subject": name,
            "verdict": "PIE" if report else "not PIE",
            "detail": detail,
        })
        witnesses.append({
            "subject": name,
            "components": [
                {"objects": list(c.objects), "initials": list(c.initials)}
                for c in report.components
            ],
        })
        certification.extend(
            "{}: {}".format(name, line) for line in _replay_pie(phi, report))
    return ok, verdicts, witnesses, certification, None


def _rigged_body(loaded, kind, budget):
    verdicts, witnesses, certification = [], [], []
    ok = True
    for name, w in _only(loaded, FWeight, "fweight"):
        v = is_rigged(w, kind, budget)
        if v.status == "BudgetExceeded":
            raise BudgetExceeded(v.detail)
        if not v:
            ok = False
        verdicts.append({
            "subject": name,
            "verdict": v.status,
            "detail": v.detail,
        })
        if v.structure is not None:
            witnesses.append({
                "subject": name,
                "section": {
                    d: dict(v.structure.s.comp1[d].ob)
                    for d in w.shape.base.objects
                },
            })
            assert f_coalgebra_check(w, v.structure)
            certification.append(
                "{}: coalgebra structure re-checked against the tight part"
                .format(name))
        if v.comparison is not None:
            witnesses.append({
                "subject": name,
                "comparison": dict(v.comparison.per_object),
            })
    return ok, verdicts, witnesses, certification, None


def _tightly_rigged_body(loaded, budget):
    verdicts, witnesses, certification = [], [], []
    ok = True
    for name, w in _only(loaded, FWeight, "fweight"):
        report = phi_bar_objects(w)
        value = report.bijective
        if value:
            v = is_rigged(w, "p", budget)
            if v.status == "BudgetExceeded":
                raise BudgetExceeded(v.detail)
            assert v.status == "Rigged", (
                "bijective comparison must produce a rigged structure")
            certification.append(
                "{}: p-flavor structure exhibited and re-checked".format(name))
        else:
            ok = False
        verdicts.append({
            "subject": name,
            "verdict": "tightly rigged" if value else "not tightly rigged",
            "detail": "comparison is {}".format(
                "bijective" if report.bijective else "not bijective"),
        })
        witnesses.append({
            "subject": name,
            "comparison": dict(report.per_object),
        })
    return ok, verdicts, witnesses, certification, None


def _iso_pair_report(cat):
    """Whether the nonidentity morphisms form mutually inverse pairs."""
    nonid = [m for m in cat.morphisms if not cat.is_identity(m)]
    paired = all(is_iso_mor(cat, m) for m in nonid)
    return {
        "objects": len(cat.objects),
        "morphisms": len(cat.morphisms),
        "nonidentity": len(nonid),
        "iso_pairs": paired,
    }


def _classifier_body(loaded, kind, budget, probes):
    name, payload = _one(loaded, (CatWeight, FWeight), "weight")
    if isinstance(payload, FWeight):
        shape, phi = payload.shape, payload.phi_lambda
    else:
        shape, phi = inchordate(payload.base), payload
    if probes is not None:
        for p in probes:
            if p.base.key() != shape.base.key():
                raise SchemaError("probe weight lives over a different base")
    try:
        rc = build_relative_classifier(
            shape, phi, classifier_kind(kind), budget=budget, probes=probes)
    except ProbeBijectionFailure as err:
        return (
            False,
            [{"subject": name, "verdict": "probe refuted", "detail": str(err)}],
            [], [], None,
        )
    structures = find_coalgebras(rc)
    verdicts = [{
        "subject": name,
        "verdict": "classifier built",
        "detail": "{} coalgebra structures".format(len(structures)),
    }]
    witnesses = [{
        "subject": name,
        "values": {
            d: _iso_pair_report(rc.q_phi.at[d]) for d in sorted(shape.base.objects)
        },
        "structures": [
            {d: dict(s.s.comp1[d].ob) for d in shape.base.objects}
            for s in structures
        ],
    }]
    assert is_identity_transformation(vcompose_wnat(rc.q, rc.p))
    certification = ["{}: counit splits the unit, re-verified".format(name)]
    for s in structures:
        nu = vcompose_wnat(rc.q, s.s)
        assert is_identity_transformation(nu)
    if structures:
        certification.append(
            "{}: every structure re-verified as a section of the counit"
            .format(name))
    return True, verdicts, witnesses, certification, None


def _canonical_rigging_body(loaded, kind, budget):
    name, w = _one(loaded, FWeight, "fweight")
    v = is_rigged(w, kind, budget)
    if v.status == "BudgetExceeded":
        raise BudgetExceeded(v.detail)
    if v.structure is None:
        return (
            False,
            [{"subject": name, "verdict": v.status, "detail": v.detail}],
            [], [], None,
        )
    try:
        canon = canonical_rigging(
            w.shape, w.phi_lambda, v.structure, kind, alternatives=(w,))
    except AdjunctionDataMissing as err:
        return (
            False,
            [{
                "subject": name,
                "verdict": "no comparison cell",
                "detail": str(err),
            }],
            [], [], None,
        )
    identifier = {
        d: list(canon.phi_tau.at[d].objects) for d in sorted(w.shape.base.objects)
    }
    verdicts = [{
        "subject": name,
        "verdict": "canonical rigging built",
        "detail": "riggedness verdict {}".format(v.status),
    }]
    witnesses = [{"subject": name, "tight_objects": identifier}]
    assert validate_fweight(canon) == []
    certification = [
        "{}: canonical rigging re-validated as a weight".format(name),
        "{}: the input tight part embeds into the canonical one".format(name),
    ]
    return True, verdicts, witnesses, certification, None


def _diagram_label(g):
    return "ob=" + json.dumps(_sorted_map(g.ob))


def _limit_body(loaded):
    wname, w = _one(loaded, FWeight, "fweight")
    tname, target = _one(loaded, FCat, "fcat")
    verdicts, witnesses, certification = [], [], []
    ok = True
    diagrams = enumerate_diagrams(w.shape, target)
    for g in diagrams:
        subject = "{} into {} at {}".format(wname, tname, _diagram_label(g))
        found = find_f_limit(w, g)
        if found is None:
            ok = False
            verdicts.append({
                "subject": subject,
                "verdict": "no limit",
                "detail": "",
            })
            continue
        apex, cone = found
        verdicts.append({
            "subject": subject,
            "verdict": "limit found",
            "detail": "apex {}".format(apex),
        })
        witnesses.append({"subject": subject, "apex": apex})
        assert check_f_limit(w, g, cone).ok
        certification.append(
            "{}: winning cone re-checked against every candidate".format(subject))
    note = None
    if not diagrams:
        note = "the shape admits no diagrams in this target"
    return ok, verdicts, witnesses, certification, note


def _lift_body(loaded, kind):
    wname, w = _one(loaded, FWeight, "fweight")
    mname, m = _one(loaded, FMonad, "enriched monad")
    world = build_t_alg_w(m, kind)
    verdicts, witnesses, certification = [], [], []
    ok = True
    for g in enumerate_diagrams(w.shape, world.fcat):
        subject = "{} over {} at {}".format(wname, mname, _diagram_label(g))
        v = lift_check(m, kind, w, g, built=world)
        detail = ""
        if v.created:
            detail = "action {}".format(v.action)
        elif v.probe is not None:
            detail = "base verdict {}".format(v.probe.status)
        verdicts.append({
            "subject": subject,
            "verdict": v.status,
            "detail": detail,
        })
        if v.created:
            assert check_f_limit(w, g, v.cone).ok
            certification.append(
                "{}: lifted cone re-checked as the limit upstairs".format(subject))
        elif v.status != "NoBaseLimit":
            ok = False
            witnesses.append({
                "subject": subject,
                "status": v.status,
                "witnesses": [getattr(x, "name", str(x)) for x in v.witnesses],
            })
    return ok, verdicts, witnesses, certification, None


def _lift_survey_body(loaded, kind, budget):
    mname, m = _one(loaded, FMonad, "enriched monad")
    corpus = list(survey_zoo())
    for name, p in loaded:
        if isinstance(p, FWeight):
            corpus.append((name, p))
    survey = lift_survey(m, kind, corpus, budget=budget)
    verdicts, witnesses = [], []
    for row in survey.rows:
        tally = {}
        for v in row.verdicts:
            tally[v.status] = tally.get(v.status, 0) + 1
        verdicts.append({
            "subject": "{} over {}".format(row.weight, mname),
            "verdict": row.rigging,
            "detail": ", ".join(
                "{} x{}".format(s, n) for s, n in sorted(tally.items())),
        })
        if row.fatal:
            witnesses.append({
                "subject": row.weight,
                "statuses": sorted(tally),
            })
    certification = [
        "every Created verdict re-checked its cone inside lift_check"
    ]
    return not survey.fatal, verdicts, witnesses, certification, survey.note


def _em_body(loaded):
    fname, f = _one(loaded, FCat, "fcat")
    mname, monad = _one(loaded, TwoMonad, "object-style monad")
    if monad.obj not in set(f.base.objects):
        return (
            False,
            [{
                "subject": mname,
                "verdict": "invalid monad",
                "detail": "object {!r} is not in the base".format(monad.obj),
            }],
            [], [], None,
        )
    problems = monad.validate(f.base)
    if problems:
        return (
            False,
            [{
                "subject": mname,
                "verdict": "invalid monad",
                "detail": "; ".join(problems),
            }],
            [], [], None,
        )
    report = em_object_f(f, monad)
    if not report.exists:
        return (
            False,
            [{
                "subject": "{} in {}".format(mname, fname),
                "verdict": "no object of algebras",
                "detail": "",
            }],
            [], [], None,
        )
    res = report.result
    verdicts = [{
        "subject": "{} in {}".format(mname, fname),
        "verdict": "object of algebras found" if report.ok
        else "object of algebras fails tightness",
        "detail": "forgetful tight: {}, detects tightness: {}".format(
            report.forgetful_tight, report.detects_tightness),
    }]
    witnesses = [{
        "subject": mname,
        "object": res.obj,
        "forgetful": res.u,
        "action": res.action,
    }]
    certification = []
    if report.ok:
        assert f.is_tight(res.u)
        certification.append(
            "{}: forgetful 1-cell re-checked tight".format(mname))
    return report.ok, verdicts, witnesses, certification, None


# ----------------------------------------------------------------------------
# the golden corpus run


def _assert_valid(f, fixtures):
    loaded = [(x.name, x.payload) for x in fixtures]
    problems = _problems_of(f.payload, loaded)
    assert problems == [], problems


def _corpus_checks():
    """The golden suite: every frozen example, rebuilt and re-verified."""
    fixtures = corpus_fixtures()
    by_name = {f.name: f for f in fixtures}
    checks = []

    def roundtrip(f):
        first = canonical_json(save_payload(f.payload))
        again = canonical_json(save_payload(load_payload(json.loads(first))))
        assert first == again, "canonical form is not idempotent"

    for f in fixtures:
        checks.append((
            "{} validates".format(f.name),
            functools.partial(_assert_valid, f, fixtures),
        ))
        checks.append((
            "{} round-trips to byte-identical canonical form".format(f.name),
            functools.partial(roundtrip, f),
        ))

    def two_qcoalg():
        w = by_name["eg_two_qcoalg"].payload
        rc = build_relative_classifier(w.shape, w.phi_lambda, "pseudo")
        for d in ("a", "b"):
            info = _iso_pair_report(rc.q_phi.at[d])
            assert info["objects"] == 2 and info["nonidentity"] == 2
            assert info["iso_pairs"]
        structures = find_coalgebras(rc)
        assert len(structures) == 2
        seen = set()
        for s in structures:
            canon = canonical_rigging(w.shape, w.phi_lambda, s, "p")
            seen.add(tuple(
                canon.phi_tau.at[d].objects for d in ("a", "b")))
        assert seen == {(("*",), ()), ((), ("*",))}
        for k in ("p", "l", "c"):
            assert is_rigged(w, k)

    checks.append((
        "eg_two_qcoalg: values are iso pairs (2, 2), two structures, "
        "swapped canonical riggings, rigged in every flavor",
        two_qcoalg,
    ))

    def not_rigged():
        w = by_name["eg_not_rigged"].payload
        assert is_rigged(w, "p").status == "NotSurjective"

    checks.append((
        "eg_not_rigged: no tight part reaches every loose object",
        not_rigged,
    ))

    def splitting():
        w = by_name["eg_idempotent_splitting"].payload
        report = is_pie(w.phi_lambda)
        assert not report and report.failing is not None
        assert is_tightly_rigged(w)

    checks.append((
        "eg_idempotent_splitting: not PIE, yet tightly rigged",
        splitting,
    ))

    def product_pie():
        assert is_pie(by_name["eg_product_weight"].payload)

    checks.append(("eg_product_weight: PIE", product_pie))

    def power_lifts():
        m = by_name["eg_action_monad"].payload
        world = build_t_alg_w(m, "p")
        wt = by_name["eg_power_tight"].payload
        wl = by_name["eg_power_loose"].payload

        def at_carrier(w, carrier):
            return next(
                g for g in enumerate_diagrams(w.shape, world.fcat)
                if g.ob["*"].startswith(carrier + "|")
            )

        v = lift_check(m, "p", wt, at_carrier(wt, "b"), built=world)
        assert v.created and v.action == "1_b"
        v = lift_check(m, "p", wl, at_carrier(wl, "b"), built=world)
        assert v.status == "NoBaseLimit"
        assert v.probe is not None and v.probe.status == "LooseLimitOnly"
        inner = v.probe.witness
        assert inner.status == "DoesNotDetectTightness"
        assert inner.detail == ("e",)
        v = lift_check(m, "p", wl, at_carrier(wl, "z"), built=world)
        assert v.created

    checks.append((
        "power weights over the action monad: tight point created, loose "
        "point blocked with the non-detecting cell as witness, spectator "
        "created",
        power_lifts,
    ))

    def round_up():
        base = by_name["eg_round_up_base"].payload
        monad = by_name["eg_round_up_monad"].payload
        report = em_object_f(base, monad)
        assert report.ok and report.result.obj == "F"
        loose = em_object_f(inchordate(base.base), monad)
        assert loose.exists and not loose.forgetful_tight

    checks.append((
        "eg_round_up_monad: object of algebras found with tight forgetful "
        "1-cell, which stops being tight over the inchordate base",
        round_up,
    ))

    return checks


def _corpus_body():
    verdicts, certification = [], []
    ok = True
    checks = _corpus_checks()
    for description, check in checks:
        try:
            check()
        except AssertionError as err:
            ok = False
            verdicts.append({
                "subject": description,
                "verdict": "FAIL",
                "detail": str(err),
            })
            continue
        certification.append(description)
    verdicts.insert(0, {
        "subject": "corpus",
        "verdict": "pass" if ok else "fail",
        "detail": "{} checks".format(len(checks)),
    })
    return ok, verdicts, [], certification, None


# ----------------------------------------------------------------------------
# the command line


def _common(fn):
    fn = click.option(
        "--seed", type=int, default=None,
        help="echoed into the report; every command is deterministic")(fn)
    fn = click.option(
        "--report", "fmt", type=click.Choice(("json", "text")),
        default="text", show_default=True)(fn)
    fn = click.option(
        "--input", "inputs", multiple=True,
        help="a fixture file, or corpus:NAME for a builtin fixture")(fn)
    return fn


def _kind_option(fn):
    return click.option(
        "--kind", type=click.Choice(("p", "l", "c")), required=True)(fn)


def _budget_option(fn):
    return click.option(
        "--budget", type=int, default=None,
        help="cap on morphisms per presented category")(fn)


@click.group()
def main():
    """Decision procedures for weights with a tight part."""


@main.command()
@_common
def validate(inputs, fmt, seed):
    """Check the laws of every input payload."""

    def build():
        loaded = _load_inputs(inputs)
        if not loaded:
            raise SchemaError("no inputs given")
        verdicts = []
        ok = True
        for name, payload in loaded:
            problems = _problems_of(payload, loaded)
            if problems:
                ok = False
            verdicts.append({
                "subject": name,
                "verdict": "valid" if not problems else "invalid",
                "detail": "; ".join(problems),
            })
        return ok, verdicts, [], [], None

    _run("validate", fmt, build, inputs=list(inputs), seed=seed)


@main.command("check-pie")
@_common
def check_pie(inputs, fmt, seed):
    """Decide the elements characterization for each input weight."""
    _run(
        "check-pie", fmt,
        lambda: _pie_body(_load_inputs(inputs)),
        inputs=list(inputs), seed=seed,
    )


@main.command("check-rigged")
@_common
@_kind_option
@_budget_option
def check_rigged(inputs, fmt, seed, kind, budget):
    """Decide flavor-k riggedness for each input weight."""
    _run(
        "check-rigged", fmt,
        lambda: _rigged_body(_load_inputs(inputs), kind, _budget_of(budget)),
        inputs=list(inputs), seed=seed, kind=kind, budget=budget,
    )


@main.command("check-tightly-rigged")
@_common
@_budget_option
def check_tightly_rigged(inputs, fmt, seed, budget):
    """Check bijectivity of the comparison for each input weight."""
    _run(
        "check-tightly-rigged", fmt,
        lambda: _tightly_rigged_body(_load_inputs(inputs), _budget_of(budget)),
        inputs=list(inputs), seed=seed, budget=budget,
    )


@main.command()
@_common
@_kind_option
@_budget_option
@click.option("--probes", type=click.Path(), default=None,
              help="a probe_set document replacing the stock probes")
def classifier(inputs, fmt, seed, kind, budget, probes):
    """Build and certify the classifying weight of one input."""

    def build():
        probe_weights = None
        if probes is not None:
            try:
                text = pathlib.Path(probes).read_text()
            except OSError as err:
                raise SchemaError("{}: {}".format(probes, err))
            probe_weights = load_probe_set(text, where=probes)
        return _classifier_body(
            _load_inputs(inputs), kind, _budget_of(budget), probe_weights)

    _run(
        "classifier", fmt, build,
        inputs=list(inputs), seed=seed, kind=kind, budget=budget, probes=probes,
    )


@main.command("canonical-rigging")
@_common
@_kind_option
@_budget_option
def canonical_rigging_cmd(inputs, fmt, seed, kind, budget):
    """Compute the greatest tight part of one input weight."""
    _run(
        "canonical-rigging", fmt,
        lambda: _canonical_rigging_body(
            _load_inputs(inputs), kind, _budget_of(budget)),
        inputs=list(inputs), seed=seed, kind=kind, budget=budget,
    )


@main.command()
@_common
def limit(inputs, fmt, seed):
    """Search for weighted limits of every diagram of the input shape."""
    _run(
        "limit", fmt,
        lambda: _limit_body(_load_inputs(inputs)),
        inputs=list(inputs), seed=seed,
    )


@main.command()
@_common
@_kind_option
def lift(inputs, fmt, seed, kind):
    """Check creation of the input weight's limits by the forgetful functor."""
    _run(
        "lift", fmt,
        lambda: _lift_body(_load_inputs(inputs), kind),
        inputs=list(inputs), seed=seed, kind=kind,
    )


@main.command("lift-survey")
@_common
@_kind_option
@_budget_option
def lift_survey_cmd(inputs, fmt, seed, kind, budget):
    """Cross-tabulate riggedness against creation over the weight zoo."""
    _run(
        "lift-survey", fmt,
        lambda: _lift_survey_body(_load_inputs(inputs), kind, _budget_of(budget)),
        inputs=list(inputs), seed=seed, kind=kind, budget=budget,
    )


@main.command("em-object")
@_common
def em_object_cmd(inputs, fmt, seed):
    """Search for an object of algebras with a tight forgetful 1-cell."""
    _run(
        "em-object", fmt,
        lambda: _em_body(_load_inputs(inputs)),
        inputs=list(inputs), seed=seed,
    )


@main.command()
@click.option("--report", "fmt", type=click.Choice(("json", "text")),
              default="text", show_default=True)
@click.option("--seed", type=int, default=None)
def corpus(fmt, seed):
    """Rebuild and re-verify every frozen corpus example."""
    _run("corpus", fmt, _corpus_body, seed=seed)


if __name__ == "__main__":
    main()
