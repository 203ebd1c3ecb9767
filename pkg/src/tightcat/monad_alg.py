"""Strict algebras for a monad on an enriched base, with weak morphisms.

A monad here is an endofunctor of a finite enriched base together with
a tight, strictly natural unit and multiplication, all given by tables.
Its strict algebras admit several flavors of morphism: a 1-cell between
carriers plus a comparison 2-cell relating the two ways around the
action square, pointing per the flavor and subject to two coherence
axioms.  Algebras, strict morphisms (tight) and flavored weak morphisms
(loose) assemble into a new enriched category over the base, and the
central question becomes: which weighted limits of algebras are created
by the forgetful functor?

The lift checker answers one instance at a time.  It computes the limit
downstairs, searches the apex for a compatible tight action, lifts the
cone, and reruns the full limit check upstairs; each failure mode is a
distinct verdict carrying its evidence.  The survey cross-tabulates the
verdicts with the riggedness classification of the weights; a rigged
weight whose existing base limit fails to lift is a fatal
inconsistency, while agreement is evidence rather than a proof.
"""

import itertools
from dataclasses import dataclass

from .cat_core import FinCat, arrow_cat, terminal_cat
from .two_cat import (
    TwoCat,
    TwoFun,
    em_object,
    enumerate_w_transformations,
    hom_weight,
    is_iso_mor,
    locally_discrete_two_cat,
    two_cat_of_cats,
    validate_two_cat,
)
from .f_core import (
    FCat,
    FFun,
    FNat,
    chordate,
    compose_ffun,
    identity_ffun,
    validate_fcat,
    validate_ffun,
)
from .weights import (
    FCone,
    UnsupportedKind,
    check_f_limit,
    find_f_limit,
    tight_projections,
)
from .riggedness import W_KINDS, is_rigged

__all__ = [
    "EmObjectFReport",
    "FMonad",
    "LIFT_STATUSES",
    "LiftSurvey",
    "LiftVerdict",
    "MORPHISM_FLAVORS",
    "SURVEY_NOTE",
    "SurveyRow",
    "TAlgCategory",
    "TAlgebra",
    "WTMorphism",
    "action_fixture_monad",
    "build_t_alg_w",
    "closure_fixture_monad",
    "comma_base",
    "em_object_f",
    "enumerate_diagrams",
    "fixture_monads",
    "identity_fixture_monad",
    "is_strict_morphism",
    "lift_check",
    "lift_survey",
    "t_algebras",
    "t_transformations",
    "w_t_morphisms",
]

MORPHISM_FLAVORS = {"p": "pseudo", "l": "lax", "c": "oplax"}

LIFT_STATUSES = (
    "Created",
    "NoBaseLimit",
    "StructureNotUnique",
    "UniversalPropertyFails",
)

SURVEY_NOTE = "survey agreement is evidence, not a proof"


def _flavor(k):
    if k not in W_KINDS:
        raise UnsupportedKind("no algebra morphisms of flavor {}".format(k))
    return MORPHISM_FLAVORS[k]


# ----------------------------------------------------------------------------
# monads and algebras


@dataclass(frozen=True)
class FMonad:
    """A monad on an enriched base: an endofunctor with a tight strict
    unit and multiplication, laws checked by exhaustion over objects."""

    base: FCat
    t: FFun
    eta: FNat
    mu: FNat

    def validate(self):
        f = self.base
        k = f.base
        if self.t.dom != f or self.t.cod != f:
            return ["not an endofunctor of the base"]
        problems = list(validate_ffun(self.t))
        if problems:
            return problems
        expected = (
            ("unit", self.eta, identity_ffun(f)),
            ("multiplication", self.mu, compose_ffun(self.t, self.t)),
        )
        for label, nat, dom in expected:
            if nat.kind != "strict":
                problems.append(label + " is not strict")
            if not nat.tight:
                problems.append(label + " is not tight")
            if nat.dom != dom or nat.cod != self.t:
                problems.append(label + " has the wrong boundary")
        if problems:
            return problems
        for label, nat, _ in expected:
            problems.extend(label + ": " + p for p in nat.validate())
        if problems:
            return problems
        for a in k.objects:
            ta = self.t.ob[a]
            mu_a = self.mu.comp1[a]
            if k.comp1(mu_a, self.t.on1[self.eta.comp1[a]]) != k.id1[ta]:
                problems.append("unit law (image side) fails at " + a)
            if k.comp1(mu_a, self.eta.comp1[ta]) != k.id1[ta]:
                problems.append("unit law (outer side) fails at " + a)
            if k.comp1(mu_a, self.t.on1[mu_a]) != k.comp1(mu_a, self.mu.comp1[ta]):
                problems.append("associativity fails at " + a)
        return problems


@dataclass(frozen=True)
class TAlgebra:
    """A strict algebra: a carrier with a tight action obeying the unit
    and associativity laws on the nose."""

    carrier: str
    action: str

    @property
    def name(self):
        return self.carrier + "|" + self.action


def t_algebras(m):
    """All strict algebras of the monad, in carrier order."""
    f, k, t = m.base, m.base.base, m.t
    out = []
    for a in k.objects:
        for act in k.hom[(t.ob[a], a)].objects:
            if not f.is_tight(act):
                continue
            if k.comp1(act, m.eta.comp1[a]) != k.id1[a]:
                continue
            if k.comp1(act, t.on1[act]) != k.comp1(act, m.mu.comp1[a]):
                continue
            out.append(TAlgebra(a, act))
    return tuple(out)


@dataclass(frozen=True)
class WTMorphism:
    """A weak morphism of algebras: a 1-cell f with a comparison 2-cell
    fbar between the two action composites.

    The lax flavor runs target-action-after-image to image-after-source-
    action, the oplax flavor reverses that, and the pseudo flavor keeps
    the lax direction with fbar invertible.  A strict morphism has equal
    composites and the identity comparison; it is valid in every flavor.
    """

    kind: str
    src: TAlgebra
    tgt: TAlgebra
    f: str
    fbar: str

    @property
    def name(self):
        return self.f + "|" + self.fbar


def _coherence_problems(m, w):
    k, t = m.base.base, m.t
    a, b = w.src.action, w.tgt.action
    problems = []
    if k.comp2(w.fbar, k.id2(m.eta.comp1[w.src.carrier])) != k.id2(w.f):
        problems.append("unit coherence fails")
    mult = k.comp2(w.fbar, k.id2(m.mu.comp1[w.src.carrier]))
    image = k.comp2(k.id2(b), t.on2[w.fbar])
    outer = k.comp2(w.fbar, k.id2(t.on1[a]))
    if MORPHISM_FLAVORS[w.kind] == "oplax":
        want = k.vcomp2(image, outer)
    else:
        want = k.vcomp2(outer, image)
    if mult != want:
        problems.append("multiplication coherence fails")
    return problems


def w_t_morphisms(m, k, src, tgt):
    """All flavor-k morphisms between two strict algebras."""
    flavor = _flavor(k)
    kk, t = m.base.base, m.t
    h = kk.hom[(t.ob[src.carrier], tgt.carrier)]
    out = []
    for f in kk.hom[(src.carrier, tgt.carrier)].objects:
        left = kk.comp1(tgt.action, t.on1[f])
        right = kk.comp1(f, src.action)
        cells = h.hom(right, left) if flavor == "oplax" else h.hom(left, right)
        for fbar in cells:
            if flavor == "pseudo" and not is_iso_mor(h, fbar):
                continue
            cand = WTMorphism(k, src, tgt, f, fbar)
            if not _coherence_problems(m, cand):
                out.append(cand)
    return tuple(out)


def is_strict_morphism(m, w):
    """Strict means the two action composites agree and the comparison
    is their identity."""
    k, t = m.base.base, m.t
    left = k.comp1(w.tgt.action, t.on1[w.f])
    right = k.comp1(w.f, w.src.action)
    return left == right and w.fbar == k.id2(left)


def _compose_morphisms(m, q, p):
    """Composite weak morphism: whisker each comparison past the other
    leg and stack, in the order dictated by the flavor."""
    assert p.tgt == q.src and p.kind == q.kind
    k, t = m.base.base, m.t
    f = k.comp1(q.f, p.f)
    inner = k.comp2(k.id2(q.f), p.fbar)
    outer = k.comp2(q.fbar, k.id2(t.on1[p.f]))
    if MORPHISM_FLAVORS[p.kind] == "oplax":
        fbar = k.vcomp2(outer, inner)
    else:
        fbar = k.vcomp2(inner, outer)
    return WTMorphism(p.kind, p.src, q.tgt, f, fbar)


def t_transformations(m, fm, gm):
    """Base 2-cells between the underlying cells of two parallel weak
    morphisms that commute with both comparisons."""
    assert fm.kind == gm.kind and fm.src == gm.src and fm.tgt == gm.tgt
    k = m.base.base
    h = k.hom[(fm.src.carrier, fm.tgt.carrier)]
    return tuple(
        alpha for alpha in h.hom(fm.f, gm.f) if _transformation_ok(m, fm, gm, alpha)
    )


def _transformation_ok(m, fm, gm, alpha):
    k, t = m.base.base, m.t
    a, b = fm.src.action, fm.tgt.action
    image = k.comp2(k.id2(b), t.on2[alpha])
    outer = k.comp2(alpha, k.id2(a))
    if MORPHISM_FLAVORS[fm.kind] == "oplax":
        return k.vcomp2(image, fm.fbar) == k.vcomp2(gm.fbar, outer)
    return k.vcomp2(gm.fbar, image) == k.vcomp2(outer, fm.fbar)


# ----------------------------------------------------------------------------
# the enriched category of algebras


@dataclass(frozen=True)
class TAlgCategory:
    """Algebras, their flavored weak morphisms and transformations as an
    enriched category, with the forgetful functor to the base.

    Tight 1-cells are the strict morphisms with a tight underlying cell;
    strict_pairs also records strict morphisms over loose cells.
    """

    monad: FMonad
    kind: str
    fcat: FCat
    forget: FFun
    algebra_of: dict
    morphism_of: dict
    strict_pairs: frozenset


def _mangle(alpha, p, q):
    return "{}[{}>{}]".format(alpha, p, q)


def build_t_alg_w(m, k):
    """Assemble the enriched category of strict algebras and flavor-k
    morphisms over the monad's base.

    Composites are computed downstairs and looked up by name, so every
    law upstairs is inherited; the lookups double as closure checks for
    the coherence axioms.
    """
    _flavor(k)
    base = m.base
    kk = base.base
    algebras = t_algebras(m)
    names = tuple(alg.name for alg in algebras)
    assert len(set(names)) == len(names), "algebra names collide"
    algebra_of = {alg.name: alg for alg in algebras}
    pairs = {}
    morphism_of = {}
    for s_alg in algebras:
        for t_alg in algebras:
            ms = w_t_morphisms(m, k, s_alg, t_alg)
            pairs[(s_alg.name, t_alg.name)] = ms
            for w in ms:
                assert w.name not in morphism_of, "morphism names collide"
                morphism_of[w.name] = w
    hom = {}
    underlying = {}
    for (an, bn), ms in pairs.items():
        trans = {}
        for fm in ms:
            for gm in ms:
                for alpha in t_transformations(m, fm, gm):
                    trans[(fm.name, gm.name, alpha)] = _mangle(alpha, fm.name, gm.name)
        morphisms = []
        src = {}
        tgt = {}
        for (fn, gn, alpha), mn in sorted(trans.items()):
            morphisms.append(mn)
            src[mn] = fn
            tgt[mn] = gn
            underlying[mn] = alpha
        identity = {}
        for fm in ms:
            mn = _mangle(kk.id2(fm.f), fm.name, fm.name)
            assert mn in src, "identity transformation missing"
            identity[fm.name] = mn
        table = {}
        for (fn, gn, alpha), mn in trans.items():
            for (gn2, hn, beta), mn2 in trans.items():
                if gn2 != gn:
                    continue
                comp = trans.get((fn, hn, kk.vcomp2(beta, alpha)))
                assert comp is not None, "vertical composite escapes the flavor"
                table[(mn2, mn)] = comp
        hom[(an, bn)] = FinCat(
            tuple(w.name for w in ms), tuple(morphisms), src, tgt, identity, table
        )
    id1 = {}
    for alg in algebras:
        u = kk.id1[alg.carrier]
        ident = WTMorphism(
            k, alg, alg, u, kk.id2(kk.comp1(alg.action, m.t.on1[u]))
        )
        assert ident.name in morphism_of, "identity morphism missing"
        id1[alg.name] = ident.name
    hcomp1 = {}
    hcomp2 = {}
    for (an, bn), ms in pairs.items():
        for (bn2, cn), ns in pairs.items():
            if bn2 != bn:
                continue
            for p in ms:
                for q in ns:
                    comp = _compose_morphisms(m, q, p)
                    assert morphism_of.get(comp.name) == comp, (
                        "composite escapes the flavor"
                    )
                    hcomp1[(q.name, p.name)] = comp.name
            h1, h2 = hom[(an, bn)], hom[(bn, cn)]
            for mn2 in h2.morphisms:
                for mn in h1.morphisms:
                    gamma = kk.comp2(underlying[mn2], underlying[mn])
                    sp = hcomp1[(h2.src[mn2], h1.src[mn])]
                    tp = hcomp1[(h2.tgt[mn2], h1.tgt[mn])]
                    name = _mangle(gamma, sp, tp)
                    assert name in set(hom[(an, cn)].morphisms), (
                        "horizontal composite escapes the flavor"
                    )
                    hcomp2[(mn2, mn)] = name
    two = TwoCat(names, hom, id1, hcomp1, hcomp2)
    problems = validate_two_cat(two)
    assert not problems, problems
    strict_pairs = frozenset(
        w.name for w in morphism_of.values() if is_strict_morphism(m, w)
    )
    tight = frozenset(
        name for name in strict_pairs if base.is_tight(morphism_of[name].f)
    )
    fcat = FCat(two, tight)
    problems = validate_fcat(fcat)
    assert not problems, problems
    forget = FFun(
        fcat,
        base,
        TwoFun(
            two,
            kk,
            {alg.name: alg.carrier for alg in algebras},
            {w.name: w.f for w in morphism_of.values()},
            dict(underlying),
        ),
    )
    problems = validate_ffun(forget)
    assert not problems, problems
    return TAlgCategory(m, k, fcat, forget, algebra_of, morphism_of, strict_pairs)


# ----------------------------------------------------------------------------
# creation of limits


@dataclass(frozen=True)
class LiftVerdict:
    """Outcome of one creation check.

    Created carries the action found on the base apex and the certified
    lifted cone.  The failures carry their evidence: the nearest failing
    base verdict, the rival actions, or the failing probe upstairs.
    """

    status: str
    action: str = None
    cone: object = None
    witnesses: tuple = ()
    probe: object = None
    detail: str = ""

    def __post_init__(self):
        assert self.status in LIFT_STATUSES

    @property
    def created(self):
        return self.status == "Created"


def lift_check(m, k, w, g, built=None):
    """Decide whether the forgetful functor creates the w-weighted limit
    of one diagram of algebras.

    The limit is computed downstairs; the apex must carry exactly one
    tight action compatible with the tight projections, and some lift of
    the cone must pass the full limit check upstairs.  Rival compatible
    actions are reported, not adjudicated.
    """
    world = built if built is not None else build_t_alg_w(m, k)
    assert world.kind == k, "world built for another flavor"
    assert g.dom == w.shape and g.cod == world.fcat, "diagram does not match"
    base_diag = compose_ffun(world.forget, g)
    found = find_f_limit(w, base_diag)
    if found is None:
        return LiftVerdict(
            "NoBaseLimit",
            probe=_nearest_base_verdict(w, base_diag),
            detail="no object of the base is the limit of the image diagram",
        )
    apex, base_cone = found
    actions = _apex_actions(m, w, g, world, apex, base_cone)
    if not actions:
        return LiftVerdict(
            "UniversalPropertyFails",
            detail="no tight action on the base apex fits the tight projections",
        )
    if len(actions) > 1:
        return LiftVerdict("StructureNotUnique", witnesses=tuple(actions))
    ell = actions[0]
    last = None
    for cone in _lifted_cones(world, w, g, TAlgebra(apex, ell).name, base_cone):
        verdict = check_f_limit(w, g, cone)
        if verdict.ok:
            return LiftVerdict("Created", action=ell, cone=cone)
        last = verdict
    if last is not None:
        return LiftVerdict("UniversalPropertyFails", probe=last)
    return LiftVerdict(
        "UniversalPropertyFails",
        detail="the base cone does not lift to weak morphisms",
    )


def _nearest_base_verdict(w, s):
    """The most informative failure downstairs: the first candidate that
    is a loose limit but fails the tight half, if any."""
    k = s.cod.base
    for apex in k.objects:
        target = hom_weight(k, apex, s.fun)
        for leg in enumerate_w_transformations(w.phi_lambda, target, "strict"):
            verdict = check_f_limit(w, s, FCone(apex, leg))
            if verdict.status == "LooseLimitOnly":
                return verdict
    return None


def _apex_actions(m, w, g, world, apex, base_cone):
    """Tight lawful actions on the base apex under which every tight
    projection of the base cone is a strict morphism."""
    f, k, t = m.base, m.base.base, m.t
    projs = sorted(tight_projections(w, base_cone).items())
    out = []
    for ell in k.hom[(t.ob[apex], apex)].objects:
        if not f.is_tight(ell):
            continue
        if k.comp1(ell, m.eta.comp1[apex]) != k.id1[apex]:
            continue
        if k.comp1(ell, t.on1[ell]) != k.comp1(ell, m.mu.comp1[apex]):
            continue
        if all(
            k.comp1(cell, ell)
            == k.comp1(world.algebra_of[g.ob[d]].action, t.on1[cell])
            for (d, x), cell in projs
        ):
            out.append(ell)
    return out


def _lifted_cones(world, w, g, apex_name, base_cone):
    """Strict cones upstairs at the lifted apex whose image under the
    forgetful functor is the given base cone."""
    target = hom_weight(world.fcat.base, apex_name, g.fun)
    u = world.forget
    for leg in enumerate_w_transformations(w.phi_lambda, target, "strict"):
        if _projects_to(u, leg, base_cone.leg):
            yield FCone(apex_name, leg)


def _projects_to(u, leg, base_leg):
    for d, fun in leg.comp1.items():
        base = base_leg.comp1[d]
        if any(u.on1[fun.ob[x]] != base.ob[x] for x in fun.ob):
            return False
        if any(u.on2[fun.mor[n]] != base.mor[n] for n in fun.mor):
            return False
    return True


# ----------------------------------------------------------------------------
# surveys


@dataclass(frozen=True)
class SurveyRow:
    """One weight's riggedness verdict against its creation verdicts."""

    weight: str
    rigging: str
    verdicts: tuple

    @property
    def fatal(self):
        return self.rigging == "Rigged" and any(
            v.status not in ("Created", "NoBaseLimit") for v in self.verdicts
        )


@dataclass(frozen=True)
class LiftSurvey:
    """Creation verdicts for a corpus of weights over one monad."""

    kind: str
    rows: tuple
    note: str = SURVEY_NOTE

    @property
    def fatal(self):
        return any(r.fatal for r in self.rows)


def lift_survey(m, k, corpus, budget=None, built=None):
    """Cross-check riggedness against creation over every diagram of
    each weight's shape.

    A rigged weight whose base limit exists but is not created is fatal.
    The reverse direction is not: creation of one diagram's limit says
    nothing about the weight.  Agreement is evidence, not a proof.
    """
    world = built if built is not None else build_t_alg_w(m, k)
    rows = []
    for name, w in corpus:
        rig = is_rigged(w, k, budget=budget)
        verdicts = tuple(
            lift_check(m, k, w, g, built=world)
            for g in enumerate_diagrams(w.shape, world.fcat)
        )
        rows.append(SurveyRow(name, rig.status, verdicts))
    return LiftSurvey(k, tuple(rows))


def enumerate_diagrams(shape, target):
    """All enriched functors from a finite shape to a finite target:
    backtracking over generators, full law check at the end."""
    ks, kt = shape.base, target.base
    out = []
    for choice in itertools.product(kt.objects, repeat=len(ks.objects)):
        ob = dict(zip(ks.objects, choice))
        for on1 in _one_cell_assignments(shape, target, ob):
            for on2 in _two_cell_assignments(ks, kt, ob, on1):
                cand = FFun(shape, target, TwoFun(ks, kt, ob, on1, on2))
                if not validate_ffun(cand):
                    out.append(cand)
    return tuple(out)


def _one_cell_assignments(shape, target, ob):
    ks, kt = shape.base, target.base
    cells = [u for u in ks.one_cells() if u != ks.id1[ks.src1(u)]]
    fixed = {ks.id1[a]: kt.id1[ob[a]] for a in ks.objects}

    def consistent(on1, u):
        for v in on1:
            if ks.tgt1(u) == ks.src1(v):
                w = ks.comp1(v, u)
                if w in on1 and on1[w] != kt.comp1(on1[v], on1[u]):
                    return False
            if ks.tgt1(v) == ks.src1(u):
                w = ks.comp1(u, v)
                if w in on1 and on1[w] != kt.comp1(on1[u], on1[v]):
                    return False
        return True

    def extend(i, on1):
        if i == len(cells):
            yield dict(on1)
            return
        u = cells[i]
        for img in kt.hom[(ob[ks.src1(u)], ob[ks.tgt1(u)])].objects:
            if shape.is_tight(u) and not target.is_tight(img):
                continue
            on1[u] = img
            if consistent(on1, u):
                yield from extend(i + 1, on1)
            del on1[u]

    yield from extend(0, dict(fixed))


def _two_cell_assignments(ks, kt, ob, on1):
    forced = {}
    free = []
    for mn in ks.two_cells():
        if mn == ks.id2(ks.src2(mn)):
            forced[mn] = kt.id2(on1[ks.src2(mn)])
        else:
            free.append(mn)
    options = []
    for mn in free:
        a, b = ks.hom_of_2cell(mn)
        options.append(tuple(kt.hom[(ob[a], ob[b])].hom(on1[ks.src2(mn)], on1[ks.tgt2(mn)])))
    for combo in itertools.product(*options):
        on2 = dict(forced)
        on2.update(zip(free, combo))
        yield on2


# ----------------------------------------------------------------------------
# the object of algebras inside a base


@dataclass(frozen=True)
class EmObjectFReport:
    """Whether a loose-part monad has its object of algebras, and how
    that object sits against the tight structure."""

    exists: bool
    result: object = None
    forgetful_tight: bool = None
    detects_tightness: bool = None

    @property
    def ok(self):
        return bool(self.exists and self.forgetful_tight and self.detects_tightness)


def em_object_f(f, monad):
    """Search the loose 2-category for the object of algebras of a
    monad on an object, then check its forgetful 1-cell is tight and
    detects tightness."""
    res = em_object(f.base, monad)
    if res is None:
        return EmObjectFReport(False)
    k = f.base
    detects = all(
        f.is_tight(h)
        for h in k.one_cells(None, res.obj)
        if f.is_tight(k.comp1(res.u, h))
    )
    return EmObjectFReport(True, res, f.is_tight(res.u), detects)


# ----------------------------------------------------------------------------
# fixture monads


def _strict_tight_fnat(dom, cod, comp1):
    k = cod.cod.base
    shape = dom.dom.base
    comp2 = {}
    for u in shape.one_cells():
        comp2[u] = k.id2(k.comp1(cod.on1[u], comp1[shape.src1(u)]))
    return FNat("strict", dom, cod, comp1, comp2, tight=True)


def comma_base():
    """The chordate base of three small categories used by the limit
    fixtures: a point and two walking arrows."""
    toc = two_cat_of_cats(
        {"A": terminal_cat(), "B": arrow_cat(), "L": arrow_cat()}
    )
    return chordate(toc.two_cat), toc


def identity_fixture_monad(f=None):
    """The identity monad; its algebras reproduce the base on the nose,
    in every flavor."""
    if f is None:
        f = comma_base()[0]
    t = identity_ffun(f)
    k = f.base
    eta = _strict_tight_fnat(t, t, {a: k.id1[a] for a in k.objects})
    mu = _strict_tight_fnat(compose_ffun(t, t), t, dict(eta.comp1))
    m = FMonad(f, t, eta, mu)
    problems = m.validate()
    assert not problems, problems
    return m


def _poset_cat(objects, leq):
    """A thin category with one morphism le_i_j per related pair; the
    relation must be reflexive and transitively closed."""
    names = {(i, j): "le_{}_{}".format(i, j) for i, j in leq}
    src = {n: i for (i, j), n in names.items()}
    tgt = {n: j for (i, j), n in names.items()}
    table = {}
    for (j, l), g in names.items():
        for (i, j2), f in names.items():
            if j2 == j:
                table[(g, f)] = names[(i, l)]
    return FinCat(
        tuple(objects),
        tuple(names[p] for p in sorted(names)),
        src,
        tgt,
        {i: names[(i, i)] for i in objects},
        table,
    )


def closure_fixture_monad():
    """Rounding up to the nearest closed point of a five-point poset,
    viewed as an idempotent monad on the chordate base."""
    objects = ("0", "1", "2", "3", "4")
    leq = [(i, i) for i in objects] + [
        ("0", "1"), ("0", "2"), ("0", "3"), ("0", "4"),
        ("1", "3"), ("1", "4"), ("2", "3"), ("2", "4"), ("3", "4"),
    ]
    up = {"0": "1", "1": "1", "2": "3", "3": "3", "4": "4"}
    cat = _poset_cat(objects, leq)
    k = locally_discrete_two_cat(cat)
    f = chordate(k)
    on1 = {
        n: "le_{}_{}".format(up[cat.src[n]], up[cat.tgt[n]]) for n in cat.morphisms
    }
    t = FFun(
        f,
        f,
        TwoFun(k, k, dict(up), on1, {k.id2(n): k.id2(on1[n]) for n in cat.morphisms}),
    )
    eta = _strict_tight_fnat(
        identity_ffun(f), t, {i: "le_{}_{}".format(i, up[i]) for i in objects}
    )
    mu = _strict_tight_fnat(compose_ffun(t, t), t, {i: k.id1[up[i]] for i in objects})
    m = FMonad(f, t, eta, mu)
    problems = m.validate()
    assert not problems, problems
    return m


def action_fixture_monad():
    """A two-element idempotent monoid acting loosely on one object,
    with a tight reflection from a second object and a spectator.

    The loose endocell e is the nonunit monoid element; the reflection j
    is the only nonidentity tight cell.  Algebras live on the monoid
    object and the spectator only, and the loose e survives as a strict
    but loose endomorphism of the algebra it acts on.
    """
    objects = ("b", "w", "z")
    morphisms = ("1_b", "e", "1_w", "j", "j1", "1_z")
    src = {"1_b": "b", "e": "b", "1_w": "w", "j": "w", "j1": "w", "1_z": "z"}
    tgt = {"1_b": "b", "e": "b", "1_w": "w", "j": "b", "j1": "b", "1_z": "z"}
    identity = {"b": "1_b", "w": "1_w", "z": "1_z"}
    table = {}
    for n in morphisms:
        table[(n, identity[src[n]])] = n
        table[(identity[tgt[n]], n)] = n
    table[("e", "e")] = "e"
    table[("e", "j")] = "j1"
    table[("e", "j1")] = "j1"
    cat = FinCat(objects, morphisms, src, tgt, identity, table)
    k = locally_discrete_two_cat(cat)
    f = FCat(k, ("1_b", "1_w", "1_z", "j"))
    problems = validate_fcat(f)
    assert not problems, problems
    ob = {"b": "b", "w": "b", "z": "z"}
    on1 = {"1_b": "1_b", "e": "e", "1_w": "1_b", "j": "1_b", "j1": "e", "1_z": "1_z"}
    t = FFun(
        f, f, TwoFun(k, k, ob, on1, {k.id2(n): k.id2(on1[n]) for n in morphisms})
    )
    eta = _strict_tight_fnat(
        identity_ffun(f), t, {"b": "1_b", "w": "j", "z": "1_z"}
    )
    mu = _strict_tight_fnat(
        compose_ffun(t, t), t, {a: k.id1[ob[a]] for a in objects}
    )
    m = FMonad(f, t, eta, mu)
    problems = m.validate()
    assert not problems, problems
    return m


def fixture_monads():
    """The named monads exercised by the creation surveys."""
    return (
        ("identity", identity_fixture_monad()),
        ("closure", closure_fixture_monad()),
        ("action", action_fixture_monad()),
    )
