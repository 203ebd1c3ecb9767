"""Categories enriched in full embeddings: a tight/loose distinction.

The enriching objects are pairs of finite categories joined by a functor
that is injective on objects and fully faithful, so a hom consists of a
category of loose morphisms with a distinguished full subcategory of
tight ones.  An enriched category is stored as its loose 2-category plus
a tightness predicate on 1-cells containing the identities and closed
under composition; the tight 2-category is derived as the locally full
sub-2-category on the tight 1-cells.  This makes the inclusion identity
on objects, faithful, and locally fully faithful by construction, and
keeps every invariant checkable by finite enumeration.

Transformations between enriched functors are weak on loose morphisms
(strict, pseudo, lax, or oplax) but always strictly natural on tight
ones; that combination is the notion of transformation used everywhere
downstream.
"""

import itertools

from .cat_core import (
    Fun,
    empty_cat,
    full_subcat,
    functor_category,
    inclusion_fun,
    subcat,
    terminal_cat,
)
from .two_cat import (
    KINDS,
    TwoCat,
    TwoFun,
    validate_two_cat,
    validate_two_fun,
    is_iso_mor,
)

__all__ = [
    "FObj",
    "FCat",
    "FFun",
    "FNat",
    "validate_fobj",
    "validate_fcat",
    "validate_ffun",
    "f_internal_hom",
    "chordate",
    "inchordate",
    "tau_two_cat",
    "f_one_tight",
    "f_one_loose",
    "identity_ffun",
    "compose_ffun",
]


# ----------------------------------------------------------------------------
# enriching objects


class FObj:
    """A full embedding of finite categories: the tight part inside the
    loose part."""

    def __init__(self, tau, lam, j):
        self.tau = tau
        self.lam = lam
        self.j = j

    def key(self):
        return (self.tau.key(), self.lam.key(), self.j.key())

    def __eq__(self, other):
        return isinstance(other, FObj) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


def validate_fobj(b):
    problems = []
    if b.j.dom != b.tau or b.j.cod != b.lam:
        return ["embedding does not run from the tight to the loose part"]
    problems.extend(b.j.validate())
    if problems:
        return problems
    images = [b.j.ob[x] for x in b.tau.objects]
    if len(set(images)) != len(images):
        problems.append("embedding is not injective on objects")
    for x in b.tau.objects:
        for y in b.tau.objects:
            mapped = [b.j.mor[m] for m in b.tau.hom(x, y)]
            target = b.lam.hom(b.j.ob[x], b.j.ob[y])
            if len(set(mapped)) != len(mapped):
                problems.append("embedding not faithful on hom({}, {})".format(x, y))
            elif set(mapped) != set(target):
                problems.append("embedding not full on hom({}, {})".format(x, y))
    return problems


def f_one_tight():
    """The unit: a point with its identity tight."""
    c = terminal_cat()
    return FObj(c, c, Fun(c, c, {"*": "*"}, {"1_*": "1_*"}))


def f_one_loose():
    """A point with nothing tight."""
    e, t = empty_cat(), terminal_cat()
    return FObj(e, t, Fun(e, t, {}, {}))


def f_internal_hom(b, c):
    """The hom of full embeddings, itself a full embedding.

    The loose part is the functor category between the loose parts.  A
    functor is a tight object when it restricts along the embeddings,
    and a transformation is tight when its components at embedded
    objects are embedded morphisms; the result is the category of pairs
    of functors forming a commuting square.
    """
    assert validate_fobj(b) == [], "invalid hom source"
    assert validate_fobj(c) == [], "invalid hom target"
    fc = functor_category(b.lam, c.lam)
    ob_image = {c.j.ob[x] for x in c.tau.objects}
    mor_image = {c.j.mor[m] for m in c.tau.morphisms}
    tight_obs = []
    for name in fc.cat.objects:
        f = fc.functor_of[name]
        if all(f.ob[b.j.ob[x]] in ob_image for x in b.tau.objects) and all(
            f.mor[b.j.mor[m]] in mor_image for m in b.tau.morphisms
        ):
            tight_obs.append(name)
    tight_mors = []
    for name in fc.cat.morphisms:
        if fc.cat.src[name] not in set(tight_obs):
            continue
        if fc.cat.tgt[name] not in set(tight_obs):
            continue
        t = fc.nat_of[name]
        if all(t.comp[b.j.ob[x]] in mor_image for x in b.tau.objects):
            tight_mors.append(name)
    tau = subcat(fc.cat, tight_obs, tight_mors)
    return FObj(tau, fc.cat, inclusion_fun(tau, fc.cat))


# ----------------------------------------------------------------------------
# enriched categories


class FCat:
    """A 2-category with a marked class of tight 1-cells."""

    def __init__(self, base, tight):
        self.base = base
        self.tight = frozenset(tight)

    def is_tight(self, f):
        return f in self.tight

    def tight_one_cells(self, a=None, b=None):
        return [f for f in self.base.one_cells(a, b) if f in self.tight]

    def key(self):
        return (self.base.key(), tuple(sorted(self.tight)))

    def __eq__(self, other):
        return isinstance(other, FCat) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "FCat({} objects, {} tight of {} 1-cells)".format(
            len(self.base.objects),
            len(self.tight),
            sum(1 for _ in self.base.one_cells()),
        )


def validate_fcat(f):
    problems = []
    problems.extend(validate_two_cat(f.base))
    if problems:
        return problems
    all_cells = set(f.base.one_cells())
    for t in f.tight:
        if t not in all_cells:
            problems.append("tight cell {} is not a 1-cell".format(t))
    if problems:
        return problems
    for a in f.base.objects:
        if f.base.id1[a] not in f.tight:
            problems.append("identity at {} is not tight".format(a))
    for g in f.tight:
        for h in f.tight:
            if f.base.tgt1(h) == f.base.src1(g):
                if f.base.hcomp1[(g, h)] not in f.tight:
                    problems.append(
                        "tight cells ({}, {}) compose to a loose cell".format(g, h)
                    )
    return problems


def chordate(k):
    """Mark every 1-cell tight."""
    return FCat(k, set(k.one_cells()))


def inchordate(k):
    """Mark only the identity 1-cells tight."""
    return FCat(k, {k.id1[a] for a in k.objects})


def tau_two_cat(f):
    """The tight part: the locally full sub-2-category on tight cells."""
    k = f.base
    hom = {}
    for (a, b), h in k.hom.items():
        keep = [x for x in h.objects if x in f.tight]
        hom[(a, b)] = full_subcat(h, keep)
    hcomp1 = {
        (g, x): v
        for (g, x), v in k.hcomp1.items()
        if g in f.tight and x in f.tight
    }
    kept_2 = set()
    for h in hom.values():
        kept_2.update(h.morphisms)
    hcomp2 = {
        (m, n): v
        for (m, n), v in k.hcomp2.items()
        if m in kept_2 and n in kept_2
    }
    t = TwoCat(k.objects, hom, dict(k.id1), hcomp1, hcomp2)
    problems = validate_two_cat(t)
    assert not problems, problems
    return t


# ----------------------------------------------------------------------------
# enriched functors


class FFun:
    """A 2-functor between the loose parts that preserves tightness."""

    def __init__(self, dom, cod, fun):
        self.dom = dom
        self.cod = cod
        self.fun = fun

    @property
    def ob(self):
        return self.fun.ob

    @property
    def on1(self):
        return self.fun.on1

    @property
    def on2(self):
        return self.fun.on2

    def key(self):
        return (self.dom.key(), self.cod.key(), self.fun.key())

    def __eq__(self, other):
        return isinstance(other, FFun) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


def validate_ffun(s):
    problems = []
    if s.fun.dom != s.dom.base:
        return ["underlying 2-functor has the wrong domain"]
    if s.fun.cod != s.cod.base:
        return ["underlying 2-functor has the wrong codomain"]
    problems.extend(validate_two_fun(s.fun))
    if problems:
        return problems
    for f in s.dom.tight:
        if s.fun.on1[f] not in s.cod.tight:
            problems.append("tight 1-cell {} maps to a loose cell".format(f))
    return problems


def identity_ffun(f):
    k = f.base
    fun = TwoFun(
        k,
        k,
        {a: a for a in k.objects},
        {x: x for x in k.one_cells()},
        {m: m for m in k.two_cells()},
    )
    return FFun(f, f, fun)


def compose_ffun(after, then):
    assert then.cod == after.dom
    fun = TwoFun(
        then.fun.dom,
        after.fun.cod,
        {a: after.ob[then.ob[a]] for a in then.fun.dom.objects},
        {x: after.on1[then.on1[x]] for x in then.fun.dom.one_cells()},
        {m: after.on2[then.on2[m]] for m in then.fun.dom.two_cells()},
    )
    return FFun(then.dom, after.cod, fun)


# ----------------------------------------------------------------------------
# enriched transformations


class FNat:
    """A transformation between enriched functors: weak on loose 1-cells
    of the shape, strictly natural on tight ones.

    comp1: object -> 1-cell of the target; comp2: 1-cell -> 2-cell, with
    the lax direction G(u) o s_a => s_b o S(u), oplax reversed.  The
    tight flag records that every 1-cell component is tight.
    """

    def __init__(self, kind, dom, cod, comp1, comp2, tight=False):
        assert kind in KINDS
        self.kind = kind
        self.dom = dom
        self.cod = cod
        self.comp1 = dict(comp1)
        self.comp2 = dict(comp2)
        self.tight = tight

    def validate(self):
        S, G = self.dom, self.cod
        if S.dom != G.dom or S.cod != G.cod:
            return ["functors are not parallel"]
        shape = S.dom
        k = S.cod.base
        problems = []
        for d in shape.base.objects:
            x = self.comp1.get(d)
            h = k.hom[(S.ob[d], G.ob[d])]
            if x not in set(h.objects):
                problems.append("bad 1-cell component at {}".format(d))
            elif self.tight and not S.cod.is_tight(x):
                problems.append("component at {} is not tight".format(d))
        if problems:
            return problems
        for u in shape.base.one_cells():
            a, b = shape.base.src1(u), shape.base.tgt1(u)
            lax_src = k.comp1(G.on1[u], self.comp1[a])
            lax_tgt = k.comp1(self.comp1[b], S.on1[u])
            h = k.hom[(S.ob[a], G.ob[b])]
            t = self.comp2.get(u)
            if self.kind == "oplax":
                want_src, want_tgt = lax_tgt, lax_src
            else:
                want_src, want_tgt = lax_src, lax_tgt
            if t not in set(h.morphisms):
                problems.append("no 2-cell component at {}".format(u))
                continue
            if h.src[t] != want_src or h.tgt[t] != want_tgt:
                problems.append("2-cell component at {} has wrong boundary".format(u))
                continue
            if self.kind == "strict" and t != h.identity[want_src]:
                problems.append("strict transformation has nonidentity at {}".format(u))
            if self.kind == "pseudo" and not is_iso_mor(h, t):
                problems.append("pseudo component at {} is not invertible".format(u))
            if shape.is_tight(u) and t != h.identity.get(want_src):
                problems.append(
                    "component at tight 1-cell {} is not an identity".format(u)
                )
        if problems:
            return problems
        for a in shape.base.objects:
            u = shape.base.id1[a]
            h = k.hom[(S.ob[a], G.ob[a])]
            if self.comp2[u] != h.identity[self.comp1[a]]:
                problems.append("unit axiom fails at {}".format(a))
        for a, b, c in itertools.product(shape.base.objects, repeat=3):
            for v in shape.base.hom[(b, c)].objects:
                for u in shape.base.hom[(a, b)].objects:
                    w = shape.base.comp1(v, u)
                    if self.comp2[w] != self._cocycle(v, u):
                        problems.append(
                            "composition axiom fails on ({}, {})".format(v, u)
                        )
        for m in shape.base.two_cells():
            u, v = shape.base.src2(m), shape.base.tgt2(m)
            a, b = shape.base.hom_of_2cell(m)
            left_whisker = k.comp2(G.on2[m], k.id2(self.comp1[a]))
            right_whisker = k.comp2(k.id2(self.comp1[b]), S.on2[m])
            if self.kind == "oplax":
                left = k.vcomp2(left_whisker, self.comp2[u])
                right = k.vcomp2(self.comp2[v], right_whisker)
            else:
                left = k.vcomp2(self.comp2[v], left_whisker)
                right = k.vcomp2(right_whisker, self.comp2[u])
            if left != right:
                problems.append("2-cell naturality fails at {}".format(m))
        return problems

    def _cocycle(self, v, u):
        S, G = self.dom, self.cod
        k = S.cod.base
        if self.kind == "oplax":
            return k.vcomp2(
                k.comp2(k.id2(G.on1[v]), self.comp2[u]),
                k.comp2(self.comp2[v], k.id2(S.on1[u])),
            )
        return k.vcomp2(
            k.comp2(self.comp2[v], k.id2(S.on1[u])),
            k.comp2(k.id2(G.on1[v]), self.comp2[u]),
        )

    def key(self):
        return (
            self.kind,
            self.tight,
            tuple(sorted(self.comp1.items())),
            tuple(sorted(self.comp2.items())),
        )

    def __eq__(self, other):
        return isinstance(other, FNat) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())
