"""Finite strict 2-categories and weak transformations, by exact tables.

A TwoCat stores a FinCat of 1-cells and 2-cells for each ordered pair of
objects, plus explicit horizontal composition tables on both levels.  All
axioms (associativity, units, interchange) are re-checked exhaustively by
validate_two_cat; nothing is derived from a presentation.

Transformations between Cat-valued weights come in four kinds: strict,
pseudo, lax, and oplax.  The direction convention is fixed once and for
all: a lax transformation s: F -> G carries, for each 1-cell u: a -> b of
the base, a 2-cell component G(u) o s_a => s_b o F(u); oplax reverses it,
pseudo is the lax direction with invertible components, and strict means
all components are identities.  The zoo fixtures downstream pin this
convention against known cone shapes.

Weighted limits in Cat are computed honestly: the limit of g weighted by
phi is the category of strict transformations phi -> g and modifications,
and universal properties elsewhere are checked by comparing hom-sets
against this construction probe by probe.
"""

import itertools
from dataclasses import dataclass

from .cat_core import (
    FinCat,
    Fun,
    NatTrans,
    compose_fun,
    discrete_cat,
    enumerate_functors,
    enumerate_nat_trans,
    functor_category,
    identity_fun,
    identity_nat,
    validate_category,
    vcompose_nat,
)

__all__ = [
    "TwoCat",
    "TwoFun",
    "WNat",
    "CatWeight",
    "Modification",
    "TwoMonad",
    "EmResult",
    "WeightedLimitCat",
    "LimitCheck",
    "DiagramMismatch",
    "KINDS",
    "kind_bar",
    "validate_two_cat",
    "validate_two_fun",
    "enumerate_w_transformations",
    "weighted_limit_cat",
    "check_limit_in_two_cat",
    "em_object",
    "em_category_at",
    "whisker_left",
    "whisker_right",
    "hcomp_nat",
    "is_iso_mor",
    "is_invertible_nat",
    "locally_discrete_two_cat",
    "suspension_two_cat",
    "two_cat_of_cats",
    "constant_weight",
    "representable_weight_2",
    "hom_weight",
    "power_weight",
    "identity_wnat",
    "vcompose_wnat",
    "enumerate_modifications",
]


KINDS = ("strict", "pseudo", "lax", "oplax")

_BAR = {"strict": "strict", "pseudo": "pseudo", "lax": "oplax", "oplax": "lax"}


def kind_bar(kind):
    """The mate kind: pseudo is self-dual, lax and oplax swap."""
    return _BAR[kind]


# ----------------------------------------------------------------------------
# Cat-level whiskering helpers


def whisker_left(g, t):
    """The natural transformation g o t, components g(t_x)."""
    assert t.src_fun.cod == g.dom
    return NatTrans(
        compose_fun(g, t.src_fun),
        compose_fun(g, t.tgt_fun),
        {x: g.mor[t.comp[x]] for x in t.src_fun.dom.objects},
    )


def whisker_right(t, f):
    """The natural transformation t o f, components t_(f x)."""
    assert f.cod == t.src_fun.dom
    return NatTrans(
        compose_fun(t.src_fun, f),
        compose_fun(t.tgt_fun, f),
        {x: t.comp[f.ob[x]] for x in f.dom.objects},
    )


def hcomp_nat(beta, alpha):
    """Horizontal composite of natural transformations in Cat."""
    return vcompose_nat(
        whisker_right(beta, alpha.tgt_fun),
        whisker_left(beta.src_fun, alpha),
    )


def is_iso_mor(c, m):
    a, b = c.src[m], c.tgt[m]
    return any(
        c.compose(n, m) == c.identity[a] and c.compose(m, n) == c.identity[b]
        for n in c.hom(b, a)
    )


def is_invertible_nat(t):
    d = t.src_fun.cod
    return all(is_iso_mor(d, t.comp[x]) for x in t.src_fun.dom.objects)


# ----------------------------------------------------------------------------
# 2-categories


class TwoCat:
    """A finite strict 2-category as explicit tables.

    objects: tuple of object names.
    hom: (a, b) -> FinCat whose objects are the 1-cells a -> b and whose
      morphisms are the 2-cells between them.  All 1-cell names and all
      2-cell names are globally unique across homs.
    id1: object -> identity 1-cell name.
    hcomp1: (g, f) -> 1-cell name, horizontal composition (g after f).
    hcomp2: (beta, alpha) -> 2-cell name, horizontal composition.
    """

    def __init__(self, objects, hom, id1, hcomp1, hcomp2):
        self.objects = tuple(objects)
        self.hom = dict(hom)
        self.id1 = dict(id1)
        self.hcomp1 = dict(hcomp1)
        self.hcomp2 = dict(hcomp2)
        self._pair_of_1 = {}
        self._pair_of_2 = {}
        for (a, b), h in self.hom.items():
            for f in h.objects:
                assert f not in self._pair_of_1, "duplicate 1-cell name " + f
                self._pair_of_1[f] = (a, b)
            for m in h.morphisms:
                assert m not in self._pair_of_2, "duplicate 2-cell name " + m
                self._pair_of_2[m] = (a, b)

    def hom_cat(self, a, b):
        return self.hom[(a, b)]

    def one_cells(self, a=None, b=None):
        for (x, y), h in sorted(self.hom.items()):
            if (a is None or x == a) and (b is None or y == b):
                yield from h.objects

    def two_cells(self):
        for _, h in sorted(self.hom.items()):
            yield from h.morphisms

    def src1(self, f):
        return self._pair_of_1[f][0]

    def tgt1(self, f):
        return self._pair_of_1[f][1]

    def hom_of_2cell(self, m):
        return self._pair_of_2[m]

    def src2(self, m):
        return self.hom[self._pair_of_2[m]].src[m]

    def tgt2(self, m):
        return self.hom[self._pair_of_2[m]].tgt[m]

    def id2(self, f):
        return self.hom[self._pair_of_1[f]].identity[f]

    def comp1(self, g, f):
        assert self.tgt1(f) == self.src1(g), (g, f)
        return self.hcomp1[(g, f)]

    def comp2(self, beta, alpha):
        return self.hcomp2[(beta, alpha)]

    def vcomp2(self, after, then):
        h = self.hom[self._pair_of_2[after]]
        return h.compose(after, then)

    def key(self):
        return (
            self.objects,
            tuple((p, self.hom[p].key()) for p in sorted(self.hom)),
            tuple(sorted(self.id1.items())),
            tuple(sorted(self.hcomp1.items())),
            tuple(sorted(self.hcomp2.items())),
        )

    def __eq__(self, other):
        return isinstance(other, TwoCat) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "TwoCat({} objects, {} 1-cells, {} 2-cells)".format(
            len(self.objects),
            len(self._pair_of_1),
            len(self._pair_of_2),
        )


def validate_two_cat(k):
    """Check all 2-category laws exhaustively; return violation messages."""
    problems = []
    pairs = set(itertools.product(k.objects, repeat=2))
    if set(k.hom) != pairs:
        return ["hom must be defined on exactly the ordered object pairs"]
    for p in sorted(pairs):
        for msg in validate_category(k.hom[p]):
            problems.append("hom{}: {}".format(p, msg))
    if problems:
        return problems
    for a in k.objects:
        if k.id1.get(a) not in set(k.hom[(a, a)].objects):
            problems.append("missing identity 1-cell at {}".format(a))
    if problems:
        return problems
    for a, b, c in itertools.product(k.objects, repeat=3):
        for g in k.hom[(b, c)].objects:
            for f in k.hom[(a, b)].objects:
                gf = k.hcomp1.get((g, f))
                if gf not in set(k.hom[(a, c)].objects):
                    problems.append("bad 1-cell composite ({}, {})".format(g, f))
        for beta in k.hom[(b, c)].morphisms:
            for alpha in k.hom[(a, b)].morphisms:
                m = k.hcomp2.get((beta, alpha))
                h = k.hom[(a, c)]
                if m not in set(h.morphisms):
                    problems.append("bad 2-cell composite ({}, {})".format(beta, alpha))
                    continue
                want_src = k.hcomp1.get((k.src2(beta), k.src2(alpha)))
                want_tgt = k.hcomp1.get((k.tgt2(beta), k.tgt2(alpha)))
                if h.src[m] != want_src or h.tgt[m] != want_tgt:
                    problems.append(
                        "2-cell composite ({}, {}) has wrong boundary".format(
                            beta, alpha
                        )
                    )
    if problems:
        return problems
    for a, b in sorted(pairs):
        for f in k.hom[(a, b)].objects:
            if k.hcomp1[(k.id1[b], f)] != f or k.hcomp1[(f, k.id1[a])] != f:
                problems.append("1-cell unit law fails at {}".format(f))
        for alpha in k.hom[(a, b)].morphisms:
            if (
                k.hcomp2[(k.id2(k.id1[b]), alpha)] != alpha
                or k.hcomp2[(alpha, k.id2(k.id1[a]))] != alpha
            ):
                problems.append("2-cell unit law fails at {}".format(alpha))
    for a, b, c, d in itertools.product(k.objects, repeat=4):
        for h in k.hom[(c, d)].objects:
            for g in k.hom[(b, c)].objects:
                for f in k.hom[(a, b)].objects:
                    if k.hcomp1[(h, k.hcomp1[(g, f)])] != k.hcomp1[(k.hcomp1[(h, g)], f)]:
                        problems.append(
                            "1-cell associativity fails on ({}, {}, {})".format(h, g, f)
                        )
        for hm in k.hom[(c, d)].morphisms:
            for gm in k.hom[(b, c)].morphisms:
                for fm in k.hom[(a, b)].morphisms:
                    if k.hcomp2[(hm, k.hcomp2[(gm, fm)])] != k.hcomp2[
                        (k.hcomp2[(hm, gm)], fm)
                    ]:
                        problems.append(
                            "2-cell associativity fails on ({}, {}, {})".format(
                                hm, gm, fm
                            )
                        )
    for a, b, c in itertools.product(k.objects, repeat=3):
        hab, hbc, hac = k.hom[(a, b)], k.hom[(b, c)], k.hom[(a, c)]
        for g in hbc.objects:
            for f in hab.objects:
                if k.hcomp2[(hbc.identity[g], hab.identity[f])] != hac.identity[
                    k.hcomp1[(g, f)]
                ]:
                    problems.append(
                        "horizontal composite of identities fails at ({}, {})".format(
                            g, f
                        )
                    )
        for beta in hbc.morphisms:
            for beta2 in hbc.morphisms:
                if hbc.tgt[beta] != hbc.src[beta2]:
                    continue
                for alpha in hab.morphisms:
                    for alpha2 in hab.morphisms:
                        if hab.tgt[alpha] != hab.src[alpha2]:
                            continue
                        left = k.hcomp2[
                            (hbc.compose(beta2, beta), hab.compose(alpha2, alpha))
                        ]
                        right = hac.compose(
                            k.hcomp2[(beta2, alpha2)], k.hcomp2[(beta, alpha)]
                        )
                        if left != right:
                            problems.append(
                                "interchange fails on ({}, {}, {}, {})".format(
                                    beta2, beta, alpha2, alpha
                                )
                            )
    return problems


def _checked_two_cat(k):
    problems = validate_two_cat(k)
    assert not problems, problems
    return k


def locally_discrete_two_cat(c):
    """View a FinCat as a 2-category with only identity 2-cells."""
    hom = {}
    for a in c.objects:
        for b in c.objects:
            hom[(a, b)] = discrete_cat(c.hom(a, b))
    hcomp1 = dict(c.table)
    hcomp2 = {}
    for (a, b), h in hom.items():
        for cc in c.objects:
            h2 = hom[(b, cc)]
            for g in h2.objects:
                for f in h.objects:
                    hcomp2[(h2.identity[g], h.identity[f])] = hom[
                        (a, cc)
                    ].identity[c.table[(g, f)]]
    k = TwoCat(c.objects, hom, dict(c.identity), hcomp1, hcomp2)
    return _checked_two_cat(k)


def suspension_two_cat(h, a="a", b="b"):
    """Two objects with hom(a, b) = h and only identities elsewhere."""
    ia, ib = "i_" + a, "i_" + b
    hom = {
        (a, a): discrete_cat((ia,)),
        (b, b): discrete_cat((ib,)),
        (a, b): h,
        (b, a): FinCat((), (), {}, {}, {}, {}),
    }
    id1 = {a: ia, b: ib}
    ia2 = hom[(a, a)].identity[ia]
    ib2 = hom[(b, b)].identity[ib]
    hcomp1 = {(ia, ia): ia, (ib, ib): ib}
    hcomp2 = {(ia2, ia2): ia2, (ib2, ib2): ib2}
    for f in h.objects:
        hcomp1[(ib, f)] = f
        hcomp1[(f, ia)] = f
    for m in h.morphisms:
        hcomp2[(ib2, m)] = m
        hcomp2[(m, ia2)] = m
    return _checked_two_cat(TwoCat((a, b), hom, id1, hcomp1, hcomp2))


class TwoCatOfCats:
    """A 2-category whose objects are given FinCats, with functor homs.

    two_cat: the TwoCat; fun_of maps 1-cell names to Fun values and
    nat_of maps 2-cell names to NatTrans values.
    """

    def __init__(self, two_cat, cat_of, fun_of, nat_of):
        self.two_cat = two_cat
        self.cat_of = cat_of
        self.fun_of = fun_of
        self.nat_of = nat_of


def two_cat_of_cats(cats):
    """Build the full sub-2-category of Cat on the given named FinCats.

    cats: dict object name -> FinCat.
    """
    names = tuple(sorted(cats))
    hom = {}
    fun_of = {}
    nat_of = {}
    fun_name = {}
    nat_name = {}
    for a in names:
        for b in names:
            fc = functor_category(cats[a], cats[b])
            pre = "{}>{}".format(a, b)
            ren_ob = {o: "{}:{}".format(pre, o) for o in fc.cat.objects}
            ren_mor = {m: "{}:{}".format(pre, m) for m in fc.cat.morphisms}
            hom[(a, b)] = FinCat(
                tuple(ren_ob[o] for o in fc.cat.objects),
                tuple(ren_mor[m] for m in fc.cat.morphisms),
                {ren_mor[m]: ren_ob[fc.cat.src[m]] for m in fc.cat.morphisms},
                {ren_mor[m]: ren_ob[fc.cat.tgt[m]] for m in fc.cat.morphisms},
                {ren_ob[o]: ren_mor[fc.cat.identity[o]] for o in fc.cat.objects},
                {
                    (ren_mor[g], ren_mor[f]): ren_mor[h]
                    for (g, f), h in fc.cat.table.items()
                },
            )
            for o in fc.cat.objects:
                fun_of[ren_ob[o]] = fc.functor_of[o]
                fun_name[(a, b, fc.functor_of[o].key())] = ren_ob[o]
            for m in fc.cat.morphisms:
                nat_of[ren_mor[m]] = fc.nat_of[m]
                nat_name[(a, b, fc.nat_of[m].key())] = ren_mor[m]
    id1 = {a: fun_name[(a, a, identity_fun(cats[a]).key())] for a in names}
    hcomp1 = {}
    hcomp2 = {}
    for a in names:
        for b in names:
            for c in names:
                for g in hom[(b, c)].objects:
                    for f in hom[(a, b)].objects:
                        comp = compose_fun(fun_of[g], fun_of[f])
                        hcomp1[(g, f)] = fun_name[(a, c, comp.key())]
                for beta in hom[(b, c)].morphisms:
                    for alpha in hom[(a, b)].morphisms:
                        comp = hcomp_nat(nat_of[beta], nat_of[alpha])
                        hcomp2[(beta, alpha)] = nat_name[(a, c, comp.key())]
    k = _checked_two_cat(TwoCat(names, hom, id1, hcomp1, hcomp2))
    return TwoCatOfCats(k, dict(cats), fun_of, nat_of)


# ----------------------------------------------------------------------------
# 2-functors


class TwoFun:
    """A strict 2-functor between TwoCats, as explicit maps."""

    def __init__(self, dom, cod, ob, on1, on2):
        self.dom = dom
        self.cod = cod
        self.ob = dict(ob)
        self.on1 = dict(on1)
        self.on2 = dict(on2)

    def key(self):
        return (
            tuple(sorted(self.ob.items())),
            tuple(sorted(self.on1.items())),
            tuple(sorted(self.on2.items())),
        )

    def __eq__(self, other):
        return isinstance(other, TwoFun) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


def validate_two_fun(t):
    problems = []
    k, l = t.dom, t.cod
    for a in k.objects:
        if t.ob.get(a) not in set(l.objects):
            problems.append("object {} maps outside the codomain".format(a))
    if problems:
        return problems
    for f in k.one_cells():
        a, b = k.src1(f), k.tgt1(f)
        tf = t.on1.get(f)
        if tf not in set(l.hom[(t.ob[a], t.ob[b])].objects):
            problems.append("1-cell {} maps outside hom".format(f))
    for m in k.two_cells():
        a, b = k.hom_of_2cell(m)
        h = l.hom[(t.ob[a], t.ob[b])]
        tm = t.on2.get(m)
        if tm not in set(h.morphisms):
            problems.append("2-cell {} maps outside hom".format(m))
        elif h.src[tm] != t.on1[k.src2(m)] or h.tgt[tm] != t.on1[k.tgt2(m)]:
            problems.append("2-cell {} boundary not preserved".format(m))
    if problems:
        return problems
    for a in k.objects:
        if t.on1[k.id1[a]] != l.id1[t.ob[a]]:
            problems.append("identity 1-cell at {} not preserved".format(a))
        if t.on2[k.id2(k.id1[a])] != l.id2(l.id1[t.ob[a]]):
            problems.append("identity 2-cell at {} not preserved".format(a))
    for f in k.one_cells():
        if t.on2[k.id2(f)] != l.id2(t.on1[f]):
            problems.append("identity 2-cell of {} not preserved".format(f))
    for a, b, c in itertools.product(k.objects, repeat=3):
        for g in k.hom[(b, c)].objects:
            for f in k.hom[(a, b)].objects:
                if t.on1[k.comp1(g, f)] != l.comp1(t.on1[g], t.on1[f]):
                    problems.append("1-cell composite ({}, {}) broken".format(g, f))
        for beta in k.hom[(b, c)].morphisms:
            for alpha in k.hom[(a, b)].morphisms:
                if t.on2[k.comp2(beta, alpha)] != l.comp2(t.on2[beta], t.on2[alpha]):
                    problems.append(
                        "2-cell composite ({}, {}) broken".format(beta, alpha)
                    )
    for a, b in itertools.product(k.objects, repeat=2):
        h = k.hom[(a, b)]
        for beta, alpha in h.composable_pairs():
            lh = l.hom[(t.ob[a], t.ob[b])]
            if t.on2[h.compose(beta, alpha)] != lh.compose(t.on2[beta], t.on2[alpha]):
                problems.append(
                    "vertical composite ({}, {}) broken".format(beta, alpha)
                )
    return problems


# ----------------------------------------------------------------------------
# Cat-valued weights


class CatWeight:
    """A strict 2-functor base -> Cat, with explicit values.

    at: object -> FinCat; on1: 1-cell -> Fun; on2: 2-cell -> NatTrans.
    """

    def __init__(self, base, at, on1, on2):
        self.base = base
        self.at = dict(at)
        self.on1 = dict(on1)
        self.on2 = dict(on2)

    def value(self, a):
        return self.at[a]

    def validate(self):
        problems = []
        k = self.base
        for a in k.objects:
            if a not in self.at:
                problems.append("no value at object {}".format(a))
                continue
            for msg in validate_category(self.at[a]):
                problems.append("value at {}: {}".format(a, msg))
        if problems:
            return problems
        for f in k.one_cells():
            fn = self.on1.get(f)
            if fn is None or fn.dom != self.at[k.src1(f)] or fn.cod != self.at[k.tgt1(f)]:
                problems.append("bad functor at 1-cell {}".format(f))
            elif fn.validate():
                problems.append("invalid functor at 1-cell {}".format(f))
        for m in k.two_cells():
            t = self.on2.get(m)
            if t is None:
                problems.append("no transformation at 2-cell {}".format(m))
                continue
            if (
                t.src_fun.key() != self.on1[k.src2(m)].key()
                or t.tgt_fun.key() != self.on1[k.tgt2(m)].key()
            ):
                problems.append("transformation at {} has wrong boundary".format(m))
            elif t.validate():
                problems.append("invalid transformation at 2-cell {}".format(m))
        if problems:
            return problems
        for a in k.objects:
            if self.on1[k.id1[a]].key() != identity_fun(self.at[a]).key():
                problems.append("identity 1-cell at {} not sent to identity".format(a))
        for f in k.one_cells():
            if self.on2[k.id2(f)].key() != identity_nat(self.on1[f]).key():
                problems.append("identity 2-cell at {} not sent to identity".format(f))
        for a, b, c in itertools.product(k.objects, repeat=3):
            for g in k.hom[(b, c)].objects:
                for f in k.hom[(a, b)].objects:
                    if (
                        self.on1[k.comp1(g, f)].key()
                        != compose_fun(self.on1[g], self.on1[f]).key()
                    ):
                        problems.append(
                            "functoriality fails on 1-cells ({}, {})".format(g, f)
                        )
            for beta in k.hom[(b, c)].morphisms:
                for alpha in k.hom[(a, b)].morphisms:
                    if (
                        self.on2[k.comp2(beta, alpha)].key()
                        != hcomp_nat(self.on2[beta], self.on2[alpha]).key()
                    ):
                        problems.append(
                            "functoriality fails on 2-cells ({}, {})".format(
                                beta, alpha
                            )
                        )
        for a, b in itertools.product(k.objects, repeat=2):
            h = k.hom[(a, b)]
            for beta, alpha in h.composable_pairs():
                if (
                    self.on2[h.compose(beta, alpha)].key()
                    != vcompose_nat(self.on2[beta], self.on2[alpha]).key()
                ):
                    problems.append(
                        "vertical functoriality fails on ({}, {})".format(beta, alpha)
                    )
        return problems

    def key(self):
        return (
            tuple((a, self.at[a].key()) for a in self.base.objects),
            tuple(sorted((f, fn.key()) for f, fn in self.on1.items())),
            tuple(sorted((m, t.key()) for m, t in self.on2.items())),
        )

    def __eq__(self, other):
        return isinstance(other, CatWeight) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


def constant_weight(base, c):
    """The weight constant at the category c."""
    return CatWeight(
        base,
        {a: c for a in base.objects},
        {f: identity_fun(c) for f in base.one_cells()},
        {m: identity_nat(identity_fun(c)) for m in base.two_cells()},
    )


def _postcompose_fun(k, u, a):
    """hom(a, src u) -> hom(a, tgt u) by composing with u on the left."""
    b, c = k.src1(u), k.tgt1(u)
    dom = k.hom[(a, b)]
    cod = k.hom[(a, c)]
    return Fun(
        dom,
        cod,
        {x: k.hcomp1[(u, x)] for x in dom.objects},
        {m: k.hcomp2[(k.id2(u), m)] for m in dom.morphisms},
    )


def representable_weight_2(k, d):
    """The Cat-valued weight hom(d, -) on a TwoCat."""
    at = {a: k.hom[(d, a)] for a in k.objects}
    on1 = {u: _postcompose_fun(k, u, d) for u in k.one_cells()}
    on2 = {}
    for m in k.two_cells():
        u, v = k.src2(m), k.tgt2(m)
        on2[m] = NatTrans(
            on1[u],
            on1[v],
            {x: k.hcomp2[(m, k.id2(x))] for x in at[k.src1(u)].objects},
        )
    w = CatWeight(k, at, on1, on2)
    assert w.validate() == []
    return w


def hom_weight(k, a, g):
    """The weight d |-> hom_k(a, g d) for a diagram g: base -> k."""
    base = g.dom
    at = {d: k.hom[(a, g.ob[d])] for d in base.objects}
    on1 = {}
    for u in base.one_cells():
        on1[u] = _postcompose_fun(k, g.on1[u], a)
    on2 = {}
    for m in base.two_cells():
        u, v = base.src2(m), base.tgt2(m)
        on2[m] = NatTrans(
            on1[u],
            on1[v],
            {x: k.hcomp2[(g.on2[m], k.id2(x))] for x in at[base.src1(u)].objects},
        )
    w = CatWeight(base, at, on1, on2)
    assert w.validate() == []
    return w


def _power_cat(x, c):
    """The functor category [x, c] with a registry, renamed for reuse."""
    return functor_category(x, c)


def power_weight(g, x):
    """The weight d |-> [x, g d], for a probe category x."""
    base = g.base
    fcs = {d: _power_cat(x, g.at[d]) for d in base.objects}
    at = {d: fcs[d].cat for d in base.objects}
    on1 = {}
    for u in base.one_cells():
        a, b = base.src1(u), base.tgt1(u)
        ob = {}
        mor = {}
        for name in at[a].objects:
            ob[name] = fcs[b].name_of(compose_fun(g.on1[u], fcs[a].functor_of[name]))
        for name in at[a].morphisms:
            t = whisker_left(g.on1[u], fcs[a].nat_of[name])
            mor[name] = _nat_name(fcs[b], t)
        on1[u] = Fun(at[a], at[b], ob, mor)
    on2 = {}
    for m in base.two_cells():
        u, v = base.src2(m), base.tgt2(m)
        a = base.src1(u)
        b = base.tgt1(u)
        comp = {}
        for name in at[a].objects:
            t = whisker_right(g.on2[m], fcs[a].functor_of[name])
            comp[name] = _nat_name(fcs[b], t)
        on2[m] = NatTrans(on1[u], on1[v], comp)
    w = CatWeight(base, at, on1, on2)
    assert w.validate() == []
    return w


def _nat_name(fc, t):
    for name, s in fc.nat_of.items():
        if s.key() == t.key():
            return name
    raise AssertionError("natural transformation not found in functor category")


# ----------------------------------------------------------------------------
# weak transformations


class WNat:
    """A kind-w transformation between Cat-valued weights.

    comp1: object -> Fun between the values.
    comp2: 1-cell u: a -> b -> NatTrans; for lax the direction is
    G(u) o s_a => s_b o F(u), for oplax the reverse, identity for strict.
    """

    def __init__(self, kind, dom, cod, comp1, comp2):
        assert kind in KINDS
        self.kind = kind
        self.dom = dom
        self.cod = cod
        self.comp1 = dict(comp1)
        self.comp2 = dict(comp2)

    def validate(self):
        f, g = self.dom, self.cod
        k = f.base
        problems = []
        if g.base is not k and g.base != k:
            return ["weights have different bases"]
        for a in k.objects:
            s = self.comp1.get(a)
            if s is None or s.dom != f.at[a] or s.cod != g.at[a]:
                problems.append("bad 1-cell component at {}".format(a))
            elif s.validate():
                problems.append("invalid 1-cell component at {}".format(a))
        if problems:
            return problems
        for u in k.one_cells():
            a, b = k.src1(u), k.tgt1(u)
            lax_src = compose_fun(g.on1[u], self.comp1[a])
            lax_tgt = compose_fun(self.comp1[b], f.on1[u])
            t = self.comp2.get(u)
            if t is None:
                problems.append("no 2-cell component at {}".format(u))
                continue
            if self.kind == "oplax":
                want_src, want_tgt = lax_tgt, lax_src
            else:
                want_src, want_tgt = lax_src, lax_tgt
            if t.src_fun.key() != want_src.key() or t.tgt_fun.key() != want_tgt.key():
                problems.append("2-cell component at {} has wrong boundary".format(u))
                continue
            if t.validate():
                problems.append("invalid 2-cell component at {}".format(u))
                continue
            if self.kind == "strict" and t.key() != identity_nat(want_src).key():
                problems.append("strict transformation has nonidentity at {}".format(u))
            if self.kind == "pseudo" and not is_invertible_nat(t):
                problems.append("pseudo component at {} is not invertible".format(u))
        if problems:
            return problems
        for a in k.objects:
            u = k.id1[a]
            if self.comp2[u].key() != identity_nat(self.comp1[a]).key():
                problems.append("unit axiom fails at {}".format(a))
        for a, b, c in itertools.product(k.objects, repeat=3):
            for v in k.hom[(b, c)].objects:
                for u in k.hom[(a, b)].objects:
                    w = k.comp1(v, u)
                    if self.comp2[w].key() != self._cocycle(v, u).key():
                        problems.append(
                            "composition axiom fails on ({}, {})".format(v, u)
                        )
        for m in k.two_cells():
            u, v = k.src2(m), k.tgt2(m)
            a, b = k.hom_of_2cell(m)
            if self.kind == "oplax":
                left = vcompose_nat(
                    whisker_right(self.cod.on2[m], self.comp1[a]), self.comp2[u]
                )
                right = vcompose_nat(
                    self.comp2[v], whisker_left(self.comp1[b], self.dom.on2[m])
                )
            else:
                left = vcompose_nat(
                    self.comp2[v],
                    whisker_right(self.cod.on2[m], self.comp1[a]),
                )
                right = vcompose_nat(
                    whisker_left(self.comp1[b], self.dom.on2[m]), self.comp2[u]
                )
            if left.key() != right.key():
                problems.append("2-cell naturality fails at {}".format(m))
        return problems

    def _cocycle(self, v, u):
        """The forced component at v o u, from the components at v and u."""
        f, g = self.dom, self.cod
        k = f.base
        if self.kind == "oplax":
            return vcompose_nat(
                whisker_left(g.on1[v], self.comp2[u]),
                whisker_right(self.comp2[v], f.on1[u]),
            )
        return vcompose_nat(
            whisker_right(self.comp2[v], f.on1[u]),
            whisker_left(g.on1[v], self.comp2[u]),
        )

    def key(self):
        k = self.dom.base
        return (
            self.kind,
            tuple((a, self.comp1[a].key()) for a in k.objects),
            tuple(sorted((u, t.key()) for u, t in self.comp2.items())),
        )

    def __eq__(self, other):
        return isinstance(other, WNat) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


def identity_wnat(f):
    """The identity strict transformation on a weight."""
    comp1 = {a: identity_fun(f.at[a]) for a in f.base.objects}
    comp2 = {u: identity_nat(f.on1[u]) for u in f.base.one_cells()}
    return WNat("strict", f, f, comp1, comp2)


def vcompose_wnat(after, then):
    """Composite of transformations; kinds must agree or one is strict."""
    assert after.dom.key() == then.cod.key()
    kind = then.kind if after.kind == "strict" else after.kind
    assert after.kind in ("strict", kind) and then.kind in ("strict", kind)
    f, h = then.dom, after.cod
    k = f.base
    comp1 = {
        a: compose_fun(after.comp1[a], then.comp1[a]) for a in k.objects
    }
    comp2 = {}
    for u in k.one_cells():
        a, b = k.src1(u), k.tgt1(u)
        if kind == "oplax":
            comp2[u] = vcompose_nat(
                whisker_right(after.comp2[u], then.comp1[a]),
                whisker_left(after.comp1[b], then.comp2[u]),
            )
        else:
            comp2[u] = vcompose_nat(
                whisker_left(after.comp1[b], then.comp2[u]),
                whisker_right(after.comp2[u], then.comp1[a]),
            )
    out = WNat(kind, f, h, comp1, comp2)
    assert out.validate() == []
    return out


def enumerate_w_transformations(f, g, kind, strict_on=()):
    """All kind-w transformations f -> g, by exhaustive search.

    strict_on: 1-cell names whose 2-cell component is required to be the
    identity (used for transformations that are strict on a marked class
    of 1-cells).
    """
    assert kind in KINDS
    k = f.base
    strict_on = set(strict_on)
    one_cells = list(k.one_cells())
    searched = [u for u in one_cells if u not in {k.id1[a] for a in k.objects}]

    def is_composite(u):
        ids = {k.id1[a] for a in k.objects}
        for (v, w), uu in k.hcomp1.items():
            if uu == u and v not in ids and w not in ids:
                return True
        return False

    searched.sort(key=lambda u: (is_composite(u), u))
    index = {u: i for i, u in enumerate(searched)}

    cocycle_checks = {i: [] for i in range(len(searched))}
    for (v, u), w in k.hcomp1.items():
        ids = {k.id1[a] for a in k.objects}
        if v in ids or u in ids:
            continue
        # w may be an identity even when v and u are not; its component
        # is prefilled, so the check closes once v and u are assigned.
        close = max(index[x] for x in (v, u, w) if x in index)
        cocycle_checks[close].append((v, u, w))
    nat_checks = {i: [] for i in range(len(searched))}
    identity_cell_nat_checks = []
    for m in k.two_cells():
        if m == k.id2(k.src2(m)):
            continue
        u, v = k.src2(m), k.tgt2(m)
        involved = [index[x] for x in (u, v) if x in index]
        if not involved:
            # Both endpoint 1-cells are identities, so the axiom only
            # constrains the 1-cell components; check it up front.
            identity_cell_nat_checks.append(m)
            continue
        nat_checks[max(involved)].append(m)

    results = []
    comp1_choices = [
        enumerate_functors(f.at[a], g.at[a]) for a in k.objects
    ]
    for funs in itertools.product(*comp1_choices):
        comp1 = dict(zip(k.objects, funs))
        comp2 = {k.id1[a]: identity_nat(comp1[a]) for a in k.objects}
        ok = True
        for m in identity_cell_nat_checks:
            a, b = k.hom_of_2cell(m)
            left = whisker_right(g.on2[m], comp1[a])
            right = whisker_left(comp1[b], f.on2[m])
            if left.key() != right.key():
                ok = False
                break
        if not ok:
            continue

        def candidates(u):
            a, b = k.src1(u), k.tgt1(u)
            lax_src = compose_fun(g.on1[u], comp1[a])
            lax_tgt = compose_fun(comp1[b], f.on1[u])
            if kind == "oplax":
                lax_src, lax_tgt = lax_tgt, lax_src
            if kind == "strict" or u in strict_on:
                if lax_src.key() == lax_tgt.key():
                    return [identity_nat(lax_src)]
                return []
            opts = enumerate_nat_trans(lax_src, lax_tgt)
            if kind == "pseudo":
                opts = [t for t in opts if is_invertible_nat(t)]
            return opts

        cand = [candidates(u) for u in searched]
        if any(not cs for cs in cand):
            continue

        tmp = WNat(kind, f, g, comp1, comp2)

        def consistent(i):
            for v, u, w in cocycle_checks[i]:
                if tmp.comp2[w].key() != tmp._cocycle(v, u).key():
                    return False
            for m in nat_checks[i]:
                u, v = k.src2(m), k.tgt2(m)
                a, b = k.hom_of_2cell(m)
                if kind == "oplax":
                    left = vcompose_nat(
                        whisker_right(g.on2[m], comp1[a]), tmp.comp2[u]
                    )
                    right = vcompose_nat(
                        tmp.comp2[v], whisker_left(comp1[b], f.on2[m])
                    )
                else:
                    left = vcompose_nat(
                        tmp.comp2[v], whisker_right(g.on2[m], comp1[a])
                    )
                    right = vcompose_nat(
                        whisker_left(comp1[b], f.on2[m]), tmp.comp2[u]
                    )
                if left.key() != right.key():
                    return False
            return True

        def search(i):
            if i == len(searched):
                out = WNat(kind, f, g, dict(comp1), dict(tmp.comp2))
                assert out.validate() == []
                results.append(out)
                return
            for t in cand[i]:
                tmp.comp2[searched[i]] = t
                if consistent(i):
                    search(i + 1)
            tmp.comp2.pop(searched[i], None)

        search(0)
    results.sort(key=lambda t: t.key())
    return results


# ----------------------------------------------------------------------------
# modifications


class Modification:
    """A modification between parallel transformations.

    comp: object -> NatTrans between the 1-cell components.
    """

    def __init__(self, src, tgt, comp):
        self.src = src
        self.tgt = tgt
        self.comp = dict(comp)

    def validate(self):
        s, t = self.src, self.tgt
        problems = []
        if s.kind != t.kind or s.dom.key() != t.dom.key() or s.cod.key() != t.cod.key():
            return ["source and target transformations are not parallel"]
        k = s.dom.base
        for a in k.objects:
            m = self.comp.get(a)
            if (
                m is None
                or m.src_fun.key() != s.comp1[a].key()
                or m.tgt_fun.key() != t.comp1[a].key()
            ):
                problems.append("bad component at {}".format(a))
            elif m.validate():
                problems.append("invalid component at {}".format(a))
        if problems:
            return problems
        f, g = s.dom, s.cod
        for u in k.one_cells():
            a, b = k.src1(u), k.tgt1(u)
            if s.kind == "oplax":
                left = vcompose_nat(
                    whisker_left(g.on1[u], self.comp[a]), s.comp2[u]
                )
                right = vcompose_nat(
                    t.comp2[u], whisker_right(self.comp[b], f.on1[u])
                )
            else:
                left = vcompose_nat(
                    whisker_right(self.comp[b], f.on1[u]), s.comp2[u]
                )
                right = vcompose_nat(
                    t.comp2[u], whisker_left(g.on1[u], self.comp[a])
                )
            if left.key() != right.key():
                problems.append("modification axiom fails at {}".format(u))
        return problems

    def key(self):
        k = self.src.dom.base
        return (
            self.src.key(),
            self.tgt.key(),
            tuple((a, self.comp[a].key()) for a in k.objects),
        )

    def __eq__(self, other):
        return isinstance(other, Modification) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


def enumerate_modifications(s, t):
    """All modifications s -> t between parallel transformations."""
    k = s.dom.base
    obs = list(k.objects)
    cands = [enumerate_nat_trans(s.comp1[a], t.comp1[a]) for a in obs]
    out = []
    for comps in itertools.product(*cands):
        m = Modification(s, t, dict(zip(obs, comps)))
        if m.validate() == []:
            out.append(m)
    out.sort(key=lambda m: m.key())
    return out


# ----------------------------------------------------------------------------
# weighted limits in Cat


class WeightedLimitCat:
    """The limit of g weighted by phi, with its defining data.

    cat: objects are the strict transformations phi -> g, morphisms the
    modifications; trans_of and mod_of decode the names.
    """

    def __init__(self, cat, trans_of, mod_of):
        self.cat = cat
        self.trans_of = trans_of
        self.mod_of = mod_of

    def name_of_trans(self, t):
        for name, s in self.trans_of.items():
            if s.key() == t.key():
                return name
        return None

    def name_of_mod(self, m):
        want = tuple((a, m.comp[a].key()) for a in m.src.dom.base.objects)
        for name, s in self.mod_of.items():
            if (
                s.src.key() == m.src.key()
                and s.tgt.key() == m.tgt.key()
                and tuple((a, s.comp[a].key()) for a in s.src.dom.base.objects)
                == want
            ):
                return name
        return None


def weighted_limit_cat(phi, g):
    """The Cat-valued weighted limit, built by enumeration."""
    assert phi.base is g.base or phi.base == g.base
    trans = enumerate_w_transformations(phi, g, "strict")
    tnames = ["T{}".format(i) for i in range(len(trans))]
    trans_of = dict(zip(tnames, trans))
    mods = []
    for i, s in enumerate(trans):
        for j, t in enumerate(trans):
            for m in enumerate_modifications(s, t):
                mods.append((i, j, m))
    mnames = []
    mod_of = {}
    src = {}
    tgt = {}
    identity = {}
    key_to_name = {}
    for idx, (i, j, m) in enumerate(mods):
        name = "M{}".format(idx)
        mnames.append(name)
        mod_of[name] = m
        src[name] = tnames[i]
        tgt[name] = tnames[j]
        comp_key = (i, j, tuple((a, m.comp[a].key()) for a in phi.base.objects))
        key_to_name[comp_key] = name
        if i == j and all(
            m.comp[a].key() == identity_nat(trans[i].comp1[a]).key()
            for a in phi.base.objects
        ):
            identity[tnames[i]] = name
    table = {}
    index = {n: i for i, n in enumerate(tnames)}
    for nf in mnames:
        for ng in mnames:
            if tgt[nf] != src[ng]:
                continue
            mf, mg = mod_of[nf], mod_of[ng]
            comp = {
                a: vcompose_nat(mg.comp[a], mf.comp[a])
                for a in phi.base.objects
            }
            comp_key = (
                index[src[nf]],
                index[tgt[ng]],
                tuple((a, comp[a].key()) for a in phi.base.objects),
            )
            table[(ng, nf)] = key_to_name[comp_key]
    cat = FinCat(tuple(tnames), tuple(mnames), src, tgt, identity, table)
    assert validate_category(cat) == []
    return WeightedLimitCat(cat, trans_of, mod_of)


# ----------------------------------------------------------------------------
# limits inside a 2-category


class DiagramMismatch(Exception):
    """Raised when a weight, diagram, or cone do not share a shape."""


@dataclass(frozen=True)
class LimitCheck:
    """Outcome of a universal-property check, probe by probe."""

    ok: bool
    failing_probe: object = None
    detail: str = ""


def cone_postcompose(k, phi, g, l, cone, x):
    """Whisker a cone along x: a -> l, giving a cone with apex a."""
    a = k.src1(x)
    comp1 = {}
    for d in phi.base.objects:
        hl = k.hom[(l, g.ob[d])]
        ha = k.hom[(a, g.ob[d])]
        ob = {z: k.hcomp1[(cone.comp1[d].ob[z], x)] for z in phi.at[d].objects}
        mor = {
            m: k.hcomp2[(cone.comp1[d].mor[m], k.id2(x))]
            for m in phi.at[d].morphisms
        }
        comp1[d] = Fun(phi.at[d], ha, ob, mor)
    w = hom_weight(k, a, g)
    comp2 = {u: identity_nat(_cocompose(w, phi, comp1, u)) for u in phi.base.one_cells()}
    return WNat("strict", phi, w, comp1, comp2)


def _cocompose(w, phi, comp1, u):
    return compose_fun(w.on1[u], comp1[phi.base.src1(u)])


def check_limit_in_two_cat(k, phi, g, l, cone):
    """Check that (l, cone) is the phi-weighted limit of g inside k.

    For every probe object a, postcomposition must give an isomorphism
    between hom(a, l) and the enumerated weighted limit category.
    """
    if phi.base is not g.dom and phi.base != g.dom:
        raise DiagramMismatch("weight and diagram have different shapes")
    if l not in set(k.objects):
        raise DiagramMismatch("apex is not an object of the 2-category")
    if cone.dom.key() != phi.key() or cone.kind != "strict":
        raise DiagramMismatch("cone is not a strict transformation from the weight")
    if cone.cod.key() != hom_weight(k, l, g).key():
        raise DiagramMismatch("cone does not land in hom(apex, diagram)")
    for a in k.objects:
        w = hom_weight(k, a, g)
        lim = weighted_limit_cat(phi, w)
        ob_image = {}
        for x in k.hom[(a, l)].objects:
            t = cone_postcompose(k, phi, g, l, cone, x)
            if t.validate() != []:
                return LimitCheck(False, a, "whiskered cone not natural at " + x)
            name = lim.name_of_trans(t)
            if name is None:
                return LimitCheck(False, a, "whiskered cone missing from limit at " + x)
            ob_image[x] = name
        if len(set(ob_image.values())) != len(ob_image):
            return LimitCheck(False, a, "comparison not injective on 1-cells")
        if set(ob_image.values()) != set(lim.cat.objects):
            return LimitCheck(False, a, "comparison not surjective on 1-cells")
        mor_image = {}
        for m in k.hom[(a, l)].morphisms:
            x, y = k.hom[(a, l)].src[m], k.hom[(a, l)].tgt[m]
            sx = lim.trans_of[ob_image[x]]
            sy = lim.trans_of[ob_image[y]]
            comp = {}
            for d in phi.base.objects:
                comp[d] = NatTrans(
                    sx.comp1[d],
                    sy.comp1[d],
                    {
                        z: k.hcomp2[(k.id2(cone.comp1[d].ob[z]), m)]
                        for z in phi.at[d].objects
                    },
                )
            mod = Modification(sx, sy, comp)
            if mod.validate() != []:
                return LimitCheck(False, a, "whiskered 2-cell not a modification")
            name = lim.name_of_mod(mod)
            if name is None:
                return LimitCheck(False, a, "whiskered 2-cell missing from limit")
            mor_image[m] = name
        if len(set(mor_image.values())) != len(mor_image):
            return LimitCheck(False, a, "comparison not injective on 2-cells")
        if set(mor_image.values()) != set(lim.cat.morphisms):
            return LimitCheck(False, a, "comparison not surjective on 2-cells")
    return LimitCheck(True)


# ----------------------------------------------------------------------------
# monads and Eilenberg-Moore objects


@dataclass(frozen=True)
class TwoMonad:
    """A monad in a 2-category: an object with a monoid in hom(obj, obj)."""

    obj: str
    t: str
    mu: str
    eta: str

    def validate(self, k):
        problems = []
        h = k.hom[(self.obj, self.obj)]
        if self.t not in set(h.objects):
            return ["carrier 1-cell missing"]
        idt = h.identity[self.t]
        tt = k.hcomp1[(self.t, self.t)]
        if self.mu not in set(h.morphisms) or not (
            h.src[self.mu] == tt and h.tgt[self.mu] == self.t
        ):
            problems.append("multiplication has wrong boundary")
        unit1 = k.id1[self.obj]
        if self.eta not in set(h.morphisms) or not (
            h.src[self.eta] == unit1 and h.tgt[self.eta] == self.t
        ):
            problems.append("unit has wrong boundary")
        if problems:
            return problems
        if h.compose(self.mu, k.hcomp2[(self.mu, idt)]) != h.compose(
            self.mu, k.hcomp2[(idt, self.mu)]
        ):
            problems.append("associativity of the monad fails")
        if h.compose(self.mu, k.hcomp2[(self.eta, idt)]) != idt:
            problems.append("left unit of the monad fails")
        if h.compose(self.mu, k.hcomp2[(idt, self.eta)]) != idt:
            problems.append("right unit of the monad fails")
        return problems


@dataclass(frozen=True)
class EmResult:
    """An Eilenberg-Moore object: carrier, forgetful 1-cell, action."""

    obj: str
    u: str
    action: str


def em_category_at(k, monad, x):
    """The category of algebras of the hom-level monad on hom(x, A)."""
    a = monad.obj
    h = k.hom[(x, a)]
    algebras = []
    for y in h.objects:
        ty = k.hcomp1[(monad.t, y)]
        idy = h.identity[y]
        for act in h.hom(ty, y):
            if h.compose(act, k.hcomp2[(monad.eta, idy)]) != idy:
                continue
            left = h.compose(act, k.hcomp2[(monad.mu, idy)])
            right = h.compose(act, k.hcomp2[(k.hom[(a, a)].identity[monad.t], act)])
            if left != right:
                continue
            algebras.append((y, act))
    names = {alg: "A{}".format(i) for i, alg in enumerate(algebras)}
    mors = []
    src = {}
    tgt = {}
    mor_of = {}
    for (y, act) in algebras:
        for (y2, act2) in algebras:
            for f in h.hom(y, y2):
                if h.compose(act2, k.hcomp2[(k.hom[(a, a)].identity[monad.t], f)]) != h.compose(f, act):
                    continue
                name = "m{}:{}:{}".format(names[(y, act)], names[(y2, act2)], f)
                mors.append(name)
                src[name] = names[(y, act)]
                tgt[name] = names[(y2, act2)]
                mor_of[name] = ((y, act), (y2, act2), f)
    identity = {}
    for alg in algebras:
        y, act = alg
        identity[names[alg]] = "m{}:{}:{}".format(
            names[alg], names[alg], h.identity[y]
        )
    table = {}
    for n1 in mors:
        a1, b1, f1 = mor_of[n1]
        for n2 in mors:
            a2, b2, f2 = mor_of[n2]
            if b1 != a2:
                continue
            f = h.compose(f2, f1)
            table[(n2, n1)] = "m{}:{}:{}".format(names[a1], names[b2], f)
    cat = FinCat(
        tuple(names[alg] for alg in algebras), tuple(mors), src, tgt, identity, table
    )
    assert validate_category(cat) == []
    return cat, names, mor_of


def em_object(k, monad):
    """Search k for an Eilenberg-Moore object of the monad.

    Returns an EmResult, or None when no object of k has the universal
    property.
    """
    assert monad.validate(k) == []
    a = monad.obj
    idt = k.hom[(a, a)].identity[monad.t]
    candidates = []
    for l in k.objects:
        h = k.hom[(l, a)]
        for u in h.objects:
            tu = k.hcomp1[(monad.t, u)]
            idu = h.identity[u]
            for act in h.hom(tu, u):
                if h.compose(act, k.hcomp2[(monad.eta, idu)]) != idu:
                    continue
                if h.compose(act, k.hcomp2[(monad.mu, idu)]) != h.compose(
                    act, k.hcomp2[(idt, act)]
                ):
                    continue
                candidates.append((l, u, act))
    for l, u, act in candidates:
        if _em_universal(k, monad, l, u, act):
            return EmResult(l, u, act)
    return None


def _em_universal(k, monad, l, u, act):
    """Does postcomposition with (u, act) identify hom(x, l) with the
    hom-level algebra category, for every probe x?"""
    a = monad.obj
    idt = k.hom[(a, a)].identity[monad.t]
    for x in k.objects:
        em_cat, names, _ = em_category_at(k, monad, x)
        h = k.hom[(x, l)]
        ha = k.hom[(x, a)]
        ob_image = {}
        for y in h.objects:
            uy = k.hcomp1[(u, y)]
            act_y = k.hcomp2[(act, h.identity[y])]
            alg = (uy, act_y)
            if alg not in names:
                return False
            ob_image[y] = names[alg]
        if len(set(ob_image.values())) != len(ob_image) or set(
            ob_image.values()
        ) != set(em_cat.objects):
            return False
        mor_image = {}
        for m in h.morphisms:
            y, y2 = h.src[m], h.tgt[m]
            f = k.hcomp2[(k.hom[(l, a)].identity[u], m)]
            name = "m{}:{}:{}".format(ob_image[y], ob_image[y2], f)
            if name not in set(em_cat.morphisms):
                return False
            mor_image[m] = name
        if len(set(mor_image.values())) != len(mor_image) or set(
            mor_image.values()
        ) != set(em_cat.morphisms):
            return False
    return True
