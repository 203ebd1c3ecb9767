"""Classifiers for weak transformations that are strict on tight cells.

Given a Cat-valued weight on the loose 2-category of a finite shape with
a tightness predicate, the kind-w transformations out of it whose
components at tight 1-cells are identities are classified by a second
weight: strict transformations out of the classifier correspond exactly
to such relaxed ones.  This module builds the classifier by presenting
each of its values with generators and relations, certifies the
correspondence by exhaustive enumeration against a family of probe
weights, and assembles the counit, the unit, and the comultiplication
of the induced comonad.

On top of the classifier sit the notions used to decide riggedness: the
object-level left Kan extension along the tight inclusion with its
comparison map, strict coalgebra structures for the comonad, and the
canonical cell comparing the unit with a coalgebra structure.
"""

from dataclasses import dataclass

from .cat_core import (
    CompletionBudget,
    CatPresentation,
    FinCat,
    Fun,
    NatTrans,
    SetWeight,
    arrow_cat,
    compose_fun,
    identity_fun,
    identity_nat,
    realize_presentation,
    terminal_cat,
)
from .two_cat import (
    CatWeight,
    Modification,
    WNat,
    constant_weight,
    enumerate_modifications,
    enumerate_w_transformations,
    representable_weight_2,
    vcompose_wnat,
)
from .f_core import tau_two_cat, validate_fcat
from .weights import UnsupportedKind

CLASSIFIER_KINDS = ("pseudo", "lax", "oplax")


class ProbeBijectionFailure(Exception):
    """Raised when a probe weight refutes the classifying property."""


class AdjunctionDataMissing(Exception):
    """Raised when the cells relating unit and structure cannot be found."""


# ----------------------------------------------------------------------------
# skeletons and the object-level Kan extension


def one_skeleton(k):
    """The category of objects and 1-cells underlying a 2-category."""
    mors = tuple(k.one_cells())
    src = {f: k.src1(f) for f in mors}
    tgt = {f: k.tgt1(f) for f in mors}
    table = {
        (g, f): k.comp1(g, f)
        for g in mors
        for f in mors
        if tgt[f] == src[g]
    }
    return FinCat(tuple(k.objects), mors, src, tgt, dict(k.id1), table)


def tight_skeleton(shape):
    """The category of objects and tight 1-cells of a marked 2-category."""
    return one_skeleton(tau_two_cat(shape))


class _UnionFind:
    def __init__(self, items=()):
        self.parent = {}
        for x in items:
            self.add(x)

    def add(self, x):
        self.parent.setdefault(x, x)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[rx] = ry

    def classes(self):
        out = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return {root: tuple(sorted(xs)) for root, xs in out.items()}


class LanSet:
    """The extension of a Set-valued weight from the tight part.

    weight: a SetWeight on the loose 1-skeleton whose elements are
    equivalence classes of pairs (1-cell into the object, element).
    class_of: pair -> class name.  members: class name -> tuple of pairs.
    """

    def __init__(self, weight, class_of, members):
        self.weight = weight
        self.class_of = class_of
        self.members = dict(members)


def _pair_name(pair):
    return "{}|{}".format(*pair)


def lan_set(shape, g):
    """Extend a Set-valued weight on the tight part to all 1-cells.

    The value at d collects the pairs (u: d' -> d, x in g(d')) modulo
    identifying (u o t, x) with (u, g(t) x) for every tight t; 1-cells
    act by postcomposition.
    """
    k = shape.base
    assert g.base == tight_skeleton(shape), "weight is not over the tight part"
    uf = _UnionFind(
        (u, x) for u in k.one_cells() for x in g.at(k.src1(u))
    )
    tights = sorted(shape.tight)
    for u in k.one_cells():
        for t in tights:
            if k.tgt1(t) != k.src1(u):
                continue
            ut = k.comp1(u, t)
            for x in g.at(k.src1(t)):
                uf.union((ut, x), (u, g.on(t)[x]))
    class_of = {}
    members = {}
    for _, pairs in uf.classes().items():
        name = min(_pair_name(p) for p in pairs)
        members[name] = pairs
        for p in pairs:
            class_of[p] = name
    base = one_skeleton(k)
    sets = {
        d: tuple(
            sorted(n for n, ps in members.items() if k.tgt1(ps[0][0]) == d)
        )
        for d in k.objects
    }
    maps = {}
    for w in base.morphisms:
        action = {}
        for name in sets[base.src[w]]:
            images = {
                class_of[(k.comp1(w, u), x)] for u, x in members[name]
            }
            assert len(images) == 1, "postcomposition is not class-stable"
            action[name] = images.pop()
        maps[w] = action
    weight = SetWeight(base, sets, maps)
    assert weight.validate() == []
    return LanSet(weight, class_of, members)


@dataclass
class PhiBarReport:
    """Pointwise behaviour of the comparison into the loose objects."""

    lan: LanSet
    image: dict
    per_object: dict

    @property
    def surjective(self):
        return all(v != "neither" for v in self.per_object.values())

    @property
    def bijective(self):
        return all(v == "bijective" for v in self.per_object.values())


def phi_bar_objects(w):
    """Compare the extended tight objects with the loose objects.

    For each shape object the extension classes map to loose-value
    objects by evaluating the embedded representative; the report
    records whether that map is bijective, merely surjective, or
    neither.
    """
    shape = w.shape
    k = shape.base
    sk = tight_skeleton(shape)
    g = SetWeight(
        sk,
        {d: w.phi_tau.at[d].objects for d in k.objects},
        {t: dict(w.phi_tau.on1[t].ob) for t in sk.morphisms},
    )
    assert g.validate() == []
    lan = lan_set(shape, g)
    image = {}
    per_object = {}
    for d in k.objects:
        val = {}
        for name in lan.weight.at(d):
            hits = {
                w.phi_lambda.on1[u].ob[w.phi[k.src1(u)].ob[x]]
                for u, x in lan.members[name]
            }
            assert len(hits) == 1, "comparison is not constant on a class"
            val[name] = hits.pop()
        image[d] = val
        targets = set(w.phi_lambda.at[d].objects)
        hit = set(val.values())
        if hit != targets:
            per_object[d] = "neither"
        elif len(val) == len(hit):
            per_object[d] = "bijective"
        else:
            per_object[d] = "surjective"
    return PhiBarReport(lan, image, per_object)


# ----------------------------------------------------------------------------
# the classifier, presented one value at a time


def _fold(cat, at, images):
    out = cat.identity[at]
    for m in images:
        if m is not None:
            out = cat.compose(m, out)
    return out


def _inverse_in(cat, m):
    a, b = cat.src[m], cat.tgt[m]
    for n in cat.hom(b, a):
        if cat.compose(n, m) == cat.identity[a] and (
            cat.compose(m, n) == cat.identity[b]
        ):
            return n
    raise AssertionError("morphism {} has no inverse".format(m))


class _ClassifierBuilder:
    """Presentations of the classifier values and their realizations.

    The value at d is presented on the extension classes of pairs
    (u: d' -> d, object of the input value at d').  Generators come in
    three families, each indexed up to the tight congruence: images of
    input morphisms, relaxation cells for loose composition, and images
    of 2-cells of the shape; the pseudo kind adds formal inverses for
    the relaxation cells.
    """

    def __init__(self, shape, phi, kind, budget):
        self.shape = shape
        self.phi = phi
        self.kind = kind
        self.budget = budget
        self.k = shape.base
        self.tights = sorted(shape.tight)
        self.ob_cls = {}
        self.ob_rep = {}
        self.ob_members = {}
        self.img = {}
        self.cmp = {}
        self.cel = {}
        self.gen_info = {}
        self.real = {}
        for d in self.k.objects:
            self._build_value(d)

    # -- index canonicalization

    def _tight_into(self, d1):
        return [t for t in self.tights if self.k.tgt1(t) == d1]

    def _build_value(self, d):
        k, phi = self.k, self.phi
        into_d = list(k.one_cells(None, d))

        uf = _UnionFind(
            (u, x) for u in into_d for x in phi.at[k.src1(u)].objects
        )
        ufm = _UnionFind(
            (u, m) for u in into_d for m in phi.at[k.src1(u)].morphisms
        )
        for u in into_d:
            for t in self._tight_into(k.src1(u)):
                ut = k.comp1(u, t)
                for x in phi.at[k.src1(t)].objects:
                    uf.union((ut, x), (u, phi.on1[t].ob[x]))
                for m in phi.at[k.src1(t)].morphisms:
                    ufm.union((ut, m), (u, phi.on1[t].mor[m]))
        self.ob_cls[d] = {}
        self.ob_rep[d] = {}
        self.ob_members[d] = {}
        for pairs in uf.classes().values():
            name = min(_pair_name(p) for p in pairs)
            self.ob_members[d][name] = pairs
            self.ob_rep[d][name] = min(pairs, key=_pair_name)
            for p in pairs:
                self.ob_cls[d][p] = name

        self.img[d] = {}
        for pairs in ufm.classes().values():
            entry = {
                "skip": any(
                    phi.at[k.src1(u)].is_identity(m) for u, m in pairs
                ),
                "rep": min(pairs, key=_pair_name),
            }
            entry["name"] = "img[{};{}]".format(*entry["rep"])
            for p in pairs:
                self.img[d][p] = entry

        ufc = _UnionFind(
            (u, v, x)
            for u in into_d
            for v in k.one_cells(None, k.src1(u))
            for x in phi.at[k.src1(v)].objects
        )
        for u in into_d:
            for t in self._tight_into(k.src1(u)):
                ut = k.comp1(u, t)
                for w in k.one_cells(None, k.src1(t)):
                    for x in phi.at[k.src1(w)].objects:
                        ufc.union((ut, w, x), (u, k.comp1(t, w), x))
            for v in k.one_cells(None, k.src1(u)):
                for t in self._tight_into(k.src1(v)):
                    vt = k.comp1(v, t)
                    for x in phi.at[k.src1(t)].objects:
                        ufc.union((u, vt, x), (u, v, phi.on1[t].ob[x]))
        self.cmp[d] = {}
        for triples in ufc.classes().values():
            entry = {
                "skip": any(v in self.shape.tight for _, v, _ in triples),
                "rep": min(triples, key=lambda tr: "{}|{}|{}".format(*tr)),
            }
            entry["name"] = "cmp[{};{};{}]".format(*entry["rep"])
            entry["iname"] = "icm[{};{};{}]".format(*entry["rep"])
            for tr in triples:
                self.cmp[d][tr] = entry

        cel_pairs = [
            (b, x)
            for b in k.two_cells()
            if k.hom_of_2cell(b)[1] == d
            for x in phi.at[k.hom_of_2cell(b)[0]].objects
        ]
        ufl = _UnionFind(cel_pairs)
        for b in k.two_cells():
            d1, d2 = k.hom_of_2cell(b)
            if d2 != d:
                continue
            for t in self._tight_into(d1):
                bt = k.comp2(b, k.id2(t))
                for x in phi.at[k.src1(t)].objects:
                    ufl.union((bt, x), (b, phi.on1[t].ob[x]))
        self.cel[d] = {}
        for pairs in ufl.classes().values():
            entry = {
                "skip": any(
                    k.hom[k.hom_of_2cell(b)].is_identity(b) for b, _ in pairs
                ),
                "rep": min(pairs, key=_pair_name),
            }
            entry["name"] = "cel[{};{}]".format(*entry["rep"])
            for p in pairs:
                self.cel[d][p] = entry

        self._realize(d)

    # -- generator words

    def _img_word(self, d, u, m):
        e = self.img[d][(u, m)]
        return () if e["skip"] else (e["name"],)

    def _cmp_word(self, d, u, v, x):
        e = self.cmp[d][(u, v, x)]
        return () if e["skip"] else (e["name"],)

    def _icm_word(self, d, u, v, x):
        e = self.cmp[d][(u, v, x)]
        return () if e["skip"] else (e["iname"],)

    def _cel_word(self, d, b, x):
        e = self.cel[d][(b, x)]
        return () if e["skip"] else (e["name"],)

    # -- presentation and realization

    def _generators(self, d):
        k, phi = self.k, self.phi
        lax = self.kind != "oplax"
        gens = []
        info = {}
        seen = set()
        for entry in self.img[d].values():
            if entry["skip"] or entry["name"] in seen:
                continue
            seen.add(entry["name"])
            u, m = entry["rep"]
            c = phi.at[k.src1(u)]
            a = self.ob_cls[d][(u, c.src[m])]
            b = self.ob_cls[d][(u, c.tgt[m])]
            gens.append((entry["name"], a, b))
            info[entry["name"]] = ("img", u, m)
        for entry in self.cmp[d].values():
            if entry["skip"] or entry["name"] in seen:
                continue
            seen.add(entry["name"])
            u, v, x = entry["rep"]
            outer = self.ob_cls[d][(k.comp1(u, v), x)]
            inner = self.ob_cls[d][(u, phi.on1[v].ob[x])]
            a, b = (outer, inner) if lax else (inner, outer)
            gens.append((entry["name"], a, b))
            info[entry["name"]] = ("cmp", u, v, x)
            if self.kind == "pseudo":
                gens.append((entry["iname"], b, a))
                info[entry["iname"]] = ("icm", u, v, x)
        for entry in self.cel[d].values():
            if entry["skip"] or entry["name"] in seen:
                continue
            seen.add(entry["name"])
            b2, x = entry["rep"]
            a = self.ob_cls[d][(k.src2(b2), x)]
            b = self.ob_cls[d][(k.tgt2(b2), x)]
            gens.append((entry["name"], a, b))
            info[entry["name"]] = ("cel", b2, x)
        return gens, info

    def _relations(self, d):
        k, phi = self.k, self.phi
        lax = self.kind != "oplax"
        rels = []

        def add(left, right):
            left, right = tuple(left), tuple(right)
            if left != right:
                rels.append((left, right))

        for u in k.one_cells(None, d):
            c = phi.at[k.src1(u)]
            # composites of input morphisms
            for g, f in c.composable_pairs():
                add(
                    self._img_word(d, u, f) + self._img_word(d, u, g),
                    self._img_word(d, u, c.compose(g, f)),
                )
            for v in k.one_cells(None, k.src1(u)):
                uv = k.comp1(u, v)
                cv = phi.at[k.src1(v)]
                # naturality of relaxation in the input morphism
                for m in cv.morphisms:
                    x, y = cv.src[m], cv.tgt[m]
                    fm = phi.on1[v].mor[m]
                    if lax:
                        add(
                            self._img_word(d, uv, m)
                            + self._cmp_word(d, u, v, y),
                            self._cmp_word(d, u, v, x)
                            + self._img_word(d, u, fm),
                        )
                    else:
                        add(
                            self._img_word(d, u, fm)
                            + self._cmp_word(d, u, v, y),
                            self._cmp_word(d, u, v, x)
                            + self._img_word(d, uv, m),
                        )
                # relaxation cocycle over composable 1-cells
                for w in k.one_cells(None, k.src1(v)):
                    vw = k.comp1(v, w)
                    for x in phi.at[k.src1(w)].objects:
                        fx = phi.on1[w].ob[x]
                        if lax:
                            add(
                                self._cmp_word(d, uv, w, x)
                                + self._cmp_word(d, u, v, fx),
                                self._cmp_word(d, u, vw, x),
                            )
                        else:
                            add(
                                self._cmp_word(d, u, v, fx)
                                + self._cmp_word(d, uv, w, x),
                                self._cmp_word(d, u, vw, x),
                            )
                # naturality of relaxation in 2-cells of the inner hom
                hom_in = k.hom[(k.src1(v), k.src1(u))]
                for b in hom_in.morphisms:
                    if hom_in.src[b] != v:
                        continue
                    v2 = hom_in.tgt[b]
                    ub = k.comp2(k.id2(u), b)
                    for x in cv.objects:
                        bx = phi.on2[b].comp[x]
                        if lax:
                            add(
                                self._cmp_word(d, u, v, x)
                                + self._img_word(d, u, bx),
                                self._cel_word(d, ub, x)
                                + self._cmp_word(d, u, v2, x),
                            )
                        else:
                            add(
                                self._cmp_word(d, u, v, x)
                                + self._cel_word(d, ub, x),
                                self._img_word(d, u, bx)
                                + self._cmp_word(d, u, v2, x),
                            )
        for b in k.two_cells():
            d1, d2 = k.hom_of_2cell(b)
            if d2 != d:
                continue
            u, u2 = k.src2(b), k.tgt2(b)
            hom = k.hom[(d1, d)]
            c = phi.at[d1]
            # vertical composites of shape 2-cells
            for b2 in hom.morphisms:
                if hom.src[b2] != u2:
                    continue
                for x in c.objects:
                    add(
                        self._cel_word(d, b, x) + self._cel_word(d, b2, x),
                        self._cel_word(d, hom.compose(b2, b), x),
                    )
            # naturality of shape 2-cells in the input morphism
            for m in c.morphisms:
                x, y = c.src[m], c.tgt[m]
                add(
                    self._img_word(d, u, m) + self._cel_word(d, b, y),
                    self._cel_word(d, b, x) + self._img_word(d, u2, m),
                )
            # compatibility of shape 2-cells with relaxation
            for v in k.one_cells(None, d1):
                bv = k.comp2(b, k.id2(v))
                for x in phi.at[k.src1(v)].objects:
                    fx = phi.on1[v].ob[x]
                    if lax:
                        add(
                            self._cmp_word(d, u, v, x)
                            + self._cel_word(d, b, fx),
                            self._cel_word(d, bv, x)
                            + self._cmp_word(d, u2, v, x),
                        )
                    else:
                        add(
                            self._cmp_word(d, u, v, x)
                            + self._cel_word(d, bv, x),
                            self._cel_word(d, b, fx)
                            + self._cmp_word(d, u2, v, x),
                        )
        if self.kind == "pseudo":
            seen = set()
            for entry in self.cmp[d].values():
                if entry["skip"] or entry["name"] in seen:
                    continue
                seen.add(entry["name"])
                add((entry["name"], entry["iname"]), ())
                add((entry["iname"], entry["name"]), ())
        return rels

    def _realize(self, d):
        gens, info = self._generators(d)
        pres = CatPresentation(
            tuple(sorted(self.ob_members[d])), tuple(gens), tuple(self._relations(d))
        )
        self.gen_info[d] = info
        self.real[d] = realize_presentation(pres, self.budget)

    # -- the classifier weight and its structure maps

    def _gen_image_word(self, e, w, info):
        k = self.k
        if info[0] == "img":
            _, u, m = info
            return self._img_word(e, k.comp1(w, u), m)
        if info[0] == "cmp":
            _, u, v, x = info
            return self._cmp_word(e, k.comp1(w, u), v, x)
        if info[0] == "icm":
            _, u, v, x = info
            return self._icm_word(e, k.comp1(w, u), v, x)
        _, b, x = info
        return self._cel_word(e, k.comp2(k.id2(w), b), x)

    def _act1(self, w):
        k = self.k
        d, e = k.src1(w), k.tgt1(w)
        ob = {}
        for name, pairs in self.ob_members[d].items():
            images = {self.ob_cls[e][(k.comp1(w, u), x)] for u, x in pairs}
            assert len(images) == 1, "action is not class-stable"
            ob[name] = images.pop()
        mor = {}
        for name in self.real[d].cat.morphisms:
            anchor, word = self.real[d].word_of[name]
            image = []
            for g in word:
                image.extend(self._gen_image_word(e, w, self.gen_info[d][g]))
            mor[name] = self.real[e].eval_path(tuple(image), at=ob[anchor])
        return Fun(self.real[d].cat, self.real[e].cat, ob, mor)

    def weight(self):
        k = self.k
        at = {d: self.real[d].cat for d in k.objects}
        on1 = {w: self._act1(w) for w in k.one_cells()}
        on2 = {}
        for g in k.two_cells():
            w, w2 = k.src2(g), k.tgt2(g)
            e = k.tgt1(w)
            d = k.src1(w)
            comp = {}
            for name in at[d].objects:
                u, x = self.ob_rep[d][name]
                word = self._cel_word(e, k.comp2(g, k.id2(u)), x)
                comp[name] = self.real[e].eval_path(
                    word, at=on1[w].ob[name]
                )
            on2[g] = NatTrans(on1[w], on1[w2], comp)
        q_phi = CatWeight(k, at, on1, on2)
        problems = q_phi.validate()
        assert problems == [], problems
        return q_phi

    def unit(self, q_phi):
        k, phi = self.k, self.phi
        comp1 = {}
        for d in k.objects:
            c = phi.at[d]
            one = k.id1[d]
            ob = {x: self.ob_cls[d][(one, x)] for x in c.objects}
            mor = {
                m: self.real[d].eval_path(
                    self._img_word(d, one, m), at=ob[c.src[m]]
                )
                for m in c.morphisms
            }
            comp1[d] = Fun(c, self.real[d].cat, ob, mor)
        comp2 = {}
        for u in k.one_cells():
            a, b = k.src1(u), k.tgt1(u)
            lax_src = compose_fun(q_phi.on1[u], comp1[a])
            lax_tgt = compose_fun(comp1[b], phi.on1[u])
            src = lax_src if self.kind != "oplax" else lax_tgt
            tgt = lax_tgt if self.kind != "oplax" else lax_src
            comp = {
                x: self.real[b].eval_path(
                    self._cmp_word(b, k.id1[b], u, x), at=src.ob[x]
                )
                for x in phi.at[a].objects
            }
            comp2[u] = NatTrans(src, tgt, comp)
        p = WNat(self.kind, phi, q_phi, comp1, comp2)
        problems = p.validate()
        assert problems == [], problems
        return p

    def counit(self, q_phi):
        k, phi = self.k, self.phi
        comp1 = {}
        for d in k.objects:
            c = phi.at[d]
            ob = {}
            for name, pairs in self.ob_members[d].items():
                values = {
                    phi.on1[u].ob[x] for u, x in pairs
                }
                assert len(values) == 1, "counit is not constant on a class"
                ob[name] = values.pop()
            mor = {}
            for name in self.real[d].cat.morphisms:
                anchor, word = self.real[d].word_of[name]
                images = []
                for g in word:
                    info = self.gen_info[d][g]
                    if info[0] == "img":
                        _, u, m = info
                        images.append(phi.on1[u].mor[m])
                    elif info[0] == "cel":
                        _, b, x = info
                        images.append(phi.on2[b].comp[x])
                    else:
                        images.append(None)
                mor[name] = _fold(c, ob[anchor], images)
            comp1[d] = Fun(self.real[d].cat, c, ob, mor)
        comp2 = {}
        for u in k.one_cells():
            a, b = k.src1(u), k.tgt1(u)
            left = compose_fun(phi.on1[u], comp1[a])
            right = compose_fun(comp1[b], q_phi.on1[u])
            assert left == right, "counit fails to commute at {}".format(u)
            comp2[u] = identity_nat(left)
        q = WNat("strict", q_phi, phi, comp1, comp2)
        problems = q.validate()
        assert problems == [], problems
        return q


@dataclass(eq=False)
class RelativeClassifier:
    """A classifying weight with its comonad structure.

    q_phi classifies kind-`kind` transformations out of `input` that are
    strict on tight 1-cells: composition with the unit p is a bijection
    from strict transformations out of q_phi onto them.  q is the
    counit, comult the comultiplication, and inner the classifier of
    q_phi itself, which carries the data comult lands in.
    """

    shape: object
    input: CatWeight
    kind: str
    q_phi: CatWeight
    p: WNat
    q: WNat
    comult: WNat
    budget_used: CompletionBudget
    inner: object


def is_identity_transformation(nu):
    """Whether a transformation has identity components everywhere."""
    if nu.dom.key() != nu.cod.key():
        return False
    for d, f in nu.comp1.items():
        if f != identity_fun(f.dom):
            return False
    for t in nu.comp2.values():
        cat = t.src_fun.cod
        if any(not cat.is_identity(m) for m in t.comp.values()):
            return False
    return True


def default_probes(shape, phi):
    """The stock probe family: the input, two constants, representables."""
    k = shape.base
    probes = [
        phi,
        constant_weight(k, terminal_cat()),
        constant_weight(k, arrow_cat()),
    ]
    probes.extend(representable_weight_2(k, d) for d in k.objects)
    return probes


def _input_size(shape, phi):
    k = shape.base
    return (
        sum(len(phi.at[d].morphisms) for d in k.objects)
        + len(list(k.one_cells()))
        + len(list(k.two_cells()))
    )


def _certify_probe(rc, psi):
    strict = enumerate_w_transformations(rc.q_phi, psi, "strict")
    relaxed = enumerate_w_transformations(
        rc.input, psi, rc.kind, strict_on=tuple(sorted(rc.shape.tight))
    )
    seen = {}
    for nu in strict:
        key = vcompose_wnat(nu, rc.p).key()
        if key in seen:
            raise ProbeBijectionFailure(
                "two strict maps classify the same transformation"
            )
        seen[key] = nu
    relaxed_keys = {t.key() for t in relaxed}
    if set(seen) != relaxed_keys:
        raise ProbeBijectionFailure(
            "{} strict maps against {} relaxed transformations".format(
                len(seen), len(relaxed_keys)
            )
        )
    return len(strict)


def build_relative_classifier(shape, phi, kind, budget=None, probes=None):
    """Build and certify the classifier of kind-`kind` transformations.

    phi: a Cat-valued weight on shape.base.  probes: weights against
    which the classifying bijection is checked exhaustively; None picks
    the stock family.  Raises ProbeBijectionFailure if a probe refutes
    the construction and BudgetExceeded if a value does not finish.
    """
    return _build_classifier(shape, phi, kind, budget, probes, top=True)


def _build_classifier(shape, phi, kind, budget, probes, top):
    if kind not in CLASSIFIER_KINDS:
        raise UnsupportedKind(kind)
    assert validate_fcat(shape) == []
    assert phi.base == shape.base
    if budget is None:
        n = max(_input_size(shape, phi), 2)
        budget = CompletionBudget(10 * n * n, 1_000_000)
    builder = _ClassifierBuilder(shape, phi, kind, budget)
    q_phi = builder.weight()
    p = builder.unit(q_phi)
    q = builder.counit(q_phi)
    assert is_identity_transformation(vcompose_wnat(q, p))
    rc = RelativeClassifier(
        shape=shape,
        input=phi,
        kind=kind,
        q_phi=q_phi,
        p=p,
        q=q,
        comult=None,
        budget_used=budget,
        inner=None,
    )
    rc._builder = builder
    if probes is None:
        probes = default_probes(shape, phi)
    for psi in probes:
        _certify_probe(rc, psi)
    if top:
        rc.inner = _build_classifier(
            shape, q_phi, kind, None, (), top=False
        )
        rc.comult = classify(rc, vcompose_wnat(rc.inner.p, rc.p))
    return rc


def classify(rc, sigma):
    """The unique strict transformation factoring sigma through the unit.

    sigma: a transformation out of rc.input of the classifier's kind (or
    strict) whose components at tight 1-cells are identities.
    """
    assert sigma.dom.key() == rc.input.key()
    if sigma.kind not in ("strict", rc.kind):
        raise ValueError("kind {} does not match".format(sigma.kind))
    k = rc.shape.base
    for t in rc.shape.tight:
        cat = sigma.comp2[t].src_fun.cod
        if any(not cat.is_identity(m) for m in sigma.comp2[t].comp.values()):
            raise ValueError("transformation is not strict on tight cells")
    psi = sigma.cod
    b = rc._builder

    def gen_image(info):
        if info[0] == "img":
            _, u, m = info
            return psi.on1[u].mor[sigma.comp1[k.src1(u)].mor[m]]
        if info[0] == "cmp":
            _, u, v, x = info
            return psi.on1[u].mor[sigma.comp2[v].comp[x]]
        if info[0] == "icm":
            _, u, v, x = info
            inv = _inverse_in(psi.at[k.tgt1(v)], sigma.comp2[v].comp[x])
            return psi.on1[u].mor[inv]
        _, b2, x = info
        d1 = k.hom_of_2cell(b2)[0]
        return psi.on2[b2].comp[sigma.comp1[d1].ob[x]]

    comp1 = {}
    for d in k.objects:
        ob = {}
        for name, pairs in b.ob_members[d].items():
            values = {
                psi.on1[u].ob[sigma.comp1[k.src1(u)].ob[x]] for u, x in pairs
            }
            assert len(values) == 1, "classification is not constant on a class"
            ob[name] = values.pop()
        mor = {}
        for name in b.real[d].cat.morphisms:
            anchor, word = b.real[d].word_of[name]
            images = [gen_image(b.gen_info[d][g]) for g in word]
            mor[name] = _fold(psi.at[d], ob[anchor], images)
        comp1[d] = Fun(b.real[d].cat, psi.at[d], ob, mor)
    comp2 = {}
    for u in k.one_cells():
        a, bb = k.src1(u), k.tgt1(u)
        left = compose_fun(psi.on1[u], comp1[a])
        right = compose_fun(comp1[bb], rc.q_phi.on1[u])
        assert left == right, "classified map fails to commute at {}".format(u)
        comp2[u] = identity_nat(left)
    nu = WNat("strict", rc.q_phi, psi, comp1, comp2)
    problems = nu.validate()
    assert problems == [], problems
    assert vcompose_wnat(nu, rc.p).key() == sigma.key()
    return nu


# ----------------------------------------------------------------------------
# coalgebras, the comparison cell, and compatibility with a tight part


@dataclass(eq=False)
class CoalgebraStructure:
    """A strict section of the counit satisfying coassociativity."""

    s: WNat
    classifier: RelativeClassifier


def q_on_section(rc, s):
    """The classifier comonad applied to a strict map into it."""
    return classify(rc, vcompose_wnat(rc.inner.p, s))


def find_coalgebras(rc):
    """All strict coalgebra structures on the classified weight.

    A structure is a strict section s of the counit with
    comult o s = Q(s) o s; any two structures found are checked to be
    linked by an invertible modification.
    """
    phi = rc.input
    out = []
    for s in enumerate_w_transformations(phi, rc.q_phi, "strict"):
        if not is_identity_transformation(vcompose_wnat(rc.q, s)):
            continue
        lhs = vcompose_wnat(rc.comult, s)
        rhs = vcompose_wnat(q_on_section(rc, s), s)
        if lhs.key() != rhs.key():
            continue
        out.append(CoalgebraStructure(s, rc))
    for i, one in enumerate(out):
        for other in out[i + 1:]:
            assert _isomorphic_sections(one.s, other.s), (
                "coalgebra structures are not isomorphic"
            )
    return out


def _isomorphic_sections(s, t):
    for m in enumerate_modifications(s, t):
        if all(
            _nat_invertible(nat) for nat in m.comp.values()
        ):
            return True
    return False


def _nat_invertible(nat):
    cat = nat.src_fun.cod
    try:
        for m in nat.comp.values():
            _inverse_in(cat, m)
    except AssertionError:
        return False
    return True


@dataclass
class TauCell:
    """The canonical cell comparing the unit with a coalgebra structure.

    comp maps (shape object, input object) to a morphism of the
    classifier value: from the unit to the structure for the pseudo and
    oplax kinds, from the structure to the unit for the lax kind.  The
    modification packages the components over the tight part.
    """

    kind: str
    comp: dict
    modification: Modification


def _constrained_nats(f, g, pinned, q_fun):
    """Natural transformations f => g with constrained components.

    Components at pinned objects must be identities; every component
    must map to an identity under q_fun.
    """
    c, d = f.dom, f.cod
    obs = list(c.objects)
    cands = []
    for z in obs:
        if z in pinned:
            if f.ob[z] != g.ob[z]:
                return []
            cands.append((d.identity[f.ob[z]],))
        else:
            cands.append(
                tuple(
                    m
                    for m in d.hom(f.ob[z], g.ob[z])
                    if q_fun.cod.is_identity(q_fun.mor[m])
                )
            )
    ob_index = {z: i for i, z in enumerate(obs)}
    checks_at = {i: [] for i in range(len(obs))}
    for u in c.morphisms:
        i = max(ob_index[c.src[u]], ob_index[c.tgt[u]])
        checks_at[i].append(u)
    out = []
    assignment = {}

    def search(i):
        if i == len(obs):
            out.append(dict(assignment))
            return
        for m in cands[i]:
            assignment[obs[i]] = m
            ok = True
            for u in checks_at[i]:
                a, b = c.src[u], c.tgt[u]
                if d.compose(g.mor[u], assignment[a]) != d.compose(
                    assignment[b], f.mor[u]
                ):
                    ok = False
                    break
            if ok:
                search(i + 1)
        assignment.pop(obs[i], None)

    search(0)
    return out


def _tight_restriction(shape, weight):
    tau = tau_two_cat(shape)
    return CatWeight(
        tau,
        dict(weight.at),
        {f: weight.on1[f] for f in tau.one_cells()},
        {m: weight.on2[m] for m in tau.two_cells()},
    )


def _restrict_strict(shape, nu, dom_r, cod_r):
    tau = tau_two_cat(shape)
    return WNat(
        "strict",
        dom_r,
        cod_r,
        dict(nu.comp1),
        {t: nu.comp2[t] for t in tau.one_cells()},
    )


def compute_tau(rc, structure):
    """The comparison cell between the unit and a coalgebra structure.

    Computed from the cells making the counit left adjoint to the
    structure and right adjoint to the unit (with the handedness
    swapped for the lax kind); the two induced composites must agree.
    Raises AdjunctionDataMissing when either cell does not exist.
    """
    s = structure.s
    k = rc.shape.base
    phi = rc.input
    comp = {}
    for d in k.objects:
        cat = rc.q_phi.at[d]
        p_d, q_d, s_d = rc.p.comp1[d], rc.q.comp1[d], s.comp1[d]
        s_images = {s_d.ob[x] for x in phi.at[d].objects}
        p_images = {p_d.ob[x] for x in phi.at[d].objects}
        if rc.kind == "lax":
            alphas = _constrained_nats(
                compose_fun(s_d, q_d), identity_fun(cat), s_images, q_d
            )
            betas = _constrained_nats(
                identity_fun(cat), compose_fun(p_d, q_d), p_images, q_d
            )
        else:
            alphas = _constrained_nats(
                identity_fun(cat), compose_fun(s_d, q_d), s_images, q_d
            )
            betas = _constrained_nats(
                compose_fun(p_d, q_d), identity_fun(cat), p_images, q_d
            )
        if not alphas or not betas:
            raise AdjunctionDataMissing(d)
        candidates = set()
        for alpha in alphas:
            candidates.add(
                tuple(
                    (x, alpha[p_d.ob[x]]) for x in sorted(phi.at[d].objects)
                )
            )
        for beta in betas:
            candidates.add(
                tuple(
                    (x, beta[s_d.ob[x]]) for x in sorted(phi.at[d].objects)
                )
            )
        assert len(candidates) == 1, "comparison cell is not unique at " + d
        for x, m in candidates.pop():
            if rc.kind == "pseudo":
                _inverse_in(cat, m)
            comp[(d, x)] = m
    phi_r = _tight_restriction(rc.shape, phi)
    q_phi_r = _tight_restriction(rc.shape, rc.q_phi)
    p_r = _restrict_strict(rc.shape, rc.p, phi_r, q_phi_r)
    s_r = _restrict_strict(rc.shape, s, phi_r, q_phi_r)
    lo, hi = (s_r, p_r) if rc.kind == "lax" else (p_r, s_r)
    modification = Modification(
        lo,
        hi,
        {
            d: NatTrans(
                lo.comp1[d],
                hi.comp1[d],
                {x: comp[(d, x)] for x in phi.at[d].objects},
            )
            for d in k.objects
        },
    )
    problems = modification.validate()
    assert problems == [], problems
    return TauCell(rc.kind, comp, modification)


def f_coalgebra_check(w, structure):
    """Whether a coalgebra structure is compatible with a tight part.

    Two equivalent tests run and must agree: the structure composed
    with the embedding equals the unit composed with the embedding, and
    the comparison cell is the identity at every embedded object.
    """
    rc = structure.classifier
    assert rc.input.key() == w.phi_lambda.key(), "structure is not over this weight"
    k = w.shape.base
    by_functors = all(
        compose_fun(structure.s.comp1[d], w.phi[d])
        == compose_fun(rc.p.comp1[d], w.phi[d])
        for d in k.objects
    )
    tau = compute_tau(rc, structure)
    by_tau = all(
        rc.q_phi.at[d].is_identity(tau.comp[(d, w.phi[d].ob[x])])
        for d in k.objects
        for x in w.phi_tau.at[d].objects
    )
    assert by_functors == by_tau, "the two compatibility tests disagree"
    return by_functors
