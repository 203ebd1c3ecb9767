"""Finite categories as explicit composition tables.

A finite category is stored as plain data: object names, morphism names,
source and target maps, a chosen identity for each object, and a total
composition table keyed by pairs (after, then).  Nothing is lazy and
nothing is inferred; validation re-checks the category axioms from the
tables alone, so a FinCat produced by any code path can be audited.

Categories can also be presented by generators and relations.  A relation
is a pair of parallel paths of generators, written in diagram order (the
first generator is applied first).  realize_presentation quotients the
free category by orienting each relation toward its smaller side in a
length-then-lexicographic order, completing the resulting rewrite system
by resolving overlaps, and enumerating normal forms.  Termination is by
explicit budget, and the finished table is certified after the fact by
exhaustively checking associativity, unit laws, and both sides of every
relation, so no property of the rewriting theory is trusted blindly.

The module also provides functor categories, categories of elements for
Set-valued weights, connected component analysis, and small standard
categories (terminal, arrow, chains, chaotic, monoids) used throughout
the package.
"""

import itertools
from collections import deque
from dataclasses import dataclass

__all__ = [
    "FinCat",
    "Fun",
    "NatTrans",
    "SetWeight",
    "CatPresentation",
    "CompletionBudget",
    "BudgetExceeded",
    "Realization",
    "FunctorCategory",
    "ElementsCat",
    "ComponentReport",
    "validate_category",
    "realize_presentation",
    "functor_category",
    "category_of_elements",
    "components_with_initial",
    "objects_surjectivity",
    "compose_fun",
    "identity_fun",
    "enumerate_functors",
    "enumerate_nat_trans",
    "empty_cat",
    "terminal_cat",
    "discrete_cat",
    "arrow_cat",
    "iso_cat",
    "parallel_pair_cat",
    "composable_pair_cat",
    "chain_cat",
    "chaotic_cat",
    "monoid_cat",
    "generated_category",
    "opposite_cat",
    "subcat",
    "full_subcat",
    "inclusion_fun",
]


class BudgetExceeded(Exception):
    """Raised when a presentation does not finish within its budget."""


# ----------------------------------------------------------------------------
# categories


class FinCat:
    """A finite category given by explicit tables.

    objects: tuple of object names.
    morphisms: tuple of morphism names.
    src, tgt: morphism name -> object name.
    identity: object name -> morphism name.
    table: (after, then) -> composite, total on composable pairs.
    """

    def __init__(self, objects, morphisms, src, tgt, identity, table):
        self.objects = tuple(objects)
        self.morphisms = tuple(morphisms)
        self.src = dict(src)
        self.tgt = dict(tgt)
        self.identity = dict(identity)
        self.table = dict(table)
        assert len(set(self.objects)) == len(self.objects)
        assert len(set(self.morphisms)) == len(self.morphisms)
        self._hom = {}
        for m in self.morphisms:
            key = (self.src.get(m), self.tgt.get(m))
            self._hom.setdefault(key, []).append(m)

    def hom(self, a, b):
        """All morphisms a -> b, in morphism list order."""
        return tuple(self._hom.get((a, b), ()))

    def id_of(self, a):
        return self.identity[a]

    def is_identity(self, m):
        return self.identity[self.src[m]] == m

    def compose(self, after, then):
        """The composite (after o then); then is applied first."""
        assert self.tgt[then] == self.src[after], (after, then)
        return self.table[(after, then)]

    def compose_path(self, path, at=None):
        """Compose a path of morphisms written in diagram order.

        The empty path denotes the identity at the anchor object `at`.
        """
        if not path:
            assert at is not None, "empty path needs an anchor object"
            return self.identity[at]
        out = path[0]
        if at is not None:
            assert self.src[out] == at, (path, at)
        for m in path[1:]:
            out = self.compose(m, out)
        return out

    def composable_pairs(self):
        for f in self.morphisms:
            for g in self._hom_from(self.tgt[f]):
                yield g, f

    def _hom_from(self, a):
        for m in self.morphisms:
            if self.src[m] == a:
                yield m

    def key(self):
        """Canonical structural key, for equality and hashing."""
        return (
            self.objects,
            self.morphisms,
            tuple(sorted(self.src.items())),
            tuple(sorted(self.tgt.items())),
            tuple(sorted(self.identity.items())),
            tuple(sorted(self.table.items())),
        )

    def __eq__(self, other):
        return isinstance(other, FinCat) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "FinCat({} objects, {} morphisms)".format(
            len(self.objects), len(self.morphisms)
        )


def validate_category(c):
    """Check the category axioms; return a list of violation messages."""
    problems = []
    obs = set(c.objects)
    mors = set(c.morphisms)
    for m in c.morphisms:
        if c.src.get(m) not in obs:
            problems.append("morphism {} has bad source".format(m))
        if c.tgt.get(m) not in obs:
            problems.append("morphism {} has bad target".format(m))
    for a in c.objects:
        i = c.identity.get(a)
        if i not in mors:
            problems.append("object {} has no identity morphism".format(a))
        elif not (c.src[i] == a and c.tgt[i] == a):
            problems.append("identity of {} is not an endomorphism".format(a))
    for (g, f), h in c.table.items():
        if g not in mors or f not in mors or h not in mors:
            problems.append("table entry ({}, {}) uses unknown names".format(g, f))
            continue
        if c.tgt[f] != c.src[g]:
            problems.append("table entry ({}, {}) is not composable".format(g, f))
        elif not (c.src[h] == c.src[f] and c.tgt[h] == c.tgt[g]):
            problems.append("composite of ({}, {}) has wrong endpoints".format(g, f))
    for f in c.morphisms:
        for g in c.morphisms:
            if c.tgt.get(f) == c.src.get(g) and (g, f) not in c.table:
                problems.append("missing composite ({}, {})".format(g, f))
    if problems:
        return problems
    for a in c.objects:
        i = c.identity[a]
        for f in c.morphisms:
            if c.src[f] == a and c.table[(f, i)] != f:
                problems.append("right unit law fails at {}".format(f))
            if c.tgt[f] == a and c.table[(i, f)] != f:
                problems.append("left unit law fails at {}".format(f))
    for f in c.morphisms:
        for g in c.morphisms:
            if c.tgt[f] != c.src[g]:
                continue
            gf = c.table[(g, f)]
            for h in c.morphisms:
                if c.tgt[g] != c.src[h]:
                    continue
                if c.table[(h, gf)] != c.table[(c.table[(h, g)], f)]:
                    problems.append(
                        "associativity fails on ({}, {}, {})".format(h, g, f)
                    )
    return problems


def _checked(c):
    problems = validate_category(c)
    assert not problems, problems
    return c


# ----------------------------------------------------------------------------
# standard small categories


def empty_cat():
    return FinCat((), (), {}, {}, {}, {})


def terminal_cat(obj="*"):
    i = "1_" + obj
    return FinCat((obj,), (i,), {i: obj}, {i: obj}, {obj: i}, {(i, i): i})


def discrete_cat(names):
    names = tuple(names)
    ids = {a: "1_" + a for a in names}
    return FinCat(
        names,
        tuple(ids[a] for a in names),
        {ids[a]: a for a in names},
        {ids[a]: a for a in names},
        ids,
        {(ids[a], ids[a]): ids[a] for a in names},
    )


def arrow_cat(src="0", tgt="1", arrow="a"):
    """The walking arrow src -> tgt."""
    i0, i1 = "1_" + src, "1_" + tgt
    table = {
        (i0, i0): i0,
        (i1, i1): i1,
        (arrow, i0): arrow,
        (i1, arrow): arrow,
    }
    return _checked(
        FinCat(
            (src, tgt),
            (i0, i1, arrow),
            {i0: src, i1: tgt, arrow: src},
            {i0: src, i1: tgt, arrow: tgt},
            {src: i0, tgt: i1},
            table,
        )
    )


def iso_cat(src="0", tgt="1", fwd="i", bwd="j"):
    """The walking isomorphism src <~> tgt."""
    i0, i1 = "1_" + src, "1_" + tgt
    table = {
        (i0, i0): i0,
        (i1, i1): i1,
        (fwd, i0): fwd,
        (i1, fwd): fwd,
        (bwd, i1): bwd,
        (i0, bwd): bwd,
        (bwd, fwd): i0,
        (fwd, bwd): i1,
    }
    return _checked(
        FinCat(
            (src, tgt),
            (i0, i1, fwd, bwd),
            {i0: src, i1: tgt, fwd: src, bwd: tgt},
            {i0: src, i1: tgt, fwd: tgt, bwd: src},
            {src: i0, tgt: i1},
            table,
        )
    )


def parallel_pair_cat(src="a", tgt="b", one="k0", two="k1"):
    """Two objects with two parallel arrows between them."""
    i0, i1 = "1_" + src, "1_" + tgt
    table = {(i0, i0): i0, (i1, i1): i1}
    for k in (one, two):
        table[(k, i0)] = k
        table[(i1, k)] = k
    return _checked(
        FinCat(
            (src, tgt),
            (i0, i1, one, two),
            {i0: src, i1: tgt, one: src, two: src},
            {i0: src, i1: tgt, one: tgt, two: tgt},
            {src: i0, tgt: i1},
            table,
        )
    )


def composable_pair_cat():
    """The poset 0 < 1 < 2 viewed as a category."""
    return chain_cat(3)


def chain_cat(n, prefix=""):
    """The linear poset with n objects prefix0 < prefix1 < ..."""
    objs = tuple("{}{}".format(prefix, k) for k in range(n))
    mors = []
    src = {}
    tgt = {}
    for i in range(n):
        for j in range(i, n):
            name = "1_" + objs[i] if i == j else "le_{}_{}".format(i, j)
            mors.append(name)
            src[name] = objs[i]
            tgt[name] = objs[j]
    lookup = {}
    for m in mors:
        lookup[(src[m], tgt[m])] = m
    table = {}
    for f in mors:
        for g in mors:
            if tgt[f] == src[g]:
                table[(g, f)] = lookup[(src[f], tgt[g])]
    identity = {objs[i]: "1_" + objs[i] for i in range(n)}
    return _checked(FinCat(objs, tuple(mors), src, tgt, identity, table))


def chaotic_cat(names, prefix="c"):
    """Exactly one morphism between each ordered pair of objects."""
    names = tuple(names)
    mors = []
    src = {}
    tgt = {}
    lookup = {}
    identity = {}
    for a in names:
        for b in names:
            name = "1_" + a if a == b else "{}_{}_{}".format(prefix, a, b)
            mors.append(name)
            src[name] = a
            tgt[name] = b
            lookup[(a, b)] = name
            if a == b:
                identity[a] = name
    table = {}
    for f in mors:
        for g in mors:
            if tgt[f] == src[g]:
                table[(g, f)] = lookup[(src[f], tgt[g])]
    return _checked(FinCat(names, tuple(mors), src, tgt, identity, table))


def monoid_cat(elements, unit, mult, obj="*"):
    """One-object category from a finite monoid.

    mult is a dict keyed by pairs (x, y) giving x * y; the morphism for
    x * y composes as (x after y), matching left action on paths.
    """
    elements = tuple(elements)
    src = {x: obj for x in elements}
    tgt = dict(src)
    table = {(x, y): mult[(x, y)] for x in elements for y in elements}
    return _checked(FinCat((obj,), elements, src, tgt, {obj: unit}, table))


def opposite_cat(c):
    """Reverse all morphisms; names are kept."""
    table = {(f, g): h for (g, f), h in c.table.items()}
    return FinCat(c.objects, c.morphisms, dict(c.tgt), dict(c.src), dict(c.identity), table)


def subcat(c, objects, morphisms):
    """The subcategory on the given names; must be closed."""
    objects = tuple(o for o in c.objects if o in set(objects))
    morphisms = tuple(m for m in c.morphisms if m in set(morphisms))
    obs, mors = set(objects), set(morphisms)
    for m in morphisms:
        assert c.src[m] in obs and c.tgt[m] in obs, m
    for a in objects:
        assert c.identity[a] in mors, a
    table = {}
    for g in morphisms:
        for f in morphisms:
            if c.tgt[f] == c.src[g]:
                h = c.table[(g, f)]
                assert h in mors, (g, f)
                table[(g, f)] = h
    return FinCat(
        objects,
        morphisms,
        {m: c.src[m] for m in morphisms},
        {m: c.tgt[m] for m in morphisms},
        {a: c.identity[a] for a in objects},
        table,
    )


def full_subcat(c, objects):
    """The full subcategory on the given objects."""
    obs = set(objects)
    mors = [m for m in c.morphisms if c.src[m] in obs and c.tgt[m] in obs]
    return subcat(c, objects, mors)


def inclusion_fun(sub, c):
    """The inclusion of a subcategory built by subcat or full_subcat."""
    return Fun(sub, c, {a: a for a in sub.objects}, {m: m for m in sub.morphisms})


# ----------------------------------------------------------------------------
# functors and natural transformations


class Fun:
    """A functor between FinCats, as explicit object and morphism maps."""

    def __init__(self, dom, cod, ob, mor):
        self.dom = dom
        self.cod = cod
        self.ob = dict(ob)
        self.mor = dict(mor)

    def on_ob(self, a):
        return self.ob[a]

    def on_mor(self, m):
        return self.mor[m]

    def validate(self):
        problems = []
        for a in self.dom.objects:
            if self.ob.get(a) not in set(self.cod.objects):
                problems.append("object {} maps outside the codomain".format(a))
        for m in self.dom.morphisms:
            fm = self.mor.get(m)
            if fm not in set(self.cod.morphisms):
                problems.append("morphism {} maps outside the codomain".format(m))
                continue
            if self.cod.src[fm] != self.ob[self.dom.src[m]]:
                problems.append("functor breaks source of {}".format(m))
            if self.cod.tgt[fm] != self.ob[self.dom.tgt[m]]:
                problems.append("functor breaks target of {}".format(m))
        if problems:
            return problems
        for a in self.dom.objects:
            if self.mor[self.dom.identity[a]] != self.cod.identity[self.ob[a]]:
                problems.append("functor breaks identity at {}".format(a))
        for g, f in self.dom.composable_pairs():
            if self.mor[self.dom.compose(g, f)] != self.cod.compose(
                self.mor[g], self.mor[f]
            ):
                problems.append("functor breaks composite ({}, {})".format(g, f))
        return problems

    def key(self):
        return (
            tuple(self.ob[a] for a in self.dom.objects),
            tuple(self.mor[m] for m in self.dom.morphisms),
        )

    def __eq__(self, other):
        return (
            isinstance(other, Fun)
            and self.dom == other.dom
            and self.cod == other.cod
            and self.key() == other.key()
        )

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "Fun({!r})".format(self.key())


def identity_fun(c):
    return Fun(c, c, {a: a for a in c.objects}, {m: m for m in c.morphisms})


def compose_fun(after, then):
    """The composite functor (after o then)."""
    assert then.cod == after.dom
    return Fun(
        then.dom,
        after.cod,
        {a: after.ob[then.ob[a]] for a in then.dom.objects},
        {m: after.mor[then.mor[m]] for m in then.dom.morphisms},
    )


class NatTrans:
    """A natural transformation src_fun => tgt_fun, as a component table."""

    def __init__(self, src_fun, tgt_fun, comp):
        self.src_fun = src_fun
        self.tgt_fun = tgt_fun
        self.comp = dict(comp)

    def at(self, a):
        return self.comp[a]

    def validate(self):
        f, g = self.src_fun, self.tgt_fun
        problems = []
        if f.dom != g.dom or f.cod != g.cod:
            return ["the two functors are not parallel"]
        d = f.cod
        for a in f.dom.objects:
            m = self.comp.get(a)
            if m not in set(d.morphisms):
                problems.append("component at {} is not a morphism".format(a))
            elif not (d.src[m] == f.ob[a] and d.tgt[m] == g.ob[a]):
                problems.append("component at {} has wrong endpoints".format(a))
        if problems:
            return problems
        for u in f.dom.morphisms:
            a, b = f.dom.src[u], f.dom.tgt[u]
            if d.compose(g.mor[u], self.comp[a]) != d.compose(self.comp[b], f.mor[u]):
                problems.append("naturality fails at {}".format(u))
        return problems

    def key(self):
        return (
            self.src_fun.key(),
            self.tgt_fun.key(),
            tuple(self.comp[a] for a in self.src_fun.dom.objects),
        )

    def __eq__(self, other):
        return isinstance(other, NatTrans) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "NatTrans({!r})".format(self.key()[2])


def identity_nat(f):
    return NatTrans(f, f, {a: f.cod.identity[f.ob[a]] for a in f.dom.objects})


def vcompose_nat(after, then):
    """Vertical composite of natural transformations."""
    assert then.tgt_fun.key() == after.src_fun.key()
    d = then.src_fun.cod
    return NatTrans(
        then.src_fun,
        after.tgt_fun,
        {a: d.compose(after.comp[a], then.comp[a]) for a in then.src_fun.dom.objects},
    )


def enumerate_functors(c, d):
    """All functors c -> d, by backtracking over the tables."""
    if not c.objects:
        return [Fun(c, d, {}, {})]
    out = []
    mor_order = list(c.morphisms)
    mor_index = {m: i for i, m in enumerate(mor_order)}
    # For pruning, list the table constraints that close at each index.
    checks_at = {i: [] for i in range(len(mor_order))}
    for (g, f), h in c.table.items():
        i = max(mor_index[g], mor_index[f], mor_index[h])
        checks_at[i].append((g, f, h))
    for ob_images in itertools.product(d.objects, repeat=len(c.objects)):
        ob = dict(zip(c.objects, ob_images))
        cands = []
        feasible = True
        for m in mor_order:
            if c.is_identity(m):
                cs = (d.identity[ob[c.src[m]]],)
            else:
                cs = d.hom(ob[c.src[m]], ob[c.tgt[m]])
            if not cs:
                feasible = False
                break
            cands.append(cs)
        if not feasible:
            continue
        assignment = {}

        def search(i):
            if i == len(mor_order):
                out.append(Fun(c, d, ob, dict(assignment)))
                return
            for x in cands[i]:
                assignment[mor_order[i]] = x
                ok = all(
                    d.compose(assignment[g], assignment[f]) == assignment[h]
                    for g, f, h in checks_at[i]
                )
                if ok:
                    search(i + 1)
            del assignment[mor_order[i]]

        search(0)
    return out


def enumerate_nat_trans(f, g):
    """All natural transformations f => g, by backtracking over components."""
    assert f.dom == g.dom and f.cod == g.cod
    c, d = f.dom, f.cod
    obs = list(c.objects)
    ob_index = {a: i for i, a in enumerate(obs)}
    checks_at = {i: [] for i in range(len(obs))}
    for u in c.morphisms:
        i = max(ob_index[c.src[u]], ob_index[c.tgt[u]])
        checks_at[i].append(u)
    cands = [d.hom(f.ob[a], g.ob[a]) for a in obs]
    out = []
    assignment = {}

    def search(i):
        if i == len(obs):
            out.append(NatTrans(f, g, dict(assignment)))
            return
        for x in cands[i]:
            assignment[obs[i]] = x
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


class FunctorCategory:
    """The category of functors c -> d with natural transformations.

    cat: the FinCat whose objects are functor names F0, F1, ...
    functor_of: functor name -> Fun.
    nat_of: morphism name -> NatTrans.
    """

    def __init__(self, cat, functor_of, nat_of, name_of_functor):
        self.cat = cat
        self.functor_of = functor_of
        self.nat_of = nat_of
        self.name_of_functor = name_of_functor

    def name_of(self, fun):
        return self.name_of_functor[fun.key()]


def functor_category(c, d):
    """Build [c, d] as a FunctorCategory."""
    funs = sorted(enumerate_functors(c, d), key=lambda f: f.key())
    fnames = ["F{}".format(i) for i in range(len(funs))]
    name_of_functor = {f.key(): n for f, n in zip(funs, fnames)}
    functor_of = dict(zip(fnames, funs))
    nats = []
    for i, f in enumerate(funs):
        for j, g in enumerate(funs):
            for t in enumerate_nat_trans(f, g):
                nats.append((i, j, t))
    nats.sort(key=lambda x: (x[0], x[1], x[2].key()))
    mnames = []
    nat_of = {}
    src = {}
    tgt = {}
    identity = {}
    name_by_key = {}
    for k, (i, j, t) in enumerate(nats):
        name = "n{}".format(k)
        mnames.append(name)
        nat_of[name] = t
        src[name] = fnames[i]
        tgt[name] = fnames[j]
        name_by_key[t.key()] = name
        if i == j and all(
            t.comp[a] == d.identity[funs[i].ob[a]] for a in c.objects
        ):
            identity[fnames[i]] = name
    table = {}
    for name_f in mnames:
        for name_g in mnames:
            if tgt[name_f] == src[name_g]:
                comp = vcompose_nat(nat_of[name_g], nat_of[name_f])
                table[(name_g, name_f)] = name_by_key[comp.key()]
    cat = _checked(FinCat(fnames, mnames, src, tgt, identity, table))
    return FunctorCategory(cat, functor_of, nat_of, name_of_functor)


# ----------------------------------------------------------------------------
# Set-valued weights and categories of elements


class SetWeight:
    """A Set-valued functor on a FinCat: a finite set for each object."""

    def __init__(self, base, sets, maps):
        self.base = base
        self.sets = {a: tuple(xs) for a, xs in sets.items()}
        self.maps = {m: dict(f) for m, f in maps.items()}

    def at(self, a):
        return self.sets[a]

    def on(self, m):
        return self.maps[m]

    def validate(self):
        problems = []
        c = self.base
        for a in c.objects:
            if a not in self.sets:
                problems.append("no set at object {}".format(a))
        for m in c.morphisms:
            if m not in self.maps:
                problems.append("no map at morphism {}".format(m))
        if problems:
            return problems
        for m in c.morphisms:
            f = self.maps[m]
            dom, cod = set(self.sets[c.src[m]]), set(self.sets[c.tgt[m]])
            if set(f.keys()) != dom or not set(f.values()) <= cod:
                problems.append("map at {} has wrong endpoints".format(m))
        if problems:
            return problems
        for a in c.objects:
            i = c.identity[a]
            if any(self.maps[i][x] != x for x in self.sets[a]):
                problems.append("identity acts nontrivially at {}".format(a))
        for g, f in c.composable_pairs():
            h = c.compose(g, f)
            for x in self.sets[c.src[f]]:
                if self.maps[h][x] != self.maps[g][self.maps[f][x]]:
                    problems.append(
                        "functoriality fails on ({}, {}) at {}".format(g, f, x)
                    )
        return problems

    def key(self):
        return (
            tuple((a, self.sets[a]) for a in self.base.objects),
            tuple(
                (m, tuple(sorted(self.maps[m].items())))
                for m in self.base.morphisms
            ),
        )

    def __eq__(self, other):
        return (
            isinstance(other, SetWeight)
            and self.base == other.base
            and self.key() == other.key()
        )

    def __hash__(self):
        return hash(self.key())


class ElementsCat:
    """The category of elements of a Set-valued weight.

    cat: the FinCat of elements.
    projection: the discrete fibration down to the base.
    object_of: element object name -> (base object, element).
    morphism_of: element morphism name -> (base morphism, element).
    """

    def __init__(self, cat, projection, object_of, morphism_of, name_of):
        self.cat = cat
        self.projection = projection
        self.object_of = object_of
        self.morphism_of = morphism_of
        self.name_of = name_of

    def lift(self, m, x):
        """The unique lift of base morphism m with source element x."""
        return self.name_of[(m, x)]


def category_of_elements(w):
    """Build the category of elements of a SetWeight.

    Objects are pairs (base object, element); a morphism (m, x) runs from
    (src m, x) to (tgt m, w(m)(x)).  The projection forgets the element
    and is a discrete fibration.
    """
    c = w.base
    objs = []
    object_of = {}
    ob_name = {}
    for a in c.objects:
        for x in w.at(a):
            name = "{}:{}".format(a, x)
            assert name not in object_of, "element name collision"
            objs.append(name)
            object_of[name] = (a, x)
            ob_name[(a, x)] = name
    mors = []
    morphism_of = {}
    name_of = {}
    src = {}
    tgt = {}
    for m in c.morphisms:
        a = c.src[m]
        for x in w.at(a):
            name = "{}:{}".format(m, x)
            assert name not in morphism_of, "element name collision"
            mors.append(name)
            morphism_of[name] = (m, x)
            name_of[(m, x)] = name
            src[name] = ob_name[(a, x)]
            tgt[name] = ob_name[(c.tgt[m], w.on(m)[x])]
    identity = {
        ob_name[(a, x)]: name_of[(c.identity[a], x)]
        for a in c.objects
        for x in w.at(a)
    }
    table = {}
    for name_f in mors:
        mf, xf = morphism_of[name_f]
        for name_g in mors:
            mg, xg = morphism_of[name_g]
            if tgt[name_f] == src[name_g]:
                table[(name_g, name_f)] = name_of[(c.compose(mg, mf), xf)]
    cat = _checked(FinCat(objs, mors, src, tgt, identity, table))
    projection = Fun(
        cat,
        c,
        {n: object_of[n][0] for n in objs},
        {n: morphism_of[n][0] for n in mors},
    )
    assert not projection.validate()
    return ElementsCat(cat, projection, object_of, morphism_of, name_of)


@dataclass(frozen=True)
class ComponentReport:
    """One connected component of a category, with its initial objects."""

    objects: tuple
    initials: tuple

    @property
    def has_initial(self):
        return bool(self.initials)


def components_with_initial(c):
    """Connected components of c, each with its list of initial objects.

    Initial means exactly one morphism to every object of the component
    (equivalently of the whole category, since morphisms stay within a
    component).
    """
    parent = {a: a for a in c.objects}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for m in c.morphisms:
        ra, rb = find(c.src[m]), find(c.tgt[m])
        if ra != rb:
            parent[ra] = rb
    groups = {}
    for a in c.objects:
        groups.setdefault(find(a), []).append(a)
    reports = []
    for root in sorted(groups, key=lambda r: c.objects.index(r)):
        members = sorted(groups[root], key=c.objects.index)
        initials = tuple(
            i for i in members if all(len(c.hom(i, b)) == 1 for b in members)
        )
        reports.append(ComponentReport(tuple(members), initials))
    return reports


def objects_surjectivity(f):
    """Classify a functor's object map: bijective, surjective, or neither."""
    image = {f.ob[a] for a in f.dom.objects}
    if image == set(f.cod.objects):
        if len(f.dom.objects) == len(f.cod.objects):
            return "bijective_on_objects"
        return "surjective_on_objects"
    return "neither"


# ----------------------------------------------------------------------------
# presentations and rewriting


@dataclass(frozen=True)
class CatPresentation:
    """A category presented by generators and relations.

    generators: tuples (name, src, tgt).
    relations: pairs of parallel paths of generator names, written in
    diagram order (the first generator in a path is applied first).
    """

    objects: tuple
    generators: tuple
    relations: tuple

    def __post_init__(self):
        gens = {g[0] for g in self.generators}
        assert len(gens) == len(self.generators), "duplicate generator names"
        src = {name: a for name, a, _ in self.generators}
        tgt = {name: b for name, _, b in self.generators}
        obs = set(self.objects)
        for name, a, b in self.generators:
            assert a in obs and b in obs, (name, a, b)
        for left, right in self.relations:
            for path in (left, right):
                assert all(g in gens for g in path), path
                for g1, g2 in zip(path, path[1:]):
                    assert tgt[g1] == src[g2], "path not composable: {}".format(path)
            le = self._endpoints(left, src, tgt)
            ri = self._endpoints(right, src, tgt)
            assert le is None or ri is None or le == ri, (left, right)
            assert le is not None or ri is not None, "two empty relation sides"

    @staticmethod
    def _endpoints(path, src, tgt):
        if not path:
            return None
        return (src[path[0]], tgt[path[-1]])


@dataclass(frozen=True)
class CompletionBudget:
    """Explicit limits for realizing a presentation."""

    max_morphisms: int
    max_steps: int

    def __post_init__(self):
        assert self.max_morphisms > 0
        assert self.max_steps > 0


def default_budget(n_generators):
    """A generous budget scaled to the presentation size."""
    n = max(n_generators, 2)
    return CompletionBudget(max_morphisms=10 * n * n, max_steps=1_000_000)


class _Rewriter:
    """Oriented path rewriting with budget accounting."""

    def __init__(self, gen_order, src, tgt, budget):
        self.gen_order = {g: i for i, g in enumerate(gen_order)}
        self.src = src
        self.tgt = tgt
        self.budget = budget
        self.steps = 0
        self.rules = []

    def path_key(self, path):
        return (len(path), tuple(self.gen_order[g] for g in path))

    def tick(self):
        self.steps += 1
        if self.steps > self.budget.max_steps:
            raise BudgetExceeded(
                "rewriting exceeded {} steps".format(self.budget.max_steps)
            )

    def add_relation(self, left, right):
        left, right = self.reduce(left), self.reduce(right)
        if left == right:
            return False
        if self.path_key(left) < self.path_key(right):
            left, right = right, left
        self.rules.append((left, right))
        return True

    def reduce(self, word):
        word = tuple(word)
        changed = True
        while changed:
            changed = False
            for lhs, rhs in self.rules:
                n = len(lhs)
                for i in range(len(word) - n + 1):
                    if word[i : i + n] == lhs:
                        self.tick()
                        word = word[:i] + rhs + word[i + n :]
                        changed = True
                        break
                if changed:
                    break
        return word

    def complete(self):
        """Resolve overlaps until no new rule appears."""
        while True:
            new = []
            rules = list(self.rules)
            for l1, r1 in rules:
                for l2, r2 in rules:
                    # suffix of l1 meets prefix of l2
                    for k in range(1, min(len(l1), len(l2)) + 1):
                        if l1[-k:] == l2[:k]:
                            a = self.reduce(r1 + l2[k:])
                            b = self.reduce(l1[:-k] + r2)
                            if a != b:
                                new.append((a, b))
                    # l2 strictly inside l1
                    if len(l2) < len(l1):
                        for i in range(len(l1) - len(l2) + 1):
                            if l1[i : i + len(l2)] == l2:
                                a = self.reduce(r1)
                                b = self.reduce(l1[:i] + r2 + l1[i + len(l2) :])
                                if a != b:
                                    new.append((a, b))
            grew = False
            for a, b in new:
                if self.add_relation(a, b):
                    grew = True
            if not grew:
                return


class Realization:
    """A presented category realized as a FinCat.

    cat: the realized category; morphism names are normal forms rendered
    in applicative order, or 1_x for identities.
    generator_morphism: generator name -> morphism name.
    """

    def __init__(self, cat, generator_morphism, word_of, presentation):
        self.cat = cat
        self.generator_morphism = generator_morphism
        self.word_of = word_of
        self.presentation = presentation

    def eval_path(self, path, at=None):
        """The morphism named by a diagram-order path of generators."""
        mors = [self.generator_morphism[g] for g in path]
        return self.cat.compose_path(tuple(mors), at=at)


def _render(word, at):
    if not word:
        return "1_" + at
    return ".".join(reversed(word))


def realize_presentation(p, budget=None):
    """Quotient the free category on p by its relations.

    Raises BudgetExceeded when completion or enumeration does not finish
    within the budget; the finished table is re-verified exhaustively.
    """
    if budget is None:
        budget = default_budget(len(p.generators))
    gen_order = [g[0] for g in p.generators]
    src = {name: a for name, a, _ in p.generators}
    tgt = {name: b for name, _, b in p.generators}
    rw = _Rewriter(gen_order, src, tgt, budget)
    for left, right in p.relations:
        rw.add_relation(tuple(left), tuple(right))
    rw.complete()

    def word_src(word, at):
        return src[word[0]] if word else at

    def word_tgt(word, at):
        return tgt[word[-1]] if word else at

    # Enumerate normal forms by extending on the right; every prefix of a
    # normal word is normal, so this reaches them all.
    found = {}
    queue = deque()
    for a in p.objects:
        key = (a, ())
        found[key] = True
        queue.append(key)
    while queue:
        a, word = queue.popleft()
        cur_tgt = word_tgt(word, a)
        for g in gen_order:
            if src[g] != cur_tgt:
                continue
            new = rw.reduce(word + (g,))
            key = (a, new)
            if key not in found:
                found[key] = True
                queue.append(key)
                if len(found) > budget.max_morphisms:
                    raise BudgetExceeded(
                        "more than {} morphisms".format(budget.max_morphisms)
                    )

    ordered = sorted(found, key=lambda k: (p.objects.index(k[0]), rw.path_key(k[1])))
    names = {}
    for a, word in ordered:
        name = _render(word, a)
        names[(a, word)] = name
    assert len(set(names.values())) == len(names), "normal form name collision"

    def fold(a, word, extra):
        out = word
        for g in extra:
            out = rw.reduce(out + (g,))
            assert (a, out) in found, "fold left the enumerated set"
        return out

    mors = [names[k] for k in ordered]
    msrc = {names[(a, w)]: word_src(w, a) for a, w in ordered}
    mtgt = {names[(a, w)]: word_tgt(w, a) for a, w in ordered}
    identity = {a: names[(a, ())] for a in p.objects}
    table = {}
    for a1, w1 in ordered:
        t1 = word_tgt(w1, a1)
        for a2, w2 in ordered:
            if word_src(w2, a2) != t1:
                continue
            comp = fold(a1, w1, w2)
            table[(names[(a2, w2)], names[(a1, w1)])] = names[(a1, comp)]
    cat = FinCat(tuple(p.objects), tuple(mors), msrc, mtgt, identity, table)

    # Certify: category axioms, relation soundness, fold self-consistency.
    problems = validate_category(cat)
    assert not problems, problems
    for left, right in p.relations:
        anchor = src[left[0]] if left else src[right[0]]
        le = fold(anchor, (), tuple(left))
        ri = fold(anchor, (), tuple(right))
        assert le == ri, "relation not satisfied: {} vs {}".format(left, right)
    for a, w in ordered:
        assert fold(a, (), w) == w, "fold is inconsistent on {}".format(w)

    generator_morphism = {}
    for g in gen_order:
        word = rw.reduce((g,))
        generator_morphism[g] = names[(src[g], word)]
    word_of = {names[k]: k for k in ordered}
    return Realization(cat, generator_morphism, word_of, p)


def generated_category(objects, morphisms, compose, budget=None):
    """Close a set of concretely given morphisms under composition.

    morphisms: dict name -> (src, tgt, value) where value is any hashable
    semantic representative (for example a tuple encoding a function).
    compose: a function (after_value, then_value) -> value.
    Identities must be included with names 1_<obj>.

    Returns a FinCat plus the dict name -> value, with composites named
    after the first path that produced them.
    """
    if budget is None:
        budget = default_budget(len(morphisms))
    src = {}
    tgt = {}
    value = {}
    by_key = {}
    for name, (a, b, v) in morphisms.items():
        src[name] = a
        tgt[name] = b
        value[name] = v
        key = (a, b, v)
        assert key not in by_key, "duplicate morphism value: {}".format(name)
        by_key[key] = name
    for a in objects:
        assert "1_" + a in morphisms, "missing identity for {}".format(a)
    names = list(morphisms)
    steps = 0
    changed = True
    while changed:
        changed = False
        for g in list(names):
            for f in list(names):
                if tgt[f] != src[g]:
                    continue
                steps += 1
                if steps > budget.max_steps:
                    raise BudgetExceeded("composition closure took too long")
                v = compose(value[g], value[f])
                key = (src[f], tgt[g], v)
                if key not in by_key:
                    name = "{}.{}".format(g, f)
                    assert name not in value
                    by_key[key] = name
                    src[name] = src[f]
                    tgt[name] = tgt[g]
                    value[name] = v
                    names.append(name)
                    changed = True
                    if len(names) > budget.max_morphisms:
                        raise BudgetExceeded(
                            "more than {} morphisms".format(budget.max_morphisms)
                        )
    table = {}
    for g in names:
        for f in names:
            if tgt[f] == src[g]:
                v = compose(value[g], value[f])
                table[(g, f)] = by_key[(src[f], tgt[g], v)]
    identity = {a: "1_" + a for a in objects}
    cat = _checked(
        FinCat(tuple(objects), tuple(names), src, tgt, identity, table)
    )
    return cat, value
