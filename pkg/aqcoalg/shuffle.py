# -*- coding: utf-8 -*-

"""
The bigraded cohomotopy ``π^*(C•)`` of a cosimplicial coalgebra.

The coproduct is the dual of the Eilenberg-Zilber shuffle map. A class in
``π^n`` is represented by a cocycle x of level n; with ``Δ(x) = Σ a ⊗ b``
its coproduct is

    Σ_{p+q=n} Σ_{(μ,ν)} sgn(μ,ν) [s^ν a] ⊗ [s^μ b],

the inner sum running over the (p, q)-shuffles, where ``s^ν`` is the
composite of the codegeneracies indexed by ν. Classes of the terms are
taken through a retraction of the unnormalized cochains onto cohomotopy.

The same formula turns ``π^*`` of a cosimplicial comodule into a comodule
over ``π^*(C•)``, and the cobar complex over these bigraded objects computes
``Cotor_{π^*C•}(π^*B•, π^*A•)``.

Author: Gertjan van den Burg

"""

import functools
import itertools

from .cosimplicial import CohomotopyGroup
from .cosimplicial import normalize
from .cotor import cobar_coface
from .linalg import add_term
from .linalg import linear_kernel
from .linalg import linear_rank
from .validation import ValidationReport


@functools.lru_cache(maxsize=None)
def shuffles(p, q):
    """
    The (p, q)-shuffles of ``{0, ..., p+q-1}``.

    Returns a tuple of triples ``(mu, nu, inversions)`` with mu of size p,
    nu its complement and ``inversions`` the number of inversions of the
    shuffle permutation.
    """
    n = p + q
    out = []
    for mu in itertools.combinations(range(n), p):
        chosen = set(mu)
        nu = tuple(j for j in range(n) if j not in chosen)
        inversions = sum(m - i for i, m in enumerate(mu))
        out.append((mu, nu, inversions))
    return tuple(out)


def codegeneracy_composite(X, n, indices, vector):
    """Apply ``s^j`` for j in ``indices``, largest first, from level n."""
    level = n
    for j in reversed(indices):
        vector = X.codegeneracy(level - 1, j)(vector)
        level -= 1
        if not vector:
            break
    return vector


class Retraction(object):
    """
    A chain map from the unnormalized cochains of X onto ``π^*(X)``.

    On level s a vector is projected onto the cocycles along the labels
    that are not pivots of the cocycle basis, and then sent to its class.
    Coboundaries are cocycles of class zero, so the map kills them.
    """

    def __init__(self, X, s_max, normalized=None):
        if s_max > X.S - 1:
            raise ValueError(
                "π^%i needs levels up to %i but %s stops at %i"
                % (s_max, s_max + 1, X.name, X.S)
            )
        self.X = X
        self.field = X.field
        N = normalized if normalized is not None else normalize(X)
        self.groups = [CohomotopyGroup(X, s, normalized=N) for s in range(s_max + 1)]
        self._cocycles = {}

    @property
    def s_max(self):
        return len(self.groups) - 1

    def cocycles(self, s, t):
        key = (s, t)
        if key not in self._cocycles:
            moore = self.X.moore_differential(s)
            self._cocycles[key] = linear_kernel(
                self.field, self.X.carrier(s).basis(t), moore.image_of
            )
        return self._cocycles[key]

    def __call__(self, s, vector):
        level = self.X.carrier(s)
        by_degree = {}
        for x, c in vector.items():
            by_degree.setdefault(level.degree(x), {})[x] = c
        projected = {}
        for t, part in by_degree.items():
            Z = self.cocycles(s, t)
            projected.update(Z.combination(Z.coordinates(part)))
        return self.groups[s].class_of(projected) if projected else {}


def dual_shuffle(field, pairs, n, left, right):
    """
    Send ``Σ a ⊗ b`` on level n to ``⊕ π^p(left) ⊗ π^(n-p)(right)``.

    Parameters
    ----------
    field : Field
        The coefficients.

    pairs : dict
        Maps ``(a, b)`` to coefficients, with a and b labels of level n of
        ``left.X`` and ``right.X``.

    n : int
        The level.

    left, right : Retraction
        Retractions of the two factors.

    Returns
    -------
    image : dict
        Maps pairs of cohomotopy labels to coefficients.

    """
    by_left = {}
    for (a, b), c in pairs.items():
        add_term(field, by_left.setdefault(a, {}), b, c)
    out = {}
    for p in range(n + 1):
        q = n - p
        if p > left.s_max or q > right.s_max:
            continue
        for mu, nu, inversions in shuffles(p, q):
            sign = field.sign(inversions)
            for a, part in by_left.items():
                lhs = left(p, codegeneracy_composite(left.X, n, nu, {a: field.one}))
                if not lhs:
                    continue
                rhs = right(q, codegeneracy_composite(right.X, n, mu, part))
                for g, cg in lhs.items():
                    for h, ch in rhs.items():
                        add_term(
                            field, out, (g, h), field.mul(sign, field.mul(cg, ch))
                        )
    return out


class _Bigraded(object):
    """Labels of ``π^s`` for s up to ``s_max``, by bidegree."""

    def __init__(self, retraction):
        self.retraction = retraction
        self.field = retraction.field
        self.bidegree = {}
        self.representatives = {}
        for s, group in enumerate(retraction.groups):
            for h, rep in group.representatives.items():
                self.bidegree[h] = (s, group.space.degree(h))
                self.representatives[h] = rep

    def labels(self):
        return list(self.bidegree)

    def dims(self):
        """Dimensions ``{s: [dim per internal degree]}``."""
        return {s: g.dims() for s, g in enumerate(self.retraction.groups)}


class ShuffleCoalgebra(_Bigraded):
    """
    ``π^*(C•)`` of a cosimplicial coalgebra as a bigraded coalgebra.

    Parameters
    ----------
    X : CosimplicialObject
        A cosimplicial coalgebra.

    s_max : int
        The largest cohomotopy degree kept, at most ``X.S - 1``. The
        coproduct of a class in ``π^n`` only involves ``π^p`` with p <= n.

    """

    def __init__(self, X, s_max, retraction=None):
        if X.kind != "coalgebra":
            raise ValueError("The shuffle coproduct needs a cosimplicial coalgebra")
        super().__init__(retraction or Retraction(X, s_max))
        field = self.field
        self.coproduct = {}
        self.counit = {}
        for h, rep in self.representatives.items():
            n = self.bidegree[h][0]
            pairs = X.levels[n].delta_vector(rep)
            self.coproduct[h] = dual_shuffle(
                field, pairs, n, self.retraction, self.retraction
            )
            if n == 0:
                e = X.levels[0].epsilon_vector(rep)
                if e:
                    self.counit[h] = e

    def delta(self, label):
        return self.coproduct[label]

    def delta_vector(self, vector):
        out = {}
        for h, c in vector.items():
            for pair, cp in self.coproduct[h].items():
                add_term(self.field, out, pair, self.field.mul(c, cp))
        return out

    def check(self):
        """Coassociativity and the counit laws, with a witness per failure."""
        field = self.field
        report = ValidationReport("π^*(%s)" % self.retraction.X.name)
        for h, image in self.coproduct.items():
            lhs, rhs = {}, {}
            for (a, b), c in image.items():
                for (x, y), cx in self.coproduct[a].items():
                    add_term(field, lhs, (x, y, b), field.mul(c, cx))
                for (x, y), cy in self.coproduct[b].items():
                    add_term(field, rhs, (a, x, y), field.mul(c, cy))
            if lhs != rhs:
                report.add("coassociativity", h)
            left, right = {}, {}
            for (a, b), c in image.items():
                if a in self.counit:
                    add_term(field, left, b, field.mul(c, self.counit[a]))
                if b in self.counit:
                    add_term(field, right, a, field.mul(c, self.counit[b]))
            if left != {h: field.one} or right != {h: field.one}:
                report.add("counit", h)
        return report


class ShuffleComodule(_Bigraded):
    """
    ``π^*`` of one leg of a two-sided cobar construction as a comodule over
    the shuffle coalgebra of the base.

    ``side`` is ``left`` for a right coaction ``b -> Σ b' ⊗ c`` and
    ``right`` for a left coaction ``a -> Σ c ⊗ a'``.
    """

    def __init__(self, leg, side, base):
        super().__init__(Retraction(leg.vertical, base.retraction.s_max))
        self.side = side
        self.base = base
        field = self.field
        self.coaction = {}
        for h, rep in self.representatives.items():
            n = self.bidegree[h][0]
            pairs = {}
            for x, c in rep.items():
                for pair, cp in leg.coaction(n, x).items():
                    add_term(field, pairs, pair, field.mul(c, cp))
            if side == "left":
                image = dual_shuffle(field, pairs, n, self.retraction, base.retraction)
            else:
                image = dual_shuffle(field, pairs, n, base.retraction, self.retraction)
            self.coaction[h] = image

    def rho(self, label):
        return self.coaction[label]

    def check(self):
        field = self.field
        base = self.base
        report = ValidationReport("π^* comodule")
        for h, image in self.coaction.items():
            lhs, rhs = {}, {}
            unit = {}
            for pair, c in image.items():
                m, k = pair if self.side == "left" else pair[::-1]
                for pm, cm in self.coaction[m].items():
                    x, y = pm if self.side == "left" else pm[::-1]
                    key = (x, y, k) if self.side == "left" else (k, y, x)
                    add_term(field, lhs, key, field.mul(c, cm))
                for (x, y), cy in base.coproduct[k].items():
                    key = (m, x, y) if self.side == "left" else (x, y, m)
                    add_term(field, rhs, key, field.mul(c, cy))
                if k in base.counit:
                    add_term(field, unit, m, field.mul(c, base.counit[k]))
            if lhs != rhs:
                report.add("coassociativity of the coaction", h)
            if unit != {h: field.one}:
                report.add("counit of the coaction", h)
        return report


class BigradedCotor(object):
    """
    ``Cotor^p_{π^*C}(π^*B, π^*A)^{q,t}`` in the box ``p + q <= bound``.

    ``entries`` maps ``(p, q, t)`` to the dimension, q being the
    cohomotopy degree and t the internal degree.
    """

    def __init__(self, entries, bound):
        self.entries = {k: v for k, v in entries.items() if v}
        self.bound = bound

    def dim(self, p, q, t=None):
        if t is not None:
            return self.entries.get((p, q, t), 0)
        return sum(v for (a, b, _), v in self.entries.items() if (a, b) == (p, q))

    def dims(self):
        """Dimensions ``{(p, q): [dim per internal degree]}``."""
        top = max([t for (_, _, t) in self.entries] + [0])
        out = {}
        for (p, q, t), dim in self.entries.items():
            out.setdefault((p, q), [0] * (top + 1))[t] = dim
        return dict(sorted(out.items()))


def _cobar_blocks(factors, bidegree, q_top, D):
    """Labels of ``B ⊗ C^(⊗p) ⊗ A`` grouped by total bidegree."""
    partial = {(): (0, 0)}
    for labels in factors:
        nxt = {}
        for label, (s, t) in partial.items():
            for x in labels:
                sx, tx = bidegree[x]
                if s + sx <= q_top and t + tx <= D:
                    nxt[label + (x,)] = (s + sx, t + tx)
        partial = nxt
    blocks = {}
    for label, key in partial.items():
        blocks.setdefault(key, []).append(label)
    return blocks


def bigraded_cotor(left, base, right, bound, verbose=False):
    """
    Cotor over the shuffle coalgebra ``π^*C•`` from the cobar complex of
    bigraded objects.

    Parameters
    ----------
    left, right : CobarLeg
        The two legs, as in :func:`aqcoalg.cotor.two_sided_cobar`.

    base : CosimplicialObject
        The base cosimplicial coalgebra.

    bound : int
        Entries with ``p + q <= bound`` are computed; needs
        ``bound <= base.S - 1``.

    Returns
    -------
    cotor : BigradedCotor
        The dimensions, together with the shuffle structures as attributes
        ``coalgebra``, ``left`` and ``right``.

    """
    log = lambda *a, **kw: print(*a, **kw) if verbose else None
    field = base.field
    C = ShuffleCoalgebra(base, bound)
    B = ShuffleComodule(left, "left", C)
    A = ShuffleComodule(right, "right", C)
    log("π^*C: %r" % C.dims())
    # the three label sets overlap, so labels are tagged with their factor
    bidegree = {}
    for obj in (B, C, A):
        bidegree.update({(obj, h): st for h, st in obj.bidegree.items()})
    D = min(X.carrier(0).max_degree for X in (left.vertical, base, right.vertical))

    def tagged(obj):
        return [(obj, h) for h in obj.labels()]

    def first(x):
        return {((B, b), (C, c)): v for (b, c), v in B.rho(x[1]).items()}

    def delta(x):
        return {((C, a), (C, b)): v for (a, b), v in C.delta(x[1]).items()}

    def last(x):
        return {((C, c), (A, a)): v for (c, a), v in A.rho(x[1]).items()}

    # d preserves (q, t), so ranks are taken block by block
    sizes = {}
    ranks = {}
    for p in range(bound + 1):
        factors = [tagged(B)] + [tagged(C)] * p + [tagged(A)]
        for (q, t), labels in _cobar_blocks(factors, bidegree, bound - p, D).items():

            def image(x, p=p):
                out = {}
                for i in range(p + 2):
                    sign = field.sign(i)
                    for y, c in cobar_coface(x, i, p, first, delta, last).items():
                        add_term(field, out, y, field.mul(sign, c))
                return out

            sizes[(p, q, t)] = len(labels)
            ranks[(p, q, t)] = linear_rank(field, labels, image)
    entries = {}
    for (p, q, t), size in sizes.items():
        entries[(p, q, t)] = size - ranks[(p, q, t)] - ranks.get((p - 1, q, t), 0)
    log("bigraded E_2: %r" % entries)
    result = BigradedCotor(entries, bound)
    result.coalgebra, result.left, result.right = C, B, A
    return result
