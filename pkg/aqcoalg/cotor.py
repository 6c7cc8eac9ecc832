# -*- coding: utf-8 -*-

"""
Cofree resolutions, Cotor, derived cotensor products and homotopy pullbacks.

Cotor is computed either from the resolution built by repeatedly embedding a
comodule into a cofree one and passing to the cokernel, or from the
unnormalized two-sided cobar complex. Derived cotensor products of
cosimplicial objects are the diagonal of the two-sided cobar construction,
which replaces one leg degreewise by cofree comodules.

Author: Gertjan van den Burg

"""

from .caps import Caps
from .coalgebra import Coalgebra
from .coalgebra import Comodule
from .coalgebra import quotient_comodule
from .coalgebra import star_and_circ
from .coalgebra import tensor_coalgebra
from .cosimplicial import CochainComplex
from .cosimplicial import CosimplicialMap
from .cosimplicial import CosimplicialObject
from .cosimplicial import cohomotopy
from .cosimplicial import constant
from .cosimplicial import normalize
from .exceptions import CrossCheckMismatch
from .exceptions import ValidationError
from .linalg import BigradedVectorSpace
from .linalg import GradedLinearMap
from .linalg import add_term
from .linalg import row_reduce
from .linalg import tensor
from .linalg import tensor_many
from .validation import ValidationReport


class CofreeResolution(object):
    """
    A resolution ``A -> I^0 -> I^1 -> ...`` by cofree comodules.

    ``I^p = C ⊗ W_p`` where ``W_p`` is the underlying space of the stage
    ``B_p``, with ``B_0 = A`` and ``B_(p+1) = coker(B_p -> I^p)``. The
    coaugmentation of each stage is its coaction.

    """

    def __init__(self, comodule, stages, cofrees, coaugmentations, differentials):
        self.comodule = comodule
        self.base = comodule.base
        self.stages = stages
        self.cofrees = cofrees
        self.coaugmentations = coaugmentations
        self.differentials = differentials

    @property
    def p_max(self):
        return len(self.cofrees) - 1

    def cogenerators(self, p):
        """The space ``W_p`` with ``I^p = C ⊗ W_p``."""
        return self.stages[p].carrier

    def dims(self):
        return [I.carrier.dims() for I in self.cofrees]

    def check_exact(self):
        """
        Verify exactness by rank bookkeeping: in every internal degree,
        ``rank d^p + rank d^(p-1) = dim I^p``, with the coaugmentation in
        place of ``d^(-1)`` at ``p = 0``.
        """
        report = ValidationReport("cofree resolution")
        D = self.comodule.max_degree
        for p in range(self.p_max):
            for q in range(D + 1):
                into = (
                    self.comodule.carrier.dim(q)
                    if p == 0
                    else row_reduce(self.differentials[p - 1].block(q)).rank
                )
                out = row_reduce(self.differentials[p].block(q)).rank
                if into + out != self.cofrees[p].carrier.dim(q):
                    report.add(
                        "exactness", "I^%i" % p, "internal degree %i" % q
                    )
        if not self.coaugmentations[0].is_injective():
            report.add("exactness", "A", "coaugmentation is not injective")
        return report


def cobar_resolution(A, p_max, caps=None, verbose=False):
    """
    Resolve a comodule by cofree comodules.

    Parameters
    ----------
    A : Comodule
        The comodule to resolve.

    p_max : int
        The last stage ``I^p_max`` to build.

    caps : Caps
        Budget for the dimension of every stage.

    verbose : bool
        Print progress.

    Returns
    -------
    resolution : CofreeResolution
        The resolution with its stages.

    Raises
    ------
    BudgetExceeded
        If a stage would exceed the budget.

    """
    log = lambda *a, **kw: print(*a, **kw) if verbose else None
    if p_max < 0:
        raise ValueError("p_max must be non-negative")
    caps = caps or Caps()
    C = A.base
    stage = A
    stages = []
    cofrees = []
    coaugmentations = []
    projections = []
    for p in range(p_max + 1):
        I = Comodule.cofree(C, stage.carrier, steenrod=stage.action())
        caps.check("cofree resolution I^%i" % p, I.carrier.total_dim)
        log("Resolution stage %i: dim I = %i" % (p, I.carrier.total_dim))
        eta = GradedLinearMap(
            stage.carrier,
            I.carrier,
            {m: stage.rho(m) for m in stage.carrier.labels()},
        )
        if not eta.is_injective():
            raise ValidationError(
                "Coaction of %s is not injective; the comodule is not counital"
                % stage.name
            )
        nxt, projection = quotient_comodule(I, eta.image(), name="B%i" % (p + 1))
        stages.append(stage)
        cofrees.append(I)
        coaugmentations.append(eta)
        projections.append(projection)
        stage = nxt
    stages.append(stage)
    differentials = []
    for p in range(p_max):
        differentials.append(coaugmentations[p + 1].compose(projections[p]))
    return CofreeResolution(A, stages, cofrees, coaugmentations, differentials)


class CotorGroups(BigradedVectorSpace):
    """
    ``Cotor^p_C(B, A)_q`` with bases.

    Labels are ``cotor<p>:<q>:<i>``. ``complex`` is the cochain complex whose
    cohomology was taken and ``representatives`` maps labels to cocycles.

    """

    def __init__(self, field, entries, p_max, max_degree, complex_, representatives):
        super().__init__(field, entries, p_max=p_max, max_degree=max_degree)
        self.complex = complex_
        self.representatives = representatives


def _resolution_complex(B, A, p_max, caps, verbose):
    # B □ (C ⊗ W) is identified with B ⊗ W through b ⊗ w -> ρ^r(b) ⊗ w
    resolution = cobar_resolution(A, p_max + 1, caps=caps, verbose=verbose)
    field = A.field
    objects = [
        tensor(B.carrier, resolution.cogenerators(p)) for p in range(p_max + 2)
    ]
    differentials = []
    for p in range(p_max + 1):
        d = resolution.differentials[p]
        C = resolution.base
        columns = {}
        for b, w in objects[p].labels():
            image = {}
            for (b1, c), coeff in B.right_rho(b).items():
                for (c2, w2), cw in d.image_of((c, w)).items():
                    e = C.epsilon(c2)
                    if e:
                        add_term(
                            field,
                            image,
                            (b1, w2),
                            field.mul(coeff, field.mul(cw, e)),
                        )
            columns[(b, w)] = image
        differentials.append(GradedLinearMap(objects[p], objects[p + 1], columns))
    return CochainComplex(objects, differentials, name="B□I")


def cobar_complex(B, A, p_max, caps=None):
    """
    The unnormalized two-sided cobar complex ``B ⊗ C^(⊗p) ⊗ A``.

    The differential is the alternating sum of the right coaction of B, the
    coproducts of the C factors and the coaction of A.
    """
    caps = caps or Caps()
    C = A.base
    field = A.field
    objects = []
    for p in range(p_max + 2):
        space = tensor_many([B.carrier] + [C.carrier] * p + [A.carrier])
        caps.check("cobar complex level %i" % p, space.total_dim)
        objects.append(space)
    differentials = []
    for p in range(p_max + 1):
        columns = {}
        for t in objects[p].labels():
            image = {}
            for i in range(p + 2):
                sign = field.sign(i)
                for u, c in cobar_coface(
                    t, i, p, B.right_rho, C.delta, A.rho
                ).items():
                    add_term(field, image, u, field.mul(sign, c))
            columns[t] = image
        differentials.append(GradedLinearMap(objects[p], objects[p + 1], columns))
    return CochainComplex(objects, differentials, name="Ω(B,C,A)")


def cobar_coface(t, i, p, first, delta, last):
    """The i-th coface of the cobar construction on ``(b, c1, ..., cp, a)``.

    ``first`` is the right coaction of b, ``delta`` the coproduct of C and
    ``last`` the left coaction of a.
    """
    out = {}
    if i == 0:
        for (b1, c), coeff in first(t[0]).items():
            out[(b1, c) + t[1:]] = coeff
    elif i <= p:
        for (x, y), coeff in delta(t[i]).items():
            out[t[:i] + (x, y) + t[i + 1 :]] = coeff
    else:
        for (c, a1), coeff in last(t[-1]).items():
            out[t[:-1] + (c, a1)] = coeff
    return out


def cotor(B, A, p_max, method="resolution", caps=None, cross_check=False, verbose=False):
    """
    Compute ``Cotor^p_C(B, A)`` for ``p <= p_max``.

    Parameters
    ----------
    B : Comodule
        The left factor, used through its right coaction.

    A : Comodule
        The comodule that is resolved.

    p_max : int
        The largest cohomological degree.

    method : str
        ``resolution`` for the cokernel resolution of A or ``cobar`` for the
        two-sided cobar complex.

    caps : Caps
        Dimension budget.

    cross_check : bool
        Also compute with the other method and compare dimensions.

    verbose : bool
        Print progress.

    Returns
    -------
    groups : CotorGroups
        The bigraded groups with representatives.

    Raises
    ------
    CrossCheckMismatch
        If the two methods disagree.

    """
    log = lambda *a, **kw: print(*a, **kw) if verbose else None
    if B.base is not A.base:
        raise ValueError("Comodules over different coalgebras")
    if method == "resolution":
        complex_ = _resolution_complex(B, A, p_max, caps, verbose)
    elif method == "cobar":
        complex_ = cobar_complex(B, A, p_max, caps=caps)
    else:
        raise ValueError("Unknown Cotor method %r" % method)
    field = A.field
    entries = {}
    representatives = {}
    for p in range(p_max + 1):
        H = complex_.cohomology(p)
        log("Cotor^%i dims: %r" % (p, H.dims()))
        for q in range(H.space.max_degree + 1):
            labels = []
            for i, h in enumerate(H.space.basis(q)):
                label = "cotor%i:%i:%i" % (p, q, i)
                labels.append(label)
                representatives[label] = H.representatives[h]
            entries[(p, q)] = labels
    groups = CotorGroups(
        field,
        entries,
        p_max,
        complex_.carrier(0).max_degree,
        complex_,
        representatives,
    )
    if cross_check:
        other = "cobar" if method == "resolution" else "resolution"
        check = cotor(B, A, p_max, method=other, caps=caps, verbose=verbose)
        if check.dims() != groups.dims():
            raise CrossCheckMismatch(
                "Cotor by %s %r differs from Cotor by %s %r"
                % (method, groups.dims(), other, check.dims())
            )
    return groups


def euler_characteristic(groups):
    """Per internal degree, the alternating sum of the Cotor dimensions."""
    out = {}
    for (p, q), n in groups.dims().items():
        out[q] = out.get(q, 0) + (-1) ** p * n
    return {q: v for q, v in sorted(out.items()) if v}


class StarCheck(object):
    def __init__(self, cotor_dims, star_dims):
        self.cotor_dims = cotor_dims
        self.star_dims = star_dims

    @property
    def ok(self):
        return self.cotor_dims == self.star_dims

    def to_dict(self):
        return dict(
            cotor1=self.cotor_dims, star=self.star_dims, equal=self.ok
        )


def cotor1_star_check(pair, caps=None):
    """
    Compare ``Cotor^1_C(K, L)`` with ``C/K ∗_C C/L`` degree by degree.

    The subcoalgebras are C-comodules through their inclusions. Cotor is
    computed from a resolution and the star from the coproduct of C.
    """
    K = Comodule.from_map(pair.K)
    L = Comodule.from_map(pair.L)
    groups = cotor(K, L, 1, caps=caps)
    star = star_and_circ(pair)
    return StarCheck(groups.column(1), star.star_dims())


def vanishing_region(B, A, n, caps=None):
    """
    The bidegrees ``(p, q) != (1, n)`` with ``p > 0`` and ``p + q <= n + 1``
    where Cotor does not vanish.

    For B concentrated in degree zero and ``A -> C`` an isomorphism below
    degree n and injective in degree n this list is empty.
    """
    groups = cotor(B, A, n + 1, caps=caps)
    out = []
    for (p, q), dim in groups.dims().items():
        if p > 0 and p + q <= n + 1 and (p, q) != (1, n) and dim:
            out.append((p, q))
    return out


# Two-sided cobar construction of cosimplicial objects


class CobarLeg(object):
    """One side of a two-sided cobar construction.

    ``objects`` are the levels as coalgebras or comodules, ``vertical`` the
    source object providing cofaces and codegeneracies and ``coaction(n, x)``
    the coaction at level n, as pairs ``(x', c)`` on the left side and
    ``(c, x')`` on the right side.
    """

    def __init__(self, vertical, coaction, coalgebras):
        self.vertical = vertical
        self.coaction = coaction
        self.coalgebras = coalgebras

    def level(self, n):
        return self.vertical.levels[n]

    @classmethod
    def from_map(cls, f, side):
        X = f.source
        field = X.field

        def coaction(n, x):
            g = f.components[n]
            out = {}
            for (a, b), c in X.levels[n].delta(x).items():
                if side == "left":
                    for y, cy in g.image_of(b).items():
                        add_term(field, out, (a, y), field.mul(c, cy))
                else:
                    for y, cy in g.image_of(a).items():
                        add_term(field, out, (y, b), field.mul(c, cy))
            return out

        return cls(X, coaction, True)

    @classmethod
    def from_comodules(cls, X, side):
        def coaction(n, x):
            M = X.levels[n]
            return M.right_rho(x) if side == "left" else M.rho(x)

        return cls(X, coaction, False)


def product_image(field, label, maps):
    partial = {(): field.one}
    for x, f in zip(label, maps):
        image = f.image_of(x)
        nxt = {}
        for t, c in partial.items():
            for y, cy in image.items():
                add_term(field, nxt, t + (y,), field.mul(c, cy))
        partial = nxt
        if not partial:
            break
    return partial


def two_sided_cobar(left, base, right, caps=None, name=None, verbose=False):
    """
    The diagonal of the two-sided cobar construction.

    Level n is ``B^n ⊗ (C^n)^(⊗n) ⊗ A^n`` with flat labels. The coface
    ``d^i`` applies the cofaces of all factors followed by the i-th cobar
    coface, the codegeneracy ``s^j`` applies the codegeneracies of all
    factors and then the counit to the ``(j+1)``-st C factor.
    """
    log = lambda *a, **kw: print(*a, **kw) if verbose else None
    caps = caps or Caps()
    S = base.S
    if left.vertical.S != S or right.vertical.S != S:
        raise ValueError("Cosimplicial objects must share the truncation")
    field = base.field
    coalgebras = left.coalgebras and right.coalgebras
    levels = []
    for n in range(S + 1):
        factors = [left.level(n)] + [base.levels[n]] * n + [right.level(n)]
        if coalgebras:
            level = tensor_coalgebra(factors)
            size = level.carrier.total_dim
        else:
            level = tensor_many([f.carrier for f in factors])
            size = level.total_dim
        caps.check("two-sided cobar level %i" % n, size)
        log("Cobar diagonal level %i: dim %i" % (n, size))
        levels.append(level)

    def carrier(n):
        level = levels[n]
        return level.carrier if coalgebras else level

    def coface(n, i):
        X, Cb, Y = left.vertical, base, right.vertical
        maps = [X.coface(n, i)] + [Cb.coface(n, i)] * n + [Y.coface(n, i)]
        target = carrier(n + 1)
        Cn = base.levels[n + 1]
        columns = {}
        for t in carrier(n).labels():
            image = {}
            for u, c in product_image(field, t, maps).items():
                for v, cv in cobar_coface(
                    u,
                    i,
                    n,
                    lambda x: left.coaction(n + 1, x),
                    Cn.delta,
                    lambda x: right.coaction(n + 1, x),
                ).items():
                    if v in target:
                        add_term(field, image, v, field.mul(c, cv))
            columns[t] = image
        return GradedLinearMap(carrier(n), target, columns)

    def codegeneracy(n, j):
        X, Cb, Y = left.vertical, base, right.vertical
        maps = (
            [X.codegeneracy(n, j)]
            + [Cb.codegeneracy(n, j)] * (n + 1)
            + [Y.codegeneracy(n, j)]
        )
        Cn = base.levels[n]
        columns = {}
        for t in carrier(n + 1).labels():
            image = {}
            for u, c in product_image(field, t, maps).items():
                e = Cn.epsilon(u[j + 1])
                if e:
                    add_term(field, image, u[: j + 1] + u[j + 2 :], field.mul(c, e))
            columns[t] = image
        return GradedLinearMap(carrier(n + 1), carrier(n), columns)

    cofaces = {(n, i): coface(n, i) for n in range(S) for i in range(n + 2)}
    codegeneracies = {
        (n, j): codegeneracy(n, j) for n in range(S) for j in range(n + 1)
    }
    return CosimplicialObject(
        "coalgebra" if coalgebras else "space",
        levels,
        cofaces,
        codegeneracies,
        name=name or "B□^R A",
    )


class DerivedCotensor(object):
    """
    The derived cotensor product ``B □^R_C A`` of cosimplicial objects.

    ``object`` is the cosimplicial object and ``base`` the cosimplicial
    coalgebra C. For cosimplicial coalgebras, ``leg`` gives the projections
    onto the two inputs.
    """

    def __init__(self, obj, left, base, right):
        self.object = obj
        self.left = left
        self.base = base
        self.right = right
        self._normalized = None
        self._groups = {}

    @property
    def S(self):
        return self.object.S

    @property
    def normalized(self):
        if self._normalized is None:
            self._normalized = normalize(self.object)
        return self._normalized

    def cohomotopy(self, s):
        if s not in self._groups:
            self._groups[s] = cohomotopy(self.object, s, normalized=self.normalized)
        return self._groups[s]

    def dims(self):
        """Dimensions of ``π^s`` for ``s <= S - 1``."""
        return [self.cohomotopy(s).dims() for s in range(self.S)]

    def pi0_coalgebra(self):
        return self.cohomotopy(0).coalgebra()

    def leg(self, side):
        """The projection ``B □^R A -> B`` (side ``left``) or onto A."""
        if self.object.kind != "coalgebra":
            raise ValueError("Legs are only defined for cosimplicial coalgebras")
        source = self.object
        target = self.left.vertical if side == "left" else self.right.vertical
        field = source.field
        components = []
        for n in range(source.S + 1):
            level = source.levels[n]
            owners = [self.left.level(n)] + [self.base.levels[n]] * n
            owners.append(self.right.level(n))
            keep = 0 if side == "left" else n + 1
            columns = {}
            for t in level.carrier.labels():
                coeff = field.one
                for k, x in enumerate(t):
                    if k != keep:
                        coeff = field.mul(coeff, owners[k].epsilon(x))
                    if not coeff:
                        break
                if coeff:
                    columns[t] = {t[keep]: coeff}
            components.append(
                GradedLinearMap(level.carrier, target.carrier(n), columns)
            )
        return CosimplicialMap(source, target, components, name="leg")


def derived_cotensor(B, A, C=None, caps=None, cross_check=False, verbose=False):
    """
    The derived cotensor product of two cosimplicial comodules or of two
    cosimplicial coalgebras over a cosimplicial coalgebra.

    Parameters
    ----------
    B, A : CosimplicialObject or CosimplicialMap
        Either cosimplicial comodules over one coalgebra, or maps of
        cosimplicial coalgebras into C.

    C : CosimplicialObject
        The base. Defaults to the constant object on the base coalgebra of
        comodule inputs, or to the common target of maps.

    caps : Caps
        Dimension budget.

    cross_check : bool
        Recompute with the two sides exchanged and compare the dimensions
        of cohomotopy.

    Returns
    -------
    result : DerivedCotensor
        The cosimplicial object and its cohomotopy.

    Raises
    ------
    CrossCheckMismatch
        If exchanging the sides changes the cohomotopy dimensions.

    """
    if isinstance(B, CosimplicialMap) and isinstance(A, CosimplicialMap):
        if B.target is not A.target:
            raise ValueError("Maps must share their target")
        C = B.target if C is None else C
        left = CobarLeg.from_map(B, "left")
        right = CobarLeg.from_map(A, "right")
        swapped = (CobarLeg.from_map(A, "left"), CobarLeg.from_map(B, "right"))
    elif B.kind == "comodule" and A.kind == "comodule":
        if C is None:
            C = constant(B.levels[0].base, B.S)
        left = CobarLeg.from_comodules(B, "left")
        right = CobarLeg.from_comodules(A, "right")
        swapped = (CobarLeg.from_comodules(A, "left"), CobarLeg.from_comodules(B, "right"))
    else:
        raise ValueError("Expected two comodule objects or two coalgebra maps")
    obj = two_sided_cobar(left, C, right, caps=caps, verbose=verbose)
    result = DerivedCotensor(obj, left, C, right)
    if cross_check:
        other = two_sided_cobar(swapped[0], C, swapped[1], caps=caps, verbose=verbose)
        other_result = DerivedCotensor(other, swapped[0], C, swapped[1])
        if other_result.dims() != result.dims():
            raise CrossCheckMismatch(
                "Derived cotensor changes when the sides are exchanged: %r != %r"
                % (result.dims(), other_result.dims())
            )
    return result


def homotopy_pullback(f, g, caps=None, cross_check=False, verbose=False):
    """
    The homotopy pullback of ``A --f--> C <--g-- B`` in cosimplicial
    coalgebras, as the derived cotensor ``B □^R_C A``.

    π^0 of the result is a coalgebra and the higher π^s are comodules over
    it. The projections onto A and B are available through ``leg``.
    """
    for h in (f, g):
        report = h.validate()
        if not report.ok:
            raise ValidationError("Not a map of cosimplicial coalgebras", report=report)
    return derived_cotensor(g, f, caps=caps, cross_check=cross_check, verbose=verbose)


def basepoint_map(X):
    """The map ``cF -> X`` picking the basepoint of every level."""
    field = X.field
    D = X.carrier(0).max_degree
    point = Coalgebra.terminal(field, D)
    source = constant(point, X.S, name="cF")
    components = []
    for n in range(X.S + 1):
        bp = X.levels[n].basepoint
        if bp is None:
            raise ValueError("Level %i of %s has no basepoint" % (n, X.name))
        components.append(
            GradedLinearMap(point.carrier, X.carrier(n), {"1": {bp: field.one}})
        )
    return CosimplicialMap(source, X, components, name="basepoint")


def loop_object(X, n=1, caps=None, verbose=False):
    """
    The n-fold loop object of a pointed cosimplicial coalgebra.

    Each loop is the homotopy pullback of ``cF -> X <- cF`` along the
    basepoint.
    """
    if X.kind != "coalgebra":
        raise ValueError("Loop objects are taken of cosimplicial coalgebras")
    result = X
    for k in range(n):
        point = basepoint_map(result)
        result = homotopy_pullback(point, point, caps=caps, verbose=verbose).object
        result.name = "Ω^%i(%s)" % (k + 1, X.name)
    return result


class ConnectivityReport(object):
    """
    The connectivity of a map of cosimplicial objects.

    ``n`` is the largest degree such that ``π^s(f)`` is an isomorphism for
    ``s < n`` and injective for ``s = n``, or -1 when ``π^0(f)`` is not
    injective. ``table`` lists, per s, the dimensions of source and target
    cohomotopy and the rank of the induced map.
    """

    def __init__(self, n, table, S):
        self.n = n
        self.table = table
        self.S = S

    def to_dict(self):
        return dict(connectivity=self.n, truncation=self.S, table=self.table)

    def __repr__(self):
        return "ConnectivityReport(n=%i, S=%i)" % (self.n, self.S)


def connectivity(f):
    """Compute the connectivity of a :class:`CosimplicialMap`."""
    table = f.normalized().cohomology_table()
    n = -1
    for row in table:
        mono = row["rank"] == row["source"]
        if not mono:
            break
        n = row["s"]
        if row["rank"] != row["target"]:
            break
    return ConnectivityReport(n, table, len(f.components) - 1)
