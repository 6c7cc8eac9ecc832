# -*- coding: utf-8 -*-

"""
André-Quillen cohomology of unstable coalgebras and objects of type K.

``AQ^n_C(D; M)`` is computed as the n-th cohomology of the cochain complex
``s -> Der(M, X^s)`` for the resolution ``X`` of D by the cofree monad, with
the alternating sum of the cofaces as differential. Over Q, and for
connected input, the same groups can be computed from the dual algebras
with the free commutative algebra resolution, which is the oracle used by
``--cross-check``.

Author: Gertjan van den Burg

"""

from .caps import Caps
from .cofree import comonad_resolution
from .cofree import monomial_basis
from .cofree import product_sign
from .coalgebra import CoalgebraMap
from .coalgebra import Comodule
from .coalgebra import comodule_isomorphism
from .coalgebra import derivations
from .coalgebra import iota
from .coalgebra import restrict_comodule
from .cosimplicial import CochainComplex
from .cosimplicial import CosimplicialMap
from .cosimplicial import CosimplicialObject
from .cosimplicial import cohomotopy
from .cosimplicial import comodule_map_ok
from .cosimplicial import constant
from .cosimplicial import dold_kan_inverse
from .cosimplicial import normalize
from .cosimplicial import surjection_label
from .cosimplicial import surjections
from .cotor import homotopy_pullback
from .exceptions import CrossCheckMismatch
from .exceptions import UnsupportedInput
from .exceptions import ValidationError
from .linalg import Field
from .linalg import GradedLinearMap
from .linalg import GradedVectorSpace
from .linalg import Subspace
from .linalg import add_term
from .linalg import express
from .linalg import linear_kernel
from .validation import ValidationReport


class AQResult(object):
    """
    The group ``AQ^n_C(D; M)``.

    Attributes
    ----------
    n : int
        The cohomological degree.

    table : dict
        Maps an internal degree k to the dimension of the classes whose
        cocycles vanish on ``M_{<k}``, modulo those vanishing on
        ``M_{<=k}``.

    derivation_dims : list
        The dimensions of ``Der(M, X^s)`` for the levels used.

    fingerprint : str
        Hash of the resolution stage dimensions.

    window : tuple
        The internal degrees ``(low, high)`` where derivations can live.

    method : str
        ``direct``, ``shortcut`` or ``dual``.

    """

    def __init__(
        self,
        n,
        field,
        table,
        derivation_dims,
        caps,
        fingerprint=None,
        window=None,
        method="direct",
    ):
        self.n = n
        self.field = field
        self.table = dict(table)
        self.derivation_dims = list(derivation_dims)
        self.caps = caps
        self.fingerprint = fingerprint
        self.window = window
        self.method = method

    @property
    def dim(self):
        return sum(self.table.values())

    @property
    def vanishes(self):
        return self.dim == 0

    def dims(self):
        top = max(self.table) if self.table else -1
        return [self.table.get(k, 0) for k in range(top + 1)]

    def basis(self):
        """Labels ``aq<n>:<k>:<i>`` of a basis adapted to the filtration."""
        return [
            "aq%i:%i:%i" % (self.n, k, i)
            for k in sorted(self.table)
            for i in range(self.table[k])
        ]

    def to_dict(self):
        return dict(
            n=self.n,
            field=self.field.value,
            dims=self.dims(),
            dim=self.dim,
            basis=self.basis(),
            derivation_dims=self.derivation_dims,
            caps=self.caps.to_dict(),
            fingerprint=self.fingerprint,
            window=list(self.window) if self.window is not None else None,
            method=self.method,
        )

    def __repr__(self):
        return "AQResult(n=%i, dims=%r, method=%r)" % (
            self.n,
            self.dims(),
            self.method,
        )


def _degree_zero_space(field, labels):
    return GradedVectorSpace(field, 0, [labels])


def filtration_table(field, level, dout, din, components, degree, max_degree):
    """
    Dimensions of the filtration quotients of ``H^n`` of a complex of
    derivation spaces.

    Parameters
    ----------
    level : GradedVectorSpace
        The cochains ``W^n``, concentrated in degree zero.

    dout, din : GradedLinearMap
        The differentials out of and into ``W^n``; ``din`` may be None.

    components : callable
        Maps a basis label of ``W^n`` to its sparse vector of components.

    degree : callable
        The internal degree of the M-part of a component.

    Returns
    -------
    table : dict
        ``{k: dim Fil_k / Fil_(k+1)}``, ``Fil_k`` being the classes with a
        cocycle vanishing on ``M_{<k}``.

    """
    labels = list(level.basis(0))
    boundaries = []
    if din is not None:
        boundaries = [din.image_of(x) for x in din.source.basis(0)]
    base = Subspace.span(field, boundaries, level.position).dim

    def filtered(k):
        def image(x):
            out = {("d", y): c for y, c in dout.image_of(x).items()}
            for key, c in components(x).items():
                if degree(key) < k:
                    out[("r", key)] = c
            return out

        cycles = linear_kernel(field, labels, image).vectors
        return Subspace.span(field, cycles + boundaries, level.position).dim - base

    sizes = [filtered(k) for k in range(max_degree + 2)]
    return {
        k: sizes[k] - sizes[k + 1]
        for k in range(max_degree + 1)
        if sizes[k] - sizes[k + 1]
    }


class _DerivationLevel(object):
    """One level ``Der(M, X^s)`` of the complex, with coordinates."""

    def __init__(self, s, field, vectors, coordinates):
        self.s = s
        self.vectors = vectors
        self.coordinates = coordinates
        self.space = _degree_zero_space(
            field, ["der%i:%i" % (s, i) for i in range(len(vectors))]
        )

    @property
    def dim(self):
        return len(self.vectors)


def _direct_level(M, under, s, check):
    ders = derivations(M, under, check=check)
    sub = ders.subspace
    field = M.field

    def coordinates(vector):
        coords = sub.coordinates(vector)
        if sub.combination(coords) != {k: v for k, v in vector.items() if v}:
            raise ValidationError(
                "A coface does not preserve derivations at level %i" % s
            )
        return coords

    return _DerivationLevel(s, field, ders.vectors, coordinates)


def _shortcut_level(M, under, stage, s):
    """Derivations into a cofree stage from linear maps ``M -> W``."""
    C = under.source
    field = M.field
    W = stage.source
    extension = iota(C, M, check=False)
    if extension.max_degree != stage.max_degree:
        raise ValueError("C, M and D need the same degree cap")
    base = {}
    for c in C.carrier.labels():
        base[c] = stage.projection(under.image_of(c))
    pairs = [
        (m, w)
        for n in range(1, extension.max_degree + 1)
        for m in M.carrier.basis(n)
        for w in W.basis(n)
    ]
    vectors = []
    for m, w in pairs:
        columns = dict(base)
        columns[m] = {w: field.one}
        phi = GradedLinearMap(extension.carrier, W, columns)
        lifted = stage.lift(extension, phi)
        vec = {}
        for x in M.carrier.labels():
            for d, c in lifted.image_of(x).items():
                vec[(x, d)] = c
        vectors.append(vec)
    index = {p: i for i, p in enumerate(pairs)}

    def coordinates(vector):
        coords = [field.zero] * len(pairs)
        for (m, d), c in vector.items():
            for w, cw in stage.projection.image_of(d).items():
                i = index[(m, w)]
                coords[i] = field.add(coords[i], field.mul(c, cw))
        return coords

    return _DerivationLevel(s, field, vectors, coordinates)


def _complex(levels, cofaces, field):
    differentials = []
    for s in range(len(levels) - 1):
        source, target = levels[s], levels[s + 1]
        columns = {}
        for label, vec in zip(source.space.basis(0), source.vectors):
            image = {}
            for i in range(s + 2):
                face = cofaces(s, i)
                sign = field.sign(i)
                for (m, d), c in vec.items():
                    for e, ce in face.image_of(d).items():
                        add_term(field, image, (m, e), field.mul(sign, field.mul(c, ce)))
            coords = target.coordinates(image)
            columns[label] = {
                t: c for t, c in zip(target.space.basis(0), coords) if c
            }
        differentials.append(
            GradedLinearMap(source.space, target.space, columns)
        )
    return CochainComplex([L.space for L in levels], differentials, name="Der")


def _window(M):
    # derivation unknowns only exist in these degrees; the stages themselves
    # are needed in all degrees, the derivation equations read the whole
    # coproduct
    degrees = [n for n in range(M.max_degree + 1) if M.carrier.dim(n)]
    if not degrees:
        return None
    return (degrees[0], M.max_degree)


def aq_cohomology(
    under,
    M,
    n,
    caps=None,
    shortcut=False,
    resolution=None,
    cross_check=False,
    verbose=False,
):
    """
    André-Quillen cohomology ``AQ^n_C(D; M)``.

    Parameters
    ----------
    under : CoalgebraMap
        The coalgebra D under C, as the map ``u: C -> D``.

    M : Comodule
        A coabelian C-comodule.

    n : int
        The cohomological degree.

    caps : Caps
        Budget for the resolution.

    shortcut : bool
        Build the derivation spaces from linear maps into the cogenerators
        of each stage instead of solving the derivation equations. Needs
        ``M_0 = 0``.

    resolution : ComonadResolution
        A resolution of D under C with at least ``n + 1`` levels above the
        bottom, to reuse.

    cross_check : bool
        Recompute by the other derivation route and, over Q, with the dual
        algebra oracle, and raise :class:`CrossCheckMismatch` on any
        difference.

    verbose : bool
        Print progress.

    Returns
    -------
    result : AQResult
        The dimension table of ``AQ^n``.

    Raises
    ------
    ValidationError
        If M is not coabelian.

    BudgetExceeded
        If the resolution is too large for the budget.

    """
    log = lambda *a, **kw: print(*a, **kw) if verbose else None
    caps = caps or Caps()
    if n < 0:
        raise ValueError("The degree n must be non-negative")
    if M.base is not under.source:
        raise ValueError("M is not a comodule over the source of the map")
    report = M.validate(strict=True)
    if not report.ok:
        raise ValidationError("Module is not coabelian", report=report)
    field = M.field
    if shortcut and M.carrier.dim(0):
        raise UnsupportedInput("The shortcut route needs M_0 = 0")
    if resolution is None or resolution.S < n + 1:
        resolution = comonad_resolution(under, n + 1, caps=caps, verbose=verbose)

    levels = []
    for s in range(n + 2):
        u = resolution.under_map(s)
        if shortcut:
            level = _shortcut_level(M, u, resolution.stages[s], s)
        else:
            level = _direct_level(M, u, s, check=False)
        log("Der(M, X^%i) has dimension %i" % (s, level.dim))
        levels.append(level)
    N = _complex(levels, resolution.object.coface, field)
    report = N.validate()
    if not report.ok:
        raise ValidationError("The derivation complex is not a complex", report=report)
    degree = M.carrier.degree
    vectors = dict(zip(levels[n].space.basis(0), levels[n].vectors))
    table = filtration_table(
        field,
        levels[n].space,
        N.differential(n),
        N.differential(n - 1) if n > 0 else None,
        vectors.get,
        lambda key: degree(key[0]),
        M.max_degree,
    )
    result = AQResult(
        n,
        field,
        table,
        [L.dim for L in levels],
        caps,
        fingerprint=resolution.fingerprint(),
        window=_window(M),
        method="shortcut" if shortcut else "direct",
    )
    if cross_check:
        _cross_check(result, under, M, n, caps, shortcut, resolution, verbose)
    return result


def _cross_check(result, under, M, n, caps, shortcut, resolution, verbose):
    routes = []
    if not M.carrier.dim(0):
        other = aq_cohomology(
            under, M, n, caps=caps, shortcut=not shortcut, resolution=resolution
        )
        if other.derivation_dims != result.derivation_dims:
            raise CrossCheckMismatch(
                "Derivation dimensions differ: %r (%s) and %r (%s)"
                % (
                    result.derivation_dims,
                    result.method,
                    other.derivation_dims,
                    other.method,
                )
            )
        routes.append(other)
    if M.field is Field.Q and under.source.is_connected() and under.target.is_connected():
        routes.append(aq_dual_oracle(under, M, n, caps=caps, verbose=verbose))
    for other in routes:
        if other.table != result.table:
            raise CrossCheckMismatch(
                "AQ^%i differs: %r (%s) and %r (%s)"
                % (n, result.dims(), result.method, other.dims(), other.method)
            )


# The dual algebra route


class _FreeStage(object):
    """A free graded commutative algebra, truncated at a degree cap."""

    def __init__(self, field, generators, degrees, max_degree, caps, stage):
        self.field = field
        self.generators = list(generators)
        self.degrees = list(degrees)
        self.index = {g: i for i, g in enumerate(self.generators)}
        self.odd = [bool(d % 2) for d in self.degrees]
        self.max_degree = max_degree
        self.basis = monomial_basis(
            self.degrees, self.odd, max_degree, caps=caps, stage=stage
        )
        self.unit = (0,) * len(self.generators)

    def degree(self, exps):
        return sum(e * d for e, d in zip(exps, self.degrees))

    def one(self):
        return {self.unit: self.field.one}

    def generator(self, i):
        exps = list(self.unit)
        exps[i] = 1
        return {tuple(exps): self.field.one}

    def multiply(self, p, q):
        field = self.field
        out = {}
        for a, ca in p.items():
            for b, cb in q.items():
                exps = tuple(x + y for x, y in zip(a, b))
                if self.degree(exps) > self.max_degree:
                    continue
                sign = product_sign(field, a, b, self.odd)
                if sign:
                    add_term(field, out, exps, field.mul(sign, field.mul(ca, cb)))
        return out

    def sequence(self, exps):
        """The generators of a monomial as an ordered list."""
        out = []
        for i, e in enumerate(exps):
            out.extend([i] * e)
        return out

    def positive(self):
        return [
            exps for n in range(1, self.max_degree + 1) for exps in self.basis[n]
        ]


class _DualAlgebra(object):
    """The algebra ``A = D*`` with the product dual to the coproduct."""

    def __init__(self, D):
        self.field = D.field
        self.D = D
        self.max_degree = D.max_degree
        self.table = {}
        for z in D.carrier.labels():
            for pair, c in D.delta(z).items():
                self.table.setdefault(pair, {})[z] = c
        self.unit_label = D.unit_label()

    def degree(self, x):
        return self.D.carrier.degree(x)

    def one(self):
        return {self.unit_label: self.field.one}

    def multiply(self, p, q):
        field = self.field
        out = {}
        for a, ca in p.items():
            for b, cb in q.items():
                for z, c in self.table.get((a, b), {}).items():
                    add_term(field, out, z, field.mul(c, field.mul(ca, cb)))
        return out


class _FreeResolution(object):
    """
    The simplicial resolution ``P_t = S(P_(t-1)^+)`` of an augmented
    commutative algebra, ``P_(-1) = A``, with faces
    ``d_i = L^i ε L^(t-i)`` and the augmentation to A.
    """

    def __init__(self, A, top, caps, verbose=False):
        log = lambda *a, **kw: print(*a, **kw) if verbose else None
        self.A = A
        self.field = A.field
        D = A.max_degree
        positive = [
            x for n in range(1, D + 1) for x in A.D.carrier.basis(n)
        ]
        self.stages = []
        generators = positive
        degrees = [A.degree(x) for x in positive]
        for t in range(top + 1):
            stage = _FreeStage(
                self.field,
                generators,
                degrees,
                D,
                caps,
                "free algebra stage %i" % t,
            )
            self.stages.append(stage)
            log("P_%i: %i generators, dims %r"
                % (t, len(generators), [len(b) for b in stage.basis]))
            generators = [(t, exps) for exps in stage.positive()]
            degrees = [stage.degree(exps) for exps in stage.positive()]
        self._faces = {}
        self._augmented = {}

    def ring(self, t):
        return self.A if t < 0 else self.stages[t]

    def element(self, t, g):
        """The generator g of ``P_t`` as an element of ``P_(t-1)``."""
        label = self.stages[t].generators[g]
        if t == 0:
            return {label: self.field.one}
        return {label[1]: self.field.one}

    def apply(self, t, i, p):
        """The face ``d_i: P_t -> P_(t-1)`` on a polynomial of ``P_t``."""
        target = self.ring(t - 1)
        out = {}
        for exps, c in p.items():
            value = target.one()
            for g in self.stages[t].sequence(exps):
                value = target.multiply(value, self.face(t, i, g))
            for key, cv in value.items():
                add_term(self.field, out, key, self.field.mul(c, cv))
        return out

    def face(self, t, i, g):
        """``d_i`` of the generator g of ``P_t``, in ``P_(t-1)``."""
        key = (t, i, g)
        if key in self._faces:
            return self._faces[key]
        if i == 0:
            value = self.element(t, g)
        else:
            below = self.apply(t - 1, i - 1, self.element(t, g))
            # P_(t-2)^+ is the generating space of P_(t-1)
            stage = self.stages[t - 1]
            value = {}
            for exps, c in below.items():
                label = exps if t == 1 else (t - 2, exps)
                for linear, one in stage.generator(stage.index[label]).items():
                    add_term(self.field, value, linear, self.field.mul(c, one))
        self._faces[key] = value
        return value

    def augmentation(self, t, g):
        """The image in A of the generator g of ``P_t``."""
        key = (t, g)
        if key in self._augmented:
            return self._augmented[key]
        if t == 0:
            value = self.element(0, g)
        else:
            value = {}
            for exps, c in self.element(t, g).items():
                term = self.A.one()
                for h in self.stages[t - 1].sequence(exps):
                    term = self.A.multiply(term, self.augmentation(t - 1, h))
                for z, cz in term.items():
                    add_term(self.field, value, z, self.field.mul(c, cz))
        self._augmented[key] = value
        return value


def aq_dual_oracle(under, M, n, caps=None, verbose=False):
    """
    ``AQ^n`` computed from the dual algebras, over Q.

    The coalgebra D dualizes to the commutative algebra ``A = D*`` over
    ``C*``, and M to the ``C*``-module ``N = M*``. Derivations of the free
    algebras ``P_t`` into N are determined by their values on generators,
    so the complex is ``Hom(P_(t-1)^+, N)`` with differential induced by the
    faces.

    Returns
    -------
    result : AQResult
        Filtered exactly as :func:`aq_cohomology` filters.

    Raises
    ------
    UnsupportedInput
        Over F2, or when C or D is not connected.

    """
    caps = caps or Caps()
    field = M.field
    C, D = under.source, under.target
    if field is not Field.Q:
        raise UnsupportedInput("The dual algebra oracle works over Q only")
    if not (C.is_connected() and D.is_connected()):
        raise UnsupportedInput("The dual algebra oracle needs connected input")
    if M.base is not C:
        raise ValueError("M is not a comodule over the source of the map")
    A = _DualAlgebra(D)
    P = _FreeResolution(A, n + 1, caps, verbose=verbose)

    # u*: A -> C*, then the C*-action on N = M*
    pullback = {}
    for c in C.carrier.labels():
        for x, coeff in under.image_of(c).items():
            add_term(field, pullback.setdefault(x, {}), c, coeff)
    acting = {}
    for m in M.carrier.labels():
        for (c, m1), coeff in M.rho(m).items():
            add_term(field, acting.setdefault((c, m1), {}), m, coeff)

    def act(a, m1):
        out = {}
        for x, cx in a.items():
            for c, cc in pullback.get(x, {}).items():
                for m, cm in acting.get((c, m1), {}).items():
                    add_term(field, out, m, field.mul(cx, field.mul(cc, cm)))
        return out

    degree_of = M.carrier.degree
    levels = []
    for t in range(n + 2):
        stage = P.stages[t]
        labels = [
            (g, m)
            for g in range(len(stage.generators))
            for m in M.carrier.basis(stage.degrees[g])
        ]
        levels.append(_degree_zero_space(field, labels))

    differentials = []
    for t in range(n + 1):
        stage, upper = P.stages[t], P.stages[t + 1]
        columns = {}
        for w in range(len(upper.generators)):
            for i in range(t + 2):
                sign = field.sign(i)
                for exps, c in P.face(t + 1, i, w).items():
                    seq = stage.sequence(exps)
                    images = [P.augmentation(t, g) for g in seq]
                    for j, g in enumerate(seq):
                        after = sum(stage.degrees[h] for h in seq[j + 1 :])
                        koszul = field.koszul(stage.degrees[g], after)
                        rest = A.one()
                        for k, image in enumerate(images):
                            if k != j:
                                rest = A.multiply(rest, image)
                        scale = field.mul(sign, field.mul(c, koszul))
                        for m in M.carrier.basis(stage.degrees[g]):
                            for m2, cm in act(rest, m).items():
                                add_term(
                                    field,
                                    columns.setdefault((g, m), {}),
                                    (w, m2),
                                    field.mul(scale, cm),
                                )
        differentials.append(GradedLinearMap(levels[t], levels[t + 1], columns))
    N = CochainComplex(levels, differentials, name="Hom(P, N)")
    report = N.validate()
    if not report.ok:
        raise ValidationError("The dual complex is not a complex", report=report)
    table = filtration_table(
        field,
        levels[n],
        N.differential(n),
        N.differential(n - 1) if n > 0 else None,
        lambda label: {label: field.one},
        lambda key: degree_of(key[1]),
        M.max_degree,
    )
    return AQResult(
        n,
        field,
        table,
        [L.total_dim for L in levels],
        caps,
        window=_window(M),
        method="dual",
    )


# Objects of type K_C(M, n)


class KObject(object):
    """
    A cosimplicial coalgebra of type ``K_C(M, n)`` with its structure map
    to the constant object ``cC``.

    Levels are the square-zero extensions of C by the Dold-Kan inverse of
    M placed in degree n.
    """

    def __init__(self, C, M, n, obj, projection, copies):
        self.C = C
        self.M = M
        self.n = n
        self.object = obj
        self.projection = projection
        self.copies = copies

    @property
    def S(self):
        return self.object.S

    def verify(self):
        """
        Check that ``π^0 = C`` as coalgebras, ``π^n = M`` as comodules along
        that identification and that ``π^s`` vanishes otherwise.

        Returns the report and the dimension table of ``π^s``.
        """
        report = ValidationReport("K(%s, %i)" % (self.M.name, self.n))
        report.extend(self.object.validate())
        report.extend(self.projection.validate())
        X = self.object
        N = normalize(X)
        field = self.C.field
        table = []
        groups = {}
        for s in range(X.S):
            groups[s] = cohomotopy(X, s, normalized=N)
            table.append(groups[s].dims())
        pi0 = groups[0]
        if self.n == 0:
            expected = X.levels[0]
            if pi0.dims() != expected.carrier.dims():
                report.add("π^0 is ι_C(M)", "π^0", "dims %r" % pi0.dims())
            for s in range(1, X.S):
                if groups[s].total_dim:
                    report.add("π^s vanishes", "π^%i" % s)
            return report, table
        phi0 = {c: pi0.class_of({c: field.one}) for c in self.C.carrier.labels()}
        pi0_coalgebra = pi0.coalgebra()
        iso = CoalgebraMap.from_columns(self.C, pi0_coalgebra, phi0)
        if pi0.dims() != self.C.carrier.dims() or not iso.is_injective():
            report.add("π^0 is C", "π^0", "dims %r" % pi0.dims())
        else:
            for v in iso.check().violations:
                report.add("π^0 is C", v.witness, v.axiom)
        for s in range(1, X.S):
            if s != self.n and groups[s].total_dim:
                report.add("π^s vanishes", "π^%i" % s, "dims %r" % groups[s].dims())
        if self.n < X.S:
            pin = groups[self.n]
            identity = surjection_label(tuple(range(self.n + 1)))
            columns = {
                m: pin.class_of({(identity, m): field.one})
                for m in self.M.carrier.labels()
            }
            comodule = pin.comodule(pi0=pi0)
            g = GradedLinearMap(self.M.carrier, pin.space, columns)
            if pin.dims() != self.M.carrier.dims() or not g.is_injective():
                report.add("π^n is M", "π^%i" % self.n, "dims %r" % pin.dims())
            elif not comodule_map_ok(self.M, comodule, g, base_map=iso):
                report.add("π^n is M", "π^%i" % self.n, "coaction")
        return report, table


def _zero_comodule(C):
    space = GradedVectorSpace.zero(C.field, C.max_degree)
    return Comodule(C, space, {}, coabelian=True, name="0")


def k_object(C, M, n, S, caps=None, check=True):
    """
    The cosimplicial coalgebra of type ``K_C(M, n)``.

    Parameters
    ----------
    C : Coalgebra
        The base coalgebra.

    M : Comodule
        A coabelian C-comodule.

    n : int
        The degree of M in cohomotopy. For n = 0 the result is the constant
        object on ``ι_C(M)``.

    S : int
        The truncation; needs ``S >= n + 1``.

    caps : Caps
        Budget for the total dimension of a level.

    check : bool
        Verify the cohomotopy and raise on failure.

    Returns
    -------
    K : KObject
        The object with its structure map to ``cC``.

    """
    caps = caps or Caps()
    if M.base is not C:
        raise ValueError("M is not a comodule over C")
    if n < 0:
        raise ValueError("n must be non-negative")
    if n and S < n + 1:
        raise ValueError("K(M, %i) needs S >= %i, got %i" % (n, n + 1, S))
    if n == 0:
        E = iota(C, M)
        caps.check("K-object level", E.carrier.total_dim)
        obj = constant(E, S, name="K(%s,0)" % M.name)
        projection = CosimplicialMap(
            obj, constant(C, S), [E.projection.linear] * (S + 1), name="K -> cC"
        )
        K = KObject(C, M, 0, obj, projection, [E.carrier.total_dim] * (S + 1))
    else:
        zero = _zero_comodule(C)
        objects = [M if t == n else zero for t in range(S + 1)]
        differentials = []
        for t in range(S):
            differentials.append(
                GradedLinearMap.zero(objects[t].carrier, objects[t + 1].carrier)
            )
        for t in range(S + 1):
            copies = sum(1 for sigma in surjections(t) if sigma[-1] == n)
            caps.check(
                "K-object level %i" % t,
                C.carrier.total_dim + copies * M.carrier.total_dim,
            )
        L = dold_kan_inverse(
            CochainComplex(objects, differentials, name="%s[%i]" % (M.name, n)),
        )
        levels = [iota(C, L.levels[t], check=False) for t in range(S + 1)]

        def extend(f, source, target):
            columns = {c: {c: C.field.one} for c in C.carrier.labels()}
            for x in source.module.carrier.labels():
                columns[x] = f.image_of(x)
            return GradedLinearMap(source.carrier, target.carrier, columns)

        cofaces = {
            (t, i): extend(f, levels[t], levels[t + 1])
            for (t, i), f in L.cofaces.items()
        }
        codegeneracies = {
            (t, j): extend(f, levels[t + 1], levels[t])
            for (t, j), f in L.codegeneracies.items()
        }
        obj = CosimplicialObject(
            "coalgebra",
            levels,
            cofaces,
            codegeneracies,
            name="K(%s,%i)" % (M.name, n),
        )
        projection = CosimplicialMap(
            obj,
            constant(C, S),
            [E.projection.linear for E in levels],
            name="K -> cC",
        )
        K = KObject(C, M, n, obj, projection, [L.carrier(t).total_dim for t in range(S + 1)])
    if check:
        report, _ = K.verify()
        report.raise_if_invalid()
    return K


def k_object_map(f, K, K2):
    """
    The map of K-objects induced by a comodule map ``f: M -> M'``.

    Parameters
    ----------
    f : GradedLinearMap
        A map of C-comodules from ``K.M`` to ``K2.M``.

    K, K2 : KObject
        Objects of type ``K_C(M, n)`` and ``K_C(M', n)`` over the same C.

    Returns
    -------
    map : CosimplicialMap
        Identity on C and f on every copy of M.

    Raises
    ------
    ValidationError
        If f is not a comodule map or the induced map fails to commute with
        the structure maps.

    """
    if K.C is not K2.C or K.n != K2.n or K.S != K2.S:
        raise ValueError("K-objects of different shape")
    if not comodule_map_ok(K.M, K2.M, f):
        raise ValidationError("Not a map of comodules")
    field = f.field
    C = K.C
    components = []
    for t in range(K.S + 1):
        source, target = K.object.levels[t], K2.object.levels[t]
        columns = {c: {c: field.one} for c in C.carrier.labels()}
        if K.n == 0:
            for m in K.M.carrier.labels():
                columns[m] = f.image_of(m)
        else:
            for sigma, m in source.module.carrier.labels():
                columns[(sigma, m)] = {
                    (sigma, y): c for y, c in f.image_of(m).items()
                }
        components.append(GradedLinearMap(source.carrier, target.carrier, columns))
    F = CosimplicialMap(K.object, K2.object, components, name="K(f)")
    report = F.validate()
    for t in range(K.S + 1):
        lhs = K2.projection.components[t].compose(components[t])
        if lhs != K.projection.components[t]:
            report.add("commutes with the maps to cC", "level %i" % t)
    report.raise_if_invalid()
    return F


def k_object_by_pullback(C, M, S, caps=None, cross_check=False, verbose=False):
    """
    The object ``cC ×^h_{c ι_C(M)} cC``, of type ``K_C(M, 1)``.

    Returns the derived cotensor and a report. The report compares ``π^0``
    with C along ``c -> [Δ c]`` and, when ``S >= 2``, checks that ``π^1``,
    corestricted to a C-comodule along the inverse, is isomorphic to M as a
    comodule.
    """
    E = iota(C, M)
    inclusion = CosimplicialMap.constant(E.inclusion, S)
    pullback = homotopy_pullback(
        inclusion, inclusion, caps=caps, cross_check=cross_check, verbose=verbose
    )
    report = ValidationReport("pullback of cC -> cι(%s) <- cC" % M.name)
    field = C.field
    pi0 = pullback.cohomotopy(0)
    if pi0.dims() != C.carrier.dims():
        report.add("π^0 is C", "π^0", "dims %r" % pi0.dims())
        return pullback, report
    # level 0 is C ⊗ C and π^0 is the cotensor C □_E C, which Δ identifies with C
    phi0 = {c: pi0.class_of(C.delta(c)) for c in C.carrier.labels()}
    inverse = {}
    for t in range(C.max_degree + 1):
        labels = C.carrier.basis(t)
        generators = [phi0[c] for c in labels]
        for g in pi0.space.basis(t):
            coeffs = express(field, generators, {g: field.one})
            if coeffs is None:
                report.add("π^0 is C", g, "not in the image of Δ")
                return pullback, report
            inverse[g] = {c: x for c, x in zip(labels, coeffs) if x}
    pi0_coalgebra = pi0.coalgebra()
    psi = CoalgebraMap.from_columns(pi0_coalgebra, C, inverse)
    for v in psi.check().violations:
        report.add("π^0 is C", v.witness, v.axiom)
    if S >= 2:
        pi1 = pullback.cohomotopy(1)
        if pi1.dims() != M.carrier.dims():
            report.add("π^1 is M", "π^1", "dims %r" % pi1.dims())
        elif report.ok:
            N = restrict_comodule(pi1.comodule(pi0=pi0), psi)
            if comodule_isomorphism(M, N) is None:
                report.add("π^1 is M", "π^1", "coaction")
    return pullback, report
