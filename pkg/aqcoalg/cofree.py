# -*- coding: utf-8 -*-

"""
Truncated cofree unstable coalgebras and the resolution by the cofree monad.

The cofree coalgebra ``G(V)`` on a graded space V is described through its
dual. Over F2 the dual is the polynomial algebra on the classes ``Sq^I v``
with ``I`` admissible of excess less than ``|v|``, tensored with the group
ring of ``V_0``. Over Q it is the free graded commutative algebra on V, and
``V_0`` must vanish. The basis of ``G(V)`` is dual to the monomials, so the
coproduct of a basis element sums over all ways of splitting its exponents.

Author: Gertjan van den Burg

"""

import hashlib
import itertools
import json

from .caps import Caps
from .coalgebra import Coalgebra
from .coalgebra import CoalgebraMap
from .coalgebra import coalgebra_map_freedom
from .coalgebra import enumerate_coalgebra_maps
from .coalgebra import is_grouplike
from .coalgebra import validate_coalgebra
from .cosimplicial import CosimplicialObject
from .exceptions import UnsupportedInput
from .linalg import Field
from .linalg import GradedLinearMap
from .linalg import GradedVectorSpace
from .linalg import add_term
from .linalg import format_label
from .linalg import linear_rank
from .steenrod import UnstableRightModule
from .steenrod import adem_normalize
from .steenrod import excess
from .steenrod import format_monomial
from .steenrod import free_unstable_algebra_generators
from .validation import ValidationReport


class FreeGenerator(object):
    """A polynomial generator ``Sq^I v`` of the dual of ``G(V)``."""

    __slots__ = ("operation", "label")

    def __init__(self, operation, label):
        self.operation = tuple(operation)
        self.label = label

    def __eq__(self, other):
        if not isinstance(other, FreeGenerator):
            return False
        return self.operation == other.operation and self.label == other.label

    def __hash__(self):
        return hash(("FreeGenerator", self.operation, self.label))

    def __repr__(self):
        inner = "{%s}" % format_label(self.label)
        if not self.operation:
            return inner
        return format_monomial(self.operation) + inner

    __str__ = __repr__


class DualMonomial(object):
    """
    Basis label of ``G(V)``: the dual of a monomial, on a point of ``V_0``.

    ``point`` is the tuple of degree zero labels with coefficient one, or
    None when ``V_0`` vanishes; ``factors`` lists ``(generator, exponent)``
    in generator order.
    """

    __slots__ = ("point", "factors")

    def __init__(self, point, factors):
        self.point = point
        self.factors = tuple(factors)

    def __eq__(self, other):
        if not isinstance(other, DualMonomial):
            return False
        return self.point == other.point and self.factors == other.factors

    def __hash__(self):
        return hash(("DualMonomial", self.point, self.factors))

    def __repr__(self):
        parts = []
        for g, e in self.factors:
            parts.append(str(g) if e == 1 else "%s^%i" % (g, e))
        text = "·".join(parts) if parts else "1"
        if self.point is None:
            return text
        where = "[%s]" % "+".join(format_label(x) for x in self.point)
        return where if not parts else where + "⊗" + text

    __str__ = __repr__


def _generators(V, max_degree):
    """Generators of the dual algebra as ``(FreeGenerator, degree)``."""
    out = []
    for n in range(1, V.max_degree + 1):
        for v in V.basis(n):
            if V.field is Field.F2:
                for op, d in free_unstable_algebra_generators(n, max_degree):
                    out.append((FreeGenerator(op, v), d))
            elif n <= max_degree:
                out.append((FreeGenerator((), v), n))
    # stable sort keeps the order of V within a degree
    return sorted(out, key=lambda gd: gd[1])


def _series(degrees, odd, max_degree):
    series = [1] + [0] * max_degree
    for d, o in zip(degrees, odd):
        if o:
            for n in range(max_degree, d - 1, -1):
                series[n] += series[n - d]
        else:
            for n in range(d, max_degree + 1):
                series[n] += series[n - d]
    return series


def monomial_basis(degrees, odd, max_degree, caps=None, stage="monomials"):
    """
    Exponent tuples of total degree at most ``max_degree``, by degree.

    Generators flagged in ``odd`` have exponents at most one. The size is
    counted before enumerating and checked against the budget.
    """
    caps = caps or Caps()
    caps.check(stage, sum(_series(degrees, odd, max_degree)))
    partial = [((), 0)]
    for d, o in zip(degrees, odd):
        nxt = []
        for exps, deg in partial:
            top = 1 if o else (max_degree - deg) // d
            for e in range(top + 1):
                if deg + e * d > max_degree:
                    break
                nxt.append((exps + (e,), deg + e * d))
        partial = nxt
    out = [[] for _ in range(max_degree + 1)]
    for exps, deg in partial:
        out[deg].append(exps)
    return out


def product_sign(field, b, c, odd):
    """Sign of ``y^b y^c = ± y^(b+c)`` in a free graded commutative
    algebra, or 0 when an odd generator would square."""
    parity = 0
    seen = 0
    for bi, ci, o in zip(b, c, odd):
        if not o:
            continue
        if bi and ci:
            return field.zero
        parity += bi * seen
        seen += ci
    return field.sign(parity)


class _DualAction(object):
    """Left action of the Steenrod squares on the polynomial dual of
    ``G(V)``, through the Cartan formula and Adem relations."""

    def __init__(self, generators, degrees, max_degree):
        self.generators = generators
        self.degrees = degrees
        self.max_degree = max_degree
        self.index = {g: i for i, g in enumerate(generators)}
        self._mono = {}
        self._gen = {}
        self._unit = (0,) * len(generators)

    def _degree(self, exps):
        return sum(e * d for e, d in zip(exps, self.degrees))

    def _basis_vector(self, i, power=1):
        if power * self.degrees[i] > self.max_degree:
            return {}
        exps = list(self._unit)
        exps[i] = power
        return {tuple(exps): 1}

    def _multiply(self, p, q):
        out = {}
        for a in p:
            for b in q:
                exps = tuple(x + y for x, y in zip(a, b))
                if self._degree(exps) <= self.max_degree:
                    out[exps] = out.get(exps, 0) ^ 1
        return {k: 1 for k, v in out.items() if v}

    def _square(self, p):
        out = {}
        for a in p:
            exps = tuple(2 * x for x in a)
            if self._degree(exps) <= self.max_degree:
                out[exps] = 1
        return out

    def evaluate(self, word, v, n):
        """``Sq^word`` applied to the class of v, for an admissible word."""
        if not word:
            return self._basis_vector(self.index[FreeGenerator((), v)])
        if excess(word) < n:
            key = FreeGenerator(word, v)
            if key not in self.index:
                return {}
            return self._basis_vector(self.index[key])
        inner = n + sum(word[1:])
        if word[0] > inner:
            return {}
        return self._square(self.evaluate(word[1:], v, n))

    def on_generator(self, i, k):
        key = (i, k)
        if key in self._gen:
            return self._gen[key]
        g = self.generators[i]
        d = self.degrees[i]
        if k == 0:
            out = self._basis_vector(i)
        elif k > d:
            out = {}
        elif k == d:
            out = self._basis_vector(i, power=2)
        else:
            out = {}
            n = d - sum(g.operation)
            for word in adem_normalize((k,) + g.operation).terms:
                for exps in self.evaluate(word, g.label, n):
                    out[exps] = out.get(exps, 0) ^ 1
            out = {e: 1 for e, c in out.items() if c}
        self._gen[key] = out
        return out

    def on_monomial(self, exps, k):
        key = (exps, k)
        if key in self._mono:
            return self._mono[key]
        if k == 0:
            out = {exps: 1}
        else:
            first = next((i for i, e in enumerate(exps) if e), None)
            if first is None:
                out = {}
            else:
                rest = list(exps)
                rest[first] -= 1
                rest = tuple(rest)
                out = {}
                for j in range(k + 1):
                    head = self.on_generator(first, j)
                    if not head:
                        continue
                    tail = self.on_monomial(rest, k - j)
                    for exps2 in self._multiply(head, tail):
                        out[exps2] = out.get(exps2, 0) ^ 1
                out = {e: 1 for e, c in out.items() if c}
        self._mono[key] = out
        return out



class CofreeCoalgebra(Coalgebra):
    """
    The truncated cofree unstable coalgebra ``G(V)``.

    Besides the coalgebra structure it keeps the cogenerating space
    ``source``, the generator ledger ``generators`` (pairs of
    :class:`FreeGenerator` and degree), the points of ``V_0`` and the
    projection ``G(V) -> V`` that makes it cofree.

    """

    def __init__(
        self,
        source,
        generators,
        points,
        monomials,
        projection,
        *args,
        **kwargs
    ):
        super().__init__(*args, **kwargs)
        self.source = source
        self.generators = generators
        self.points = points
        self.monomials = monomials
        self.exponents = {}
        gens = [g for g, _ in generators]
        for row in monomials:
            for label in row:
                powers = dict(label.factors)
                self.exponents[label] = tuple(powers.get(g, 0) for g in gens)
        self.projection = GradedLinearMap(self.carrier, source, projection)

    def ledger(self):
        """The generators of the dual algebra, for reports."""
        return [dict(generator=str(g), degree=d) for g, d in self.generators]

    def on_point(self, point, label):
        return DualMonomial(point, label.factors)

    def lift(self, X, phi):
        """
        The coalgebra map ``X -> G(V)`` whose composite with the projection
        is the linear map ``phi: X -> V``.

        Parameters
        ----------
        X : Coalgebra
            The source. Its degree zero basis must be grouplike when ``V_0``
            is nonzero.

        phi : GradedLinearMap
            A degree preserving map from the carrier of X to V.

        Returns
        -------
        f : CoalgebraMap
            The unique map of unstable coalgebras lifting ``phi``.

        """
        field = self.field
        if phi.source != X.carrier or phi.target != self.source:
            raise ValueError("The map to lift does not go from X to V")
        if X.max_degree != self.max_degree:
            raise ValueError("X and G(V) have different degree caps")
        action = X.action() if field is Field.F2 else None
        gens = [g for g, _ in self.generators]
        degrees = [d for _, d in self.generators]
        degree = X.carrier.degree
        memo = {}

        def generator_value(i, x):
            g = gens[i]
            image = {x: field.one}
            if g.operation:
                image = action.act_monomial(image, g.operation)
            out = field.zero
            for y, c in image.items():
                out = field.add(
                    out, field.mul(c, phi.image_of(y).get(g.label, field.zero))
                )
            return out

        def pairing(exps, x):
            key = (exps, x)
            if key in memo:
                return memo[key]
            first = next((i for i, e in enumerate(exps) if e), None)
            if first is None:
                value = X.epsilon(x)
            else:
                rest = list(exps)
                rest[first] -= 1
                rest = tuple(rest)
                value = field.zero
                for (a, b), c in X.delta(x).items():
                    if degree(a) != degrees[first]:
                        continue
                    head = generator_value(first, a)
                    if not head:
                        continue
                    tail = pairing(rest, b)
                    if tail:
                        value = field.add(
                            value, field.mul(c, field.mul(head, tail))
                        )
            memo[key] = value
            return value

        def positive(x):
            out = {}
            for label in self.monomials[degree(x)]:
                value = pairing(self.exponents[label], x)
                if value:
                    out[label] = value
            return out

        columns = {}
        if self.points is None:
            for x in X.carrier.labels():
                columns[x] = positive(x)
            return CoalgebraMap.from_columns(X, self, columns)

        point_of = {}
        for g in X.carrier.basis(0):
            if not is_grouplike(X, {g: field.one}):
                raise UnsupportedInput(
                    "Degree zero basis element %s is not grouplike"
                    % format_label(g)
                )
            image = phi.image_of(g)
            point_of[g] = tuple(y for y in self.source.basis(0) if image.get(y))
        for x in X.carrier.labels():
            image = {}
            for (a, b), c in X.delta(x).items():
                if a not in point_of:
                    continue
                for label, value in positive(b).items():
                    target = self.on_point(point_of[a], label)
                    add_term(field, image, target, field.mul(c, value))
            columns[x] = image
        return CoalgebraMap.from_columns(X, self, columns)


def _recap(V, D):
    return GradedVectorSpace(
        V.field, D, [V.basis(n) for n in range(min(D, V.max_degree) + 1)]
    )


def cofree_coalgebra(V, max_degree=None, caps=None, stage=None, verbose=False):
    """
    The cofree unstable coalgebra ``G(V)`` truncated at the degree cap.

    Parameters
    ----------
    V : GradedVectorSpace
        The cogenerating space. Over Q it must vanish in degree zero.

    max_degree : int
        The degree cap, by default that of V.

    caps : Caps
        Budget for the total dimension.

    stage : str
        Name of the stage for budget diagnostics.

    verbose : bool
        Print progress.

    Returns
    -------
    G : CofreeCoalgebra
        The coalgebra with its generator ledger and projection to V.

    Raises
    ------
    UnsupportedInput
        Over Q when ``V_0`` is nonzero. Its degree zero part would be the
        set-like coalgebra on the infinitely many points of ``V_0``, so the
        rational theory is only set up for connected coalgebras.

    BudgetExceeded
        If ``G(V)`` would exceed the budget. The size is counted before
        anything is built.

    """
    log = lambda *a, **kw: print(*a, **kw) if verbose else None
    caps = caps or Caps()
    stage = stage or "cofree coalgebra"
    field = V.field
    D = V.max_degree if max_degree is None else max_degree
    if V.max_degree != D:
        V = _recap(V, D)
    if field is Field.Q and V.dim(0):
        raise UnsupportedInput(
            "Rational cofree coalgebras are only built for V_0 = 0: the degree"
            " zero part would be the set-like coalgebra on the points of the"
            " rational vector space V_0, which has infinitely many, so rational"
            " André-Quillen cohomology of non-connected coalgebras is left"
            " undefined"
        )
    generators = _generators(V, D)
    gens = [g for g, _ in generators]
    degrees = [d for _, d in generators]
    if field is Field.F2:
        odd = [False] * len(gens)
    else:
        odd = [bool(d % 2) for d in degrees]

    points = None
    if V.dim(0):
        zero = list(V.basis(0))
        caps.check(stage, 2 ** len(zero))
        points = []
        for bits in itertools.product((0, 1), repeat=len(zero)):
            points.append(tuple(x for x, b in zip(zero, bits) if b))
    factor = 1 if points is None else len(points)
    caps.check(stage, factor * sum(_series(degrees, odd, D)))
    by_degree = monomial_basis(degrees, odd, D, caps=caps, stage=stage)
    on_points = [None] if points is None else points

    def label_of(point, exps):
        return DualMonomial(point, ((g, e) for g, e in zip(gens, exps) if e))

    monomials = [[label_of(None, e) for e in row] for row in by_degree]
    basis = [
        [label_of(p, e) for p in on_points for e in by_degree[n]]
        for n in range(D + 1)
    ]
    carrier = GradedVectorSpace(field, D, basis)
    log("%s: %i generators, dims %r" % (stage, len(gens), carrier.dims()))

    coproduct = {}
    for n in range(D + 1):
        for p in on_points:
            for exps in by_degree[n]:
                d = {}
                for b in itertools.product(*(range(e + 1) for e in exps)):
                    c = tuple(e - x for e, x in zip(exps, b))
                    sign = product_sign(field, b, c, odd)
                    if sign:
                        add_term(
                            field, d, (label_of(p, b), label_of(p, c)), sign
                        )
                coproduct[label_of(p, exps)] = d
    unit = (0,) * len(gens)
    counit = {label_of(p, unit): field.one for p in on_points}

    steenrod = None
    if field is Field.F2:
        dual = _DualAction(gens, degrees, D)
        table = {}
        for n in range(D + 1):
            for exps in by_degree[n]:
                for k in range(1, D - n + 1):
                    for target in dual.on_monomial(exps, k):
                        for p in on_points:
                            row = table.setdefault((label_of(p, target), k), {})
                            source = label_of(p, exps)
                            row[source] = row.get(source, 0) ^ 1
        steenrod = UnstableRightModule(carrier, table)

    projection = {}
    for i, g in enumerate(gens):
        if g.operation:
            continue
        exps = tuple(1 if j == i else 0 for j in range(len(gens)))
        for p in on_points:
            projection[label_of(p, exps)] = {g.label: field.one}
    if points is not None:
        for p in points:
            projection[label_of(p, unit)] = {x: field.one for x in p}
    basepoint = label_of(None if points is None else (), unit)
    return CofreeCoalgebra(
        V,
        generators,
        points,
        monomials,
        projection,
        carrier,
        coproduct,
        counit,
        steenrod=steenrod,
        basepoint=basepoint,
        grouplikes=None
        if points is None
        else [{label_of(p, unit): field.one} for p in points],
        name="G(%s)" % getattr(V, "name", "V"),
    )


def cogenerators(X):
    """
    The space ``J(X)`` a resolution stage is cogenerated by, with the
    projection from X.

    For connected X this is the positive degree part; otherwise the whole
    carrier, which only the F2 theory supports.
    """
    if X.is_connected():
        labels = [
            list(X.carrier.basis(n)) if n else []
            for n in range(X.max_degree + 1)
        ]
    elif X.field is Field.Q:
        raise UnsupportedInput(
            "Rational resolutions are only built for connected coalgebras: the"
            " cofree coalgebra on a nonzero V_0 would need the infinitely many"
            " points of a rational vector space"
        )
    else:
        labels = [list(X.carrier.basis(n)) for n in range(X.max_degree + 1)]
    V = GradedVectorSpace(X.field, X.max_degree, labels)
    V.name = "J%s" % X.name
    projection = GradedLinearMap(
        X.carrier, V, {x: {x: X.field.one} for x in V.labels()}
    )
    return V, projection


class ComonadResolution(object):
    """
    The cosimplicial resolution ``X^s = (GJ)^(s+1) D`` of a coalgebra D
    under C.

    Attributes
    ----------
    under : CoalgebraMap
        The structure map ``u: C -> D``.

    stages : list of CofreeCoalgebra
        The levels ``X^0, ..., X^S``.

    object : CosimplicialObject
        The resolution with its cofaces and codegeneracies.

    augmentation : CoalgebraMap
        The unit ``D -> X^0``.

    """

    def __init__(self, under, stages, obj, augmentation):
        self.under = under
        self.stages = stages
        self.object = obj
        self.augmentation = augmentation
        self._under = {}

    @property
    def S(self):
        return self.object.S

    def under_map(self, s):
        """The structure map ``C -> X^s``: the augmentation followed by
        ``d^0`` repeatedly."""
        if s in self._under:
            return self._under[s]
        if s == 0:
            f = self.augmentation.compose(self.under)
        else:
            prev = self.under_map(s - 1)
            d0 = CoalgebraMap(
                self.stages[s - 1], self.stages[s], self.object.coface(s - 1, 0)
            )
            f = d0.compose(prev)
        self._under[s] = f
        return f

    def dims(self):
        return [G.carrier.dims() for G in self.stages]

    def fingerprint(self):
        """Hash of the stage dimensions, identical across runs."""
        data = dict(
            field=self.under.field.value,
            base=self.under.target.carrier.dims(),
            stages=self.dims(),
        )
        blob = json.dumps(data, sort_keys=True).encode("utf-8")
        return hashlib.sha256(blob).hexdigest()

    def validate(self):
        """
        Check the stages, the cosimplicial identities, that every structure
        map is a map of unstable coalgebras and that the augmentation
        equalizes every pair of cofaces out of each level.
        """
        report = ValidationReport("resolution of %s" % self.under.target.name)
        for G in self.stages:
            report.extend(validate_coalgebra(G))
        report.extend(self.object.validate())
        report.extend(self.augmentation.check())
        d = self.object.coface
        if self.S:
            eta = self.augmentation.linear
            if d(0, 0).compose(eta) != d(0, 1).compose(eta):
                report.add("augmentation equalizes cofaces", self.under.target.name)
        for s in range(self.S):
            u = self.under_map(s).linear
            first = d(s, 0).compose(u)
            for i in range(1, s + 2):
                if d(s, i).compose(u) != first:
                    report.add(
                        "augmentation equalizes cofaces",
                        "level %i" % s,
                        "d^0 and d^%i differ" % i,
                    )
        return report


def comonad_resolution(under, s_max, caps=None, check=True, verbose=False):
    """
    Resolve the coalgebra D under C by the monad ``T = GJ``.

    Parameters
    ----------
    under : CoalgebraMap or Coalgebra
        The structure map ``u: C -> D``. A bare coalgebra D is taken under
        the terminal coalgebra through its basepoint.

    s_max : int
        The top level S of the truncated resolution.

    caps : Caps
        Budget for every stage.

    check : bool
        Validate the result and raise on failure.

    verbose : bool
        Print progress.

    Returns
    -------
    resolution : ComonadResolution
        The resolution with its augmentation and structure maps under C.

    Raises
    ------
    BudgetExceeded
        If a stage would be too large; the stage index is in the message.

    """
    log = lambda *a, **kw: print(*a, **kw) if verbose else None
    caps = caps or Caps()
    if not isinstance(under, CoalgebraMap):
        under = _under_terminal(under)
    D = under.target
    if s_max < 0:
        raise ValueError("Resolution length must be non-negative")

    # towers[k] is T^k D, cogen[k] its cogenerators
    towers = [D]
    cogen = []
    for k in range(s_max + 1):
        V, proj = cogenerators(towers[k])
        cogen.append((V, proj))
        G = cofree_coalgebra(
            V,
            D.max_degree,
            caps=caps,
            stage="resolution stage %i" % k,
            verbose=verbose,
        )
        G.name = "T%i%s" % (k + 1, D.name)
        towers.append(G)
    log("Stage dimensions: %r" % [G.carrier.total_dim for G in towers[1:]])

    def apply_T(f, a, b):
        """``T(f)`` for ``f: T^a D -> T^b D``."""
        Ga, Gb = towers[a + 1], towers[b + 1]
        Va, Vb = Ga.source, Gb.source
        _, proj = cogen[b]
        Jf = GradedLinearMap(
            Va, Vb, {v: proj(f.image_of(v)) for v in Va.labels()}
        )
        return Gb.lift(Ga, Jf.compose(Ga.projection))

    units = {}
    products = {}

    def unit(k, i):
        """``T^i η`` at ``T^k D``, a map ``T^(k+i) D -> T^(k+i+1) D``."""
        if (k, i) not in units:
            if i == 0:
                _, proj = cogen[k]
                f = towers[k + 1].lift(towers[k], proj)
            else:
                f = apply_T(unit(k, i - 1), k + i - 1, k + i)
            units[(k, i)] = f
        return units[(k, i)]

    def product(k, i):
        """``T^i μ`` at ``T^k D``, a map ``T^(k+i+2) D -> T^(k+i+1) D``."""
        if (k, i) not in products:
            if i == 0:
                outer, inner = towers[k + 2], towers[k + 1]
                f = inner.lift(outer, _collapse(inner, outer))
            else:
                f = apply_T(product(k, i - 1), k + i + 1, k + i)
            products[(k, i)] = f
        return products[(k, i)]

    stages = towers[1:]
    cofaces = {}
    codegeneracies = {}
    for s in range(s_max):
        for i in range(s + 2):
            cofaces[(s, i)] = unit(s + 1 - i, i).linear
        for j in range(s + 1):
            codegeneracies[(s, j)] = product(s - j, j).linear
    log("Built %i cofaces and %i codegeneracies" % (len(cofaces), len(codegeneracies)))
    obj = CosimplicialObject(
        "coalgebra", stages, cofaces, codegeneracies, name="T%s" % D.name
    )
    resolution = ComonadResolution(under, stages, obj, unit(0, 0))
    if check:
        resolution.validate().raise_if_invalid()
    return resolution


def _collapse(inner, outer):
    """The linear map ``GJG(V) -> JG(V) -> V`` whose lift is the monad
    multiplication, for ``inner = G(V)`` and ``outer = GJ(inner)``."""
    include = GradedLinearMap(
        outer.source,
        inner.carrier,
        {v: {v: inner.field.one} for v in outer.source.labels()},
    )
    return inner.projection.compose(include).compose(outer.projection)


def _under_terminal(D):
    field = D.field
    C = Coalgebra.terminal(field, D.max_degree)
    point = D.basepoint if D.basepoint is not None else D.unit_label()
    if point is None:
        raise ValueError("Give the structure map; D has no basepoint")
    return CoalgebraMap.from_columns(C, D, {C.basepoint: {point: field.one}})


def adjunction_check(C, V, caps=None, limit=4096):
    """
    Compare coalgebra maps ``C -> G(V)`` with linear maps ``J(C) -> V``.

    Per degree, the freedom of a coalgebra map extending a fixed degree zero
    part must equal ``dim J(C)_n * dim V_n``. Over F2 the maps are also
    counted by enumeration and compared with ``2^(sum dim J(C)_n dim V_n)``.
    A fixed linear map is lifted, and the lift is checked to be a map of
    unstable coalgebras that projects back to the linear map.

    Returns
    -------
    result : dict
        Rows per degree, the counts, and the validation report.

    """
    caps = caps or Caps()
    G = cofree_coalgebra(V, C.max_degree, caps=caps, stage="adjunction")
    field = C.field
    report = ValidationReport("adjunction for %s" % C.name)
    V = G.source
    J, _ = cogenerators(C)

    degree_zero = {}
    for x in C.carrier.basis(0):
        eps = C.epsilon(x)
        if eps:
            degree_zero[x] = {G.basepoint: eps}
    rows = []
    for row in coalgebra_map_freedom(C, G, degree_zero):
        n = row["degree"]
        row = dict(row, expected=J.dim(n) * V.dim(n))
        if not row["solvable"] or row["freedom"] != row["expected"]:
            report.add("cofree adjunction", "degree %i" % n, repr(row))
        rows.append(row)

    # every basis vector to the sum of the basis of V in its degree
    columns = {}
    for x in J.labels():
        columns[x] = {v: field.one for v in V.basis(J.degree(x))}
    phi = GradedLinearMap(C.carrier, V, columns)
    lifted = G.lift(C, phi)
    report.extend(lifted.check())
    if G.projection.compose(lifted.linear) != phi:
        report.add("lift projects to the given map", C.name)

    counted = expected = None
    if field is Field.F2:
        expected = 2 ** sum(J.dim(n) * V.dim(n) for n in range(C.max_degree + 1))
        counted = len(enumerate_coalgebra_maps(C, G, limit=limit))
        if counted != expected:
            report.add(
                "cofree adjunction",
                C.name,
                "%i maps, expected %i" % (counted, expected),
            )
    return dict(rows=rows, counted=counted, expected=expected, report=report)


def cogeneration_check(f, m, caps=None):
    """
    Spot check that maps into ``G(F[m])`` detect the coalgebra map
    ``f: C -> D`` in degree m.

    Lifting a functional ``χ: D_m -> F`` and precomposing with f must agree
    with lifting ``χ f``. Restriction along f is then surjective on maps
    into ``G(F[m])`` exactly when f is injective in degree m.

    Returns
    -------
    report : ValidationReport
        Failures of naturality.

    surjective : bool
        Whether every map ``C -> G(F[m])`` factors through f.

    """
    caps = caps or Caps()
    C, D = f.source, f.target
    field = f.field
    if not 0 < m <= D.max_degree:
        raise ValueError("Degree %i outside 1..%i" % (m, D.max_degree))
    V = GradedVectorSpace(field, D.max_degree, [[]] * m + [["v"]])
    G = cofree_coalgebra(V, caps=caps, stage="cogeneration")
    report = ValidationReport("cogeneration along %s" % D.name)
    for y in D.carrier.basis(m):
        chi = GradedLinearMap(D.carrier, V, {y: {"v": field.one}})
        lhs = G.lift(D, chi).compose(f).linear
        rhs = G.lift(C, chi.compose(f.linear)).linear
        if lhs != rhs:
            report.add("naturality of the lift", y)
    rank = linear_rank(field, C.carrier.basis(m), f.image_of)
    return report, rank == C.carrier.dim(m)
