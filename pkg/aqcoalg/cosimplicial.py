# -*- coding: utf-8 -*-

"""
Truncated cosimplicial objects, their normalization and cohomotopy.

A truncated object stores the levels ``X^0, ..., X^S`` together with the
cofaces ``d^i: X^n -> X^(n+1)`` and codegeneracies ``s^j: X^(n+1) -> X^n``
as graded linear maps. Levels are graded spaces, comodules over a coalgebra,
or coalgebras.

Statements about ``π^s`` are only made for ``s <= S - 1``: the differential
out of level ``S - 1`` needs level ``S``.

Author: Gertjan van den Burg

"""

import functools
import itertools

from .coalgebra import Coalgebra
from .coalgebra import CoalgebraMap
from .coalgebra import Comodule
from .coalgebra import quotient_comodule
from .coalgebra import sub_comodule
from .exceptions import UnsupportedInput
from .exceptions import ValidationError
from .linalg import Expresser
from .linalg import Field
from .linalg import GradedLinearMap
from .linalg import GradedVectorSpace
from .linalg import Subquotient
from .linalg import Subspace
from .linalg import add_term
from .linalg import cokernel
from .linalg import linear_kernel
from .linalg import linear_rank
from .linalg import vector_axpy
from .steenrod import UnstableRightModule
from .validation import ValidationReport

KINDS = ("space", "comodule", "coalgebra")


def carrier_of(obj):
    if isinstance(obj, GradedVectorSpace):
        return obj
    return obj.carrier


def kind_of(obj):
    if isinstance(obj, Coalgebra):
        return "coalgebra"
    if isinstance(obj, Comodule):
        return "comodule"
    if isinstance(obj, GradedVectorSpace):
        return "space"
    raise ValueError("Unsupported level type %r" % type(obj))


def coface_map(n, i):
    """The injection ``[n] -> [n+1]`` skipping ``i``."""
    return tuple(t if t < i else t + 1 for t in range(n + 1))


def codegeneracy_map(n, j):
    """The surjection ``[n+1] -> [n]`` hitting ``j`` twice."""
    return tuple(t if t <= j else t - 1 for t in range(n + 2))


@functools.lru_cache(maxsize=None)
def surjections(n):
    """Monotone surjections ``[n] -> [k]``, by increasing k.

    The identity of ``[n]`` comes last.
    """
    out = []
    for k in range(n + 1):
        for jumps in itertools.combinations(range(1, n + 1), k):
            value = 0
            seq = []
            for t in range(n + 1):
                if t in jumps:
                    value += 1
                seq.append(value)
            out.append(tuple(seq))
    return tuple(out)


def surjection_label(sigma):
    return "[%s]" % ",".join(str(v) for v in sigma)


def _zero_like(obj, field, max_degree):
    space = GradedVectorSpace.zero(field, max_degree)
    if isinstance(obj, Comodule):
        return Comodule(obj.base, space, {}, coabelian=True, name="0")
    return space


class CosimplicialObject(object):
    """
    A cosimplicial object truncated at level S.

    Parameters
    ----------
    kind : str
        One of ``space``, ``comodule`` or ``coalgebra``.

    levels : list
        The objects ``X^0, ..., X^S``.

    cofaces : dict
        Maps ``(n, i)`` to the graded linear map ``d^i: X^n -> X^(n+1)``.

    codegeneracies : dict
        Maps ``(n, j)`` to the graded linear map ``s^j: X^(n+1) -> X^n``.

    """

    def __init__(self, kind, levels, cofaces, codegeneracies, name=None):
        if kind not in KINDS:
            raise ValueError("Unknown carrier kind %r" % kind)
        self.kind = kind
        self.levels = list(levels)
        if not self.levels:
            raise ValueError("A cosimplicial object needs level 0")
        self.cofaces = dict(cofaces)
        self.codegeneracies = dict(codegeneracies)
        self.name = name or "X"
        for n in range(self.S):
            for i in range(n + 2):
                if (n, i) not in self.cofaces:
                    raise ValueError("Missing coface d^%i on level %i" % (i, n))
            for j in range(n + 1):
                if (n, j) not in self.codegeneracies:
                    raise ValueError(
                        "Missing codegeneracy s^%i on level %i" % (j, n + 1)
                    )

    @property
    def S(self):
        return len(self.levels) - 1

    @property
    def field(self):
        return self.carrier(0).field

    def carrier(self, n):
        return carrier_of(self.levels[n])

    def coface(self, n, i):
        return self.cofaces[(n, i)]

    def codegeneracy(self, n, j):
        return self.codegeneracies[(n, j)]

    def moore_differential(self, n):
        """The alternating sum of the cofaces out of level n."""
        field = self.field
        out = GradedLinearMap.zero(self.carrier(n), self.carrier(n + 1))
        for i in range(n + 2):
            out = out + self.coface(n, i).scale(field.sign(i))
        return out

    def total_codegeneracy(self, n):
        """The unique structure map ``X^n -> X^0``."""
        out = GradedLinearMap.identity(self.carrier(n))
        for k in range(n - 1, -1, -1):
            out = self.codegeneracy(k, 0).compose(out)
        return out

    def dims(self):
        return [self.carrier(n).dims() for n in range(self.S + 1)]

    def truncate(self, S):
        if S > self.S:
            raise ValueError("Cannot extend a truncated object")
        return CosimplicialObject(
            self.kind,
            self.levels[: S + 1],
            {k: v for k, v in self.cofaces.items() if k[0] < S},
            {k: v for k, v in self.codegeneracies.items() if k[0] < S},
            name=self.name,
        )

    def validate(self):
        """Check the cosimplicial identities and that the structure maps
        respect the level structure."""
        report = ValidationReport(self.name)
        d, s = self.coface, self.codegeneracy
        for n in range(self.S - 1):
            for j in range(n + 3):
                for i in range(j):
                    lhs = d(n + 1, j).compose(d(n, i))
                    if lhs != d(n + 1, i).compose(d(n, j - 1)):
                        report.add(
                            "cosimplicial identity",
                            "level %i" % n,
                            "d^%i d^%i != d^%i d^%i" % (j, i, i, j - 1),
                        )
            for j in range(n + 1):
                for i in range(j + 1):
                    lhs = s(n, j).compose(s(n + 1, i))
                    if lhs != s(n, i).compose(s(n + 1, j + 1)):
                        report.add(
                            "cosimplicial identity",
                            "level %i" % (n + 2),
                            "s^%i s^%i != s^%i s^%i" % (j, i, i, j + 1),
                        )
        for n in range(self.S):
            identity = GradedLinearMap.identity(self.carrier(n))
            for i in range(n + 2):
                for j in range(n + 1):
                    lhs = s(n, j).compose(d(n, i))
                    if i < j:
                        rhs = d(n - 1, i).compose(s(n - 1, j - 1))
                    elif i == j or i == j + 1:
                        rhs = identity
                    else:
                        rhs = d(n - 1, i - 1).compose(s(n - 1, j))
                    if lhs != rhs:
                        report.add(
                            "cosimplicial identity",
                            "level %i" % n,
                            "s^%i d^%i" % (j, i),
                        )
        for (n, i), f in sorted(self.cofaces.items()):
            report.extend(
                self._check_structure_map(
                    self.levels[n], self.levels[n + 1], f, "d^%i on level %i" % (i, n)
                )
            )
        for (n, j), f in sorted(self.codegeneracies.items()):
            report.extend(
                self._check_structure_map(
                    self.levels[n + 1], self.levels[n], f, "s^%i on level %i" % (j, n + 1)
                )
            )
        return report

    def _check_structure_map(self, source, target, f, where):
        report = ValidationReport(self.name)
        if self.kind == "coalgebra":
            for v in CoalgebraMap(source, target, f).check().violations:
                report.add(v.axiom, v.witness, where)
        elif self.kind == "comodule":
            if not comodule_map_ok(source, target, f):
                report.add("comodule map", where)
        return report


def comodule_map_ok(source, target, f, base_map=None):
    """Whether f commutes with the coactions, along ``base_map`` if given."""
    field = f.field
    for m in source.carrier.labels():
        lhs = target.rho_vector(f.image_of(m))
        rhs = {}
        for (c, y), coeff in source.rho(m).items():
            images = {c: field.one} if base_map is None else base_map.image_of(c)
            for e, ce in images.items():
                for z, cz in f.image_of(y).items():
                    add_term(field, rhs, (e, z), field.mul(coeff, field.mul(ce, cz)))
        if lhs != rhs:
            return False
    return True


def constant(obj, S, name=None):
    """The constant object ``cX`` with identity structure maps."""
    identity = GradedLinearMap.identity(carrier_of(obj))
    cofaces = {(n, i): identity for n in range(S) for i in range(n + 2)}
    codegeneracies = {(n, j): identity for n in range(S) for j in range(n + 1)}
    return CosimplicialObject(
        kind_of(obj),
        [obj] * (S + 1),
        cofaces,
        codegeneracies,
        name=name or "c%s" % getattr(obj, "name", "V"),
    )


class CochainComplex(object):
    """
    A cochain complex ``N^0 -> N^1 -> ... -> N^S`` of graded spaces or
    comodules.

    ``inclusions`` optionally records maps ``N^n -> X^n`` into the levels of a
    cosimplicial object the complex was normalized from.

    """

    def __init__(self, objects, differentials, inclusions=None, name=None):
        self.objects = list(objects)
        self.differentials = list(differentials)
        if len(self.differentials) != len(self.objects) - 1:
            raise ValueError("Expected one differential per level below S")
        for n, f in enumerate(self.differentials):
            if f.source != self.carrier(n) or f.target != self.carrier(n + 1):
                raise ValueError("Differential %i has the wrong shape" % n)
            if f.shift != 0:
                raise ValueError("Differentials preserve internal degree")
        self.inclusions = inclusions
        self.name = name or "N"

    @property
    def S(self):
        return len(self.objects) - 1

    @property
    def field(self):
        return self.carrier(0).field

    def carrier(self, n):
        return carrier_of(self.objects[n])

    def differential(self, n):
        return self.differentials[n]

    def dims(self):
        return [self.carrier(n).dims() for n in range(self.S + 1)]

    def validate(self):
        report = ValidationReport(self.name)
        for n in range(self.S - 1):
            if not self.differential(n + 1).compose(self.differential(n)).is_zero():
                report.add("d o d = 0", "level %i" % n)
        return report

    def cohomology(self, s):
        return Cohomology(self, s)

    def cohomology_dims(self, s_max=None):
        s_max = self.S - 1 if s_max is None else s_max
        return [self.cohomology(s).space.dims() for s in range(s_max + 1)]


class Cohomology(object):
    """
    ``H^s`` of a cochain complex, per internal degree.

    Basis labels are ``h:<degree>:<index>`` and ``representatives`` maps them
    to cocycles of ``N^s``.

    """

    def __init__(self, complex_, s):
        if s < 0 or s > complex_.S - 1:
            raise ValueError(
                "H^%i needs levels up to %i, the complex stops at %i"
                % (s, s + 1, complex_.S)
            )
        self.complex = complex_
        self.s = s
        field = complex_.field
        N = complex_.carrier(s)
        self.carrier_space = N
        dout = complex_.differential(s)
        din = complex_.differential(s - 1) if s > 0 else None
        basis = [[] for _ in range(N.max_degree + 1)]
        self.representatives = {}
        self._quotients = {}
        self._labels = {}
        for q in range(N.max_degree + 1):
            cycles = linear_kernel(field, N.basis(q), dout.image_of)
            boundaries = []
            if din is not None:
                boundaries = [
                    din.image_of(x) for x in complex_.carrier(s - 1).basis(q)
                ]
            sq = Subquotient(field, cycles.vectors, boundaries, N.position)
            labels = []
            for i, vec in enumerate(sq.vectors):
                label = "h:%i:%i" % (q, i)
                labels.append(label)
                self.representatives[label] = vec
            basis[q] = labels
            self._quotients[q] = sq
            self._labels[q] = labels
        self.space = GradedVectorSpace(field, N.max_degree, basis)

    @property
    def field(self):
        return self.space.field

    def dims(self):
        return self.space.dims()

    def project(self, vector):
        """Class of a cocycle of ``N^s`` in the basis of ``H^s``."""
        by_degree = {}
        for x, c in vector.items():
            by_degree.setdefault(self.carrier_space.degree(x), {})[x] = c
        out = {}
        for q, part in by_degree.items():
            coords = self._quotients[q].project(part)
            for label, c in zip(self._labels[q], coords):
                if c:
                    out[label] = c
        return out


def normalize(X):
    """
    The normalized cochain complex ``N(X)``.

    ``N^n`` is the intersection of the kernels of the codegeneracies out of
    ``X^n`` with basis ``ker:<degree>:<index>``; ``N^0 = X^0``. The
    differential is the alternating sum of the cofaces.

    """
    field = X.field
    objects = [X.levels[0]]
    inclusions = [GradedLinearMap.identity(X.carrier(0))]
    coordinates = [lambda v: dict(v)]
    for n in range(1, X.S + 1):
        level = X.carrier(n)
        maps = [X.codegeneracy(n - 1, j) for j in range(n)]

        def image(x, maps=maps):
            out = {}
            for j, f in enumerate(maps):
                for y, c in f.image_of(x).items():
                    out[(j, y)] = c
            return out

        vectors = []
        pivots = []
        for q in range(level.max_degree + 1):
            sub = linear_kernel(field, level.basis(q), image)
            vectors.extend(sub.vectors)
            pivots.extend(sub.pivots)
        subspace = Subspace(field, vectors, pivots)
        if X.kind == "comodule":
            obj = sub_comodule(X.levels[n], subspace, prefix="ker")
            objects.append(obj)
            inclusions.append(obj.inclusion)
            coordinates.append(obj.coordinates)
        else:
            space, inclusion, coords = _subspace_level(level, subspace)
            objects.append(space)
            inclusions.append(inclusion)
            coordinates.append(coords)
    differentials = []
    for n in range(X.S):
        moore = X.moore_differential(n)
        columns = {}
        for label, vec in inclusions[n].columns.items():
            columns[label] = coordinates[n + 1](moore(vec))
        for label in carrier_of(objects[n]).labels():
            columns.setdefault(label, {})
        differentials.append(
            GradedLinearMap(
                carrier_of(objects[n]), carrier_of(objects[n + 1]), columns
            )
        )
    result = CochainComplex(
        objects, differentials, inclusions=inclusions, name="N(%s)" % X.name
    )
    result.coordinates = coordinates
    return result


def _subspace_level(level, subspace):
    field = level.field
    by_degree = {}
    for vec, pivot in zip(subspace.vectors, subspace.pivots):
        by_degree.setdefault(level.degree(pivot), []).append((vec, pivot))
    basis = [[] for _ in range(level.max_degree + 1)]
    columns = {}
    label_of_pivot = {}
    for q in sorted(by_degree):
        for i, (vec, pivot) in enumerate(by_degree[q]):
            label = "ker:%i:%i" % (q, i)
            basis[q].append(label)
            columns[label] = vec
            label_of_pivot[pivot] = label
    space = GradedVectorSpace(field, level.max_degree, basis)

    def coordinates(vector):
        out = {}
        for p, label in label_of_pivot.items():
            c = vector.get(p)
            if c:
                out[label] = c
        check = {}
        for label, c in out.items():
            vector_axpy(field, check, c, columns[label])
        if check != vector:
            raise ValueError("Vector is not normalized")
        return out

    return space, GradedLinearMap(space, level, columns), coordinates


def moore_complex(X):
    """The unnormalized complex with the alternating sum differential."""
    return CochainComplex(
        [X.carrier(n) for n in range(X.S + 1)],
        [X.moore_differential(n) for n in range(X.S)],
        name="C(%s)" % X.name,
    )


class CohomotopyGroup(object):
    """
    The cohomotopy ``π^s(X)`` with representatives in ``X^s``.

    Basis labels are ``pi<s>:<degree>:<index>``. When X is a cosimplicial
    coalgebra, ``coalgebra()`` gives the coalgebra ``π^0`` and ``comodule()``
    the ``π^0``-comodule ``π^s``; for a cosimplicial comodule over C,
    ``comodule()`` is a C-comodule.

    """

    def __init__(self, X, s, normalized=None):
        if s < 0 or s > X.S - 1:
            raise ValueError(
                "π^%i needs levels up to %i but the object stops at %i"
                % (s, s + 1, X.S)
            )
        self.X = X
        self.s = s
        self.field = X.field
        self.normalized = normalized if normalized is not None else normalize(X)
        self.cohomology = self.normalized.cohomology(s)
        inclusion = self.normalized.inclusions[s]
        rename = {}
        basis = []
        for q in range(self.cohomology.space.max_degree + 1):
            labels = []
            for i, h in enumerate(self.cohomology.space.basis(q)):
                label = "pi%i:%i:%i" % (s, q, i)
                rename[h] = label
                labels.append(label)
            basis.append(labels)
        self.space = GradedVectorSpace(self.field, X.carrier(s).max_degree, basis)
        self.representatives = {
            rename[h]: inclusion(v)
            for h, v in self.cohomology.representatives.items()
        }
        self._expressers = {}
        self._structure = None

    def dims(self):
        return self.space.dims()

    @property
    def total_dim(self):
        return self.space.total_dim

    def _expresser(self, q):
        if q not in self._expressers:
            level = self.X.carrier(self.s)
            labels = list(self.space.basis(q))
            generators = [self.representatives[h] for h in labels]
            if self.s > 0:
                moore = self.X.moore_differential(self.s - 1)
                generators += [
                    moore.image_of(x) for x in self.X.carrier(self.s - 1).basis(q)
                ]
            self._expressers[q] = (labels, Expresser(self.field, generators, level.position))
        return self._expressers[q]

    def class_of(self, vector):
        """
        The class of a cocycle of the unnormalized complex.

        Raises
        ------
        ValueError
            If the vector is not a cocycle.

        """
        level = self.X.carrier(self.s)
        by_degree = {}
        for x, c in vector.items():
            by_degree.setdefault(level.degree(x), {})[x] = c
        out = {}
        for q, part in by_degree.items():
            labels, expresser = self._expresser(q)
            coeffs = expresser.coefficients(part)
            if coeffs is None:
                raise ValueError("Vector is not a cocycle")
            for label, c in zip(labels, coeffs):
                if c:
                    out[label] = c
        return out

    def steenrod(self):
        """The induced Steenrod action on π^s, over F2."""
        if self.field is not Field.F2:
            return None
        level = self.X.levels[self.s]
        if isinstance(level, GradedVectorSpace):
            return UnstableRightModule(self.space, {})
        action = level.action()
        table = {}
        for h, rep in self.representatives.items():
            for k in range(1, self.space.degree(h) + 1):
                image = self.class_of(action.act_vector(rep, k))
                if image:
                    table[(h, k)] = image
        return UnstableRightModule(self.space, table)

    def coalgebra(self):
        """π^0 of a cosimplicial coalgebra as a coalgebra."""
        if self.X.kind != "coalgebra" or self.s != 0:
            raise ValueError("Only π^0 of a cosimplicial coalgebra is a coalgebra")
        C = self.X.levels[0]
        field = self.field
        coproduct = {}
        for h, rep in self.representatives.items():
            coproduct[h] = _induced_pairs(
                field, C.delta_vector(rep), self.class_of, self.class_of
            )
        counit = {}
        for h, rep in self.representatives.items():
            e = C.epsilon_vector(rep)
            if e:
                counit[h] = e
        basepoint = None
        if C.basepoint is not None:
            point = self.class_of({C.basepoint: field.one})
            if len(point) == 1 and field.one in point.values():
                basepoint = next(iter(point))
        return Coalgebra(
            self.space,
            coproduct,
            counit,
            steenrod=self.steenrod(),
            basepoint=basepoint,
            name="π0(%s)" % self.X.name,
        )

    def comodule(self, pi0=None):
        """
        The comodule structure of π^s.

        For a cosimplicial coalgebra the coaction is induced by the
        codegeneracy composite ``X^s -> X^0`` followed by the coproduct, and
        lands in ``π^0 ⊗ π^s``. Pass the :class:`CohomotopyGroup` for ``π^0``
        to reuse it.

        """
        field = self.field
        if self.X.kind == "comodule":
            level = self.X.levels[self.s]
            base = level.base
            coaction = {}
            for h, rep in self.representatives.items():
                grouped = {}
                for (c, y), coeff in level.rho_vector(rep).items():
                    add_term(field, grouped.setdefault(c, {}), y, coeff)
                d = {}
                for c, part in grouped.items():
                    for z, cz in self.class_of(part).items():
                        add_term(field, d, (c, z), cz)
                coaction[h] = d
            return Comodule(
                base, self.space, coaction, steenrod=self.steenrod(), name="π%i" % self.s
            )
        if self.X.kind != "coalgebra":
            raise ValueError("Graded spaces carry no coaction")
        if pi0 is None:
            pi0 = CohomotopyGroup(self.X, 0, normalized=self.normalized)
        base = pi0.coalgebra()
        X = self.X
        total = X.total_codegeneracy(self.s)
        level = X.levels[self.s]
        coaction = {}
        for h, rep in self.representatives.items():
            pairs = {}
            for (a, b), coeff in level.delta_vector(rep).items():
                for a0, c0 in total.image_of(a).items():
                    add_term(field, pairs, (a0, b), field.mul(coeff, c0))
            coaction[h] = _induced_pairs(field, pairs, pi0.class_of, self.class_of)
        return Comodule(
            base,
            self.space,
            coaction,
            steenrod=self.steenrod(),
            name="π%i(%s)" % (self.s, X.name),
        )


def _induced_pairs(field, pairs, left_class, right_class):
    """Express a tensor of representatives in the product of two bases."""
    by_left = {}
    for (a, b), coeff in pairs.items():
        add_term(field, by_left.setdefault(a, {}), b, coeff)
    by_right = {}
    try:
        for a, part in by_left.items():
            for h, c in right_class(part).items():
                add_term(field, by_right.setdefault(h, {}), a, c)
        out = {}
        for h, part in by_right.items():
            for g, c in left_class(part).items():
                add_term(field, out, (g, h), c)
    except ValueError:
        raise ValidationError("The induced structure map is not well defined")
    return out


def cohomotopy(X, s, normalized=None):
    """
    The cohomotopy group ``π^s(X)``.

    Parameters
    ----------
    X : CosimplicialObject
        A truncated cosimplicial object.

    s : int
        The degree, ``0 <= s <= S - 1``.

    normalized : CochainComplex
        Optional precomputed ``normalize(X)``.

    Returns
    -------
    group : CohomotopyGroup
        The group with representatives. Use its ``coalgebra`` and
        ``comodule`` methods for the induced structure.

    """
    return CohomotopyGroup(X, s, normalized=normalized)


def cohomotopy_dims(X, s_max=None):
    N = normalize(X)
    s_max = X.S - 1 if s_max is None else s_max
    return [N.cohomology(s).dims() for s in range(s_max + 1)]


def dold_kan_inverse(K, name=None):
    """
    The cosimplicial object with ``X^n = ⊕ K^k`` over surjections
    ``σ: [n] -> [k]``.

    Basis labels are pairs ``(σ, x)`` with σ written as ``[0,0,1]``. A
    structure map ``θ: [n] -> [m]`` sends ``(σ, x)`` to the sum of ``(τ, x)``
    over surjections τ with ``τθ = σ`` and of ``(τ, dx)`` over τ with
    ``τθ = δ^0 σ``. Normalizing the result returns K exactly.

    """
    S = K.S
    field = K.field
    objects = K.objects
    is_comodule = isinstance(objects[0], Comodule)
    D = K.carrier(0).max_degree
    levels = []
    carriers = []
    for n in range(S + 1):
        basis = [[] for _ in range(D + 1)]
        for q in range(D + 1):
            for sigma in surjections(n):
                k = sigma[-1]
                for x in K.carrier(k).basis(q):
                    basis[q].append((surjection_label(sigma), x))
        carrier = GradedVectorSpace(field, D, basis)
        carriers.append(carrier)
        if is_comodule:
            coaction = {}
            table = {}
            for sigma in surjections(n):
                k = sigma[-1]
                obj = objects[k]
                sl = surjection_label(sigma)
                for x in obj.carrier.labels():
                    coaction[(sl, x)] = {
                        (c, (sl, y)): coeff for (c, y), coeff in obj.rho(x).items()
                    }
                    if field is Field.F2:
                        action = obj.action()
                        for i in range(1, obj.carrier.degree(x) + 1):
                            image = action.act(x, i)
                            if image:
                                table[((sl, x), i)] = {
                                    (sl, y): c for y, c in image.items()
                                }
            steenrod = None
            if field is Field.F2:
                steenrod = UnstableRightModule(carrier, table)
            levels.append(
                Comodule(
                    objects[0].base,
                    carrier,
                    coaction,
                    steenrod=steenrod,
                    coabelian=all(o.coabelian for o in objects),
                    name="DK%i" % n,
                )
            )
        else:
            levels.append(carrier)

    def structure_map(n, m, theta):
        columns = {}
        for sigma in surjections(n):
            k = sigma[-1]
            sl = surjection_label(sigma)
            shifted = tuple(v + 1 for v in sigma)
            same = []
            raised = []
            for tau in surjections(m):
                composite = tuple(tau[t] for t in theta)
                if tau[-1] == k and composite == sigma:
                    same.append(surjection_label(tau))
                elif tau[-1] == k + 1 and composite == shifted:
                    raised.append(surjection_label(tau))
            for x in K.carrier(k).labels():
                image = {}
                for tl in same:
                    add_term(field, image, (tl, x), field.one)
                if raised:
                    dx = K.differential(k).image_of(x)
                    for tl in raised:
                        for y, c in dx.items():
                            add_term(field, image, (tl, y), c)
                columns[(sl, x)] = image
        return GradedLinearMap(carriers[n], carriers[m], columns)

    cofaces = {}
    codegeneracies = {}
    for n in range(S):
        for i in range(n + 2):
            cofaces[(n, i)] = structure_map(n, n + 1, coface_map(n, i))
        for j in range(n + 1):
            codegeneracies[(n, j)] = structure_map(n + 1, n, codegeneracy_map(n, j))
    return CosimplicialObject(
        "comodule" if is_comodule else "space",
        levels,
        cofaces,
        codegeneracies,
        name=name or "DK(%s)" % K.name,
    )


class ChainMap(object):
    """A map of cochain complexes given by its components."""

    def __init__(self, source, target, components):
        if len(components) != min(source.S, target.S) + 1:
            raise ValueError("Expected one component per level")
        self.source = source
        self.target = target
        self.components = list(components)

    def validate(self):
        report = ValidationReport("chain map")
        for n in range(len(self.components) - 1):
            lhs = self.target.differential(n).compose(self.components[n])
            rhs = self.components[n + 1].compose(self.source.differential(n))
            if lhs != rhs:
                report.add("commutes with d", "level %i" % n)
        return report

    def cohomology_table(self, s_max=None):
        """
        For every s, the dimensions of source and target ``H^s`` and the
        rank of the induced map.
        """
        s_max = len(self.components) - 2 if s_max is None else s_max
        field = self.source.field
        table = []
        for s in range(s_max + 1):
            hs = self.source.cohomology(s)
            ht = self.target.cohomology(s)
            f = self.components[s]
            images = {
                h: ht.project(f(rep)) for h, rep in hs.representatives.items()
            }
            rank = linear_rank(field, list(images), images.get)
            table.append(
                dict(
                    s=s,
                    source=hs.space.total_dim,
                    target=ht.space.total_dim,
                    rank=rank,
                )
            )
        return table


class CosimplicialMap(object):
    """A map of cosimplicial objects given by its level components."""

    def __init__(self, source, target, components, name=None):
        if len(components) != min(source.S, target.S) + 1:
            raise ValueError("Expected one component per level")
        self.source = source
        self.target = target
        self.components = list(components)
        self.name = name or "f"

    @classmethod
    def identity(cls, X):
        return cls(
            X, X, [GradedLinearMap.identity(X.carrier(n)) for n in range(X.S + 1)]
        )

    @classmethod
    def constant(cls, f, S):
        """The map ``cA -> cB`` induced by a coalgebra or comodule map."""
        linear = f.linear if isinstance(f, CoalgebraMap) else f
        source = f.source if isinstance(f, CoalgebraMap) else linear.source
        target = f.target if isinstance(f, CoalgebraMap) else linear.target
        return cls(constant(source, S), constant(target, S), [linear] * (S + 1))

    def level_map(self, n):
        """The component at level n as a coalgebra map, for coalgebra kinds."""
        return CoalgebraMap(
            self.source.levels[n], self.target.levels[n], self.components[n]
        )

    def validate(self):
        report = ValidationReport(self.name)
        S = len(self.components) - 1
        X, Y = self.source, self.target
        for n in range(S):
            for i in range(n + 2):
                if self.components[n + 1].compose(X.coface(n, i)) != Y.coface(
                    n, i
                ).compose(self.components[n]):
                    report.add("commutes with cofaces", "level %i" % n, "d^%i" % i)
            for j in range(n + 1):
                if self.components[n].compose(X.codegeneracy(n, j)) != Y.codegeneracy(
                    n, j
                ).compose(self.components[n + 1]):
                    report.add(
                        "commutes with codegeneracies", "level %i" % (n + 1), "s^%i" % j
                    )
        if X.kind == "coalgebra" and Y.kind == "coalgebra":
            for n in range(S + 1):
                for v in self.level_map(n).check().violations:
                    report.add(v.axiom, v.witness, "level %i" % n)
        return report

    def normalized(self, source=None, target=None):
        """The induced chain map of normalized complexes."""
        NX = source if source is not None else normalize(self.source)
        NY = target if target is not None else normalize(self.target)
        components = []
        for n, f in enumerate(self.components):
            inc_x = NX.inclusions[n]
            columns = {}
            for label in NX.carrier(n).labels():
                image = f(inc_x.image_of(label))
                columns[label] = NY.coordinates[n](image)
            components.append(GradedLinearMap(NX.carrier(n), NY.carrier(n), columns))
        return ChainMap(NX, NY, components)


def is_cofibration(f, normalized=None):
    """Whether ``N(f)`` is injective in all positive degrees."""
    chain = normalized if normalized is not None else f.normalized()
    for n in range(1, len(chain.components)):
        if not chain.components[n].is_injective():
            return False
    return True


def is_weak_equivalence(f, normalized=None):
    """Whether f induces isomorphisms on ``π^s`` for all ``s <= S - 1``."""
    chain = normalized if normalized is not None else f.normalized()
    for row in chain.cohomology_table():
        if not (row["rank"] == row["source"] == row["target"]):
            return False
    return True


def skeleton(X, n):
    """
    The n-skeleton of a cosimplicial graded space or comodule.

    The normalized complex of the result agrees with ``N(X)`` below degree n,
    has ``N^n/B^n`` in degree ``n + 1`` with the projection as differential
    and is zero above. Hence ``π^s`` agrees with X for ``s < n`` and vanishes
    for ``s >= n``. The comparison chain map to ``N(X)`` is stored as the
    ``comparison`` attribute.

    Raises
    ------
    UnsupportedInput
        For cosimplicial coalgebras.

    """
    if X.kind == "coalgebra":
        raise UnsupportedInput("Skeleta are only computed for abelian carriers")
    if n < 0:
        raise ValueError("Skeleton degree must be non-negative")
    N = normalize(X)
    if n >= X.S:
        result = X.truncate(X.S)
        result.comparison = ChainMap(
            N, N, [GradedLinearMap.identity(N.carrier(k)) for k in range(N.S + 1)]
        )
        return result
    field = X.field
    D = X.carrier(0).max_degree
    objects = list(N.objects[: n + 1])
    differentials = list(N.differentials[:n])
    top = N.objects[n]
    if isinstance(top, Comodule):
        boundary = Subspace(field, [], [])
        if n > 0:
            boundary = N.differential(n - 1).image()
        quotient_obj, projection = quotient_comodule(top, boundary, name="coker")
    elif n > 0:
        quotient_obj, projection = cokernel(N.differential(n - 1))
    else:
        quotient_obj, projection = top, GradedLinearMap.identity(top)
    objects.append(quotient_obj)
    differentials.append(projection)
    for k in range(n + 2, X.S + 1):
        objects.append(_zero_like(top, field, D))
    for k in range(n + 1, X.S):
        differentials.append(
            GradedLinearMap.zero(carrier_of(objects[k]), carrier_of(objects[k + 1]))
        )
    K = CochainComplex(objects, differentials, name="sk%i" % n)
    result = dold_kan_inverse(K, name="sk_%i(%s)" % (n, X.name))
    NS = normalize(result)
    components = []
    for k in range(X.S + 1):
        src = NS.carrier(k)
        tgt = N.carrier(k)
        columns = {}
        if k <= n + 1:
            # N(sk)^k lists K^k in order, degree by degree
            for q in range(src.max_degree + 1):
                for label, x in zip(src.basis(q), K.carrier(k).basis(q)):
                    columns[label] = (
                        {x: field.one} if k <= n else N.differential(n).image_of(x)
                    )
        components.append(GradedLinearMap(src, tgt, columns))
    result.comparison = ChainMap(NS, N, components)
    return result
