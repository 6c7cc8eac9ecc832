# -*- coding: utf-8 -*-

"""
Graded cocommutative coalgebras and their comodules.

A coalgebra is stored by structure constants: ``coproduct[x]`` maps pairs
``(a, b)`` to the coefficient of ``a ⊗ b`` in the coproduct of ``x``.
Comodules are stored with left coactions ``M -> C ⊗ M``; right coactions are
derived through the symmetry isomorphism.

Author: Gertjan van den Burg

"""

import itertools

from .exceptions import BudgetExceeded
from .exceptions import UnsupportedInput
from .exceptions import ValidationError
from .linalg import Field
from .linalg import GradedLinearMap
from .linalg import GradedVectorSpace
from .linalg import Subspace
from .linalg import add_term
from .linalg import express
from .linalg import format_label
from .linalg import linear_kernel
from .linalg import linear_rank
from .linalg import tensor
from .linalg import tensor_many
from .linalg import vector_axpy
from .steenrod import UnstableRightModule
from .steenrod import binom_mod2
from .steenrod import tensor_action
from .steenrod import verify_unstable_module
from .validation import ValidationReport

GROUPLIKE_SEARCH_LIMIT = 16


class Shifted(object):
    """Label of an element of an internal shift ``M[k]``."""

    __slots__ = ("label", "amount")

    def __init__(self, label, amount):
        if isinstance(label, Shifted):
            amount += label.amount
            label = label.label
        self.label = label
        self.amount = amount

    def __eq__(self, other):
        if not isinstance(other, Shifted):
            return False
        return self.label == other.label and self.amount == other.amount

    def __hash__(self):
        return hash(("Shifted", self.label, self.amount))

    def __repr__(self):
        return "%s[%i]" % (format_label(self.label), self.amount)

    __str__ = __repr__


def _clean(table):
    out = {}
    for key, vec in table.items():
        vec = {k: c for k, c in vec.items() if c}
        out[key] = vec
    return out


def tensor_vectors(field, u, v):
    out = {}
    for a, ca in u.items():
        for b, cb in v.items():
            add_term(field, out, (a, b), field.mul(ca, cb))
    return out


class Coalgebra(object):
    """
    A finite-type graded cocommutative counital coalgebra.

    Parameters
    ----------
    carrier : GradedVectorSpace
        The underlying graded space, truncated at its degree cap.

    coproduct : dict
        Maps every label to a dict ``{(a, b): coefficient}``.

    counit : dict
        Maps degree zero labels to their counit value.

    steenrod : UnstableRightModule
        Optional right Steenrod action on the carrier (F2 only).

    basepoint : label
        Optional grouplike basis element of degree zero.

    grouplikes : list
        Optional declared basis of grouplike vectors spanning degree zero.

    """

    def __init__(
        self,
        carrier,
        coproduct,
        counit,
        steenrod=None,
        basepoint=None,
        grouplikes=None,
        name=None,
    ):
        self.carrier = carrier
        self.field = carrier.field
        self.coproduct = _clean(coproduct)
        self.counit = {x: c for x, c in counit.items() if c}
        if steenrod is not None and steenrod.carrier != carrier:
            raise ValueError("Steenrod action lives on a different space")
        self.steenrod = steenrod
        self.basepoint = basepoint
        self.grouplikes = grouplikes
        self.name = name or "C"

    @property
    def max_degree(self):
        return self.carrier.max_degree

    def delta(self, label):
        return self.coproduct.get(label, {})

    def delta_vector(self, vector):
        out = {}
        for x, c in vector.items():
            vector_axpy(self.field, out, c, self.delta(x))
        return out

    def epsilon(self, label):
        return self.counit.get(label, self.field.zero)

    def epsilon_vector(self, vector):
        out = self.field.zero
        for x, c in vector.items():
            out = self.field.add(out, self.field.mul(c, self.epsilon(x)))
        return out

    def action(self):
        """The Steenrod action, or the zero action if none was given."""
        if self.steenrod is None and self.field is Field.F2:
            return UnstableRightModule(self.carrier, {})
        return self.steenrod

    def reduced_delta(self, label, point=None):
        """``Δx - 1 ⊗ x - x ⊗ 1`` for the basepoint ``1``."""
        point = self.basepoint if point is None else point
        out = dict(self.delta(label))
        one = self.field.one
        add_term(self.field, out, (point, label), self.field.neg(one))
        add_term(self.field, out, (label, point), self.field.neg(one))
        return out

    def unit_label(self):
        """The unit of a connected coalgebra."""
        degree_zero = self.carrier.basis(0)
        if len(degree_zero) != 1:
            return None
        x = degree_zero[0]
        if self.delta(x) != {(x, x): self.field.one}:
            return None
        if self.epsilon(x) != self.field.one:
            return None
        return x

    def is_connected(self):
        return self.unit_label() is not None

    def relabel(self, mapping, name=None):
        """Copy with labels replaced through the bijection ``mapping``."""
        carrier = GradedVectorSpace(
            self.field,
            self.max_degree,
            [
                [mapping[x] for x in self.carrier.basis(n)]
                for n in range(self.max_degree + 1)
            ],
        )
        coproduct = {
            mapping[x]: {(mapping[a], mapping[b]): c for (a, b), c in d.items()}
            for x, d in self.coproduct.items()
        }
        counit = {mapping[x]: c for x, c in self.counit.items()}
        steenrod = None
        if self.steenrod is not None:
            steenrod = self.steenrod.relabel(carrier, mapping)
        grouplikes = None
        if self.grouplikes is not None:
            grouplikes = [
                {mapping[x]: c for x, c in g.items()} for g in self.grouplikes
            ]
        basepoint = None if self.basepoint is None else mapping[self.basepoint]
        return Coalgebra(
            carrier,
            coproduct,
            counit,
            steenrod=steenrod,
            basepoint=basepoint,
            grouplikes=grouplikes,
            name=name or self.name,
        )

    def __repr__(self):
        return "Coalgebra(%s, %s, dims=%r)" % (
            self.name,
            self.field.value,
            self.carrier.dims(),
        )

    # Standard examples

    @classmethod
    def terminal(cls, field, max_degree, label="1"):
        """The ground field F, the terminal object."""
        carrier = GradedVectorSpace(field, max_degree, [[label]])
        return cls(
            carrier,
            {label: {(label, label): field.one}},
            {label: field.one},
            steenrod=UnstableRightModule(carrier, {})
            if field is Field.F2
            else None,
            basepoint=label,
            name="F",
        )

    @classmethod
    def exterior(cls, field, m, max_degree, generator="x", unit="1"):
        """The primitively generated coalgebra Λ(x) with ``|x| = m``."""
        if m < 1:
            raise ValueError("The generator needs positive degree")
        basis = [[unit]] + [[] for _ in range(max_degree)]
        one = field.one
        coproduct = {unit: {(unit, unit): one}}
        if m <= max_degree:
            basis[m].append(generator)
            coproduct[generator] = {(generator, unit): one, (unit, generator): one}
        carrier = GradedVectorSpace(field, max_degree, basis)
        return cls(
            carrier,
            coproduct,
            {unit: one},
            steenrod=UnstableRightModule(carrier, {})
            if field is Field.F2
            else None,
            basepoint=unit,
            name="Λ(%s)" % generator,
        )

    @classmethod
    def set_like(cls, field, points, max_degree):
        """The coalgebra F(S) spanned by grouplike points."""
        carrier = GradedVectorSpace(field, max_degree, [list(points)])
        return cls(
            carrier,
            {p: {(p, p): field.one} for p in points},
            {p: field.one for p in points},
            steenrod=UnstableRightModule(carrier, {})
            if field is Field.F2
            else None,
            basepoint=points[0] if points else None,
            name="F(S)",
        )

    @classmethod
    def divided_power(cls, field, m, height, max_degree, name="g"):
        """Dual of the truncated polynomial algebra ``F[t]/(t^height)``.

        The basis is ``g0, g1, ...`` in degrees ``0, m, 2m, ...`` with
        ``Δ(g_k) = sum g_i ⊗ g_(k-i)``. Over F2 with m a power of two the
        action dual to ``Sq^(mi) t^k = binom(k, i) t^(k+i)`` is attached.
        """
        if field is Field.Q and m % 2 and height > 2:
            raise ValueError("Odd generators square to zero over Q")
        basis = [[] for _ in range(max_degree + 1)]
        labels = []
        for k in range(height):
            if k * m > max_degree:
                break
            label = "%s%i" % (name, k)
            basis[k * m].append(label)
            labels.append(label)
        coproduct = {}
        for k, label in enumerate(labels):
            coproduct[label] = {
                (labels[i], labels[k - i]): field.one for i in range(k + 1)
            }
        carrier = GradedVectorSpace(field, max_degree, basis)
        return cls(
            carrier,
            coproduct,
            {labels[0]: field.one},
            steenrod=_truncated_action(carrier, labels, m),
            basepoint=labels[0],
            name="Γ_%i(%s)" % (height, name),
        )


def _truncated_action(carrier, labels, m):
    if carrier.field is not Field.F2:
        return None
    table = {}
    if m & (m - 1) == 0:
        for j, label in enumerate(labels):
            for i in range(1, j + 1):
                if binom_mod2(j - i, i):
                    table[(label, m * i)] = {labels[j - i]: 1}
    return UnstableRightModule(carrier, table)


def tensor_coalgebra(factors, name=None):
    """
    Tensor product of coalgebras with flat labels ``(x1, ..., xk)``.

    The coproduct carries the Koszul sign of moving the left halves past the
    right halves. The Steenrod action is given by the Cartan formula.

    """
    factors = list(factors)
    field = factors[0].field
    carrier = tensor_many([C.carrier for C in factors])
    coproduct = {}
    counit = {}
    for label in carrier.labels():
        partial = [((), (), field.one, 0)]
        for C, x in zip(factors, label):
            nxt = []
            for left, right, coeff, right_deg in partial:
                for (a, b), c in C.delta(x).items():
                    sign = field.sign(right_deg * C.carrier.degree(a))
                    nxt.append(
                        (
                            left + (a,),
                            right + (b,),
                            field.mul(coeff, field.mul(sign, c)),
                            right_deg + C.carrier.degree(b),
                        )
                    )
            partial = nxt
        d = {}
        for left, right, coeff, _ in partial:
            if left in carrier and right in carrier:
                add_term(field, d, (left, right), coeff)
        coproduct[label] = d
        e = field.one
        for C, x in zip(factors, label):
            e = field.mul(e, C.epsilon(x))
        if e:
            counit[label] = e
    steenrod = None
    if field is Field.F2:
        actions = [C.action() for C in factors]
        table = {}
        for label in carrier.labels():
            n = carrier.degree(label)
            for k in range(1, n + 1):
                image = _multi_cartan(actions, label, k)
                image = {x: c for x, c in image.items() if x in carrier}
                if image:
                    table[(label, k)] = image
        steenrod = UnstableRightModule(carrier, table)
    basepoint = None
    if all(C.basepoint is not None for C in factors):
        basepoint = tuple(C.basepoint for C in factors)
    return Coalgebra(
        carrier,
        coproduct,
        counit,
        steenrod=steenrod,
        basepoint=basepoint,
        name=name or "⊗".join(C.name for C in factors),
    )


def _multi_cartan(actions, label, k):
    if not label:
        return {(): 1} if k == 0 else {}
    out = {}
    head, rest = label[0], label[1:]
    for i in range(k + 1):
        hi = actions[0].act(head, i)
        if not hi:
            continue
        tail = _multi_cartan(actions[1:], rest, k - i)
        for x in hi:
            for y in tail:
                add_term(Field.F2, out, (x,) + y, 1)
    return out


class CoalgebraMap(object):
    """A degree preserving linear map between coalgebras."""

    def __init__(self, source, target, linear):
        if linear.source != source.carrier or linear.target != target.carrier:
            raise ValueError("Linear map does not match the coalgebras")
        self.source = source
        self.target = target
        self.linear = linear
        self.field = source.field

    @classmethod
    def from_columns(cls, source, target, columns):
        return cls(
            source, target, GradedLinearMap(source.carrier, target.carrier, columns)
        )

    @classmethod
    def identity(cls, C):
        return cls(C, C, GradedLinearMap.identity(C.carrier))

    def __call__(self, vector):
        return self.linear(vector)

    def image_of(self, label):
        return self.linear.image_of(label)

    def compose(self, other):
        return CoalgebraMap(other.source, self.target, self.linear.compose(other.linear))

    def check(self):
        """Report where the map fails to be a map of (unstable) coalgebras."""
        report = ValidationReport("coalgebra map")
        S, T, field = self.source, self.target, self.field
        for x in S.carrier.labels():
            fx = self.image_of(x)
            lhs = T.delta_vector(fx)
            rhs = {}
            for (a, b), c in S.delta(x).items():
                fa, fb = self.image_of(a), self.image_of(b)
                for y, cy in fa.items():
                    for z, cz in fb.items():
                        add_term(field, rhs, (y, z), field.mul(c, field.mul(cy, cz)))
            if lhs != rhs:
                report.add("comultiplicative", x)
            if T.epsilon_vector(fx) != S.epsilon(x):
                report.add("counital", x)
        if field is Field.F2:
            sa, ta = S.action(), T.action()
            for x in S.carrier.labels():
                for k in range(1, S.carrier.degree(x) + 1):
                    if self(sa.act(x, k)) != ta.act_vector(self.image_of(x), k):
                        report.add("Steenrod equivariant", x, "Sq^%i" % k)
        return report

    def is_injective(self):
        return self.linear.is_injective()


def find_grouplikes(C):
    """All grouplike vectors of degree zero over F2 by exhaustive search."""
    basis = C.carrier.basis(0)
    if len(basis) > GROUPLIKE_SEARCH_LIMIT:
        raise ValidationError(
            "Degree zero has dimension %i; declare the grouplike basis"
            % len(basis)
        )
    found = []
    for bits in itertools.product((0, 1), repeat=len(basis)):
        g = {x: 1 for x, b in zip(basis, bits) if b}
        if not g:
            continue
        if is_grouplike(C, g):
            found.append(g)
    return found


def is_grouplike(C, g):
    if C.epsilon_vector(g) != C.field.one:
        return False
    return C.delta_vector(g) == tensor_vectors(C.field, g, g)


def root_map(C, label):
    """The p-th root map, dual to squaring in the dual algebra, over F2."""
    n = C.carrier.degree(label)
    if n % 2:
        return {}
    out = {}
    for (a, b), c in C.delta(label).items():
        if a == b:
            add_term(C.field, out, a, c)
    return out


def validate_coalgebra(C, check_unstable=True):
    """
    Check the coalgebra axioms, and the unstable axioms if an action is given.

    Parameters
    ----------
    C : Coalgebra
        The coalgebra to check.

    check_unstable : bool
        Check that degree zero is set-like and, over F2, that the Steenrod
        action is unstable, Cartan-compatible and matches the root map.

    Returns
    -------
    report : ValidationReport
        Every failed axiom with a witness element.

    """
    report = ValidationReport(C.name)
    field = C.field
    carrier = C.carrier
    for x in carrier.labels():
        n = carrier.degree(x)
        for (a, b) in C.delta(x):
            if a not in carrier or b not in carrier:
                report.add("degree cap", x, "term outside the carrier")
                break
            if carrier.degree(a) + carrier.degree(b) != n:
                report.add(
                    "degree additivity",
                    x,
                    "|%s| + |%s| != |%s|"
                    % (format_label(a), format_label(b), format_label(x)),
                )
                break
        if C.epsilon(x) and n != 0:
            report.add("counit degree", x)
    if not report.ok:
        return report

    for x in carrier.labels():
        d = C.delta(x)
        left = {}
        right = {}
        for (a, b), c in d.items():
            add_term(field, left, b, field.mul(c, C.epsilon(a)))
            add_term(field, right, a, field.mul(c, C.epsilon(b)))
        unit = {x: field.one}
        if left != unit or right != unit:
            report.add("counit", x)

        lhs = {}
        rhs = {}
        for (a, b), c in d.items():
            for (a1, a2), c1 in C.delta(a).items():
                add_term(field, lhs, (a1, a2, b), field.mul(c, c1))
            for (b1, b2), c2 in C.delta(b).items():
                add_term(field, rhs, (a, b1, b2), field.mul(c, c2))
        if lhs != rhs:
            report.add("coassociativity", x)

        swapped = {}
        for (a, b), c in d.items():
            sign = field.koszul(carrier.degree(a), carrier.degree(b))
            add_term(field, swapped, (b, a), field.mul(sign, c))
        if swapped != d:
            report.add("cocommutativity", x)

    if C.basepoint is not None:
        if C.basepoint not in carrier or not is_grouplike(
            C, {C.basepoint: field.one}
        ):
            report.add("basepoint", C.basepoint, "not grouplike")

    if check_unstable and report.ok:
        report.extend(_check_set_like(C))
        if field is Field.F2 and C.steenrod is not None:
            report.extend(_check_steenrod(C))
    return report


def _check_set_like(C):
    report = ValidationReport(C.name)
    field = C.field
    basis = C.carrier.basis(0)
    if C.grouplikes is not None:
        for g in C.grouplikes:
            if not is_grouplike(C, g):
                report.add("set-like", sorted(g, key=C.carrier.position)[0])
        span = Subspace.span(field, C.grouplikes, C.carrier.position)
        if span.dim != len(basis):
            report.add("set-like", "degree 0", "declared grouplikes do not span")
        return report
    if all(is_grouplike(C, {x: field.one}) for x in basis):
        return report
    if field is Field.F2 and len(basis) <= GROUPLIKE_SEARCH_LIMIT:
        found = find_grouplikes(C)
        if len(found) != len(basis):
            report.add(
                "set-like",
                "degree 0",
                "%i grouplikes for dimension %i" % (len(found), len(basis)),
            )
        return report
    report.add("set-like", "degree 0", "declare a grouplike basis")
    return report


def _check_steenrod(C):
    report = verify_unstable_module(C.steenrod)
    report.subject = C.name
    action = C.steenrod
    field = C.field
    for x in C.carrier.labels():
        n = C.carrier.degree(x)
        d = C.delta(x)
        for k in range(1, n + 1):
            lhs = C.delta_vector(action.act(x, k))
            rhs = {}
            for pair, c in d.items():
                vector_axpy(field, rhs, c, tensor_action(action, action, pair, k))
            if lhs != rhs:
                report.add("Cartan equivariance", x, "Sq^%i" % k)
        if n and n % 2 == 0:
            if root_map(C, x) != action.act(x, n // 2):
                report.add("root map", x, "xi(x) != x.Sq^%i" % (n // 2))
    return report


class Comodule(object):
    """
    A graded left comodule over a coalgebra.

    Parameters
    ----------
    base : Coalgebra
        The coalgebra C.

    carrier : GradedVectorSpace
        The underlying space M.

    coaction : dict
        Maps every label ``m`` to ``{(c, m'): coefficient}``.

    steenrod : UnstableRightModule
        Optional right Steenrod action on the carrier.

    coabelian : bool
        Whether the strict instability ``x.Sq^n = 0`` for ``|x| <= 2n`` holds.

    """

    def __init__(
        self, base, carrier, coaction, steenrod=None, coabelian=False, name=None
    ):
        if base.field is not carrier.field:
            raise ValueError("Comodule and coalgebra fields differ")
        self.base = base
        self.carrier = carrier
        self.field = carrier.field
        self.coaction = _clean(coaction)
        self.steenrod = steenrod
        self.coabelian = coabelian
        self.name = name or "M"
        self.inclusion = None

    @property
    def max_degree(self):
        return self.carrier.max_degree

    def rho(self, label):
        return self.coaction.get(label, {})

    def rho_vector(self, vector):
        out = {}
        for x, c in vector.items():
            vector_axpy(self.field, out, c, self.rho(x))
        return out

    def right_rho(self, label):
        """The right coaction ``M -> M ⊗ C`` obtained through the symmetry."""
        out = {}
        for (c, m), coeff in self.rho(label).items():
            sign = self.field.koszul(
                self.base.carrier.degree(c), self.carrier.degree(m)
            )
            add_term(self.field, out, (m, c), self.field.mul(sign, coeff))
        return out

    def action(self):
        if self.steenrod is None and self.field is Field.F2:
            return UnstableRightModule(self.carrier, {})
        return self.steenrod

    def __repr__(self):
        return "Comodule(%s over %s, dims=%r)" % (
            self.name,
            self.base.name,
            self.carrier.dims(),
        )

    @classmethod
    def regular(cls, C):
        """C as a comodule over itself."""
        return cls(
            C,
            C.carrier,
            {x: dict(C.delta(x)) for x in C.carrier.labels()},
            steenrod=C.steenrod,
            name=C.name,
        )

    @classmethod
    def cofree(cls, C, W, steenrod=None):
        """The cofree comodule ``C ⊗ W`` with coaction ``Δ ⊗ id``.

        ``steenrod`` is an optional action on W; the action on ``C ⊗ W`` is
        then given by the Cartan formula.
        """
        carrier = tensor(C.carrier, W)
        coaction = {}
        for c, w in carrier.labels():
            d = {}
            for (c1, c2), coeff in C.delta(c).items():
                if (c2, w) in carrier:
                    add_term(C.field, d, (c1, (c2, w)), coeff)
            coaction[(c, w)] = d
        action = None
        if C.field is Field.F2:
            wa = steenrod if steenrod is not None else UnstableRightModule(W, {})
            table = {}
            ca = C.action()
            for label in carrier.labels():
                for k in range(1, carrier.degree(label) + 1):
                    image = tensor_action(ca, wa, label, k)
                    if image:
                        table[(label, k)] = image
            action = UnstableRightModule(carrier, table)
        return cls(C, carrier, coaction, steenrod=action, name="C⊗W")

    @classmethod
    def trivial(cls, C, W, steenrod=None, coabelian=False):
        """W with the coaction ``w -> 1 ⊗ w`` through the basepoint."""
        if C.basepoint is None:
            raise ValueError("A trivial coaction needs a basepoint")
        one = C.field.one
        coaction = {w: {(C.basepoint, w): one} for w in W.labels()}
        return cls(C, W, coaction, steenrod=steenrod, coabelian=coabelian)

    @classmethod
    def from_map(cls, f):
        """The source of a coalgebra map ``f: B -> C`` as a C-comodule."""
        B = f.source
        field = B.field
        coaction = {}
        for b in B.carrier.labels():
            d = {}
            for (b1, b2), coeff in B.delta(b).items():
                for c, cc in f.image_of(b1).items():
                    add_term(field, d, (c, b2), field.mul(coeff, cc))
            coaction[b] = d
        return cls(f.target, B.carrier, coaction, steenrod=B.steenrod, name=B.name)

    def validate(self, strict=None):
        """Check coassociativity, counitality and the Steenrod axioms."""
        strict = self.coabelian if strict is None else strict
        report = ValidationReport(self.name)
        C, field = self.base, self.field
        for m in self.carrier.labels():
            n = self.carrier.degree(m)
            r = self.rho(m)
            counit = {}
            lhs = {}
            rhs = {}
            for (c, x), coeff in r.items():
                if c not in C.carrier or x not in self.carrier:
                    report.add("coaction target", m)
                    break
                if C.carrier.degree(c) + self.carrier.degree(x) != n:
                    report.add("coaction degree", m)
                    break
                add_term(field, counit, x, field.mul(coeff, C.epsilon(c)))
                for (c1, c2), d in C.delta(c).items():
                    add_term(field, lhs, (c1, c2, x), field.mul(coeff, d))
                for (c2, y), d in self.rho(x).items():
                    add_term(field, rhs, (c, c2, y), field.mul(coeff, d))
            else:
                if counit != {m: field.one}:
                    report.add("comodule counit", m)
                if lhs != rhs:
                    report.add("comodule coassociativity", m)
        if field is Field.F2 and report.ok:
            action = self.action()
            mod = verify_unstable_module(action, strict=strict)
            report.extend(mod)
            ca = C.action()
            for m in self.carrier.labels():
                for k in range(1, self.carrier.degree(m) + 1):
                    lhs = self.rho_vector(action.act(m, k))
                    rhs = {}
                    for pair, coeff in self.rho(m).items():
                        vector_axpy(
                            field, rhs, coeff, tensor_action(ca, action, pair, k)
                        )
                    if lhs != rhs:
                        report.add("coaction equivariance", m, "Sq^%i" % k)
        return report


def sub_comodule(N, subspace, prefix="ker", name=None):
    """
    The sub-comodule of N spanned by a reduced :class:`Subspace`.

    Raises
    ------
    ValueError
        If the subspace is not closed under the coaction or the action.

    """
    field = N.field
    by_degree = {}
    for vec, pivot in zip(subspace.vectors, subspace.pivots):
        by_degree.setdefault(N.carrier.degree(pivot), []).append((vec, pivot))
    basis = [[] for _ in range(N.max_degree + 1)]
    label_of_pivot = {}
    columns = {}
    for n in sorted(by_degree):
        for i, (vec, pivot) in enumerate(by_degree[n]):
            label = "%s:%i:%i" % (prefix, n, i)
            basis[n].append(label)
            label_of_pivot[pivot] = label
            columns[label] = vec
    carrier = GradedVectorSpace(field, N.max_degree, basis)

    def express(vector):
        out = {}
        for p, label in label_of_pivot.items():
            c = vector.get(p)
            if c:
                out[label] = c
        check = {}
        for label, c in out.items():
            vector_axpy(field, check, c, columns[label])
        if check != vector:
            raise ValueError("Subspace is not closed under the structure maps")
        return out

    coaction = {}
    for label, vec in columns.items():
        grouped = {}
        for (c, x), coeff in N.rho_vector(vec).items():
            add_term(field, grouped.setdefault(c, {}), x, coeff)
        d = {}
        for c, part in grouped.items():
            for y, coeff in express(part).items():
                add_term(field, d, (c, y), coeff)
        coaction[label] = d
    action = None
    if field is Field.F2:
        na = N.action()
        table = {}
        for label, vec in columns.items():
            for k in range(1, carrier.degree(label) + 1):
                image = express(na.act_vector(vec, k))
                if image:
                    table[(label, k)] = image
        action = UnstableRightModule(carrier, table)
    result = Comodule(
        N.base, carrier, coaction, steenrod=action, name=name or N.name
    )
    result.inclusion = GradedLinearMap(carrier, N.carrier, columns)
    result.coordinates = express
    return result


def quotient_comodule(N, subspace, name=None):
    """
    The quotient of N by a sub-comodule given as a reduced subspace.

    Basis labels of the quotient are the labels of N that are not pivots of
    the subspace. Returns the comodule and the projection map.

    """
    field = N.field
    pivots = set(subspace.pivots)
    basis = [
        [x for x in N.carrier.basis(n) if x not in pivots]
        for n in range(N.max_degree + 1)
    ]
    carrier = GradedVectorSpace(field, N.max_degree, basis)

    def project(vector):
        reduced = subspace.reduce(vector)
        return {x: c for x, c in reduced.items() if x in carrier}

    columns = {x: project({x: field.one}) for x in N.carrier.labels()}
    projection = GradedLinearMap(N.carrier, carrier, columns)
    coaction = {}
    for x in carrier.labels():
        d = {}
        for (c, y), coeff in N.rho(x).items():
            for z, cz in projection.image_of(y).items():
                add_term(field, d, (c, z), field.mul(coeff, cz))
        coaction[x] = d
    action = None
    if field is Field.F2:
        na = N.action()
        table = {}
        for x in carrier.labels():
            for k in range(1, carrier.degree(x) + 1):
                image = projection(na.act(x, k))
                if image:
                    table[(x, k)] = image
        action = UnstableRightModule(carrier, table)
    result = Comodule(N.base, carrier, coaction, steenrod=action, name=name)
    return result, projection


class CotensorProduct(object):
    """The cotensor product ``M □_C N`` as a subspace of ``M ⊗ N``.

    Basis labels are ``ker:<degree>:<index>``; ``coordinates`` expresses a
    vector of ``M ⊗ N`` lying in the cotensor product in that basis.
    """

    def __init__(self, left, right, ambient, subspace):
        self.left = left
        self.right = right
        self.ambient = ambient
        field = ambient.field
        by_degree = {}
        for vec, pivot in zip(subspace.vectors, subspace.pivots):
            by_degree.setdefault(ambient.degree(pivot), []).append((vec, pivot))
        basis = [[] for _ in range(ambient.max_degree + 1)]
        columns = {}
        self._label_of_pivot = {}
        for n in sorted(by_degree):
            for i, (vec, pivot) in enumerate(by_degree[n]):
                label = "ker:%i:%i" % (n, i)
                basis[n].append(label)
                columns[label] = vec
                self._label_of_pivot[pivot] = label
        self.space = GradedVectorSpace(field, ambient.max_degree, basis)
        self.inclusion = GradedLinearMap(self.space, ambient, columns)

    def coordinates(self, vector):
        return {
            label: vector[p]
            for p, label in self._label_of_pivot.items()
            if vector.get(p)
        }

    def dims(self):
        return self.space.dims()


def cotensor(M, N):
    """
    The cotensor product of two left comodules over the same coalgebra.

    It is the equalizer of ``ρ^r ⊗ id`` and ``id ⊗ ρ`` from ``M ⊗ N`` to
    ``M ⊗ C ⊗ N``, where ``ρ^r`` is the right coaction of M.

    Raises
    ------
    ValueError
        If the comodules have different base coalgebras.

    """
    if M.base is not N.base:
        raise ValueError("Comodules over different coalgebras")
    field = M.field
    ambient = tensor(M.carrier, N.carrier)
    minus = field.neg(field.one)

    def image(pair):
        m, n = pair
        out = {}
        for (m1, c), coeff in M.right_rho(m).items():
            add_term(field, out, (m1, c, n), coeff)
        for (c, n1), coeff in N.rho(n).items():
            add_term(field, out, (m, c, n1), field.mul(minus, coeff))
        return out

    vectors = []
    pivots = []
    for q in range(ambient.max_degree + 1):
        sub = linear_kernel(field, ambient.basis(q), image)
        vectors.extend(sub.vectors)
        pivots.extend(sub.pivots)
    return CotensorProduct(M, N, ambient, Subspace(field, vectors, pivots))


def primitives(C):
    """
    The primitives ``Pr(C)`` of a pointed coalgebra, as a C-comodule with
    the trivial coaction.

    Raises
    ------
    ValueError
        If C has no basepoint.

    """
    if C.basepoint is None:
        raise ValueError("Primitives need a basepoint")
    field = C.field
    vectors = []
    pivots = []
    for n in range(C.max_degree + 1):
        sub = linear_kernel(field, C.carrier.basis(n), C.reduced_delta)
        vectors.extend(sub.vectors)
        pivots.extend(sub.pivots)
    trivial = Comodule(
        C,
        C.carrier,
        {x: {(C.basepoint, x): field.one} for x in C.carrier.labels()},
        steenrod=C.steenrod,
        name="Pr(%s)" % C.name,
    )
    return sub_comodule(trivial, Subspace(field, vectors, pivots), prefix="pr")


def primitives_rel(N):
    """
    The sub-comodule ``Pr_C(N)`` of elements with ``ρ(n) = 1 ⊗ n``.

    It is the kernel of ``N -> C ⊗ N -> (C/F) ⊗ N``.
    """
    C = N.base
    if C.basepoint is None:
        raise ValueError("Relative primitives need a pointed coalgebra")
    field = N.field

    def image(x):
        return {
            (c, y): coeff
            for (c, y), coeff in N.rho(x).items()
            if c != C.basepoint
        }

    vectors = []
    pivots = []
    for n in range(N.max_degree + 1):
        sub = linear_kernel(field, N.carrier.basis(n), image)
        vectors.extend(sub.vectors)
        pivots.extend(sub.pivots)
    return sub_comodule(
        N, Subspace(field, vectors, pivots), prefix="pr", name="Pr(%s)" % N.name
    )


def coabelianize(f):
    """
    The coabelianization ``Ab_C(D)`` of a coalgebra map ``f: C -> D``.

    It is the kernel of ``C ⊗ D -> C ⊗ D ⊗ D`` given by
    ``id ⊗ Δ_D - (id ⊗ f ⊗ id)(Δ_C ⊗ id) - (id ⊗ τ)(id ⊗ f ⊗ id)(Δ_C ⊗ id)``,
    a sub-comodule of the cofree comodule ``C ⊗ D``.

    Raises
    ------
    ValidationError
        If f is not a map of coalgebras.

    """
    report = f.check()
    if not report.ok:
        raise ValidationError("Not a coalgebra map", report=report)
    C, D = f.source, f.target
    field = C.field
    cofree = Comodule.cofree(C, D.carrier, steenrod=D.steenrod)
    minus = field.neg(field.one)

    def image(pair):
        c, d = pair
        out = {}
        for (d1, d2), coeff in D.delta(d).items():
            add_term(field, out, (c, d1, d2), coeff)
        for (c1, c2), coeff in C.delta(c).items():
            for e, ce in f.image_of(c2).items():
                value = field.mul(minus, field.mul(coeff, ce))
                add_term(field, out, (c1, e, d), value)
                sign = field.koszul(C.carrier.degree(c2), D.carrier.degree(d))
                add_term(field, out, (c1, d, e), field.mul(sign, value))
        return out

    vectors = []
    pivots = []
    for q in range(cofree.max_degree + 1):
        sub = linear_kernel(field, cofree.carrier.basis(q), image)
        vectors.extend(sub.vectors)
        pivots.extend(sub.pivots)
    result = sub_comodule(
        cofree, Subspace(field, vectors, pivots), prefix="ab", name="Ab(%s)" % D.name
    )
    if field is Field.F2:
        result.coabelian = verify_unstable_module(result.action(), strict=True).ok
    else:
        result.coabelian = True
    return result


class SquareZeroExtension(Coalgebra):
    """The coalgebra ``ι_C(M) = C ⊕ M`` with its inclusion and projection."""

    def __init__(self, base, module, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self.base = base
        self.module = module
        columns = {
            c: {c: base.field.one}
            for c in base.carrier.labels()
            if c in self.carrier
        }
        self.inclusion = CoalgebraMap.from_columns(base, self, columns)
        self.projection = CoalgebraMap.from_columns(self, base, columns)


def iota(C, M, check=True):
    """
    The square-zero extension ``ι_C(M)`` of C by a coabelian comodule M.

    The coproduct of ``m`` is ``ρ(m) + τρ(m)``.

    Raises
    ------
    ValidationError
        If M is not coabelian or its labels clash with those of C.

    """
    if M.base is not C:
        raise ValueError("M is not a comodule over C")
    if check:
        report = M.validate(strict=True)
        if not report.ok:
            raise ValidationError("Module is not coabelian", report=report)
    field = C.field
    clash = [x for x in M.carrier.labels() if x in C.carrier]
    if clash:
        raise ValidationError(
            "Labels shared by C and M: %s" % format_label(clash[0])
        )
    D = min(C.max_degree, M.max_degree)
    basis = [
        list(C.carrier.basis(n)) + list(M.carrier.basis(n)) for n in range(D + 1)
    ]
    carrier = GradedVectorSpace(field, D, basis)
    coproduct = {
        c: dict(C.delta(c)) for c in carrier.labels() if c in C.carrier
    }
    for m in M.carrier.labels():
        if m not in carrier:
            continue
        d = {}
        for (c, m1), coeff in M.rho(m).items():
            add_term(field, d, (c, m1), coeff)
            sign = field.koszul(C.carrier.degree(c), M.carrier.degree(m1))
            add_term(field, d, (m1, c), field.mul(sign, coeff))
        coproduct[m] = d
    steenrod = None
    if field is Field.F2:
        table = {}
        for source in (C.action(), M.action()):
            for (x, k), v in source.table().items():
                if x in carrier:
                    table[(x, k)] = v
        steenrod = UnstableRightModule(carrier, table)
    return SquareZeroExtension(
        C,
        M,
        carrier,
        coproduct,
        dict(C.counit),
        steenrod=steenrod,
        basepoint=C.basepoint,
        grouplikes=C.grouplikes,
        name="ι(%s)" % M.name,
    )


def shift(M, k):
    """
    The internal shift ``M[k]``, regraded up by k.

    The coaction and the Steenrod action are carried along unchanged and the
    result is coabelian. Elements pushed above the degree cap are dropped.

    """
    if k < 0:
        raise ValueError("Shifts must be non-negative")
    if k == 0:
        return M
    D = M.max_degree
    basis = [[] for _ in range(D + 1)]
    for n in range(D - k + 1):
        basis[n + k] = [Shifted(x, k) for x in M.carrier.basis(n)]
    carrier = GradedVectorSpace(M.field, D, basis)
    coaction = {}
    for n in range(D - k + 1):
        for x in M.carrier.basis(n):
            coaction[Shifted(x, k)] = {
                (c, Shifted(y, k)): coeff for (c, y), coeff in M.rho(x).items()
            }
    steenrod = None
    if M.field is Field.F2:
        table = {}
        for (x, i), v in M.action().table().items():
            if Shifted(x, k) in carrier:
                table[(Shifted(x, k), i)] = {Shifted(y, k): c for y, c in v.items()}
        steenrod = UnstableRightModule(carrier, table)
    return Comodule(
        M.base,
        carrier,
        coaction,
        steenrod=steenrod,
        coabelian=True,
        name="%s[%i]" % (M.name, k),
    )


class SubcoalgebraPair(object):
    """Two subcoalgebras ``K`` and ``L`` of ``C`` given by inclusions."""

    def __init__(self, C, K, L):
        self.C = C
        self.K = K
        self.L = L

    def validate(self):
        report = ValidationReport("subcoalgebra pair")
        for name, inc in (("K", self.K), ("L", self.L)):
            if inc.target is not self.C:
                report.add("inclusion target", name)
                continue
            if not inc.is_injective():
                report.add("injective", name)
            sub = inc.check()
            for v in sub.violations:
                report.add(v.axiom, name, format_label(v.witness))
        return report

    @classmethod
    def from_labels(cls, C, K_labels, L_labels):
        """Pair of subcoalgebras spanned by subsets of the basis of C."""
        return cls(C, _span_subcoalgebra(C, K_labels, "K"), _span_subcoalgebra(C, L_labels, "L"))


def _span_subcoalgebra(C, labels, name):
    labels = list(labels)
    keep = set(labels)
    carrier = GradedVectorSpace(
        C.field,
        C.max_degree,
        [[x for x in C.carrier.basis(n) if x in keep] for n in range(C.max_degree + 1)],
    )
    coproduct = {}
    for x in carrier.labels():
        d = C.delta(x)
        if any(a not in keep or b not in keep for (a, b) in d):
            raise ValidationError("%s is not a subcoalgebra at %s" % (name, x))
        coproduct[x] = dict(d)
    steenrod = None
    if C.field is Field.F2:
        steenrod = C.action().restrict(carrier)
    basepoint = C.basepoint if C.basepoint in keep else None
    sub = Coalgebra(
        carrier,
        coproduct,
        {x: c for x, c in C.counit.items() if x in keep},
        steenrod=steenrod,
        basepoint=basepoint,
        name=name,
    )
    return CoalgebraMap.from_columns(sub, C, {x: {x: C.field.one} for x in labels})


class StarCircResult(object):
    """Kernel and image of ``φ: C/(K+L) -> C/K □_C C/L``."""

    def __init__(self, field, max_degree, star, circ, phi):
        self.field = field
        self.max_degree = max_degree
        self.star = star
        self.circ = circ
        self.phi = phi

    def star_dims(self):
        return self.star.dims()

    def circ_dims(self):
        return self.circ.dims()


def star_and_circ(pair):
    """
    Compute ``C/K ∗_C C/L`` and ``C/K ∘_C C/L``.

    The map ``φ`` sends the class of ``c`` to ``(π_K ⊗ π_L)Δ(c)``. The star
    is its kernel and the circle its image.

    Raises
    ------
    ValidationError
        If K or L is not a subcoalgebra.

    """
    report = pair.validate()
    if not report.ok:
        raise ValidationError("Invalid subcoalgebra pair", report=report)
    C = pair.C
    field = C.field
    position = C.carrier.position
    K = Subspace.span(field, list(pair.K.linear.columns.values()), position)
    L = Subspace.span(field, list(pair.L.linear.columns.values()), position)
    both = Subspace.span(field, K.vectors + L.vectors, position)
    k_piv, l_piv, b_piv = set(K.pivots), set(L.pivots), set(both.pivots)

    def proj(sub, pivots, x):
        return {
            y: c for y, c in sub.reduce({x: field.one}).items() if y not in pivots
        }

    def phi(x):
        out = {}
        for (a, b), coeff in C.delta(x).items():
            pa = proj(K, k_piv, a)
            if not pa:
                continue
            pb = proj(L, l_piv, b)
            for y, cy in pa.items():
                for z, cz in pb.items():
                    add_term(field, out, (y, z), field.mul(coeff, field.mul(cy, cz)))
        return out

    D = C.max_degree
    star_basis = [[] for _ in range(D + 1)]
    circ_basis = [[] for _ in range(D + 1)]
    star_cols = {}
    circ_cols = {}
    for n in range(D + 1):
        domain = [x for x in C.carrier.basis(n) if x not in b_piv]
        sub = linear_kernel(field, domain, phi)
        for i, vec in enumerate(sub.vectors):
            label = "star:%i:%i" % (n, i)
            star_basis[n].append(label)
            star_cols[label] = vec
        images = Subspace.span(
            field,
            [phi(x) for x in domain],
            _pair_position(C.carrier),
        )
        for i, vec in enumerate(images.vectors):
            label = "circ:%i:%i" % (n, i)
            circ_basis[n].append(label)
            circ_cols[label] = vec
    star = GradedVectorSpace(field, D, star_basis)
    circ = GradedVectorSpace(field, D, circ_basis)
    star.vectors = star_cols
    circ.vectors = circ_cols
    return StarCircResult(field, D, star, circ, phi)


def _pair_position(carrier):
    size = carrier.total_dim + 1

    def position(pair):
        a, b = pair
        return carrier.position(a) * size + carrier.position(b)

    return position


class DerivationSpace(object):
    """Solutions of the derivation equations, as linear maps ``M -> D``.

    Each basis vector is a sparse vector over pairs ``(m, d)`` with
    ``|m| = |d|``.
    """

    def __init__(self, module, target, unknowns, subspace):
        self.module = module
        self.target = target
        self.unknowns = unknowns
        self.subspace = subspace

    @property
    def dim(self):
        return self.subspace.dim

    @property
    def vectors(self):
        return self.subspace.vectors

    def dims_by_degree(self):
        """Dimension of the derivations supported in each source degree."""
        out = {}
        for vec in self.vectors:
            n = min(self.module.carrier.degree(m) for (m, _) in vec)
            out[n] = out.get(n, 0) + 1
        return out


def hom_unknowns(M, D):
    """Basis ``(m, d)`` of the degree zero maps from ``M`` to ``D``."""
    out = []
    for n in range(min(M.max_degree, D.max_degree) + 1):
        for m in M.carrier.basis(n):
            for d in D.carrier.basis(n):
                out.append((m, d))
    return out


def derivations(M, under, check=True):
    """
    The derivations ``Der(M, D)`` for a coalgebra D under C.

    Parameters
    ----------
    M : Comodule
        A coabelian C-comodule.

    under : CoalgebraMap
        The structure map ``u: C -> D``.

    check : bool
        Validate the inputs first.

    Returns
    -------
    space : DerivationSpace
        The linear maps ``f: M -> D`` for which ``u + f: ι_C(M) -> D`` is a
        map of unstable coalgebras.

    """
    C, D = under.source, under.target
    if M.base is not C:
        raise ValueError("M is not a comodule over the source of the map")
    if check:
        report = M.validate(strict=True)
        if not report.ok:
            raise ValidationError("Module is not coabelian", report=report)
    field = M.field
    minus = field.neg(field.one)
    reverse_rho = {}
    for m0 in M.carrier.labels():
        for (c, m), coeff in M.rho(m0).items():
            reverse_rho.setdefault(m, []).append((m0, c, coeff))
    use_action = field is Field.F2
    if use_action:
        ma, da = M.action(), D.action()
        reverse_sq = {}
        for (m0, k), vec in ma.table().items():
            for m, coeff in vec.items():
                reverse_sq.setdefault(m, []).append((m0, k, coeff))

    def image(key):
        m, d = key
        out = {}
        for pair, coeff in D.delta(d).items():
            add_term(field, out, ("Δ", m, pair), coeff)
        for m0, c, coeff in reverse_rho.get(m, ()):
            sign = field.koszul(C.carrier.degree(c), M.carrier.degree(m))
            for e, ce in under.image_of(c).items():
                value = field.mul(minus, field.mul(coeff, ce))
                add_term(field, out, ("Δ", m0, (e, d)), value)
                add_term(field, out, ("Δ", m0, (d, e)), field.mul(sign, value))
        eps = D.epsilon(d)
        if eps:
            add_term(field, out, ("ε", m), eps)
        if use_action:
            for m0, k, coeff in reverse_sq.get(m, ()):
                add_term(field, out, ("Sq", m0, k, d), coeff)
            for k in range(1, M.carrier.degree(m) + 1):
                for y, coeff in da.act(d, k).items():
                    add_term(field, out, ("Sq", m, k, y), field.mul(minus, coeff))
        return out

    unknowns = hom_unknowns(M, D)
    sub = linear_kernel(field, unknowns, image)
    return DerivationSpace(M, D, unknowns, sub)


def comodule_homs(M, N):
    """Degree zero comodule maps ``M -> N`` commuting with the actions."""
    if M.base is not N.base:
        raise ValueError("Comodules over different coalgebras")
    field = M.field
    minus = field.neg(field.one)
    reverse_rho = {}
    for m0 in M.carrier.labels():
        for (c, m), coeff in M.rho(m0).items():
            reverse_rho.setdefault(m, []).append((m0, c, coeff))
    use_action = field is Field.F2
    if use_action:
        ma, na = M.action(), N.action()
        reverse_sq = {}
        for (m0, k), vec in ma.table().items():
            for m, coeff in vec.items():
                reverse_sq.setdefault(m, []).append((m0, k, coeff))

    def image(key):
        m, n = key
        out = {}
        for (c, n1), coeff in N.rho(n).items():
            add_term(field, out, ("ρ", m, c, n1), coeff)
        for m0, c, coeff in reverse_rho.get(m, ()):
            add_term(field, out, ("ρ", m0, c, n), field.mul(minus, coeff))
        if use_action:
            for m0, k, coeff in reverse_sq.get(m, ()):
                add_term(field, out, ("Sq", m0, k, n), coeff)
            for k in range(1, M.carrier.degree(m) + 1):
                for y, coeff in na.act(n, k).items():
                    add_term(field, out, ("Sq", m, k, y), field.mul(minus, coeff))
        return out

    unknowns = hom_unknowns(M, N)
    return DerivationSpace(M, N, unknowns, linear_kernel(field, unknowns, image))


def restrict_comodule(M, f):
    """Corestrict a C-comodule along a coalgebra map ``f: C -> C'``."""
    field = M.field
    coaction = {}
    for m in M.carrier.labels():
        d = {}
        for (c, m1), coeff in M.rho(m).items():
            for e, ce in f.image_of(c).items():
                add_term(field, d, (e, m1), field.mul(coeff, ce))
        coaction[m] = d
    return Comodule(
        f.target,
        M.carrier,
        coaction,
        steenrod=M.steenrod,
        coabelian=M.coabelian,
        name=M.name,
    )


def comodule_isomorphism(M, N, limit=4096):
    """
    An isomorphism of comodules ``M -> N``, or None if there is none.

    Over F2 the comodule maps are enumerated. Over Q the determinant of a
    generic map is a polynomial of degree at most ``d = dim M`` in the k
    coefficients. The substitution ``c_i = j^((d + 1)^i)`` keeps its
    monomials apart, so it is nonzero at one of the first
    ``d (d + 1)^(k - 1) + 1`` integers j unless it vanishes.

    Raises
    ------
    BudgetExceeded
        If more than ``limit`` maps would be tried.

    """
    if M.carrier.dims() != N.carrier.dims():
        return None
    field = M.field
    homs = comodule_homs(M, N).vectors
    k = len(homs)

    def as_map(coeffs):
        columns = {}
        for c, vec in zip(coeffs, homs):
            for (m, n), x in vec.items():
                add_term(field, columns.setdefault(m, {}), n, field.mul(c, x))
        return GradedLinearMap(M.carrier, N.carrier, columns)

    if field is Field.F2:
        if 2 ** k > limit:
            raise BudgetExceeded(
                "Comodule isomorphism search over %i maps" % 2 ** k,
                stage="isomorphism search",
                needed=2 ** k,
                budget=limit,
            )
        points = itertools.product((0, 1), repeat=k)
    else:
        d = M.carrier.total_dim
        count = d * (d + 1) ** max(k - 1, 0) + 1
        points = (
            [field.coerce(j ** ((d + 1) ** i)) for i in range(k)]
            for j in range(count)
        )
    for tried, coeffs in enumerate(points):
        if tried == limit:
            raise BudgetExceeded(
                "Comodule isomorphism search over more than %i maps" % limit,
                stage="isomorphism search",
                needed=tried + 1,
                budget=limit,
            )
        f = as_map(coeffs)
        if f.is_injective():
            return f
    return None


# Maps of coalgebras, solved one degree at a time


class MapSystem(object):
    """
    The affine equations for the degree n part of a coalgebra map
    ``S -> T`` once the map is fixed below degree n.

    Unknowns are pairs ``(x, t)`` with x in ``S_n`` and t in ``T_n``. The
    linear part sends an unknown to its contribution to the equations
    ``Δφ(x) = (φ ⊗ φ)Δx`` and ``φ(x).Sq^k = φ(x.Sq^k)``; ``rhs`` collects
    the terms that only involve lower degrees.
    """

    def __init__(self, S, T, partial, n):
        self.S = S
        self.T = T
        self.n = n
        field = self.field = S.field
        minus = field.neg(field.one)
        use_action = field is Field.F2
        self.unknowns = [
            (x, t) for x in S.carrier.basis(n) for t in T.carrier.basis(n)
        ]
        degree = S.carrier.degree
        self._reverse = {}
        rhs = {}
        for x in S.carrier.basis(n):
            for (a, b), c in S.delta(x).items():
                if n and degree(a) == n:
                    self._reverse.setdefault(a, []).append((x, b, c, "left"))
                elif n and degree(b) == n:
                    self._reverse.setdefault(b, []).append((x, a, c, "right"))
                else:
                    for y, cy in partial.get(a, {}).items():
                        for z, cz in partial.get(b, {}).items():
                            add_term(
                                field,
                                rhs,
                                ("Δ", x, (y, z)),
                                field.mul(c, field.mul(cy, cz)),
                            )
            if use_action:
                sa = S.action()
                for k in range(1, n + 1):
                    image = {}
                    for y, cy in sa.act(x, k).items():
                        vector_axpy(field, image, cy, partial.get(y, {}))
                    for z, cz in image.items():
                        add_term(field, rhs, ("Sq", x, k, z), cz)
        self.rhs = rhs
        self._partial = partial
        self._minus = minus
        self._use_action = use_action

    def image(self, unknown):
        x, t = unknown
        field = self.field
        out = {}
        for pair, c in self.T.delta(t).items():
            add_term(field, out, ("Δ", x, pair), c)
        for owner, other, c, side in self._reverse.get(x, ()):
            for z, cz in self._partial.get(other, {}).items():
                key = (t, z) if side == "left" else (z, t)
                value = field.mul(self._minus, field.mul(c, cz))
                add_term(field, out, ("Δ", owner, key), value)
        if self._use_action:
            ta = self.T.action()
            for k in range(1, self.n + 1):
                for y, cy in ta.act(t, k).items():
                    add_term(field, out, ("Sq", x, k, y), cy)
        return out

    def solve(self):
        """A particular solution and a basis of the homogeneous solutions,
        as dictionaries ``x -> φ(x)``; the particular solution is None when
        the lower degrees do not extend."""
        field = self.field
        homogeneous = linear_kernel(field, self.unknowns, self.image)
        basis = [self._split(v) for v in homogeneous.vectors]
        if not self.unknowns:
            return ({} if not self.rhs else None), basis
        coeffs = express(field, [self.image(u) for u in self.unknowns], self.rhs)
        if coeffs is None:
            return None, basis
        particular = self._split(
            {u: c for u, c in zip(self.unknowns, coeffs) if c}
        )
        return particular, basis

    def _split(self, vector):
        out = {}
        for (x, t), c in vector.items():
            add_term(self.field, out.setdefault(x, {}), t, c)
        return out


def _bijective_block(field, labels, assignment, target_dim):
    if len(labels) != target_dim:
        return False
    return linear_rank(field, labels, lambda x: assignment.get(x, {})) == target_dim


def enumerate_coalgebra_maps(S, T, limit=4096, invertible=False):
    """
    All maps of unstable coalgebras ``S -> T`` over F2.

    Degree zero is assigned by sending the grouplike basis of ``S_0`` to
    grouplikes of T; every higher degree is the solution set of an affine
    system, enumerated exhaustively.

    Parameters
    ----------
    S, T : Coalgebra
        Source and target, with the same degree cap.

    limit : int
        The largest number of partial maps to visit.

    invertible : bool
        Only return maps that are bijective in every degree.

    Returns
    -------
    maps : list of GradedLinearMap
        The maps, in a deterministic order.

    Raises
    ------
    BudgetExceeded
        If the search visits more than ``limit`` partial maps.

    UnsupportedInput
        If the degree zero basis of S is not grouplike.

    """
    field = S.field
    if field is not Field.F2:
        raise ValueError("Coalgebra maps are only enumerated over F2")
    if S.max_degree != T.max_degree:
        raise ValueError("Source and target need the same degree cap")
    D = S.max_degree
    zero = list(S.carrier.basis(0))
    for x in zero:
        if not is_grouplike(S, {x: 1}):
            raise UnsupportedInput(
                "Degree zero basis element %s is not grouplike" % format_label(x)
            )
    points = find_grouplikes(T)
    found = []
    visited = [0]

    def visit():
        visited[0] += 1
        if visited[0] > limit:
            raise BudgetExceeded(
                "Map search visits more than %i partial maps" % limit,
                stage="map search",
                needed=visited[0],
                budget=limit,
            )

    def extend(partial, n):
        visit()
        if n > D:
            found.append(dict(partial))
            return
        particular, basis = MapSystem(S, T, partial, n).solve()
        if particular is None:
            return
        for bits in itertools.product((0, 1), repeat=len(basis)):
            choice = {x: dict(v) for x, v in particular.items()}
            for b, vec in zip(bits, basis):
                if b:
                    for x, v in vec.items():
                        vector_axpy(field, choice.setdefault(x, {}), 1, v)
            if invertible and not _bijective_block(
                field, S.carrier.basis(n), choice, T.carrier.dim(n)
            ):
                continue
            nxt = dict(partial)
            nxt.update(choice)
            extend(nxt, n + 1)

    for images in itertools.product(points, repeat=len(zero)):
        partial = dict(zip(zero, images))
        if invertible and not _bijective_block(field, zero, partial, T.carrier.dim(0)):
            continue
        extend(partial, 1)
    return [GradedLinearMap(S.carrier, T.carrier, m) for m in found]


def coalgebra_map_freedom(S, T, degree_zero):
    """
    Per degree, the dimension of the choices for a coalgebra map ``S -> T``
    extending ``degree_zero`` (a map on the degree zero basis), following
    one particular solution upwards.

    Returns a list of rows ``dict(degree, freedom, solvable)``; the rows stop
    at the first degree that does not extend.
    """
    partial = dict(degree_zero)
    rows = []
    for n in range(1, min(S.max_degree, T.max_degree) + 1):
        particular, basis = MapSystem(S, T, partial, n).solve()
        rows.append(
            dict(degree=n, freedom=len(basis), solvable=particular is not None)
        )
        if particular is None:
            break
        partial.update(particular)
    return rows
