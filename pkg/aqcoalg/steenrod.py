# -*- coding: utf-8 -*-

"""
The mod 2 Steenrod algebra in a range of degrees.

Monomials are tuples ``(i1, ..., ik)`` standing for ``Sq^i1 ... Sq^ik`` and
written ``Sq[i1,...,ik]`` in text, with ``1`` for the empty monomial. Modules
carry a right action, so ``x . Sq^k`` lowers the degree of ``x`` by ``k``.

Author: Gertjan van den Burg

"""

import collections
import functools

import regex

from .exceptions import ParseError
from .linalg import Field
from .linalg import Matrix
from .linalg import add_term
from .linalg import format_label
from .linalg import vector_axpy
from .validation import ValidationReport

MONOMIAL_PATTERN = regex.compile(r"^\s*Sq\[\s*(\d+(?:\s*,\s*\d+)*)\s*\]\s*$")


def binom_mod2(n, k):
    """Binomial coefficient modulo 2, by Lucas' theorem."""
    if k < 0 or n < 0 or k > n:
        return 0
    return int((k & ~n) == 0)


def degree(monomial):
    return sum(monomial)


def excess(monomial):
    if not monomial:
        return 0
    return 2 * monomial[0] - sum(monomial)


def is_admissible(monomial):
    if any(i <= 0 for i in monomial):
        return False
    return all(a >= 2 * b for a, b in zip(monomial, monomial[1:]))


def format_monomial(monomial):
    if not monomial:
        return "1"
    return "Sq[%s]" % ",".join(str(i) for i in monomial)


def parse_monomial(text):
    text = text.strip()
    if text == "1":
        return ()
    match = MONOMIAL_PATTERN.match(text)
    if match is None:
        raise ParseError("Not a Steenrod monomial: %r" % text)
    return tuple(int(x) for x in match.group(1).split(","))


def adem_relation(a, b):
    """Expand ``Sq^a Sq^b`` for ``0 < a < 2b`` as a list of monomials."""
    out = []
    for t in range(a // 2 + 1):
        if binom_mod2(b - 1 - t, a - 2 * t):
            out.append((a + b - t, t) if t else (a + b,))
    return out


@functools.lru_cache(maxsize=None)
def _normalize(word):
    for pos in range(len(word) - 1):
        a, b = word[pos], word[pos + 1]
        if a < 2 * b:
            result = set()
            for mono in adem_relation(a, b):
                new = word[:pos] + mono + word[pos + 2 :]
                for term in _normalize(new):
                    result ^= {term}
            return frozenset(result)
    return frozenset([word])


class SteenrodElement(object):
    """
    An F2 sum of admissible monomials of one degree.

    Terms occurring an even number of times cancel. Use
    :func:`adem_normalize` to build an element from an arbitrary word.

    """

    def __init__(self, terms=()):
        counts = collections.Counter(tuple(t) for t in terms)
        self.terms = frozenset(t for t, c in counts.items() if c % 2)
        for t in self.terms:
            if t and not is_admissible(t):
                raise ValueError("%s is not admissible" % format_monomial(t))
        degrees = {degree(t) for t in self.terms}
        if len(degrees) > 1:
            raise ValueError("Summands of different degrees")

    @classmethod
    def unit(cls):
        return cls([()])

    @classmethod
    def sq(cls, k):
        return cls([()]) if k == 0 else cls([(k,)])

    @property
    def degree(self):
        if not self.terms:
            return None
        return degree(next(iter(self.terms)))

    def is_zero(self):
        return not self.terms

    def sorted_terms(self):
        return sorted(self.terms)

    def __add__(self, other):
        return SteenrodElement(list(self.terms) + list(other.terms))

    def __mul__(self, other):
        out = []
        for s in self.terms:
            for t in other.terms:
                out.extend(_normalize(s + t))
        return SteenrodElement(out)

    def __eq__(self, other):
        if not isinstance(other, SteenrodElement):
            return False
        return self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(format_monomial(t) for t in self.sorted_terms())

    def __repr__(self):
        return "SteenrodElement(%s)" % self


def adem_normalize(word):
    """
    Rewrite a product of squares into admissible form.

    Parameters
    ----------
    word : sequence of int
        The exponents of ``Sq^i1 Sq^i2 ...``. Zero exponents are units.

    Returns
    -------
    element : SteenrodElement
        The admissible expansion of the word.

    """
    word = tuple(int(i) for i in word if i)
    if any(i < 0 for i in word):
        raise ValueError("Negative Steenrod square in %r" % (word,))
    return SteenrodElement(_normalize(word))


def _admissible_sequences(n, bound):
    if n == 0:
        yield ()
        return
    for first in range(1, min(n, bound) + 1):
        for rest in _admissible_sequences(n - first, first // 2):
            yield (first,) + rest


def admissible_basis(n):
    """All admissible monomials of degree n in lexicographic order."""
    if n < 0:
        return []
    return sorted(_admissible_sequences(n, n))


def free_unstable_algebra_generators(n, max_degree):
    """
    Polynomial generators ``Sq^I ι_n`` of the free unstable algebra on a class
    of degree n, up to the degree cap.

    These are the admissible ``I`` of excess less than ``n``. The classes
    ``Sq^I ι_n`` with excess exactly ``n`` are squares of lower generators.

    Parameters
    ----------
    n : int
        The degree of the fundamental class, at least 1.

    max_degree : int
        The internal degree cap.

    Returns
    -------
    generators : list of tuple
        Pairs ``(I, n + deg I)`` ordered by degree and then by ``I``.

    """
    if n < 1:
        raise ValueError("The fundamental class must have positive degree")
    out = []
    for d in range(0, max_degree - n + 1):
        for mono in admissible_basis(d):
            if excess(mono) < n:
                out.append((mono, n + d))
    return out


def _powers_of_two(limit):
    k = 1
    while k <= limit:
        yield k
        k *= 2


class UnstableRightModule(object):
    """
    A graded F2 vector space with a right action of the Steenrod algebra.

    Parameters
    ----------
    carrier : GradedVectorSpace
        The underlying space, over F2.

    action : dict
        Maps ``(label, k)`` to the sparse vector ``label . Sq^k`` for k >= 1.
        Missing entries are zero.

    generators_only : bool
        If True, only the squares ``Sq^(2^j)`` are read from ``action`` and
        the others are synthesized from Adem relations.

    """

    def __init__(self, carrier, action=None, generators_only=False):
        if carrier.field is not Field.F2:
            raise ValueError("Steenrod actions are only defined over F2")
        self.carrier = carrier
        self.field = carrier.field
        table = {}
        powers = set(_powers_of_two(carrier.max_degree))
        for (label, k), vec in (action or {}).items():
            if k < 1:
                raise ValueError("Only Sq^k with k >= 1 are stored")
            if generators_only and k not in powers:
                continue
            vec = {x: c for x, c in vec.items() if c}
            if vec:
                table[(label, k)] = vec
        self._table = table
        if generators_only:
            self._synthesize()

    def _synthesize(self):
        D = self.carrier.max_degree
        for k in range(3, D + 1):
            if k & (k - 1) == 0:
                continue
            top = 1 << (k.bit_length() - 1)
            r = k - top
            for label in self.carrier.labels():
                if self.carrier.degree(label) < k:
                    continue
                x = {label: 1}
                out = self.act_vector(self.act_vector(x, r), top)
                for t in range(1, r // 2 + 1):
                    if binom_mod2(top - 1 - t, r - 2 * t):
                        y = self.act_vector(self.act_vector(x, k - t), t)
                        vector_axpy(self.field, out, 1, y)
                if out:
                    self._table[(label, k)] = out

    def act(self, label, k):
        if k == 0:
            return {label: 1}
        return self._table.get((label, k), {})

    def act_vector(self, vector, k):
        if k == 0:
            return dict(vector)
        out = {}
        for label, c in vector.items():
            image = self._table.get((label, k))
            if image and c:
                vector_axpy(self.field, out, c, image)
        return out

    def act_monomial(self, vector, monomial):
        """Right action of ``Sq^i1 ... Sq^ik``: ``Sq^i1`` acts first."""
        for i in monomial:
            vector = self.act_vector(vector, i)
            if not vector:
                break
        return vector

    def act_element(self, vector, element):
        out = {}
        for mono in element.terms:
            vector_axpy(self.field, out, 1, self.act_monomial(vector, mono))
        return out

    def table(self):
        return dict(self._table)

    def block(self, k, n):
        """Matrix of ``Sq^k`` from degree n to degree n - k."""
        src = self.carrier.basis(n)
        rows = self.carrier.dim(n - k)
        columns = [
            self.carrier.to_dense(self.act(x, k), n - k) for x in src
        ]
        if not src:
            return Matrix.zeros(self.field, rows, 0)
        return Matrix.from_columns(self.field, rows, columns)

    def restrict(self, carrier):
        table = {
            (x, k): v
            for (x, k), v in self._table.items()
            if x in carrier and all(y in carrier for y in v)
        }
        return UnstableRightModule(carrier, table)

    def relabel(self, carrier, mapping):
        """Transport the action along a label bijection ``mapping``."""
        table = {}
        for (x, k), v in self._table.items():
            if x in mapping:
                table[(mapping[x], k)] = {mapping[y]: c for y, c in v.items()}
        return UnstableRightModule(carrier, table)

    def __eq__(self, other):
        if not isinstance(other, UnstableRightModule):
            return False
        return self.carrier == other.carrier and self._table == other._table

    def __hash__(self):
        return hash(self.carrier)


def tensor_action(left, right, label_pair, k):
    """Cartan formula for the right action on a tensor product:
    ``(a ⊗ b) . Sq^k = sum (a . Sq^i) ⊗ (b . Sq^(k-i))``."""
    a, b = label_pair
    out = {}
    for i in range(k + 1):
        ai = left.act(a, i)
        if not ai:
            continue
        bj = right.act(b, k - i)
        for x, cx in ai.items():
            for y, cy in bj.items():
                add_term(Field.F2, out, (x, y), cx & cy)
    return out


def verify_unstable_module(module, strict=False, max_degree=None):
    """
    Check the module axioms and the instability condition.

    Parameters
    ----------
    module : UnstableRightModule
        The module to check.

    strict : bool
        Check the stronger condition ``x . Sq^n = 0`` for ``|x| <= 2n``
        required of coabelian comodules.

    max_degree : int
        Only check elements up to this degree. Defaults to the cap.

    Returns
    -------
    report : ValidationReport
        Empty if the module is valid.

    """
    carrier = module.carrier
    report = ValidationReport("unstable module")
    D = carrier.max_degree if max_degree is None else max_degree
    for (x, k), image in sorted(
        module.table().items(), key=lambda kv: (carrier.position(kv[0][0]), kv[0][1])
    ):
        n = carrier.degree(x)
        for y in image:
            if y not in carrier or carrier.degree(y) != n - k:
                report.add(
                    "action degree",
                    x,
                    "Sq^%i does not lower degree by %i" % (k, k),
                )
                break
    if not report.ok:
        return report

    for x in carrier.labels():
        n = carrier.degree(x)
        if n > D:
            continue
        for k in range(1, n + 1):
            bad = (n <= 2 * k) if strict else (n < 2 * k)
            if bad and module.act(x, k):
                report.add(
                    "strict instability" if strict else "instability",
                    x,
                    "x.Sq^%i is nonzero with |x| = %i" % (k, n),
                )
        for a in range(1, n + 1):
            xa = module.act(x, a)
            for b in range(1, n - a + 1):
                lhs = module.act_vector(xa, b)
                rhs = module.act_element({x: 1}, adem_normalize((a, b)))
                if lhs != rhs:
                    report.add(
                        "module axiom",
                        x,
                        "(x.Sq^%i).Sq^%i differs from x.(Sq^%i Sq^%i)"
                        % (a, b, a, b),
                    )
    return report


def describe_action(module):
    """Human readable listing of the nonzero actions."""
    lines = []
    for (x, k), v in sorted(
        module.table().items(),
        key=lambda kv: (module.carrier.position(kv[0][0]), kv[0][1]),
    ):
        terms = " + ".join(format_label(y) for y in v)
        lines.append("%s.Sq^%i = %s" % (format_label(x), k, terms))
    return lines
