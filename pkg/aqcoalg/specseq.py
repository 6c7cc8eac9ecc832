# -*- coding: utf-8 -*-

"""
Spectral sequences of first quadrant double complexes.

Pages are computed from the filtered total complex: with ``F^p`` the sum of
the columns from p on and ``Z_r^p`` the elements of ``F^p`` whose
differential lies in ``F^(p+r)``,

    E_r^p = Z_r^p / (Z_(r-1)^(p+1) + d Z_(r-1)^(p-r+1)).

Every entry keeps representatives in the total complex, so the differential
``d_r`` is computed by applying d to a representative.

Author: Gertjan van den Burg

"""

from .caps import Caps
from .cosimplicial import CochainComplex
from .cosimplicial import CosimplicialObject
from .cosimplicial import constant
from .cotor import CobarLeg
from .cotor import cobar_coface
from .cotor import derived_cotensor
from .cotor import product_image
from .exceptions import CrossCheckMismatch
from .linalg import GradedLinearMap
from .linalg import GradedVectorSpace
from .linalg import Matrix
from .linalg import Subquotient
from .linalg import add_term
from .linalg import linear_kernel
from .linalg import rank
from .linalg import tensor_many
from .shuffle import bigraded_cotor
from .validation import ValidationReport


class DoubleComplex(object):
    """
    A double complex of graded spaces ``D^{p,q}``.

    Parameters
    ----------
    field : Field
        The coefficients.

    objects : dict
        Maps ``(p, q)`` to a GradedVectorSpace. Missing entries are zero.

    horizontal : dict
        Maps ``(p, q)`` to ``∂_h: D^{p,q} -> D^{p+1,q}``.

    vertical : dict
        Maps ``(p, q)`` to ``∂_v: D^{p,q} -> D^{p,q+1}``.

    The two differentials anticommute.

    """

    def __init__(self, field, objects, horizontal, vertical, name=None):
        self.field = field
        self.objects = {k: v for k, v in objects.items()}
        for (p, q) in self.objects:
            if p < 0 or q < 0:
                raise ValueError("Double complexes live in the first quadrant")
        self.horizontal = dict(horizontal)
        self.vertical = dict(vertical)
        self.name = name or "D"
        self.p_max = max([p for p, _ in self.objects] + [0])
        self.q_max = max([q for _, q in self.objects] + [0])
        self.max_degree = max([V.max_degree for V in self.objects.values()] + [0])

    def object(self, p, q):
        return self.objects.get((p, q))

    def h_image(self, p, q, x):
        f = self.horizontal.get((p, q))
        return f.image_of(x) if f is not None else {}

    def v_image(self, p, q, x):
        f = self.vertical.get((p, q))
        return f.image_of(x) if f is not None else {}

    def validate(self):
        report = ValidationReport(self.name)
        field = self.field
        for (p, q), V in sorted(self.objects.items()):
            for x in V.labels():
                hh = {}
                for y, c in self.h_image(p, q, x).items():
                    for z, cz in self.h_image(p + 1, q, y).items():
                        add_term(field, hh, z, field.mul(c, cz))
                if hh:
                    report.add("∂_h ∘ ∂_h = 0", (p, q, x))
                vv = {}
                for y, c in self.v_image(p, q, x).items():
                    for z, cz in self.v_image(p, q + 1, y).items():
                        add_term(field, vv, z, field.mul(c, cz))
                if vv:
                    report.add("∂_v ∘ ∂_v = 0", (p, q, x))
                square = {}
                for y, c in self.h_image(p, q, x).items():
                    for z, cz in self.v_image(p + 1, q, y).items():
                        add_term(field, square, z, field.mul(c, cz))
                for y, c in self.v_image(p, q, x).items():
                    for z, cz in self.h_image(p, q + 1, y).items():
                        add_term(field, square, z, field.mul(c, cz))
                if square:
                    report.add("anticommuting squares", (p, q, x))
        return report

    def transpose(self):
        """Exchange the roles of p and q."""
        return DoubleComplex(
            self.field,
            {(q, p): V for (p, q), V in self.objects.items()},
            {(q, p): f for (p, q), f in self.vertical.items()},
            {(q, p): f for (p, q), f in self.horizontal.items()},
            name="%s^T" % self.name,
        )

    def total_complex(self):
        """The total complex with labels ``(p, q, x)`` and ``d = ∂_h + ∂_v``."""
        N = self.p_max + self.q_max
        D = self.max_degree
        field = self.field
        objects = []
        for n in range(N + 1):
            basis = [[] for _ in range(D + 1)]
            for p in range(n + 1):
                V = self.object(p, n - p)
                if V is None:
                    continue
                for t in range(V.max_degree + 1):
                    basis[t].extend((p, n - p, x) for x in V.basis(t))
            objects.append(GradedVectorSpace(field, D, basis))
        differentials = []
        for n in range(N):
            columns = {}
            for label in objects[n].labels():
                columns[label] = self.total_image(label)
            differentials.append(GradedLinearMap(objects[n], objects[n + 1], columns))
        return CochainComplex(objects, differentials, name="Tot(%s)" % self.name)

    def total_image(self, label):
        p, q, x = label
        out = {}
        for y, c in self.h_image(p, q, x).items():
            out[(p + 1, q, y)] = c
        for y, c in self.v_image(p, q, x).items():
            add_term(self.field, out, (p, q + 1, y), c)
        return out


class SpectralSequencePage(object):
    """
    The page ``E_r``.

    ``entries`` maps ``(p, q, t)`` (t the internal degree) to the list of
    basis labels ``e<r>:<p>:<q>:<t>:<i>``; ``representatives`` maps labels to
    vectors of the total complex and ``differentials`` maps ``(p, q, t)`` to
    the matrix of ``d_r`` out of that entry.

    """

    def __init__(self, r, entries, representatives, differentials):
        self.r = r
        self.entries = entries
        self.representatives = representatives
        self.differentials = differentials

    def dims(self):
        """Dimensions ``{(p, q): [dim per internal degree]}``."""
        out = {}
        top = max([t for (_, _, t) in self.entries] + [0])
        for (p, q, t), labels in self.entries.items():
            if labels:
                row = out.setdefault((p, q), [0] * (top + 1))
                row[t] = len(labels)
        return dict(sorted(out.items()))

    def dim(self, p, q, t=None):
        if t is not None:
            return len(self.entries.get((p, q, t), ()))
        return sum(
            len(v) for (a, b, _), v in self.entries.items() if (a, b) == (p, q)
        )

    def total_dims(self):
        out = {}
        for (p, q, t), labels in self.entries.items():
            if labels:
                out[(p + q, t)] = out.get((p + q, t), 0) + len(labels)
        return dict(sorted(out.items()))

    def differentials_vanish(self):
        return all(m.is_zero() for m in self.differentials.values())

    def restricted(self, bound):
        """The entries with ``p + q <= bound`` and the differentials between
        them."""
        entries = {k: v for k, v in self.entries.items() if k[0] + k[1] <= bound}
        labels = {x for v in entries.values() for x in v}
        representatives = {
            x: v for x, v in self.representatives.items() if x in labels
        }
        differentials = {
            (p, q, t): m
            for (p, q, t), m in self.differentials.items()
            if (p, q, t) in entries and p + q < bound
        }
        return SpectralSequencePage(self.r, entries, representatives, differentials)


class _FilteredTotal(object):
    """The total complex in one internal degree, filtered by columns."""

    def __init__(self, dc, t):
        self.dc = dc
        self.t = t
        self.field = dc.field
        self.levels = {}
        for (p, q), V in dc.objects.items():
            if t <= V.max_degree:
                self.levels.setdefault(p + q, []).extend(
                    (p, q, x) for x in V.basis(t)
                )
        self._position = {}
        for n, labels in self.levels.items():
            for i, label in enumerate(labels):
                self._position[label] = i
        self._z = {}

    def position(self, label):
        return self._position[label]

    def d(self, vector):
        out = {}
        for label, c in vector.items():
            for y, cy in self.dc.total_image(label).items():
                add_term(self.field, out, y, self.field.mul(c, cy))
        return out

    def cycles(self, r, p, n):
        """``Z_r^p`` in total degree n; ``Z_(-1)^p = F^p``."""
        key = (r, p, n)
        if key not in self._z:
            domain = [x for x in self.levels.get(n, []) if x[0] >= p]
            if r < 0:
                vectors = [{x: self.field.one} for x in domain]
                self._z[key] = vectors
            else:
                bound = p + r

                def image(x):
                    return {
                        y: c
                        for y, c in self.dc.total_image(x).items()
                        if y[0] < bound
                    }

                self._z[key] = linear_kernel(self.field, domain, image).vectors
        return self._z[key]

    def entry(self, r, p, n):
        numerator = self.cycles(r, p, n)
        denominator = list(self.cycles(r - 1, p + 1, n))
        denominator += [self.d(z) for z in self.cycles(r - 1, p - r + 1, n - 1)]
        return Subquotient(self.field, numerator, denominator, self.position)


def _page(dc, totals, r, caps):
    entries = {}
    quotients = {}
    representatives = {}
    for t, total in totals.items():
        for n in sorted(total.levels):
            for p in range(max(0, n - dc.q_max), min(n, dc.p_max) + 1):
                q = n - p
                sq = total.entry(r, p, n)
                labels = []
                for i, vec in enumerate(sq.vectors):
                    label = "e%i:%i:%i:%i:%i" % (r, p, q, t, i)
                    labels.append(label)
                    representatives[label] = vec
                if labels:
                    entries[(p, q, t)] = labels
                    quotients[(p, q, t)] = sq
    caps.check("page E_%i" % r, len(representatives))
    differentials = {}
    for (p, q, t), labels in entries.items():
        target = (p + r, q - r + 1, t)
        total = totals[t]
        rows = len(entries.get(target, []))
        columns = []
        for label in labels:
            image = total.d(representatives[label])
            if target in quotients:
                columns.append(quotients[target].project(image))
            else:
                columns.append([])
        if rows:
            differentials[(p, q, t)] = Matrix.from_columns(dc.field, rows, columns)
        else:
            differentials[(p, q, t)] = Matrix.zeros(dc.field, 0, len(labels))
    return SpectralSequencePage(r, entries, representatives, differentials)


class SpectralSequence(object):
    """Pages ``E_1, ..., E_r`` of a double complex, its ``E_∞`` page and the
    cohomology of the total complex."""

    def __init__(self, dc, pages, infinity, total_dims):
        self.dc = dc
        self.pages = pages
        self.infinity = infinity
        self.total_dims = total_dims

    def page(self, r):
        for page in self.pages:
            if page.r == r:
                return page
        raise KeyError("Page E_%i was not computed" % r)

    @property
    def collapse_page(self):
        """The first computed page after which all differentials vanish."""
        last = None
        for page in reversed(self.pages):
            if not page.differentials_vanish():
                break
            last = page.r
        return last

    def abutment_dims(self):
        return self.infinity.total_dims()

    def restricted(self, bound):
        """Pages, ``E_∞`` and total cohomology in total degrees up to
        ``bound``."""
        return SpectralSequence(
            self.dc,
            [page.restricted(bound) for page in self.pages],
            self.infinity.restricted(bound),
            {k: v for k, v in self.total_dims.items() if k[0] <= bound},
        )


def ss_from_double_complex(
    dc, filtration="horizontal", r_max=None, caps=None, verbose=False
):
    """
    The spectral sequence of a double complex.

    Parameters
    ----------
    dc : DoubleComplex
        A valid first quadrant double complex.

    filtration : str
        ``horizontal`` filters by columns p, so ``E_1`` is the cohomology of
        ``∂_v`` and ``E_2 = H_h H_v``. ``vertical`` filters by rows.

    r_max : int
        The last page to keep. ``E_∞`` is always computed.

    caps : Caps
        Budget for the total dimension of a page.

    verbose : bool
        Print progress.

    Returns
    -------
    ss : SpectralSequence
        Pages, ``E_∞`` and the dimensions of the total cohomology.

    Raises
    ------
    CrossCheckMismatch
        If a page turn or the abutment equality fails.

    """
    log = lambda *a, **kw: print(*a, **kw) if verbose else None
    caps = caps or Caps()
    if filtration == "vertical":
        dc = dc.transpose()
    elif filtration != "horizontal":
        raise ValueError("Unknown filtration %r" % filtration)
    report = dc.validate()
    report.raise_if_invalid()
    bound = dc.p_max + dc.q_max + 2
    r_max = bound if r_max is None else min(r_max, bound)
    totals = {t: _FilteredTotal(dc, t) for t in range(dc.max_degree + 1)}
    pages = []
    previous = None
    for r in range(1, bound + 1):
        page = _page(dc, totals, r, caps)
        log("E_%i: %r" % (r, page.total_dims()))
        if previous is not None:
            _check_page_turn(previous, page)
        if r <= r_max:
            pages.append(page)
        previous = page
    infinity = _page(dc, totals, bound + 1, caps)
    total = dc.total_complex()
    total_dims = {}
    for n in range(total.S):
        for t, dim in enumerate(total.cohomology(n).dims()):
            if dim:
                total_dims[(n, t)] = dim
    # the top total degree has no outgoing differential
    top = total.S
    for t in range(total.carrier(top).max_degree + 1):
        incoming = _rank(total.differential(top - 1).block(t)) if top else 0
        dim = total.carrier(top).dim(t) - incoming
        if dim:
            total_dims[(top, t)] = dim
    if infinity.total_dims() != total_dims:
        raise CrossCheckMismatch(
            "E_∞ %r does not add up to the total cohomology %r"
            % (infinity.total_dims(), total_dims)
        )
    return SpectralSequence(dc, pages, infinity, total_dims)


def _rank(matrix):
    if matrix is None or not matrix.nrows or not matrix.ncols:
        return 0
    return rank(matrix)


def _check_page_turn(page, nxt):
    r = page.r
    keys = set(page.entries) | set(nxt.entries)
    for (p, q, t) in keys:
        out = page.differentials.get((p, q, t))
        incoming = page.differentials.get((p - r, q + r - 1, t))
        expected = page.dim(p, q, t) - _rank(out) - _rank(incoming)
        if nxt.dim(p, q, t) != expected:
            raise CrossCheckMismatch(
                "E_%i^{%i,%i} in degree %i has dimension %i, expected %i"
                % (r + 1, p, q, t, nxt.dim(p, q, t), expected)
            )
        after = page.differentials.get((p + r, q - r + 1, t))
        if out is not None and after is not None and out.nrows and after.nrows:
            if not (after @ out).is_zero():
                raise CrossCheckMismatch("d_%i ∘ d_%i is not zero" % (r, r))


def dump_pages(pages, field=None):
    """
    Stable text rendering of pages.

    Every page starts with a line ``E_r``, followed by rows
    ``p q t dim [labels]`` and the nonzero differential matrices.
    """
    lines = []
    for page in pages:
        lines.append("E_%i" % page.r)
        for (p, q, t) in sorted(page.entries):
            labels = page.entries[(p, q, t)]
            lines.append(
                "%i %i %i %i [%s]" % (p, q, t, len(labels), ", ".join(labels))
            )
        for (p, q, t) in sorted(page.differentials):
            m = page.differentials[(p, q, t)]
            if m.is_zero():
                continue
            fmt = field.format if field is not None else str
            rows = "; ".join(
                " ".join(fmt(x) for x in m.row(i)) for i in range(m.shape[0])
            )
            lines.append(
                "d_%i (%i,%i,%i) -> (%i,%i,%i): [%s]"
                % (page.r, p, q, t, p + page.r, q - page.r + 1, t, rows)
            )
    return "\n".join(lines) + "\n"


# Künneth spectral sequences


def cobar_double_complex(left, base, right, q_max, caps=None):
    """
    The double complex ``D^{p,q} = B^p ⊗ (C^p)^(⊗q) ⊗ A^p``.

    ``∂_h`` is the alternating sum of the cofaces in the cosimplicial
    direction p and ``∂_v`` is the cobar differential, signed by ``(-1)^p``.
    """
    caps = caps or Caps()
    field = base.field
    S = base.S
    objects = {}
    for p in range(S + 1):
        for q in range(q_max + 1):
            carriers = (
                [left.level(p).carrier]
                + [base.carrier(p)] * q
                + [right.level(p).carrier]
            )
            V = tensor_many(carriers)
            caps.check("double complex (%i, %i)" % (p, q), V.total_dim)
            objects[(p, q)] = V
    horizontal = {}
    for p in range(S):
        for q in range(q_max + 1):
            maps_for = [
                [left.vertical.coface(p, i)]
                + [base.coface(p, i)] * q
                + [right.vertical.coface(p, i)]
                for i in range(p + 2)
            ]
            columns = {}
            for x in objects[(p, q)].labels():
                image = {}
                for i, maps in enumerate(maps_for):
                    sign = field.sign(i)
                    for y, c in product_image(field, x, maps).items():
                        add_term(field, image, y, field.mul(sign, c))
                columns[x] = image
            horizontal[(p, q)] = GradedLinearMap(
                objects[(p, q)], objects[(p + 1, q)], columns
            )
    vertical = {}
    for p in range(S + 1):
        Cp = base.levels[p]
        first = lambda x, p=p: left.coaction(p, x)
        last = lambda x, p=p: right.coaction(p, x)
        for q in range(q_max):
            columns = {}
            for x in objects[(p, q)].labels():
                image = {}
                for i in range(q + 2):
                    sign = field.sign(i + p)
                    for y, c in cobar_coface(x, i, q, first, Cp.delta, last).items():
                        add_term(field, image, y, field.mul(sign, c))
                columns[x] = image
            vertical[(p, q)] = GradedLinearMap(
                objects[(p, q)], objects[(p, q + 1)], columns
            )
    return DoubleComplex(field, objects, horizontal, vertical, name="N(B ⊗ Ω ⊗ A)")


def _legs(B, A, C):
    if isinstance(B, CosimplicialObject):
        C = constant(B.levels[0].base, B.S) if C is None else C
        left = CobarLeg.from_comodules(B, "left")
        return left, C, CobarLeg.from_comodules(A, "right")
    if B.target is not A.target:
        raise ValueError("Maps must share their target")
    C = B.target if C is None else C
    return CobarLeg.from_map(B, "left"), C, CobarLeg.from_map(A, "right")


class KunnethResult(object):
    """
    A Künneth spectral sequence cut to the total degrees ``p + q <=
    reliable``, where truncation of the double complex does not reach.

    ``abutment`` holds the cohomotopy of the derived cotensor product in the
    same range when it was computed; ``cotor`` the E_2 page of the second
    sequence computed over the shuffle coalgebra ``π^*C•``.
    """

    def __init__(self, ss, abutment, reliable, cotor=None):
        self.ss = ss
        self.abutment = abutment
        self.reliable = reliable
        self.cotor = cotor

    @property
    def pages(self):
        return self.ss.pages

    def e2(self):
        return self.ss.page(2)


def _kunneth(B, A, C, caps, filtration, cross_check, verbose):
    log = lambda *a, **kw: print(*a, **kw) if verbose else None
    caps = caps or Caps()
    left, base, right = _legs(B, A, C)
    q_max = caps.pmax + 1
    dc = cobar_double_complex(left, base, right, q_max, caps=caps)
    if filtration == "vertical":
        # rows first: the Cotor degree becomes p
        dc = dc.transpose()
    # D^{p,q} has no outgoing ∂_h at p = S and no ∂_v at q = q_max, so only
    # total degrees below min(S, q_max) are exact
    reliable = min(base.S, q_max) - 1
    full = ss_from_double_complex(dc, "horizontal", caps=caps, verbose=verbose)
    ss = full.restricted(reliable)
    log("Reliable up to total degree %i" % reliable)
    cotor = None
    if filtration == "vertical" and reliable >= 0:
        cotor = bigraded_cotor(left, base, right, reliable, verbose=verbose)
        _check_bigraded(ss.page(2), cotor)
    abutment = None
    if cross_check:
        derived = derived_cotensor(B, A, C=C, caps=caps, verbose=verbose)
        abutment = {}
        for n, dims in enumerate(derived.dims()):
            for t, dim in enumerate(dims):
                if dim and n <= reliable:
                    abutment[(n, t)] = dim
        if ss.total_dims != abutment:
            raise CrossCheckMismatch(
                "Spectral sequence abutment %r differs from the derived "
                "cotensor product %r" % (ss.total_dims, abutment)
            )
    return KunnethResult(ss, abutment, reliable, cotor=cotor)


def _check_bigraded(e2, cotor):
    for structure in (cotor.coalgebra, cotor.left, cotor.right):
        report = structure.check()
        if not report.ok:
            raise CrossCheckMismatch(
                "The shuffle structure on %s fails: %s"
                % (report.subject, report.violations[0])
            )
    ours = {k: len(v) for k, v in e2.entries.items() if v}
    if ours != cotor.entries:
        raise CrossCheckMismatch(
            "E_2 of the filtered double complex %r differs from Cotor over "
            "the shuffle coalgebra %r" % (e2.dims(), cotor.dims())
        )


def kunneth_a(B, A, C=None, caps=None, cross_check=False, verbose=False):
    """
    The spectral sequence with ``E_2^{p,q} = π^p Cotor^q_{C•}(B•, A•)``
    converging to ``π^(p+q)`` of the derived cotensor product.

    ``B`` and ``A`` are cosimplicial comodules over the constant object on a
    coalgebra, or maps of cosimplicial coalgebras into ``C``. Pages, ``E_∞``
    and the abutment only contain total degrees up to ``reliable``.
    """
    return _kunneth(B, A, C, caps, "horizontal", cross_check, verbose)


def kunneth_b(B, A, C=None, caps=None, cross_check=False, verbose=False):
    """
    The spectral sequence with
    ``E_2^{p,q} = Cotor^p_{π^*C•}(π^*B•, π^*A•)^q``.

    The double complex is filtered by the cobar degree, so ``E_1`` is the
    cohomotopy of ``B• ⊗ (C•)^(⊗p) ⊗ A•``. The E_2 page is also computed
    from the cobar complex over the bigraded coalgebra ``π^*C•`` with its
    shuffle coproduct, and the two must agree.

    Raises
    ------
    CrossCheckMismatch
        If the two E_2 pages differ or the shuffle structure is not
        coassociative and counital.

    """
    return _kunneth(B, A, C, caps, "vertical", cross_check, verbose)
