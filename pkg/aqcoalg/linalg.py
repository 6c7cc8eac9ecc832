# -*- coding: utf-8 -*-

"""
Exact graded linear algebra over F2 and Q.

Scalars over F2 are the integers 0 and 1 and the rows of an F2 matrix are
packed into Python integers (bit j is column j). Scalars over Q are reduced
fractions. Vectors in graded spaces are stored sparsely as dictionaries that
map basis labels to nonzero scalars.

Author: Gertjan van den Burg

"""

import enum

from fractions import Fraction


class Field(enum.Enum):
    F2 = "F2"
    Q = "Q"

    @classmethod
    def from_name(cls, name):
        try:
            return cls(name)
        except ValueError:
            raise ValueError(
                "Unsupported field %r, expected one of F2 or Q" % name
            )

    @property
    def zero(self):
        return 0 if self is Field.F2 else Fraction(0)

    @property
    def one(self):
        return 1 if self is Field.F2 else Fraction(1)

    def coerce(self, value):
        if self is Field.F2:
            if isinstance(value, Fraction):
                if value.denominator % 2 == 0:
                    raise ValueError(
                        "%s is not defined over F2" % self.format(value)
                    )
                value = value.numerator
            return int(value) % 2
        return Fraction(value)

    def add(self, a, b):
        if self is Field.F2:
            return a ^ b
        return a + b

    def sub(self, a, b):
        if self is Field.F2:
            return a ^ b
        return a - b

    def mul(self, a, b):
        if self is Field.F2:
            return a & b
        return a * b

    def neg(self, a):
        return a if self is Field.F2 else -a

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("Zero has no inverse")
        return 1 if self is Field.F2 else 1 / a

    def sign(self, exponent):
        """Return (-1)^exponent as a scalar of this field."""
        if self is Field.F2 or exponent % 2 == 0:
            return self.one
        return -self.one

    def koszul(self, deg_a, deg_b):
        return self.sign(deg_a * deg_b)

    def format(self, value):
        if self is Field.F2:
            return str(int(value) % 2)
        value = Fraction(value)
        return "%d/%d" % (value.numerator, value.denominator)

    def parse(self, text):
        text = str(text).strip()
        if self is Field.F2:
            return self.coerce(Fraction(text))
        return Fraction(text)


# Sparse vectors


def vector_axpy(field, target, coeff, vector):
    """Add ``coeff * vector`` to ``target`` in place and return target."""
    if not coeff:
        return target
    for key, value in vector.items():
        new = field.add(target.get(key, field.zero), field.mul(coeff, value))
        if new:
            target[key] = new
        else:
            target.pop(key, None)
    return target


def vector_add(field, u, v):
    return vector_axpy(field, dict(u), field.one, v)


def vector_sub(field, u, v):
    return vector_axpy(field, dict(u), field.neg(field.one), v)


def vector_scale(field, coeff, v):
    if not coeff:
        return {}
    return {k: field.mul(coeff, x) for k, x in v.items()}


def combine(field, terms):
    """Linear combination of an iterable of ``(coeff, vector)`` pairs."""
    out = {}
    for coeff, vector in terms:
        vector_axpy(field, out, coeff, vector)
    return out


def add_term(field, target, key, coeff):
    if not coeff:
        return target
    new = field.add(target.get(key, field.zero), coeff)
    if new:
        target[key] = new
    else:
        target.pop(key, None)
    return target


# Dense matrices


class Matrix(object):
    """
    Dense exact matrix.

    A matrix of shape (m, n) represents a linear map from an n-dimensional
    space to an m-dimensional space, so the columns are the images of the
    source basis vectors.

    """

    def __init__(self, field, nrows, ncols, rows=None):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            if field is Field.F2:
                rows = [0] * nrows
            else:
                rows = [[field.zero] * ncols for _ in range(nrows)]
        if len(rows) != nrows:
            raise ValueError("Expected %i rows, got %i" % (nrows, len(rows)))
        self._rows = rows

    @classmethod
    def zeros(cls, field, nrows, ncols):
        return cls(field, nrows, ncols)

    @classmethod
    def identity(cls, field, n):
        entries = [[int(i == j) for j in range(n)] for i in range(n)]
        return cls.from_entries(field, entries, ncols=n)

    @classmethod
    def from_entries(cls, field, entries, ncols=None):
        entries = [list(row) for row in entries]
        if ncols is None:
            ncols = len(entries[0]) if entries else 0
        for row in entries:
            if len(row) != ncols:
                raise ValueError("Ragged matrix rows")
        if field is Field.F2:
            rows = []
            for row in entries:
                packed = 0
                for j, x in enumerate(row):
                    if field.coerce(x):
                        packed |= 1 << j
                rows.append(packed)
        else:
            rows = [[field.coerce(x) for x in row] for row in entries]
        return cls(field, len(entries), ncols, rows)

    @classmethod
    def from_columns(cls, field, nrows, columns):
        ncols = len(columns)
        entries = [[columns[j][i] for j in range(ncols)] for i in range(nrows)]
        return cls.from_entries(field, entries, ncols=ncols)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def entry(self, i, j):
        if self.field is Field.F2:
            return (self._rows[i] >> j) & 1
        return self._rows[i][j]

    def row(self, i):
        return tuple(self.entry(i, j) for j in range(self.ncols))

    def column(self, j):
        return tuple(self.entry(i, j) for i in range(self.nrows))

    def to_entries(self):
        return [list(self.row(i)) for i in range(self.nrows)]

    def copy_rows(self):
        if self.field is Field.F2:
            return list(self._rows)
        return [list(r) for r in self._rows]

    def transpose(self):
        entries = [list(self.column(j)) for j in range(self.ncols)]
        return Matrix.from_entries(self.field, entries, ncols=self.nrows)

    def is_zero(self):
        if self.field is Field.F2:
            return not any(self._rows)
        return not any(any(r) for r in self._rows)

    def __matmul__(self, other):
        if self.field is not other.field:
            raise ValueError("Field mismatch")
        if self.ncols != other.nrows:
            raise ValueError(
                "Shape mismatch: %r @ %r" % (self.shape, other.shape)
            )
        if self.field is Field.F2:
            rows = []
            for packed in self._rows:
                out = 0
                j = 0
                while packed:
                    if packed & 1:
                        out ^= other._rows[j]
                    packed >>= 1
                    j += 1
                rows.append(out)
            return Matrix(self.field, self.nrows, other.ncols, rows)
        rows = []
        for row in self._rows:
            out = [self.field.zero] * other.ncols
            for j, x in enumerate(row):
                if x:
                    orow = other._rows[j]
                    for k in range(other.ncols):
                        if orow[k]:
                            out[k] += x * orow[k]
            rows.append(out)
        return Matrix(self.field, self.nrows, other.ncols, rows)

    def _check_same_shape(self, other):
        if self.shape != other.shape or self.field is not other.field:
            raise ValueError("Incompatible matrices")

    def __add__(self, other):
        self._check_same_shape(other)
        if self.field is Field.F2:
            rows = [a ^ b for a, b in zip(self._rows, other._rows)]
        else:
            rows = [
                [x + y for x, y in zip(a, b)]
                for a, b in zip(self._rows, other._rows)
            ]
        return Matrix(self.field, self.nrows, self.ncols, rows)

    def __neg__(self):
        if self.field is Field.F2:
            return Matrix(self.field, self.nrows, self.ncols, list(self._rows))
        rows = [[-x for x in r] for r in self._rows]
        return Matrix(self.field, self.nrows, self.ncols, rows)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return False
        return (
            self.field is other.field
            and self.shape == other.shape
            and self._rows == other._rows
        )

    def __hash__(self):
        return hash((self.field, self.shape, str(self._rows)))

    def __repr__(self):
        return "Matrix(%s, %r)" % (self.field.value, self.to_entries())


class RowReduction(object):
    """Result of :func:`row_reduce`.

    The ``kernel`` matrix has the kernel basis vectors as its columns, one for
    every non-pivot column of the input, in increasing column order.
    """

    def __init__(self, reduced, pivots, kernel):
        self.reduced = reduced
        self.pivots = tuple(pivots)
        self.kernel = kernel

    @property
    def rank(self):
        return len(self.pivots)

    @property
    def nullity(self):
        return self.kernel.ncols

    @property
    def free_columns(self):
        pivots = set(self.pivots)
        return tuple(j for j in range(self.reduced.ncols) if j not in pivots)


def row_reduce(matrix):
    """Deterministic reduced row echelon form.

    Columns are scanned from left to right and the pivot in a column is the
    lowest-index remaining row with a nonzero entry.

    Parameters
    ----------
    matrix : Matrix
        The matrix to reduce. It is not modified.

    Returns
    -------
    result : RowReduction
        The reduced matrix, the pivot columns and a kernel basis.

    """
    field = matrix.field
    nrows, ncols = matrix.shape
    rows = matrix.copy_rows()
    pivots = []
    r = 0
    if field is Field.F2:
        for col in range(ncols):
            if r == nrows:
                break
            bit = 1 << col
            pivot = None
            for i in range(r, nrows):
                if rows[i] & bit:
                    pivot = i
                    break
            if pivot is None:
                continue
            rows[r], rows[pivot] = rows[pivot], rows[r]
            for i in range(nrows):
                if i != r and rows[i] & bit:
                    rows[i] ^= rows[r]
            pivots.append(col)
            r += 1
    else:
        for col in range(ncols):
            if r == nrows:
                break
            pivot = None
            for i in range(r, nrows):
                if rows[i][col]:
                    pivot = i
                    break
            if pivot is None:
                continue
            rows[r], rows[pivot] = rows[pivot], rows[r]
            inv = 1 / rows[r][col]
            rows[r] = [x * inv for x in rows[r]]
            for i in range(nrows):
                factor = rows[i][col]
                if i != r and factor:
                    prow = rows[r]
                    rows[i] = [x - factor * y for x, y in zip(rows[i], prow)]
            pivots.append(col)
            r += 1

    reduced = Matrix(field, nrows, ncols, rows)
    pivot_set = set(pivots)
    free = [j for j in range(ncols) if j not in pivot_set]
    columns = []
    for f in free:
        vec = [field.zero] * ncols
        vec[f] = field.one
        for k, p in enumerate(pivots):
            vec[p] = field.neg(reduced.entry(k, f))
        columns.append(vec)
    kernel = Matrix.from_columns(field, ncols, columns)
    return RowReduction(reduced, pivots, kernel)


def rank(matrix):
    return row_reduce(matrix).rank


# Sparse linear systems over labelled bases


def _pack_system(field, domain, images):
    """Build a matrix with one column per domain label.

    Target keys are ordered by first appearance, which is deterministic as
    long as ``domain`` and the images are.
    """
    col_of = {label: j for j, label in enumerate(domain)}
    target_index = {}
    entries = []
    for label in domain:
        j = col_of[label]
        for key, value in images(label).items():
            if not value:
                continue
            i = target_index.get(key)
            if i is None:
                i = target_index[key] = len(entries)
                entries.append({})
            entries[i][j] = value
    if field is Field.F2:
        rows = []
        for row in entries:
            packed = 0
            for j, x in row.items():
                if x & 1:
                    packed |= 1 << j
            rows.append(packed)
    else:
        rows = []
        for row in entries:
            dense = [field.zero] * len(domain)
            for j, x in row.items():
                dense[j] = x
            rows.append(dense)
    return Matrix(field, len(entries), len(domain), rows)


def linear_kernel(field, domain, images):
    """Kernel of the linear map sending each label in ``domain`` to
    ``images(label)`` (a sparse vector in an arbitrary target).

    Returns a :class:`Subspace` whose pivots are the free domain labels.
    """
    domain = list(domain)
    if not domain:
        return Subspace(field, [], [])
    matrix = _pack_system(field, domain, images)
    rr = row_reduce(matrix)
    vectors = []
    pivots = []
    for k, f in enumerate(rr.free_columns):
        vec = {}
        for i, x in enumerate(rr.kernel.column(k)):
            if x:
                vec[domain[i]] = x
        vectors.append(vec)
        pivots.append(domain[f])
    return Subspace(field, vectors, pivots)


def linear_rank(field, domain, images):
    domain = list(domain)
    if not domain:
        return 0
    return row_reduce(_pack_system(field, domain, images)).rank


class Subspace(object):
    """A subspace given by a basis in reduced form.

    The invariant is ``vectors[i][pivots[j]] == delta(i, j)``, which makes
    coordinates readable at the pivot labels.
    """

    def __init__(self, field, vectors, pivots):
        self.field = field
        self.vectors = list(vectors)
        self.pivots = list(pivots)
        self._pivot_index = {p: i for i, p in enumerate(self.pivots)}

    @classmethod
    def span(cls, field, vectors, position):
        """Reduced basis of the span of ``vectors``.

        ``position`` maps labels to integers and fixes the column order used
        for pivoting.
        """
        vectors = [v for v in vectors if v]
        if not vectors:
            return cls(field, [], [])
        keys = sorted({k for v in vectors for k in v}, key=position)
        col_of = {k: j for j, k in enumerate(keys)}
        entries = []
        for v in vectors:
            row = [0] * len(keys)
            for k, x in v.items():
                row[col_of[k]] = x
            entries.append(row)
        rr = row_reduce(Matrix.from_entries(field, entries, ncols=len(keys)))
        out = []
        pivots = []
        for r, p in enumerate(rr.pivots):
            vec = {}
            for j in range(len(keys)):
                x = rr.reduced.entry(r, j)
                if x:
                    vec[keys[j]] = x
            out.append(vec)
            pivots.append(keys[p])
        return cls(field, out, pivots)

    @property
    def dim(self):
        return len(self.vectors)

    def __len__(self):
        return len(self.vectors)

    def coordinates(self, vector):
        return [vector.get(p, self.field.zero) for p in self.pivots]

    def combination(self, coords):
        return combine(self.field, zip(coords, self.vectors))

    def reduce(self, vector):
        """Canonical representative of ``vector`` modulo this subspace."""
        out = dict(vector)
        for p, u in zip(self.pivots, self.vectors):
            c = out.get(p)
            if c:
                vector_axpy(self.field, out, self.field.neg(c), u)
        return out

    def contains(self, vector):
        return not self.reduce(vector)


class Subquotient(object):
    """The quotient ``numerator / denominator`` of two subspaces of one
    ambient space, with the denominator contained in the numerator.

    Representatives of the quotient basis vanish at the pivots of the
    denominator, and ``project`` returns coordinates in that basis.
    """

    def __init__(self, field, numerator, denominator, position):
        self.field = field
        self.denominator = Subspace.span(field, denominator, position)
        reduced = [self.denominator.reduce(v) for v in numerator]
        self.representatives = Subspace.span(field, reduced, position)

    @property
    def dim(self):
        return self.representatives.dim

    @property
    def vectors(self):
        return self.representatives.vectors

    def project(self, vector):
        return self.representatives.coordinates(
            self.denominator.reduce(vector)
        )


# Graded spaces and maps


def wrap_label(label):
    if isinstance(label, tuple):
        inner = "⊗".join(wrap_label(x) for x in label)
        return "(" + inner + ")"
    return str(label)


def format_label(label):
    """Render a basis label; tensor labels are shown as ``a⊗b``."""
    if isinstance(label, tuple):
        return "⊗".join(wrap_label(x) for x in label)
    return str(label)


class GradedVectorSpace(object):
    """
    A graded vector space truncated at an internal degree cap.

    Parameters
    ----------
    field : Field
        The coefficient field.

    max_degree : int
        The internal degree cap D. Degrees outside 0..D are zero.

    basis : list
        For every degree 0..D the ordered list of basis labels. Labels are
        strings or (nested) tuples of labels and must be unique.

    """

    def __init__(self, field, max_degree, basis):
        if max_degree < 0:
            raise ValueError("Degree cap must be non-negative")
        self.field = field
        self.max_degree = max_degree
        basis = [tuple(b) for b in basis]
        if len(basis) > max_degree + 1:
            extra = [b for b in basis[max_degree + 1 :] if b]
            if extra:
                raise ValueError(
                    "Basis elements above the degree cap %i" % max_degree
                )
            basis = basis[: max_degree + 1]
        while len(basis) < max_degree + 1:
            basis.append(())
        self._basis = tuple(basis)
        self._degree = {}
        self._position = {}
        self._index = {}
        pos = 0
        for n, labels in enumerate(self._basis):
            for i, label in enumerate(labels):
                if label in self._degree:
                    raise ValueError(
                        "Duplicate basis label %s" % format_label(label)
                    )
                self._degree[label] = n
                self._index[label] = i
                self._position[label] = pos
                pos += 1

    @classmethod
    def zero(cls, field, max_degree):
        return cls(field, max_degree, [])

    @classmethod
    def from_pairs(cls, field, max_degree, pairs):
        """Build from an iterable of ``(label, degree)`` pairs."""
        basis = [[] for _ in range(max_degree + 1)]
        for label, degree in pairs:
            if degree < 0 or degree > max_degree:
                raise ValueError(
                    "Degree %i of %s outside 0..%i"
                    % (degree, format_label(label), max_degree)
                )
            basis[degree].append(label)
        return cls(field, max_degree, basis)

    def basis(self, n):
        if n < 0 or n > self.max_degree:
            return ()
        return self._basis[n]

    def dim(self, n):
        return len(self.basis(n))

    def dims(self):
        return [len(b) for b in self._basis]

    @property
    def total_dim(self):
        return len(self._degree)

    def labels(self):
        for labels in self._basis:
            for label in labels:
                yield label

    def degree(self, label):
        return self._degree[label]

    def position(self, label):
        return self._position[label]

    def index(self, label):
        return self._index[label]

    def __contains__(self, label):
        return label in self._degree

    def vector_degree(self, vector):
        degrees = {self._degree[k] for k in vector}
        if len(degrees) > 1:
            raise ValueError("Inhomogeneous vector")
        return degrees.pop() if degrees else None

    def truncate(self, max_degree):
        return GradedVectorSpace(
            self.field, max_degree, self._basis[: max_degree + 1]
        )

    def to_dense(self, vector, n):
        return [vector.get(label, self.field.zero) for label in self.basis(n)]

    def from_dense(self, values, n):
        return {
            label: x for label, x in zip(self.basis(n), values) if x
        }

    def __eq__(self, other):
        if not isinstance(other, GradedVectorSpace):
            return False
        return (
            self.field is other.field
            and self.max_degree == other.max_degree
            and self._basis == other._basis
        )

    def __hash__(self):
        return hash((self.field, self.max_degree, self._basis))

    def __repr__(self):
        return "GradedVectorSpace(%s, D=%i, dims=%r)" % (
            self.field.value,
            self.max_degree,
            self.dims(),
        )


class GradedLinearMap(object):
    """
    A linear map of graded spaces raising degree by ``shift``.

    The map is stored by its nonzero columns: ``columns[label]`` is the image
    of the basis vector ``label`` as a sparse vector in the target.

    """

    def __init__(self, source, target, columns=None, shift=0):
        if source.field is not target.field:
            raise ValueError("Source and target fields differ")
        self.source = source
        self.target = target
        self.shift = shift
        self.field = source.field
        self.columns = {}
        for label, image in (columns or {}).items():
            image = {k: v for k, v in image.items() if v}
            if not image:
                continue
            n = source.degree(label)
            for key in image:
                if key not in target:
                    raise ValueError(
                        "Image of %s leaves the target space"
                        % format_label(label)
                    )
                if target.degree(key) != n + shift:
                    raise ValueError(
                        "Image of %s is not of degree %i"
                        % (format_label(label), n + shift)
                    )
            self.columns[label] = image

    @classmethod
    def identity(cls, space):
        return cls(space, space, {x: {x: space.field.one} for x in space.labels()})

    @classmethod
    def zero(cls, source, target, shift=0):
        return cls(source, target, {}, shift=shift)

    @classmethod
    def from_function(cls, source, target, func, shift=0):
        return cls(
            source, target, {x: func(x) for x in source.labels()}, shift=shift
        )

    @classmethod
    def from_blocks(cls, source, target, blocks, shift=0):
        columns = {}
        for n, block in blocks.items():
            for j, label in enumerate(source.basis(n)):
                columns[label] = target.from_dense(block.column(j), n + shift)
        return cls(source, target, columns, shift=shift)

    def image_of(self, label):
        return self.columns.get(label, {})

    def __call__(self, vector):
        out = {}
        for label, coeff in vector.items():
            image = self.columns.get(label)
            if image:
                vector_axpy(self.field, out, coeff, image)
        return out

    def block(self, n):
        rows = self.target.dim(n + self.shift)
        cols = self.source.basis(n)
        columns = [self.target.to_dense(self.image_of(x), n + self.shift)
                   for x in cols]
        if not cols:
            return Matrix.zeros(self.field, rows, 0)
        return Matrix.from_columns(self.field, rows, columns)

    def compose(self, other):
        """The composite ``self ∘ other``."""
        if other.target != self.source:
            raise ValueError("Maps are not composable")
        columns = {x: self(image) for x, image in other.columns.items()}
        return GradedLinearMap(
            other.source, self.target, columns, shift=self.shift + other.shift
        )

    def _check_parallel(self, other):
        if (
            self.source != other.source
            or self.target != other.target
            or self.shift != other.shift
        ):
            raise ValueError("Maps are not parallel")

    def __add__(self, other):
        self._check_parallel(other)
        columns = dict(self.columns)
        for x, image in other.columns.items():
            columns[x] = vector_add(self.field, columns.get(x, {}), image)
        return GradedLinearMap(self.source, self.target, columns, self.shift)

    def scale(self, coeff):
        columns = {
            x: vector_scale(self.field, coeff, v)
            for x, v in self.columns.items()
        }
        return GradedLinearMap(self.source, self.target, columns, self.shift)

    def __neg__(self):
        return self.scale(self.field.neg(self.field.one))

    def __sub__(self, other):
        return self + (-other)

    def is_zero(self):
        return not self.columns

    def rank(self, n=None):
        degrees = range(self.source.max_degree + 1) if n is None else [n]
        return sum(row_reduce(self.block(k)).rank for k in degrees)

    def is_injective(self):
        return self.rank() == self.source.total_dim

    def is_surjective(self):
        return self.rank() == self.target.total_dim

    def image(self):
        """The image as a :class:`Subspace` of the target."""
        return Subspace.span(
            self.field, list(self.columns.values()), self.target.position
        )

    def __eq__(self, other):
        if not isinstance(other, GradedLinearMap):
            return False
        return (
            self.source == other.source
            and self.target == other.target
            and self.shift == other.shift
            and self.columns == other.columns
        )

    def __hash__(self):
        return hash((self.source, self.target, self.shift))

    def __repr__(self):
        return "GradedLinearMap(%r -> %r, shift=%i)" % (
            self.source,
            self.target,
            self.shift,
        )


def subspace_as_space(field, max_degree, subspace, degree_of, prefix="ker"):
    """Turn a homogeneous :class:`Subspace` into a graded space with labels
    ``<prefix>:<degree>:<index>`` and return it with its inclusion columns."""
    by_degree = {}
    for vec in subspace.vectors:
        n = degree_of(next(iter(vec)))
        by_degree.setdefault(n, []).append(vec)
    basis = [[] for _ in range(max_degree + 1)]
    columns = {}
    for n in sorted(by_degree):
        for i, vec in enumerate(by_degree[n]):
            label = "%s:%i:%i" % (prefix, n, i)
            basis[n].append(label)
            columns[label] = vec
    return GradedVectorSpace(field, max_degree, basis), columns


def kernel(f):
    """
    Kernel of a graded linear map.

    Parameters
    ----------
    f : GradedLinearMap
        The map.

    Returns
    -------
    space : GradedVectorSpace
        The kernel, with basis labels ``ker:<degree>:<index>``.

    inclusion : GradedLinearMap
        The inclusion of the kernel into the source of ``f``.

    """
    source = f.source
    basis = [[] for _ in range(source.max_degree + 1)]
    columns = {}
    for n in range(source.max_degree + 1):
        sub = linear_kernel(f.field, source.basis(n), f.image_of)
        for i, vec in enumerate(sub.vectors):
            label = "ker:%i:%i" % (n, i)
            basis[n].append(label)
            columns[label] = vec
    space = GradedVectorSpace(f.field, source.max_degree, basis)
    return space, GradedLinearMap(space, source, columns)


def quotient(space, inclusion):
    """
    Quotient of ``space`` by the image of an injective map.

    The quotient basis consists of the labels of ``space`` that are not
    pivots of the reduced image, so labels are inherited from ``space``.

    Raises
    ------
    ValueError
        If ``inclusion`` is not injective.

    """
    if inclusion.target != space:
        raise ValueError("Inclusion does not land in the given space")
    if not inclusion.is_injective():
        raise ValueError("The map to quotient by is not injective")
    sub = inclusion.image()
    pivots = set(sub.pivots)
    basis = [
        [x for x in space.basis(n) if x not in pivots]
        for n in range(space.max_degree + 1)
    ]
    result = GradedVectorSpace(space.field, space.max_degree, basis)
    columns = {}
    for x in space.labels():
        reduced = sub.reduce({x: space.field.one})
        columns[x] = {k: v for k, v in reduced.items() if k in result}
    return result, GradedLinearMap(space, result, columns)


def cokernel(f):
    image = f.image()
    pivots = set(image.pivots)
    target = f.target
    basis = [
        [x for x in target.basis(n) if x not in pivots]
        for n in range(target.max_degree + 1)
    ]
    result = GradedVectorSpace(target.field, target.max_degree, basis)
    columns = {}
    for x in target.labels():
        reduced = image.reduce({x: target.field.one})
        columns[x] = {k: v for k, v in reduced.items() if k in result}
    return result, GradedLinearMap(target, result, columns)


def tensor(V, W):
    """Graded tensor product, truncated at the smaller degree cap.

    Basis labels are the ordered pairs ``(a, b)``, ordered by the degree of
    ``a`` and then by position.
    """
    if V.field is not W.field:
        raise ValueError("Cannot tensor spaces over different fields")
    D = min(V.max_degree, W.max_degree)
    basis = []
    for q in range(D + 1):
        labels = []
        for k in range(q + 1):
            for a in V.basis(k):
                for b in W.basis(q - k):
                    labels.append((a, b))
        basis.append(labels)
    return GradedVectorSpace(V.field, D, basis)


def tensor_many(spaces):
    """Iterated tensor product with flat tuple labels ``(a1, ..., ak)``."""
    spaces = list(spaces)
    field = spaces[0].field
    D = min(S.max_degree for S in spaces)
    partial = {(): 0}
    for S in spaces:
        nxt = {}
        for label, deg in partial.items():
            for n in range(D - deg + 1):
                for x in S.basis(n):
                    nxt[label + (x,)] = deg + n
        partial = nxt
    pairs = sorted(
        partial.items(),
        key=lambda kv: (
            kv[1],
            tuple(S.position(x) for S, x in zip(spaces, kv[0])),
        ),
    )
    return GradedVectorSpace.from_pairs(field, D, pairs)


def tensor_maps(f, g, source=None, target=None):
    """Tensor product of maps with the Koszul sign:
    ``(f ⊗ g)(a ⊗ b) = (-1)^(|g||a|) f(a) ⊗ g(b)``."""
    field = f.field
    source = source or tensor(f.source, g.source)
    target = target or tensor(f.target, g.target)
    columns = {}
    for a, b in source.labels():
        fa = f.image_of(a)
        gb = g.image_of(b)
        if not fa or not gb:
            continue
        sign = field.sign(g.shift * f.source.degree(a))
        image = {}
        for x, cx in fa.items():
            for y, cy in gb.items():
                if (x, y) in target:
                    add_term(field, image, (x, y), field.mul(sign, field.mul(cx, cy)))
        columns[(a, b)] = image
    return GradedLinearMap(source, target, columns, shift=f.shift + g.shift)


def symmetry(V, W):
    """The symmetry isomorphism ``a ⊗ b -> (-1)^(|a||b|) b ⊗ a``."""
    source = tensor(V, W)
    target = tensor(W, V)
    field = V.field
    columns = {}
    for a, b in source.labels():
        sign = field.koszul(V.degree(a), W.degree(b))
        columns[(a, b)] = {(b, a): sign}
    return GradedLinearMap(source, target, columns)


def express(field, generators, target):
    """
    Coefficients expressing ``target`` in terms of ``generators``.

    Returns a list with one coefficient per generator, or None if the target
    is not in their span. When the generators are dependent, coefficients of
    generators that are combinations of earlier ones are zero.

    """
    domain = list(range(len(generators))) + ["target"]
    minus = field.neg(field.one)

    def image(i):
        if i == "target":
            return vector_scale(field, minus, target)
        return generators[i]

    if not target:
        return [field.zero] * len(generators)
    sub = linear_kernel(field, domain, image)
    for vec, pivot in zip(sub.vectors, sub.pivots):
        if pivot == "target":
            return [vec.get(i, field.zero) for i in range(len(generators))]
    return None


class _Tag(object):
    __slots__ = ("index",)

    def __init__(self, index):
        self.index = index

    def __eq__(self, other):
        return isinstance(other, _Tag) and other.index == self.index

    def __hash__(self):
        return hash(("_Tag", self.index))


class Expresser(object):
    """Repeatedly express vectors in terms of a fixed list of generators.

    The generators are reduced once, together with tags recording how each
    reduced vector combines the originals.
    """

    def __init__(self, field, generators, position):
        self.field = field
        self.size = len(generators)
        augmented = []
        for i, g in enumerate(generators):
            v = dict(g)
            v[_Tag(i)] = field.one
            augmented.append(v)

        def key(label):
            if isinstance(label, _Tag):
                return (1, label.index)
            return (0, position(label))

        self.span = Subspace.span(field, augmented, key)

    def coefficients(self, target):
        rest = self.span.reduce(target)
        if any(not isinstance(k, _Tag) for k in rest):
            return None
        out = [self.field.zero] * self.size
        for k, c in rest.items():
            out[k.index] = self.field.neg(c)
        return out


class BigradedVectorSpace(object):
    """
    Finitely supported bigraded space with entries ``(p, q)``.

    ``p`` is the cohomological and ``q`` the internal degree; each entry is
    an ordered list of basis labels.

    """

    def __init__(self, field, entries=None, p_max=None, max_degree=None):
        self.field = field
        self.entries = {}
        for (p, q), labels in (entries or {}).items():
            if p < 0 or q < 0:
                raise ValueError("Bidegrees must be non-negative")
            if labels:
                self.entries[(p, q)] = list(labels)
        self.p_max = p_max
        self.max_degree = max_degree

    def basis(self, p, q):
        return list(self.entries.get((p, q), []))

    def dim(self, p, q):
        return len(self.entries.get((p, q), ()))

    def dims(self):
        return {pq: len(v) for pq, v in sorted(self.entries.items())}

    def column(self, p):
        """Internal degree dimensions of cohomological degree p."""
        D = self.max_degree
        if D is None:
            D = max([q for (_, q) in self.entries] + [0])
        return [self.dim(p, q) for q in range(D + 1)]

    def total_dims(self):
        out = {}
        for (p, q), labels in self.entries.items():
            out[p + q] = out.get(p + q, 0) + len(labels)
        return dict(sorted(out.items()))

    def is_zero(self):
        return not self.entries

    def __eq__(self, other):
        if not isinstance(other, BigradedVectorSpace):
            return False
        return self.field is other.field and self.dims() == other.dims()

    def __hash__(self):
        return hash((self.field, tuple(self.dims().items())))

    def __repr__(self):
        return "BigradedVectorSpace(%s, %r)" % (self.field.value, self.dims())
