# -*- coding: utf-8 -*-

"""
Strict reader for coalgebra and comodule files.

A file starts with a versioned header line, followed by a single JSON
object. Unknown members, duplicate keys, labels of a degree above the cap
and malformed coefficients are all rejected with a :class:`ParseError`.

Author: Gertjan van den Burg

"""

import json
import regex

from .coalgebra import Coalgebra
from .coalgebra import Comodule
from .exceptions import ParseError
from .exceptions import UnsupportedInput
from .linalg import Field
from .linalg import GradedVectorSpace
from .steenrod import UnstableRightModule

COALGEBRA_HEADER = "# aqcoalg coalgebra v1"
COMODULE_HEADER = "# aqcoalg comodule v1"

COEFFICIENT_PATTERN = regex.compile(r"^\s*-?\d+(?:\s*/\s*\d+)?\s*$")
PRIME_FIELD_PATTERN = regex.compile(r"^F(\d+)$")

COALGEBRA_REQUIRED = (
    "field",
    "max_internal_degree",
    "generators",
    "counit",
    "comultiplication",
)
COALGEBRA_OPTIONAL = (
    "name",
    "steenrod_action",
    "steenrod_generators_only",
    "basepoint",
    "grouplike_basis",
)
COMODULE_REQUIRED = ("coalgebra", "generators", "coaction")
COMODULE_OPTIONAL = (
    "name",
    "steenrod_action",
    "steenrod_generators_only",
    "coabelian",
)


def _no_duplicates(pairs):
    obj = {}
    for key, value in pairs:
        if key in obj:
            raise ParseError("Duplicate member %r" % key)
        obj[key] = value
    return obj


def _check_members(obj, required, optional, where):
    if not isinstance(obj, dict):
        raise ParseError("Expected a JSON object for the %s" % where)
    unknown = sorted(set(obj) - set(required) - set(optional))
    if unknown:
        raise ParseError(
            "Unknown member(s) in the %s: %s" % (where, ", ".join(unknown))
        )
    missing = [k for k in required if k not in obj]
    if missing:
        raise ParseError(
            "Missing member(s) in the %s: %s" % (where, ", ".join(missing))
        )


def split_header(text):
    """Split a document into its kind and its JSON object."""
    if text.startswith("\ufeff"):
        text = text[1:]
    first, _, rest = text.partition("\n")
    first = first.rstrip("\r").strip()
    if first == COALGEBRA_HEADER:
        kind = "coalgebra"
    elif first == COMODULE_HEADER:
        kind = "comodule"
    else:
        raise ParseError(
            "Expected the header %r or %r, got %r"
            % (COALGEBRA_HEADER, COMODULE_HEADER, first)
        )
    try:
        obj = json.loads(rest, object_pairs_hook=_no_duplicates)
    except ValueError as e:
        raise ParseError("Malformed JSON: %s" % e)
    return kind, obj


def parse_field(name):
    if not isinstance(name, str):
        raise ParseError("The field should be a string, got: %r" % (name,))
    if name in ("F2", "Q"):
        return Field(name)
    m = PRIME_FIELD_PATTERN.match(name)
    if m:
        raise UnsupportedInput("Only the prime 2 is supported, got %s" % name)
    raise ParseError("Unknown field %r, expected F2 or Q" % name)


def parse_coefficient(field, value):
    """Parse an integer or a string ``"num/den"`` as a scalar of ``field``."""
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ParseError("Coefficient %r is not an integer or 'num/den'" % (value,))
    if isinstance(value, str):
        if not COEFFICIENT_PATTERN.match(value):
            raise ParseError("Malformed coefficient %r" % value)
        if "/" in value and int(value.split("/")[1]) == 0:
            raise ParseError("Zero denominator in %r" % value)
        value = regex.sub(r"\s+", "", value)
    try:
        return field.parse(value)
    except ValueError as e:
        raise ParseError(str(e))


def _label(carrier, label, where):
    if not isinstance(label, str):
        raise ParseError("Labels are strings, got %r in %s" % (label, where))
    if label not in carrier:
        raise ParseError("Unknown label %r in %s" % (label, where))
    return label


def parse_space(field, max_degree, generators, where="generators"):
    if not isinstance(max_degree, int) or isinstance(max_degree, bool):
        raise ParseError("max_internal_degree should be an integer")
    if max_degree < 0:
        raise ParseError("max_internal_degree should be non-negative")
    if not isinstance(generators, list):
        raise ParseError("The %s should be a list of [name, degree]" % where)
    pairs = []
    for entry in generators:
        if (
            not isinstance(entry, list)
            or len(entry) != 2
            or not isinstance(entry[0], str)
            or not isinstance(entry[1], int)
            or isinstance(entry[1], bool)
        ):
            raise ParseError("Malformed entry %r in the %s" % (entry, where))
        name, degree = entry
        if degree < 0 or degree > max_degree:
            raise ParseError(
                "Label %r has degree %i outside 0..%i"
                % (name, degree, max_degree)
            )
        pairs.append((name, degree))
    try:
        return GradedVectorSpace.from_pairs(field, max_degree, pairs)
    except ValueError as e:
        raise ParseError(str(e))


def parse_pairs(field, carrier, left, right, table, where):
    """Parse ``{x: [[a, b, coeff], ...]}`` into ``{x: {(a, b): coeff}}``."""
    if not isinstance(table, dict):
        raise ParseError("The %s should be an object" % where)
    out = {}
    for x, terms in table.items():
        _label(carrier, x, where)
        if not isinstance(terms, list):
            raise ParseError("Terms of %r in the %s should be a list" % (x, where))
        vec = {}
        for term in terms:
            if not isinstance(term, list) or len(term) != 3:
                raise ParseError("Malformed term %r of %r in the %s" % (term, x, where))
            a = _label(left, term[0], where)
            b = _label(right, term[1], where)
            c = parse_coefficient(field, term[2])
            key = (a, b)
            vec[key] = field.add(vec.get(key, field.zero), c)
        out[x] = {k: c for k, c in vec.items() if c}
    return out


def parse_action(carrier, table, generators_only):
    """Parse ``{x: {"k": [[y, coeff], ...]}}`` into an action table."""
    if carrier.field is not Field.F2:
        raise ParseError("A Steenrod action can only be given over F2")
    if not isinstance(table, dict):
        raise ParseError("The steenrod_action should be an object")
    action = {}
    for x, squares in table.items():
        _label(carrier, x, "steenrod_action")
        if not isinstance(squares, dict):
            raise ParseError("Squares of %r should be an object" % x)
        for key, terms in squares.items():
            if not regex.match(r"^[1-9]\d*$", key):
                raise ParseError("Malformed square index %r for %r" % (key, x))
            k = int(key)
            vec = {}
            if not isinstance(terms, list):
                raise ParseError("Sq^%i of %r should be a list" % (k, x))
            for term in terms:
                if not isinstance(term, list) or len(term) != 2:
                    raise ParseError("Malformed term %r of Sq^%i %r" % (term, k, x))
                y = _label(carrier, term[0], "steenrod_action")
                if carrier.degree(y) != carrier.degree(x) - k:
                    raise ParseError(
                        "%r.Sq^%i has a term %r of the wrong degree" % (x, k, y)
                    )
                c = parse_coefficient(Field.F2, term[1])
                vec[y] = vec.get(y, 0) ^ c
            action[(x, k)] = vec
    try:
        return UnstableRightModule(carrier, action, generators_only=generators_only)
    except ValueError as e:
        raise ParseError(str(e))


def _flag(obj, key):
    value = obj.get(key, False)
    if not isinstance(value, bool):
        raise ParseError("%s should be true or false" % key)
    return value


def coalgebra_from_dict(obj):
    """Build a :class:`Coalgebra` from the JSON object of a coalgebra file."""
    _check_members(obj, COALGEBRA_REQUIRED, COALGEBRA_OPTIONAL, "coalgebra")
    field = parse_field(obj["field"])
    carrier = parse_space(field, obj["max_internal_degree"], obj["generators"])
    coproduct = parse_pairs(
        field, carrier, carrier, carrier, obj["comultiplication"], "comultiplication"
    )
    if not isinstance(obj["counit"], dict):
        raise ParseError("The counit should be an object")
    counit = {}
    for x, c in obj["counit"].items():
        _label(carrier, x, "counit")
        if carrier.degree(x) != 0:
            raise ParseError("The counit is only nonzero in degree 0, not on %r" % x)
        counit[x] = parse_coefficient(field, c)
    steenrod = None
    if "steenrod_action" in obj:
        steenrod = parse_action(
            carrier,
            obj["steenrod_action"],
            _flag(obj, "steenrod_generators_only"),
        )
    elif field is Field.F2:
        steenrod = UnstableRightModule(carrier, {})
    basepoint = obj.get("basepoint")
    if basepoint is not None:
        _label(carrier, basepoint, "basepoint")
    grouplikes = None
    if "grouplike_basis" in obj:
        if not isinstance(obj["grouplike_basis"], list):
            raise ParseError("The grouplike_basis should be a list of vectors")
        grouplikes = []
        for vec in obj["grouplike_basis"]:
            if not isinstance(vec, dict):
                raise ParseError("Grouplikes are objects {label: coefficient}")
            g = {}
            for x, c in vec.items():
                _label(carrier, x, "grouplike_basis")
                if carrier.degree(x) != 0:
                    raise ParseError("Grouplike %r is not of degree 0" % x)
                g[x] = parse_coefficient(field, c)
            grouplikes.append({x: c for x, c in g.items() if c})
    name = obj.get("name", "C")
    if not isinstance(name, str):
        raise ParseError("The name should be a string")
    return Coalgebra(
        carrier,
        coproduct,
        counit,
        steenrod=steenrod,
        basepoint=basepoint,
        grouplikes=grouplikes,
        name=name,
    )


def comodule_from_dict(obj):
    """Build a :class:`Comodule` from the JSON object of a comodule file;
    the coalgebra is given inline under ``coalgebra``."""
    _check_members(obj, COMODULE_REQUIRED, COMODULE_OPTIONAL, "comodule")
    C = coalgebra_from_dict(obj["coalgebra"])
    carrier = parse_space(C.field, C.max_degree, obj["generators"])
    coaction = parse_pairs(
        C.field, carrier, C.carrier, carrier, obj["coaction"], "coaction"
    )
    steenrod = None
    if "steenrod_action" in obj:
        steenrod = parse_action(
            carrier,
            obj["steenrod_action"],
            _flag(obj, "steenrod_generators_only"),
        )
    name = obj.get("name", "M")
    if not isinstance(name, str):
        raise ParseError("The name should be a string")
    return Comodule(
        C,
        carrier,
        coaction,
        steenrod=steenrod,
        coabelian=_flag(obj, "coabelian"),
        name=name,
    )


def loads(text):
    """Parse a document, returning a :class:`Coalgebra` or a
    :class:`Comodule` depending on its header."""
    kind, obj = split_header(text)
    if kind == "coalgebra":
        return coalgebra_from_dict(obj)
    return comodule_from_dict(obj)


def load(filename):
    """Read a coalgebra or comodule file.

    Returns
    -------
    obj : Coalgebra or Comodule
        The parsed object. It is not yet validated.

    data : bytes
        The raw file content, for hashing.

    Raises
    ------
    ParseError
        When the file is not UTF-8 or does not follow the schema.

    """
    with open(filename, "rb") as fid:
        data = fid.read()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        raise ParseError("%s is not UTF-8: %s" % (filename, e))
    return loads(text), data
