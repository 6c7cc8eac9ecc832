# -*- coding: utf-8 -*-

"""
Report documents and file writers.

Reports are JSON with sorted keys and a fixed layout, so identical inputs
give byte-identical output. Rational numbers are written as ``"num/den"``.

Author: Gertjan van den Burg

"""

import hashlib
import json
import pandas as pd

from fractions import Fraction

from .__version__ import __version__
from .linalg import Field
from .linalg import format_label
from .read import COALGEBRA_HEADER
from .read import COMODULE_HEADER

TOOL = "aqcoalg"


def input_hash(data):
    """The sha256 hex digest of the raw bytes of one or more inputs."""
    if isinstance(data, (bytes, bytearray)):
        data = [data]
    h = hashlib.sha256()
    for chunk in data:
        h.update(hashlib.sha256(chunk).digest())
    return h.hexdigest()


def _key(key):
    if isinstance(key, str):
        return key
    if isinstance(key, tuple):
        return ",".join(str(k) for k in key)
    return str(key)


def jsonable(obj):
    """Convert a result structure to plain JSON types.

    Tuple keys become comma separated strings and fractions become
    ``"num/den"``.
    """
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, Fraction):
        return "%d/%d" % (obj.numerator, obj.denominator)
    if isinstance(obj, (int, float, str)):
        return obj
    if isinstance(obj, Field):
        return obj.value
    if isinstance(obj, dict):
        return {_key(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if hasattr(obj, "to_dict"):
        return jsonable(obj.to_dict())
    return format_label(obj)


def dumps(obj):
    return json.dumps(jsonable(obj), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


class Report(object):
    """
    A result document.

    Parameters
    ----------
    command : str
        The command that produced the results.

    input_hash : str
        Hash of the input files.

    caps : Caps
        The caps of the computation.

    results : dict
        The results; values may be any object with a ``to_dict`` method.

    flags : list
        Budget or support problems met along the way.

    """

    def __init__(self, command, input_hash, caps, results, flags=None):
        self.command = command
        self.input_hash = input_hash
        self.caps = caps
        self.results = results
        self.flags = list(flags or [])

    def to_dict(self):
        return dict(
            tool=TOOL,
            version=__version__,
            command=self.command,
            input_hash=self.input_hash,
            caps=self.caps.to_dict() if self.caps is not None else None,
            results=self.results,
            flags=self.flags,
        )

    def dumps(self):
        return dumps(self.to_dict())

    def write(self, filename):
        with open(filename, "w", encoding="utf-8", newline="\n") as fid:
            fid.write(self.dumps())


def bigraded_frame(dims, index="s", columns="q"):
    """A table ``{(p, q): dim}`` as a DataFrame with p down and q across.

    Missing entries are zero.
    """
    if not dims:
        return pd.DataFrame()
    df = pd.DataFrame(
        [(p, q, d) for (p, q), d in dims.items()], columns=[index, columns, "dim"]
    )
    df = df.pivot(index=index, columns=columns, values="dim").fillna(0)
    return df.astype(int).sort_index().sort_index(axis=1)


def levels_frame(levels, index="s", columns="q"):
    """Rows of per-degree dimensions, one row per level."""
    df = pd.DataFrame(list(levels))
    df.index.name = index
    df.columns.name = columns
    return df.fillna(0).astype(int)


def _scalar(field, value):
    if field is Field.F2:
        return int(value) % 2
    value = Fraction(value)
    if value.denominator == 1:
        return value.numerator
    return "%d/%d" % (value.numerator, value.denominator)


def _labels(carrier):
    labels = list(carrier.labels())
    for x in labels:
        if not isinstance(x, str):
            raise ValueError(
                "Only string labels can be written, got %s" % format_label(x)
            )
    return labels


def _pair_table(field, labels, table):
    out = {}
    for x in labels:
        terms = sorted(table(x).items(), key=lambda kv: (kv[0][0], kv[0][1]))
        out[x] = [[a, b, _scalar(field, c)] for (a, b), c in terms]
    return out


def _action_table(carrier, action):
    out = {}
    for (x, k), vec in sorted(action.table().items()):
        out.setdefault(x, {})[str(k)] = [[y, 1] for y in sorted(vec) if vec[y]]
    return out


def coalgebra_to_dict(C):
    """The JSON object of a coalgebra file for C."""
    field = C.field
    labels = _labels(C.carrier)
    obj = dict(
        name=C.name,
        field=field.value,
        max_internal_degree=C.max_degree,
        generators=[[x, C.carrier.degree(x)] for x in labels],
        counit={x: _scalar(field, C.epsilon(x)) for x in labels if C.epsilon(x)},
        comultiplication=_pair_table(field, labels, C.delta),
    )
    if field is Field.F2 and C.steenrod is not None and C.steenrod.table():
        obj["steenrod_action"] = _action_table(C.carrier, C.steenrod)
    if C.basepoint is not None:
        obj["basepoint"] = C.basepoint
    if C.grouplikes is not None:
        obj["grouplike_basis"] = [
            {x: _scalar(field, c) for x, c in g.items()} for g in C.grouplikes
        ]
    return obj


def comodule_to_dict(M):
    """The JSON object of a comodule file for M, with its coalgebra inline."""
    field = M.field
    labels = _labels(M.carrier)
    obj = dict(
        name=M.name,
        coalgebra=coalgebra_to_dict(M.base),
        generators=[[x, M.carrier.degree(x)] for x in labels],
        coaction=_pair_table(field, labels, M.rho),
    )
    if field is Field.F2 and M.steenrod is not None and M.steenrod.table():
        obj["steenrod_action"] = _action_table(M.carrier, M.steenrod)
    if M.coabelian:
        obj["coabelian"] = True
    return obj


def dumps_coalgebra(C):
    return COALGEBRA_HEADER + "\n" + dumps(coalgebra_to_dict(C))


def dumps_comodule(M):
    return COMODULE_HEADER + "\n" + dumps(comodule_to_dict(M))


def write_document(filename, obj):
    """Write a coalgebra or a comodule to a file that :func:`read.load`
    reads back."""
    if hasattr(obj, "coproduct"):
        text = dumps_coalgebra(obj)
    else:
        text = dumps_comodule(obj)
    with open(filename, "w", encoding="utf-8", newline="\n") as fid:
        fid.write(text)
