# -*- coding: utf-8 -*-

"""
File level entry points for the command line.

Every function reads its input files, validates them, runs one
computation under the given caps and returns the text of a report
document. Reports are served from the cache directory of the caps when a
matching entry exists.

Author: Gertjan van den Burg

"""

import multiprocessing

from .aq import aq_cohomology
from .aq import aq_dual_oracle
from .aq import k_object
from .aq import k_object_by_pullback
from .cache import ReportCache
from .cache import cache_key
from .caps import Caps
from .coalgebra import Coalgebra
from .coalgebra import Comodule
from .coalgebra import CoalgebraMap
from .coalgebra import validate_coalgebra
from .cosimplicial import cohomotopy
from .cosimplicial import constant
from .cosimplicial import moore_complex
from .cosimplicial import normalize
from .cotor import cotor
from .cotor import loop_object
from .exceptions import CrossCheckMismatch
from .exceptions import ParseError
from .exceptions import ValidationError
from .obstruction import tower
from .read import load
from .specseq import kunneth_a
from .specseq import kunneth_b
from .validation import ValidationReport
from .write import Report
from .write import coalgebra_to_dict
from .write import input_hash


def validation_report(obj):
    """Validate a coalgebra or a comodule together with its coalgebra."""
    if isinstance(obj, Coalgebra):
        return validate_coalgebra(obj)
    report = ValidationReport(obj.name)
    report.extend(validate_coalgebra(obj.base))
    if report.ok:
        report.extend(obj.validate())
    return report


def load_valid(filename, kind=None):
    """Read and validate a file.

    Parameters
    ----------
    filename : str
        Path of a coalgebra or comodule file.

    kind : str
        ``coalgebra`` or ``comodule`` to require one kind of document. A
        comodule file given where a coalgebra is required is read as its
        coalgebra.

    Returns
    -------
    obj : Coalgebra or Comodule
        The validated object.

    data : bytes
        The raw file content.

    Raises
    ------
    ParseError
        When the file does not follow the schema or has the wrong kind.

    ValidationError
        When an axiom fails; the exception carries the report.

    """
    obj, data = load(filename)
    report = validation_report(obj)
    if not report.ok:
        raise ValidationError(
            "%s fails %s" % (filename, ", ".join(report.axioms())), report=report
        )
    if kind == "coalgebra" and isinstance(obj, Comodule):
        obj = obj.base
    elif kind == "comodule" and isinstance(obj, Coalgebra):
        raise ParseError("%s is a coalgebra file, expected a comodule" % filename)
    return obj, data


def _common_base(modules):
    """Rebuild comodules read from separate files over one coalgebra."""
    base = modules[0].base
    reference = coalgebra_to_dict(base)
    out = [modules[0]]
    for M in modules[1:]:
        if coalgebra_to_dict(M.base) != reference:
            raise ParseError(
                "Comodules %s and %s are over different coalgebras"
                % (modules[0].name, M.name)
            )
        out.append(
            Comodule(
                base,
                M.carrier,
                M.coaction,
                steenrod=M.steenrod,
                coabelian=M.coabelian,
                name=M.name,
            )
        )
    return out


def _run(command, blobs, caps, options, compute, verbose=False):
    log = lambda *a, **kw: print(*a, **kw) if verbose else None
    digest = input_hash(blobs)
    cache = ReportCache.from_caps(caps)
    key = cache_key(digest, command, caps, options)
    if cache is not None:
        text = cache.get(key, verbose=verbose)
        if text is not None:
            return text
    results, flags = compute()
    text = Report(command, digest, caps, results, flags=flags).dumps()
    if cache is not None:
        log("Storing report at %s" % cache.put(key, text))
    return text


def validate_file(filename):
    """Parse and validate a file; returns the report text and the
    :class:`ValidationReport`."""
    obj, data = load(filename)
    report = validation_report(obj)
    kind = "coalgebra" if isinstance(obj, Coalgebra) else "comodule"
    results = dict(kind=kind, name=obj.name, valid=report.ok, report=report)
    return Report("validate", input_hash(data), None, results).dumps(), report


def cotor_files(b_file, a_file, caps, method="resolution", cross_check=False, verbose=False):
    """Cotor of two comodule files over the same coalgebra."""
    (B, b_data), (A, a_data) = load_valid(b_file, "comodule"), load_valid(a_file, "comodule")
    B, A = _common_base([B, A])

    def compute():
        groups = cotor(
            B,
            A,
            caps.pmax,
            method=method,
            caps=caps,
            cross_check=cross_check,
            verbose=verbose,
        )
        return dict(cotor=groups.dims(), method=method), []

    options = dict(method=method, cross_check=cross_check)
    return _run("cotor", [b_data, a_data], caps, options, compute, verbose=verbose)


def kunneth_files(b_file, a_file, caps, which="a", cross_check=False, verbose=False):
    """The Künneth spectral sequence for constant cosimplicial comodules."""
    (B, b_data), (A, a_data) = load_valid(b_file, "comodule"), load_valid(a_file, "comodule")
    B, A = _common_base([B, A])
    if which not in ("a", "b"):
        raise ValueError("Unknown spectral sequence %r, expected a or b" % which)

    def compute():
        S = caps.levels
        cB, cA = constant(B, S), constant(A, S)
        method = kunneth_a if which == "a" else kunneth_b
        result = method(cB, cA, caps=caps, cross_check=cross_check, verbose=verbose)
        pages = {"E%i" % page.r: page.dims() for page in result.pages}
        out = dict(
            which=which,
            pages=pages,
            infinity=result.ss.infinity.dims(),
            abutment=result.ss.total_dims,
            collapse_page=result.ss.collapse_page,
            reliable=result.reliable,
        )
        if result.cotor is not None:
            out["shuffle_e2"] = result.cotor.dims()
        return out, []

    options = dict(which=which, cross_check=cross_check)
    return _run("kunneth", [b_data, a_data], caps, options, compute, verbose=verbose)


def _cohomotopy_worker(args):
    X, s = args
    return cohomotopy(X, s).dims()


def cohomotopy_table(X, caps, verbose=False):
    """Dimensions of ``π^s X`` for ``s < S``, over ``caps.jobs`` workers."""
    log = lambda *a, **kw: print(*a, **kw) if verbose else None
    if caps.jobs > 1 and X.S > 1:
        log("Computing %i cohomotopy groups on %i workers" % (X.S, caps.jobs))
        with multiprocessing.Pool(caps.jobs) as pool:
            return pool.map(_cohomotopy_worker, [(X, s) for s in range(X.S)])
    N = normalize(X)
    return [cohomotopy(X, s, normalized=N).dims() for s in range(X.S)]


def _moore_check(X, table):
    moore = moore_complex(X).cohomology_dims(len(table) - 1)
    if moore != table:
        raise CrossCheckMismatch(
            "Normalized cohomotopy %r differs from the Moore complex %r"
            % (table, moore)
        )


def _pullback_check(M, table, caps, verbose):
    # the pullback only agrees with K(M, 1) in π^0 and π^1
    pullback, report = k_object_by_pullback(M.base, M, 2, caps=caps, verbose=verbose)
    if not report.ok or pullback.dims() != table[:2]:
        raise CrossCheckMismatch(
            "K(%s, 1) differs from the homotopy pullback: %r != %r%s"
            % (
                M.name,
                table[:2],
                pullback.dims(),
                "" if report.ok else " (%s)" % report.violations[0],
            )
        )


def hopullback_file(m_file, caps, cross_check=False, verbose=False):
    """The homotopy pullback of ``cC -> c ι_C(M) <- cC``."""
    M, data = load_valid(m_file, "comodule")

    def compute():
        pullback, report = k_object_by_pullback(
            M.base, M, caps.levels, caps=caps, cross_check=cross_check, verbose=verbose
        )
        out = dict(
            cohomotopy=cohomotopy_table(pullback.object, caps, verbose=verbose),
            identifications=report,
        )
        return out, []

    options = dict(cross_check=cross_check)
    return _run("hopullback", [data], caps, options, compute, verbose=verbose)


def cohomotopy_file(
    filename, caps, obj="constant", n=1, cross_check=False, verbose=False
):
    """
    Cohomotopy of a cosimplicial object built from a file.

    ``obj`` is ``constant`` (the constant object on a coalgebra), ``loop``
    (its n-fold loop object, for a pointed coalgebra) or ``kobject`` (the
    object of type ``K_C(M, n)`` for a comodule file). With ``cross_check``
    the normalized computation is compared with the Moore complex.
    """
    if obj not in ("constant", "loop", "kobject"):
        raise ValueError("Unknown object %r" % obj)
    kind = "comodule" if obj == "kobject" else "coalgebra"
    X, data = load_valid(filename, kind)

    def compute():
        S = caps.levels
        if obj == "constant":
            Y = constant(X, S)
        elif obj == "loop":
            if X.basepoint is None:
                raise ValidationError("Loop objects need a pointed coalgebra")
            Y = loop_object(constant(X, S), n, caps=caps, verbose=verbose)
        else:
            Y = k_object(X.base, X, n, max(S, n + 1), caps=caps).object
        table = cohomotopy_table(Y, caps, verbose=verbose)
        if cross_check:
            _moore_check(Y, table)
        return dict(object=obj, n=n, cohomotopy=table), []

    options = dict(object=obj, n=n, cross_check=cross_check)
    return _run("cohomotopy", [data], caps, options, compute, verbose=verbose)


def aq_file(m_file, n, caps, shortcut=False, dual=False, cross_check=False, verbose=False):
    """``AQ^n_C(C; M)`` for a comodule file M over C."""
    M, data = load_valid(m_file, "comodule")
    C = M.base

    def compute():
        under = CoalgebraMap.identity(C)
        if dual:
            result = aq_dual_oracle(under, M, n, caps=caps, verbose=verbose)
        else:
            result = aq_cohomology(
                under,
                M,
                n,
                caps=caps,
                shortcut=shortcut,
                cross_check=cross_check,
                verbose=verbose,
            )
        return dict(aq=result), []

    options = dict(n=n, shortcut=shortcut, dual=dual, cross_check=cross_check)
    return _run("aq", [data], caps, options, compute, verbose=verbose)


def kobject_file(m_file, n, caps, cross_check=False, verbose=False):
    """
    Build ``K_C(M, n)`` and check its cohomotopy.

    With ``cross_check`` the cohomotopy is recomputed from the Moore complex
    and, for n = 1, from the homotopy pullback ``cC ×^h_{c ι_C(M)} cC``.
    """
    M, data = load_valid(m_file, "comodule")

    def compute():
        S = max(caps.levels, n + 1)
        K = k_object(M.base, M, n, S, caps=caps)
        report, table = K.verify()
        if not report.ok:
            raise ValidationError(
                "K(%s, %i) does not have the expected cohomotopy" % (M.name, n),
                report=report,
            )
        if cross_check:
            _moore_check(K.object, table)
            if n == 1:
                _pullback_check(M, table, caps, verbose)
        return dict(n=n, levels=K.object.dims(), cohomotopy=table, report=report), []

    options = dict(n=n, cross_check=cross_check)
    return _run("kobject", [data], caps, options, compute, verbose=verbose)


def tower_file(filename, n_max, caps, aut=True, cross_check=False, verbose=False):
    """The obstruction tower report of a coalgebra file."""
    C, data = load_valid(filename, "coalgebra")

    def compute():
        report = tower(
            C, n_max, caps=caps, aut=aut, cross_check=cross_check, verbose=verbose
        )
        flags = [
            dict(flag, tower_stage=s.n) for s in report.stages for flag in s.flags
        ]
        return dict(tower=report), flags

    options = dict(n_max=n_max, aut=aut, cross_check=cross_check)
    return _run("tower", [data], caps, options, compute, verbose=verbose)


def make_caps(pmax=None, smax=None, budget=None, jobs=None, cache_dir=None):
    """Caps from optional command line values; None keeps the default."""
    kwargs = dict(pmax=pmax, smax=smax, budget=budget, jobs=jobs, cache_dir=cache_dir)
    caps = Caps(**{k: v for k, v in kwargs.items() if v is not None})
    caps.validate()
    return caps
