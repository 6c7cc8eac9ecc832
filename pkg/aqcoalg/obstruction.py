# -*- coding: utf-8 -*-

"""
The obstruction tower report.

For an unstable coalgebra C, stage n of the tower records the group
``AQ^(n+1)_C(C; C[n])`` of choices and the group ``AQ^(n+2)_C(C; C[n])``
where the obstruction to extending a potential stage lives, together with
the automorphisms of ``C[n]``. Only the groups are computed: a vanishing
obstruction group is sufficient, not necessary, for extending a stage.

Author: Gertjan van den Burg

"""

import itertools
import multiprocessing

from .aq import aq_cohomology
from .caps import Caps
from .cofree import comonad_resolution
from .coalgebra import CoalgebraMap
from .coalgebra import Comodule
from .coalgebra import enumerate_coalgebra_maps
from .coalgebra import shift
from .coalgebra import validate_coalgebra
from .cosimplicial import comodule_map_ok
from .exceptions import BudgetExceeded
from .exceptions import UnsupportedInput
from .linalg import Field
from .linalg import GradedLinearMap
from .linalg import add_term
from .linalg import format_label
from .linalg import linear_kernel
from .linalg import linear_rank
from .validation import ValidationReport


def _map_key(f):
    """Hashable form of a graded linear map, for set membership."""
    return tuple(
        (format_label(x), tuple(sorted((format_label(y), c) for y, c in v.items())))
        for x, v in sorted(
            f.columns.items(), key=lambda item: f.source.position(item[0])
        )
    )


def _is_invertible(f):
    for n in range(f.source.max_degree + 1):
        if f.source.dim(n) != f.target.dim(n):
            return False
        if linear_rank(f.field, f.source.basis(n), f.image_of) != f.source.dim(n):
            return False
    return True


def _group_report(name, elements, compose):
    """Check the group axioms on a finite set of maps closed under
    ``compose``."""
    report = ValidationReport(name)
    keys = {_map_key(g): g for g in elements}
    if not elements:
        report.add("identity", name, "empty set")
        return report
    identity = None
    for g in elements:
        if all(
            _map_key(compose(g, h)) == _map_key(h)
            and _map_key(compose(h, g)) == _map_key(h)
            for h in elements
        ):
            identity = g
            break
    if identity is None:
        report.add("identity", name)
        return report
    ident = _map_key(identity)
    for i, g in enumerate(elements):
        if not any(_map_key(compose(g, h)) == ident for h in elements):
            report.add("inverses", "element %i" % i)
        for j, h in enumerate(elements):
            if _map_key(compose(g, h)) not in keys:
                report.add("closure", "elements %i, %i" % (i, j))
    for g, h, k in itertools.product(elements, repeat=3):
        if _map_key(compose(compose(g, h), k)) != _map_key(compose(g, compose(h, k))):
            report.add("associativity", name)
            break
    return report


class GroupData(object):
    """
    A finite group of automorphisms, or a description when it is not
    enumerated.

    ``order`` is None when the group was not enumerated; ``description``
    then says why or names the group.
    """

    def __init__(self, order=None, elements=None, description=None, report=None):
        self.order = order
        self.elements = elements or []
        self.description = description
        self.report = report if report is not None else ValidationReport("group")

    def to_dict(self):
        return dict(
            order=self.order,
            description=self.description,
            group_axioms=self.report.ok,
        )


def aut_coalgebra(C, limit=4096):
    """
    The automorphism group of an unstable coalgebra.

    Over F2 the automorphisms are enumerated, degree by degree, as the
    invertible solutions of the coalgebra map equations. Over Q only the
    trivial case is decided.

    Raises
    ------
    BudgetExceeded
        When the search visits more than ``limit`` partial maps.

    """
    if C.field is Field.F2:
        maps = enumerate_coalgebra_maps(C, C, limit=limit, invertible=True)
        report = _group_report(
            "Aut(%s)" % C.name, maps, lambda f, g: f.compose(g)
        )
        return GroupData(order=len(maps), elements=maps, report=report)
    if C.carrier.total_dim == 1:
        identity = GradedLinearMap.identity(C.carrier)
        return GroupData(order=1, elements=[identity], description="trivial")
    return GroupData(description="not enumerated over Q")


class ComoduleAutData(object):
    """
    The automorphisms ``Aut_C(M)``: pairs ``(φ, φ_0)`` of an automorphism
    ``φ_0`` of C and a compatible invertible map ``φ`` of M.
    """

    def __init__(self, C, M, order=None, pairs=None, description=None, report=None):
        self.C = C
        self.M = M
        self.order = order
        self.pairs = pairs or []
        self.description = description
        if report is None:
            report = ValidationReport("Aut(%s)" % M.name)
        self.report = report

    def to_dict(self):
        return dict(
            order=self.order,
            description=self.description,
            group_axioms=self.report.ok,
        )


def compatible_maps(M, phi0):
    """
    The linear maps ``φ: M -> M`` with ``ρφ = (φ_0 ⊗ φ)ρ`` commuting with
    the Steenrod action, as a subspace over the unknowns ``(m, m')``.
    """
    field = M.field
    minus = field.neg(field.one)
    unknowns = [
        (m, y)
        for n in range(M.max_degree + 1)
        for m in M.carrier.basis(n)
        for y in M.carrier.basis(n)
    ]
    reverse = {}
    for m in M.carrier.labels():
        for (c, y), coeff in M.rho(m).items():
            reverse.setdefault(y, []).append((m, c, coeff))
    use_action = field is Field.F2
    if use_action:
        action = M.action()
        reverse_sq = {}
        for (m, k), vec in action.table().items():
            for y, coeff in vec.items():
                reverse_sq.setdefault(y, []).append((m, k, coeff))

    def image(key):
        m, y = key
        out = {}
        for (c, z), coeff in M.rho(y).items():
            add_term(field, out, ("ρ", m, c, z), coeff)
        for m0, c, coeff in reverse.get(m, ()):
            for e, ce in phi0.image_of(c).items():
                add_term(field, out, ("ρ", m0, e, y), field.mul(minus, field.mul(coeff, ce)))
        if use_action:
            for m0, k, coeff in reverse_sq.get(m, ()):
                add_term(field, out, ("Sq", m0, k, y), coeff)
            for k in range(1, M.carrier.degree(m) + 1):
                for z, coeff in action.act(y, k).items():
                    add_term(field, out, ("Sq", m, k, z), field.mul(minus, coeff))
        return out

    return unknowns, linear_kernel(field, unknowns, image)


def aut_comodule(C, M, limit=4096):
    """
    The group ``Aut_C(M)``.

    Over F2 every automorphism ``φ_0`` of C is paired with every invertible
    solution of the compatibility equations for ``φ``; the equations prune
    before the invertibility test. Over Q only ``φ_0 = id`` is used and the
    group is described, not enumerated.

    Raises
    ------
    BudgetExceeded
        When the candidates exceed ``limit``.

    """
    if M.base is not C:
        raise ValueError("M is not a comodule over C")
    field = C.field
    if field is not Field.F2:
        identity = CoalgebraMap.identity(C)
        _, sub = compatible_maps(M, identity)
        dims = [M.carrier.dim(n) for n in range(M.max_degree + 1)]
        if sub.dim == 0:
            description = "trivial"
        elif sub.dim == 1 and sum(dims) == 1:
            description = "Q^×"
        else:
            description = "open subset of Q^%i over id_C" % sub.dim
        order = 1 if sub.dim == 0 else None
        return ComoduleAutData(C, M, order=order, description=description)

    base = aut_coalgebra(C, limit=limit)
    pairs = []
    for phi0 in base.elements:
        f0 = CoalgebraMap(C, C, phi0)
        unknowns, sub = compatible_maps(M, f0)
        if 2 ** sub.dim > limit:
            raise BudgetExceeded(
                "Aut(%s) has %i candidates over one φ_0" % (M.name, 2 ** sub.dim),
                stage="comodule automorphisms",
                needed=2 ** sub.dim,
                budget=limit,
            )
        for bits in itertools.product((0, 1), repeat=sub.dim):
            columns = {}
            for b, vec in zip(bits, sub.vectors):
                if not b:
                    continue
                for (m, y), c in vec.items():
                    add_term(field, columns.setdefault(m, {}), y, c)
            phi = GradedLinearMap(M.carrier, M.carrier, columns)
            if not _is_invertible(phi):
                continue
            if not comodule_map_ok(M, M, phi, base_map=f0):
                continue
            pairs.append((phi, phi0))

    def compose(p, q):
        return (p[0].compose(q[0]), p[1].compose(q[1]))

    report = _pair_group_report("Aut(%s)" % M.name, pairs, compose)
    return ComoduleAutData(C, M, order=len(pairs), pairs=pairs, report=report)


def _pair_group_report(name, pairs, compose):
    def key(p):
        return (_map_key(p[0]), _map_key(p[1]))

    report = ValidationReport(name)
    keys = {key(p) for p in pairs}
    ident = None
    for p in pairs:
        if all(key(compose(p, q)) == key(q) == key(compose(q, p)) for q in pairs):
            ident = key(p)
            break
    if ident is None:
        report.add("identity", name)
        return report
    for i, p in enumerate(pairs):
        if not any(key(compose(p, q)) == ident for q in pairs):
            report.add("inverses", "element %i" % i)
        for q in pairs:
            if key(compose(p, q)) not in keys:
                report.add("closure", "element %i" % i)
                break
    return report


class StageRecord(object):
    """
    One stage n of the tower.

    ``choice`` and ``obstruction`` are :class:`AQResult` dictionaries or
    None; ``flags`` lists every budget or support problem met, so a missing
    table is never silent.
    """

    def __init__(self, n, choice=None, obstruction=None, aut=None, flags=None):
        self.n = n
        self.choice = choice
        self.obstruction = obstruction
        self.aut = aut
        self.flags = list(flags or [])

    @classmethod
    def from_dict(cls, d):
        return cls(
            d["n"],
            choice=d["choice"],
            obstruction=d["obstruction"],
            aut=d["aut"],
            flags=d["flags"],
        )

    @property
    def obstruction_vanishes(self):
        if self.obstruction is None:
            return None
        return self.obstruction["dim"] == 0

    def to_dict(self):
        return dict(
            n=self.n,
            choice=self.choice,
            obstruction=self.obstruction,
            obstruction_vanishes=self.obstruction_vanishes,
            aut=self.aut,
            flags=self.flags,
        )


class ObstructionTowerReport(object):
    def __init__(self, C, stages, aut=None, caps=None):
        self.C = C
        self.stages = stages
        self.aut = aut
        self.caps = caps

    def to_dict(self):
        return dict(
            coalgebra=self.C.name,
            field=self.C.field.value,
            dims=self.C.carrier.dims(),
            aut=self.aut,
            stages=[s.to_dict() for s in self.stages],
            caps=self.caps.to_dict() if self.caps is not None else None,
        )


def _flag(exc):
    return dict(
        kind=type(exc).__name__,
        message=str(exc),
        stage=getattr(exc, "stage", None),
        needed=getattr(exc, "needed", None),
        budget=getattr(exc, "budget", None),
    )


def tower_stage(C, n, caps, aut=True, cross_check=False, verbose=False):
    """
    Compute stage n of the tower as a plain dictionary.

    Budget problems are recorded as flags on the stage.
    """
    log = lambda *a, **kw: print(*a, **kw) if verbose else None
    record = StageRecord(n)
    M = shift(Comodule.regular(C), n)
    under = CoalgebraMap.identity(C)
    resolution = None
    try:
        resolution = comonad_resolution(under, n + 3, caps=caps, verbose=verbose)
    except BudgetExceeded as exc:
        log("Stage %i: %s" % (n, exc))
        record.flags.append(_flag(exc))
    if resolution is not None:
        for name, degree in (("choice", n + 1), ("obstruction", n + 2)):
            try:
                result = aq_cohomology(
                    under,
                    M,
                    degree,
                    caps=caps,
                    resolution=resolution,
                    cross_check=cross_check,
                    verbose=verbose,
                )
                setattr(record, name, result.to_dict())
            except BudgetExceeded as exc:
                record.flags.append(_flag(exc))
    if aut:
        try:
            record.aut = aut_comodule(C, M, limit=caps.budget).to_dict()
        except (BudgetExceeded, UnsupportedInput) as exc:
            record.aut = dict(order=None, description="not computed")
            record.flags.append(_flag(exc))
    return record.to_dict()


def _stage_worker(args):
    C, n, caps_dict, aut, cross_check = args
    return tower_stage(
        C, n, Caps.from_dict(caps_dict), aut=aut, cross_check=cross_check
    )


def tower(C, n_max, caps=None, aut=True, cross_check=False, verbose=False):
    """
    The obstruction tower report of C for stages ``1 .. n_max``.

    Parameters
    ----------
    C : Coalgebra
        A validated unstable coalgebra.

    n_max : int
        The last stage.

    caps : Caps
        Budget for every stage; ``caps.jobs`` workers compute stages in
        parallel.

    aut : bool
        Also compute ``Aut(C)`` and ``Aut_C(C[n])``.

    cross_check : bool
        Recompute every group along a second route and raise
        :class:`CrossCheckMismatch` on disagreement.

    Returns
    -------
    report : ObstructionTowerReport
        Stages in order, each with its flags. The tower never aborts on a
        budget error.

    Raises
    ------
    ValidationError
        If C fails one of the coalgebra axioms.

    """
    log = lambda *a, **kw: print(*a, **kw) if verbose else None
    caps = caps or Caps()
    caps.validate()
    validate_coalgebra(C).raise_if_invalid()
    stage_zero = None
    if aut:
        try:
            stage_zero = aut_coalgebra(C, limit=caps.budget).to_dict()
        except (BudgetExceeded, UnsupportedInput) as exc:
            stage_zero = dict(order=None, description="not computed", flag=_flag(exc))
    stages = list(range(1, n_max + 1))
    if caps.jobs > 1 and len(stages) > 1:
        log("Computing %i stages on %i workers" % (len(stages), caps.jobs))
        tasks = [(C, n, caps.to_dict(), aut, cross_check) for n in stages]
        with multiprocessing.Pool(caps.jobs) as pool:
            records = pool.map(_stage_worker, tasks)
    else:
        records = [
            tower_stage(C, n, caps, aut=aut, cross_check=cross_check, verbose=verbose)
            for n in stages
        ]
    records = [StageRecord.from_dict(r) for r in records]
    return ObstructionTowerReport(C, records, aut=stage_zero, caps=caps)
