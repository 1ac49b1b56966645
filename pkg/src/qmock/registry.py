"""Catalog of identities and parameterized theorems, and the verifier that checks them.

The catalog is a JSON file (schema in ``docs/catalog-schema.md``).  The bundled copy
lives in ``qmock/data/catalog.json``; set ``QMOCK_CATALOG`` to use another file.
"""
from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from importlib import resources
from math import lcm
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from . import dsl
from .algebra import Monomial, series_equal_up_to
from .errors import InsufficientValidity, QMockError, UnknownIdentity, UnknownTheorem
from .report import VerificationReport

CATALOG_ENV = "QMOCK_CATALOG"

TAGS = ("order2", "order3", "order5", "order6", "order7", "order8", "order10", "appell", "hecke",
        "m-form", "f-form", "barm", "barf", "equivalence")


def default_order_for(D: int) -> int:
    """Checked order in whole powers of q: 40 for integral exponents, more as D grows."""
    if D == 1:
        return 40
    if D == 2:
        return 60
    return 80


@dataclass(frozen=True)
class Identity:
    id: str
    lhs: str
    rhs: str
    D: int = 1
    default_order: int = 40
    tags: FrozenSet[str] = frozenset()
    section: int = 0
    paper_ref: str = ""

    @cached_property
    def lhs_expr(self) -> dsl.Node:
        return dsl.parse(self.lhs)

    @cached_property
    def rhs_expr(self) -> dsl.Node:
        return dsl.parse(self.rhs)

    def with_rhs(self, rhs: str) -> "Identity":
        return Identity(self.id, self.lhs, rhs, self.D, self.default_order, self.tags, self.section,
                        self.paper_ref)


@dataclass(frozen=True)
class ParamTheorem:
    """An identity in free parameters ``a`` and ``b``.

    Negative powers of a and b never occur: every (q/a;q)_n a^n style factor is stored as
    ``pochdual(a; q; n)``, so a = 0 or b = 0 is an ordinary substitution.
    """
    id: str
    lhs: str
    rhs: str
    constraints: str = ""
    tags: FrozenSet[str] = frozenset()
    section: int = 0
    paper_ref: str = ""


@dataclass(frozen=True)
class Specialization:
    """specialize(theorem, a, b).lhs == scale * (target.lhs + offset)."""
    theorem: str
    a: str
    b: str
    target: str
    scale: str = "1"
    offset: str = "0"

    @property
    def label(self) -> str:
        return "%s(%s,%s)->%s" % (self.theorem, self.a, self.b, self.target)


@dataclass
class Catalog:
    identities: List[Identity]
    theorems: List[ParamTheorem]
    specializations: List[Specialization]
    path: str = ""
    _by_id: Dict[str, Identity] = field(default_factory=dict, repr=False)
    _thm_by_id: Dict[str, ParamTheorem] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        for e in self.identities:
            if e.id in self._by_id:
                raise ValueError("duplicate identity id %r" % e.id)
            self._by_id[e.id] = e
        for t in self.theorems:
            if t.id in self._thm_by_id:
                raise ValueError("duplicate theorem id %r" % t.id)
            self._thm_by_id[t.id] = t

    def get(self, id: str) -> Identity:
        try:
            return self._by_id[id]
        except KeyError:
            raise UnknownIdentity(id) from None

    def theorem(self, id: str) -> ParamTheorem:
        try:
            return self._thm_by_id[id]
        except KeyError:
            raise UnknownTheorem(id) from None

    def __contains__(self, id: str) -> bool:
        return id in self._by_id


def _identity_from_json(d: dict) -> Identity:
    D = int(d.get("D", 1))
    return Identity(d["id"], d["lhs"], d["rhs"], D, int(d.get("default_order", default_order_for(D))),
                    frozenset(d.get("tags", ())), int(d.get("section", 0)), d.get("paper_ref", d["id"]))


def load_catalog(path: Optional[str] = None) -> Catalog:
    """Read a catalog file; with no path, honour QMOCK_CATALOG and then the bundled copy."""
    path = path or os.environ.get(CATALOG_ENV)
    if path:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    else:
        data = json.loads(resources.files("qmock").joinpath("data/catalog.json").read_text("utf-8"))
        path = "<bundled>"
    idents = [_identity_from_json(d) for d in data.get("identities", ())]
    # stable order: by section, then file order
    idents = [e for _, e in sorted(enumerate(idents), key=lambda p: (p[1].section, p[0]))]
    thms = [ParamTheorem(d["id"], d["lhs"], d["rhs"], d.get("constraints", ""), frozenset(d.get("tags", ())),
                         int(d.get("section", 0)), d.get("paper_ref", d["id"]))
            for d in data.get("theorems", ())]
    specs = [Specialization(d["theorem"], d["a"], d["b"], d["target"], d.get("scale", "1"), d.get("offset", "0"))
             for d in data.get("specializations", ())]
    return Catalog(idents, thms, specs, path)


_CACHE: Dict[str, Catalog] = {}


def catalog() -> Catalog:
    """The active catalog, loaded once per path."""
    key = os.environ.get(CATALOG_ENV, "")
    if key not in _CACHE:
        _CACHE[key] = load_catalog(key or None)
    return _CACHE[key]


# ---------------------------------------------------------------------------
# queries
# ---------------------------------------------------------------------------

def list_identities(tags: Optional[Iterable[str]] = None, cat: Optional[Catalog] = None) -> List[Identity]:
    """Entries carrying every tag in ``tags`` (all entries when empty), in catalog order."""
    cat = cat or catalog()
    want = frozenset(tags or ())
    return [e for e in cat.identities if want <= e.tags]


def _as_node(x: Union[str, int, Fraction, Monomial, dsl.Node]) -> dsl.Node:
    if isinstance(x, dsl.Node):
        return x
    if isinstance(x, Monomial):
        return dsl.monomial_node(x)
    if isinstance(x, (int, Fraction)):
        return dsl.rational_node(Fraction(x))
    return dsl.parse(str(x))


def specialize(thm_id: str, a, b, cat: Optional[Catalog] = None) -> Identity:
    """Substitute a and b (Monomials, numbers or DSL text, zero allowed) into a theorem."""
    cat = cat or catalog()
    thm = cat.theorem(thm_id)
    na, nb = _as_node(a), _as_node(b)
    mapping = {"a": na, "b": nb}
    lhs = dsl.format_expr(dsl.substitute(dsl.parse(thm.lhs), mapping))
    rhs = dsl.format_expr(dsl.substitute(dsl.parse(thm.rhs), mapping))
    label = "%s(%s,%s)" % (thm.id, dsl.format_expr(na), dsl.format_expr(nb))
    D = 1
    for node in (na, nb):
        m = dsl.Evaluator().mono_arg(node, {})
        D = lcm(D, m.exponent.denominator)
    return Identity(label, lhs, rhs, D, default_order_for(D), thm.tags, thm.section, thm.paper_ref)


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

def _check(order) -> Fraction:
    order = Fraction(order)
    if order < 0:
        raise ValueError("order must be non-negative, got %s" % order)
    return order


def verify_identity(ident: Identity, order=None) -> VerificationReport:
    """Compare both sides through q^order.  InsufficientValidity propagates; other engine
    errors become an "error" report."""
    order = _check(ident.default_order if order is None else order)
    start = time.perf_counter()
    try:
        lhs = dsl.evaluate(ident.lhs_expr, order)
        rhs = dsl.evaluate(ident.rhs_expr, order)
        mm = series_equal_up_to(lhs, rhs, order)
    except InsufficientValidity:
        raise
    except (QMockError, ValueError, ZeroDivisionError, RecursionError) as exc:
        elapsed = int((time.perf_counter() - start) * 1000)
        return VerificationReport(ident.id, order, "error", None, elapsed, "%s: %s" % (type(exc).__name__, exc))
    elapsed = int((time.perf_counter() - start) * 1000)
    return VerificationReport(ident.id, order, "pass" if mm is None else "fail", mm, elapsed)


def verify(id: str, order=None, cat: Optional[Catalog] = None) -> VerificationReport:
    """Verify one catalog entry at ``order`` (its default order when omitted)."""
    cat = cat or catalog()
    return verify_identity(cat.get(id), order)


def _verify_safe(ident: Identity, order) -> VerificationReport:
    try:
        return verify_identity(ident, order)
    except InsufficientValidity as exc:
        return VerificationReport(ident.id, Fraction(order if order is not None else ident.default_order),
                                  "error", None, 0, "InsufficientValidity: %s" % exc)


_WORKER_CATALOG: Optional[Catalog] = None


def _worker_init(path: Optional[str]):
    global _WORKER_CATALOG
    _WORKER_CATALOG = load_catalog(path if path and path != "<bundled>" else None)


def _worker_verify(job: Tuple[str, Optional[str]]) -> VerificationReport:
    id, order = job
    return _verify_safe(_WORKER_CATALOG.get(id), None if order is None else Fraction(order))


def verify_all(order=None, parallel: bool = False, cat: Optional[Catalog] = None,
               ids: Optional[Sequence[str]] = None, workers: Optional[int] = None) -> List[VerificationReport]:
    """One report per entry, in catalog order regardless of ``parallel``.

    ``order=None`` checks each entry at its own default order.
    """
    cat = cat or catalog()
    entries = cat.identities if ids is None else [cat.get(i) for i in ids]
    if order is not None:
        order = _check(order)
    if not parallel or len(entries) < 2:
        return [_verify_safe(e, order) for e in entries]
    jobs = [(e.id, None if order is None else str(order)) for e in entries]
    with ProcessPoolExecutor(max_workers=workers, initializer=_worker_init, initargs=(cat.path,)) as pool:
        # map preserves input order, so the merge is deterministic
        return list(pool.map(_worker_verify, jobs, chunksize=4))


def verify_specialization(spec: Specialization, order=40, cat: Optional[Catalog] = None) -> VerificationReport:
    """Check the specialized theorem and its agreement with the cataloged corollary."""
    cat = cat or catalog()
    order = _check(order)
    start = time.perf_counter()
    try:
        inst = specialize(spec.theorem, spec.a, spec.b, cat)
        target = cat.get(spec.target)
        lhs = dsl.evaluate(inst.lhs_expr, order)
        mm = series_equal_up_to(lhs, dsl.evaluate(inst.rhs_expr, order), order)
        if mm is None:
            tied = "(%s)*(%s + (%s))" % (spec.scale, target.lhs, spec.offset)
            mm = series_equal_up_to(lhs, dsl.evaluate(tied, order), order)
    except (QMockError, ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, (UnknownIdentity, UnknownTheorem)):
            raise
        elapsed = int((time.perf_counter() - start) * 1000)
        return VerificationReport(spec.label, order, "error", None, elapsed, "%s: %s" % (type(exc).__name__, exc))
    elapsed = int((time.perf_counter() - start) * 1000)
    return VerificationReport(spec.label, order, "pass" if mm is None else "fail", mm, elapsed)


def verify_specializations(order=40, cat: Optional[Catalog] = None) -> List[VerificationReport]:
    cat = cat or catalog()
    return [verify_specialization(s, order, cat) for s in cat.specializations]
