"""Covering relations on finite Boolean algebras and their axiom systems.

Elements of a finite Boolean algebra with k atoms are the integers
0..2^k-1 read as atom bitmasks, so join/meet/complement are bitwise
or/and/not and the order is bitmask inclusion.  A covering relation is a
dense boolean table of shape (N, N, N) with entry [a, b, d] true when the
pair (a, b) is covered by d; a contact relation is an (N, N) table.

Checkers are exhaustive over all tuples, vectorized with numpy, and when an
axiom fails they report the lexicographically first violating tuple — the
same one a direct nested loop over ascending element values would find.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Callable, Iterable, Literal

import numpy as np

from .topology import CapExceeded, DocumentError, PointSet, RegularClosedAlgebra

DEFAULT_CHECK_CAP = 32

Strength = Literal["ECA", "WECA"]


@dataclass(frozen=True)
class FiniteBooleanAlgebra:
    """The Boolean algebra with a given number of atoms, elements as masks."""

    atom_count: int

    def __post_init__(self) -> None:
        if self.atom_count < 1:
            raise ValueError("a Boolean algebra needs at least one atom")

    @property
    def size(self) -> int:
        return 1 << self.atom_count

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return self.size - 1

    @property
    def atom_masks(self) -> tuple[int, ...]:
        return tuple(1 << i for i in range(self.atom_count))

    def elements(self) -> range:
        return range(self.size)

    def contains(self, a: int) -> bool:
        return 0 <= a < self.size

    def _require(self, *elements: int) -> None:
        for a in elements:
            if not self.contains(a):
                raise ValueError(f"{a} is not an element mask of a {self.atom_count}-atom algebra")

    def le(self, a: int, b: int) -> bool:
        self._require(a, b)
        return a & ~b == 0

    def join(self, a: int, b: int) -> int:
        self._require(a, b)
        return a | b

    def meet(self, a: int, b: int) -> int:
        self._require(a, b)
        return a & b

    def complement(self, a: int) -> int:
        self._require(a)
        return self.one & ~a


class _TableRelation:
    """Shared validation for dense relation tables (not a public class)."""

    @staticmethod
    def _freeze(table: np.ndarray, shape: tuple[int, ...]) -> np.ndarray:
        arr = np.ascontiguousarray(np.asarray(table, dtype=bool))
        if arr.shape != shape:
            raise ValueError(f"table has shape {arr.shape}, expected {shape}")
        arr.setflags(write=False)
        return arr


@dataclass(frozen=True, eq=False)
class CoveringRelation:
    """A ternary relation (a, b) |- d over a finite Boolean algebra."""

    algebra: FiniteBooleanAlgebra
    table: np.ndarray

    def __post_init__(self) -> None:
        n = self.algebra.size
        object.__setattr__(self, "table", _TableRelation._freeze(self.table, (n, n, n)))

    @classmethod
    def from_predicate(
        cls, algebra: FiniteBooleanAlgebra, predicate: Callable[[int, int, int], bool]
    ) -> "CoveringRelation":
        n = algebra.size
        table = np.empty((n, n, n), dtype=bool)
        for a in range(n):
            for b in range(n):
                for d in range(n):
                    table[a, b, d] = bool(predicate(a, b, d))
        return cls(algebra, table)

    @classmethod
    def from_true_triples(
        cls, algebra: FiniteBooleanAlgebra, triples: Iterable[tuple[int, int, int]]
    ) -> "CoveringRelation":
        n = algebra.size
        table = np.zeros((n, n, n), dtype=bool)
        for a, b, d in triples:
            algebra._require(a, b, d)
            table[a, b, d] = True
        return cls(algebra, table)

    def true_triples(self) -> list[tuple[int, int, int]]:
        return [tuple(int(x) for x in row) for row in np.argwhere(self.table)]

    def holds(self, a: int, b: int, d: int) -> bool:
        self.algebra._require(a, b, d)
        return bool(self.table[a, b, d])


@dataclass(frozen=True, eq=False)
class ContactRelation:
    """A binary contact relation over a finite Boolean algebra."""

    algebra: FiniteBooleanAlgebra
    table: np.ndarray

    def __post_init__(self) -> None:
        n = self.algebra.size
        object.__setattr__(self, "table", _TableRelation._freeze(self.table, (n, n)))

    @classmethod
    def from_predicate(
        cls, algebra: FiniteBooleanAlgebra, predicate: Callable[[int, int], bool]
    ) -> "ContactRelation":
        n = algebra.size
        table = np.empty((n, n), dtype=bool)
        for a in range(n):
            for b in range(n):
                table[a, b] = bool(predicate(a, b))
        return cls(algebra, table)

    def holds(self, a: int, b: int) -> bool:
        self.algebra._require(a, b)
        return bool(self.table[a, b])


def discrete_covering(atom_count: int) -> CoveringRelation:
    """The covering (a, b) |- d iff a meet b <= d (contact = overlap)."""
    algebra = FiniteBooleanAlgebra(atom_count)
    e = np.arange(algebra.size)
    inter = e[:, None] & e[None, :]
    table = (inter[:, :, None] & ~e[None, None, :]) == 0
    return CoveringRelation(algebra, table)


# ---------------------------------------------------------------------------
# check results


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one named check; witness is the first violating tuple."""

    name: str
    passed: bool
    witness: tuple | None = None


@dataclass(frozen=True)
class AxiomReport:
    results: tuple[CheckResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)

    def failures(self) -> tuple[CheckResult, ...]:
        return tuple(r for r in self.results if not r.passed)

    def as_dict(self) -> dict[str, tuple | None]:
        """Name -> witness (None when the check passed)."""
        return {r.name: r.witness for r in self.results}


class AxiomViolation(ValueError):
    """A relation failed the axioms it was claimed to satisfy."""

    def __init__(self, what: str, report: AxiomReport) -> None:
        parts = ", ".join(f"{r.name} at {r.witness}" for r in report.failures())
        super().__init__(f"{what} violated: {parts}")
        self.report = report


@dataclass(frozen=True)
class ExtendedContactAlgebra:
    """A Boolean algebra with a covering relation of a declared strength.

    ``strength`` records which axiom family the covering is claimed to
    satisfy ("ECA" for the extended contact axioms, "WECA" for the weak
    ones).  Construct through :func:`verified_eca` / :func:`verified_weca`
    to have the claim machine-checked; direct construction skips the check.
    """

    covering: CoveringRelation
    strength: Strength

    def __post_init__(self) -> None:
        if self.strength not in ("ECA", "WECA"):
            raise ValueError(f"unknown strength {self.strength!r}")

    @property
    def algebra(self) -> FiniteBooleanAlgebra:
        return self.covering.algebra


def verified_eca(
    covering: CoveringRelation, *, cap_elements: int = DEFAULT_CHECK_CAP
) -> ExtendedContactAlgebra:
    report = check_eca(covering, cap_elements=cap_elements)
    if not report.all_passed:
        raise AxiomViolation("extended contact axioms", report)
    return ExtendedContactAlgebra(covering, "ECA")


def verified_weca(
    covering: CoveringRelation, *, cap_elements: int = DEFAULT_CHECK_CAP
) -> ExtendedContactAlgebra:
    report = check_weca(covering, cap_elements=cap_elements)
    if not report.all_passed:
        raise AxiomViolation("weak extended contact axioms", report)
    return ExtendedContactAlgebra(covering, "WECA")


# ---------------------------------------------------------------------------
# vectorization helpers


@lru_cache(maxsize=None)
def _tables(atom_count: int) -> tuple[int, np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """(N, elements, and-table, or-table, le-table) for a k-atom algebra."""
    n = 1 << atom_count
    e = np.arange(n)
    and_t = e[:, None] & e[None, :]
    or_t = e[:, None] | e[None, :]
    le_t = (e[:, None] & ~e[None, :]) == 0
    return n, e, and_t, or_t, le_t


def _or_over_supersets(table: np.ndarray, axis: int, atom_count: int) -> np.ndarray:
    """out[.., x, ..] = OR of table over all supersets y of x along axis."""
    out = table.copy()
    idx = np.arange(1 << atom_count)
    for bit in range(atom_count):
        out |= np.take(out, idx | (1 << bit), axis=axis)
    return out


def _or_over_subsets(table: np.ndarray, axis: int, atom_count: int) -> np.ndarray:
    """out[.., x, ..] = OR of table over all subsets y of x along axis."""
    out = table.copy()
    idx = np.arange(1 << atom_count)
    for bit in range(atom_count):
        out |= np.take(out, idx & ~(1 << bit), axis=axis)
    return out


def _first(viol: np.ndarray) -> tuple[int, ...]:
    """Lexicographically first true index of a boolean array."""
    return tuple(int(x) for x in np.argwhere(viol)[0])


def _check_cap(size: int, cap_elements: int) -> None:
    if size > cap_elements:
        raise CapExceeded(
            f"{size} elements exceed the exhaustive-check cap of {cap_elements}; "
            "pass a larger cap_elements to force the check"
        )


# ---------------------------------------------------------------------------
# contact axioms


def _ca1(c: np.ndarray, n: int, k: int, le_t: np.ndarray) -> tuple | None:
    grown = _or_over_subsets(_or_over_subsets(c, 0, k), 1, k)
    if not (grown & ~c).any():
        return None
    for a in range(n):
        if not c[a].any():
            continue
        for b in range(n):
            if not c[a, b]:
                continue
            for d in range(n):
                if a & ~d:
                    continue
                es = le_t[b] & ~c[d]
                if es.any():
                    return (a, b, d, int(np.flatnonzero(es)[0]))
    return None


def _ca2(c: np.ndarray, n: int, or_t: np.ndarray) -> tuple | None:
    premise = c[or_t[:, None, :, None], or_t[None, :, None, :]]
    conclusion = (
        c[:, :, None, None]
        | c[:, None, None, :]
        | c.T[None, :, :, None]
        | c[None, None, :, :]
    )
    viol = premise & ~conclusion
    return _first(viol) if viol.any() else None


def _ca3(c: np.ndarray, n: int) -> tuple | None:
    viol = np.zeros_like(c)
    viol[0, :] = c[0, :]
    viol[:, 0] |= c[:, 0]
    return _first(viol) if viol.any() else None


def _ca4(c: np.ndarray, n: int) -> tuple | None:
    viol = ~c.diagonal().copy()
    viol[0] = False
    hits = np.flatnonzero(viol)
    return (int(hits[0]),) if len(hits) else None


def _ca5(c: np.ndarray) -> tuple | None:
    viol = c & ~c.T
    return _first(viol) if viol.any() else None


def check_ca(contact: ContactRelation, *, cap_elements: int = DEFAULT_CHECK_CAP) -> AxiomReport:
    """Check the five contact axioms: monotonicity in both arguments,
    distribution over joins, no contact with zero, reflexivity away from
    zero, and symmetry."""
    k = contact.algebra.atom_count
    _check_cap(contact.algebra.size, cap_elements)
    n, _, _, or_t, le_t = _tables(k)
    c = contact.table
    witnesses = {
        "CA1": _ca1(c, n, k, le_t),
        "CA2": _ca2(c, n, or_t),
        "CA3": _ca3(c, n),
        "CA4": _ca4(c, n),
        "CA5": _ca5(c),
    }
    return AxiomReport(
        tuple(CheckResult(name, w is None, w) for name, w in witnesses.items())
    )


# ---------------------------------------------------------------------------
# extended contact axioms


def _eca1(v: np.ndarray, n: int, e: np.ndarray, or_t: np.ndarray) -> tuple | None:
    premise = v[:, :, None, :]
    if not any(
        (
            premise
            & ~v[
                or_t[:, d][:, None, None, None],
                or_t[None, :, :, None],
                (or_t[d][:, None] | e[None, :])[None, None, :, :],
            ]
        ).any()
        for d in range(n)
    ):
        return None
    def_idx = or_t[:, :, None] | e[None, None, :]  # (d, e, f) -> d|e|f
    for a in range(n):
        if not v[a].any():
            continue
        i0 = or_t[:, a][:, None, None]
        for b in range(n):
            prem_f = v[a, b]
            if not prem_f.any():
                continue
            grown = v[i0, or_t[:, b][None, :, None], def_idx]
            viol = prem_f[None, None, :] & ~grown
            if viol.any():
                d, e2, f = _first(viol)
                return (a, b, d, e2, f)
    return None


def _eca2(v: np.ndarray, n: int) -> tuple | None:
    pair_to_d = v.reshape(n * n, n)
    d_by_ef = np.ascontiguousarray(v.transpose(1, 0, 2)).reshape(n, n * n)
    counts = pair_to_d.astype(np.float32) @ d_by_ef.astype(np.float32)
    via_e = counts.reshape(n * n, n, n) > 0.5
    reach = (pair_to_d[:, :, None] & via_e).any(axis=1)
    if not (reach & ~pair_to_d).any():
        return None
    for a in range(n):
        for b in range(n):
            if not (reach[a * n + b] & ~v[a, b]).any():
                continue
            covered = np.flatnonzero(v[a, b])
            not_f = ~v[a, b]
            for d in covered:
                for e2 in covered:
                    fs = v[d, e2] & not_f
                    if fs.any():
                        return (a, b, int(d), int(e2), int(np.flatnonzero(fs)[0]))
    return None


def _eca3(v: np.ndarray, le_t: np.ndarray) -> tuple | None:
    viol = (le_t[:, None, :] | le_t[None, :, :]) & ~v
    return _first(viol) if viol.any() else None


def _eca4(v: np.ndarray, and_t: np.ndarray, le_t: np.ndarray) -> tuple | None:
    viol = v & ~le_t[and_t]
    return _first(viol) if viol.any() else None


def _eca5(v: np.ndarray) -> tuple | None:
    viol = v & ~v.transpose(1, 0, 2)
    return _first(viol) if viol.any() else None


def check_eca(covering: CoveringRelation, *, cap_elements: int = DEFAULT_CHECK_CAP) -> AxiomReport:
    """Check the five extended contact axioms: growing both members while
    adding the growth to the cover, transitivity of covering through a
    covered pair, covering by anything above either member, covered pairs
    meet inside the cover, and symmetry."""
    k = covering.algebra.atom_count
    _check_cap(covering.algebra.size, cap_elements)
    n, e, and_t, or_t, le_t = _tables(k)
    v = covering.table
    witnesses = {
        "ECA1": _eca1(v, n, e, or_t),
        "ECA2": _eca2(v, n),
        "ECA3": _eca3(v, le_t),
        "ECA4": _eca4(v, and_t, le_t),
        "ECA5": _eca5(v),
    }
    return AxiomReport(
        tuple(CheckResult(name, w is None, w) for name, w in witnesses.items())
    )


# ---------------------------------------------------------------------------
# weak extended contact axioms


def _weca1(v: np.ndarray, n: int, k: int) -> tuple | None:
    grown = _or_over_supersets(_or_over_supersets(v, 0, k), 1, k)
    viol = grown & ~v
    if not viol.any():
        return None
    for a in range(n):
        if not viol[a].any():
            continue
        for b in range(n):
            if not viol[a, b].any():
                continue
            not_f = ~v[a, b]
            for d in range(n):
                if a & ~d:
                    continue
                for e2 in range(n):
                    if b & ~e2:
                        continue
                    fs = v[d, e2] & not_f
                    if fs.any():
                        return (a, b, d, e2, int(np.flatnonzero(fs)[0]))
    return None


def _weca2(v: np.ndarray) -> tuple | None:
    witness = None
    left = ~v[0]
    if left.any():
        b, f = _first(left)
        witness = (0, b, f)
    right = ~v[:, 0]
    if right.any():
        a, f = _first(right)
        candidate = (a, 0, f)
        if witness is None or candidate < witness:
            witness = candidate
    return witness


def _weca3(v: np.ndarray, n: int, and_t: np.ndarray, or_t: np.ndarray) -> tuple | None:
    i_meet = and_t[:, None, :, None]
    i_join = or_t[:, None, :, None]
    j_join = or_t[None, :, None, :]
    j_meet = and_t[None, :, None, :]
    best = None
    for f in range(n):
        vf = v[:, :, f]
        premise = vf[:, :, None, None] & vf[None, None, :, :]
        if not premise.any():
            continue
        ok = vf[i_meet, j_join] & vf[i_join, j_meet]
        viol = premise & ~ok
        if viol.any():
            candidate = _first(viol) + (f,)
            if best is None or candidate < best:
                best = candidate
    return best


def _weca4(v: np.ndarray, n: int, k: int, le_t: np.ndarray) -> tuple | None:
    grown = _or_over_subsets(v, 2, k)
    viol = grown & ~v
    if not viol.any():
        return None
    for a in range(n):
        if not viol[a].any():
            continue
        for b in range(n):
            if not viol[a, b].any():
                continue
            not_f = ~v[a, b]
            for d in range(n):
                if not v[a, b, d]:
                    continue
                fs = le_t[d] & not_f
                if fs.any():
                    return (a, b, d, int(np.flatnonzero(fs)[0]))
    return None


def check_weca(covering: CoveringRelation, *, cap_elements: int = DEFAULT_CHECK_CAP) -> AxiomReport:
    """Check the four weak extended contact axioms: antitonicity in the
    covered pair, coverage of pairs with an empty member, the two mixed
    meet/join combinations, and monotonicity in the cover."""
    k = covering.algebra.atom_count
    _check_cap(covering.algebra.size, cap_elements)
    n, _, and_t, or_t, le_t = _tables(k)
    v = covering.table
    witnesses = {
        "WECA1": _weca1(v, n, k),
        "WECA2": _weca2(v),
        "WECA3": _weca3(v, n, and_t, or_t),
        "WECA4": _weca4(v, n, k, le_t),
    }
    return AxiomReport(
        tuple(CheckResult(name, w is None, w) for name, w in witnesses.items())
    )


# ---------------------------------------------------------------------------
# consequences of the weak axioms


def _cons12(v: np.ndarray, n: int) -> tuple[tuple | None, tuple | None]:
    first = np.flatnonzero(~v[0, n - 1])
    second = np.flatnonzero(~v[n - 1, 0])
    return (
        (int(first[0]),) if len(first) else None,
        (int(second[0]),) if len(second) else None,
    )


def _cons3(v: np.ndarray, or_t: np.ndarray) -> tuple | None:
    premise = v[:, None, :, :] & v[None, :, :, :]
    viol = premise & ~v[or_t]
    return _first(viol) if viol.any() else None


def _cons4(v: np.ndarray, e: np.ndarray, or_t: np.ndarray) -> tuple | None:
    premise = v[:, :, None, :] & v[:, None, :, :]
    joined = v[
        e[:, None, None, None], or_t[None, :, :, None], e[None, None, None, :]
    ]
    viol = premise & ~joined
    return _first(viol) if viol.any() else None


def _cons5(v: np.ndarray, n: int, k: int) -> tuple | None:
    grown = _or_over_supersets(v, 0, k)
    if not (grown & ~v).any():
        return None
    for a in range(n):
        if not v[a].any():
            continue
        for b in range(n):
            prem_e = v[a, b]
            if not prem_e.any():
                continue
            for d in range(a + 1):
                if d & ~a:
                    continue
                es = prem_e & ~v[d, b]
                if es.any():
                    return (a, b, d, int(np.flatnonzero(es)[0]))
    return None


def _cons6(v: np.ndarray, n: int, k: int) -> tuple | None:
    grown = _or_over_supersets(v, 1, k)
    if not (grown & ~v).any():
        return None
    for a in range(n):
        if not v[a].any():
            continue
        for b in range(n):
            prem_e = v[a, b]
            if not prem_e.any():
                continue
            for d in range(b + 1):
                if d & ~b:
                    continue
                es = prem_e & ~v[a, d]
                if es.any():
                    return (a, b, d, int(np.flatnonzero(es)[0]))
    return None


def check_weca_consequences(
    covering: CoveringRelation, *, cap_elements: int = DEFAULT_CHECK_CAP
) -> AxiomReport:
    """Check six consequences of the weak axioms: the zero pairs are covered
    by everything, covering is additive in each member separately, and it is
    antitone in each member separately."""
    k = covering.algebra.atom_count
    _check_cap(covering.algebra.size, cap_elements)
    n, e, _, or_t, _ = _tables(k)
    v = covering.table
    cons1, cons2 = _cons12(v, n)
    witnesses = {
        "CONS1": cons1,
        "CONS2": cons2,
        "CONS3": _cons3(v, or_t),
        "CONS4": _cons4(v, e, or_t),
        "CONS5": _cons5(v, n, k),
        "CONS6": _cons6(v, n, k),
    }
    return AxiomReport(
        tuple(CheckResult(name, w is None, w) for name, w in witnesses.items())
    )


# ---------------------------------------------------------------------------
# contact relations derived from a covering


def derived_contact(eca: ExtendedContactAlgebra) -> ContactRelation:
    """Contact of an extended contact algebra: a and b are in contact when
    (a, b) is not covered by zero.  Only the "ECA" strength guarantees the
    contact axioms, so weaker inputs are rejected."""
    if eca.strength != "ECA":
        raise ValueError("derived contact needs the full extended contact axioms")
    return ContactRelation(eca.algebra, ~eca.covering.table[:, :, 0])


def relative_contact(covering: CoveringRelation, g: int) -> ContactRelation:
    """Contact relative to a region g: holds for (a, b) when (a, b) is not
    covered by g."""
    covering.algebra._require(g)
    return ContactRelation(covering.algebra, ~covering.table[:, :, g])


def _rcl_monotone_witness(q: np.ndarray, n: int, le_t: np.ndarray) -> tuple[int, ...]:
    for a in range(n):
        if not q[a].any():
            continue
        for b in range(n):
            if not q[a, b]:
                continue
            for d in range(n):
                if a & ~d:
                    continue
                es = le_t[b] & ~q[d]
                if es.any():
                    return (a, b, d, int(np.flatnonzero(es)[0]))
    raise AssertionError("monotonicity witness vanished")


def check_relative_contact_laws(
    covering: CoveringRelation, *, cap_elements: int = DEFAULT_CHECK_CAP
) -> AxiomReport:
    """Check, for every region g, the five laws of contact relative to g:
    monotonicity, distribution over joins, no contact for parts of g,
    reflexivity outside g, and symmetry.  Witnesses carry g first."""
    k = covering.algebra.atom_count
    _check_cap(covering.algebra.size, cap_elements)
    n, _, _, or_t, le_t = _tables(k)
    v = covering.table
    flat = (or_t[:, None, :, None] * n + or_t[None, :, None, :]).astype(np.intp)
    names = ["RCL1", "RCL2", "RCL3", "RCL4", "RCL5"]
    witnesses: dict[str, tuple | None] = {name: None for name in names}
    for g in range(n):
        q = ~v[:, :, g]
        below_g = le_t[:, g]
        if witnesses["RCL1"] is None:
            grown = _or_over_subsets(_or_over_subsets(q, 0, k), 1, k)
            if (grown & ~q).any():
                witnesses["RCL1"] = (g,) + _rcl_monotone_witness(q, n, le_t)
        if witnesses["RCL2"] is None:
            premise = q.ravel()[flat]
            conclusion = (
                q[:, :, None, None]
                | q[:, None, None, :]
                | q.T[None, :, :, None]
                | q[None, None, :, :]
            )
            viol = premise & ~conclusion
            if viol.any():
                witnesses["RCL2"] = (g,) + _first(viol)
        if witnesses["RCL3"] is None:
            viol = q & (below_g[:, None] | below_g[None, :])
            if viol.any():
                witnesses["RCL3"] = (g,) + _first(viol)
        if witnesses["RCL4"] is None:
            viol = ~below_g & ~q.diagonal()
            hits = np.flatnonzero(viol)
            if len(hits):
                witnesses["RCL4"] = (g, int(hits[0]))
        if witnesses["RCL5"] is None:
            viol = q & ~q.T
            if viol.any():
                witnesses["RCL5"] = (g,) + _first(viol)
        if all(w is not None for w in witnesses.values()):
            break
    return AxiomReport(
        tuple(CheckResult(name, witnesses[name] is None, witnesses[name]) for name in names)
    )


# ---------------------------------------------------------------------------
# internal connectedness, algebraically


def internally_connected_algebraic(covering: CoveringRelation, a: int) -> bool:
    """True iff no pair of nonzero parts b, d with b join d = a has (b, d)
    covered by the complement of a.  Zero is internally connected: the
    quantification over nonzero parts is vacuous for it."""
    algebra = covering.algebra
    algebra._require(a)
    if a == 0:
        return True
    star = algebra.complement(a)
    v = covering.table
    b = a
    while b:  # nonzero submasks of a
        rest = a & ~b
        extra = b
        while True:  # d = rest | (submask of b), giving b | d == a
            d = rest | extra
            if d and v[b, d, star]:
                return False
            if extra == 0:
                break
            extra = (extra - 1) & b
        b = (b - 1) & a
    return True


# ---------------------------------------------------------------------------
# filters and ideals


@dataclass(frozen=True)
class FilterOrIdeal:
    """A filter (up-closed, meet-closed) or ideal (down-closed, join-closed)
    of a finite Boolean algebra.  Improper ones — the whole algebra — are
    allowed; emptiness is not."""

    algebra: FiniteBooleanAlgebra
    members: frozenset[int]
    kind: Literal["filter", "ideal"]

    def __post_init__(self) -> None:
        if self.kind not in ("filter", "ideal"):
            raise ValueError(f"unknown kind {self.kind!r}")
        if not self.members:
            raise ValueError(f"a {self.kind} must be nonempty")
        n = self.algebra.size
        for x in self.members:
            if not 0 <= x < n:
                raise ValueError(f"{x} is not an element mask")
        if self.kind == "filter":
            for x in self.members:
                for y in range(n):
                    if x & ~y == 0 and y not in self.members:
                        raise ValueError(f"not up-closed: {x} in, superset {y} out")
            for x in self.members:
                for y in self.members:
                    if (x & y) not in self.members:
                        raise ValueError(f"not meet-closed: {x} and {y} in, {x & y} out")
        else:
            for x in self.members:
                for y in range(n):
                    if y & ~x == 0 and y not in self.members:
                        raise ValueError(f"not down-closed: {x} in, subset {y} out")
            for x in self.members:
                for y in self.members:
                    if (x | y) not in self.members:
                        raise ValueError(f"not join-closed: {x} and {y} in, {x | y} out")

    @cached_property
    def generator(self) -> int:
        """The principal generator: meet of a filter, join of an ideal."""
        out = self.algebra.one if self.kind == "filter" else 0
        for x in self.members:
            out = out & x if self.kind == "filter" else out | x
        return out

    @property
    def is_proper(self) -> bool:
        boundary = 0 if self.kind == "filter" else self.algebra.one
        return boundary not in self.members

    def __contains__(self, x: int) -> bool:
        return x in self.members


def principal_filter(algebra: FiniteBooleanAlgebra, g: int) -> FilterOrIdeal:
    algebra._require(g)
    members = frozenset(x for x in range(algebra.size) if g & ~x == 0)
    return FilterOrIdeal(algebra, members, "filter")


def all_filters(algebra: FiniteBooleanAlgebra) -> tuple[FilterOrIdeal, ...]:
    """Every filter, ordered by generator.  In a finite Boolean algebra each
    filter contains the meet of its members, so all filters are principal."""
    return tuple(principal_filter(algebra, g) for g in range(algebra.size))


def maximal_filters(
    algebra: FiniteBooleanAlgebra, *, verify: bool = True
) -> tuple[FilterOrIdeal, ...]:
    """The maximal proper filters, one per atom, ordered by atom index.

    With ``verify`` each candidate is checked to be a proper filter that
    cannot be extended: adding any outside element closes under meet to 0.
    """
    found = tuple(principal_filter(algebra, atom) for atom in algebra.atom_masks)
    if verify:
        for candidate in found:
            if not candidate.is_proper:
                raise AssertionError("candidate maximal filter is improper")
            inf = candidate.generator
            for x in range(algebra.size):
                if x not in candidate.members and inf & x != 0:
                    raise AssertionError(
                        f"filter at {inf} extends by {x} without collapsing"
                    )
    return found


def left_set(covering: CoveringRelation, u: FilterOrIdeal, d: int) -> FilterOrIdeal:
    """The set of all b covered together with some member of the filter u:
    {b : exists a in u with (a, b) |- d}.  Over a weak extended contact
    algebra this is an ideal, which the constructor verifies."""
    if u.kind != "filter":
        raise ValueError("left set is defined for filters")
    if u.algebra != covering.algebra:
        raise ValueError("filter and covering live on different algebras")
    covering.algebra._require(d)
    rows = np.fromiter(sorted(u.members), dtype=np.intp)
    hit = covering.table[rows, :, d].any(axis=0)
    return FilterOrIdeal(covering.algebra, frozenset(np.flatnonzero(hit).tolist()), "ideal")


def right_set(covering: CoveringRelation, v: FilterOrIdeal, d: int) -> FilterOrIdeal:
    """Mirror of :func:`left_set`: {a : exists b in v with (a, b) |- d}."""
    if v.kind != "filter":
        raise ValueError("right set is defined for filters")
    if v.algebra != covering.algebra:
        raise ValueError("filter and covering live on different algebras")
    covering.algebra._require(d)
    cols = np.fromiter(sorted(v.members), dtype=np.intp)
    hit = covering.table[:, cols, d].any(axis=1)
    return FilterOrIdeal(covering.algebra, frozenset(np.flatnonzero(hit).tolist()), "ideal")


@dataclass(frozen=True)
class FilterSeparation:
    """Three ways of saying two filters avoid each other over a cover d."""

    no_covered_pair: bool
    left_set_misses_v: bool
    right_set_misses_u: bool

    @property
    def agree(self) -> bool:
        return self.no_covered_pair == self.left_set_misses_v == self.right_set_misses_u


def check_filter_separation_equivalence(
    covering: CoveringRelation, u: FilterOrIdeal, v: FilterOrIdeal, d: int
) -> FilterSeparation:
    """Evaluate, for filters u and v, the three conditions that are
    equivalent over a weak extended contact algebra: no pair from u x v is
    covered by d; the left set of u misses v; the right set of v misses u."""
    for filt in (u, v):
        if filt.kind != "filter":
            raise ValueError("separation is defined for filters")
        if filt.algebra != covering.algebra:
            raise ValueError("filter and covering live on different algebras")
    covering.algebra._require(d)
    table = covering.table
    rows = np.fromiter(sorted(u.members), dtype=np.intp)
    cols = np.fromiter(sorted(v.members), dtype=np.intp)
    no_pair = not table[np.ix_(rows, cols, np.array([d], dtype=np.intp))].any()
    left = frozenset(np.flatnonzero(table[rows, :, d].any(axis=0)).tolist())
    right = frozenset(np.flatnonzero(table[:, cols, d].any(axis=1)).tolist())
    return FilterSeparation(
        no_covered_pair=no_pair,
        left_set_misses_v=not (left & v.members),
        right_set_misses_u=not (u.members & right),
    )


# ---------------------------------------------------------------------------
# JSON documents: {"atoms": k, "covering": [[a, b, d], ...]} listing the true
# triples as atom-mask integers, or {"atoms": k, "covering_mode": "discrete"}.


def covering_from_document(doc: object) -> CoveringRelation:
    if not isinstance(doc, dict):
        raise DocumentError("covering document must be a JSON object")
    atoms = doc.get("atoms")
    if not isinstance(atoms, int) or isinstance(atoms, bool) or atoms < 1:
        raise DocumentError('"atoms" must be a positive integer')
    algebra = FiniteBooleanAlgebra(atoms)
    if doc.get("covering_mode") == "discrete":
        if "covering" in doc:
            raise DocumentError('give either "covering" or "covering_mode", not both')
        return discrete_covering(atoms)
    if "covering_mode" in doc:
        raise DocumentError(f'unknown covering_mode {doc["covering_mode"]!r}')
    triples = doc.get("covering")
    if not isinstance(triples, list):
        raise DocumentError('"covering" must be an array of [a, b, d] triples')
    parsed = []
    for t in triples:
        if (
            not isinstance(t, list)
            or len(t) != 3
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in t)
        ):
            raise DocumentError(f"bad covering triple {t!r}")
        a, b, d = t
        if not all(0 <= x < algebra.size for x in (a, b, d)):
            raise DocumentError(
                f"triple {t!r} out of range for a {atoms}-atom algebra"
            )
        parsed.append((a, b, d))
    return CoveringRelation.from_true_triples(algebra, parsed)


def covering_document(covering: CoveringRelation) -> dict:
    return {
        "atoms": covering.algebra.atom_count,
        "covering": [list(t) for t in covering.true_triples()],
    }


# ---------------------------------------------------------------------------
# the covering of a regular closed algebra, abstractly


@dataclass(frozen=True)
class TopologicalEca:
    """An extended contact algebra built from a regular closed algebra,
    together with the dictionary between element masks and point sets.

    ``element_sets[m]`` is the union of the atoms selected by mask m; the
    map is a Boolean isomorphism onto the regular closed carrier.
    """

    eca: ExtendedContactAlgebra
    source: RegularClosedAlgebra
    element_sets: tuple[PointSet, ...]

    @property
    def covering(self) -> CoveringRelation:
        return self.eca.covering

    def mask_of(self, a: PointSet) -> int:
        return self.source.atom_mask(a)


def eca_from_rc(
    source: RegularClosedAlgebra, *, cap_elements: int = 64, verify: bool = True
) -> TopologicalEca:
    """The extended contact algebra of a regular closed algebra: element
    masks name joins of atoms, and (a, b) |- d holds when the plain
    intersection of the point sets of a and b is inside the point set of d.
    """
    k = len(source.atoms)
    n = 1 << k
    if n > cap_elements:
        raise CapExceeded(
            f"{n} elements exceed cap_elements={cap_elements}; raise the cap to force"
        )
    empty = PointSet.empty(source.topology.universe_size)
    element_sets = []
    for mask in range(n):
        acc = empty
        for i, atom in enumerate(source.atoms):
            if mask >> i & 1:
                acc = acc | atom
        element_sets.append(acc)
    if sorted(ps.bits for ps in element_sets) != [c.bits for c in source.carrier]:
        raise AssertionError("atom joins do not enumerate the carrier")
    bits = np.array([ps.bits for ps in element_sets], dtype=np.int64)
    inter = bits[:, None] & bits[None, :]
    table = (inter[:, :, None] & ~bits[None, None, :]) == 0
    covering = CoveringRelation(FiniteBooleanAlgebra(k), table)
    if verify:
        eca = verified_eca(covering, cap_elements=cap_elements)
    else:
        eca = ExtendedContactAlgebra(covering, "ECA")
    return TopologicalEca(eca, source, tuple(element_sets))
