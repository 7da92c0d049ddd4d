"""Exhaustive enumeration of all topologies on small point sets.

A topology on ``{0..n-1}`` is the same thing as a reflexive-transitive
relation (the specialization preorder), represented here by its closure
matrix: row ``k`` is the bitmask closure of point ``k``.  Enumeration
generates rows in lexicographic matrix order with early pruning, so the
labeled census order is deterministic and reproducible.

On top of the enumeration sit the two suites that justify the package:
the *equivalence suite* cross-checks the direct definition of every
axiom against its diagram formulation on every space, and the
*implication suite* checks the classical implications between axioms.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import IO, Iterator

from .axioms import (
    COMPOSITES,
    DIRECT_ONLY,
    EQUIVALENCES,
    HARD_AXIOMS,
    IMPLICATIONS,
    Axiom,
    check_axiom_direct,
    check_axiom_lifting,
    strength_chain_holds,
)
from .notation import format_space
from .spaces import FiniteSpace, are_homeomorphic, canonical_arrows, invariant_key

# Enumeration cost grows super-exponentially; beyond these sizes a run
# would take hours, so treat the request as an error instead.
LABELED_MAX_N = 6
UP_TO_ISO_MAX_N = 7


def _labeled_rows(n: int) -> Iterator[tuple[int, ...]]:
    """Yield every valid closure matrix on n points, lexicographically.

    Row ``k`` must contain bit ``k``, must sit inside every earlier row
    that contains ``k`` (transitivity downward), and must absorb every
    earlier row whose point it contains (transitivity upward).  These
    local constraints are exactly transitivity, so no post-filter is
    needed.
    """
    if n == 0:
        yield ()
        return
    full = (1 << n) - 1
    rows: list[int] = []

    def rec(k: int) -> Iterator[tuple[int, ...]]:
        if k == n:
            yield tuple(rows)
            return
        upper = full
        for i in range(k):
            if rows[i] >> k & 1:
                upper &= rows[i]
        base = upper & ~(1 << k)
        s = 0
        while True:
            mask = s | (1 << k)
            earlier = s & ((1 << k) - 1)
            ok = True
            while earlier:
                i = (earlier & -earlier).bit_length() - 1
                if rows[i] & ~mask:
                    ok = False
                    break
                earlier &= earlier - 1
            if ok:
                rows.append(mask)
                yield from rec(k + 1)
                rows.pop()
            s = (s - base) & base
            if s == 0:
                break

    yield from rec(0)


def enumerate_topologies(n: int, up_to_iso: bool = False) -> Iterator[FiniteSpace]:
    """Yield all topologies on n points, labeled or one per
    homeomorphism class (represented by its first labeled occurrence)."""
    limit = UP_TO_ISO_MAX_N if up_to_iso else LABELED_MAX_N
    if not 0 <= n <= limit:
        kind = "up to homeomorphism" if up_to_iso else "labeled"
        raise ValueError(f"n={n} out of supported range 0..{limit} ({kind})")
    if not up_to_iso:
        for cl in _labeled_rows(n):
            yield FiniteSpace(n, cl)
        return
    buckets: dict[object, list[FiniteSpace]] = {}
    for cl in _labeled_rows(n):
        space = FiniteSpace(n, cl)
        bucket = buckets.setdefault(invariant_key(space), [])
        if not any(are_homeomorphic(space, seen) for seen in bucket):
            bucket.append(space)
            yield space


def count_topologies(n: int, up_to_iso: bool = False) -> int:
    return sum(1 for _ in enumerate_topologies(n, up_to_iso))


def classify_space(space: FiniteSpace) -> dict[Axiom, bool]:
    """Direct verdict for every axiom; composites from their conjuncts."""
    out: dict[Axiom, bool] = {}
    for axiom in Axiom:
        if axiom in COMPOSITES:
            out[axiom] = all(out[part] for part in COMPOSITES[axiom])
        else:
            out[axiom] = check_axiom_direct(space, axiom)
    return out


def lifting_classification(space: FiniteSpace) -> dict[Axiom, bool]:
    """Diagram-formulation verdict for every axiom that has one."""
    out: dict[Axiom, bool] = {}
    for axiom in Axiom:
        if axiom in DIRECT_ONLY:
            continue
        if axiom in COMPOSITES:
            out[axiom] = all(out[part] for part in COMPOSITES[axiom])
        else:
            out[axiom] = check_axiom_lifting(space, axiom).holds
    return out


@dataclass(frozen=True)
class Mismatch:
    n: int
    index: int
    axiom: Axiom
    direct: bool
    lifting: bool
    space: str  # notation display

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "index": self.index,
            "axiom": self.axiom.value,
            "direct": self.direct,
            "lifting": self.lifting,
            "space": self.space,
        }


@dataclass
class AxiomAgreement:
    checked: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def agreement(self) -> float:
        if not self.checked:
            return 1.0
        return 1.0 - len(self.mismatches) / self.checked


@dataclass
class EquivalenceReport:
    n: int
    up_to_iso: bool
    spaces_checked: int
    per_axiom: dict[Axiom, AxiomAgreement]

    @property
    def hard_mismatches(self) -> list[Mismatch]:
        return [
            m
            for axiom, agg in self.per_axiom.items()
            if axiom in HARD_AXIOMS
            for m in agg.mismatches
        ]

    @property
    def hard_ok(self) -> bool:
        return not self.hard_mismatches

    @property
    def all_mismatches(self) -> list[Mismatch]:
        return [m for agg in self.per_axiom.values() for m in agg.mismatches]

    def merge(self, other: "EquivalenceReport") -> "EquivalenceReport":
        per_axiom = {}
        for axiom, agg in self.per_axiom.items():
            o = other.per_axiom[axiom]
            per_axiom[axiom] = AxiomAgreement(
                agg.checked + o.checked, agg.mismatches + o.mismatches
            )
        return EquivalenceReport(
            max(self.n, other.n),
            self.up_to_iso,
            self.spaces_checked + other.spaces_checked,
            per_axiom,
        )


def _classified(n: int, up_to_iso: bool):
    for index, space in enumerate(enumerate_topologies(n, up_to_iso)):
        yield index, space, classify_space(space), lifting_classification(space)


def _new_per_axiom() -> dict[Axiom, AxiomAgreement]:
    return {a: AxiomAgreement() for a in Axiom if a not in DIRECT_ONLY}


def run_equivalence_suite(n: int, up_to_iso: bool = False) -> EquivalenceReport:
    """Cross-check direct vs diagram verdicts on every space of size n."""
    per_axiom = _new_per_axiom()
    count = 0
    for index, space, direct, lifting in _classified(n, up_to_iso):
        count += 1
        for axiom, agg in per_axiom.items():
            agg.checked += 1
            if direct[axiom] != lifting[axiom]:
                agg.mismatches.append(
                    Mismatch(
                        n, index, axiom, direct[axiom], lifting[axiom], format_space(space)
                    )
                )
    return EquivalenceReport(n, up_to_iso, count, per_axiom)


@dataclass
class ImplicationReport:
    n: int
    spaces_checked: int
    violations: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations


def run_implication_suite(n: int, up_to_iso: bool = False) -> ImplicationReport:
    """Check the classical implications and equivalences between axioms
    (direct verdicts) on every space of size n; also that T1 forces the
    discrete topology."""
    violations: list[str] = []
    count = 0
    for index, space in enumerate(enumerate_topologies(n, up_to_iso)):
        count += 1
        table = classify_space(space)
        where = f"{format_space(space)} (n={n}, index={index})"
        for stronger, weaker in IMPLICATIONS:
            if table[stronger] and not table[weaker]:
                violations.append(f"{stronger.value} => {weaker.value} fails on {where}")
        for axiom, parts in EQUIVALENCES:
            conj = all(table[p] for p in parts)
            if table[axiom] != conj:
                rhs = " & ".join(p.value for p in parts)
                violations.append(f"{axiom.value} <=> {rhs} fails on {where}")
        if table[Axiom.T1] and any(space.cl[x] != 1 << x for x in range(space.n)):
            violations.append(f"T1 space is not discrete: {where}")
    return ImplicationReport(n, count, violations)


def run_strength_chain_suite(n: int, up_to_iso: bool = False) -> ImplicationReport:
    """Check the monotone strength chain of separation predicates on
    every subset pair of every space of size n."""
    violations: list[str] = []
    count = 0
    for index, space in enumerate(enumerate_topologies(n, up_to_iso)):
        count += 1
        size = 1 << space.n
        for a in range(size):
            for b in range(size):
                if not strength_chain_holds(space, a, b):
                    violations.append(
                        f"strength chain fails on {format_space(space)} "
                        f"(n={n}, index={index}, a={a:#x}, b={b:#x})"
                    )
    return ImplicationReport(n, count, violations)


def count_by_axiom(n: int) -> dict[Axiom, int]:
    counts = {a: 0 for a in Axiom}
    for cl in _labeled_rows(n):
        table = classify_space(FiniteSpace(n, cl))
        for axiom, verdict in table.items():
            if verdict:
                counts[axiom] += 1
    return counts


def _dump(obj: dict) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def census_record(
    n: int, index: int, space: FiniteSpace, direct: dict[Axiom, bool], lifting: dict[Axiom, bool]
) -> dict:
    return {
        "n": n,
        "index": index,
        "arrows": [list(arrow) for arrow in canonical_arrows(space)],
        "axioms": {a.value: direct[a] for a in Axiom},
        "lifting_agrees": {
            a.value: direct[a] == lifting[a] for a in Axiom if a not in DIRECT_ONLY
        },
    }


def write_census(out: IO[str], n: int, up_to_iso: bool = False) -> EquivalenceReport:
    """Write one record line per space of size n plus a summary line;
    byte-identical across runs.  Returns the equivalence report."""
    per_axiom = _new_per_axiom()
    by_axiom = {a: 0 for a in Axiom}
    count = 0
    for index, space, direct, lifting in _classified(n, up_to_iso):
        count += 1
        for axiom, verdict in direct.items():
            if verdict:
                by_axiom[axiom] += 1
        for axiom, agg in per_axiom.items():
            agg.checked += 1
            if direct[axiom] != lifting[axiom]:
                agg.mismatches.append(
                    Mismatch(
                        n, index, axiom, direct[axiom], lifting[axiom], format_space(space)
                    )
                )
        out.write(_dump(census_record(n, index, space, direct, lifting)) + "\n")
    report = EquivalenceReport(n, up_to_iso, count, per_axiom)
    summary = {
        "counts": {
            "spaces": count,
            "by_axiom": {a.value: by_axiom[a] for a in Axiom},
        },
        "violations": [m.as_dict() for m in report.all_mismatches],
    }
    out.write(_dump(summary) + "\n")
    return report
