"""Executable reproductions of the structural results about the axiom system.

Three experiments, all driven by the falsification engine:

* the independence table: each counterexample index cx1..cx6 violates
  exactly one of {URS, MSC, CON, IIP, HTA, SI} and passes the other five;
* the implication rules: certain axiom subsets force another axiom, so no
  index may pass all premises yet fail the conclusion;
* ranking concordance and the characterization check: any index passing
  {SMSC, IIP, HTA, SI} must rank triads exactly like the natural index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping

from .axioms import AuditConfig, AuditReport, Witness, audit, probe_rng, sample_triad
from .core import Triad
from .indices import CATALOG, IndexDescriptor, get_index

__all__ = [
    "INDEPENDENCE_AXIOMS",
    "INDEPENDENCE_ROWS",
    "IMPLICATION_RULES",
    "ImplicationRule",
    "ImplicationVerdict",
    "IndependenceCell",
    "IndependenceRow",
    "IndependenceTable",
    "ConcordanceStats",
    "CharacterizationVerdict",
    "independence_table",
    "implication_audit",
    "audit_implications",
    "ranking_concordance",
    "characterization_check",
]

# Columns and rows of the independence experiment: cx_i is expected to fail
# exactly the i-th axiom of this list.
INDEPENDENCE_AXIOMS = ("URS", "MSC", "CON", "IIP", "HTA", "SI")
INDEPENDENCE_ROWS = ("cx1", "cx2", "cx3", "cx4", "cx5", "cx6")


@dataclass(frozen=True)
class IndependenceCell:
    axiom: str
    status: str
    expected: str
    witness: Witness | None

    @property
    def match(self) -> bool:
        return self.status == self.expected


@dataclass(frozen=True)
class IndependenceRow:
    index_id: str
    cells: tuple[IndependenceCell, ...]

    @property
    def matches_expected(self) -> bool:
        return all(c.match for c in self.cells)


@dataclass(frozen=True)
class IndependenceTable:
    rows: tuple[IndependenceRow, ...]
    config: AuditConfig

    @property
    def matches_expected(self) -> bool:
        return all(r.matches_expected for r in self.rows)

    def to_dict(self) -> dict:
        return {
            "axioms": list(INDEPENDENCE_AXIOMS),
            "rows": [
                {
                    "index": row.index_id,
                    "cells": [
                        {"axiom": c.axiom, "status": c.status, "expected": c.expected, "match": c.match}
                        for c in row.cells
                    ],
                    "matches_expected": row.matches_expected,
                }
                for row in self.rows
            ],
            "matches_expected": self.matches_expected,
        }


def independence_table(cfg: AuditConfig | None = None) -> IndependenceTable:
    """Audit cx1..cx6 against the six independence axioms.

    The expected pattern is diagonal: cx_i fails axiom i and passes the
    other five.
    """
    cfg = cfg if cfg is not None else AuditConfig()
    rows = []
    for row_id, designated in zip(INDEPENDENCE_ROWS, INDEPENDENCE_AXIOMS):
        report = audit(get_index(row_id), INDEPENDENCE_AXIOMS, cfg)
        cells = tuple(
            IndependenceCell(
                axiom=axiom,
                status=report.verdict(axiom).status,
                expected="fail" if axiom == designated else "pass",
                witness=report.verdict(axiom).witness,
            )
            for axiom in INDEPENDENCE_AXIOMS
        )
        rows.append(IndependenceRow(index_id=row_id, cells=cells))
    return IndependenceTable(rows=tuple(rows), config=cfg)


@dataclass(frozen=True)
class ImplicationRule:
    premises: tuple[str, ...]
    conclusion: str

    @property
    def name(self) -> str:
        return f"{'+'.join(self.premises)}=>{self.conclusion}"


# Axiom subsets that provably force another axiom on triads.  The engine can
# therefore never observe "all premises pass, conclusion fails" for a sound
# checker; such a verdict flags an engine defect or tolerance artifact.
IMPLICATION_RULES: tuple[ImplicationRule, ...] = (
    ImplicationRule(premises=("IIP", "HTA", "SI"), conclusion="IPA"),
    ImplicationRule(premises=("URS", "MSC", "IIP", "HTA", "SI"), conclusion="MRP"),
    ImplicationRule(premises=("SMSC", "CON", "HTA", "SI"), conclusion="URS"),
)


@dataclass(frozen=True)
class ImplicationVerdict:
    rule: ImplicationRule
    index_id: str
    premise_status: Mapping[str, str]
    conclusion_status: str
    status: str  # "consistent-with-lemma" | "counterexample-to-lemma"
    vacuous: bool
    witness: Witness | None

    def to_dict(self) -> dict:
        return {
            "rule": self.rule.name,
            "index": self.index_id,
            "premises": dict(self.premise_status),
            "conclusion": {self.rule.conclusion: self.conclusion_status},
            "status": self.status,
            "vacuous": self.vacuous,
        }


def _implication_verdict(rule: ImplicationRule, report: AuditReport) -> ImplicationVerdict:
    premise_status = {a: report.verdict(a).status for a in rule.premises}
    conclusion = report.verdict(rule.conclusion)
    premises_hold = all(s == "pass" for s in premise_status.values())
    broken = premises_hold and conclusion.status == "fail"
    return ImplicationVerdict(
        rule=rule,
        index_id=report.index_id,
        premise_status=premise_status,
        conclusion_status=conclusion.status,
        status="counterexample-to-lemma" if broken else "consistent-with-lemma",
        vacuous=not premises_hold,
        witness=conclusion.witness if broken else None,
    )


def implication_audit(
    premises, conclusion: str, index: IndexDescriptor, cfg: AuditConfig | None = None
) -> ImplicationVerdict:
    """Check one implication rule on one index."""
    premises = tuple(premises)
    if not premises:
        raise ValueError("premises must be non-empty")
    if conclusion in premises:
        raise ValueError("conclusion must not be one of the premises")
    rule = ImplicationRule(premises=premises, conclusion=conclusion)
    report = audit(index, premises + (conclusion,), cfg)
    return _implication_verdict(rule, report)


def audit_implications(cfg: AuditConfig | None = None, indices=None) -> tuple[ImplicationVerdict, ...]:
    """Evaluate every implication rule over the catalog (one audit per index)."""
    indices = tuple(indices) if indices is not None else CATALOG
    needed = sorted({a for rule in IMPLICATION_RULES for a in rule.premises + (rule.conclusion,)})
    verdicts = []
    for descriptor in indices:
        report = audit(descriptor, needed, cfg)
        for rule in IMPLICATION_RULES:
            verdicts.append(_implication_verdict(rule, report))
    return tuple(verdicts)


@dataclass(frozen=True)
class ConcordanceStats:
    """Pairwise ranking agreement between two indices over sampled triad pairs."""

    index_a: str
    index_b: str
    pairs: int
    concordant: int
    discordant: int
    ties_a_only: int
    ties_b_only: int
    ties_both: int
    kendall_tau_b: float
    discordant_witness: Witness | None = None

    def to_dict(self) -> dict:
        return {
            "index_a": self.index_a,
            "index_b": self.index_b,
            "pairs": self.pairs,
            "concordant": self.concordant,
            "discordant": self.discordant,
            "ties_a_only": self.ties_a_only,
            "ties_b_only": self.ties_b_only,
            "ties_both": self.ties_both,
            "kendall_tau_b": self.kendall_tau_b,
        }


def _tau_b(concordant: int, discordant: int, ties_a: int, ties_b: int, pairs: int) -> float:
    # ties_a / ties_b count every pair tied in that index (one-sided + both).
    denom = math.sqrt((pairs - ties_a) * (pairs - ties_b))
    if denom == 0.0:
        return 0.0
    return (concordant - discordant) / denom


def ranking_concordance(
    a: IndexDescriptor, b: IndexDescriptor, cfg: AuditConfig | None = None
) -> ConcordanceStats:
    """Classify cfg.samples sampled triad pairs by the sign pattern of both indices.

    The pair stream depends only on (master_seed, probe index), so swapping
    the two indices evaluates the exact same pairs with the tie columns
    swapped.
    """
    cfg = cfg if cfg is not None else AuditConfig()
    concordant = discordant = ties_a_only = ties_b_only = ties_both = 0
    witness = None
    for i in range(cfg.samples):
        rng = probe_rng(cfg.master_seed, "pair", i)
        s = sample_triad(rng, cfg.entry_range)
        t = sample_triad(rng, cfg.entry_range)
        a_s, a_t = a.evaluate(s), a.evaluate(t)
        b_s, b_t = b.evaluate(s), b.evaluate(t)
        tie_a = math.isclose(a_s, a_t, rel_tol=cfg.tolerance, abs_tol=cfg.tolerance)
        tie_b = math.isclose(b_s, b_t, rel_tol=cfg.tolerance, abs_tol=cfg.tolerance)
        if tie_a and tie_b:
            ties_both += 1
        elif tie_a:
            ties_a_only += 1
        elif tie_b:
            ties_b_only += 1
        elif (a_s - a_t) * (b_s - b_t) > 0.0:
            concordant += 1
        else:
            discordant += 1
            if witness is None:
                witness = Witness(
                    axiom="concordance",
                    relation="the two indices order this pair in opposite strict directions",
                    triads={"s": s, "t": t},
                    params={"index_a": a.id, "index_b": b.id},
                    observed={"a_s": a_s, "a_t": a_t, "b_s": b_s, "b_t": b_t},
                )
    tau = _tau_b(concordant, discordant, ties_a_only + ties_both, ties_b_only + ties_both, cfg.samples)
    return ConcordanceStats(
        index_a=a.id,
        index_b=b.id,
        pairs=cfg.samples,
        concordant=concordant,
        discordant=discordant,
        ties_a_only=ties_a_only,
        ties_b_only=ties_b_only,
        ties_both=ties_both,
        kendall_tau_b=tau,
        discordant_witness=witness,
    )


# The four axioms that pin down the natural ranking.
CHARACTERIZATION_AXIOMS = ("SMSC", "IIP", "HTA", "SI")


@dataclass(frozen=True)
class CharacterizationVerdict:
    """Outcome of testing whether an index induces the natural ranking."""

    index_id: str
    audit_report: AuditReport
    premises_met: bool
    concordance: ConcordanceStats | None
    status: str  # "order-equivalent" | "premises-not-met" | "not-order-equivalent"

    def to_dict(self) -> dict:
        payload = {
            "index": self.index_id,
            "axioms": self.audit_report.to_dict()["verdicts"],
            "premises_met": self.premises_met,
            "status": self.status,
        }
        if self.concordance is not None:
            payload["concordance"] = self.concordance.to_dict()
        return payload


def characterization_check(index: IndexDescriptor, cfg: AuditConfig | None = None) -> CharacterizationVerdict:
    """Audit {SMSC, IIP, HTA, SI}; when all pass, demand full order-equivalence
    with the natural index (no discordance and no one-sided ties)."""
    cfg = cfg if cfg is not None else AuditConfig()
    report = audit(index, CHARACTERIZATION_AXIOMS, cfg)
    if not report.all_pass:
        return CharacterizationVerdict(index.id, report, False, None, "premises-not-met")
    stats = ranking_concordance(index, get_index("natural"), cfg)
    equivalent = stats.discordant == 0 and stats.ties_a_only == 0 and stats.ties_b_only == 0
    return CharacterizationVerdict(
        index.id, report, True, stats, "order-equivalent" if equivalent else "not-order-equivalent"
    )
