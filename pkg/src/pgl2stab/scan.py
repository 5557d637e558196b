"""Exhaustive comparison of the closed-form classification with brute force.

For every lambda outside {0, 1} in each scanned finite field, the type given
by :func:`~pgl2stab.classify.classify_lambda` is compared against the group
built by :func:`~pgl2stab.stabgroup.stabilizer_of_four` on {inf, 0, 1, lambda}.
"""

from __future__ import annotations

import csv
import io
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List

from .classify import classify_lambda
from .fields import field_make, is_prime
from .stabgroup import stabilizer_of_four, standard_frame

CSV_COLUMNS = ("field", "q", "lambda", "group_type", "order", "theorem_case")


@dataclass
class FieldRow:
    field_spec: str
    q: int
    counts: Dict[str, int]
    mismatches: List[dict]
    lambdas: List[dict] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "field_spec": self.field_spec,
            "q": self.q,
            "counts": dict(self.counts),
            "mismatches": list(self.mismatches),
        }


@dataclass
class ScanReport:
    rows: List[FieldRow]

    @property
    def mismatch_count(self) -> int:
        return sum(len(r.mismatches) for r in self.rows)

    @property
    def ok(self) -> bool:
        return self.mismatch_count == 0

    def row(self, field_spec: str) -> FieldRow:
        for r in self.rows:
            if r.field_spec == field_spec:
                return r
        raise KeyError(field_spec)

    def to_json(self) -> dict:
        return {
            "fields": [r.to_json() for r in self.rows],
            "total_mismatches": self.mismatch_count,
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in self.rows:
            for rec in r.lambdas:
                w.writerow([rec[c] for c in CSV_COLUMNS])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = [f"{'field':<8} {'q':>5}  {'V4':>4} {'D4':>4} {'A4':>4} {'S4':>4}  mismatches"]
        for r in self.rows:
            c = r.counts
            lines.append(
                f"{r.field_spec:<8} {r.q:>5}  {c.get('V4', 0):>4} {c.get('D4', 0):>4} "
                f"{c.get('A4', 0):>4} {c.get('S4', 0):>4}  {len(r.mismatches)}")
        lines.append(f"total mismatches: {self.mismatch_count}")
        return "\n".join(lines) + "\n"


def scan_fields(max_p: int, include_quadratic: bool = False) -> List[str]:
    """Field specifiers covered by a scan, ordered by size.

    F4 is always present since it is the only characteristic-2 witness.
    """
    if max_p < 3:
        raise ValueError("max-p must be at least 3")
    specs = {f"F{p}": p for p in range(3, max_p + 1) if is_prime(p)}
    specs["F2^2"] = 4
    if include_quadratic:
        for p in range(5, max_p + 1):
            if is_prime(p) and p % 3 == 2:
                specs[f"F{p}^2"] = p * p
    return sorted(specs, key=lambda s: (specs[s], s))


def scan_field(spec: str) -> FieldRow:
    K = field_make(spec)
    counts: Counter = Counter()
    mismatches = []
    records = []
    for lam in K.elements():
        if lam.is_zero() or lam == K.one:
            continue
        expected = classify_lambda(K, lam)
        brute = stabilizer_of_four(standard_frame(lam))
        counts[brute.group_type.value] += 1
        if brute.group_type != expected.group_type or brute.order != expected.order:
            mismatches.append({
                "lambda": str(lam),
                "expected": expected.group_type.value,
                "brute_force": brute.group_type.value,
                "brute_force_order": brute.order,
            })
        records.append({
            "field": spec,
            "q": K.order,
            "lambda": str(lam),
            "group_type": brute.group_type.value,
            "order": brute.order,
            "theorem_case": expected.theorem_case,
        })
    return FieldRow(spec, K.order, dict(sorted(counts.items())), mismatches, records)


def run_scan(max_p: int, include_quadratic: bool = False, workers: int = 1) -> ScanReport:
    specs = scan_fields(max_p, include_quadratic)
    if workers > 1:
        # largest fields first so the pool stays busy
        order = sorted(specs, key=lambda s: -field_make(s).order)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            done = dict(zip(order, pool.map(scan_field, order)))
        rows = [done[s] for s in specs]
    else:
        rows = [scan_field(s) for s in specs]
    return ScanReport(rows)
